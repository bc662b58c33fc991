#include "hornmodal/classify.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "hornmodal/errors.hpp"
#include "hornmodal/hom.hpp"

namespace hornmodal {

std::string to_string(StepCase c) {
    switch (c) {
    case StepCase::Np1: return "np1";
    case StepCase::Np2: return "np2";
    case StepCase::Np3: return "np3";
    case StepCase::Np4: return "np4";
    case StepCase::Reflexive: return "refl";
    case StepCase::Transitive: return "trans";
    case StepCase::Symmetric: return "symm";
    case StepCase::SymmTransShortcut: return "symm+trans-shortcut";
    case StepCase::AllSatisfied: return "all-satisfied";
    }
    return "?";
}

bool implied_transitivity(const std::set<int>& s, int k, int cap) {
    if (s.empty() || k > cap) return false;
    std::vector<char> in(static_cast<std::size_t>(cap) + 1, 0);
    for (int v : s)
        if (v <= cap) in[static_cast<std::size_t>(v)] = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 2; a <= cap; ++a) {
            if (!in[static_cast<std::size_t>(a)]) continue;
            for (int b = 2; b <= cap; ++b) {
                if (!in[static_cast<std::size_t>(b)]) continue;
                for (long long v = b + (a - 1); v <= cap; v += (a - 1)) {
                    if (!in[static_cast<std::size_t>(v)]) {
                        in[static_cast<std::size_t>(v)] = 1;
                        changed = true;
                    }
                }
            }
        }
    }
    return in[static_cast<std::size_t>(k)];
}

namespace {

int derived_kmax(const TypesList& t) {
    int k = 2;
    for (int v : t.trans) k = std::max(k, v);
    return k;
}

int derived_tree_nodes(const HornClause& c, const TypesList& t) {
    int vars = std::max<int>(1, static_cast<int>(c.variables.size()));
    return vars * (derived_kmax(t) + 1) + 1;
}

int derived_line_len(const HornClause& c, const TypesList& t) {
    int vars = std::max<int>(1, static_cast<int>(c.variables.size()));
    return vars * (derived_kmax(t) + 1) + 2;
}

int effective_tree_nodes(const HornClause& c, const TypesList& t, const Bounds& b) {
    return b.tree_nodes > 0 ? b.tree_nodes : derived_tree_nodes(c, t);
}

int effective_line_len(const HornClause& c, const TypesList& t, const Bounds& b) {
    return b.line_len > 0 ? b.line_len : derived_line_len(c, t);
}

// Walks of length >= 1, by doubling to a fixpoint.
Graph reach_ge1(const Graph& g) {
    Graph r = g;
    for (;;) {
        Graph next = r;
        // next |= r o r
        int n = r.size();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (r.edge(u, v)) {
                    const std::uint64_t* row = r.row(v);
                    std::uint64_t* orow = next.row(u);
                    for (int w = 0; w < r.words(); ++w) orow[w] |= row[w];
                }
        if (next == r) return r;
        r = next;
    }
}

std::vector<EdgeConstraint> preq_constraints(const HornClause& c) {
    std::vector<EdgeConstraint> cs;
    for (auto [a, b] : c.preq_index_edges()) cs.push_back({a, b, true});
    return cs;
}

HomWitness make_witness(const HornClause& c, const Graph& g, const std::vector<int>& depth,
                        const std::vector<int>& assignment) {
    HomWitness w;
    w.graph = g;
    w.depth = depth;
    for (std::size_t i = 0; i < c.variables.size(); ++i)
        w.assignment[c.variables[i]] = assignment[i];
    return w;
}

std::vector<int> line_depths(int len) {
    std::vector<int> d(static_cast<std::size_t>(len) + 1);
    for (int i = 0; i <= len; ++i) d[static_cast<std::size_t>(i)] = i;
    return d;
}

int max_leaves_for(const HornClause& c) {
    return std::max<int>(1, static_cast<int>(c.variables.size()));
}

} // namespace

std::optional<HomWitness> violated_on_some_tree(const HornClause& c, const TypesList& t,
                                                const Bounds& b) {
    int nodes = effective_tree_nodes(c, t, b);
    int leaves = max_leaves_for(c);
    auto cs = violation_constraints(c);
    int nv = static_cast<int>(c.variables.size());

    std::optional<HomWitness> out;
    for_each_types_tree(t, nodes, leaves, [&](const TypesTree& tt) {
        auto hit = find_assignment(tt.closed, nv, cs);
        if (hit) {
            out = make_witness(c, tt.closed, tt.depth, *hit);
            return false;
        }
        return true;
    });
    return out;
}

std::optional<NpCaseResult> np_case(const HornClause& c, const TypesList& t, const Bounds& b) {
    int nodes = effective_tree_nodes(c, t, b);
    int lines = effective_line_len(c, t, b);
    int leaves = max_leaves_for(c);
    int nv = static_cast<int>(c.variables.size());
    auto preq_cs = preq_constraints(c);

    bool edge_conc = !c.conclusion.is_false;
    bool distinct = edge_conc && c.conclusion.x != c.conclusion.y;
    bool both_in_preq =
        edge_conc && c.in_preq(c.conclusion.x) && c.in_preq(c.conclusion.y);
    int ax = edge_conc ? c.var_index(c.conclusion.x) : -1;
    int ay = edge_conc ? c.var_index(c.conclusion.y) : -1;

    // Condition 1: distinct conclusion variables inside the prerequisite
    // graph whose images are joined by no directed path in some tree.
    if (distinct && both_in_preq) {
        std::optional<HomWitness> w;
        for_each_types_tree(t, nodes, leaves, [&](const TypesTree& tt) {
            Graph reach = reach_ge1(tt.closed);
            for_each_assignment(tt.closed, nv, preq_cs, [&](const std::vector<int>& a) {
                if (!reach.edge(a[ax], a[ay]) && !reach.edge(a[ay], a[ax])) {
                    w = make_witness(c, tt.closed, tt.depth, a);
                    return false;
                }
                return true;
            });
            return !w.has_value();
        });
        if (w) return NpCaseResult{1, {std::move(*w)}};
    }

    // Condition 2: the prerequisite graph embeds into some tree, and the
    // conclusion is FALSE or its variables are distinct and not joined by an
    // undirected path in the prerequisite graph.
    bool conc_detached = !edge_conc || (distinct && !c.conclusion_connected_in_preq());
    if (conc_detached) {
        std::optional<HomWitness> w;
        for_each_types_tree(t, nodes, leaves, [&](const TypesTree& tt) {
            auto hit = find_assignment(tt.closed, nv, preq_cs);
            if (hit) {
                w = make_witness(c, tt.closed, tt.depth, *hit);
                return false;
            }
            return true;
        });
        if (w) return NpCaseResult{2, {std::move(*w)}};
    }

    // Conditions 3 and 4 look at homomorphic images on lines.
    if (both_in_preq && distinct) {
        // Condition 3: the conclusion jumps at least two positions backward.
        for (int len = 1; len <= lines; ++len) {
            Graph line = typeslist_line(len, t);
            std::optional<HomWitness> w;
            for_each_assignment(line, nv, preq_cs, [&](const std::vector<int>& a) {
                if (a[ax] - a[ay] >= 2) {
                    w = make_witness(c, line, line_depths(len), a);
                    return false;
                }
                return true;
            });
            if (w) return NpCaseResult{3, {std::move(*w)}};
        }

        // Condition 4: one image puts the conclusion one step backward,
        // another puts it at least two steps forward.
        std::optional<HomWitness> w1, w2;
        for (int len = 1; len <= lines && (!w1 || !w2); ++len) {
            Graph line = typeslist_line(len, t);
            auto depths = line_depths(len);
            if (!w1) {
                for_each_assignment(line, nv, preq_cs, [&](const std::vector<int>& a) {
                    if (a[ax] - a[ay] == 1) {
                        w1 = make_witness(c, line, depths, a);
                        return false;
                    }
                    return true;
                });
            }
            if (!w2) {
                for_each_assignment(line, nv, preq_cs, [&](const std::vector<int>& a) {
                    if (a[ay] - a[ax] >= 2) {
                        w2 = make_witness(c, line, depths, a);
                        return false;
                    }
                    return true;
                });
            }
        }
        if (w1 && w2) return NpCaseResult{4, {std::move(*w1), std::move(*w2)}};
    }

    return std::nullopt;
}

CaseKindResult case_kind(const HornClause& c, const TypesList& t, const Bounds& b) {
    if (c.conclusion.is_false)
        throw WellDefinednessError("case_kind: FALSE conclusion reached the case analysis");

    if (c.conclusion.x == c.conclusion.y)
        return CaseKindResult{StepCase::Reflexive, 0, std::nullopt};

    if (!c.in_preq(c.conclusion.x) || !c.in_preq(c.conclusion.y))
        throw WellDefinednessError(
            "case_kind: conclusion variables outside the prerequisite graph");

    int nodes = effective_tree_nodes(c, t, b);
    int leaves = max_leaves_for(c);
    int nv = static_cast<int>(c.variables.size());
    auto preq_cs = preq_constraints(c);
    int ax = c.var_index(c.conclusion.x);
    int ay = c.var_index(c.conclusion.y);

    bool any_violating = false;
    bool all_identified = true;
    bool all_path = true;
    bool all_sym = true;
    int min_gap = INT_MAX;
    std::optional<HomWitness> first_violating, gap_witness;

    for_each_types_tree(t, nodes, leaves, [&](const TypesTree& tt) {
        Graph reach = reach_ge1(tt.closed);
        for_each_assignment(tt.closed, nv, preq_cs, [&](const std::vector<int>& a) {
            if (tt.closed.edge(a[ax], a[ay])) return true; // satisfied instance
            any_violating = true;
            if (!first_violating) first_violating = make_witness(c, tt.closed, tt.depth, a);
            if (a[ax] != a[ay]) all_identified = false;
            if (!reach.edge(a[ax], a[ay])) all_path = false;
            if (!tt.closed.edge(a[ay], a[ax])) all_sym = false;
            int gap = tt.depth[a[ay]] - tt.depth[a[ax]];
            if (gap >= 2 && gap < min_gap) {
                min_gap = gap;
                gap_witness = make_witness(c, tt.closed, tt.depth, a);
            }
            return true;
        });
        return true;
    });

    if (!any_violating)
        throw WellDefinednessError("case_kind: clause is not violated within bounds");
    if (all_identified)
        return CaseKindResult{StepCase::Reflexive, 0, first_violating};
    if (all_path && min_gap != INT_MAX)
        return CaseKindResult{StepCase::Transitive, min_gap, gap_witness};
    if (all_sym)
        return CaseKindResult{StepCase::Symmetric, 0, first_violating};
    throw WellDefinednessError("case_kind: no case matched clause " + to_string(c) +
                               " under " + to_string(t));
}

ClassificationOutcome classify(const HornFormula& psi, const Bounds& b) {
    ClassificationOutcome out;
    out.types = TypesList{};

    auto check_user_bounds = [&](const HornClause& c) {
        if (b.tree_nodes > 0 && b.tree_nodes < derived_tree_nodes(c, out.types))
            throw BoundsExhaustedError(
                "tree bound " + std::to_string(b.tree_nodes) + " is below the sound bound " +
                std::to_string(derived_tree_nodes(c, out.types)) + " for clause " + to_string(c));
        if (b.line_len > 0 && b.line_len < derived_line_len(c, out.types))
            throw BoundsExhaustedError(
                "line bound " + std::to_string(b.line_len) + " is below the sound bound " +
                std::to_string(derived_line_len(c, out.types)) + " for clause " + to_string(c));
    };

    int safety = static_cast<int>(psi.clauses.size()) + b.trans_cap + 8;
    for (;;) {
        int idx = -1;
        for (std::size_t i = 0; i < psi.clauses.size(); ++i) {
            check_user_bounds(psi.clauses[i]);
            if (violated_on_some_tree(psi.clauses[i], out.types, b)) {
                idx = static_cast<int>(i);
                break;
            }
        }
        if (idx < 0) {
            out.trace.push_back(TraceStep{-1, StepCase::AllSatisfied, 0, {}});
            out.verdict = Verdict::PSpaceHard;
            return out;
        }

        const HornClause& c = psi.clauses[static_cast<std::size_t>(idx)];
        if (auto np = np_case(c, out.types, b)) {
            StepCase sc = np->condition == 1   ? StepCase::Np1
                          : np->condition == 2 ? StepCase::Np2
                          : np->condition == 3 ? StepCase::Np3
                                               : StepCase::Np4;
            out.trace.push_back(TraceStep{idx, sc, 0, std::move(np->witnesses)});
            out.verdict = Verdict::NpComplete;
            return out;
        }

        CaseKindResult ck = case_kind(c, out.types, b);
        TraceStep step{idx, ck.kind, ck.k, {}};
        if (ck.witness) step.witnesses.push_back(*ck.witness);
        switch (ck.kind) {
        case StepCase::Reflexive:
            out.types.refl = true;
            break;
        case StepCase::Symmetric:
            out.types.symm = true;
            break;
        case StepCase::Transitive:
            if (ck.k > b.trans_cap)
                throw BoundsExhaustedError("transitivity degree " + std::to_string(ck.k) +
                                           " exceeds the cap " + std::to_string(b.trans_cap));
            if (implied_transitivity(out.types.trans, ck.k, std::max(b.trans_cap, ck.k)))
                throw WellDefinednessError("classify: already-implied transitivity re-added");
            out.types.add_trans(ck.k);
            break;
        default:
            throw WellDefinednessError("classify: unexpected case kind");
        }
        out.trace.push_back(std::move(step));

        if (out.types.symm && !out.types.trans.empty()) {
            out.trace.push_back(TraceStep{idx, StepCase::SymmTransShortcut, 0, {}});
            out.verdict = Verdict::NpComplete;
            return out;
        }

        if (--safety <= 0)
            throw WellDefinednessError("classify: loop failed to terminate");
    }
}

} // namespace hornmodal
