#include "hornmodal/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include "hornmodal/classify.hpp"
#include "hornmodal/errors.hpp"
#include "hornmodal/graph.hpp"
#include "hornmodal/hom.hpp"
#include "hornmodal/model.hpp"

namespace hornmodal {

// ── SubformulaTable ─────────────────────────────────────────────────────────

SubformulaTable::SubformulaTable(const FormulaPtr& phi) {
    subs = subformulas(phi);
    lhs.assign(subs.size(), -1);
    rhs.assign(subs.size(), -1);
    md.resize(subs.size());
    for (std::size_t i = 0; i < subs.size(); ++i) {
        md[i] = subs[i]->modal_depth();
        if (subs[i]->lhs()) lhs[i] = index_of(subs[i]->lhs());
        if (subs[i]->rhs()) rhs[i] = index_of(subs[i]->rhs());
        if (subs[i]->op() == Op::Diamond) diamonds.push_back(static_cast<int>(i));
    }
}

int SubformulaTable::index_of(const FormulaPtr& f) const {
    for (std::size_t i = 0; i < subs.size(); ++i)
        if (equal(subs[i], f)) return static_cast<int>(i);
    return -1;
}

// ── verify_cons ─────────────────────────────────────────────────────────────

bool verify_cons(const Annotation& a) {
    const SubformulaTable& t = *a.table;
    auto val = [&](int i) { return a.truth[static_cast<std::size_t>(i)]; };
    for (int i = 0; i < t.size(); ++i) {
        if (!a.in_budget(i)) continue;
        signed char v = val(i);
        if (v != 0 && v != 1) return false;
        int l = t.lhs[static_cast<std::size_t>(i)];
        int r = t.rhs[static_cast<std::size_t>(i)];
        switch (t.subs[static_cast<std::size_t>(i)]->op()) {
        case Op::Var:
            break;
        case Op::Not:
            if (v == val(l)) return false;
            break;
        case Op::And:
            if (v != (val(l) == 1 && val(r) == 1)) return false;
            break;
        case Op::Or:
            if (v != (val(l) == 1 || val(r) == 1)) return false;
            break;
        case Op::Diamond:
            if (a.reflexive && v == 0 && val(l) == 1) return false;
            if (a.back_symmetric && a.parent && v == 0 &&
                a.parent->truth[static_cast<std::size_t>(l)] == 1)
                return false;
            break;
        }
    }
    return true;
}

// ── TableauTree ─────────────────────────────────────────────────────────────

bool TableauTree::edge(int u, int v) const {
    if (nodes[static_cast<std::size_t>(v)].parent == u) return true;
    if (u == v && nodes[static_cast<std::size_t>(u)].reflexive) return true;
    if (nodes[static_cast<std::size_t>(u)].parent == v &&
        nodes[static_cast<std::size_t>(u)].back_symmetric)
        return true;
    return false;
}

std::vector<int> TableauTree::window(int v, int radius) const {
    std::vector<int> out{v};
    std::vector<int> dist(nodes.size(), -1);
    dist[static_cast<std::size_t>(v)] = 0;
    for (std::size_t h = 0; h < out.size(); ++h) {
        int u = out[h];
        int d = dist[static_cast<std::size_t>(u)];
        if (d == radius) continue;
        auto visit = [&](int w) {
            if (w < 0 || dist[static_cast<std::size_t>(w)] >= 0) return;
            if (nodes[static_cast<std::size_t>(w)].evicted) return;
            dist[static_cast<std::size_t>(w)] = d + 1;
            out.push_back(w);
        };
        visit(nodes[static_cast<std::size_t>(u)].parent);
        for (int c : nodes[static_cast<std::size_t>(u)].children) visit(c);
    }
    return out;
}

// ── PsiContext ──────────────────────────────────────────────────────────────

PsiContext PsiContext::build(const HornFormula& psi) {
    PsiContext ctx;
    ctx.psi = psi;
    for (std::size_t ci = 0; ci < psi.clauses.size(); ++ci) {
        const HornClause& c = psi.clauses[ci];
        ClauseInfo info;
        auto comps = c.preq_components();
        auto index_edges = c.preq_index_edges();

        for (const auto& comp : comps) {
            Component gc;
            gc.clause = static_cast<int>(ci);
            gc.vars = comp;
            for (auto [a, b] : index_edges) {
                auto pa = std::find(comp.begin(), comp.end(), a);
                auto pb = std::find(comp.begin(), comp.end(), b);
                if (pa != comp.end() && pb != comp.end())
                    gc.edges.emplace_back(static_cast<int>(pa - comp.begin()),
                                          static_cast<int>(pb - comp.begin()));
            }
            info.components.push_back(static_cast<int>(ctx.components.size()));
            ctx.components.push_back(std::move(gc));
            ctx.radius = std::max(ctx.radius, static_cast<int>(comp.size()));
        }

        if (c.conclusion.is_false) {
            info.kind = ClauseKind::Unfixable;
        } else if (c.conclusion.x == c.conclusion.y && !c.in_preq(c.conclusion.x)) {
            info.kind = ClauseKind::ForcesReflexive;
        } else if (c.in_preq(c.conclusion.x) && c.in_preq(c.conclusion.y)) {
            int ix = c.var_index(c.conclusion.x);
            int iy = c.var_index(c.conclusion.y);
            int found = -1, px = -1, py = -1;
            for (int gci : info.components) {
                const auto& comp = ctx.components[static_cast<std::size_t>(gci)];
                auto hx = std::find(comp.vars.begin(), comp.vars.end(), ix);
                auto hy = std::find(comp.vars.begin(), comp.vars.end(), iy);
                if (hx != comp.vars.end() && hy != comp.vars.end()) {
                    found = gci;
                    px = static_cast<int>(hx - comp.vars.begin());
                    py = static_cast<int>(hy - comp.vars.begin());
                    break;
                }
            }
            if (found >= 0) {
                info.kind = ClauseKind::EdgeConclusion;
                info.conc_component = found;
                info.conc_x_pos = px;
                info.conc_y_pos = py;
            } else {
                info.kind = ClauseKind::Unfixable; // endpoints in distinct components
            }
        } else {
            info.kind = ClauseKind::Unfixable;
        }
        ctx.clauses.push_back(std::move(info));
    }
    return ctx;
}

// ── verify_horn ─────────────────────────────────────────────────────────────

namespace {

struct WindowGraph {
    std::vector<int> ids; // tree node per local vertex
    Graph g;
};

WindowGraph window_graph(const TableauTree& tree, int v, int radius) {
    WindowGraph w;
    w.ids = tree.window(v, radius);
    w.g = Graph(static_cast<int>(w.ids.size()));
    for (std::size_t i = 0; i < w.ids.size(); ++i)
        for (std::size_t j = 0; j < w.ids.size(); ++j)
            if (tree.edge(w.ids[i], w.ids[j]))
                w.g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return w;
}

std::vector<EdgeConstraint> component_constraints(const PsiContext::Component& comp) {
    std::vector<EdgeConstraint> cs;
    for (auto [a, b] : comp.edges) cs.push_back({a, b, true});
    return cs;
}

} // namespace

bool verify_horn(const TableauTree& tree, int v, const PsiContext& ctx,
                 const std::vector<char>& guesses) {
    if (ctx.psi.clauses.empty()) return true;
    WindowGraph w = window_graph(tree, v, ctx.radius);

    for (std::size_t ci = 0; ci < ctx.components.size(); ++ci) {
        const auto& comp = ctx.components[ci];
        if (guesses[ci]) continue;
        // declared unrealizable: any discovered image refutes the guess
        if (find_assignment(w.g, static_cast<int>(comp.vars.size()),
                            component_constraints(comp)))
            return false;
    }

    for (const auto& cl : ctx.clauses) {
        bool all_guessed = true;
        for (int comp : cl.components)
            if (!guesses[static_cast<std::size_t>(comp)]) all_guessed = false;

        switch (cl.kind) {
        case PsiContext::ClauseKind::ForcesReflexive:
            if (all_guessed && !tree.nodes[static_cast<std::size_t>(v)].reflexive)
                return false;
            break;
        case PsiContext::ClauseKind::EdgeConclusion: {
            if (!all_guessed) break;
            const auto& comp = ctx.components[static_cast<std::size_t>(cl.conc_component)];
            bool missing = for_each_assignment(
                w.g, static_cast<int>(comp.vars.size()), component_constraints(comp),
                [&](const std::vector<int>& a) {
                    int tu = w.ids[static_cast<std::size_t>(a[cl.conc_x_pos])];
                    int tv = w.ids[static_cast<std::size_t>(a[cl.conc_y_pos])];
                    return tree.edge(tu, tv); // keep scanning while edges are present
                });
            if (missing) return false;
            break;
        }
        case PsiContext::ClauseKind::Unfixable:
            // guess vectors realizing all components of such clauses are
            // skipped before the search starts
            break;
        }
    }
    return true;
}

// ── Solver ──────────────────────────────────────────────────────────────────

namespace {

struct TableauSolver {
    const SubformulaTable& tab;
    const PsiContext& ctx;
    const HornFormula& psi;
    const FormulaPtr& phi;
    const TableauOptions& opts;
    int md;

    TableauTree tree;
    std::vector<char> guesses;
    SatStats stats;
    std::uint64_t steps = 0;
    KripkeModel model;
    int anomalies = 0;

    using Req = std::pair<int, signed char>;
    enum class Phase { Initial, Flagged };

    TableauSolver(const SubformulaTable& t, const PsiContext& c, const HornFormula& p,
                  const FormulaPtr& f, const TableauOptions& o)
        : tab(t), ctx(c), psi(p), phi(f), opts(o), md(modal_depth(f)) {
        tree.table = &tab;
    }

    void step() {
        if (++steps > opts.step_cap)
            throw ResourceExhaustedError("tableau: step budget exhausted");
    }

    int budget_of(int level) const { return md - level; }

    bool run(std::vector<char> guess_vector) {
        guesses = std::move(guess_vector);
        tree.nodes.clear();
        std::vector<Req> init{{tab.size() - 1, static_cast<signed char>(1)}};
        return build_node(-1, init);
    }

    // Creates a node under `parent` (or the root), searches annotations,
    // flags, and discharges. On success the node and its subtree stay in the
    // tree; on failure everything is rolled back.
    bool build_node(int parent, const std::vector<Req>& init) {
        if (tree.nodes.size() >= opts.node_cap)
            throw ResourceExhaustedError("tableau: node budget exhausted");
        int id = static_cast<int>(tree.nodes.size());
        int level = parent < 0 ? 0 : tree.nodes[static_cast<std::size_t>(parent)].level + 1;
        tree.nodes.push_back(TabNode{parent, level, false, false,
                                     std::vector<signed char>(
                                         static_cast<std::size_t>(tab.size()), -1),
                                     {}, false});
        if (parent >= 0) tree.nodes[static_cast<std::size_t>(parent)].children.push_back(id);
        ++stats.nodes_explored;
        stats.max_depth = std::max(stats.max_depth, level);

        std::vector<signed char> req(static_cast<std::size_t>(tab.size()), -1);
        std::vector<Req> queue = init;
        if (process(id, req, queue, 0, Phase::Initial)) return true;

        tree.nodes.pop_back();
        if (parent >= 0) tree.nodes[static_cast<std::size_t>(parent)].children.pop_back();
        return false;
    }

    // Requirement propagation with branching on disjunctive shapes; left
    // alternative first.
    bool process(int id, std::vector<signed char>& req, std::vector<Req>& queue,
                 std::size_t qi, Phase phase) {
        step();
        if (qi == queue.size())
            return phase == Phase::Initial ? choose_flags(id, req) : finalize_node(id, req);
        auto [s, val] = queue[qi];
        const FormulaPtr& f = tab.subs[static_cast<std::size_t>(s)];
        switch (f->op()) {
        case Op::Var:
        case Op::Diamond: {
            signed char& slot = req[static_cast<std::size_t>(s)];
            if (slot == val) return process(id, req, queue, qi + 1, phase);
            if (slot != -1) return false;
            slot = val;
            bool ok = process(id, req, queue, qi + 1, phase);
            if (!ok) slot = -1;
            return ok;
        }
        case Op::Not: {
            std::size_t mark = queue.size();
            queue.emplace_back(tab.lhs[static_cast<std::size_t>(s)],
                               static_cast<signed char>(val ? 0 : 1));
            bool ok = process(id, req, queue, qi + 1, phase);
            queue.resize(mark);
            return ok;
        }
        case Op::And:
        case Op::Or: {
            bool conjunctive = (f->op() == Op::And) == (val == 1);
            int l = tab.lhs[static_cast<std::size_t>(s)];
            int r = tab.rhs[static_cast<std::size_t>(s)];
            if (conjunctive) {
                std::size_t mark = queue.size();
                queue.emplace_back(l, val);
                queue.emplace_back(r, val);
                bool ok = process(id, req, queue, qi + 1, phase);
                queue.resize(mark);
                return ok;
            }
            for (int alt : {l, r}) {
                std::size_t mark = queue.size();
                queue.emplace_back(alt, val);
                if (process(id, req, queue, qi + 1, phase)) {
                    queue.resize(mark);
                    return true;
                }
                queue.resize(mark);
            }
            return false;
        }
        }
        return false;
    }

    bool choose_flags(int id, std::vector<signed char>& req) {
        int budget = budget_of(tree.nodes[static_cast<std::size_t>(id)].level);
        int parent = tree.nodes[static_cast<std::size_t>(id)].parent;
        for (int refl = 0; refl <= 1; ++refl) {
            for (int back = 0; back <= 1; ++back) {
                if (back && parent < 0) continue;
                TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
                node.reflexive = refl;
                node.back_symmetric = back;

                // A back edge makes the parent a successor: every diamond this
                // node rejects must fail at the parent.
                if (back) {
                    const TabNode& par = tree.nodes[static_cast<std::size_t>(parent)];
                    bool clash = false;
                    for (int d : tab.diamonds) {
                        if (tab.md[static_cast<std::size_t>(d)] > budget) continue;
                        if (req[static_cast<std::size_t>(d)] == 1) continue;
                        if (par.truth[static_cast<std::size_t>(
                                tab.lhs[static_cast<std::size_t>(d)])] == 1) {
                            clash = true;
                            break;
                        }
                    }
                    if (clash) continue;
                }

                // A loop makes the node its own successor: rejected diamonds
                // force their child formula false here.
                std::vector<Req> extra;
                if (refl) {
                    for (int d : tab.diamonds) {
                        if (tab.md[static_cast<std::size_t>(d)] > budget) continue;
                        if (req[static_cast<std::size_t>(d)] == 1) continue;
                        extra.emplace_back(tab.lhs[static_cast<std::size_t>(d)],
                                           static_cast<signed char>(0));
                    }
                }
                if (process(id, req, extra, 0, Phase::Flagged)) return true;
            }
        }
        TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
        node.reflexive = node.back_symmetric = false;
        return false;
    }

    bool finalize_node(int id, std::vector<signed char>& req) {
        TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
        int budget = budget_of(node.level);

        std::vector<signed char> saved = node.truth;
        for (int i = 0; i < tab.size(); ++i) {
            if (tab.md[static_cast<std::size_t>(i)] > budget) {
                node.truth[static_cast<std::size_t>(i)] = -1;
                continue;
            }
            int l = tab.lhs[static_cast<std::size_t>(i)];
            int r = tab.rhs[static_cast<std::size_t>(i)];
            signed char v = 0;
            switch (tab.subs[static_cast<std::size_t>(i)]->op()) {
            case Op::Var:
            case Op::Diamond:
                v = req[static_cast<std::size_t>(i)] == 1 ? 1 : 0;
                break;
            case Op::Not:
                v = node.truth[static_cast<std::size_t>(l)] == 1 ? 0 : 1;
                break;
            case Op::And:
                v = (node.truth[static_cast<std::size_t>(l)] == 1 &&
                     node.truth[static_cast<std::size_t>(r)] == 1)
                        ? 1 : 0;
                break;
            case Op::Or:
                v = (node.truth[static_cast<std::size_t>(l)] == 1 ||
                     node.truth[static_cast<std::size_t>(r)] == 1)
                        ? 1 : 0;
                break;
            }
            node.truth[static_cast<std::size_t>(i)] = v;
        }

        bool ok = annotation_ok(id) && verify_horn(tree, id, ctx, guesses) &&
                  discharge(id, 0);
        if (!ok) tree.nodes[static_cast<std::size_t>(id)].truth = std::move(saved);
        return ok;
    }

    bool annotation_ok(int id) const {
        const TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
        Annotation a;
        a.table = &tab;
        a.budget = budget_of(node.level);
        a.truth = node.truth;
        a.reflexive = node.reflexive;
        a.back_symmetric = node.back_symmetric;
        Annotation pa;
        if (node.parent >= 0) {
            const TabNode& par = tree.nodes[static_cast<std::size_t>(node.parent)];
            pa.table = &tab;
            pa.budget = budget_of(par.level);
            pa.truth = par.truth;
            a.parent = &pa;
        }
        return verify_cons(a);
    }

    // Works through the budgeted diamonds claimed true, in subformula order;
    // per obligation the choices are the node's own loop, the back edge, then
    // a fresh child.
    bool discharge(int id, std::size_t di) {
        step();
        int budget = budget_of(tree.nodes[static_cast<std::size_t>(id)].level);

        std::size_t k = di;
        while (k < tab.diamonds.size()) {
            int d = tab.diamonds[k];
            if (tab.md[static_cast<std::size_t>(d)] <= budget &&
                tree.nodes[static_cast<std::size_t>(id)].truth[static_cast<std::size_t>(d)] == 1)
                break;
            ++k;
        }
        if (k == tab.diamonds.size()) return close_node(id);

        int d = tab.diamonds[k];
        int child_sub = tab.lhs[static_cast<std::size_t>(d)];
        const TabNode& node = tree.nodes[static_cast<std::size_t>(id)];

        if (node.reflexive && node.truth[static_cast<std::size_t>(child_sub)] == 1) {
            if (discharge(id, k + 1)) return true;
        }
        if (node.back_symmetric && node.parent >= 0 &&
            tree.nodes[static_cast<std::size_t>(node.parent)]
                    .truth[static_cast<std::size_t>(child_sub)] == 1) {
            if (discharge(id, k + 1)) return true;
        }
        {
            std::vector<Req> init{{child_sub, static_cast<signed char>(1)}};
            for (int e : tab.diamonds) {
                if (tab.md[static_cast<std::size_t>(e)] > budget) continue;
                if (tree.nodes[static_cast<std::size_t>(id)]
                        .truth[static_cast<std::size_t>(e)] == 1)
                    continue;
                init.emplace_back(tab.lhs[static_cast<std::size_t>(e)],
                                  static_cast<signed char>(0));
            }
            std::size_t mark = tree.nodes.size();
            if (build_node(id, init)) {
                if (discharge(id, k + 1)) return true;
                rollback_children(id, mark);
            }
        }
        return false;
    }

    void rollback_children(int id, std::size_t mark) {
        tree.nodes.resize(mark);
        auto& children = tree.nodes[static_cast<std::size_t>(id)].children;
        while (!children.empty() && children.back() >= static_cast<int>(mark))
            children.pop_back();
    }

    bool close_node(int id) {
        if (!verify_horn(tree, id, ctx, guesses)) return false;
        const TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
        if (opts.window && node.parent >= 0) {
            // nodes this deep can no longer appear in any future window
            int cutoff = tree.nodes[static_cast<std::size_t>(node.parent)].level + ctx.radius;
            evict_deep(id, cutoff);
        }
        if (node.parent >= 0) return true;
        return accept_root();
    }

    void evict_deep(int id, int cutoff) {
        TabNode& node = tree.nodes[static_cast<std::size_t>(id)];
        if (node.level > cutoff) node.evicted = true;
        for (int c : node.children) evict_deep(c, cutoff);
    }

    bool accept_root() {
        KripkeModel m;
        int n = static_cast<int>(tree.nodes.size());
        m.graph = Graph(n);
        for (int v = 0; v < n; ++v) {
            const TabNode& node = tree.nodes[static_cast<std::size_t>(v)];
            if (node.parent >= 0) m.graph.add_edge(node.parent, v);
            if (node.reflexive) m.graph.add_edge(v, v);
            if (node.back_symmetric && node.parent >= 0) m.graph.add_edge(v, node.parent);
        }
        for (int i = 0; i < tab.size(); ++i) {
            if (tab.subs[static_cast<std::size_t>(i)]->op() != Op::Var) continue;
            for (int v = 0; v < n; ++v)
                if (tree.nodes[static_cast<std::size_t>(v)]
                        .truth[static_cast<std::size_t>(i)] == 1)
                    m.set_true(tab.subs[static_cast<std::size_t>(i)]->name(), v);
        }
        m.root = 0;
        if (!eval_modal(m, 0, phi) || !horn_holds(m.graph, psi)) {
            ++anomalies;
            return false;
        }
        model = std::move(m);
        return true;
    }
};

} // namespace

SatResult sat_tableau(const HornFormula& psi, const FormulaPtr& phi,
                      const TableauOptions& opts) {
    ClassificationOutcome outcome = classify(psi);
    if (outcome.verdict != Verdict::PSpaceHard || !outcome.types.trans.empty())
        throw UnsupportedLogicError(
            "tableau: frame conditions outside the reflexive/symmetric tree regime "
            "(conditions: " + to_string(outcome.types) + ")");

    SubformulaTable tab(phi);
    PsiContext ctx = PsiContext::build(psi);
    if (ctx.components.size() > 12)
        throw ResourceExhaustedError("tableau: too many prerequisite components");

    SatResult res;
    res.engine = Engine::Tableau;
    TableauSolver solver(tab, ctx, psi, phi, opts);

    int combos = 1 << ctx.components.size();
    for (int mask = 0; mask < combos; ++mask) {
        std::vector<char> guesses(ctx.components.size());
        for (std::size_t i = 0; i < ctx.components.size(); ++i)
            guesses[i] = static_cast<char>((mask >> i) & 1);

        // Realizing every component of a FALSE-style clause cannot yield a
        // frame satisfying psi; skip those guess vectors.
        bool doomed = false;
        for (const auto& cl : ctx.clauses) {
            if (cl.kind != PsiContext::ClauseKind::Unfixable) continue;
            bool all = true;
            for (int comp : cl.components)
                if (!guesses[static_cast<std::size_t>(comp)]) all = false;
            if (all) doomed = true;
        }
        if (doomed) continue;

        if (solver.run(guesses)) {
            res.status = SatStatus::Sat;
            res.model = solver.model;
            res.world = 0;
            res.stats = solver.stats;
            return res;
        }
    }

    res.status = SatStatus::Unsat;
    res.stats = solver.stats;
    return res;
}

} // namespace hornmodal
