#include "hornmodal/hom.hpp"

#include <bit>
#include <cstdint>

namespace hornmodal {

namespace {

struct Searcher {
    const Graph& g;
    Graph gt;                 // transpose, for constraints entering the new var
    std::vector<std::uint64_t> loops; // diagonal as a row
    int num_vars;
    const std::function<bool(const std::vector<int>&)>& fn;
    std::vector<int> assign;
    // Constraints grouped at their larger variable index, so each fires as
    // soon as both endpoints are assigned.
    std::vector<std::vector<EdgeConstraint>> at_var;
    bool stopped = false;

    Searcher(const Graph& g_, int nv, const std::vector<EdgeConstraint>& cs,
             const std::function<bool(const std::vector<int>&)>& fn_)
        : g(g_), gt(g_.transpose()), num_vars(nv), fn(fn_), assign(nv, -1), at_var(nv) {
        loops.assign(g.words(), 0);
        for (int v = 0; v < g.size(); ++v)
            if (g.edge(v, v)) loops[v >> 6] |= std::uint64_t{1} << (v & 63);
        for (const auto& c : cs) at_var[std::max(c.from, c.to)].push_back(c);
        per_var_scratch.assign(static_cast<std::size_t>(nv) * g.words(), 0);
    }

    void search(int var) {
        if (stopped) return;
        if (var == num_vars) {
            if (!fn(assign)) stopped = true;
            return;
        }
        int words = g.words();
        // candidate set for this variable
        for (int w = 0; w < words; ++w) scratch_at(var)[w] = ~std::uint64_t{0};
        // mask off bits beyond n
        int tail = g.size() & 63;
        if (tail && words > 0) scratch_at(var)[words - 1] = (std::uint64_t{1} << tail) - 1;
        if (g.size() == 0) return;

        std::uint64_t* cand = scratch_at(var);
        for (const auto& c : at_var[var]) {
            if (c.from == var && c.to == var) {
                for (int w = 0; w < words; ++w)
                    cand[w] &= c.required ? loops[w] : ~loops[w];
            } else if (c.to == var) {
                const std::uint64_t* row = g.row(assign[c.from]);
                for (int w = 0; w < words; ++w) cand[w] &= c.required ? row[w] : ~row[w];
            } else {
                const std::uint64_t* row = gt.row(assign[c.to]);
                for (int w = 0; w < words; ++w) cand[w] &= c.required ? row[w] : ~row[w];
            }
        }
        for (int w = 0; w < words && !stopped; ++w) {
            std::uint64_t bits = cand[w];
            while (bits && !stopped) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                assign[var] = (w << 6) | b;
                search(var + 1);
            }
        }
        assign[var] = -1;
    }

    std::uint64_t* scratch_at(int var) {
        return per_var_scratch.data() + static_cast<std::size_t>(var) * g.words();
    }

    std::vector<std::uint64_t> per_var_scratch;
};

} // namespace

bool for_each_assignment(const Graph& g, int num_vars,
                         const std::vector<EdgeConstraint>& constraints,
                         const std::function<bool(const std::vector<int>&)>& fn) {
    if (num_vars == 0) {
        std::vector<int> empty;
        return !fn(empty);
    }
    Searcher s(g, num_vars, constraints, fn);
    s.search(0);
    return s.stopped;
}

std::optional<std::vector<int>> find_assignment(const Graph& g, int num_vars,
                                                const std::vector<EdgeConstraint>& constraints) {
    std::optional<std::vector<int>> out;
    for_each_assignment(g, num_vars, constraints, [&](const std::vector<int>& a) {
        out = a;
        return false;
    });
    return out;
}

std::vector<EdgeConstraint> violation_constraints(const HornClause& c) {
    std::vector<EdgeConstraint> cs;
    for (auto [a, b] : c.preq_index_edges()) cs.push_back({a, b, true});
    if (!c.conclusion.is_false) {
        int x = c.var_index(c.conclusion.x);
        int y = c.var_index(c.conclusion.y);
        cs.push_back({x, y, false});
    }
    return cs;
}

bool clause_holds(const Graph& g, const HornClause& c) {
    auto cs = violation_constraints(c);
    bool found = for_each_assignment(g, static_cast<int>(c.variables.size()), cs,
                                     [](const std::vector<int>&) { return false; });
    return !found;
}

bool fo_eval(const Graph& g, const HornClause& c) {
    int m = static_cast<int>(c.variables.size());
    int n = g.size();
    if (n == 0) return true;
    auto preq = c.preq_index_edges();
    int cx = -1, cy = -1;
    if (!c.conclusion.is_false) {
        cx = c.var_index(c.conclusion.x);
        cy = c.var_index(c.conclusion.y);
    }
    std::vector<int> a(m, 0);
    for (;;) {
        bool body = true;
        for (auto [u, v] : preq)
            if (!g.edge(a[u], a[v])) {
                body = false;
                break;
            }
        if (body) {
            if (c.conclusion.is_false) return false;
            if (!g.edge(a[cx], a[cy])) return false;
        }
        int i = 0;
        while (i < m && ++a[i] == n) a[i++] = 0;
        if (i == m) break;
    }
    return true;
}

bool horn_holds(const Graph& g, const HornFormula& f) {
    for (const auto& c : f.clauses)
        if (!clause_holds(g, c)) return false;
    return true;
}

std::optional<Violation> find_violation(const Graph& g, const HornFormula& f) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        auto hit = find_assignment(g, static_cast<int>(c.variables.size()),
                                   violation_constraints(c));
        if (hit) return Violation{static_cast<int>(i), std::move(*hit)};
    }
    return std::nullopt;
}

} // namespace hornmodal
