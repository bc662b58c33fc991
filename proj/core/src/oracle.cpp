#include "hornmodal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "hornmodal/errors.hpp"
#include "hornmodal/hom.hpp"
#include "hornmodal/util.hpp"

namespace hornmodal {

namespace {

// ── Frame catalogs ──────────────────────────────────────────────────────────
// Frames on n <= 5 vertices are encoded as n*n-bit integers (edge (u,v) is
// bit u*n+v) and enumerated once per size, keeping the numerically least code
// of each isomorphism orbit.

constexpr int kMaxCatalogSize = 5;

std::uint64_t permute_code(std::uint64_t code, const std::vector<std::uint8_t>& src) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < src.size(); ++i)
        out |= ((code >> src[i]) & 1ULL) << i;
    return out;
}

struct PermTables {
    // src maps result bit index -> source bit index, one table per
    // permutation; tables[0] is the identity and skipped in checks.
    std::vector<std::vector<std::uint8_t>> full;
    std::vector<std::vector<std::uint8_t>> quick; // adjacent transpositions
};

PermTables perm_tables(int n) {
    PermTables out;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    auto table_for = [n](const std::vector<int>& p) {
        std::vector<std::uint8_t> src(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                src[static_cast<std::size_t>(u) * n + v] =
                    static_cast<std::uint8_t>(p[u] * n + p[v]);
        return src;
    };
    do {
        out.full.push_back(table_for(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> p(n);
        for (int j = 0; j < n; ++j) p[j] = j;
        std::swap(p[i], p[i + 1]);
        out.quick.push_back(table_for(p));
    }
    return out;
}

const std::vector<std::uint32_t>& frame_catalog(int n) {
    static std::mutex mutex;
    static std::map<int, std::vector<std::uint32_t>> cache;
    std::scoped_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    PermTables perms = perm_tables(n);
    std::uint64_t total = 1ULL << (n * n);
    unsigned workers = worker_count();
    std::vector<std::vector<std::uint32_t>> partial(workers);

    parallel_chunks(total, workers, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
        auto& mine = partial[t];
        for (std::uint64_t code = lo; code < hi; ++code) {
            bool canonical = true;
            for (const auto& q : perms.quick)
                if (permute_code(code, q) < code) {
                    canonical = false;
                    break;
                }
            if (!canonical) continue;
            for (std::size_t p = 1; p < perms.full.size() && canonical; ++p)
                if (permute_code(code, perms.full[p]) < code) canonical = false;
            if (canonical) mine.push_back(static_cast<std::uint32_t>(code));
        }
    });

    std::vector<std::uint32_t> all;
    for (auto& part : partial) all.insert(all.end(), part.begin(), part.end());
    std::sort(all.begin(), all.end());
    return cache.emplace(n, std::move(all)).first->second;
}

Graph graph_from_code(std::uint32_t code, int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if ((code >> (u * n + v)) & 1) g.add_edge(u, v);
    return g;
}

// Catalog filtered by the frame conditions, cached per (n, psi) pair.
const std::vector<std::uint32_t>& filtered_catalog(int n, const HornFormula& psi) {
    static std::mutex mutex;
    static std::map<std::pair<int, std::string>, std::vector<std::uint32_t>> cache;
    std::string key_psi = to_string(psi);
    std::scoped_lock lock(mutex);
    auto key = std::make_pair(n, key_psi);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto& base = frame_catalog(n);
    std::vector<std::uint32_t> kept;
    for (std::uint32_t code : base) {
        Graph g = graph_from_code(code, n);
        if (horn_holds(g, psi)) kept.push_back(code);
    }
    return cache.emplace(key, std::move(kept)).first->second;
}

// ── Labeling tables ─────────────────────────────────────────────────────────
// A world type fixes the variable bits and the diamond bits; every other
// subformula's truth is determined. type_vec[t] holds the full truth bitmask
// over subformulas for type t.

struct LabelTables {
    std::vector<FormulaPtr> subs;
    std::vector<std::string> var_names; // per var slot
    std::vector<int> dia_sub;           // subformula index per diamond slot
    std::vector<int> dia_child_sub;     // child subformula index per diamond slot
    int num_vars = 0;
    int num_dias = 0;
    int phi_sub = 0;
    std::vector<std::uint64_t> type_vec;

    int types() const { return 1 << (num_vars + num_dias); }
};

LabelTables build_tables(const FormulaPtr& phi) {
    LabelTables t;
    t.subs = subformulas(phi);
    if (t.subs.size() > 60)
        throw ResourceExhaustedError("oracle: formula has too many subformulas");

    auto find_index = [&](const FormulaPtr& f) {
        for (std::size_t i = 0; i < t.subs.size(); ++i)
            if (equal(t.subs[i], f)) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> lhs_idx(t.subs.size(), -1), rhs_idx(t.subs.size(), -1);
    for (std::size_t i = 0; i < t.subs.size(); ++i) {
        if (t.subs[i]->lhs()) lhs_idx[i] = find_index(t.subs[i]->lhs());
        if (t.subs[i]->rhs()) rhs_idx[i] = find_index(t.subs[i]->rhs());
    }

    std::map<std::string, int> var_slot;
    std::vector<int> slot_of_sub(t.subs.size(), -1);
    for (std::size_t i = 0; i < t.subs.size(); ++i) {
        const auto& f = t.subs[i];
        if (f->op() == Op::Var) {
            auto it = var_slot.find(f->name());
            if (it == var_slot.end()) {
                it = var_slot.emplace(f->name(), t.num_vars++).first;
                t.var_names.push_back(f->name());
            }
            slot_of_sub[i] = it->second;
        } else if (f->op() == Op::Diamond) {
            slot_of_sub[i] = t.num_dias++;
            t.dia_sub.push_back(static_cast<int>(i));
        }
    }
    if (t.num_vars + t.num_dias > 16)
        throw ResourceExhaustedError("oracle: labeling space too large");
    t.phi_sub = static_cast<int>(t.subs.size()) - 1;

    for (int d = 0; d < t.num_dias; ++d)
        t.dia_child_sub.push_back(lhs_idx[static_cast<std::size_t>(t.dia_sub[d])]);

    t.type_vec.resize(static_cast<std::size_t>(t.types()));
    for (int ty = 0; ty < t.types(); ++ty) {
        std::uint64_t vec = 0;
        for (std::size_t i = 0; i < t.subs.size(); ++i) {
            const auto& f = t.subs[i];
            bool val = false;
            switch (f->op()) {
            case Op::Var:
                val = (ty >> slot_of_sub[i]) & 1;
                break;
            case Op::Diamond:
                val = (ty >> (t.num_vars + slot_of_sub[i])) & 1;
                break;
            case Op::Not:
                val = !((vec >> lhs_idx[i]) & 1);
                break;
            case Op::And:
                val = ((vec >> lhs_idx[i]) & 1) && ((vec >> rhs_idx[i]) & 1);
                break;
            case Op::Or:
                val = ((vec >> lhs_idx[i]) & 1) || ((vec >> rhs_idx[i]) & 1);
                break;
            }
            if (val) vec |= 1ULL << i;
        }
        t.type_vec[static_cast<std::size_t>(ty)] = vec;
    }
    return t;
}

// ── Per-frame labeling search ───────────────────────────────────────────────

struct FrameSearch {
    const LabelTables& tab;
    const Graph& g;
    int root;
    std::vector<int> order;  // BFS order from root
    std::vector<int> assign; // type per world, -1 unassigned
    std::uint64_t steps = 0;

    FrameSearch(const LabelTables& t, const Graph& gr, int r) : tab(t), g(gr), root(r) {
        int n = g.size();
        assign.assign(n, -1);
        std::vector<bool> seen(n, false);
        order.push_back(root);
        seen[root] = true;
        for (std::size_t h = 0; h < order.size(); ++h)
            for (int v = 0; v < n; ++v)
                if (g.edge(order[h], v) && !seen[v]) {
                    seen[v] = true;
                    order.push_back(v);
                }
    }

    bool diamonds_ok(int u) const {
        for (int d = 0; d < tab.num_dias; ++d) {
            bool want = (assign[u] >> (tab.num_vars + d)) & 1;
            bool got = false;
            bool complete = true;
            for (int v = 0; v < g.size(); ++v) {
                if (!g.edge(u, v)) continue;
                if (assign[v] < 0) {
                    complete = false;
                    continue;
                }
                if ((tab.type_vec[static_cast<std::size_t>(assign[v])] >>
                     tab.dia_child_sub[static_cast<std::size_t>(d)]) & 1) {
                    got = true;
                    break;
                }
            }
            if (got && !want) return false;
            if (!got && complete && want) return false;
        }
        return true;
    }

    bool consistent_after(int /*pos*/) {
        for (int u : order) {
            if (assign[u] < 0) continue;
            if (!diamonds_ok(u)) return false;
        }
        return true;
    }

    bool search(std::size_t pos) {
        ++steps;
        if (pos == order.size()) return true;
        int w = order[pos];
        for (int ty = 0; ty < tab.types(); ++ty) {
            if (pos == 0 &&
                !((tab.type_vec[static_cast<std::size_t>(ty)] >> tab.phi_sub) & 1))
                continue;
            assign[w] = ty;
            if (consistent_after(static_cast<int>(pos)) && search(pos + 1)) return true;
            assign[w] = -1;
        }
        return false;
    }
};

} // namespace

SatResult sat_oracle(const HornFormula& psi, const FormulaPtr& phi, int max_worlds,
                     const OracleOptions& opts) {
    if (max_worlds < 1) throw std::invalid_argument("sat_oracle: max_worlds >= 1 required");
    if (max_worlds > kMaxCatalogSize)
        throw ResourceExhaustedError(
            "oracle: frame enumeration beyond " + std::to_string(kMaxCatalogSize) +
            " worlds is not feasible");

    LabelTables tab = build_tables(phi);
    SatResult res;
    res.engine = Engine::Oracle;

    // With no frame conditions, a satisfying model thins to one witness edge
    // per diamond, so frames with larger out-degrees are redundant.
    bool thin = psi.clauses.empty();
    int outdeg_cap = tab.num_dias;

    std::atomic<std::uint64_t> steps_total{0};

    for (int n = 1; n <= max_worlds; ++n) {
        const auto& codes = filtered_catalog(n, psi);
        unsigned workers = worker_count(opts.threads);

        struct Hit {
            std::size_t code_idx;
            int root;
            std::vector<int> assign;
            std::vector<int> order;
        };
        std::vector<std::optional<Hit>> hits(workers);
        std::atomic<std::size_t> best_idx{codes.size()};
        std::atomic<bool> over_budget{false};

        parallel_chunks(codes.size(), workers, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
            std::uint64_t local_steps = 0;
            for (std::uint64_t i = lo; i < hi; ++i) {
                if (i >= best_idx.load(std::memory_order_relaxed)) break;
                if ((i & 0xfff) == 0) {
                    if (over_budget.load(std::memory_order_relaxed)) break;
                    if (steps_total.load(std::memory_order_relaxed) + local_steps > opts.step_cap) {
                        over_budget.store(true);
                        break;
                    }
                }
                Graph g = graph_from_code(codes[i], n);
                if (thin) {
                    bool ok = true;
                    for (int u = 0; u < n && ok; ++u)
                        if (g.out_degree(u) > outdeg_cap) ok = false;
                    if (!ok) continue;
                }
                for (int r = 0; r < n; ++r) {
                    auto reach = reachable_within(g, r, n);
                    bool full = std::all_of(reach.begin(), reach.end(), [](bool x) { return x; });
                    if (!full) continue;
                    FrameSearch fs(tab, g, r);
                    bool found = fs.search(0);
                    local_steps += fs.steps;
                    if (found) {
                        hits[t] = Hit{static_cast<std::size_t>(i), r, fs.assign, fs.order};
                        std::size_t expect = best_idx.load();
                        while (i < expect && !best_idx.compare_exchange_weak(expect, i)) {}
                        break;
                    }
                }
                if (hits[t]) break;
            }
            steps_total += local_steps;
        });

        if (over_budget.load() || steps_total.load() > opts.step_cap)
            throw ResourceExhaustedError("oracle: step budget exhausted");

        // take the least (code index, root) among worker hits
        std::optional<Hit> best;
        for (auto& h : hits)
            if (h && (!best || h->code_idx < best->code_idx)) best = h;
        if (best) {
            Graph g = graph_from_code(codes[best->code_idx], n);
            KripkeModel m;
            m.graph = g;
            for (int w = 0; w < n; ++w) {
                int ty = best->assign[w];
                if (ty < 0) continue; // unreachable world (cannot happen: rooted)
                for (int v = 0; v < tab.num_vars; ++v)
                    if ((ty >> v) & 1) m.set_true(tab.var_names[static_cast<std::size_t>(v)], w);
            }
            m.root = best->root;
            // verified before returning
            if (!eval_modal(m, best->root, phi) || !horn_holds(m.graph, psi))
                throw std::logic_error("oracle: labeling produced an invalid witness");
            res.status = SatStatus::Sat;
            res.model = std::move(m);
            res.world = best->root;
            res.stats.nodes_explored = steps_total.load();
            return res;
        }
    }

    res.status = opts.trusted_bound ? SatStatus::Unsat : SatStatus::UnsatWithinBound;
    res.bound = max_worlds;
    res.stats.nodes_explored = steps_total.load();
    return res;
}

} // namespace hornmodal
