#include "hornmodal/model.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace hornmodal {

bool KripkeModel::var_true_at(const std::string& name, int world) const {
    auto it = valuation.find(name);
    if (it == valuation.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), world);
}

void KripkeModel::set_true(const std::string& name, int world) {
    auto& v = valuation[name];
    auto it = std::lower_bound(v.begin(), v.end(), world);
    if (it == v.end() || *it != world) v.insert(it, world);
}

KripkeModel KripkeModel::restrict_to(const std::vector<int>& keep) const {
    KripkeModel out;
    out.graph = graph.induced(keep);
    std::unordered_map<int, int> renum;
    for (std::size_t i = 0; i < keep.size(); ++i) renum[keep[i]] = static_cast<int>(i);
    for (const auto& [name, worlds] : valuation) {
        std::vector<int> kept;
        for (int w : worlds) {
            auto it = renum.find(w);
            if (it != renum.end()) kept.push_back(it->second);
        }
        std::sort(kept.begin(), kept.end());
        if (!kept.empty()) out.valuation[name] = std::move(kept);
    }
    if (root) {
        auto it = renum.find(*root);
        if (it != renum.end()) out.root = it->second;
    }
    return out;
}

std::vector<char> eval_all_worlds(const KripkeModel& m, const FormulaPtr& phi) {
    auto subs = subformulas(phi);
    int n = m.graph.size();
    std::unordered_map<FormulaPtr, int, FormulaHash, FormulaEq> index;
    for (std::size_t i = 0; i < subs.size(); ++i) index.emplace(subs[i], static_cast<int>(i));

    std::vector<std::vector<char>> truth(subs.size(), std::vector<char>(n, 0));
    for (std::size_t i = 0; i < subs.size(); ++i) {
        const FormulaPtr& f = subs[i];
        auto& row = truth[i];
        switch (f->op()) {
        case Op::Var:
            for (int w = 0; w < n; ++w) row[w] = m.var_true_at(f->name(), w);
            break;
        case Op::Not: {
            const auto& child = truth[index.at(f->lhs())];
            for (int w = 0; w < n; ++w) row[w] = !child[w];
            break;
        }
        case Op::And: {
            const auto& a = truth[index.at(f->lhs())];
            const auto& b = truth[index.at(f->rhs())];
            for (int w = 0; w < n; ++w) row[w] = a[w] && b[w];
            break;
        }
        case Op::Or: {
            const auto& a = truth[index.at(f->lhs())];
            const auto& b = truth[index.at(f->rhs())];
            for (int w = 0; w < n; ++w) row[w] = a[w] || b[w];
            break;
        }
        case Op::Diamond: {
            const auto& child = truth[index.at(f->lhs())];
            for (int w = 0; w < n; ++w) {
                char val = 0;
                for (int v = 0; v < n && !val; ++v)
                    if (m.graph.edge(w, v) && child[v]) val = 1;
                row[w] = val;
            }
            break;
        }
        }
    }
    return truth.back();
}

bool eval_modal(const KripkeModel& m, int world, const FormulaPtr& phi) {
    if (world < 0 || world >= m.graph.size())
        throw std::out_of_range("eval_modal: world out of range");
    return eval_all_worlds(m, phi)[world];
}

} // namespace hornmodal
