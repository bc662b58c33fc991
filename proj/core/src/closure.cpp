#include "hornmodal/closure.hpp"

#include <stdexcept>

namespace hornmodal {

void TypesList::add_trans(int k) {
    if (k < 2) throw std::invalid_argument("TypesList: trans^k requires k >= 2");
    trans.insert(k);
}

TypesList TypesList::make(bool refl, bool symm, std::initializer_list<int> ks) {
    TypesList t;
    t.refl = refl;
    t.symm = symm;
    for (int k : ks) t.add_trans(k);
    return t;
}

std::string to_string(const TypesList& t) {
    std::string out;
    auto append = [&out](const std::string& s) {
        if (!out.empty()) out += ',';
        out += s;
    };
    if (t.refl) append("refl");
    if (t.symm) append("symm");
    for (int k : t.trans) append("trans" + std::to_string(k));
    return out.empty() ? "none" : out;
}

TypesList parse_types_list(const std::string& text) {
    TypesList t;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string item = text.substr(pos, end - pos);
        // trim
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (item == "refl") {
            t.refl = true;
        } else if (item == "symm") {
            t.symm = true;
        } else if (item == "none" || item.empty()) {
            // no condition
        } else if (item.rfind("trans", 0) == 0) {
            int k = std::stoi(item.substr(5));
            t.add_trans(k);
        } else {
            throw std::invalid_argument("unknown frame condition '" + item + "'");
        }
        pos = end + 1;
        if (end == text.size()) break;
    }
    return t;
}

Graph closure(const Graph& g, const TypesList& t) {
    Graph out = g;
    int n = out.size();
    bool changed = true;
    while (changed) {
        changed = false;
        if (t.refl) {
            for (int v = 0; v < n; ++v)
                if (!out.edge(v, v)) {
                    out.add_edge(v, v);
                    changed = true;
                }
        }
        if (t.symm) {
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (out.edge(u, v) && !out.edge(v, u)) {
                        out.add_edge(v, u);
                        changed = true;
                    }
        }
        for (int k : t.trans) {
            Graph walks = walk_relation(out, k);
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    if (walks.edge(u, v) && !out.edge(u, v)) {
                        out.add_edge(u, v);
                        changed = true;
                    }
        }
    }
    return out;
}

Graph strict_tree(const std::vector<int>& shape) {
    int n = static_cast<int>(shape.size()) + 1;
    Graph g(n);
    for (int i = 0; i < n - 1; ++i) {
        if (shape[i] < 0 || shape[i] > i)
            throw std::invalid_argument("strict_tree: malformed parent array");
        g.add_edge(shape[i], i + 1);
    }
    return g;
}

Graph strict_line(int n) {
    if (n < 0) throw std::invalid_argument("strict_line: negative length");
    Graph g(n + 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph typeslist_line(int n, const TypesList& t) {
    return closure(strict_line(n), t);
}

} // namespace hornmodal
