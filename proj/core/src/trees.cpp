#include "hornmodal/trees.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace hornmodal {

std::vector<int> TreeShape::depths() const {
    std::vector<int> d(size(), 0);
    for (int i = 0; i + 1 < size(); ++i) d[i + 1] = d[parents[i]] + 1;
    return d;
}

namespace {

// Rooted tree shapes are enumerated one per isomorphism class by composing a
// root with a multiset of child subtrees. The multiset stays canonical by
// choosing child descriptors (size, catalog index) in non-increasing
// lexicographic order, so no shape is produced twice.
class TreeCatalog {
public:
    static TreeCatalog& instance() {
        static TreeCatalog cat;
        return cat;
    }

    // Returned vectors live in a node-based map and are immutable once built,
    // so references stay valid across later catalog growth.
    const std::vector<TreeShape>& shapes(int n, int leaf_cap) {
        std::scoped_lock lock(mutex_);
        return shapes_locked(n, leaf_cap);
    }

private:
    std::mutex mutex_;
    std::map<std::pair<int, int>, std::vector<TreeShape>> memo_;

    const std::vector<TreeShape>& shapes_locked(int n, int leaf_cap) {
        auto key = std::make_pair(n, leaf_cap);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        std::vector<TreeShape> out;
        if (n >= 1 && leaf_cap >= 1) {
            if (n == 1) {
                out.push_back(TreeShape{{}, 1});
            } else {
                TreeShape partial;
                partial.parents.reserve(n - 1);
                partial.leaves = 0;
                compose(n - 1, n - 1, -1, leaf_cap, partial, out);
            }
        }
        auto [ins, ok] = memo_.emplace(key, std::move(out));
        (void)ok;
        return ins->second;
    }

    // Appends the next child subtree, descriptor (s, i) <= (max_s, max_i)
    // lexicographically; max_i < 0 means any index for size max_s.
    void compose(int remaining, int max_s, int max_i, int leaf_cap,
                 TreeShape& partial, std::vector<TreeShape>& out) {
        if (remaining == 0) {
            out.push_back(partial);
            return;
        }
        for (int s = std::min(remaining, max_s); s >= 1; --s) {
            const std::vector<TreeShape>& list = shapes_locked(s, leaf_cap);
            int start = (s == max_s && max_i >= 0) ? max_i : static_cast<int>(list.size()) - 1;
            for (int i = start; i >= 0; --i) {
                const TreeShape& child = list[i];
                int pending = remaining - s > 0 ? 1 : 0; // future children add >= 1 leaf
                if (partial.leaves + child.leaves + pending > leaf_cap) continue;

                std::size_t mark = partial.parents.size();
                int base = static_cast<int>(mark) + 1; // global id of the child's root
                partial.parents.push_back(0);
                for (int p : child.parents) partial.parents.push_back(base + p);
                partial.leaves += child.leaves;

                compose(remaining - s, s, i, leaf_cap, partial, out);

                partial.parents.resize(mark);
                partial.leaves -= child.leaves;
            }
        }
    }
};

} // namespace

void for_each_tree_shape(int max_nodes, int max_leaves,
                         const std::function<bool(const TreeShape&)>& fn) {
    if (max_nodes < 1) throw std::invalid_argument("for_each_tree_shape: max_nodes >= 1 required");
    if (max_leaves < 1) max_leaves = 1;
    for (int n = 1; n <= max_nodes; ++n) {
        const auto& list = TreeCatalog::instance().shapes(n, max_leaves);
        for (const auto& t : list)
            if (!fn(t)) return;
    }
}

void for_each_types_tree(const TypesList& t, int max_nodes, int max_leaves,
                         const std::function<bool(const TypesTree&)>& fn) {
    for_each_tree_shape(max_nodes, max_leaves, [&](const TreeShape& shape) {
        TypesTree tt;
        tt.shape = shape;
        tt.depth = shape.depths();
        tt.closed = closure(strict_tree(shape.parents), t);
        return fn(tt);
    });
}

std::vector<Graph> enum_typeslist_trees(int max_nodes, const TypesList& t) {
    std::vector<Graph> out;
    for_each_types_tree(t, max_nodes, max_nodes, [&](const TypesTree& tt) {
        out.push_back(tt.closed);
        return true;
    });
    return out;
}

} // namespace hornmodal
