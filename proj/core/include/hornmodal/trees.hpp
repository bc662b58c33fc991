#ifndef HORNMODAL_TREES_HPP
#define HORNMODAL_TREES_HPP

#include <functional>
#include <vector>

#include "hornmodal/closure.hpp"
#include "hornmodal/graph.hpp"

namespace hornmodal {

// One rooted tree shape per isomorphism class. Vertices are in depth-first
// order (0 = root), parents[i] is the parent of vertex i+1.
struct TreeShape {
    std::vector<int> parents;
    int leaves = 1;

    int size() const { return static_cast<int>(parents.size()) + 1; }
    std::vector<int> depths() const;
};

// Calls fn for every rooted tree isomorphism class with <= max_nodes vertices
// and <= max_leaves leaves, smaller trees first, deterministic order within a
// size. fn returning false stops the enumeration.
void for_each_tree_shape(int max_nodes, int max_leaves,
                         const std::function<bool(const TreeShape&)>& fn);

// A tree closed under frame conditions, keeping the underlying strict shape
// around for level computations.
struct TypesTree {
    Graph closed;
    std::vector<int> depth; // depth in the strict tree, per vertex
    TreeShape shape;
};

void for_each_types_tree(const TypesList& t, int max_nodes, int max_leaves,
                         const std::function<bool(const TypesTree&)>& fn);

// Closures of every rooted strict tree with <= max_nodes vertices, one
// representative per strict-tree isomorphism class.
std::vector<Graph> enum_typeslist_trees(int max_nodes, const TypesList& t);

} // namespace hornmodal

#endif // HORNMODAL_TREES_HPP
