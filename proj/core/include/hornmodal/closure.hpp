#ifndef HORNMODAL_CLOSURE_HPP
#define HORNMODAL_CLOSURE_HPP

#include <set>
#include <string>
#include <vector>

#include "hornmodal/graph.hpp"

namespace hornmodal {

// Frame-closure conditions tracked by the classifier: reflexivity, symmetry,
// and k-transitivity for a finite set of k >= 2. k = 1 is tautological and
// rejected.
struct TypesList {
    bool refl = false;
    bool symm = false;
    std::set<int> trans;

    bool operator==(const TypesList&) const = default;
    bool empty() const { return !refl && !symm && trans.empty(); }

    void add_trans(int k);
    static TypesList make(bool refl, bool symm, std::initializer_list<int> ks = {});
};

std::string to_string(const TypesList& t);
TypesList parse_types_list(const std::string& text); // "refl,symm,trans2,trans5"

// Least supergraph of g satisfying every condition in t. Adding edges can
// create new k-step walks, so this iterates to a fixpoint.
Graph closure(const Graph& g, const TypesList& t);

// Rooted tree from a parent array: vertex 0 is the root, vertex i+1 has
// parent shape[i], and shape[i] <= i. Edges point parent -> child.
Graph strict_tree(const std::vector<int>& shape);

// Path 0 -> 1 -> ... -> n (n edges, n+1 vertices).
Graph strict_line(int n);

// closure(strict_line(n), t).
Graph typeslist_line(int n, const TypesList& t);

} // namespace hornmodal

#endif // HORNMODAL_CLOSURE_HPP
