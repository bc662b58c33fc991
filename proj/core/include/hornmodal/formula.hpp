#ifndef HORNMODAL_FORMULA_HPP
#define HORNMODAL_FORMULA_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace hornmodal {

// ── Modal formula AST ───────────────────────────────────────────────────────
// Five node kinds. Box and Implies are surface sugar handled by the parser:
//   []a  ==>  ~<>~a         a -> b  ==>  ~a | b
// Nodes are immutable after construction and freely shared; structural
// equality is the notion of identity everywhere.

enum class Op : std::uint8_t { Var, Not, And, Or, Diamond };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
    static FormulaPtr var(std::string name);
    static FormulaPtr mk_not(FormulaPtr a);
    static FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
    static FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
    static FormulaPtr diamond(FormulaPtr a);
    // Sugar: desugared on the spot, never represented.
    static FormulaPtr box(FormulaPtr a);           // ~<>~a
    static FormulaPtr implies(FormulaPtr a, FormulaPtr b); // ~a | b
    static FormulaPtr box_n(FormulaPtr a, int n);  // n nested boxes

    Op op() const noexcept { return op_; }
    const std::string& name() const { return name_; } // Var only
    const FormulaPtr& lhs() const { return lhs_; }    // Not/Diamond child, And/Or left
    const FormulaPtr& rhs() const { return rhs_; }    // And/Or right

    int modal_depth() const noexcept { return md_; }
    int node_count() const noexcept { return size_; }
    std::size_t hash() const noexcept { return hash_; }

    Formula(Op op, std::string name, FormulaPtr lhs, FormulaPtr rhs);

private:
    Op op_;
    std::string name_;
    FormulaPtr lhs_, rhs_;
    int md_ = 0;
    int size_ = 1;
    std::size_t hash_ = 0;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaHash {
    std::size_t operator()(const FormulaPtr& f) const noexcept { return f->hash(); }
};
struct FormulaEq {
    bool operator()(const FormulaPtr& a, const FormulaPtr& b) const { return equal(a, b); }
};

// Grammar-compatible rendering; parse(to_string(f)) reproduces f exactly.
std::string to_string(const FormulaPtr& f);

int modal_depth(const FormulaPtr& f);
int node_count(const FormulaPtr& f);

// All structurally distinct subformulas of f, children before parents,
// f itself last. Deterministic order.
std::vector<FormulaPtr> subformulas(const FormulaPtr& f);

// Variable names occurring in f, sorted.
std::set<std::string> variables(const FormulaPtr& f);

} // namespace hornmodal

#endif // HORNMODAL_FORMULA_HPP
