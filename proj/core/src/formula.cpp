#include "hornmodal/formula.hpp"

#include <cassert>
#include <functional>
#include <unordered_map>

namespace hornmodal {

namespace {

std::size_t combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Formula::Formula(Op op, std::string name, FormulaPtr lhs, FormulaPtr rhs)
    : op_(op), name_(std::move(name)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    switch (op_) {
    case Op::Var:
        md_ = 0;
        size_ = 1;
        hash_ = combine(std::hash<std::string>{}(name_), 0x11);
        break;
    case Op::Not:
        md_ = lhs_->md_;
        size_ = 1 + lhs_->size_;
        hash_ = combine(lhs_->hash_, 0x22);
        break;
    case Op::Diamond:
        md_ = 1 + lhs_->md_;
        size_ = 1 + lhs_->size_;
        hash_ = combine(lhs_->hash_, 0x33);
        break;
    case Op::And:
        md_ = std::max(lhs_->md_, rhs_->md_);
        size_ = 1 + lhs_->size_ + rhs_->size_;
        hash_ = combine(combine(lhs_->hash_, rhs_->hash_), 0x44);
        break;
    case Op::Or:
        md_ = std::max(lhs_->md_, rhs_->md_);
        size_ = 1 + lhs_->size_ + rhs_->size_;
        hash_ = combine(combine(lhs_->hash_, rhs_->hash_), 0x55);
        break;
    }
}

FormulaPtr Formula::var(std::string name) {
    return std::make_shared<Formula>(Op::Var, std::move(name), nullptr, nullptr);
}
FormulaPtr Formula::mk_not(FormulaPtr a) {
    return std::make_shared<Formula>(Op::Not, "", std::move(a), nullptr);
}
FormulaPtr Formula::mk_and(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<Formula>(Op::And, "", std::move(a), std::move(b));
}
FormulaPtr Formula::mk_or(FormulaPtr a, FormulaPtr b) {
    return std::make_shared<Formula>(Op::Or, "", std::move(a), std::move(b));
}
FormulaPtr Formula::diamond(FormulaPtr a) {
    return std::make_shared<Formula>(Op::Diamond, "", std::move(a), nullptr);
}
FormulaPtr Formula::box(FormulaPtr a) {
    return mk_not(diamond(mk_not(std::move(a))));
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
    return mk_or(mk_not(std::move(a)), std::move(b));
}
FormulaPtr Formula::box_n(FormulaPtr a, int n) {
    FormulaPtr out = std::move(a);
    for (int i = 0; i < n; ++i) out = box(out);
    return out;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b) return false;
    if (a->hash() != b->hash() || a->op() != b->op()) return false;
    switch (a->op()) {
    case Op::Var:
        return a->name() == b->name();
    case Op::Not:
    case Op::Diamond:
        return equal(a->lhs(), b->lhs());
    case Op::And:
    case Op::Or:
        return equal(a->lhs(), b->lhs()) && equal(a->rhs(), b->rhs());
    }
    return false;
}

namespace {

// Precedence levels used by the printer; must agree with the parser.
// 1 = |, 2 = &, 3 = unary, 4 = atom.
int precedence(Op op) {
    switch (op) {
    case Op::Or: return 1;
    case Op::And: return 2;
    case Op::Not:
    case Op::Diamond: return 3;
    case Op::Var: return 4;
    }
    return 4;
}

void print_rec(const FormulaPtr& f, int parent_prec, std::string& out) {
    int prec = precedence(f->op());
    bool paren = prec < parent_prec;
    if (paren) out += '(';
    switch (f->op()) {
    case Op::Var:
        out += f->name();
        break;
    case Op::Not:
        out += '~';
        print_rec(f->lhs(), 3, out);
        break;
    case Op::Diamond:
        out += "<>";
        print_rec(f->lhs(), 3, out);
        break;
    case Op::And:
        print_rec(f->lhs(), 2, out);
        out += " & ";
        print_rec(f->rhs(), 3, out); // right operand binds tighter: & is left-assoc
        break;
    case Op::Or:
        print_rec(f->lhs(), 1, out);
        out += " | ";
        print_rec(f->rhs(), 2, out);
        break;
    }
    if (paren) out += ')';
}

} // namespace

std::string to_string(const FormulaPtr& f) {
    std::string out;
    print_rec(f, 0, out);
    return out;
}

int modal_depth(const FormulaPtr& f) { return f->modal_depth(); }
int node_count(const FormulaPtr& f) { return f->node_count(); }

std::vector<FormulaPtr> subformulas(const FormulaPtr& f) {
    std::vector<FormulaPtr> out;
    std::unordered_map<FormulaPtr, int, FormulaHash, FormulaEq> seen;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (seen.count(g)) return;
        if (g->lhs()) walk(g->lhs());
        if (g->rhs()) walk(g->rhs());
        if (!seen.count(g)) {
            seen.emplace(g, static_cast<int>(out.size()));
            out.push_back(g);
        }
    };
    walk(f);
    return out;
}

std::set<std::string> variables(const FormulaPtr& f) {
    std::set<std::string> out;
    std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
        if (g->op() == Op::Var) {
            out.insert(g->name());
            return;
        }
        if (g->lhs()) walk(g->lhs());
        if (g->rhs()) walk(g->rhs());
    };
    walk(f);
    return out;
}

} // namespace hornmodal
