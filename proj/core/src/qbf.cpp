#include "hornmodal/qbf.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hornmodal/errors.hpp"
#include "hornmodal/parser.hpp"

namespace hornmodal {

QBF parse_qbf(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected ':' between prefix and matrix", text.size());

    QBF q;
    std::set<std::string> seen;
    std::size_t pos = 0;
    while (pos < colon) {
        while (pos < colon && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= colon) break;
        std::size_t start = pos;
        while (pos < colon && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string tok = text.substr(start, pos - start);
        if (tok.size() < 2 || (tok[0] != 'A' && tok[0] != 'E'))
            throw ParseError("prefix token must be A<name> or E<name>", start);
        Quant quant = tok[0] == 'A' ? Quant::ForAll : Quant::Exists;
        std::string name = tok.substr(1);
        if (!seen.insert(name).second)
            throw ParseError("duplicate prefix variable '" + name + "'", start);
        q.prefix.emplace_back(quant, name);
    }

    q.matrix = parse_modal(text.substr(colon + 1));
    if (modal_depth(q.matrix) != 0)
        throw ParseError("matrix must be propositional", colon + 1);
    for (const auto& v : variables(q.matrix))
        if (!seen.count(v))
            throw ParseError("matrix variable '" + v + "' is not quantified", colon + 1);
    return q;
}

std::string to_string(const QBF& q) {
    std::string out;
    for (const auto& [quant, name] : q.prefix) {
        out += quant == Quant::ForAll ? 'A' : 'E';
        out += name;
        out += ' ';
    }
    out += ": ";
    out += to_string(q.matrix);
    return out;
}

namespace {

bool eval_prop(const FormulaPtr& f, const std::map<std::string, bool>& env) {
    switch (f->op()) {
    case Op::Var: {
        auto it = env.find(f->name());
        return it != env.end() && it->second;
    }
    case Op::Not: return !eval_prop(f->lhs(), env);
    case Op::And: return eval_prop(f->lhs(), env) && eval_prop(f->rhs(), env);
    case Op::Or: return eval_prop(f->lhs(), env) || eval_prop(f->rhs(), env);
    case Op::Diamond: throw std::logic_error("qbf matrix contains a modality");
    }
    return false;
}

bool eval_rec(const QBF& q, std::size_t i, std::map<std::string, bool>& env) {
    if (i == q.prefix.size()) return eval_prop(q.matrix, env);
    const auto& [quant, name] = q.prefix[i];
    env[name] = false;
    bool f0 = eval_rec(q, i + 1, env);
    env[name] = true;
    bool f1 = eval_rec(q, i + 1, env);
    env.erase(name);
    return quant == Quant::ForAll ? (f0 && f1) : (f0 || f1);
}

} // namespace

bool qbf_eval(const QBF& q) {
    if (q.prefix.size() > 20)
        throw ResourceExhaustedError("qbf_eval: more than 20 quantifiers");
    std::map<std::string, bool> env;
    return eval_rec(q, 0, env);
}

namespace {

// box_upto(f, m) = f & []f & [][]f & ... & []^m f
FormulaPtr box_upto(const FormulaPtr& f, int m) {
    FormulaPtr out = f;
    FormulaPtr layer = f;
    for (int i = 1; i <= m; ++i) {
        layer = Formula::box(layer);
        out = Formula::mk_and(out, layer);
    }
    return out;
}

FormulaPtr conj(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) throw std::logic_error("conj: empty");
    FormulaPtr out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::mk_and(out, fs[i]);
    return out;
}

FormulaPtr disj(const std::vector<FormulaPtr>& fs) {
    if (fs.empty()) throw std::logic_error("disj: empty");
    FormulaPtr out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = Formula::mk_or(out, fs[i]);
    return out;
}

} // namespace

FormulaPtr qbf_to_modal(const QBF& q) {
    int m = static_cast<int>(q.prefix.size());

    // Level markers default to q0..qm; rename on collision with value names.
    std::set<std::string> value_names;
    for (const auto& [quant, name] : q.prefix) value_names.insert(name);
    std::string stem = "q";
    for (;;) {
        bool clash = false;
        for (int i = 0; i <= m && !clash; ++i)
            clash = value_names.count(stem + std::to_string(i)) > 0;
        if (!clash) break;
        stem += "q";
    }
    auto level = [&](int i) { return Formula::var(stem + std::to_string(i)); };
    auto value = [&](int i) { return Formula::var(q.prefix[static_cast<std::size_t>(i) - 1].second); };

    std::vector<FormulaPtr> parts;

    // the entry world carries level 0
    parts.push_back(level(0));

    // levels are mutually exclusive everywhere within reach
    for (int i = 0; i <= m; ++i) {
        std::vector<FormulaPtr> others;
        for (int j = 0; j <= m; ++j)
            if (j != i) others.push_back(Formula::mk_not(level(j)));
        if (others.empty()) continue;
        parts.push_back(box_upto(Formula::implies(level(i), conj(others)), m));
    }

    // every level i world sees a level i+1 world
    for (int i = 0; i < m; ++i)
        parts.push_back(box_upto(
            Formula::implies(level(i), Formula::diamond(level(i + 1))), m));

    // universally quantified variables split into both truth values
    for (int i = 0; i < m; ++i) {
        if (q.prefix[static_cast<std::size_t>(i)].first != Quant::ForAll) continue;
        // variable i+1 branches at level i
        FormulaPtr split = Formula::implies(
            level(i),
            Formula::mk_and(
                Formula::diamond(Formula::mk_and(level(i + 1), value(i + 1))),
                Formula::diamond(Formula::mk_and(level(i + 1), Formula::mk_not(value(i + 1))))));
        parts.push_back(Formula::box_n(split, i));
    }

    // settled variable values propagate down through the leveled part
    for (int i = 1; i < m; ++i) {
        std::vector<FormulaPtr> lower;
        for (int j = i + 1; j <= m; ++j) lower.push_back(level(j));
        FormulaPtr guard = disj(lower);
        FormulaPtr keep_true =
            Formula::implies(value(i), Formula::box(Formula::implies(guard, value(i))));
        FormulaPtr keep_false = Formula::implies(
            Formula::mk_not(value(i)),
            Formula::box(Formula::implies(guard, Formula::mk_not(value(i)))));
        parts.push_back(box_upto(Formula::mk_and(keep_true, keep_false), m));
    }

    // the matrix holds wherever the deepest level is reached
    parts.push_back(Formula::box_n(Formula::implies(level(m), q.matrix), m));

    return conj(parts);
}

} // namespace hornmodal
