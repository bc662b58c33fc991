#ifndef HORNMODAL_QBF_HPP
#define HORNMODAL_QBF_HPP

#include <string>
#include <utility>
#include <vector>

#include "hornmodal/formula.hpp"

namespace hornmodal {

enum class Quant { ForAll, Exists };

// A closed prenex quantified Boolean formula: distinct prefix variables and a
// purely propositional matrix over them.
struct QBF {
    std::vector<std::pair<Quant, std::string>> prefix;
    FormulaPtr matrix;
};

// Surface syntax: "Ap Eq : (p&q)|(~p&~q)" — quantifier letter fused with the
// variable name, ':' separates the prefix from the matrix.
QBF parse_qbf(const std::string& text);

std::string to_string(const QBF& q);

// Brute-force evaluation; prefix length capped at 20.
bool qbf_eval(const QBF& q);

// Encoding into a single modal formula whose K-satisfiability matches the
// QBF's truth value. Level markers q0..qm track tree depth; value variables
// reuse the QBF's names (level markers are renamed on collision).
FormulaPtr qbf_to_modal(const QBF& q);

} // namespace hornmodal

#endif // HORNMODAL_QBF_HPP
