#ifndef HORNMODAL_PARSER_HPP
#define HORNMODAL_PARSER_HPP

#include <string>

#include "hornmodal/errors.hpp"
#include "hornmodal/formula.hpp"
#include "hornmodal/horn.hpp"

namespace hornmodal {

// Modal grammar.
//   formula  := or_expr ( "->" formula )?          right-associative
//   or_expr  := and_expr ( "|" and_expr )*
//   and_expr := unary ( "&" unary )*
//   unary    := ( "~" | "<>" | "[]" )* atom
//   atom     := IDENT | "(" formula ")"
//   IDENT    := [a-zA-Z_][a-zA-Z0-9_]*
// Whitespace is insignificant. Box and implication are desugared.
FormulaPtr parse_modal(const std::string& text);

// Frame-condition grammar. Clauses are separated by ";" or newline.
//   clause := atom ("," atom)* "->" (atom | "false")
//           | "->" atom
//   atom   := IDENT "R" IDENT
// "R" and "false" are keywords and not usable as variable names.
HornFormula parse_horn(const std::string& text);

} // namespace hornmodal

#endif // HORNMODAL_PARSER_HPP
