#pragma once

#include <string_view>

#include "autoseq/formula.hpp"

namespace autoseq {

/// Parses the predicate language:
///
///   formula  := iff
///   iff      := implies ('<=>' implies)*
///   implies  := or ('=>' implies)?
///   or       := and ('|' and)*
///   and      := unary ('&' unary)*
///   unary    := '~' unary | quant | '(' formula ')' | atom
///   quant    := ('E' | 'A') ident (',' ident)* formula     body extends right
///   atom     := 'true' | 'false' | '$' ident '(' term (',' term)* ')'
///             | operand rel operand
///   operand  := ident '[' term ']' | term
///   term     := primary (('+' | '-') primary)*
///   primary  := ident | number | '(' term ')'
///   rel      := '=' | '!=' | '<' | '<=' | '>' | '>='
///
/// Identifiers start with a lowercase letter or '_' and may contain letters,
/// digits, '_' and '\''. 'E' and 'A' are reserved for quantifiers, so "Et"
/// reads as "E t". A quantifier may not rebind a variable that is already
/// bound by an enclosing quantifier.
///
/// Throws SyntaxError with a 1-based line and column.
FormulaPtr parse(std::string_view text);

}  // namespace autoseq
