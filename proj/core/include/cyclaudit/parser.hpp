#pragma once

#include <string_view>

#include "cyclaudit/multipoly.hpp"

namespace cyclaudit {

/// Parse polynomial text over the declared variables. Grammar:
///   expr     := '-'? term (('+'|'-') term)*
///   term     := coefficient ('*'? monomial)? | monomial
///   monomial := var ('^' nonneg-int)? ('*'? var ('^' nonneg-int)?)*
///   coeff    := int ('/' positive-int)?
/// Whitespace-insensitive. parse -> str -> parse is a fixed point on
/// canonical forms. Throws SyntaxError (with offset) and UnknownVariable.
MultiPoly parse_poly(std::string_view text, const VarList& variables);

}  // namespace cyclaudit
