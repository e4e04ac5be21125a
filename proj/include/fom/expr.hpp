#pragma once

#include <string_view>

#include "fom/cyclotomic.hpp"

namespace fom {

/// Parses an element expression over Q(zeta_n).
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | '+' unary | power
///   power   := primary ('^' ['-'] integer | '^' '(' ['-'] integer ')')?
///   primary := integer | 'z' | '(' expr ')' | 'conj' '(' expr ')'
///
/// `z` denotes zeta_n = exp(2*pi*i/n). Whitespace is ignored. Rationals are
/// written as quotients, e.g. 3/4.
CycElt parse_element(std::string_view expr, int n);

}  // namespace fom
