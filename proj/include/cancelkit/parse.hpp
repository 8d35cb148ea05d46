#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cancelkit/conics.hpp"
#include "cancelkit/numberfield.hpp"

namespace cancelkit {

/// Expression grammar shared by every text input:
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*      division by constants only
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer | name | '(' expr ')' | 'T(' integer ')' | 'P(' integer ')'
/// Whitespace is ignored. `t` is the generator of K; T(n) and P(n) are the
/// Chebyshev and power maps in x. Errors carry the character position.

/// Minimal polynomial in t over Q, validated by NumberField::create.
NumberField parse_field(std::string_view text);
FieldElement parse_field_element(std::string_view text, const NumberField& K);
KPoly parse_polynomial(std::string_view text, const NumberField& K);
/// Comma-separated list (commas inside parentheses do not split).
/// Throws Error(kDegreeLessThanTwo) for a generator of degree < 2.
std::vector<KPoly> parse_generators(std::string_view text, const NumberField& K);
/// Polynomial of degree <= 2 in X and Y.
Conic parse_conic(std::string_view text, const NumberField& K);

}  // namespace cancelkit
