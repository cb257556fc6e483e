#pragma once

#include <limits>
#include <string_view>
#include <vector>

#include "bsswb/field_elem.hpp"

namespace bsswb {

inline constexpr unsigned kAnySymbols = std::numeric_limits<unsigned>::max();

/// Parses the canonical expression syntax: integers, `/`, symbols T1..Tm,
/// `+ - * ^` (nonnegative integer exponents), parentheses. Symbols beyond
/// `max_symbols` are rejected. Errors are Error(SyntaxError) with a column
/// (line 1), or Error(DivisionByZero).
RatFunc parse_ratfunc(std::string_view text, unsigned max_symbols = kAnySymbols);

/// As parse_ratfunc, plus the algebraic forms
///   alg(<poly in Z>, <a>, <b>)        root isolated in (a, b), rational coefficients
///   alg(<poly in Z> | <b1>, <b2>...)  root over the field generated by the b_i
FieldElem parse_field_elem(std::string_view text, unsigned max_symbols = kAnySymbols);

/// Comma-separated list, optionally wrapped in brackets. Empty text or "[]"
/// is the empty list.
std::vector<FieldElem> parse_field_elem_list(std::string_view text,
                                             unsigned max_symbols = kAnySymbols);

/// Splits on `sep` at parenthesis/bracket depth 0.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

}  // namespace bsswb
