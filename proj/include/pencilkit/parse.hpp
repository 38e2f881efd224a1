#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pencilkit/poly.hpp"

namespace pk {

/// Parses a polynomial over the variables x, y, z or u, v (not mixed).
///
/// Grammar, loosest binding first:
///   expr    := signed (('+' | '-') signed)*
///   signed  := '-' signed | product
///   product := power ('*' power)*
///   power   := atom ('^' integer)?
///   atom    := integer | integer '/' integer | variable | '(' expr ')'
/// Implicit multiplication is rejected. A constant expression gets
/// `default_arity`. Throws SyntaxError with the offending byte span.
MultiPoly parse_poly(std::string_view text, int default_arity = 3);

/// parse_poly plus checks: arity must match, and the result must be a
/// nonzero homogeneous form when `homogeneous` is set (NotHomogeneous lists
/// the degrees found).
MultiPoly parse_form(std::string_view text, int arity, bool homogeneous = true);

/// Splits "[P : Q : R]" into its component texts; `count` components are
/// required.
std::vector<std::string> split_map(std::string_view text, std::size_t count);

/// "[P:Q:R]" as three homogeneous ternary forms.
std::vector<MultiPoly> parse_plane_map(std::string_view text);
/// "[g0:g1]" as two homogeneous binary forms.
std::vector<MultiPoly> parse_line_map(std::string_view text);
/// "l0,l1,l2": three linear forms in u, v parametrizing a line.
std::vector<MultiPoly> parse_line(std::string_view text);
/// "1,2,-1/3": rational list.
std::vector<Scalar> parse_scalar_list(std::string_view text);

}  // namespace pk
