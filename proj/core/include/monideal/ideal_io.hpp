#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "monideal/ideal.hpp"

namespace monideal {

std::vector<std::string> default_variable_names(std::size_t n);

/// `x1^2*x3`, or `1` for the constant monomial.
std::string format_monomial(const Monomial& m,
                            const std::vector<std::string>& names);
std::string format_monomial(const Monomial& m);

/// Parses one monomial over `names`; errors report `line` and 1-based columns
/// offset by `column_offset`.
Monomial parse_monomial(std::string_view text,
                        const std::vector<std::string>& names,
                        std::size_t line = 1, std::size_t column_offset = 0);

/// Ideal text format:
///
///     # comment
///     vars: x1 x2 x3
///     x1^2*x3
///     x2
///
/// One monomial per line, `1` for the constant; no monomial lines means the
/// zero ideal. The header must precede every monomial line.
MonomialIdeal parse_ideal(std::string_view text);
MonomialIdeal read_ideal_file(const std::string& path);

/// Canonical text form; parse_ideal(format_ideal(I)) == I with the same names.
std::string format_ideal(const MonomialIdeal& I);
/// Inline form `(x1^2, x1*x2)`; `(0)` for the zero ideal.
std::string format_ideal_inline(const MonomialIdeal& I);

std::string format_prime(const PrimeSupport& p,
                         const std::vector<std::string>& names);

}  // namespace monideal
