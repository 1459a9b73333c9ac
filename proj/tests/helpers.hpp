#pragma once

#include <initializer_list>
#include <string>

#include "monideal/ideal.hpp"
#include "monideal/ideal_io.hpp"

namespace testing_helpers {

// Ideal over space-separated variables from generator strings, e.g.
// ideal("x y", {"x^2", "x*y"}).
inline monideal::MonomialIdeal ideal(const std::string& vars,
                                     std::initializer_list<const char*> gens) {
  std::string text = "vars: " + vars + "\n";
  for (const char* g : gens) text += std::string(g) + "\n";
  return monideal::parse_ideal(text);
}

inline monideal::Monomial mono(const monideal::MonomialIdeal& ambient, const std::string& m) {
  return monideal::parse_monomial(m, ambient.variable_names());
}

}  // namespace testing_helpers
