// Shared fixtures and shorthands for the test suites.
#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "linres/monomial.hpp"

namespace linres::testing {

inline Monomial mono(std::string_view text, int num_vars = 3) {
  return parse_monomial(text, num_vars);
}

inline MonomialIdeal ideal(std::string_view text) { return parse_ideal(text).ideal; }

// m^3 with the center generator xyz removed; linearly presented but without
// a linear resolution (the socle picks up xyz).
inline MonomialIdeal pinched_cube() {
  return ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z, xz^2, yz^2, z^3");
}

// Six-generator cubic ideal with a linear resolution.
inline MonomialIdeal six_gen_cubic() { return ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z"); }

// Seven-generator cubic ideal with a bad configuration at xyz.
inline MonomialIdeal seven_gen_cubic() {
  return ideal("x^3, x^2y, xy^2, y^3, x^2z, y^2z, xz^2");
}

// Degree-4 ideal with a linear resolution whose tree ordering exercises both
// sub-sequences of the level rule.
inline MonomialIdeal quartic_example() {
  return ideal("xy^3, xy^2z, y^3z, x^2yz, x^3z, x^2z^2, y^2z^2");
}

// Deterministic random equigenerated ideal in three variables.
inline MonomialIdeal random_equigenerated(std::mt19937_64& rng, int d) {
  const std::vector<Monomial> basis = monomials_of_degree(3, d);
  std::vector<Monomial> gens;
  while (gens.empty()) {
    for (const Monomial& m : basis)
      if (rng() % 2 == 0) gens.push_back(m);
  }
  return MonomialIdeal::from_minimal_sorted(3, gens);
}

inline std::vector<std::string> names(const std::vector<Monomial>& monomials) {
  std::vector<std::string> out;
  out.reserve(monomials.size());
  for (const Monomial& m : monomials) out.push_back(format_monomial(m));
  return out;
}

}  // namespace linres::testing
