// Monomials and monomial ideals with exact integer exponents.
//
// The canonical order used everywhere for determinism is graded
// lexicographic: lower total degree first, and within a degree the monomial
// with the larger exponent on the earliest variable comes first, so for
// n = 3 (variables x, y, z) the degree-3 block reads
//   x^3, x^2y, x^2z, xy^2, xyz, xz^2, y^3, y^2z, yz^2, z^3.
#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linres/kernels.hpp"

namespace linres {

// Exponent vector with cached total degree; immutable in practice (no
// mutating members besides assignment).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);
  static Monomial one(int num_vars);

  int num_vars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int exponent(int var) const { return exps_[static_cast<std::size_t>(var)]; }
  std::span<const int> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  // Product; exponent additions are overflow-checked.
  Monomial operator*(const Monomial& rhs) const;
  // this / g; requires g | this.
  Monomial quotient_by(const Monomial& g) const;
  // this * x_var^delta; delta may be negative if the result stays valid.
  Monomial times_var(int var, int delta = 1) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> exps_;
  int degree_ = 0;
};

// Componentwise max / min.
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

// True iff a | b, i.e. every exponent of a is <= the matching exponent of b.
bool divides(const Monomial& a, const Monomial& b);

// Strict canonical order (see file comment). Total: distinct monomials of the
// same length always compare.
bool canonical_less(const Monomial& a, const Monomial& b);

// All degree-d monomials in n variables, in canonical order.
// |result| = C(d+n-1, n-1).
std::vector<Monomial> monomials_of_degree(int n, int d);

// Memoized packed form of monomials_of_degree, shared across threads.
const kernels::PackedExponents& packed_monomials_of_degree(int n, int d);

// A monomial ideal, stored as its unique minimal generating set in canonical
// order. The empty generating set represents the zero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  // Drops every generator strictly divisible by another, deduplicates, and
  // sorts canonically. The empty set yields the zero ideal.
  static MonomialIdeal minimalize(int num_vars, std::vector<Monomial> generators);

  // Trusted fast path for generator sets already minimal and sorted
  // (e.g. equal-degree subsets); checked in debug builds only.
  static MonomialIdeal from_minimal_sorted(int num_vars, std::vector<Monomial> generators);

  int num_vars() const { return num_vars_; }
  bool is_zero() const { return gens_.empty(); }
  std::span<const Monomial> generators() const { return gens_; }
  const Monomial& generator(int i) const { return gens_[static_cast<std::size_t>(i)]; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  // True iff all generators share one total degree (vacuously true for the
  // zero ideal; callers that need a degree must reject zero ideals first).
  bool is_equigenerated() const;
  // Generation degree of an equigenerated nonzero ideal.
  int degree() const;
  int max_generator_degree() const;

  // Membership: some generator divides m.
  bool contains(const Monomial& m) const;
  bool contains_exponents(std::span<const int> exponents) const;

  // Componentwise lcm of all generators (the multidegree scan box).
  Monomial generator_lcm() const;

  const kernels::PackedExponents& packed_generators() const { return packed_; }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.num_vars_ == b.num_vars_ && a.gens_ == b.gens_;
  }

 private:
  MonomialIdeal(int num_vars, std::vector<Monomial> sorted_minimal);

  int num_vars_ = 0;
  std::vector<Monomial> gens_;
  kernels::PackedExponents packed_;
};

// I^k as a minimalized generator set; k >= 1, I nonzero.
MonomialIdeal power(const MonomialIdeal& ideal, int k);

// The power ideal m^d in n variables.
MonomialIdeal max_ideal_power(int n, int d);

// --- text form ---------------------------------------------------------
//
// A monomial is a product of factors `v` or `v^e` with optional `*` between
// factors and arbitrary whitespace; `e` is a positive decimal integer. For
// three variables the names are x, y, z; otherwise x1..xN. Repeating a
// variable inside one monomial is an error. An ideal is a comma- or
// newline-separated list of monomials.

std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);

// Parses one monomial; num_vars = 3 selects the x/y/z alphabet, any other
// value the indexed alphabet. Throws std::invalid_argument on bad syntax.
Monomial parse_monomial(std::string_view text, int num_vars = 3);

struct ParsedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> warnings;  // e.g. non-minimal input, duplicates
};

// Parses an ideal; the variable alphabet (and n) is inferred from the text
// unless num_vars is given. Letter-style input always sits in n = 3.
ParsedIdeal parse_ideal(std::string_view text, int num_vars = 0);

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace linres
