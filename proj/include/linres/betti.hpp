// Independent ground truth for resolution questions: multigraded Betti
// numbers via reduced simplicial homology of upper-Koszul complexes, with
// exact arithmetic only (fraction-free integer elimination in characteristic
// zero, modular elimination in prime characteristic).
#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "linres/monomial.hpp"

namespace linres {

// Faces are vertex bitmasks, sorted ascending, downward closed, with the
// empty face stored explicitly as mask 0. Three states matter:
//   void:       no faces at all,
//   irrelevant: only the empty face,
//   nonempty:   anything else.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::uint32_t> faces;

  bool is_void() const { return faces.empty(); }
  bool is_irrelevant() const { return faces.size() == 1 && faces.front() == 0; }
};

// Faces are the variable subsets W (within the support of the multidegree)
// with x^a / x^W in the ideal; void iff x^a is not in the ideal.
SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal,
                                       std::span<const int> multidegree);

// rank(dim) = rank of reduced homology in that dimension, dim >= -1.
// Conventions: the void complex has zero homology everywhere; the irrelevant
// complex has rank one in dimension -1.
struct HomologyRanks {
  std::vector<int> ranks;  // index dim + 1
  int rank(int dim) const {
    const int idx = dim + 1;
    return (idx >= 0 && idx < static_cast<int>(ranks.size())) ? ranks[static_cast<std::size_t>(idx)] : 0;
  }
};

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, int characteristic);

// Throws unless c is 0 or a prime below 2^15.
void validate_characteristic(int c);

enum class Subject { ideal, quotient };

struct BettiTable {
  Subject subject = Subject::ideal;
  int characteristic = 0;
  int num_vars = 0;
  // (homological index, multidegree) -> rank; zero ranks are not stored.
  std::map<std::pair<int, std::vector<int>>, int> entries;

  std::map<std::pair<int, int>, int> graded() const;  // (i, total degree) -> rank
  int total_rank(int i) const;
  int graded_rank(int i, int j) const;
  int regularity() const;            // max j - i over nonzero entries
  int projective_dimension() const;  // max i over nonzero entries
};

// Multigraded Betti numbers of the ideal itself (subject = ideal), scanning
// the box bounded by the componentwise lcm of the generators; multidegrees
// outside it are lcms of no generator subset and carry no homology.
BettiTable betti_table(const MonomialIdeal& ideal, int characteristic);

// Same scan shared across several characteristics (complex construction is
// characteristic-free, so it is done once).
std::vector<BettiTable> betti_tables(const MonomialIdeal& ideal, std::span<const int> characteristics);

// Table of S/I derived from the table of I: entries shift one homological
// step up and the free cover S contributes a single entry at (0, 0).
BettiTable quotient_table(const BettiTable& ideal_table);

int regularity(const MonomialIdeal& ideal, int characteristic);
bool has_linear_resolution_oracle(const MonomialIdeal& ideal, int characteristic);
bool is_linearly_presented_oracle(const MonomialIdeal& ideal, int characteristic);

// Socle degrees of S/I read off the last free module of its resolution:
// every twist j at homological index n contributes j - n. Sorted ascending.
std::vector<int> socle_degrees_from_back_twists(const MonomialIdeal& ideal, int characteristic);
std::vector<int> socle_degrees_from_back_twists(const BettiTable& ideal_table);

// Table-level variants (the table already fixes the characteristic).
bool table_has_linear_resolution(const BettiTable& ideal_table, int degree);
bool table_linearly_presented(const BettiTable& ideal_table, int degree);

// The alternating sum of the graded Betti numbers of S/I determines its
// Hilbert function; this recomputes the function from the table and compares
// it against direct monomial counting for every degree up to 3*maxdeg + 3.
bool hilbert_consistency_check(const MonomialIdeal& ideal, int characteristic);
bool hilbert_consistency_check(const MonomialIdeal& ideal, const BettiTable& ideal_table);

}  // namespace linres
