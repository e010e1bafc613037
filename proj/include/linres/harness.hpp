// Exhaustive/sampled enumeration of equigenerated ideals in three variables
// and the cross-validation machinery: criterion vs oracle vs quotient checks
// per ideal, aggregated into machine-readable sweep reports.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linres/monomial.hpp"

namespace linres {

struct EnumerationMode {
  bool exhaustive = true;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  // Exhaustive runs above degree 4 enumerate millions of ideals and must be
  // requested explicitly.
  bool allow_large_exhaustive = false;

  static EnumerationMode Exhaustive() { return {}; }
  static EnumerationMode Sample(std::int64_t samples, std::uint64_t seed) {
    return {false, samples, seed, false};
  }
};

// Every nonempty subset of the degree-d monomials (each such subset is its
// own minimal generating set), in deterministic order: exhaustive mode walks
// subset masks ascending; sample mode draws distinct masks from a seeded
// generator and sorts them.
std::vector<MonomialIdeal> enumerate_equigenerated(int d, const EnumerationMode& mode);

// Per-ideal consistency report. Every entry of failed_checks names an
// implication between the checks that did not hold; any entry at all marks
// the ideal as a mismatch.
struct IdealReport {
  std::string ideal;
  bool linearly_presented = false;
  bool linear_resolution = false;       // combinatorial criterion verdict
  bool bad_configuration = false;
  bool quotient_order_found = false;
  std::vector<std::string> failed_checks;

  bool mismatch() const { return !failed_checks.empty(); }
};

IdealReport validate_ideal(const MonomialIdeal& ideal, int powers_up_to,
                           std::span<const int> characteristics);

struct SweepCounts {
  std::int64_t linearly_presented = 0;
  std::int64_t linear_resolution = 0;
  std::int64_t linear_quotients_found = 0;
  std::int64_t bad_configurations_found = 0;
};

struct MismatchEntry {
  std::string ideal;
  std::vector<std::string> failed_checks;
};

struct SweepReport {
  int degree = 0;
  EnumerationMode mode;
  std::int64_t population = 0;
  SweepCounts counts;
  std::vector<int> characteristics;
  int powers_up_to = 0;
  std::vector<MismatchEntry> mismatches;
  // Diagnostics only; canonical serialization omits it so equal-seed runs
  // stay byte-identical.
  double elapsed_ms = 0.0;
};

// Runs validate_ideal over the enumeration, in parallel across ideals;
// results are independent of thread count. threads <= 0 picks the hardware
// concurrency.
SweepReport run_sweep(int degree, const EnumerationMode& mode, int powers_up_to,
                      std::span<const int> characteristics, int threads = 0);

// The 6-vertex triangulation of the real projective plane (10 facets,
// complete 1-skeleton), the classical example whose resolution depends on
// the field characteristic.
std::vector<std::array<int, 3>> rp2_facets();

// Stanley-Reisner ideal of a pure 2-dimensional complex given by facets with
// 1-based vertex labels: the minimal non-faces, as squarefree monomials.
MonomialIdeal stanley_reisner_ideal(int num_vertices,
                                    std::span<const std::array<int, 3>> facets);

struct ReisnerReport {
  std::vector<std::array<int, 3>> facets;
  MonomialIdeal ideal;
  struct Entry {
    int characteristic = 0;
    int regularity = 0;
    bool linear_resolution = false;
  };
  std::vector<Entry> results;
};

// Builds the RP^2 Stanley-Reisner ideal from the facet list and reports the
// oracle regularity per characteristic.
ReisnerReport reisner_demo(std::span<const int> characteristics);

}  // namespace linres
