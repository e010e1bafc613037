#include "linres/harness.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include "linres/betti.hpp"
#include "linres/criterion.hpp"
#include "linres/dual_graph.hpp"
#include "linres/quotients.hpp"

namespace linres {

std::vector<MonomialIdeal> enumerate_equigenerated(int d, const EnumerationMode& mode) {
  if (d < 1) throw std::invalid_argument("enumerate_equigenerated: degree must be at least 1");
  const std::vector<Monomial> basis = monomials_of_degree(3, d);
  const int m = static_cast<int>(basis.size());
  if (m > 62) throw std::invalid_argument("enumerate_equigenerated: degree too large");
  const std::uint64_t universe = (std::uint64_t{1} << m) - 1;

  std::vector<std::uint64_t> masks;
  if (mode.exhaustive) {
    if (d > 4 && !mode.allow_large_exhaustive)
      throw std::invalid_argument(
          "enumerate_equigenerated: exhaustive runs above degree 4 need the explicit override");
    masks.reserve(universe);
    for (std::uint64_t mask = 1; mask <= universe; ++mask) masks.push_back(mask);
  } else {
    if (mode.samples < 1) throw std::invalid_argument("enumerate_equigenerated: samples must be positive");
    if (static_cast<std::uint64_t>(mode.samples) >= universe) {
      for (std::uint64_t mask = 1; mask <= universe; ++mask) masks.push_back(mask);
    } else {
      // Plain 64-bit draws with modulo fold: reproducible for a fixed seed
      // independent of the standard library's distribution internals.
      std::mt19937_64 rng(mode.seed);
      std::set<std::uint64_t> chosen;
      while (chosen.size() < static_cast<std::size_t>(mode.samples))
        chosen.insert(1 + rng() % universe);
      masks.assign(chosen.begin(), chosen.end());
    }
  }

  std::vector<MonomialIdeal> out;
  out.reserve(masks.size());
  std::vector<Monomial> gens;
  for (std::uint64_t mask : masks) {
    gens.clear();
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) gens.push_back(basis[static_cast<std::size_t>(i)]);
    out.push_back(MonomialIdeal::from_minimal_sorted(3, gens));
  }
  return out;
}

IdealReport validate_ideal(const MonomialIdeal& ideal, int powers_up_to,
                           std::span<const int> characteristics) {
  IdealReport report;
  report.ideal = format_ideal(ideal);
  const int d = ideal.degree();

  const CriterionVerdict verdict = has_linear_resolution_criterion(ideal);
  report.linearly_presented = verdict.linearly_presented;
  report.linear_resolution = verdict.linear_resolution;
  report.bad_configuration = find_bad_configuration(ideal).has_value();

  auto fail = [&](std::string what) { report.failed_checks.push_back(std::move(what)); };

  const std::vector<BettiTable> tables = betti_tables(ideal, characteristics);
  const std::vector<int> socle_from_box = [&] {
    std::vector<int> degrees;
    for (const Monomial& f : socle_monomials(ideal)) degrees.push_back(f.degree());
    return degrees;  // socle_monomials is canonically sorted, so degrees ascend
  }();

  for (const BettiTable& table : tables) {
    const std::string chr = "@char" + std::to_string(table.characteristic);
    if (table_has_linear_resolution(table, d) != verdict.linear_resolution)
      fail("criterion_vs_oracle" + chr);
    if (table_linearly_presented(table, d) != verdict.linearly_presented)
      fail("presentation_vs_oracle" + chr);
    if (socle_degrees_from_back_twists(table) != socle_from_box) fail("socle_degrees" + chr);
    if (!hilbert_consistency_check(ideal, table)) fail("hilbert" + chr);
  }

  if (verdict.linearly_presented) {
    TreeOrder order = tree_order(ideal);
    const QuotientVerdict colon = has_linear_quotients_in_order(ideal, order.order);
    if (verdict.linear_resolution && !colon.has_linear_quotients) fail("tree_order_colon");
    const PrefixVerdict prefixes = prefix_linear_presentation_check(ideal, order.order);
    if (colon.has_linear_quotients != prefixes.all_linearly_presented)
      fail("colon_vs_prefix_presentation");
  }

  const auto found = find_linear_quotient_order(ideal);
  report.quotient_order_found = found.has_value();
  if (found) {
    if (!has_linear_quotients_in_order(ideal, *found).has_linear_quotients)
      fail("search_returned_invalid_order");
    for (const BettiTable& table : tables)
      if (!table_has_linear_resolution(table, d))
        fail("quotients_without_linear_resolution@char" + std::to_string(table.characteristic));
  }

  if (verdict.linear_resolution) {
    for (int k = 2; k <= powers_up_to; ++k) {
      const MonomialIdeal pk = power(ideal, k);
      const std::vector<BettiTable> ptables = betti_tables(pk, characteristics);
      for (const BettiTable& table : ptables)
        if (!table_has_linear_resolution(table, k * d))
          fail("power" + std::to_string(k) + "@char" + std::to_string(table.characteristic));
    }
  }
  return report;
}

SweepReport run_sweep(int degree, const EnumerationMode& mode, int powers_up_to,
                      std::span<const int> characteristics, int threads) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport report;
  report.degree = degree;
  report.mode = mode;
  report.characteristics.assign(characteristics.begin(), characteristics.end());
  report.powers_up_to = powers_up_to;

  const std::vector<MonomialIdeal> ideals = enumerate_equigenerated(degree, mode);
  report.population = static_cast<std::int64_t>(ideals.size());

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, static_cast<int>(ideals.size()) == 0 ? 1 : static_cast<int>(ideals.size()));

  struct Partial {
    SweepCounts counts;
    std::vector<std::pair<std::size_t, MismatchEntry>> mismatches;
    std::exception_ptr error;
  };
  std::vector<Partial> partials(static_cast<std::size_t>(threads));

  auto work = [&](int tid) {
    Partial& local = partials[static_cast<std::size_t>(tid)];
    try {
      for (std::size_t i = static_cast<std::size_t>(tid); i < ideals.size();
           i += static_cast<std::size_t>(threads)) {
        IdealReport r = validate_ideal(ideals[i], powers_up_to, characteristics);
        local.counts.linearly_presented += r.linearly_presented ? 1 : 0;
        local.counts.linear_resolution += r.linear_resolution ? 1 : 0;
        local.counts.linear_quotients_found += r.quotient_order_found ? 1 : 0;
        local.counts.bad_configurations_found += r.bad_configuration ? 1 : 0;
        if (r.mismatch())
          local.mismatches.emplace_back(i, MismatchEntry{r.ideal, r.failed_checks});
      }
    } catch (...) {
      local.error = std::current_exception();
    }
  };

  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (std::thread& t : pool) t.join();
  }

  std::vector<std::pair<std::size_t, MismatchEntry>> merged;
  for (Partial& p : partials) {
    if (p.error) std::rethrow_exception(p.error);
    report.counts.linearly_presented += p.counts.linearly_presented;
    report.counts.linear_resolution += p.counts.linear_resolution;
    report.counts.linear_quotients_found += p.counts.linear_quotients_found;
    report.counts.bad_configurations_found += p.counts.bad_configurations_found;
    for (auto& e : p.mismatches) merged.push_back(std::move(e));
  }
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [idx, entry] : merged) {
    (void)idx;
    report.mismatches.push_back(std::move(entry));
  }

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<std::array<int, 3>> rp2_facets() {
  // Antipodal quotient of the icosahedron: every edge lies in exactly two of
  // these triangles and every vertex link is a pentagon.
  return {{1, 2, 5}, {1, 2, 6}, {1, 3, 4}, {1, 3, 6}, {1, 4, 5},
          {2, 3, 4}, {2, 3, 5}, {2, 4, 6}, {3, 5, 6}, {4, 5, 6}};
}

MonomialIdeal stanley_reisner_ideal(int num_vertices,
                                    std::span<const std::array<int, 3>> facets) {
  if (num_vertices < 1 || num_vertices > 20)
    throw std::invalid_argument("stanley_reisner_ideal: vertex count out of range");
  std::vector<std::uint32_t> facet_masks;
  for (const auto& f : facets) {
    std::uint32_t mask = 0;
    for (int v : f) {
      if (v < 1 || v > num_vertices)
        throw std::invalid_argument("stanley_reisner_ideal: vertex label out of range");
      mask |= 1u << (v - 1);
    }
    facet_masks.push_back(mask);
  }
  auto is_face = [&](std::uint32_t s) {
    for (std::uint32_t f : facet_masks)
      if ((s & ~f) == 0) return true;
    return false;
  };

  std::vector<Monomial> gens;
  const std::uint32_t limit = 1u << num_vertices;
  for (std::uint32_t s = 1; s < limit; ++s) {
    if (is_face(s)) continue;
    bool minimal = true;
    for (std::uint32_t bits = s; bits != 0 && minimal; bits &= bits - 1)
      minimal = is_face(s & ~(bits & ~(bits - 1)));
    if (!minimal) continue;
    std::vector<int> exps(static_cast<std::size_t>(num_vertices), 0);
    for (int v = 0; v < num_vertices; ++v)
      if ((s >> v) & 1u) exps[static_cast<std::size_t>(v)] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal::minimalize(num_vertices, std::move(gens));
}

ReisnerReport reisner_demo(std::span<const int> characteristics) {
  ReisnerReport report;
  report.facets = rp2_facets();
  report.ideal = stanley_reisner_ideal(6, report.facets);
  const int d = report.ideal.degree();
  const std::vector<BettiTable> tables = betti_tables(report.ideal, characteristics);
  for (const BettiTable& table : tables)
    report.results.push_back(
        {table.characteristic, table.regularity(), table_has_linear_resolution(table, d)});
  return report;
}

}  // namespace linres
