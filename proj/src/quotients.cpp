#include "linres/quotients.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "linres/dual_graph.hpp"

namespace linres {

namespace {

void validate_order(const MonomialIdeal& ideal, std::span<const int> order, const char* what) {
  const int r = ideal.num_generators();
  if (static_cast<int>(order.size()) != r)
    throw std::invalid_argument(std::string(what) + ": order length mismatch");
  std::vector<char> seen(static_cast<std::size_t>(r), 0);
  for (int i : order) {
    if (i < 0 || i >= r || seen[static_cast<std::size_t>(i)])
      throw std::invalid_argument(std::string(what) + ": order is not a permutation");
    seen[static_cast<std::size_t>(i)] = 1;
  }
}

int x_degree(const Monomial& m) { return m.exponent(0); }

}  // namespace

std::vector<Monomial> TreeOrder::ordered_generators() const {
  std::vector<Monomial> out;
  out.reserve(order.size());
  for (int i : order) out.push_back(ideal->generator(i));
  return out;
}

TreeOrder tree_order(const MonomialIdeal& ideal) {
  if (ideal.num_vars() != 3)
    throw std::invalid_argument("tree_order: requires exactly three variables");
  PresentationVerdict presentation = is_linearly_presented(ideal);  // validates nonzero/equigenerated
  if (!presentation.linearly_presented)
    throw std::invalid_argument(
        "tree_order: ideal is not linearly presented; no tree ordering is defined (witness pair " +
        format_monomial(ideal.generator(presentation.witness->at(0))) + ", " +
        format_monomial(ideal.generator(presentation.witness->at(1))) + ")");

  const int r = ideal.num_generators();
  int min_level = ideal.generator(0).exponent(2), max_level = min_level;
  for (int i = 1; i < r; ++i) {
    const int c = ideal.generator(i).exponent(2);
    min_level = std::min(min_level, c);
    max_level = std::max(max_level, c);
  }

  TreeOrder out;
  out.ideal = std::make_shared<MonomialIdeal>(ideal);
  out.base_level = min_level;
  out.levels.assign(static_cast<std::size_t>(max_level - min_level + 1), {});
  for (int i = 0; i < r; ++i)
    out.levels[static_cast<std::size_t>(ideal.generator(i).exponent(2) - min_level)].push_back(i);
  for (auto& level : out.levels) {
    if (level.empty())
      throw std::logic_error("tree_order: empty intermediate level in a linearly presented ideal");
    // Within a level the x-degree determines the monomial, so this is total.
    std::sort(level.begin(), level.end(), [&](int a, int b) {
      return x_degree(ideal.generator(a)) > x_degree(ideal.generator(b));
    });
  }

  const int d = ideal.degree();
  auto adjacent = [&](int a, int b) {
    return lcm(ideal.generator(a), ideal.generator(b)).degree() == d + 1;
  };

  out.order = out.levels.front();
  for (std::size_t li = 1; li < out.levels.size(); ++li) {
    const std::vector<int>& level = out.levels[li];
    const std::vector<int>& below = out.levels[li - 1];
    // Seed: highest x-degree on this level joined to the level below by an
    // edge of the full dual graph.
    int seed = -1;
    for (int candidate : level) {  // already sorted by decreasing x-degree
      for (int b : below)
        if (adjacent(candidate, b)) {
          seed = candidate;
          break;
        }
      if (seed >= 0) break;
    }
    if (seed < 0)
      throw std::logic_error(
          "tree_order: level with no edge to the previous level in a linearly presented ideal");
    const int seed_x = x_degree(ideal.generator(seed));
    out.order.push_back(seed);
    for (int i : level)  // smaller x, left to right = decreasing x-degree
      if (x_degree(ideal.generator(i)) < seed_x) out.order.push_back(i);
    for (auto it = level.rbegin(); it != level.rend(); ++it)  // larger x, right to left
      if (x_degree(ideal.generator(*it)) > seed_x) out.order.push_back(*it);
  }
  return out;
}

std::vector<Monomial> colon_generators(std::span<const Monomial> prefix, const Monomial& m) {
  if (prefix.empty()) return {};
  std::vector<Monomial> quotients;
  quotients.reserve(prefix.size());
  for (const Monomial& g : prefix) quotients.push_back(g.quotient_by(gcd(g, m)));
  MonomialIdeal colon = MonomialIdeal::minimalize(m.num_vars(), std::move(quotients));
  return {colon.generators().begin(), colon.generators().end()};
}

QuotientVerdict has_linear_quotients_in_order(const MonomialIdeal& ideal,
                                              std::span<const int> order) {
  validate_order(ideal, order, "has_linear_quotients_in_order");
  std::vector<Monomial> prefix;
  prefix.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Monomial& m = ideal.generator(order[i]);
    if (i > 0) {
      for (const Monomial& q : colon_generators(prefix, m))
        if (q.degree() != 1)
          return {false, static_cast<int>(i) + 1, q};
    }
    prefix.push_back(m);
  }
  return {true, std::nullopt, std::nullopt};
}

PrefixVerdict prefix_linear_presentation_check(const MonomialIdeal& ideal,
                                               std::span<const int> order) {
  validate_order(ideal, order, "prefix_linear_presentation_check");
  std::vector<Monomial> prefix;
  prefix.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    prefix.push_back(ideal.generator(order[j]));
    std::vector<Monomial> sorted = prefix;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    MonomialIdeal prefix_ideal = MonomialIdeal::from_minimal_sorted(ideal.num_vars(), std::move(sorted));
    if (!is_linearly_presented(prefix_ideal).linearly_presented)
      return {false, static_cast<int>(j) + 1};
  }
  return {true, std::nullopt};
}

namespace {

// Admissibility of appending generator m after the prefix set S without
// materializing the colon ideal: the colon is variable-generated iff every
// quotient g/gcd(g, m) is divisible by some variable that itself occurs as a
// quotient.
bool colon_is_variable_generated(const MonomialIdeal& ideal, std::uint64_t prefix_mask, int next) {
  const Monomial& m = ideal.generator(next);
  const int n = ideal.num_vars();
  std::uint32_t variable_quotients = 0;
  for (std::uint64_t bits = prefix_mask; bits != 0; bits &= bits - 1) {
    const int g = std::countr_zero(bits);
    const Monomial q = ideal.generator(g).quotient_by(gcd(ideal.generator(g), m));
    if (q.degree() == 1)
      for (int v = 0; v < n; ++v)
        if (q.exponent(v) == 1) variable_quotients |= (1u << v);
  }
  if (variable_quotients == 0) return prefix_mask == 0;
  for (std::uint64_t bits = prefix_mask; bits != 0; bits &= bits - 1) {
    const int g = std::countr_zero(bits);
    const Monomial q = ideal.generator(g).quotient_by(gcd(ideal.generator(g), m));
    bool covered = false;
    for (int v = 0; v < n && !covered; ++v)
      covered = ((variable_quotients >> v) & 1u) != 0 && q.exponent(v) > 0;
    if (!covered) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_linear_quotient_order(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("find_linear_quotient_order: zero ideal");
  if (!ideal.is_equigenerated())
    throw std::invalid_argument("find_linear_quotient_order: ideal is not equigenerated");
  const int r = ideal.num_generators();
  if (r > 62) throw std::invalid_argument("find_linear_quotient_order: too many generators");

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(r));
  std::unordered_set<std::uint64_t> dead;
  const std::uint64_t full = (r == 62) ? ~std::uint64_t{0} >> 2 : (std::uint64_t{1} << r) - 1;

  auto dfs = [&](auto&& self, std::uint64_t mask) -> bool {
    if (mask == full) return true;
    if (dead.contains(mask)) return false;
    // Candidates in ascending index = canonical monomial order.
    for (int i = 0; i < r; ++i) {
      if ((mask >> i) & 1u) continue;
      if (mask != 0 && !colon_is_variable_generated(ideal, mask, i)) continue;
      order.push_back(i);
      if (self(self, mask | (std::uint64_t{1} << i))) return true;
      order.pop_back();
    }
    dead.insert(mask);
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return order;
}

}  // namespace linres
