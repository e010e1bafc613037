// Tree ordering of generators, linear-quotient verification by colon ideals,
// prefix linear-presentation checks, and an exact backtracking search for a
// linear-quotient order on arbitrary equigenerated ideals.
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "linres/monomial.hpp"

namespace linres {

// Generators grouped by level (z-degree) and listed level by level. Level
// zero of the ordering is the lowest occupied level; linearly presented
// ideals occupy consecutive levels.
struct TreeOrder {
  std::shared_ptr<const MonomialIdeal> ideal;
  std::vector<int> order;               // generator indices in tree order
  std::vector<std::vector<int>> levels; // indices per level, lowest first
  int base_level = 0;                   // z-degree of the lowest level

  std::vector<Monomial> ordered_generators() const;
};

// Builds the tree ordering of a linearly presented ideal in three variables:
// the lowest level is listed by decreasing x-degree; each higher level starts
// with the highest-x generator joined by a dual-graph edge to the level
// below (edges taken in the full dual graph), then the smaller-x generators
// by decreasing x-degree, then the larger-x generators by increasing
// x-degree. Throws std::invalid_argument when the ideal is not linearly
// presented and std::logic_error on states linear presentation rules out.
TreeOrder tree_order(const MonomialIdeal& ideal);

// Minimal generating set of (prefix) : m; empty for an empty prefix.
std::vector<Monomial> colon_generators(std::span<const Monomial> prefix, const Monomial& m);

struct QuotientVerdict {
  bool has_linear_quotients = false;
  std::optional<int> failing_index;              // 1-based position in the order
  std::optional<Monomial> offending_generator;   // a colon generator of degree != 1
};

// Every successive colon ideal generated by variables?
QuotientVerdict has_linear_quotients_in_order(const MonomialIdeal& ideal,
                                              std::span<const int> order);

struct PrefixVerdict {
  bool all_linearly_presented = false;
  std::optional<int> failing_prefix_length;  // smallest failing prefix, 1-based
};

// Linear presentation of every prefix ideal of the order.
PrefixVerdict prefix_linear_presentation_check(const MonomialIdeal& ideal,
                                               std::span<const int> order);

// Exact search over generator orders: depth-first over admissible extensions
// in canonical order, with memoized dead prefix sets, so the first order
// found is canonical and an empty result proves no order exists.
std::optional<std::vector<int>> find_linear_quotient_order(const MonomialIdeal& ideal);

}  // namespace linres
