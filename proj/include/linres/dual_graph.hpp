// Dual graphs of equigenerated monomial ideals: generators are vertices and
// two generators meet iff their lcm has degree d + 1. Linear presentation is
// decided by connectivity of every pairwise restriction.
#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "linres/monomial.hpp"

namespace linres {

// Vertices and edges are indices into the underlying ideal's generator list,
// so restrictions keep stable identities.
class DualGraph {
 public:
  static DualGraph build(const MonomialIdeal& ideal);

  // Induced subgraph on the generators dividing lcm(m_f, m_g); always
  // contains f and g.
  DualGraph restricted(int f, int g) const;

  // Single connected component; graphs with at most one vertex (including
  // the empty graph) count as connected.
  bool connected() const;

  const MonomialIdeal& ideal() const { return *ideal_; }
  std::span<const int> vertices() const { return vertices_; }
  std::span<const std::pair<int, int>> edges() const { return edges_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int degree() const { return degree_; }

 private:
  std::shared_ptr<const MonomialIdeal> ideal_;
  std::vector<int> vertices_;                 // generator indices, ascending
  std::vector<std::pair<int, int>> edges_;    // (u, v) with u < v, lexicographic
  int degree_ = 0;
};

// Free-function names for the graph operations.
DualGraph dual_graph(const MonomialIdeal& ideal);
DualGraph restricted_graph(const DualGraph& graph, int f, int g);
bool is_connected(const DualGraph& graph);

// Dual graph of the full power ideal m^d in n variables.
DualGraph simplex_graph(int n, int d);

struct PresentationVerdict {
  bool linearly_presented = false;
  // First failing generator pair in canonical order, when not presented.
  std::optional<std::array<int, 2>> witness;
};

// Connectivity of every pairwise restriction of the dual graph.
PresentationVerdict is_linearly_presented(const MonomialIdeal& ideal);

}  // namespace linres
