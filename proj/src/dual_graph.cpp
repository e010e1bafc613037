#include "linres/dual_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace linres {

namespace {

std::shared_ptr<const MonomialIdeal> checked_share(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("dual_graph: zero ideal");
  if (!ideal.is_equigenerated()) throw std::invalid_argument("dual_graph: ideal is not equigenerated");
  return std::make_shared<MonomialIdeal>(ideal);
}

// BFS over an index-labelled subgraph.
bool connected_over(std::span<const int> vertices, std::span<const std::pair<int, int>> edges) {
  if (vertices.size() <= 1) return true;
  const int n = static_cast<int>(vertices.size());
  std::vector<int> local(n);
  for (int i = 0; i < n; ++i) local[i] = vertices[i];
  auto index_of = [&](int v) {
    return static_cast<int>(std::lower_bound(local.begin(), local.end(), v) - local.begin());
  };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    int lu = index_of(u), lv = index_of(v);
    adj[static_cast<std::size_t>(lu)].push_back(lv);
    adj[static_cast<std::size_t>(lv)].push_back(lu);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int u = queue.back();
    queue.pop_back();
    for (int v : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(v)]) {
        seen[static_cast<std::size_t>(v)] = 1;
        ++visited;
        queue.push_back(v);
      }
  }
  return visited == n;
}

}  // namespace

DualGraph DualGraph::build(const MonomialIdeal& ideal) {
  DualGraph g;
  g.ideal_ = checked_share(ideal);
  g.degree_ = ideal.degree();
  const int r = ideal.num_generators();
  g.vertices_.resize(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) g.vertices_[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (lcm(ideal.generator(i), ideal.generator(j)).degree() == g.degree_ + 1)
        g.edges_.emplace_back(i, j);
  return g;
}

DualGraph DualGraph::restricted(int f, int g) const {
  auto in_vertices = [&](int v) {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  };
  if (!in_vertices(f) || !in_vertices(g))
    throw std::invalid_argument("restricted_graph: vertex not in graph");
  const Monomial bound = lcm(ideal_->generator(f), ideal_->generator(g));
  DualGraph out;
  out.ideal_ = ideal_;
  out.degree_ = degree_;
  for (int v : vertices_)
    if (divides(ideal_->generator(v), bound)) out.vertices_.push_back(v);
  for (const auto& e : edges_) {
    bool keep = std::binary_search(out.vertices_.begin(), out.vertices_.end(), e.first) &&
                std::binary_search(out.vertices_.begin(), out.vertices_.end(), e.second);
    if (keep) out.edges_.push_back(e);
  }
  return out;
}

bool DualGraph::connected() const { return connected_over(vertices_, edges_); }

DualGraph dual_graph(const MonomialIdeal& ideal) { return DualGraph::build(ideal); }

DualGraph restricted_graph(const DualGraph& graph, int f, int g) { return graph.restricted(f, g); }

bool is_connected(const DualGraph& graph) { return graph.connected(); }

DualGraph simplex_graph(int n, int d) {
  if (n < 1 || d < 1) throw std::invalid_argument("simplex_graph: need n >= 1 and d >= 1");
  return DualGraph::build(max_ideal_power(n, d));
}

PresentationVerdict is_linearly_presented(const MonomialIdeal& ideal) {
  DualGraph g = DualGraph::build(ideal);  // validates the preconditions
  const int r = ideal.num_generators();
  // Generators are canonically sorted, so scanning pairs in index order
  // reports the canonically first disconnected pair.
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (!g.restricted(i, j).connected()) return {false, {{i, j}}};
  return {true, std::nullopt};
}

}  // namespace linres
