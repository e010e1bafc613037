#include "linres/render.hpp"

#include <algorithm>
#include <stdexcept>

namespace linres {

namespace {

void require_lattice_input(const MonomialIdeal& ideal) {
  if (ideal.num_vars() != 3)
    throw std::invalid_argument("render: lattice drawings require exactly three variables");
  if (ideal.is_zero()) throw std::invalid_argument("render: zero ideal");
  if (!ideal.is_equigenerated())
    throw std::invalid_argument("render: ideal is not equigenerated");
}

// Integer lattice placement: column 2*b + c, row c (drawn upward).
struct Point {
  int x;
  int y;
};

Point lattice_point(const Monomial& m, int d, int unit_x, int unit_y, int margin) {
  const int b = m.exponent(1), c = m.exponent(2);
  return {margin + (2 * b + c) * unit_x, margin + (d - c) * unit_y};
}

}  // namespace

std::string to_dot(const DualGraph& graph) {
  std::string out = "graph dual_graph {\n  node [shape=circle];\n";
  for (int v : graph.vertices())
    out += "  \"" + format_monomial(graph.ideal().generator(v)) + "\";\n";
  for (const auto& [u, v] : graph.edges())
    out += "  \"" + format_monomial(graph.ideal().generator(u)) + "\" -- \"" +
           format_monomial(graph.ideal().generator(v)) + "\";\n";
  out += "}\n";
  return out;
}

std::string render_lattice_svg(const MonomialIdeal& ideal) {
  require_lattice_input(ideal);
  const int d = ideal.degree();
  const int unit_x = 30, unit_y = 52, margin = 40;

  const std::vector<Monomial> lattice = monomials_of_degree(3, d);
  const DualGraph simplex = simplex_graph(3, d);

  const int width = 2 * margin + 2 * d * unit_x;
  const int height = 2 * margin + d * unit_y;
  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
                    "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
                    std::to_string(width) + " " + std::to_string(height) + "\">\n";

  for (const auto& [u, v] : simplex.edges()) {
    const Point a = lattice_point(simplex.ideal().generator(u), d, unit_x, unit_y, margin);
    const Point b = lattice_point(simplex.ideal().generator(v), d, unit_x, unit_y, margin);
    svg += "  <line x1=\"" + std::to_string(a.x) + "\" y1=\"" + std::to_string(a.y) + "\" x2=\"" +
           std::to_string(b.x) + "\" y2=\"" + std::to_string(b.y) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  for (const Monomial& m : lattice) {
    const Point p = lattice_point(m, d, unit_x, unit_y, margin);
    const bool generator = ideal.contains(m);
    svg += std::string("  <circle cx=\"") + std::to_string(p.x) + "\" cy=\"" + std::to_string(p.y) +
           "\" r=\"5\" fill=\"" + (generator ? "blue" : "red") + "\"/>\n";
    svg += "  <text x=\"" + std::to_string(p.x + 7) + "\" y=\"" + std::to_string(p.y - 7) +
           "\" font-size=\"12\">" + format_monomial(m) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

std::string render_lattice_dot(const MonomialIdeal& ideal) {
  require_lattice_input(ideal);
  const int d = ideal.degree();
  const int unit_x = 30, unit_y = 52, margin = 40;

  const std::vector<Monomial> lattice = monomials_of_degree(3, d);
  const DualGraph simplex = simplex_graph(3, d);

  std::string out = "graph lattice {\n  node [shape=circle, style=filled, fontcolor=white];\n";
  for (const Monomial& m : lattice) {
    const Point p = lattice_point(m, d, unit_x, unit_y, margin);
    const bool generator = ideal.contains(m);
    out += "  \"" + format_monomial(m) + "\" [fillcolor=" + (generator ? "blue" : "red") +
           ", pos=\"" + std::to_string(p.x) + "," + std::to_string(-p.y) + "!\"];\n";
  }
  for (const auto& [u, v] : simplex.edges())
    out += "  \"" + format_monomial(simplex.ideal().generator(u)) + "\" -- \"" +
           format_monomial(simplex.ideal().generator(v)) + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace linres
