// Deterministic DOT and SVG pictures of dual graphs. The three-variable
// lattice drawing follows the usual convention: x^d at the bottom left, y^d
// at the bottom right, z^d on top; generators blue, the remaining degree-d
// monomials red.
#pragma once

#include <string>

#include "linres/dual_graph.hpp"
#include "linres/monomial.hpp"

namespace linres {

// Plain DOT export of any dual graph; vertex labels are monomial strings.
std::string to_dot(const DualGraph& graph);

// Full lattice of degree-d monomials with the simplex-graph edges, colored
// by membership in the generator set. Three variables only. Output is
// byte-stable: integer coordinates, no timestamps.
std::string render_lattice_svg(const MonomialIdeal& ideal);
std::string render_lattice_dot(const MonomialIdeal& ideal);

}  // namespace linres
