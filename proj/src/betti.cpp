#include "linres/betti.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "linres/rank.hpp"

namespace linres {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

void validate_characteristic(int c) {
  if (c == 0) return;
  if (!is_prime(c)) throw std::invalid_argument("characteristic must be 0 or a prime");
  if (c >= (1 << 15)) throw std::invalid_argument("prime characteristic must be below 2^15");
}

SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal,
                                       std::span<const int> multidegree) {
  const int n = ideal.num_vars();
  if (static_cast<int>(multidegree.size()) != n)
    throw std::invalid_argument("upper_koszul_complex: multidegree length mismatch");
  for (int e : multidegree)
    if (e < 0) throw std::invalid_argument("upper_koszul_complex: negative multidegree");
  if (n > 31) throw std::invalid_argument("upper_koszul_complex: too many variables");

  SimplicialComplex k;
  k.num_vertices = n;
  if (!ideal.contains_exponents(multidegree)) return k;  // void

  std::uint32_t support = 0;
  for (int v = 0; v < n; ++v)
    if (multidegree[static_cast<std::size_t>(v)] > 0) support |= (1u << v);

  std::vector<int> query(multidegree.begin(), multidegree.end());
  // Subsets of the support in ascending mask order; the empty face is the
  // W = 0 iteration (x^a itself, already known to lie in the ideal).
  std::uint32_t w = 0;
  while (true) {
    for (int v = 0; v < n; ++v)
      query[static_cast<std::size_t>(v)] = multidegree[static_cast<std::size_t>(v)] - ((w >> v) & 1u);
    if (w == 0 || ideal.contains_exponents(query)) k.faces.push_back(w);
    if (w == support) break;
    w = (w - support) & support;  // next submask of support
  }
  std::sort(k.faces.begin(), k.faces.end());
  return k;
}

namespace {

// Boundary matrix from dim-faces to (dim-1)-faces with alternating signs
// under the ascending vertex order.
IntMatrix boundary_matrix(const std::vector<std::uint32_t>& lower,
                          const std::vector<std::uint32_t>& upper) {
  IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
  for (int col = 0; col < m.cols; ++col) {
    const std::uint32_t face = upper[static_cast<std::size_t>(col)];
    int sign = 1;
    for (std::uint32_t bits = face; bits != 0; bits &= bits - 1) {
      const std::uint32_t vbit = bits & ~(bits - 1);
      const std::uint32_t sub = face & ~vbit;
      auto it = std::lower_bound(lower.begin(), lower.end(), sub);
      // Downward closure guarantees the subface exists.
      m.at(static_cast<int>(it - lower.begin()), col) = sign;
      sign = -sign;
    }
  }
  return m;
}

int matrix_rank(IntMatrix m, int characteristic) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return characteristic == 0 ? rank_over_rationals(std::move(m))
                             : rank_mod_p(std::move(m), static_cast<std::uint32_t>(characteristic));
}

}  // namespace

HomologyRanks reduced_homology_ranks(const SimplicialComplex& complex, int characteristic) {
  validate_characteristic(characteristic);
  HomologyRanks out;
  out.ranks.assign(static_cast<std::size_t>(complex.num_vertices) + 1, 0);
  if (complex.is_void()) return out;

  // Chain groups graded by dimension (= popcount - 1), from the empty face up.
  std::vector<std::vector<std::uint32_t>> grades(static_cast<std::size_t>(complex.num_vertices) + 1);
  for (std::uint32_t face : complex.faces)
    grades[static_cast<std::size_t>(std::popcount(face))].push_back(face);

  // ranks of the boundary maps; boundary[g] maps grade g to grade g-1.
  std::vector<int> boundary_rank(grades.size() + 1, 0);
  for (std::size_t g = 1; g < grades.size(); ++g) {
    if (grades[g].empty() || grades[g - 1].empty()) continue;
    boundary_rank[g] = matrix_rank(boundary_matrix(grades[g - 1], grades[g]), characteristic);
  }
  for (std::size_t g = 0; g < grades.size(); ++g) {
    const int dim_count = static_cast<int>(grades[g].size());
    out.ranks[g] = dim_count - boundary_rank[g] - boundary_rank[g + 1];
  }
  return out;
}

std::map<std::pair<int, int>, int> BettiTable::graded() const {
  std::map<std::pair<int, int>, int> out;
  for (const auto& [key, rank] : entries) {
    int total = 0;
    for (int e : key.second) total += e;
    out[{key.first, total}] += rank;
  }
  return out;
}

int BettiTable::total_rank(int i) const {
  int out = 0;
  for (const auto& [key, rank] : entries)
    if (key.first == i) out += rank;
  return out;
}

int BettiTable::graded_rank(int i, int j) const {
  int out = 0;
  for (const auto& [key, rank] : entries) {
    if (key.first != i) continue;
    int total = 0;
    for (int e : key.second) total += e;
    if (total == j) out += rank;
  }
  return out;
}

int BettiTable::regularity() const {
  int reg = 0;
  bool any = false;
  for (const auto& [key, rank] : entries) {
    (void)rank;
    int total = 0;
    for (int e : key.second) total += e;
    reg = any ? std::max(reg, total - key.first) : total - key.first;
    any = true;
  }
  if (!any) throw std::logic_error("BettiTable::regularity: empty table");
  return reg;
}

int BettiTable::projective_dimension() const {
  int pd = 0;
  for (const auto& [key, rank] : entries) {
    (void)rank;
    pd = std::max(pd, key.first);
  }
  return pd;
}

std::vector<BettiTable> betti_tables(const MonomialIdeal& ideal,
                                     std::span<const int> characteristics) {
  if (ideal.is_zero()) throw std::invalid_argument("betti_table: zero ideal");
  for (int c : characteristics) validate_characteristic(c);

  std::vector<BettiTable> tables(characteristics.size());
  for (std::size_t t = 0; t < characteristics.size(); ++t) {
    tables[t].subject = Subject::ideal;
    tables[t].characteristic = characteristics[static_cast<std::ptrdiff_t>(t)];
    tables[t].num_vars = ideal.num_vars();
  }
  if (characteristics.empty()) return tables;

  const int n = ideal.num_vars();
  const Monomial box = ideal.generator_lcm();
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  while (true) {
    // Complex construction does not depend on the characteristic.
    SimplicialComplex k = upper_koszul_complex(ideal, a);
    if (!k.is_void()) {
      for (std::size_t t = 0; t < characteristics.size(); ++t) {
        HomologyRanks h = reduced_homology_ranks(k, characteristics[static_cast<std::ptrdiff_t>(t)]);
        for (int i = 0; i < n; ++i) {
          const int rank = h.rank(i - 1);
          if (rank != 0) tables[t].entries[{i, a}] = rank;
        }
      }
    }
    // Odometer over the box.
    int v = n - 1;
    while (v >= 0) {
      if (a[static_cast<std::size_t>(v)] < box.exponent(v)) {
        ++a[static_cast<std::size_t>(v)];
        break;
      }
      a[static_cast<std::size_t>(v)] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return tables;
}

BettiTable betti_table(const MonomialIdeal& ideal, int characteristic) {
  const int chars[1] = {characteristic};
  return std::move(betti_tables(ideal, chars).front());
}

BettiTable quotient_table(const BettiTable& ideal_table) {
  BettiTable out;
  out.subject = Subject::quotient;
  out.characteristic = ideal_table.characteristic;
  out.num_vars = ideal_table.num_vars;
  out.entries[{0, std::vector<int>(static_cast<std::size_t>(ideal_table.num_vars), 0)}] = 1;
  for (const auto& [key, rank] : ideal_table.entries)
    out.entries[{key.first + 1, key.second}] = rank;
  return out;
}

int regularity(const MonomialIdeal& ideal, int characteristic) {
  return betti_table(ideal, characteristic).regularity();
}

bool table_has_linear_resolution(const BettiTable& ideal_table, int degree) {
  return ideal_table.regularity() == degree;
}

bool table_linearly_presented(const BettiTable& ideal_table, int degree) {
  for (const auto& [key, rank] : ideal_table.entries) {
    (void)rank;
    if (key.first != 1) continue;
    int total = 0;
    for (int e : key.second) total += e;
    if (total != degree + 1) return false;
  }
  return true;
}

bool has_linear_resolution_oracle(const MonomialIdeal& ideal, int characteristic) {
  return table_has_linear_resolution(betti_table(ideal, characteristic), ideal.degree());
}

bool is_linearly_presented_oracle(const MonomialIdeal& ideal, int characteristic) {
  return table_linearly_presented(betti_table(ideal, characteristic), ideal.degree());
}

std::vector<int> socle_degrees_from_back_twists(const BettiTable& ideal_table) {
  // beta_{n,j}(S/I) = beta_{n-1,j}(I); each unit of rank contributes j - n.
  const int n = ideal_table.num_vars;
  std::vector<int> out;
  for (const auto& [key, rank] : ideal_table.entries) {
    if (key.first != n - 1) continue;
    int total = 0;
    for (int e : key.second) total += e;
    for (int c = 0; c < rank; ++c) out.push_back(total - n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> socle_degrees_from_back_twists(const MonomialIdeal& ideal, int characteristic) {
  return socle_degrees_from_back_twists(betti_table(ideal, characteristic));
}

namespace {

long long binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  bottom = std::min(bottom, top - bottom);
  long long out = 1;
  for (int i = 1; i <= bottom; ++i) out = out * (top - bottom + i) / i;
  return out;
}

}  // namespace

bool hilbert_consistency_check(const MonomialIdeal& ideal, const BettiTable& ideal_table) {
  const int n = ideal.num_vars();
  const int bound = 3 * ideal.max_generator_degree() + 3;

  // Numerator coefficients of the Hilbert series of S/I.
  std::map<int, long long> numerator;
  numerator[0] += 1;  // the free cover S
  for (const auto& [ij, rank] : ideal_table.graded()) {
    const int sign = (ij.first + 1) % 2 == 0 ? 1 : -1;  // S/I index i+1
    numerator[ij.second] += sign * static_cast<long long>(rank);
  }

  for (int q = 0; q <= bound; ++q) {
    long long from_table = 0;
    for (const auto& [j, coeff] : numerator) from_table += coeff * binomial(q - j + n - 1, n - 1);
    const long long total = binomial(q + n - 1, n - 1);
    const auto in_ideal = static_cast<long long>(kernels::count_divisible(
        ideal.packed_generators(), packed_monomials_of_degree(n, q)));
    if (from_table != total - in_ideal) return false;
  }
  return true;
}

bool hilbert_consistency_check(const MonomialIdeal& ideal, int characteristic) {
  return hilbert_consistency_check(ideal, betti_table(ideal, characteristic));
}

}  // namespace linres
