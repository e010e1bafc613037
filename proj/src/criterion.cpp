#include "linres/criterion.hpp"

#include <algorithm>
#include <stdexcept>

namespace linres {

namespace {

void require_three_vars(const MonomialIdeal& ideal, const char* what) {
  if (ideal.num_vars() != 3)
    throw std::invalid_argument(std::string(what) + ": requires exactly three variables");
}

void require_nonzero_equigenerated(const MonomialIdeal& ideal, const char* what) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(what) + ": zero ideal");
  if (!ideal.is_equigenerated())
    throw std::invalid_argument(std::string(what) + ": ideal is not equigenerated");
}

}  // namespace

std::vector<Monomial> d_shadow(const Monomial& f, int d) {
  if (d < 0) throw std::invalid_argument("d_shadow: negative degree");
  std::vector<Monomial> out;
  if (f.degree() < d) return out;
  const int n = f.num_vars();
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    int room = 0;
    for (int v = var; v < n; ++v) room += f.exponent(v);
    if (remaining > room) return;
    if (var == n) {
      out.emplace_back(exps);
      return;
    }
    const int cap = std::min(f.exponent(var), remaining);
    for (int e = cap; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
  return out;  // descending per-variable choice emits canonical order
}

int z_level(const Monomial& m) {
  if (m.num_vars() != 3) throw std::invalid_argument("z_level: requires exactly three variables");
  return m.exponent(2);
}

std::vector<Monomial> socle_monomials(const MonomialIdeal& ideal) {
  require_three_vars(ideal, "socle_monomials");
  require_nonzero_equigenerated(ideal, "socle_monomials");
  const int d = ideal.degree();
  std::vector<Monomial> out;
  int f[3];
  int probe[3];
  for (f[0] = 0; f[0] < d; ++f[0])
    for (f[1] = 0; f[1] < d; ++f[1])
      for (f[2] = 0; f[2] < d; ++f[2]) {
        if (ideal.contains_exponents({f, 3})) continue;
        bool all_in = true;
        for (int v = 0; v < 3 && all_in; ++v) {
          probe[0] = f[0];
          probe[1] = f[1];
          probe[2] = f[2];
          ++probe[v];
          all_in = ideal.contains_exponents({probe, 3});
        }
        if (all_in) out.emplace_back(std::vector<int>{f[0], f[1], f[2]});
      }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::optional<BadConfigWitness> induces_bad_configuration(const MonomialIdeal& ideal,
                                                          const Monomial& f) {
  require_three_vars(ideal, "induces_bad_configuration");
  require_nonzero_equigenerated(ideal, "induces_bad_configuration");
  if (f.num_vars() != 3)
    throw std::invalid_argument("induces_bad_configuration: monomial variable count mismatch");
  const int d = ideal.degree();

  std::vector<Monomial> shadow = d_shadow(f, d);
  if (shadow.empty()) return std::nullopt;
  // Degree-d members of an equigenerated degree-d ideal are its generators,
  // so "shadow outside the ideal" is a membership test.
  for (const Monomial& m : shadow)
    if (ideal.contains(m)) return std::nullopt;

  BadConfigWitness w;
  w.inducer = f;
  w.shadow = std::move(shadow);
  Monomial* hits[3] = {&w.hit_x, &w.hit_y, &w.hit_z};
  for (int v = 0; v < 3; ++v) {
    const Monomial translated = f.times_var(v);
    bool found = false;
    // Generators are canonically sorted; the first divisor of f*x_v in the
    // generator list is the canonical representative of the shadow hit.
    for (const Monomial& g : ideal.generators())
      if (divides(g, translated)) {
        *hits[v] = g;
        found = true;
        break;
      }
    if (!found) return std::nullopt;
  }
  return w;
}

std::optional<BadConfigWitness> find_bad_configuration(const MonomialIdeal& ideal) {
  require_three_vars(ideal, "find_bad_configuration");
  require_nonzero_equigenerated(ideal, "find_bad_configuration");
  const int d = ideal.degree();
  for (const Monomial& f : socle_monomials(ideal)) {
    if (f.degree() < d) continue;
    auto witness = induces_bad_configuration(ideal, f);
    if (!witness)
      throw std::logic_error(
          "find_bad_configuration: socle monomial of degree >= d did not convert to a witness");
    return witness;  // socle list is canonically sorted, so this is smallest
  }
  return std::nullopt;
}

CriterionVerdict has_linear_resolution_criterion(const MonomialIdeal& ideal) {
  require_three_vars(ideal, "has_linear_resolution_criterion");
  require_nonzero_equigenerated(ideal, "has_linear_resolution_criterion");
  CriterionVerdict verdict;
  // Fixed evaluation order: connectivity first, then bad configurations.
  PresentationVerdict presentation = is_linearly_presented(ideal);
  verdict.linearly_presented = presentation.linearly_presented;
  if (!presentation.linearly_presented) {
    verdict.disconnected_pair = presentation.witness;
    return verdict;
  }
  if (auto bad = find_bad_configuration(ideal)) {
    verdict.bad_configuration = std::move(bad);
    return verdict;
  }
  verdict.linear_resolution = true;
  return verdict;
}

}  // namespace linres
