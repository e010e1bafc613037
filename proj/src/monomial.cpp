#include "linres/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace linres {

namespace {

[[noreturn]] void usage_error(const std::string& msg) { throw std::invalid_argument(msg); }

int checked_add(int a, int b, const char* what) {
  int out = 0;
  if (__builtin_add_overflow(a, b, &out)) usage_error(std::string(what) + ": exponent overflow");
  return out;
}

void require_same_vars(const Monomial& a, const Monomial& b, const char* what) {
  if (a.num_vars() != b.num_vars())
    usage_error(std::string(what) + ": operands live in different variable counts");
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
  long long deg = 0;
  for (int e : exps_) {
    if (e < 0) usage_error("Monomial: negative exponent");
    deg += e;
  }
  if (deg > std::numeric_limits<int>::max()) usage_error("Monomial: degree overflow");
  degree_ = static_cast<int>(deg);
}

Monomial Monomial::one(int num_vars) {
  if (num_vars < 1) usage_error("Monomial::one: need at least one variable");
  return Monomial(std::vector<int>(static_cast<std::size_t>(num_vars), 0));
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  require_same_vars(*this, rhs, "Monomial::operator*");
  std::vector<int> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    out[i] = checked_add(exps_[i], rhs.exps_[i], "Monomial::operator*");
  return Monomial(std::move(out));
}

Monomial Monomial::quotient_by(const Monomial& g) const {
  require_same_vars(*this, g, "Monomial::quotient_by");
  std::vector<int> out(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (g.exps_[i] > exps_[i]) usage_error("Monomial::quotient_by: divisor does not divide");
    out[i] = exps_[i] - g.exps_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::times_var(int var, int delta) const {
  if (var < 0 || var >= num_vars()) usage_error("Monomial::times_var: variable out of range");
  std::vector<int> out = exps_;
  out[static_cast<std::size_t>(var)] =
      checked_add(out[static_cast<std::size_t>(var)], delta, "Monomial::times_var");
  if (out[static_cast<std::size_t>(var)] < 0)
    usage_error("Monomial::times_var: negative exponent");
  return Monomial(std::move(out));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "lcm");
  std::vector<int> out(a.exponents().begin(), a.exponents().end());
  for (int i = 0; i < b.num_vars(); ++i) out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], b.exponent(i));
  return Monomial(std::move(out));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "gcd");
  std::vector<int> out(a.exponents().begin(), a.exponents().end());
  for (int i = 0; i < b.num_vars(); ++i) out[static_cast<std::size_t>(i)] = std::min(out[static_cast<std::size_t>(i)], b.exponent(i));
  return Monomial(std::move(out));
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_vars(a, b, "divides");
  for (int i = 0; i < a.num_vars(); ++i)
    if (a.exponent(i) > b.exponent(i)) return false;
  return true;
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Same degree: the monomial with more of the earliest differing variable
  // comes first (x^d leads its degree block).
  const int n = std::min(a.num_vars(), b.num_vars());
  for (int i = 0; i < n; ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  return a.num_vars() < b.num_vars();
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1) usage_error("monomials_of_degree: need at least one variable");
  if (d < 0) usage_error("monomials_of_degree: negative degree");
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(n), 0);
  // Descending choice per variable emits canonical order directly.
  auto rec = [&](auto&& self, int var, int remaining) -> void {
    if (var == n - 1) {
      exps[static_cast<std::size_t>(var)] = remaining;
      out.emplace_back(exps);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[static_cast<std::size_t>(var)] = e;
      self(self, var + 1, remaining - e);
    }
    exps[static_cast<std::size_t>(var)] = 0;
  };
  rec(rec, 0, d);
  return out;
}

const kernels::PackedExponents& packed_monomials_of_degree(int n, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<kernels::PackedExponents>> cache;
  std::scoped_lock lock(mu);
  auto& slot = cache[{n, d}];
  if (!slot) {
    auto packed = std::make_unique<kernels::PackedExponents>(n);
    auto monos = monomials_of_degree(n, d);
    packed->reserve_rows(static_cast<int>(monos.size()));
    for (const Monomial& m : monos) packed->push_row(m.exponents());
    slot = std::move(packed);
  }
  return *slot;
}

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<Monomial> sorted_minimal)
    : num_vars_(num_vars), gens_(std::move(sorted_minimal)), packed_(num_vars) {
  packed_.reserve_rows(static_cast<int>(gens_.size()));
  for (const Monomial& g : gens_) packed_.push_row(g.exponents());
}

MonomialIdeal MonomialIdeal::minimalize(int num_vars, std::vector<Monomial> generators) {
  if (num_vars < 1) usage_error("MonomialIdeal: need at least one variable");
  for (const Monomial& g : generators)
    if (g.num_vars() != num_vars) usage_error("MonomialIdeal: generator variable count mismatch");
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<Monomial> kept;
  kept.reserve(generators.size());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    // Canonical order puts potential divisors (lower degree) earlier, but a
    // full pass keeps the check independent of that detail.
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
      redundant = i != j && divides(generators[j], generators[i]);
    if (!redundant) kept.push_back(generators[i]);
  }
  return MonomialIdeal(num_vars, std::move(kept));
}

MonomialIdeal MonomialIdeal::from_minimal_sorted(int num_vars, std::vector<Monomial> generators) {
#ifndef NDEBUG
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (i + 1 < generators.size() && !canonical_less(generators[i], generators[i + 1]))
      throw std::logic_error("from_minimal_sorted: generators not in canonical order");
    for (std::size_t j = 0; j < generators.size(); ++j)
      if (i != j && divides(generators[j], generators[i]))
        throw std::logic_error("from_minimal_sorted: generator set not minimal");
  }
#endif
  if (num_vars < 1) usage_error("MonomialIdeal: need at least one variable");
  return MonomialIdeal(num_vars, std::move(generators));
}

bool MonomialIdeal::is_equigenerated() const {
  for (const Monomial& g : gens_)
    if (g.degree() != gens_.front().degree()) return false;
  return true;
}

int MonomialIdeal::degree() const {
  if (is_zero()) usage_error("MonomialIdeal::degree: zero ideal has no generation degree");
  if (!is_equigenerated()) usage_error("MonomialIdeal::degree: ideal is not equigenerated");
  return gens_.front().degree();
}

int MonomialIdeal::max_generator_degree() const {
  if (is_zero()) usage_error("MonomialIdeal::max_generator_degree: zero ideal");
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.num_vars() != num_vars_) usage_error("MonomialIdeal::contains: variable count mismatch");
  return kernels::any_row_divides(packed_, m.exponents());
}

bool MonomialIdeal::contains_exponents(std::span<const int> exponents) const {
  if (static_cast<int>(exponents.size()) != num_vars_)
    usage_error("MonomialIdeal::contains_exponents: variable count mismatch");
  return kernels::any_row_divides(packed_, exponents);
}

Monomial MonomialIdeal::generator_lcm() const {
  if (is_zero()) usage_error("MonomialIdeal::generator_lcm: zero ideal");
  Monomial acc = gens_.front();
  for (std::size_t i = 1; i < gens_.size(); ++i) acc = lcm(acc, gens_[i]);
  return acc;
}

MonomialIdeal power(const MonomialIdeal& ideal, int k) {
  if (k < 1) usage_error("power: exponent must be at least 1");
  if (ideal.is_zero()) usage_error("power: zero ideal");
  std::vector<Monomial> products;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start, int remaining, const Monomial& acc) -> void {
    if (remaining == 0) {
      products.push_back(acc);
      return;
    }
    for (int i = start; i < ideal.num_generators(); ++i)
      self(self, i, remaining - 1, acc * ideal.generator(i));
  };
  rec(rec, 0, k, Monomial::one(ideal.num_vars()));
  return MonomialIdeal::minimalize(ideal.num_vars(), std::move(products));
}

MonomialIdeal max_ideal_power(int n, int d) {
  if (d < 1) usage_error("max_ideal_power: degree must be at least 1");
  return MonomialIdeal::from_minimal_sorted(n, monomials_of_degree(n, d));
}

// --- text form ---------------------------------------------------------

namespace {

const char kLetterNames[3] = {'x', 'y', 'z'};

std::string var_name(int var, int num_vars) {
  if (num_vars == 3) return std::string(1, kLetterNames[var]);
  return "x" + std::to_string(var + 1);
}

constexpr int kMaxParsedExponent = 1000000;

struct MonomialParser {
  std::string_view text;
  std::size_t pos = 0;
  int num_vars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  int parse_number(const char* what) {
    skip_ws();
    if (pos == text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      usage_error(std::string(what) + " expected in '" + std::string(text) + "'");
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > kMaxParsedExponent) usage_error(std::string(what) + " too large");
      ++pos;
    }
    return static_cast<int>(value);
  }

  // Returns the variable index, or -1 when the next token is not a variable.
  int parse_variable() {
    skip_ws();
    if (pos == text.size()) return -1;
    char c = text[pos];
    if (num_vars == 3) {
      for (int v = 0; v < 3; ++v)
        if (c == kLetterNames[v]) {
          ++pos;
          return v;
        }
      return -1;
    }
    if (c != 'x') return -1;
    ++pos;
    int index = parse_number("variable index");
    if (index < 1 || index > num_vars)
      usage_error("variable index out of range in '" + std::string(text) + "'");
    return index - 1;
  }
};

}  // namespace

Monomial parse_monomial(std::string_view text, int num_vars) {
  if (num_vars < 1) usage_error("parse_monomial: need at least one variable");
  MonomialParser in{text, 0, num_vars};
  std::vector<int> exps(static_cast<std::size_t>(num_vars), 0);
  std::vector<bool> seen(static_cast<std::size_t>(num_vars), false);
  bool any = false;
  while (!in.at_end()) {
    if (any) {
      in.skip_ws();
      if (in.pos < in.text.size() && in.text[in.pos] == '*') ++in.pos;
    }
    if (in.at_end()) break;
    int var = in.parse_variable();
    if (var < 0) usage_error("unexpected character in monomial '" + std::string(text) + "'");
    if (seen[static_cast<std::size_t>(var)])
      usage_error("repeated variable in monomial '" + std::string(text) + "'");
    seen[static_cast<std::size_t>(var)] = true;
    int exp = 1;
    in.skip_ws();
    if (in.pos < in.text.size() && in.text[in.pos] == '^') {
      ++in.pos;
      exp = in.parse_number("exponent");
      if (exp < 1) usage_error("exponent must be positive in '" + std::string(text) + "'");
    }
    exps[static_cast<std::size_t>(var)] = exp;
    any = true;
  }
  if (!any) usage_error("empty monomial in '" + std::string(text) + "'");
  return Monomial(std::move(exps));
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  bool first = true;
  for (int v = 0; v < m.num_vars(); ++v) {
    int e = m.exponent(v);
    if (e == 0) continue;
    if (!first && m.num_vars() != 3) out += '*';
    out += var_name(v, m.num_vars());
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
    first = false;
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  std::string out;
  for (int i = 0; i < ideal.num_generators(); ++i) {
    if (i > 0) out += ", ";
    out += format_monomial(ideal.generator(i));
  }
  return out;
}

ParsedIdeal parse_ideal(std::string_view text, int num_vars) {
  std::vector<std::string> pieces;
  std::string current;
  for (char c : text) {
    if (c == ',' || c == '\n') {
      pieces.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  pieces.push_back(current);

  std::vector<std::string_view> terms;
  for (const std::string& piece : pieces) {
    std::string_view sv = piece;
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
    if (!sv.empty()) terms.push_back(piece);
  }
  if (terms.empty()) usage_error("parse_ideal: no monomials given");

  // Style detection: an 'x' immediately followed by a digit selects the
  // indexed alphabet; otherwise letters (n = 3).
  bool indexed = false;
  int max_index = 0;
  for (std::string_view t : terms) {
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      if (t[i] == 'x' && std::isdigit(static_cast<unsigned char>(t[i + 1]))) {
        indexed = true;
        int idx = 0;
        std::size_t j = i + 1;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) {
          idx = idx * 10 + (t[j] - '0');
          if (idx > 1024) usage_error("parse_ideal: variable index too large");
          ++j;
        }
        max_index = std::max(max_index, idx);
      }
    }
  }

  int n = num_vars;
  if (indexed) {
    if (n == 0) n = max_index;
    if (n < max_index) usage_error("parse_ideal: variable index exceeds requested num_vars");
    if (n == 3) usage_error("parse_ideal: indexed variables clash with the x/y/z alphabet at n = 3");
  } else {
    if (n == 0) n = 3;
    if (n != 3) usage_error("parse_ideal: letter variables imply 3 variables");
  }

  std::vector<Monomial> gens;
  gens.reserve(terms.size());
  for (std::string_view t : terms) gens.push_back(parse_monomial(t, n));

  ParsedIdeal out;
  std::sort(gens.begin(), gens.end(), canonical_less);
  auto dup = std::unique(gens.begin(), gens.end());
  if (dup != gens.end()) out.warnings.push_back("duplicate monomials collapsed");
  gens.erase(dup, gens.end());
  const auto unique_count = static_cast<int>(gens.size());
  out.ideal = MonomialIdeal::minimalize(n, std::move(gens));
  if (out.ideal.num_generators() < unique_count)
    out.warnings.push_back("input was not a minimal generating set; redundant generators removed");
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << format_monomial(m); }

}  // namespace linres
