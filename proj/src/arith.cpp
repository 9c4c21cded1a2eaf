#include "zlocal/arith.hpp"

#include <algorithm>

#include "zlocal/error.hpp"
#include "zlocal/expr.hpp"

namespace zlocal {

namespace {

constexpr std::uint64_t kTrialDivisionBudget = 20'000'000;
constexpr std::uint64_t kEnumerationBudget = 1'000'000;

std::uint32_t reduce(std::int64_t v, std::uint32_t m) {
  std::int64_t r = v % static_cast<std::int64_t>(m);
  return static_cast<std::uint32_t>(r < 0 ? r + m : r);
}

void require_same_modulus(const ModPoly& a, const ModPoly& b) {
  if (a.modulus() != b.modulus()) {
    throw DomainError("polynomial moduli differ: " + std::to_string(a.modulus()) + " vs " +
                      std::to_string(b.modulus()));
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<std::uint32_t> prime_of_modulus(std::uint32_t modulus) {
  if (is_prime(modulus)) return modulus;
  for (std::uint32_t p = 2; p * p <= modulus; ++p) {
    if (p * p == modulus && is_prime(p)) return p;
  }
  return std::nullopt;
}

ModPoly::ModPoly(std::uint32_t modulus) : modulus_(modulus) {
  if (modulus < 2) throw DomainError("polynomial modulus must be at least 2");
}

ModPoly::ModPoly(std::uint32_t modulus, std::vector<std::int64_t> coeffs) : ModPoly(modulus) {
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(reduce(c, modulus));
  normalize();
}

ModPoly ModPoly::constant(std::uint32_t modulus, std::int64_t c) { return ModPoly(modulus, {c}); }

ModPoly ModPoly::monomial(std::uint32_t modulus, unsigned degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return ModPoly(modulus, std::move(v));
}

void ModPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<unsigned> ModPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

ModPoly::Coeff ModPoly::eval(std::int64_t at) const {
  std::uint64_t x = reduce(at, modulus_);
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % modulus_;
  return static_cast<Coeff>(acc);
}

std::string ModPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    Coeff c = coeffs_[k];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || k == 0) out += std::to_string(c);
    if (k >= 1) out += var;
    if (k >= 2) out += '^' + std::to_string(k);
  }
  return out;
}

std::strong_ordering operator<=>(const ModPoly& a, const ModPoly& b) {
  if (auto c = a.modulus_ <=> b.modulus_; c != 0) return c;
  if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (auto c = a.coeffs_[k] <=> b.coeffs_[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

ModPoly operator+(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::int64_t{a.coeff(i)} + b.coeff(i);
  return ModPoly(a.modulus_, std::move(v));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::int64_t{a.coeff(i)} - b.coeff(i);
  return ModPoly(a.modulus_, std::move(v));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  require_same_modulus(a, b);
  if (a.is_zero() || b.is_zero()) return ModPoly(a.modulus_);
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  const std::int64_t m = a.modulus_;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      v[i + j] = (v[i + j] + std::int64_t{a.coeffs_[i]} * b.coeffs_[j]) % m;
    }
  }
  return ModPoly(a.modulus_, std::move(v));
}

ModPoly ModPoly::operator-() const { return ModPoly(modulus_) - *this; }

ModPoly poly_arith(const ModPoly& a, const ModPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw DomainError("unknown polynomial operation");
}

std::pair<ModPoly, ModPoly> poly_divmod(const ModPoly& a, const ModPoly& d) {
  require_same_modulus(a, d);
  if (!d.is_monic()) throw DomainError("divisor " + d.to_string() + " is not monic");
  const std::int64_t m = a.modulus();
  const std::size_t dd = d.coeffs().size() - 1;
  std::vector<std::int64_t> rem(a.coeffs().begin(), a.coeffs().end());
  if (rem.size() <= dd) return {ModPoly(a.modulus()), a};
  std::vector<std::int64_t> quot(rem.size() - dd, 0);
  for (std::size_t k = rem.size(); k-- > dd;) {
    std::int64_t lead = ((rem[k] % m) + m) % m;
    if (lead == 0) continue;
    quot[k - dd] = lead;
    for (std::size_t i = 0; i <= dd; ++i) {
      rem[k - dd + i] = (rem[k - dd + i] - lead * d.coeffs()[i]) % m;
    }
  }
  rem.resize(dd);
  return {ModPoly(a.modulus(), std::move(quot)), ModPoly(a.modulus(), std::move(rem))};
}

ModPoly reduce_mod_p(const ModPoly& a) {
  auto p = prime_of_modulus(a.modulus());
  if (!p || *p == a.modulus()) {
    throw DomainError("reduce_mod_p expects modulus p^2, got " + std::to_string(a.modulus()));
  }
  std::vector<std::int64_t> v(a.coeffs().begin(), a.coeffs().end());
  return ModPoly(*p, std::move(v));
}

bool congruent_mod_p(const ModPoly& a, const ModPoly& b) { return reduce_mod_p(a - b).is_zero(); }

ModPoly lift_to_p2(const ModPoly& a) {
  if (!is_prime(a.modulus())) throw DomainError("lift_to_p2 expects a prime modulus");
  std::vector<std::int64_t> v(a.coeffs().begin(), a.coeffs().end());
  return ModPoly(a.modulus() * a.modulus(), std::move(v));
}

std::vector<ModPoly> enumerate_monic(std::uint32_t modulus, unsigned n) {
  const std::uint64_t count = ipow(modulus, n);
  if (count > kEnumerationBudget) {
    throw ResourceError("monic polynomial enumeration over Z_" + std::to_string(modulus) +
                        " of degree " + std::to_string(n) + " exceeds the enumeration bound");
  }
  std::vector<ModPoly> out;
  out.reserve(count);
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (unsigned k = 0; k < n; ++k) {
      c[k] = static_cast<std::int64_t>(rest % modulus);
      rest /= modulus;
    }
    out.emplace_back(modulus, c);
  }
  return out;
}

bool is_irreducible(const ModPoly& a) {
  if (!is_prime(a.modulus())) throw DomainError("irreducibility test needs a prime modulus");
  if (!a.is_monic()) throw DomainError("irreducibility test needs a monic polynomial");
  const unsigned n = *a.degree();
  if (n == 0) throw DomainError("irreducibility test needs degree at least 1");
  std::uint64_t work = 0;
  for (unsigned k = 1; k <= n / 2; ++k) work += ipow(a.modulus(), k);
  if (work > kTrialDivisionBudget) {
    throw ResourceError("trial division for " + a.to_string() + " over Z_" + std::to_string(a.modulus()) +
                        " exceeds the search bound");
  }
  for (unsigned k = 1; k <= n / 2; ++k) {
    for (const auto& d : enumerate_monic(a.modulus(), k)) {
      if (poly_divmod(a, d).second.is_zero()) return false;
    }
  }
  return true;
}

std::vector<ModPoly> enumerate_monic_irreducibles(std::uint32_t p, unsigned n) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("degree must be at least 1");
  if (p > kMaxPrime || n > kMaxDegree) {
    throw ResourceError("irreducible enumeration is capped at p <= 97 and degree <= 8");
  }
  std::vector<ModPoly> out;
  for (auto& f : enumerate_monic(p, n)) {
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<ModPoly> enumerate_lifts(const ModPoly& g_bar) {
  if (!is_prime(g_bar.modulus()) || !g_bar.is_monic()) {
    throw DomainError("lifts are defined for monic polynomials over a prime field");
  }
  const std::uint32_t p = g_bar.modulus();
  const unsigned n = *g_bar.degree();
  ModPoly base = lift_to_p2(g_bar);
  std::vector<ModPoly> out;
  if (n == 0) return {base};
  ModPoly p_const = ModPoly::constant(p * p, p);
  for (const auto& h : enumerate_monic(p, n)) {
    // h is monic of degree n; drop the leading term to get an arbitrary tail of degree < n.
    std::vector<std::int64_t> tail(h.coeffs().begin(), h.coeffs().end() - 1);
    out.push_back(base + p_const * ModPoly(p * p, tail));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ModPoly parse_poly(std::string_view text, std::uint32_t modulus, char var) {
  std::vector<std::int64_t> c;
  for (const auto& term : expr::parse(text)) {
    unsigned deg = 0;
    for (const auto& f : term.factors) {
      if (f.name.size() != 1 || f.name[0] != var) {
        throw ValidationError("polynomial \"" + std::string(text) + "\" uses unknown variable " + f.name);
      }
      deg += f.power;
    }
    if (deg > 64) throw ValidationError("polynomial degree too large in \"" + std::string(text) + "\"");
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] = (c[deg] + term.coeff % modulus) % static_cast<std::int64_t>(modulus);
  }
  return ModPoly(modulus, std::move(c));
}

}  // namespace zlocal
