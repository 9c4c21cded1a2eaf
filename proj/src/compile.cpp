#include "zlocal/compile.hpp"

#include "zlocal/error.hpp"

namespace zlocal {

namespace {

// Z_M[x, y1..ym] modulo g (or g^2 with g = sum v_i y_i), y_s*y_t and p*y_r.
struct PolyQuotient {
  std::uint32_t p;
  std::uint32_t modulus;   // additive order of the pure x^a part
  ModPoly g;               // monic over Z_modulus
  unsigned m;
  std::vector<ModPoly> v;  // over Z_modulus; empty unless g is nilpotent
  bool g_nilpotent;
  char var;
};

std::string monomial_label(char var, unsigned a, unsigned y) {
  std::string s;
  if (a == 1) s = std::string(1, var);
  if (a >= 2) s = std::string(1, var) + "^" + std::to_string(a);
  if (y > 0) {
    if (!s.empty()) s += '*';
    s += "y" + std::to_string(y);
  }
  return s.empty() ? "1" : s;
}

FiniteRing build(const PolyQuotient& q, const RingPresentation& pres) {
  const unsigned n = *q.g.degree();
  const std::size_t d = std::size_t{n} * (q.m + 1);
  auto index = [n](unsigned a, unsigned y) { return std::size_t{y} * n + a; };

  std::vector<std::string> labels(d);
  std::vector<std::uint32_t> orders(d);
  for (unsigned y = 0; y <= q.m; ++y) {
    for (unsigned a = 0; a < n; ++a) {
      labels[index(a, y)] = monomial_label(q.var, a, y);
      orders[index(a, y)] = y == 0 ? q.modulus : q.p;
    }
  }

  // Normal forms of x^k and x^k*y for every exponent a product of basis monomials can reach.
  const unsigned top = 2 * n - 1;
  std::vector<std::vector<std::uint32_t>> pure(top, std::vector<std::uint32_t>(d, 0));
  std::vector<ModPoly> tail_mod_p;  // x^k mod g, coefficients read mod p, for the y-parts
  for (unsigned k = 0; k < top; ++k) {
    auto [quot, rem] = poly_divmod(ModPoly::monomial(q.modulus, k), q.g);
    for (unsigned a = 0; a < n; ++a) pure[k][index(a, 0)] = rem.coeff(a);
    if (q.g_nilpotent) {
      // quot*g = (quot mod g)*g since g^2 = 0, and g = sum v_i*y_i.
      const ModPoly q0 = poly_divmod(quot, q.g).second;
      for (unsigned i = 1; i <= q.m; ++i) {
        const ModPoly w = poly_divmod(q0 * q.v[i - 1], q.g).second;
        for (unsigned a = 0; a < n; ++a) pure[k][index(a, i)] = w.coeff(a) % q.p;
      }
    }
    tail_mod_p.push_back(rem);
  }

  StructureConstants mult(d, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(d, 0)));
  for (unsigned yi = 0; yi <= q.m; ++yi) {
    for (unsigned a = 0; a < n; ++a) {
      for (unsigned yj = 0; yj <= q.m; ++yj) {
        for (unsigned b = 0; b < n; ++b) {
          auto& out = mult[index(a, yi)][index(b, yj)];
          if (yi > 0 && yj > 0) continue;  // y_s*y_t = 0
          const unsigned k = a + b;
          const unsigned y = yi + yj;
          if (y == 0) {
            out = pure[k];
          } else {
            // x^k*y = (x^k mod g)*y, and p*y = 0.
            for (unsigned c = 0; c < n; ++c) out[index(c, y)] = tail_mod_p[k].coeff(c) % q.p;
          }
        }
      }
    }
  }
  return FiniteRing(std::move(labels), std::move(orders), mult, index(0, 0), pres);
}

FiniteRing build_f0(const RingPresentation& pres) {
  const unsigned k = pres.n_vars();
  const std::size_t d = std::size_t{1} << k;
  std::vector<std::string> labels(d);
  for (std::size_t mask = 0; mask < d; ++mask) {
    std::string s;
    for (unsigned i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) {
        if (!s.empty()) s += '*';
        s += "x" + std::to_string(i + 1);
      }
    }
    labels[mask] = s.empty() ? "1" : s;
  }
  std::vector<std::uint32_t> orders(d, pres.base());
  StructureConstants mult(d, std::vector<std::vector<std::uint32_t>>(d, std::vector<std::uint32_t>(d, 0)));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      if ((a & b) == 0) mult[a][b][a | b] = 1;  // x_i^2 = 0
    }
  }
  return FiniteRing(std::move(labels), std::move(orders), mult, 0, pres);
}

PolyQuotient shape_of(const RingPresentation& pres) {
  const std::uint32_t p = pres.p();
  const ModPoly& g = *pres.g();
  switch (pres.family()) {
    case Family::F1: return {p, p, g, pres.m(), {}, false, 't'};
    case Family::F2: return {p, p, g, pres.m(), pres.v(), true, 'x'};
    case Family::F3:
    case Family::F4: {
      const bool nilpotent = pres.family() == Family::F4;
      if (pres.variant() == Variant::as_printed && reduce_mod_p(g).coeff(0) != 0) {
        std::vector<ModPoly> v_bar;
        for (const auto& vi : pres.v()) v_bar.push_back(reduce_mod_p(vi));
        return {p, p, reduce_mod_p(g), pres.m(), std::move(v_bar), nilpotent, 'x'};
      }
      // Otherwise g-bar = x, so x ∈ pZ_{p^2} and p*x = 0 already holds in the corrected ring.
      return {p, p * p, g, pres.m(), pres.v(), nilpotent, 'x'};
    }
    case Family::F0: break;
  }
  throw InternalError("no polynomial quotient shape for F0");
}

}  // namespace

FiniteRing compile(const RingPresentation& pres) {
  if (pres.expected_order() > kMaxRingOrder) throw ResourceError("ring order exceeds 2^20");
  try {
    FiniteRing R = pres.family() == Family::F0 ? build_f0(pres) : build(shape_of(pres), pres);
    if (R.order() != pres.expected_order()) {
      throw InternalError("compiled order " + std::to_string(R.order()) + " differs from the family formula " +
                          std::to_string(pres.expected_order()));
    }
    return R;
  } catch (const ValidationError& e) {
    throw InternalError(std::string("reduction rules for ") + pres.key() + " are inconsistent: " + e.what());
  }
}

}  // namespace zlocal
