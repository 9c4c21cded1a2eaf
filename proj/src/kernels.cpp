#include "zlocal/kernels.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <random>

#include "zlocal/error.hpp"

namespace zlocal::kernels {

namespace {

using Coords = std::vector<std::uint32_t>;

// Walks b through all elements in id order while maintaining the product a*b incrementally:
// bumping digit k of b adds the k-th row of the left multiplication matrix of a.
class RowScanner {
 public:
  RowScanner(const FiniteRing& R, ElementId a)
      : R_(R), d_(R.dim()), digits_(d_, 0), prod_(d_, 0), weights_(d_, 1) {
    Coords ca(d_);
    R.decode(a, ca);
    rows_ = R.left_mul_matrix(ca);
    for (std::size_t l = d_; l-- > 1;) weights_[l - 1] = weights_[l] * R.orders()[l];
  }

  template <class Visit>
  void run(Visit&& visit) {
    const auto orders = R_.orders();
    const std::uint64_t n = R_.order();
    std::int64_t pid = 0;  // id of prod_, kept in step with it
    for (std::uint64_t b = 0; b < n; ++b) {
      if (!visit(static_cast<ElementId>(b), static_cast<ElementId>(pid))) return;
      for (std::size_t k = d_; k-- > 0;) {
        const std::uint32_t* row = rows_.data() + k * d_;
        for (std::size_t l = 0; l < d_; ++l) {
          if (row[l] == 0) continue;
          std::uint32_t s = prod_[l] + row[l];
          std::int64_t delta = row[l];
          if (s >= orders[l]) {
            s -= orders[l];
            delta -= orders[l];
          }
          prod_[l] = s;
          pid += delta * static_cast<std::int64_t>(weights_[l]);
        }
        if (++digits_[k] < orders[k]) break;
        digits_[k] = 0;  // wrapped: ord(e_k) * (a*e_k) = 0, so prod_ is consistent again
      }
    }
  }

 private:
  const FiniteRing& R_;
  std::size_t d_;
  Coords rows_;
  Coords digits_;
  Coords prod_;
  std::vector<std::uint64_t> weights_;
};

unsigned log2_ceil(std::uint64_t n) { return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1)); }

// Degree bound for nilpotency: a strictly descending chain of ideals halves |R| at each step.
unsigned nilpotency_bound(const FiniteRing& R) { return log2_ceil(R.order()) + 1; }

std::uint8_t nilpotency_of(const FiniteRing& R, ElementId a, unsigned bound) {
  const std::size_t d = R.dim();
  Coords ca(d), pw(d), tmp(d);
  R.decode(a, ca);
  pw = ca;
  for (unsigned k = 1; k <= bound; ++k) {
    if (R.id(std::span<const std::uint32_t>(pw)) == 0) return static_cast<std::uint8_t>(k);
    R.mul_into(pw, ca, tmp);
    pw.swap(tmp);
  }
  return 0;
}

// Smallest d with a^d in the additive span of 1, a, ..., a^{d-1}.
std::uint8_t span_minpoly_degree(const FiniteRing& R, ElementId a, std::vector<std::uint8_t>& in_span,
                                 std::vector<ElementId>& members) {
  const std::size_t d = R.dim();
  members.clear();
  members.push_back(0);
  in_span[0] = 1;
  Coords ca(d), pw(d), tmp(d);
  R.decode(a, ca);
  pw = R.one().coeffs;
  std::uint8_t result = 0;
  for (unsigned deg = 0;; ++deg) {
    const ElementId g = R.id(std::span<const std::uint32_t>(pw));
    if (in_span[g]) {
      result = static_cast<std::uint8_t>(deg);
      break;
    }
    // span += Z*g
    const std::size_t base = members.size();
    ElementId step = g;
    while (step != 0) {
      for (std::size_t i = 0; i < base; ++i) {
        const ElementId s = R.add_ids(members[i], step);
        if (!in_span[s]) {
          in_span[s] = 1;
          members.push_back(s);
        }
      }
      step = R.add_ids(step, g);
    }
    R.mul_into(pw, ca, tmp);
    pw.swap(tmp);
  }
  for (auto s : members) in_span[s] = 0;
  return result;
}

// Submodule of (Z/q)^d, q = p^e, kept in Howell form: row c has zeros before column c and a
// power of p at column c, and p^(e-v) * row c lies in the span of the later rows. Membership is
// then decided by greedy reduction.
class PrimePowerModule {
 public:
  PrimePowerModule(std::uint32_t p, std::uint32_t q, std::size_t d) : p_(p), q_(q), d_(d), rows_(d) {}

  void clear() {
    for (auto& r : rows_) r.clear();
  }

  bool contains(std::vector<std::uint64_t> x) const {
    reduce(x);
    return std::all_of(x.begin(), x.end(), [](std::uint64_t v) { return v == 0; });
  }

  /// Number of elements: every member is uniquely sum lambda_c * row_c with lambda_c < q / pivot_c.
  std::uint64_t size() const {
    std::uint64_t n = 1;
    for (std::size_t c = 0; c < d_; ++c) {
      if (!rows_[c].empty()) n *= q_ / rows_[c][c];
    }
    return n;
  }

  void insert(std::vector<std::uint64_t> x) {
    std::vector<std::vector<std::uint64_t>> pending{std::move(x)};
    while (!pending.empty()) {
      auto v = std::move(pending.back());
      pending.pop_back();
      for (std::size_t c = 0; c < d_; ++c) {
        if (v[c] == 0) continue;
        const std::uint64_t pv = p_power_part(v[c]);
        auto& row = rows_[c];
        if (!row.empty() && pv % row[c] == 0) {
          subtract(v, row, v[c] / row[c]);
          continue;
        }
        // v has a smaller valuation (or the column is free): normalise v to pivot pv.
        const std::uint64_t unit_inv = inverse(v[c] / pv);
        for (auto& e : v) e = e * unit_inv % q_;
        std::swap(row, v);
        pending.push_back(scaled(row, q_ / row[c]));
        if (!v.empty()) pending.push_back(std::move(v));
        break;
      }
    }
  }

 private:
  std::uint64_t p_power_part(std::uint64_t a) const {
    std::uint64_t pv = 1;
    while (a % p_ == 0) {
      a /= p_;
      pv *= p_;
    }
    return pv;
  }

  std::uint64_t inverse(std::uint64_t u) const {
    for (std::uint64_t t = 1; t < q_; ++t) {
      if (u * t % q_ == 1) return t;
    }
    throw InternalError("non-unit in prime power module");
  }

  std::vector<std::uint64_t> scaled(const std::vector<std::uint64_t>& r, std::uint64_t k) const {
    std::vector<std::uint64_t> out(d_);
    for (std::size_t i = 0; i < d_; ++i) out[i] = r[i] * k % q_;
    return out;
  }

  void subtract(std::vector<std::uint64_t>& v, const std::vector<std::uint64_t>& r, std::uint64_t k) const {
    for (std::size_t i = 0; i < d_; ++i) v[i] = (v[i] + q_ - r[i] * k % q_) % q_;
  }

  void reduce(std::vector<std::uint64_t>& v) const {
    for (std::size_t c = 0; c < d_; ++c) {
      if (v[c] == 0) continue;
      const auto& row = rows_[c];
      if (row.empty() || v[c] % row[c] != 0) return;
      subtract(v, row, v[c] / row[c]);
    }
  }

  std::uint64_t p_, q_;
  std::size_t d_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

// Smallest d with a^d in the Z-span of 1, a, ..., a^{d-1}, by elimination over Z/char. Requires
// the characteristic to be a prime power.
std::uint8_t module_minpoly_degree(const FiniteRing& R, ElementId a, PrimePowerModule& M) {
  const std::size_t d = R.dim();
  const std::uint32_t q = R.characteristic();
  const auto orders = R.orders();
  auto embed = [&](const Coords& c) {
    std::vector<std::uint64_t> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = std::uint64_t{c[i]} * (q / orders[i]);
    return v;
  };
  M.clear();
  Coords ca(d), pw(d), tmp(d);
  R.decode(a, ca);
  pw = R.one().coeffs;
  for (unsigned deg = 0;; ++deg) {
    auto v = embed(pw);
    if (M.contains(v)) return static_cast<std::uint8_t>(deg);
    M.insert(std::move(v));
    R.mul_into(pw, ca, tmp);
    pw.swap(tmp);
  }
}

std::optional<std::uint32_t> prime_of_power(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    if (q == 1) return p;
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<ElementId> add_table(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<ElementId> t(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    for (std::uint64_t b = 0; b < n; ++b) t[a * n + b] = R.add_ids(static_cast<ElementId>(a), static_cast<ElementId>(b));
  }
  return t;
}

std::vector<ElementId> mul_table(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<ElementId> t(n * n);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    RowScanner(R, static_cast<ElementId>(a)).run([&](ElementId b, ElementId ab) {
      t[a * n + b] = ab;
      return true;
    });
  }
  return t;
}

std::string triple_text(const FiniteRing& R, ElementId a, ElementId b, ElementId c) {
  return "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
}

void record(AxiomReport& rep, bool& flag, const std::string& law, const std::string& where) {
  if (!flag) return;
  flag = false;
  if (rep.witness.empty()) rep.witness = law + " fails at " + where;
}

AxiomReport::Mode mode_for(const FiniteRing& R) {
  if (R.order() <= kTriplesLimit) return AxiomReport::Mode::all_triples;
  if (R.order() <= kPairsLimit) return AxiomReport::Mode::pairs_times_basis;
  return AxiomReport::Mode::random_triples;
}

// Shared by both implementations above the pairs limit: fixed-seed random triples.
AxiomReport random_axioms(const FiniteRing& R) {
  AxiomReport rep;
  rep.mode = AxiomReport::Mode::random_triples;
  std::mt19937_64 rng(0x5eed2024u);
  std::uniform_int_distribution<std::uint64_t> pick(0, R.order() - 1);
  for (unsigned t = 0; t < kRandomTriples; ++t) {
    const RingElement a = R.element(static_cast<ElementId>(pick(rng)));
    const RingElement b = R.element(static_cast<ElementId>(pick(rng)));
    const RingElement c = R.element(static_cast<ElementId>(pick(rng)));
    const std::string where = "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")";
    if (R.mul(a, b) != R.mul(b, a)) record(rep, rep.commutative, "commutativity", where);
    if (R.mul(R.mul(a, b), c) != R.mul(a, R.mul(b, c))) record(rep, rep.associative, "associativity", where);
    if (R.mul(a, R.add(b, c)) != R.add(R.mul(a, b), R.mul(a, c))) {
      record(rep, rep.distributive, "distributivity", where);
    }
    if (R.mul(R.one(), a) != a) record(rep, rep.unital, "unit law", where);
    rep.checks += 4;
  }
  return rep;
}

}  // namespace

std::string to_string(AxiomReport::Mode mode) {
  switch (mode) {
    case AxiomReport::Mode::all_triples: return "all_triples";
    case AxiomReport::Mode::pairs_times_basis: return "pairs_times_basis";
    case AxiomReport::Mode::random_triples: return "random_triples";
  }
  return "?";
}

// ---------------------------------------------------------------------------------------------
// Serial reference

namespace serial {

UnitScan scan_units(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  UnitScan out{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  const RingElement one = R.one();
  const RingElement zero = R.zero();
  for (std::uint64_t a = 0; a < n; ++a) {
    const RingElement ea = R.element(static_cast<ElementId>(a));
    for (std::uint64_t b = 0; b < n; ++b) {
      const RingElement ab = R.mul(ea, R.element(static_cast<ElementId>(b)));
      if (ab == one) out.unit[a] = 1;
      if (ab == zero) {
        ++out.annihilator[a];
        if (b != 0) out.zero_divisor[a] = 1;
      }
    }
  }
  return out;
}

std::vector<std::uint8_t> nilpotency_index(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<std::uint8_t> out(n, 0);
  const unsigned bound = nilpotency_bound(R);
  for (std::uint64_t a = 0; a < n; ++a) {
    const RingElement ea = R.element(static_cast<ElementId>(a));
    RingElement pw = ea;
    for (unsigned k = 1; k <= bound; ++k) {
      if (pw == R.zero()) {
        out[a] = static_cast<std::uint8_t>(k);
        break;
      }
      pw = R.mul(pw, ea);
    }
  }
  return out;
}

AxiomReport check_axioms(const FiniteRing& R) {
  const auto mode = mode_for(R);
  if (mode == AxiomReport::Mode::random_triples) return random_axioms(R);
  AxiomReport rep;
  rep.mode = mode;
  const std::uint64_t n = R.order();
  std::vector<RingElement> thirds;
  if (mode == AxiomReport::Mode::all_triples) {
    for (std::uint64_t c = 0; c < n; ++c) thirds.push_back(R.element(static_cast<ElementId>(c)));
  } else {
    for (std::size_t k = 0; k < R.dim(); ++k) thirds.push_back(R.basis_element(k));
  }
  for (std::uint64_t ia = 0; ia < n; ++ia) {
    const RingElement a = R.element(static_cast<ElementId>(ia));
    if (R.mul(R.one(), a) != a) record(rep, rep.unital, "unit law", R.format(a));
    for (std::uint64_t ib = 0; ib < n; ++ib) {
      const RingElement b = R.element(static_cast<ElementId>(ib));
      const RingElement ab = R.mul(a, b);
      if (ab != R.mul(b, a)) record(rep, rep.commutative, "commutativity", "(" + R.format(a) + ", " + R.format(b) + ")");
      for (const auto& c : thirds) {
        if (R.mul(ab, c) != R.mul(a, R.mul(b, c))) {
          record(rep, rep.associative, "associativity", "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")");
        }
        if (R.mul(a, R.add(b, c)) != R.add(ab, R.mul(a, c))) {
          record(rep, rep.distributive, "distributivity", "(" + R.format(a) + ", " + R.format(b) + ", " + R.format(c) + ")");
        }
        rep.checks += 2;
      }
      rep.checks += 1;
    }
  }
  return rep;
}

std::vector<std::uint8_t> minpoly_degree(const FiniteRing& R) {
  // Brute force over monic polynomials with coefficients in Z_char, degree by degree.
  const std::uint64_t n = R.order();
  const std::uint32_t ch = R.characteristic();
  std::vector<std::uint8_t> out(n, 0);
  for (std::uint64_t ia = 0; ia < n; ++ia) {
    const RingElement a = R.element(static_cast<ElementId>(ia));
    std::vector<RingElement> powers{R.one()};
    for (unsigned deg = 1; out[ia] == 0; ++deg) {
      powers.push_back(R.mul(powers.back(), a));
      if (deg > R.dim() + 1) throw InternalError("minimal polynomial degree exceeds the basis bound");
      std::uint64_t candidates = 1;
      for (unsigned i = 0; i < deg; ++i) candidates *= ch;
      std::vector<std::uint32_t> c(deg, 0);
      for (std::uint64_t idx = 0; idx < candidates && out[ia] == 0; ++idx) {
        std::uint64_t rest = idx;
        for (unsigned i = 0; i < deg; ++i) {
          c[i] = static_cast<std::uint32_t>(rest % ch);
          rest /= ch;
        }
        RingElement v = powers[deg];
        for (unsigned i = 0; i < deg; ++i) v = R.add(v, R.scale(powers[i], c[i]));
        if (v == R.zero()) out[ia] = static_cast<std::uint8_t>(deg);
      }
    }
  }
  return out;
}

}  // namespace serial

// ---------------------------------------------------------------------------------------------
// OpenMP versions

namespace omp {

UnitScan scan_units(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  UnitScan out{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0), std::vector<std::uint32_t>(n, 0)};
  const ElementId one = R.one_id();
  if (const auto p = prime_of_power(R.characteristic())) {
    // |ann(a)| = |R| / |aR|, and aR is the subgroup generated by the rows a*e_j.
    const std::size_t d = R.dim();
    const std::uint32_t q = R.characteristic();
    const auto orders = R.orders();
#pragma omp parallel
    {
      PrimePowerModule M(*p, q, d);
      Coords ca(d);
#pragma omp for schedule(dynamic, 16)
      for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
        M.clear();
        R.decode(static_cast<ElementId>(a), ca);
        const Coords rows = R.left_mul_matrix(ca);
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<std::uint64_t> v(d);
          for (std::size_t l = 0; l < d; ++l) v[l] = std::uint64_t{rows[j * d + l]} * (q / orders[l]);
          M.insert(std::move(v));
        }
        const std::uint64_t ann = n / M.size();
        out.unit[a] = ann == 1;
        out.zero_divisor[a] = ann > 1;
        out.annihilator[a] = static_cast<std::uint32_t>(ann);
      }
    }
    return out;
  }
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    std::uint8_t unit = 0, zd = 0;
    std::uint32_t ann = 0;
    RowScanner(R, static_cast<ElementId>(a)).run([&](ElementId b, ElementId ab) {
      if (ab == one) unit = 1;
      if (ab == 0) {
        ++ann;
        if (b != 0) zd = 1;
      }
      return true;
    });
    out.unit[a] = unit;
    out.zero_divisor[a] = zd;
    out.annihilator[a] = ann;
  }
  return out;
}

std::vector<std::uint8_t> nilpotency_index(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<std::uint8_t> out(n, 0);
  const unsigned bound = nilpotency_bound(R);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    out[a] = nilpotency_of(R, static_cast<ElementId>(a), bound);
  }
  return out;
}

AxiomReport check_axioms(const FiniteRing& R) {
  const auto mode = mode_for(R);
  if (mode == AxiomReport::Mode::random_triples) return random_axioms(R);
  AxiomReport rep;
  rep.mode = mode;
  const std::uint64_t n = R.order();
  const std::size_t d = R.dim();
  const std::vector<ElementId> mul = mul_table(R);
  const std::vector<ElementId> add = mode == AxiomReport::Mode::all_triples ? add_table(R) : std::vector<ElementId>{};
  std::vector<ElementId> thirds;
  if (mode == AxiomReport::Mode::all_triples) {
    for (std::uint64_t c = 0; c < n; ++c) thirds.push_back(static_cast<ElementId>(c));
  } else {
    for (std::size_t k = 0; k < d; ++k) thirds.push_back(R.id(R.basis_element(k)));
  }
  // Without a full addition table, sums are formed from cached coordinates, avoiding the
  // divisions of a decode per call.
  std::vector<std::uint32_t> digits;
  std::vector<std::uint64_t> weights(d, 1);
  if (add.empty()) {
    digits.resize(n * d);
    for (std::uint64_t e = 0; e < n; ++e) R.decode(static_cast<ElementId>(e), std::span(digits.data() + e * d, d));
    for (std::size_t l = d; l-- > 1;) weights[l - 1] = weights[l] * R.orders()[l];
  }
  const auto orders = R.orders();
  auto sum = [&](ElementId x, ElementId y) {
    if (!add.empty()) return add[std::uint64_t{x} * n + y];
    const std::uint32_t* dx = digits.data() + std::uint64_t{x} * d;
    const std::uint32_t* dy = digits.data() + std::uint64_t{y} * d;
    std::uint64_t id = 0;
    for (std::size_t l = 0; l < d; ++l) {
      std::uint32_t s = dx[l] + dy[l];
      if (s >= orders[l]) s -= orders[l];
      id += s * weights[l];
    }
    return static_cast<ElementId>(id);
  };

  // With c ranging over the basis, x*e_k and x+e_k are tabulated per element so the inner loop
  // stays inside small tables instead of striding across the full product table.
  const bool basis_mode = mode == AxiomReport::Mode::pairs_times_basis;
  std::vector<ElementId> times_basis, plus_basis;
  if (basis_mode) {
    times_basis.resize(n * d);
    plus_basis.resize(n * d);
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::size_t k = 0; k < d; ++k) {
        times_basis[x * d + k] = mul[x * n + thirds[k]];
        plus_basis[x * d + k] = sum(static_cast<ElementId>(x), thirds[k]);
      }
    }
  }

  // Each a gets its own first-failure slot so the reported witness does not depend on scheduling.
  std::vector<std::string> first(n);
  std::vector<std::uint8_t> fail_bits(n, 0);
  std::uint64_t checks = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : checks)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    const ElementId* row_a = mul.data() + a * n;
    std::uint8_t bits = 0;
    auto note = [&](std::uint8_t bit, const std::string& law, ElementId b, ElementId c) {
      if (!(bits & bit) && first[a].empty()) first[a] = law + " fails at " + triple_text(R, static_cast<ElementId>(a), b, c);
      bits |= bit;
    };
    if (row_a[R.one_id()] != static_cast<ElementId>(a)) note(8, "unit law", R.one_id(), 0);
    for (std::uint64_t b = 0; b < n; ++b) {
      const ElementId ab = row_a[b];
      const ElementId* row_b = mul.data() + b * n;
      if (ab != row_b[a]) note(1, "commutativity", static_cast<ElementId>(b), 0);
      if (basis_mode) {
        const ElementId* b_times = times_basis.data() + b * d;
        const ElementId* ab_times = times_basis.data() + std::uint64_t{ab} * d;
        const ElementId* b_plus = plus_basis.data() + b * d;
        for (std::size_t k = 0; k < d; ++k) {
          if (ab_times[k] != row_a[b_times[k]]) note(2, "associativity", static_cast<ElementId>(b), thirds[k]);
          if (row_a[b_plus[k]] != sum(ab, row_a[thirds[k]])) {
            note(4, "distributivity", static_cast<ElementId>(b), thirds[k]);
          }
        }
      } else {
        const ElementId* row_ab = mul.data() + std::uint64_t{ab} * n;
        for (ElementId c : thirds) {
          if (row_ab[c] != row_a[row_b[c]]) note(2, "associativity", static_cast<ElementId>(b), c);
          if (row_a[sum(static_cast<ElementId>(b), c)] != sum(ab, row_a[c])) {
            note(4, "distributivity", static_cast<ElementId>(b), c);
          }
        }
      }
      checks += 1 + 2 * thirds.size();
    }
    fail_bits[a] = bits;
  }
  rep.checks = checks;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (fail_bits[a] & 1) rep.commutative = false;
    if (fail_bits[a] & 2) rep.associative = false;
    if (fail_bits[a] & 4) rep.distributive = false;
    if (fail_bits[a] & 8) rep.unital = false;
    if (rep.witness.empty() && !first[a].empty()) rep.witness = first[a];
  }
  return rep;
}

std::vector<std::uint8_t> minpoly_degree(const FiniteRing& R) {
  const std::uint64_t n = R.order();
  std::vector<std::uint8_t> out(n, 0);
  const auto p = prime_of_power(R.characteristic());
#pragma omp parallel
  {
    std::vector<std::uint8_t> in_span(p ? 0 : n, 0);
    std::vector<ElementId> members;
    PrimePowerModule M(p.value_or(2), R.characteristic(), R.dim());
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
      out[a] = p ? module_minpoly_degree(R, static_cast<ElementId>(a), M)
                 : span_minpoly_degree(R, static_cast<ElementId>(a), in_span, members);
    }
  }
  return out;
}

}  // namespace omp

}  // namespace zlocal::kernels
