#include "zlocal/ringcore.hpp"

#include <algorithm>
#include <bit>

#include "zlocal/error.hpp"

namespace zlocal {

namespace {

ElementSet collect(const std::vector<std::uint8_t>& flags) {
  ElementSet out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(static_cast<ElementId>(i));
  }
  return out;
}

unsigned squarings_for(std::uint64_t n) { return n <= 1 ? 0 : static_cast<unsigned>(std::bit_width(n - 1)); }

}  // namespace

void require_enumerable(const FiniteRing& R, std::uint64_t bound) {
  if (R.order() > bound) {
    throw ResourceError("ring of order " + std::to_string(R.order()) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  }
}

ElementCensus element_census(const FiniteRing& R) {
  require_enumerable(R);
  ElementCensus c;
  c.scan = kernels::omp::scan_units(R);
  c.nilpotency = kernels::omp::nilpotency_index(R);
  c.units = collect(c.scan.unit);
  c.zero_divisors = collect(c.scan.zero_divisor);
  // 0 is a zero-divisor by convention (it annihilates 1 != 0).
  if (c.zero_divisors.empty() || c.zero_divisors.front() != 0) c.zero_divisors.insert(c.zero_divisors.begin(), 0);
  for (std::size_t i = 0; i < c.nilpotency.size(); ++i) {
    if (c.nilpotency[i] != 0) c.radical.push_back(static_cast<ElementId>(i));
  }
  return c;
}

ElementSet zero_divisors(const FiniteRing& R) {
  require_enumerable(R);
  ElementSet z = collect(kernels::omp::scan_units(R).zero_divisor);
  if (z.empty() || z.front() != 0) z.insert(z.begin(), 0);
  return z;
}

ElementSet units(const FiniteRing& R) {
  require_enumerable(R);
  return collect(kernels::omp::scan_units(R).unit);
}

ElementSet jacobson_radical(const FiniteRing& R) {
  require_enumerable(R);
  const std::uint64_t n = R.order();
  const unsigned rounds = squarings_for(n);
  std::vector<std::uint8_t> nil(n, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t a = 0; a < static_cast<std::int64_t>(n); ++a) {
    ElementId x = static_cast<ElementId>(a);
    for (unsigned r = 0; r < rounds && x != 0; ++r) x = R.mul_ids(x, x);
    nil[a] = x == 0;
  }
  return collect(nil);
}

bool is_local(const FiniteRing& R) {
  const ElementSet U = units(R);
  std::vector<std::uint8_t> is_unit(R.order(), 0);
  for (auto u : U) is_unit[u] = 1;
  ElementSet nonunits;
  for (std::uint64_t a = 0; a < R.order(); ++a) {
    if (!is_unit[a]) nonunits.push_back(static_cast<ElementId>(a));
  }
  for (auto a : nonunits) {
    for (auto b : nonunits) {
      if (is_unit[R.add_ids(a, b)]) return false;
    }
  }
  return true;
}

std::uint32_t characteristic(const FiniteRing& R) { return R.characteristic(); }

std::string to_string(ZLocalWitness::Kind kind) {
  switch (kind) {
    case ZLocalWitness::Kind::not_local: return "not_local";
    case ZLocalWitness::Kind::zero_divisor_outside_radical: return "zero_divisor_outside_radical";
    case ZLocalWitness::Kind::radical_square_nonzero: return "radical_square_nonzero";
  }
  return "?";
}

ZLocalReport is_z_local(const FiniteRing& R) { return is_z_local(R, element_census(R)); }

ZLocalReport is_z_local(const FiniteRing& R, const ElementCensus& census) {
  ZLocalReport rep;
  const std::uint64_t n = R.order();
  std::vector<std::uint8_t> is_unit(n, 0);
  for (auto u : census.units) is_unit[u] = 1;

  std::optional<ZLocalWitness> not_local;
  ElementSet nonunits;
  for (std::uint64_t a = 0; a < n; ++a) {
    if (!is_unit[a]) nonunits.push_back(static_cast<ElementId>(a));
  }
  for (std::size_t i = 0; i < nonunits.size() && !not_local; ++i) {
    for (std::size_t j = i; j < nonunits.size(); ++j) {
      if (is_unit[R.add_ids(nonunits[i], nonunits[j])]) {
        not_local = ZLocalWitness{ZLocalWitness::Kind::not_local, {nonunits[i], nonunits[j]}};
        break;
      }
    }
  }
  rep.is_local = !not_local;
  rep.J = census.radical;
  rep.Z = census.zero_divisors;
  rep.J_equals_Z = rep.J == rep.Z;

  std::optional<ZLocalWitness> outside;
  if (!rep.J_equals_Z) {
    ElementSet diff;
    std::set_symmetric_difference(rep.Z.begin(), rep.Z.end(), rep.J.begin(), rep.J.end(), std::back_inserter(diff));
    outside = ZLocalWitness{ZLocalWitness::Kind::zero_divisor_outside_radical, {diff.front()}};
  }

  std::optional<ZLocalWitness> square;
  for (std::size_t i = 0; i < rep.J.size() && !square; ++i) {
    for (std::size_t j = i; j < rep.J.size(); ++j) {
      if (R.mul_ids(rep.J[i], rep.J[j]) != 0) {
        square = ZLocalWitness{ZLocalWitness::Kind::radical_square_nonzero, {rep.J[i], rep.J[j]}};
        break;
      }
    }
  }
  rep.J_squared_zero = !square;
  rep.is_z_local = rep.is_local && rep.J_equals_Z && rep.J_squared_zero;
  rep.degenerate = rep.is_local && rep.J.size() == 1;
  if (not_local) {
    rep.witness = not_local;
  } else if (outside) {
    rep.witness = outside;
  } else if (square) {
    rep.witness = square;
  }
  return rep;
}

nlohmann::ordered_json to_json(const FiniteRing& R, const ZLocalReport& rep) {
  auto set_json = [&](const ElementSet& s) {
    auto arr = nlohmann::ordered_json::array();
    for (auto e : s) arr.push_back(element_json(R, e));
    return arr;
  };
  nlohmann::ordered_json j;
  j["order"] = R.order();
  j["char"] = R.characteristic();
  j["is_local"] = rep.is_local;
  j["J_equals_Z"] = rep.J_equals_Z;
  j["J_squared_zero"] = rep.J_squared_zero;
  j["is_z_local"] = rep.is_z_local;
  j["degenerate"] = rep.degenerate;
  if (rep.witness) {
    nlohmann::ordered_json w;
    w["kind"] = to_string(rep.witness->kind);
    w["elements"] = set_json(rep.witness->elements);
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  j["J"] = set_json(rep.J);
  j["Z"] = set_json(rep.Z);
  return j;
}

RingElement evaluate(const FiniteRing& R, const ModPoly& f, const RingElement& a) {
  if (R.characteristic() % f.modulus() != 0 && f.modulus() % R.characteristic() != 0) {
    throw DomainError("polynomial modulus is incompatible with the ring characteristic");
  }
  RingElement acc = R.zero();
  const auto c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = R.add(R.mul(acc, a), R.scale(R.one(), c[k]));
  return acc;
}

std::vector<ModPoly> minimal_polynomials(const FiniteRing& R, const RingElement& a, BaseRing,
                                         std::uint64_t max_candidates) {
  const std::uint32_t ch = R.characteristic();
  const std::size_t d = R.dim();
  std::vector<std::vector<std::uint32_t>> powers{R.one().coeffs};
  for (unsigned deg = 1; deg <= d + 1; ++deg) {
    powers.push_back(R.mul(RingElement{powers.back()}, a).coeffs);
    std::uint64_t candidates = 1;
    for (unsigned i = 0; i < deg; ++i) {
      candidates *= ch;
      if (candidates > max_candidates) {
        throw ResourceError("minimal polynomial search at degree " + std::to_string(deg) +
                            " exceeds the candidate bound");
      }
    }
    // value = a^deg + sum c_i a^i, walked with c_0 as the fastest digit (lexicographic order).
    std::vector<std::uint32_t> value = powers[deg];
    std::vector<std::uint32_t> digits(deg, 0);
    std::vector<ModPoly> found;
    std::vector<std::int64_t> coeffs(deg + 1, 0);
    coeffs[deg] = 1;
    for (std::uint64_t idx = 0; idx < candidates; ++idx) {
      if (R.id(std::span<const std::uint32_t>(value)) == 0) {
        for (unsigned i = 0; i < deg; ++i) coeffs[i] = digits[i];
        found.emplace_back(ch, coeffs);
      }
      for (unsigned i = 0; i < deg; ++i) {
        R.add_into(value, powers[i], value);
        if (++digits[i] < ch) break;
        digits[i] = 0;
      }
    }
    if (!found.empty()) return found;
  }
  throw InternalError("no monic annihilator up to degree dim+1; the ring is not finite over its prime subring?");
}

// ---------------------------------------------------------------------------------------------

QuotientRing::QuotientRing(const FiniteRing& R, const ElementSet& ideal) : ring_(R) {
  const std::uint64_t n = R.order();
  if (ideal.empty() || ideal.front() != 0) throw DomainError("an ideal must contain 0");
  if (n % ideal.size() != 0) throw DomainError("ideal size does not divide |R|");
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  projection_.assign(n, kUnset);
  for (std::uint64_t a = 0; a < n; ++a) {
    if (projection_[a] != kUnset) continue;
    const auto coset = static_cast<std::uint32_t>(reps_.size());
    reps_.push_back(static_cast<ElementId>(a));
    for (auto i : ideal) {
      const ElementId b = R.add_ids(static_cast<ElementId>(a), i);
      if (projection_[b] != kUnset && projection_[b] != coset) throw DomainError("set is not an additive subgroup");
      projection_[b] = coset;
    }
  }
  if (reps_.size() * ideal.size() != n) throw DomainError("set is not an additive subgroup");
}

std::uint32_t QuotientRing::add(std::uint32_t a, std::uint32_t b) const {
  return projection_[ring_.add_ids(reps_[a], reps_[b])];
}

std::uint32_t QuotientRing::mul(std::uint32_t a, std::uint32_t b) const {
  return projection_[ring_.mul_ids(reps_[a], reps_[b])];
}

std::uint32_t QuotientRing::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t result = one();
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::uint32_t QuotientRing::integer(std::int64_t k) const {
  return projection_[ring_.id(ring_.scale(ring_.one(), k))];
}

bool QuotientRing::is_field() const {
  if (size() < 2) return false;
  for (std::uint32_t a = 1; a < size(); ++a) {
    if (pow(a, size() - 1) != one()) return false;
  }
  return true;
}

bool QuotientRing::is_reduced() const {
  const unsigned rounds = squarings_for(size());
  for (std::uint32_t a = 1; a < size(); ++a) {
    std::uint32_t x = a;
    for (unsigned r = 0; r < rounds && x != 0; ++r) x = mul(x, x);
    if (x == 0) return false;
  }
  return true;
}

QuotientRing quotient_by_ideal(const FiniteRing& R, const ElementSet& ideal) {
  std::vector<std::uint8_t> member(R.order(), 0);
  for (auto i : ideal) member.at(i) = 1;
  for (auto i : ideal) {
    for (std::size_t k = 0; k < R.dim(); ++k) {
      if (!member[R.mul_ids(i, R.id(R.basis_element(k)))]) throw DomainError("set is not closed under multiplication by R");
    }
  }
  return QuotientRing(R, ideal);
}

QuotientRing residue_field(const FiniteRing& R) { return residue_field(R, element_census(R)); }

QuotientRing residue_field(const FiniteRing& R, const ElementCensus& census) {
  // Local iff the non-units are exactly the radical (they always contain it).
  if (census.units.size() + census.radical.size() != R.order()) {
    throw DomainError("residue field requested for a non-local ring");
  }
  QuotientRing K = quotient_by_ideal(R, census.radical);
  if (!K.is_field()) throw InternalError("R/J(R) of a local ring is not a field");
  return K;
}

KSpan k_span(const FiniteRing& R, const QuotientRing& K, const std::vector<ElementId>& basis) {
  const std::uint64_t q = K.size();
  const std::size_t r = basis.size();
  std::vector<std::vector<ElementId>> scaled(r, std::vector<ElementId>(q));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::uint32_t k = 0; k < q; ++k) scaled[i][k] = R.mul_ids(K.representative(k), basis[i]);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total *= q;
    if (total > R.order()) throw DomainError("K-span larger than the ring: elements are dependent");
  }
  std::vector<std::pair<ElementId, std::vector<std::uint32_t>>> rows;
  rows.reserve(total);
  std::vector<std::uint32_t> digits(r, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    ElementId s = 0;
    for (std::size_t i = 0; i < r; ++i) s = R.add_ids(s, scaled[i][digits[i]]);
    rows.emplace_back(s, digits);
    for (std::size_t i = r; i-- > 0;) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
  std::sort(rows.begin(), rows.end());
  KSpan out;
  for (auto& [e, c] : rows) {
    if (!out.members.empty() && out.members.back() == e) throw DomainError("elements are not K-independent");
    out.members.push_back(e);
    out.coords.push_back(std::move(c));
  }
  return out;
}

std::vector<ElementId> extend_k_basis(const FiniteRing& R, const QuotientRing& K, const ElementSet& J,
                                      std::vector<ElementId> seed) {
  std::vector<std::uint8_t> in_span(R.order(), 0);
  std::vector<ElementId> span{0};
  in_span[0] = 1;
  auto absorb = [&](ElementId b) {
    std::vector<ElementId> multiples;
    for (std::uint32_t k = 1; k < K.size(); ++k) multiples.push_back(R.mul_ids(K.representative(k), b));
    const std::size_t base = span.size();
    for (auto t : multiples) {
      for (std::size_t i = 0; i < base; ++i) {
        const ElementId s = R.add_ids(span[i], t);
        if (!in_span[s]) {
          in_span[s] = 1;
          span.push_back(s);
        }
      }
    }
  };
  for (auto b : seed) {
    if (in_span[b]) throw DomainError("seed elements are not K-independent");
    absorb(b);
  }
  std::vector<ElementId> basis = std::move(seed);
  for (auto j : J) {
    if (in_span[j]) continue;
    basis.push_back(j);
    absorb(j);
  }
  if (span.size() != J.size()) throw DomainError("K-span of the chosen basis is not J (is J^2 = 0?)");
  return basis;
}

std::vector<ElementId> k_basis_of_J(const FiniteRing& R) {
  const ElementCensus census = element_census(R);
  const ZLocalReport rep = is_z_local(R, census);
  if (!rep.is_z_local) throw DomainError("K-basis of J requires a Z-local ring");
  const QuotientRing K = residue_field(R, census);
  std::vector<ElementId> seed;
  if (!is_prime(R.characteristic()) && R.characteristic() > 1) {
    const auto p = prime_of_modulus(R.characteristic());
    if (p) seed.push_back(R.id(R.scale(R.one(), *p)));
  }
  return extend_k_basis(R, K, rep.J, std::move(seed));
}

bool radical_is_consistent(const FiniteRing& R, const ElementSet& J, const ElementSet& U) {
  std::vector<std::uint8_t> is_unit(R.order(), 0);
  for (auto u : U) is_unit[u] = 1;
  for (auto j : J) {
    if (!is_unit[R.add_ids(R.one_id(), j)]) return false;
  }
  return quotient_by_ideal(R, J).is_reduced();
}

}  // namespace zlocal
