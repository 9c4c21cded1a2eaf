#include "zlocal/finite_ring.hpp"

#include <numeric>
#include <set>

#include "zlocal/error.hpp"
#include "zlocal/expr.hpp"

namespace zlocal {

namespace {

std::optional<std::string> defect(const std::string& s) { return s; }

}  // namespace

std::optional<std::string> FiniteRing::structure_defect(const std::vector<std::uint32_t>& orders,
                                                        const StructureConstants& mult, std::size_t one) {
  const std::size_t d = orders.size();
  if (d == 0) return defect("empty basis");
  if (one >= d) return defect("index of 1 out of range");
  std::uint64_t order = 1;
  for (auto o : orders) {
    if (o < 2) return defect("additive orders must be at least 2");
    order *= o;
    if (order > kMaxRingOrder) return defect("ring order exceeds 2^20");
  }
  if (mult.size() != d) return defect("structure constants have the wrong shape");
  for (std::size_t i = 0; i < d; ++i) {
    if (mult[i].size() != d) return defect("structure constants have the wrong shape");
    for (std::size_t j = 0; j < d; ++j) {
      if (mult[i][j].size() != d) return defect("structure constants have the wrong shape");
      for (std::size_t l = 0; l < d; ++l) {
        if (mult[i][j][l] >= orders[l]) {
          return defect("coordinate " + std::to_string(l) + " of e" + std::to_string(i) + "*e" +
                        std::to_string(j) + " is not reduced");
        }
      }
    }
  }
  const std::uint32_t ch = orders[one];
  for (std::size_t k = 0; k < d; ++k) {
    if (ch % orders[k] != 0) return defect("additive order of e" + std::to_string(k) + " does not divide char");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (mult[i][j] != mult[j][i]) {
        return defect("not commutative: e" + std::to_string(i) + "*e" + std::to_string(j));
      }
      // Z-bilinearity is well defined only if ord(e_i) annihilates e_i*e_j.
      for (std::size_t l = 0; l < d; ++l) {
        if ((std::uint64_t{orders[i]} * mult[i][j][l]) % orders[l] != 0) {
          return defect("ill-defined product: " + std::to_string(orders[i]) + "*(e" + std::to_string(i) + "*e" +
                        std::to_string(j) + ") != 0");
        }
      }
    }
    for (std::size_t l = 0; l < d; ++l) {
      if (mult[one][i][l] != (l == i ? 1u : 0u)) return defect("1*e" + std::to_string(i) + " != e" + std::to_string(i));
    }
  }
  std::vector<std::uint64_t> lhs(d), rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t a = 0; a < d; ++a) {
          const std::uint64_t cij = mult[i][j][a];
          const std::uint64_t cjk = mult[j][k][a];
          for (std::size_t l = 0; l < d; ++l) {
            lhs[l] += cij * mult[a][k][l];
            rhs[l] += cjk * mult[i][a][l];
          }
        }
        for (std::size_t l = 0; l < d; ++l) {
          if (lhs[l] % orders[l] != rhs[l] % orders[l]) {
            return defect("not associative: (e" + std::to_string(i) + "*e" + std::to_string(j) + ")*e" +
                          std::to_string(k));
          }
        }
      }
    }
  }
  return std::nullopt;
}

FiniteRing::FiniteRing(std::vector<std::string> basis, std::vector<std::uint32_t> orders,
                       const StructureConstants& mult, std::size_t one, std::optional<RingPresentation> meta)
    : basis_(std::move(basis)), orders_(std::move(orders)), one_(one), meta_(std::move(meta)) {
  if (basis_.size() != orders_.size()) throw ValidationError("basis labels and orders differ in length");
  if (std::set<std::string>(basis_.begin(), basis_.end()).size() != basis_.size()) {
    throw ValidationError("duplicate basis label");
  }
  if (auto bad = structure_defect(orders_, mult, one_)) throw ValidationError("invalid ring structure: " + *bad);
  const std::size_t d = dim();
  mult_.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) mult_.insert(mult_.end(), mult[i][j].begin(), mult[i][j].end());
  }
  strides_.assign(d, 1);
  for (std::size_t k = d; k-- > 0;) {
    strides_[k] = order_;
    order_ *= orders_[k];
  }
  one_id_ = static_cast<ElementId>(strides_[one_]);
}

ElementId FiniteRing::id(std::span<const std::uint32_t> c) const {
  std::uint64_t v = 0;
  for (std::size_t k = 0; k < dim(); ++k) v += c[k] * strides_[k];
  return static_cast<ElementId>(v);
}

ElementId FiniteRing::id(const RingElement& a) const {
  if (a.coeffs.size() != dim()) throw DomainError("element dimension does not match the ring");
  for (std::size_t k = 0; k < dim(); ++k) {
    if (a.coeffs[k] >= orders_[k]) throw DomainError("element coordinate not reduced");
  }
  return id(std::span<const std::uint32_t>(a.coeffs));
}

void FiniteRing::decode(ElementId id, std::span<std::uint32_t> out) const {
  std::uint64_t rest = id;
  for (std::size_t k = 0; k < dim(); ++k) {
    out[k] = static_cast<std::uint32_t>(rest / strides_[k]);
    rest %= strides_[k];
  }
}

RingElement FiniteRing::element(ElementId id) const {
  if (id >= order_) throw DomainError("element id out of range");
  RingElement a{std::vector<std::uint32_t>(dim())};
  decode(id, a.coeffs);
  return a;
}

RingElement FiniteRing::zero() const { return RingElement{std::vector<std::uint32_t>(dim(), 0)}; }

RingElement FiniteRing::one() const { return basis_element(one_); }

RingElement FiniteRing::basis_element(std::size_t k) const {
  RingElement e = zero();
  e.coeffs.at(k) = 1;
  return e;
}

void FiniteRing::add_into(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                          std::span<std::uint32_t> out) const {
  for (std::size_t k = 0; k < dim(); ++k) {
    std::uint32_t s = a[k] + b[k];
    out[k] = s >= orders_[k] ? s - orders_[k] : s;
  }
}

void FiniteRing::mul_into(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                          std::span<std::uint32_t> out) const {
  const std::size_t d = dim();
  std::uint64_t acc[64] = {};
  std::vector<std::uint64_t> big;
  std::uint64_t* sum = acc;
  if (d > 64) {
    big.assign(d, 0);
    sum = big.data();
  }
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{a[i]} * b[j];
      const std::uint32_t* row = mult_.data() + (i * d + j) * d;
      for (std::size_t l = 0; l < d; ++l) sum[l] += c * row[l];
    }
  }
  for (std::size_t l = 0; l < d; ++l) out[l] = static_cast<std::uint32_t>(sum[l] % orders_[l]);
}

std::vector<std::uint32_t> FiniteRing::left_mul_matrix(std::span<const std::uint32_t> a) const {
  const std::size_t d = dim();
  std::vector<std::uint32_t> m(d * d);
  std::vector<std::uint32_t> e(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    e[j] = 1;
    mul_into(a, e, std::span<std::uint32_t>(m.data() + j * d, d));
    e[j] = 0;
  }
  return m;
}

RingElement FiniteRing::add(const RingElement& a, const RingElement& b) const {
  if (a.coeffs.size() != dim() || b.coeffs.size() != dim()) throw DomainError("element dimension mismatch");
  RingElement r = zero();
  add_into(a.coeffs, b.coeffs, r.coeffs);
  return r;
}

RingElement FiniteRing::neg(const RingElement& a) const {
  if (a.coeffs.size() != dim()) throw DomainError("element dimension mismatch");
  RingElement r = zero();
  for (std::size_t k = 0; k < dim(); ++k) r.coeffs[k] = a.coeffs[k] == 0 ? 0 : orders_[k] - a.coeffs[k];
  return r;
}

RingElement FiniteRing::sub(const RingElement& a, const RingElement& b) const { return add(a, neg(b)); }

RingElement FiniteRing::mul(const RingElement& a, const RingElement& b) const {
  if (a.coeffs.size() != dim() || b.coeffs.size() != dim()) throw DomainError("element dimension mismatch");
  RingElement r = zero();
  mul_into(a.coeffs, b.coeffs, r.coeffs);
  return r;
}

RingElement FiniteRing::scale(const RingElement& a, std::int64_t k) const {
  RingElement r = zero();
  for (std::size_t l = 0; l < dim(); ++l) {
    const std::int64_t o = orders_[l];
    std::int64_t v = (static_cast<std::int64_t>(a.coeffs.at(l)) * (k % o)) % o;
    r.coeffs[l] = static_cast<std::uint32_t>(v < 0 ? v + o : v);
  }
  return r;
}

RingElement FiniteRing::pow(const RingElement& a, unsigned e) const {
  RingElement result = one();
  RingElement base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

ElementId FiniteRing::add_ids(ElementId a, ElementId b) const {
  std::uint32_t ca[64], cb[64];
  decode(a, {ca, dim()});
  decode(b, {cb, dim()});
  add_into({ca, dim()}, {cb, dim()}, {ca, dim()});
  return id(std::span<const std::uint32_t>(ca, dim()));
}

ElementId FiniteRing::mul_ids(ElementId a, ElementId b) const {
  std::uint32_t ca[64], cb[64], cr[64];
  decode(a, {ca, dim()});
  decode(b, {cb, dim()});
  mul_into({ca, dim()}, {cb, dim()}, {cr, dim()});
  return id(std::span<const std::uint32_t>(cr, dim()));
}

std::uint32_t FiniteRing::additive_order(const RingElement& a) const {
  std::uint32_t o = 1;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (a.coeffs[k] == 0) continue;
    o = std::lcm(o, orders_[k] / std::gcd(orders_[k], a.coeffs[k]));
  }
  return o;
}

std::string FiniteRing::format(const RingElement& a) const {
  std::string out;
  for (std::size_t k = dim(); k-- > 0;) {
    const std::uint32_t c = a.coeffs.at(k);
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (basis_[k] == "1") {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += basis_[k];
    }
  }
  return out.empty() ? "0" : out;
}

RingElement FiniteRing::parse_element(std::string_view text) const {
  RingElement total = zero();
  for (const auto& term : expr::parse(text)) {
    RingElement t = scale(one(), term.coeff);
    for (const auto& f : term.factors) {
      std::size_t k = 0;
      while (k < dim() && basis_[k] != f.name) ++k;
      if (k == dim() || f.name == "1") {
        throw ValidationError("unknown generator \"" + f.name + "\" in element \"" + std::string(text) + "\"");
      }
      t = mul(t, pow(basis_element(k), f.power));
    }
    total = add(total, t);
  }
  return total;
}

nlohmann::ordered_json FiniteRing::to_json() const {
  nlohmann::ordered_json j;
  j["basis"] = basis_;
  j["orders"] = orders_;
  j["one"] = one_;
  j["char"] = characteristic();
  auto mult = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < dim(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < dim(); ++k) {
      auto p = product(i, k);
      row.push_back(std::vector<std::uint32_t>(p.begin(), p.end()));
    }
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  if (meta_) j["meta"] = meta_->to_json();
  return j;
}

FiniteRing FiniteRing::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ValidationError("ring file must hold a JSON object");
  static const std::set<std::string> allowed{"basis", "orders", "one", "char", "mult", "meta"};
  for (const auto& [key, _] : j.items()) {
    if (!allowed.count(key)) throw ValidationError("unknown key \"" + key + "\" in ring file");
  }
  for (const char* key : {"basis", "orders", "one", "char", "mult"}) {
    if (!j.contains(key)) throw ValidationError(std::string("ring file lacks \"") + key + "\"");
  }
  try {
    auto basis = j["basis"].get<std::vector<std::string>>();
    auto orders = j["orders"].get<std::vector<std::uint32_t>>();
    auto one = j["one"].get<std::size_t>();
    auto mult = j["mult"].get<StructureConstants>();
    std::optional<RingPresentation> meta;
    if (j.contains("meta")) meta = presentation_from_json(j["meta"]);
    FiniteRing R(std::move(basis), std::move(orders), mult, one, std::move(meta));
    if (j["char"].get<std::uint32_t>() != R.characteristic()) {
      throw ValidationError("\"char\" disagrees with the additive order of 1");
    }
    return R;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed ring file: ") + e.what());
  }
}

bool operator==(const FiniteRing& a, const FiniteRing& b) {
  return a.basis_ == b.basis_ && a.orders_ == b.orders_ && a.mult_ == b.mult_ && a.one_ == b.one_ &&
         a.meta_ == b.meta_;
}

nlohmann::ordered_json element_json(const FiniteRing& R, ElementId id) {
  nlohmann::ordered_json j;
  j["vec"] = R.element(id).coeffs;
  j["str"] = R.format(id);
  return j;
}

}  // namespace zlocal
