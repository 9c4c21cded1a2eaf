#pragma once

// A finite commutative ring given by an additive basis with per-generator additive orders and
// structure constants. Elements are coefficient vectors; they are also addressed by their
// position in lexicographic order (first coordinate most significant), the ElementId.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zlocal/presentation.hpp"

namespace zlocal {

using ElementId = std::uint32_t;
/// Sorted, duplicate-free list of element ids.
using ElementSet = std::vector<ElementId>;

struct RingElement {
  std::vector<std::uint32_t> coeffs;
  friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

/// Structure constants: mult[i][j] is the coefficient vector of e_i * e_j.
using StructureConstants = std::vector<std::vector<std::vector<std::uint32_t>>>;

inline constexpr std::uint64_t kMaxRingOrder = std::uint64_t{1} << 20;

class FiniteRing {
 public:
  /// Checks every structural invariant (see structure_defect) and throws ValidationError on failure.
  FiniteRing(std::vector<std::string> basis, std::vector<std::uint32_t> orders, const StructureConstants& mult,
             std::size_t one, std::optional<RingPresentation> meta = std::nullopt);

  /// Empty when the data describes a commutative, associative, unital ring; otherwise the first
  /// violated law. Checks run on basis elements, which is complete by bilinearity.
  static std::optional<std::string> structure_defect(const std::vector<std::uint32_t>& orders,
                                                     const StructureConstants& mult, std::size_t one);

  std::size_t dim() const { return orders_.size(); }
  std::uint64_t order() const { return order_; }
  std::span<const std::uint32_t> orders() const { return orders_; }
  const std::vector<std::string>& labels() const { return basis_; }
  std::size_t one_index() const { return one_; }
  /// Additive order of 1.
  std::uint32_t characteristic() const { return orders_[one_]; }
  const std::optional<RingPresentation>& meta() const { return meta_; }

  /// Coefficient vector of e_i * e_j.
  std::span<const std::uint32_t> product(std::size_t i, std::size_t j) const {
    return {mult_.data() + (i * dim() + j) * dim(), dim()};
  }

  ElementId id(const RingElement& a) const;
  ElementId id(std::span<const std::uint32_t> coeffs) const;
  RingElement element(ElementId id) const;
  void decode(ElementId id, std::span<std::uint32_t> out) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement basis_element(std::size_t k) const;
  ElementId one_id() const { return one_id_; }

  RingElement add(const RingElement& a, const RingElement& b) const;
  RingElement sub(const RingElement& a, const RingElement& b) const;
  RingElement neg(const RingElement& a) const;
  RingElement mul(const RingElement& a, const RingElement& b) const;
  RingElement scale(const RingElement& a, std::int64_t k) const;
  RingElement pow(const RingElement& a, unsigned e) const;

  /// out = a * b on raw coordinate spans; out must not alias a or b.
  void mul_into(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> out) const;
  /// out = (a + b) mod orders; out may alias a.
  void add_into(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                std::span<std::uint32_t> out) const;

  /// Row-major d x d matrix whose row j is a * e_j.
  std::vector<std::uint32_t> left_mul_matrix(std::span<const std::uint32_t> a) const;

  ElementId add_ids(ElementId a, ElementId b) const;
  ElementId mul_ids(ElementId a, ElementId b) const;

  /// Additive order of an element (lcm of coordinate orders).
  std::uint32_t additive_order(const RingElement& a) const;

  /// Human-readable sum of monomials, highest basis index first, e.g. "3x+3" or "x*y1+2".
  std::string format(const RingElement& a) const;
  std::string format(ElementId id) const { return format(element(id)); }

  /// Evaluates an expression such as "x+2*y1" using the single-variable basis labels.
  RingElement parse_element(std::string_view text) const;

  nlohmann::ordered_json to_json() const;
  static FiniteRing from_json(const nlohmann::json& j);

  friend bool operator==(const FiniteRing& a, const FiniteRing& b);

 private:
  std::vector<std::string> basis_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint64_t> strides_;
  std::size_t one_;
  std::uint64_t order_ = 1;
  ElementId one_id_ = 0;
  std::optional<RingPresentation> meta_;
};

/// JSON form of an element: {"vec": [...], "str": "..."}.
nlohmann::ordered_json element_json(const FiniteRing& R, ElementId id);

}  // namespace zlocal
