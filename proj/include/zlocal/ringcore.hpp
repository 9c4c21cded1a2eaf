#pragma once

// Exhaustive ring-theoretic queries on a FiniteRing. Every set-valued result is a sorted list of
// element ids (lexicographic order of coefficient vectors).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zlocal/arith.hpp"
#include "zlocal/finite_ring.hpp"
#include "zlocal/kernels.hpp"

namespace zlocal {

/// Rings larger than this are refused by the enumeration-based queries.
inline constexpr std::uint64_t kEnumerationBound = std::uint64_t{1} << 16;

void require_enumerable(const FiniteRing& R, std::uint64_t bound = kEnumerationBound);

/// Units, zero-divisors and nilpotents of a ring, computed once.
struct ElementCensus {
  kernels::UnitScan scan;
  std::vector<std::uint8_t> nilpotency;  // 0 = not nilpotent
  ElementSet units, zero_divisors, radical;
};

ElementCensus element_census(const FiniteRing& R);

ElementSet zero_divisors(const FiniteRing& R);
ElementSet units(const FiniteRing& R);
/// Nilradical via repeated squaring up to 2^ceil(log2 |R|); equals J(R) for finite commutative rings.
ElementSet jacobson_radical(const FiniteRing& R);
/// True iff the non-units are closed under addition.
bool is_local(const FiniteRing& R);
std::uint32_t characteristic(const FiniteRing& R);

struct ZLocalWitness {
  enum class Kind { not_local, zero_divisor_outside_radical, radical_square_nonzero };
  Kind kind;
  std::vector<ElementId> elements;  // pair for not_local / radical_square_nonzero, single otherwise
};

std::string to_string(ZLocalWitness::Kind kind);

struct ZLocalReport {
  bool is_local = false;
  ElementSet J;
  ElementSet Z;
  bool J_squared_zero = false;
  bool J_equals_Z = false;
  bool is_z_local = false;
  bool degenerate = false;  // R is a field: J = Z = {0}
  std::optional<ZLocalWitness> witness;
};

ZLocalReport is_z_local(const FiniteRing& R);
ZLocalReport is_z_local(const FiniteRing& R, const ElementCensus& census);

nlohmann::ordered_json to_json(const FiniteRing& R, const ZLocalReport& rep);

enum class BaseRing { prime_subring };

/// Every monic polynomial over Z_char of the least degree d with f(a) = 0, in lexicographic
/// order. Exhaustive coefficient search; throws ResourceError past `max_candidates` per degree.
std::vector<ModPoly> minimal_polynomials(const FiniteRing& R, const RingElement& a,
                                         BaseRing base = BaseRing::prime_subring,
                                         std::uint64_t max_candidates = std::uint64_t{1} << 24);

/// Evaluates f (any modulus dividing char) at a, using the integer representatives of f's coefficients.
RingElement evaluate(const FiniteRing& R, const ModPoly& f, const RingElement& a);

/// R/I for an ideal I, as a table of cosets. Elements of the quotient are coset indices; coset 0
/// is I itself and every coset is represented by its least element id.
class QuotientRing {
 public:
  QuotientRing(const FiniteRing& R, const ElementSet& ideal);

  std::uint64_t size() const { return reps_.size(); }
  std::uint32_t project(ElementId a) const { return projection_[a]; }
  ElementId representative(std::uint32_t coset) const { return reps_[coset]; }
  const std::vector<std::uint32_t>& projection() const { return projection_; }

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return projection_[ring_.one_id()]; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  /// Integer multiple k*1 in the quotient.
  std::uint32_t integer(std::int64_t k) const;

  /// Every nonzero element is a unit (checked as a^(q-1) = 1, which forces invertibility).
  bool is_field() const;
  /// Zero-nilradical test on the quotient.
  bool is_reduced() const;

  const FiniteRing& ring() const { return ring_; }

 private:
  FiniteRing ring_;
  std::vector<std::uint32_t> projection_;
  std::vector<ElementId> reps_;
};

/// Throws DomainError unless `ideal` is an additive subgroup closed under multiplication by R.
QuotientRing quotient_by_ideal(const FiniteRing& R, const ElementSet& ideal);

/// K = R/J(R) for a local ring, verified to be a field. Non-local input is a DomainError.
QuotientRing residue_field(const FiniteRing& R);
QuotientRing residue_field(const FiniteRing& R, const ElementCensus& census);

/// Greedy K-basis of J(R): walk J in element order and keep each element that is not in the
/// K-span of those already kept. When char R = p^2 the element p*1 is taken first.
/// Requires R to be Z-local (J^2 = 0 makes J a K-vector space).
std::vector<ElementId> k_basis_of_J(const FiniteRing& R);

/// Same walk, starting from `seed` (which must be K-independent elements of J).
std::vector<ElementId> extend_k_basis(const FiniteRing& R, const QuotientRing& K, const ElementSet& J,
                                      std::vector<ElementId> seed);

/// K-span of `basis` inside J, with the K-coordinates (coset indices) of every member.
struct KSpan {
  std::vector<ElementId> members;                   // sorted
  std::vector<std::vector<std::uint32_t>> coords;   // parallel to members
};
KSpan k_span(const FiniteRing& R, const QuotientRing& K, const std::vector<ElementId>& basis);

/// Cross-checks of the radical: 1 + j is a unit for every j in J, and R/J is reduced.
bool radical_is_consistent(const FiniteRing& R, const ElementSet& J, const ElementSet& U);

}  // namespace zlocal
