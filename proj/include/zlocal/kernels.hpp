#pragma once

// Exhaustive element-level scans. Each kernel exists twice: `serial` is the plain reference
// (direct products, one element pair at a time) kept for cross-checking, `omp` is the production
// version (incremental row products, OpenMP over the outer element loop). Both return identical
// results; the test suite and the benchmark compare them.

#include <cstdint>
#include <string>
#include <vector>

#include "zlocal/finite_ring.hpp"

namespace zlocal::kernels {

struct UnitScan {
  std::vector<std::uint8_t> unit;            // a*b = 1 for some b
  std::vector<std::uint8_t> zero_divisor;    // a*b = 0 for some b != 0 (0 itself included)
  std::vector<std::uint32_t> annihilator;    // |{b : a*b = 0}|
  friend bool operator==(const UnitScan&, const UnitScan&) = default;
};

struct AxiomReport {
  enum class Mode { all_triples, pairs_times_basis, random_triples };
  Mode mode = Mode::all_triples;
  std::uint64_t checks = 0;
  bool commutative = true;
  bool associative = true;
  bool distributive = true;
  bool unital = true;
  std::string witness;  // first failing instance, empty when all laws hold
  bool ok() const { return commutative && associative && distributive && unital; }
};

std::string to_string(AxiomReport::Mode mode);

/// Triples are checked exhaustively up to this order, pairs x basis up to kPairsLimit, random above.
inline constexpr std::uint64_t kTriplesLimit = 256;
inline constexpr std::uint64_t kPairsLimit = 4096;
inline constexpr unsigned kRandomTriples = 10'000;

namespace serial {
UnitScan scan_units(const FiniteRing& R);
/// Smallest k >= 1 with a^k = 0, or 0 when a is not nilpotent.
std::vector<std::uint8_t> nilpotency_index(const FiniteRing& R);
AxiomReport check_axioms(const FiniteRing& R);
/// Degree of the minimal monic annihilating polynomial over the prime subring, per element.
std::vector<std::uint8_t> minpoly_degree(const FiniteRing& R);
}  // namespace serial

namespace omp {
UnitScan scan_units(const FiniteRing& R);
std::vector<std::uint8_t> nilpotency_index(const FiniteRing& R);
AxiomReport check_axioms(const FiniteRing& R);
std::vector<std::uint8_t> minpoly_degree(const FiniteRing& R);
}  // namespace omp

}  // namespace zlocal::kernels
