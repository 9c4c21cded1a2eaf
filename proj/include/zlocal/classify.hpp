#pragma once

// Ring isomorphism with witnesses, recovery of canonical presentations, and the census of all
// canonical presentations up to a given order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "zlocal/finite_ring.hpp"
#include "zlocal/presentation.hpp"
#include "zlocal/ringcore.hpp"

namespace zlocal {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;
inline constexpr std::uint64_t kIsoOrderBound = 4096;

/// Isomorphism invariants used for fast rejection.
struct RingInvariants {
  std::uint64_t order = 0;
  std::uint32_t characteristic = 0;
  std::map<std::uint32_t, std::uint64_t> additive_orders;  // element additive order -> count
  std::uint64_t units = 0;
  std::uint64_t zero_divisors = 0;
  std::uint64_t radical = 0;
  std::uint64_t radical_square = 0;  // |J^2|
  std::map<std::uint32_t, std::uint64_t> nilpotency;  // nilpotency index -> count (J only)
  friend bool operator==(const RingInvariants&, const RingInvariants&) = default;
};

/// Everything the isomorphism search needs about one ring, computed once.
struct RingProfile {
  explicit RingProfile(FiniteRing ring);

  FiniteRing ring;
  ElementCensus census;
  RingInvariants invariants;
  std::vector<std::uint64_t> signature;  // per element: packed local invariants
};

/// images[k] is the image of basis element k of the source ring.
struct IsoWitness {
  std::vector<RingElement> images;
};

/// True iff the additive map defined by the images is well defined, bijective, multiplicative
/// on basis pairs and sends 1 to 1. This check alone proves the isomorphism.
bool verify_witness(const FiniteRing& from, const FiniteRing& to, const IsoWitness& w);

nlohmann::ordered_json to_json(const FiniteRing& from, const FiniteRing& to, const IsoWitness& w);

/// Backtracking over images of a ring-generating set of `a`, pruned by element signatures and by
/// partial homomorphism checks on the subring generated so far. std::nullopt means definitely not
/// isomorphic; an exhausted node budget raises InconclusiveError.
std::optional<IsoWitness> ring_isomorphic(const RingProfile& a, const RingProfile& b,
                                          std::uint64_t node_budget = kDefaultNodeBudget);
std::optional<IsoWitness> ring_isomorphic(const FiniteRing& a, const FiniteRing& b,
                                          std::uint64_t node_budget = kDefaultNodeBudget);

enum class CanonicalCase { Q1, Q2, F1, F2 };
std::string to_string(CanonicalCase c);

struct CanonicalForm {
  CanonicalCase kase;
  std::uint32_t p;
  unsigned n;
  unsigned m;
  ModPoly g;
  std::vector<ModPoly> v;
};

struct Classification {
  CanonicalForm form;
  RingPresentation presentation;
  FiniteRing canonical;  // compile(presentation)
  IsoWitness witness;    // canonical -> input ring
  ElementId generator;   // the element alpha whose residue generates K
};

/// Recovers the canonical presentation of a finite Z-local ring of characteristic p or p^2 and
/// proves it with a verified isomorphism witness. Throws ClassificationError otherwise.
Classification classify_ring(const FiniteRing& R, std::uint64_t node_budget = kDefaultNodeBudget);

nlohmann::ordered_json to_json(const FiniteRing& R, const Classification& c);

struct CensusClass {
  RingPresentation representative;
  FiniteRing ring;
  std::uint64_t order = 0;
  std::uint32_t characteristic = 0;
  std::uint64_t units = 0;
  std::uint64_t radical = 0;
  unsigned n = 0;
  unsigned m = 0;
  bool z_local = false;
  std::vector<std::string> members;  // serialized presentations, sorted
};

/// The as_printed variant of one enumerated F3/F4 presentation, compiled and verified next to the
/// corrected ring it is paired with.
struct VariantNote {
  RingPresentation corrected;
  std::uint64_t corrected_order = 0;
  std::uint64_t order = 0;
  std::uint32_t characteristic = 0;
  bool z_local = false;
  bool J_equals_Z = false;
};

struct Census {
  std::uint32_t p = 0;
  unsigned char_exp = 0;
  std::uint64_t max_order = 0;
  std::uint64_t presentations = 0;
  bool partial = false;
  std::string partial_reason;
  std::vector<CensusClass> classes;
  std::vector<VariantNote> as_printed;  // char_exp = 2 only, in key order

  /// All enumerated (presentation, ring) pairs, in key order, before deduplication.
  std::vector<std::pair<RingPresentation, FiniteRing>> all;
};

struct EnumerationOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::uint64_t max_presentations = 20'000;
};

/// Every presentation of the matching families (F3/F4 corrected for char_exp = 2, F1/F2 for
/// char_exp = 1) with |R| <= max_order, deduplicated up to isomorphism. The class representative
/// is the lexicographically least serialized presentation; classes are ordered by (order, key).
Census enumerate_presentations(std::uint32_t p, unsigned char_exp, std::uint64_t max_order,
                               const EnumerationOptions& options = {});

/// Same census as the list of class representatives with their rings.
std::vector<std::pair<RingPresentation, FiniteRing>> representatives(const Census& census);

nlohmann::ordered_json to_json(const Census& census);
std::string to_text(const Census& census);

}  // namespace zlocal
