#pragma once

// Canonical quotient-ring presentations.
//
//   F0  Z_base[x1..xk]/<xi^2>                               (local, J=Z, but not Z-local)
//   F1  K[y1..ym]/<yi*yj>,  K = Z_p[t]/<g>
//   F2  Z_p[x,Y]/<g^2, g - sum vi*yi, g*yr, ys*yt>
//   F3  Z_{p^2}[x,Y]/<g, ys*yt, p*yr>                     (as_printed adds p*x)
//   F4  Z_{p^2}[x,Y]/<g^2, p*g, g*yr, g - sum vi*yi, ys*yt, p*yr>   (as_printed adds p*x)

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "zlocal/arith.hpp"

namespace zlocal {

enum class Family { F0, F1, F2, F3, F4 };
enum class Variant { corrected, as_printed };

std::string to_string(Family f);
std::string to_string(Variant v);
Family parse_family(std::string_view s);
Variant parse_variant(std::string_view s);

/// Raw, unvalidated constructor arguments. Polynomials are given in the text format.
struct PresentationParams {
  Family family = Family::F3;
  std::uint32_t p = 0;
  std::string g;               // F1..F4
  unsigned m = 0;              // number of y-variables
  std::vector<std::string> v;  // F2, F4
  Variant variant = Variant::corrected;  // F3, F4
  std::uint32_t base = 0;      // F0: p or p^2
  unsigned n_vars = 0;         // F0
  bool strict = false;         // re-enables m >= 1 (F1) and m >= 2 (F2)
};

class RingPresentation {
 public:
  Family family() const { return family_; }
  std::uint32_t p() const { return p_; }
  /// Degree of g (F1..F4); 0 for F0.
  unsigned n() const { return n_; }
  /// g over Z_p (F1/F2) or Z_{p^2} (F3/F4); absent for F0.
  const std::optional<ModPoly>& g() const { return g_; }
  unsigned m() const { return m_; }
  /// v_i over Z_p (F2) or Z_{p^2} (F4).
  const std::vector<ModPoly>& v() const { return v_; }
  Variant variant() const { return variant_; }
  std::uint32_t base() const { return base_; }
  unsigned n_vars() const { return n_vars_; }
  bool strict() const { return strict_; }

  /// Modulus of the coefficient ring: p for F1/F2, p^2 for F3/F4, base for F0.
  std::uint32_t coefficient_modulus() const;
  /// |R| as predicted by the family's normal form (corrected variants and F0..F2).
  std::uint64_t expected_order() const;

  nlohmann::ordered_json to_json() const;
  /// Compact serialized form; also the sort key used for class representatives.
  std::string key() const { return to_json().dump(); }

  friend bool operator==(const RingPresentation&, const RingPresentation&) = default;

 private:
  friend RingPresentation build_presentation(const PresentationParams&);
  RingPresentation() = default;

  Family family_ = Family::F0;
  std::uint32_t p_ = 0;
  unsigned n_ = 0;
  std::optional<ModPoly> g_;
  unsigned m_ = 0;
  std::vector<ModPoly> v_;
  Variant variant_ = Variant::corrected;
  std::uint32_t base_ = 0;
  unsigned n_vars_ = 0;
  bool strict_ = false;
};

/// Validates `params` against the family hypotheses. The first failed check, in a fixed
/// order, is reported as a ValidationError naming the hypothesis.
RingPresentation build_presentation(const PresentationParams& params);

/// Inverse of RingPresentation::to_json. Unknown or missing keys are validation errors.
RingPresentation presentation_from_json(const nlohmann::json& j);

/// Fill in params from an already-validated presentation (for round trips and variant flips).
PresentationParams params_of(const RingPresentation& pres);

}  // namespace zlocal
