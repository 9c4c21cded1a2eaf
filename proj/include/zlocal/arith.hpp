#pragma once

// Univariate polynomials over Z_p and Z_{p^2}.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zlocal {

inline constexpr std::uint32_t kMaxPrime = 97;
inline constexpr unsigned kMaxDegree = 8;

bool is_prime(std::uint32_t n);

/// Returns p when `modulus` is p or p^2 for a prime p, std::nullopt otherwise.
std::optional<std::uint32_t> prime_of_modulus(std::uint32_t modulus);

/// A polynomial with coefficients in Z_m, lowest degree first, without trailing zeros.
class ModPoly {
 public:
  using Coeff = std::uint32_t;

  /// Zero polynomial over Z_modulus.
  explicit ModPoly(std::uint32_t modulus);
  /// Coefficients are reduced into [0, modulus) and trailing zeros dropped.
  ModPoly(std::uint32_t modulus, std::vector<std::int64_t> coeffs);

  static ModPoly constant(std::uint32_t modulus, std::int64_t c);
  static ModPoly monomial(std::uint32_t modulus, unsigned degree, std::int64_t c = 1);

  std::uint32_t modulus() const { return modulus_; }
  std::span<const Coeff> coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the stored range.
  Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

  bool is_zero() const { return coeffs_.empty(); }
  /// std::nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<unsigned> degree() const;
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Evaluation of the integer-valued polynomial at an integer modulo modulus().
  Coeff eval(std::int64_t at) const;

  /// Descending-degree text form, e.g. "x^2+3x+1". The zero polynomial prints as "0".
  std::string to_string(char var = 'x') const;

  friend bool operator==(const ModPoly&, const ModPoly&) = default;
  /// Orders by modulus, then degree, then coefficients from the leading one down.
  friend std::strong_ordering operator<=>(const ModPoly& a, const ModPoly& b);

  friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly operator-() const;

 private:
  void normalize();

  std::uint32_t modulus_;
  std::vector<Coeff> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Ring operation in Z_m[x]. Throws DomainError when the moduli differ.
ModPoly poly_arith(const ModPoly& a, const ModPoly& b, PolyOp op);

/// Division by a monic polynomial: a = q*d + r with deg r < deg d.
std::pair<ModPoly, ModPoly> poly_divmod(const ModPoly& a, const ModPoly& d);

/// Coefficientwise reduction Z_{p^2}[x] -> Z_p[x].
ModPoly reduce_mod_p(const ModPoly& a);

/// True when a ≡ b modulo p (both over Z_{p^2}).
bool congruent_mod_p(const ModPoly& a, const ModPoly& b);

/// Reinterprets a polynomial over Z_p as one over Z_{p^2} with the same representatives.
ModPoly lift_to_p2(const ModPoly& a);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const ModPoly& a);

/// All monic irreducible polynomials of degree n over Z_p in lexicographic order
/// (coefficients compared from x^{n-1} down to the constant term).
std::vector<ModPoly> enumerate_monic_irreducibles(std::uint32_t p, unsigned n);

/// Every monic polynomial of degree n over Z_modulus, in the same lexicographic order.
std::vector<ModPoly> enumerate_monic(std::uint32_t modulus, unsigned n);

/// All p^n lifts of a monic ḡ over Z_p to Z_{p^2} (ḡ + p*h with deg h < n), lexicographic.
std::vector<ModPoly> enumerate_lifts(const ModPoly& g_bar);

/// Parses the text format ("x^2+x+1", "3x+2", "x^3 - 1") into a polynomial over Z_modulus.
ModPoly parse_poly(std::string_view text, std::uint32_t modulus, char var = 'x');

}  // namespace zlocal
