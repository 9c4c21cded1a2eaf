#pragma once

// Tiny parser for sums of monomials such as "x^2+x+1", "3x+3" or "x+2*y1".
// Shared by the polynomial text format and the CLI element expressions.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zlocal::expr {

struct Factor {
  std::string name;  // a letter followed by optional digits: x, t, y1, x12
  unsigned power = 1;
};

struct Term {
  std::int64_t coeff = 1;  // signed; callers reduce modulo their own modulus
  std::vector<Factor> factors;
};

/// Parses `text` into terms. Whitespace is ignored. Throws ValidationError on malformed input.
std::vector<Term> parse(std::string_view text);

}  // namespace zlocal::expr
