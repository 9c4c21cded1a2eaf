#pragma once

// Shorthand constructors for the rings used across the tests.

#include <string>
#include <vector>

#include "zlocal/compile.hpp"
#include "zlocal/presentation.hpp"

namespace fixture {

inline zlocal::RingPresentation pres(zlocal::Family family, std::uint32_t p, std::string g, unsigned m,
                                     std::vector<std::string> v = {},
                                     zlocal::Variant variant = zlocal::Variant::corrected) {
  zlocal::PresentationParams params;
  params.family = family;
  params.p = p;
  params.g = std::move(g);
  params.m = m;
  params.v = std::move(v);
  params.variant = variant;
  return zlocal::build_presentation(params);
}

inline zlocal::FiniteRing ring(zlocal::Family family, std::uint32_t p, std::string g, unsigned m,
                               std::vector<std::string> v = {},
                               zlocal::Variant variant = zlocal::Variant::corrected) {
  return zlocal::compile(pres(family, p, std::move(g), m, std::move(v), variant));
}

inline zlocal::FiniteRing f0(std::uint32_t p, std::uint32_t base, unsigned k) {
  zlocal::PresentationParams params;
  params.family = zlocal::Family::F0;
  params.p = p;
  params.base = base;
  params.n_vars = k;
  return zlocal::compile(zlocal::build_presentation(params));
}

inline zlocal::FiniteRing z_mod(std::uint32_t p, bool square) {
  return square ? ring(zlocal::Family::F3, p, "x", 0) : ring(zlocal::Family::F1, p, "x", 0);
}

}  // namespace fixture
