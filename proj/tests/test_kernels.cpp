#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>

#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zlocal/kernels.hpp"

using namespace zlocal;

namespace {

std::vector<FiniteRing> sample_rings() {
  std::vector<FiniteRing> out;
  out.push_back(fixture::z_mod(2, true));
  out.push_back(fixture::z_mod(3, true));
  out.push_back(fixture::ring(Family::F3, 2, "x^2+x+1", 1));
  out.push_back(fixture::ring(Family::F4, 2, "x^2+x+1", 1, {"1"}));
  out.push_back(fixture::ring(Family::F2, 3, "x^2+1", 1, {"x"}));
  out.push_back(fixture::ring(Family::F1, 2, "x^3+x+1", 1));
  out.push_back(fixture::ring(Family::F3, 2, "x^2+x+1", 0, {}, Variant::as_printed));
  out.push_back(fixture::f0(2, 2, 3));
  out.push_back(fixture::f0(2, 4, 2));
  out.push_back(fixture::f0(3, 3, 2));
  // Z6 and Z2 x Z2: characteristic not a prime power, and a non-local ring.
  out.emplace_back(std::vector<std::string>{"1"}, std::vector<std::uint32_t>{6},
                   StructureConstants{{{1}}}, 0);
  out.emplace_back(std::vector<std::string>{"1", "e"}, std::vector<std::uint32_t>{2, 2},
                   StructureConstants{{{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}}, 0);
  return out;
}

}  // namespace

TEST_CASE("serial and OpenMP kernels agree") {
  for (const auto& R : sample_rings()) {
    CAPTURE(R.order());
    const auto units = kernels::serial::scan_units(R);
    const auto nil = kernels::serial::nilpotency_index(R);
    const auto deg = kernels::serial::minpoly_degree(R);
    // The serial triple check multiplies coefficient vectors directly and is slow past 128 elements.
    const bool small = R.order() <= 128;
    const auto axioms = small ? kernels::serial::check_axioms(R) : kernels::AxiomReport{};
    for (int threads : {1, 3}) {
      omp_set_num_threads(threads);
      CHECK(units == kernels::omp::scan_units(R));
      CHECK(nil == kernels::omp::nilpotency_index(R));
      CHECK(deg == kernels::omp::minpoly_degree(R));
      const auto b = kernels::omp::check_axioms(R);
      CHECK(b.ok());
      if (small) {
        CHECK(axioms.ok());
        CHECK(axioms.mode == b.mode);
        CHECK(axioms.checks == b.checks);
      }
    }
  }
}

TEST_CASE("unit scan matches the definition") {
  for (const auto& R : sample_rings()) {
    if (R.order() > 256) continue;
    const auto scan = kernels::omp::scan_units(R);
    std::vector<char> unit(R.order(), 0), zd(R.order(), 0);
    for (auto u : oracle::units(R)) unit[u] = 1;
    for (auto z : oracle::zero_divisors(R)) zd[z] = 1;
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      CHECK(scan.unit[a] == unit[a]);
      CHECK(scan.zero_divisor[a] == zd[a]);
      std::uint32_t ann = 0;
      for (std::uint64_t b = 0; b < R.order(); ++b) {
        if (R.mul_ids(static_cast<ElementId>(a), static_cast<ElementId>(b)) == 0) ++ann;
      }
      CHECK(scan.annihilator[a] == ann);
    }
  }
}

TEST_CASE("minimal polynomial degree matches the annihilator oracle") {
  for (const auto& R : {fixture::z_mod(3, true), fixture::ring(Family::F3, 2, "x^2+x+1", 1),
                        fixture::ring(Family::F2, 2, "x^2+x+1", 1, {"1"})}) {
    const auto deg = kernels::omp::minpoly_degree(R);
    for (std::uint64_t a = 0; a < R.order(); ++a) {
      const auto polys = oracle::minimal_annihilators(R, R.element(static_cast<ElementId>(a)));
      CHECK(deg[a] == polys.front().size() - 1);
    }
  }
}

TEST_CASE("axiom check modes by ring size") {
  CHECK(kernels::omp::check_axioms(fixture::ring(Family::F3, 2, "x^2+x+1", 1)).mode ==
        kernels::AxiomReport::Mode::all_triples);
  const auto mid = kernels::omp::check_axioms(fixture::ring(Family::F3, 2, "x^2+x+1", 4));
  CHECK(mid.mode == kernels::AxiomReport::Mode::pairs_times_basis);
  CHECK(mid.ok());
  const auto big = kernels::omp::check_axioms(fixture::ring(Family::F1, 2, "x", 12));
  CHECK(big.mode == kernels::AxiomReport::Mode::random_triples);
  CHECK(big.checks >= kernels::kRandomTriples);
  CHECK(big.ok());
}
