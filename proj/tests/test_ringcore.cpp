#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zlocal/error.hpp"
#include "zlocal/ringcore.hpp"

using namespace zlocal;

namespace {

std::vector<FiniteRing> small_rings() {
  std::vector<FiniteRing> out;
  out.push_back(fixture::z_mod(2, true));
  out.push_back(fixture::z_mod(3, true));
  out.push_back(fixture::ring(Family::F3, 2, "x^2+x+1", 0));
  out.push_back(fixture::ring(Family::F3, 2, "x", 2));
  out.push_back(fixture::ring(Family::F1, 2, "x^2+x+1", 1));
  out.push_back(fixture::ring(Family::F2, 2, "x^2+x+1", 1, {"1"}));
  out.push_back(fixture::f0(2, 2, 2));
  out.push_back(fixture::f0(2, 4, 1));
  out.emplace_back(std::vector<std::string>{"1"}, std::vector<std::uint32_t>{6}, StructureConstants{{{1}}}, 0);
  return out;
}

}  // namespace

TEST_CASE("units, zero-divisors and radical match the oracles") {
  for (const auto& R : small_rings()) {
    CAPTURE(R.order());
    CHECK(units(R) == oracle::units(R));
    CHECK(zero_divisors(R) == oracle::zero_divisors(R));
    const auto J = jacobson_radical(R);
    CHECK(J == oracle::radical_by_units(R));
    CHECK(J == oracle::radical_by_ideals(R));
    CHECK(is_local(R) == (oracle::maximal_ideals(R).size() == 1));
    CHECK(radical_is_consistent(R, J, units(R)));
  }
}

TEST_CASE("Z-local reports") {
  const auto gr = fixture::ring(Family::F3, 2, "x^2+x+1", 0);
  const auto rep = is_z_local(gr);
  CHECK(rep.is_z_local);
  CHECK(rep.J.size() == 4);
  CHECK_FALSE(rep.witness.has_value());

  const auto f0 = fixture::f0(2, 2, 2);
  const auto bad = is_z_local(f0);
  CHECK_FALSE(bad.is_z_local);
  CHECK(bad.J_equals_Z);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->kind == ZLocalWitness::Kind::radical_square_nonzero);
  REQUIRE(bad.witness->elements.size() == 2);
  CHECK(f0.mul_ids(bad.witness->elements[0], bad.witness->elements[1]) != 0);

  const FiniteRing z6({"1"}, {6}, StructureConstants{{{1}}}, 0);
  const auto nl = is_z_local(z6);
  CHECK_FALSE(nl.is_local);
  REQUIRE(nl.witness.has_value());
  CHECK(nl.witness->kind == ZLocalWitness::Kind::not_local);

  const auto field = is_z_local(fixture::ring(Family::F1, 3, "x^2+1", 0));
  CHECK(field.is_z_local);
  CHECK(field.degenerate);
}

TEST_CASE("minimal polynomials match the enumeration oracle") {
  for (const auto& R : {fixture::ring(Family::F3, 2, "x^2+x+1", 0), fixture::ring(Family::F3, 3, "x", 1),
                        fixture::ring(Family::F4, 2, "x^2+x+1", 1, {"1"})}) {
    for (std::uint64_t a = 0; a < R.order(); a += (R.order() > 32 ? 5 : 1)) {
      const RingElement e = R.element(static_cast<ElementId>(a));
      const auto mine = minimal_polynomials(R, e);
      const auto ref = oracle::minimal_annihilators(R, e);
      REQUIRE(mine.size() == ref.size());
      for (std::size_t i = 0; i < ref.size(); ++i) {
        CHECK(oracle::Poly(mine[i].coeffs().begin(), mine[i].coeffs().end()) == ref[i]);
        CHECK(evaluate(R, mine[i], e) == R.zero());
      }
    }
  }
  const auto gr = fixture::ring(Family::F3, 2, "x^2+x+1", 0);
  const auto mp = minimal_polynomials(gr, gr.parse_element("x"));
  REQUIRE(mp.size() == 1);
  CHECK(mp[0].to_string() == "x^2+x+1");
}

TEST_CASE("residue field and K-basis of J") {
  const auto R = fixture::ring(Family::F3, 2, "x^2+x+1", 2);
  const QuotientRing K = residue_field(R);
  CHECK(K.size() == 4);
  CHECK(K.is_field());
  const auto basis = k_basis_of_J(R);
  CHECK(basis.size() == 3);  // p*1, y1, y2
  CHECK(basis[0] == R.id(R.scale(R.one(), 2)));
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= K.size();
  CHECK(size == jacobson_radical(R).size());
  const KSpan span = k_span(R, K, basis);
  CHECK(span.members == jacobson_radical(R));

  CHECK_THROWS_AS(residue_field(FiniteRing({"1"}, {6}, StructureConstants{{{1}}}, 0)), DomainError);
  CHECK_THROWS_AS(k_basis_of_J(fixture::f0(2, 2, 2)), DomainError);
}

TEST_CASE("quotient rings") {
  const auto z9 = fixture::z_mod(3, true);
  const QuotientRing q = quotient_by_ideal(z9, {0, 3, 6});
  CHECK(q.size() == 3);
  CHECK(q.is_field());
  CHECK(q.integer(4) == q.one());
  CHECK_THROWS_AS(quotient_by_ideal(z9, {0, 1}), DomainError);
  CHECK_THROWS_AS(require_enumerable(z9, 4), ResourceError);
}
