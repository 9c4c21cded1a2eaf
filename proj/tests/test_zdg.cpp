#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "zlocal/classify.hpp"
#include "zlocal/ringcore.hpp"
#include "zlocal/zdg.hpp"

using namespace zlocal;

namespace {

std::vector<std::vector<char>> matrix(const ZdGraph& G) {
  std::vector<std::vector<char>> A(G.vertices.size(), std::vector<char>(G.vertices.size(), 0));
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    for (auto j : G.adjacency[i]) A[i][j] = 1;
  }
  return A;
}

}  // namespace

TEST_CASE("graph examples") {
  const auto z4 = build_graph(fixture::z_mod(2, true));
  CHECK(z4.vertices == std::vector<ElementId>{2});
  CHECK(z4.edge_count() == 0);
  CHECK(is_complete(z4));
  CHECK(neighborhood_partition(z4).size() == 1);

  const auto z9 = build_graph(fixture::z_mod(3, true));
  CHECK(z9.vertices == std::vector<ElementId>{3, 6});
  CHECK(z9.edge_count() == 1);

  const auto R = fixture::ring(Family::F3, 2, "x^2+x+1", 0);
  const auto gr = build_graph(R);
  std::vector<std::string> labels = gr.labels;
  std::sort(labels.begin(), labels.end());
  CHECK(labels == std::vector<std::string>{"2", "2x", "2x+2"});
  CHECK(is_complete(gr));
  CHECK(gr.edge_count() == 3);
  CHECK(neighborhood_partition(gr).size() == 3);
}

TEST_CASE("F0 graph is not complete and has a non-trivial partition") {
  const auto R = fixture::f0(2, 2, 2);
  const auto G = build_graph(R);
  CHECK(G.vertices.size() == 7);
  CHECK_FALSE(is_complete(G));
  const auto parts = neighborhood_partition(G);
  CHECK(parts.size() >= 2);
  const ElementId x1 = R.id(R.parse_element("x1")), x2 = R.id(R.parse_element("x2"));
  const auto i1 = std::find(G.vertices.begin(), G.vertices.end(), x1) - G.vertices.begin();
  const auto i2 = std::find(G.vertices.begin(), G.vertices.end(), x2) - G.vertices.begin();
  const auto& nb = G.adjacency[static_cast<std::size_t>(i1)];
  CHECK(std::find(nb.begin(), nb.end(), static_cast<std::uint32_t>(i2)) == nb.end());
}

TEST_CASE("graph invariants") {
  for (const auto& R : {fixture::ring(Family::F3, 2, "x", 2), fixture::ring(Family::F1, 3, "x", 1),
                        fixture::f0(2, 4, 1), fixture::ring(Family::F2, 2, "x^2+x+1", 1, {"1"})}) {
    const auto G = build_graph(R);
    CHECK(G.vertices.size() + 1 == zero_divisors(R).size());
    for (std::size_t i = 0; i < G.vertices.size(); ++i) {
      CHECK(std::find(G.adjacency[i].begin(), G.adjacency[i].end(), i) == G.adjacency[i].end());
      for (auto j : G.adjacency[i]) {
        CHECK(std::find(G.adjacency[j].begin(), G.adjacency[j].end(), i) != G.adjacency[j].end());
        CHECK(R.mul_ids(G.vertices[i], G.vertices[j]) == 0);
      }
    }
    if (is_z_local(R).is_z_local) CHECK(is_complete(G));
  }
}

TEST_CASE("isomorphic rings give isomorphic graphs") {
  const auto a = fixture::ring(Family::F2, 2, "x^2+x+1", 1, {"1"});
  const auto b = fixture::ring(Family::F1, 2, "x^2+x+1", 1);
  REQUIRE(ring_isomorphic(a, b).has_value());
  const auto ga = build_graph(a), gb = build_graph(b);
  auto da = ga.degrees(), db = gb.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  CHECK(da == db);
  REQUIRE(ga.vertices.size() <= 12);
  CHECK(oracle::graphs_isomorphic(matrix(ga), matrix(gb)));

  const auto c = fixture::f0(2, 2, 2), d = fixture::ring(Family::F3, 2, "x", 2);
  CHECK_FALSE(oracle::graphs_isomorphic(matrix(build_graph(c)), matrix(build_graph(d))));
}

TEST_CASE("exports are stable") {
  const auto G = build_graph(fixture::z_mod(3, true));
  CHECK(to_dot(G) == "graph zdg {\n  v3 [label=\"3\"];\n  v6 [label=\"6\"];\n  v3 -- v6;\n}\n");
  CHECK(to_csv(G) == "u,v,u_label,v_label\n3,6,\"3\",\"6\"\n");
  const auto j = to_json(G);
  CHECK(j["edge_count"] == 1);
  CHECK(j["complete"] == true);
  CHECK(j.dump() == to_json(build_graph(fixture::z_mod(3, true))).dump());
}
