#pragma once

// Zero-divisor graph: vertices are the nonzero zero-divisors, edges join distinct u, v with uv = 0.

#include <string>
#include <vector>

#include "json.hpp"

#include "zlocal/finite_ring.hpp"

namespace zlocal {

struct ZdGraph {
  std::vector<ElementId> vertices;               // sorted
  std::vector<std::vector<std::uint32_t>> adjacency;  // per vertex, sorted vertex indices
  std::vector<std::string> labels;               // formatted elements, parallel to vertices

  std::size_t edge_count() const;
  std::vector<std::size_t> degrees() const;
};

ZdGraph build_graph(const FiniteRing& R);

/// Vertices grouped by equal open neighborhood. Groups are ordered by their least vertex, and
/// each group lists vertex indices in increasing order.
std::vector<std::vector<std::uint32_t>> neighborhood_partition(const ZdGraph& G);

bool is_complete(const ZdGraph& G);

std::string to_dot(const ZdGraph& G);
std::string to_csv(const ZdGraph& G);
nlohmann::ordered_json to_json(const ZdGraph& G);

}  // namespace zlocal
