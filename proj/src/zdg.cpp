#include <algorithm>
#include <map>
#include <sstream>

#include "zlocal/ringcore.hpp"
#include "zlocal/zdg.hpp"

namespace zlocal {

std::size_t ZdGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nb : adjacency) twice += nb.size();
  return twice / 2;
}

std::vector<std::size_t> ZdGraph::degrees() const {
  std::vector<std::size_t> out;
  for (const auto& nb : adjacency) out.push_back(nb.size());
  return out;
}

ZdGraph build_graph(const FiniteRing& R) {
  ZdGraph G;
  for (auto z : zero_divisors(R)) {
    if (z != 0) G.vertices.push_back(z);
  }
  G.adjacency.resize(G.vertices.size());
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    G.labels.push_back(R.format(G.vertices[i]));
    for (std::size_t j = i + 1; j < G.vertices.size(); ++j) {
      if (R.mul_ids(G.vertices[i], G.vertices[j]) == 0) {
        G.adjacency[i].push_back(static_cast<std::uint32_t>(j));
        G.adjacency[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  for (auto& nb : G.adjacency) std::sort(nb.begin(), nb.end());
  return G;
}

std::vector<std::vector<std::uint32_t>> neighborhood_partition(const ZdGraph& G) {
  std::map<std::vector<std::uint32_t>, std::size_t> group_of;
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::uint32_t v = 0; v < G.adjacency.size(); ++v) {
    auto [it, fresh] = group_of.emplace(G.adjacency[v], groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(v);
  }
  return groups;
}

bool is_complete(const ZdGraph& G) {
  for (const auto& nb : G.adjacency) {
    if (nb.size() + 1 != G.vertices.size()) return false;
  }
  return true;
}

std::string to_dot(const ZdGraph& G) {
  std::ostringstream out;
  out << "graph zdg {\n";
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    out << "  v" << G.vertices[i] << " [label=\"" << G.labels[i] << "\"];\n";
  }
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    for (auto j : G.adjacency[i]) {
      if (j > i) out << "  v" << G.vertices[i] << " -- v" << G.vertices[j] << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_csv(const ZdGraph& G) {
  std::ostringstream out;
  out << "u,v,u_label,v_label\n";
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    for (auto j : G.adjacency[i]) {
      if (j > i) {
        out << G.vertices[i] << "," << G.vertices[j] << ",\"" << G.labels[i] << "\",\"" << G.labels[j] << "\"\n";
      }
    }
  }
  return out.str();
}

nlohmann::ordered_json to_json(const ZdGraph& G) {
  nlohmann::ordered_json j;
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < G.vertices.size(); ++i) {
    nlohmann::ordered_json v;
    v["id"] = G.vertices[i];
    v["label"] = G.labels[i];
    auto nb = nlohmann::ordered_json::array();
    for (auto k : G.adjacency[i]) nb.push_back(G.vertices[k]);
    v["neighbors"] = std::move(nb);
    vertices.push_back(std::move(v));
  }
  j["vertices"] = std::move(vertices);
  j["edge_count"] = G.edge_count();
  j["complete"] = is_complete(G);
  auto parts = nlohmann::ordered_json::array();
  for (const auto& grp : neighborhood_partition(G)) {
    auto a = nlohmann::ordered_json::array();
    for (auto v : grp) a.push_back(G.vertices[v]);
    parts.push_back(std::move(a));
  }
  j["neighborhood_partition"] = std::move(parts);
  return j;
}

}  // namespace zlocal
