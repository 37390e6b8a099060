#pragma once

// JSON edge-list form of a bipartite graph:
//   {"n_left": 6, "n_right": 6, "edges": [[0, 0], [0, 1], ...]}

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "spectral_lab/graph.hpp"

namespace spectral_lab {

inline nlohmann::json to_json(const BipartiteGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n_left", g.n_left()}, {"n_right", g.n_right()}, {"edges", std::move(edges)}};
}

inline BipartiteGraph bipartite_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_left") || !j.contains("n_right") || !j.contains("edges"))
    throw std::invalid_argument("edge-list JSON needs n_left, n_right and edges");
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge-list JSON: edge must be [u, v]");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return BipartiteGraph(j.at("n_left").get<int>(), j.at("n_right").get<int>(), std::move(edges));
}

inline BipartiteGraph bipartite_from_json(const std::string& text) {
  return bipartite_from_json(nlohmann::json::parse(text));
}

}  // namespace spectral_lab
