#pragma once
// JSON interchange: {"n": int, "edges": [[u,v],...]} with u < v sorted, and the
// bipartite variant {"r": int, "s": int, "edges": [[i,j],...]}. Labels are 0-based.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "graph.hpp"

namespace cherry {

using json = nlohmann::json;

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

inline json to_json(const BipartiteGraph& b) {
  json edges = json::array();
  for (const auto& e : b.edges()) edges.push_back({e.left, e.right});
  return {{"r", b.left_size()}, {"s", b.right_size()}, {"edges", std::move(edges)}};
}

inline json to_json(const ConstraintWitness& w) {
  return {{"vertices", w.vertices}, {"target_size", w.target_size}, {"degree_floor", w.degree_floor}};
}

namespace detail {

inline std::pair<int, int> read_pair(const json& e) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
    throw std::invalid_argument("graph JSON: every edge must be a pair of integers, got " + e.dump());
  return {e[0].get<int>(), e[1].get<int>()};
}

inline int read_size(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw std::invalid_argument(std::string("graph JSON: missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

inline const json& read_edges(const json& j) {
  if (!j.contains("edges") || !j["edges"].is_array())
    throw std::invalid_argument("graph JSON: missing array field \"edges\"");
  return j["edges"];
}

}  // namespace detail

inline Graph graph_from_json(const json& j) {
  const int n = detail::read_size(j, "n");
  std::vector<Edge> edges;
  for (const auto& e : detail::read_edges(j)) {
    auto [u, v] = detail::read_pair(e);
    edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

inline BipartiteGraph bipartite_from_json(const json& j) {
  const int r = detail::read_size(j, "r");
  const int s = detail::read_size(j, "s");
  std::vector<CrossEdge> edges;
  for (const auto& e : detail::read_edges(j)) {
    auto [i, k] = detail::read_pair(e);
    edges.push_back({i, k});
  }
  return BipartiteGraph(r, s, std::move(edges));
}

using AnyGraph = std::variant<Graph, BipartiteGraph>;

inline AnyGraph any_graph_from_json(const json& j) {
  if (j.contains("n")) return graph_from_json(j);
  if (j.contains("r") && j.contains("s")) return bipartite_from_json(j);
  throw std::invalid_argument("graph JSON: expected {\"n\",\"edges\"} or {\"r\",\"s\",\"edges\"}");
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

}  // namespace cherry
