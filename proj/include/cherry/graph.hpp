#pragma once
// Graph value types and exact degree statistics: cherries N(S2), the first
// Zagreb index Z1, densities, and constrained independent-set witnesses.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cherry {

using vertex_t = int;
using count_t = std::int64_t;

constexpr count_t choose2(count_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }
constexpr count_t choose3(count_t n) noexcept {
  return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3;
}

// Largest vertex count for which C(n,2)^2 fits in a signed 64-bit integer.
// Every exact counter below is safe up to this order.
inline constexpr int kMaxOrder = [] {
  constexpr auto limit = std::numeric_limits<count_t>::max();
  count_t n = 2;
  while (true) {
    const count_t c = choose2(n + 1);
    if (c > limit / c) return static_cast<int>(n);
    ++n;
  }
}();

/// Exact nonnegative fraction kept in lowest terms.
struct Rational {
  count_t num = 0;
  count_t den = 1;

  static Rational make(count_t num, count_t den) {
    if (den <= 0) throw std::invalid_argument("Rational: denominator must be positive");
    const count_t g = std::gcd(num, den);
    return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
  }
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<__int128>(a.num) * b.den;
    const auto rhs = static_cast<__int128>(b.num) * a.den;
    return lhs <=> rhs;
  }
};

template <std::ranges::input_range R>
count_t z1_from_degrees(R&& degrees) {
  count_t z = 0;
  for (const auto d : degrees) z += static_cast<count_t>(d) * static_cast<count_t>(d);
  return z;
}

template <std::ranges::input_range R>
count_t cherries_from_degrees(R&& degrees) {
  count_t c = 0;
  for (const auto d : degrees) c += choose2(static_cast<count_t>(d));
  return c;
}

struct Edge {
  vertex_t u = 0;
  vertex_t v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; edges are
/// stored with u < v in lexicographic order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : Graph(n, {}) {}

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    if (n > kMaxOrder)
      throw std::length_error("Graph: n = " + std::to_string(n) +
                              " exceeds the exact-arithmetic limit " + std::to_string(kMaxOrder));
    for (auto& e : edges_) {
      if (e.u == e.v) throw std::invalid_argument("Graph: loop at vertex " + std::to_string(e.u));
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n)
        throw std::invalid_argument("Graph: edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} outside [0," + std::to_string(n) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
      throw std::invalid_argument("Graph: repeated edge {" + std::to_string(it->u) + "," +
                                  std::to_string(it->v) + "}");
    degree_.assign(static_cast<std::size_t>(n), 0);
    for (const auto& e : edges_) {
      ++degree_[static_cast<std::size_t>(e.u)];
      ++degree_[static_cast<std::size_t>(e.v)];
    }
  }

  int order() const noexcept { return n_; }
  count_t size() const noexcept { return static_cast<count_t>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const count_t> degrees() const noexcept { return degree_; }
  count_t degree(vertex_t v) const { return degree_.at(static_cast<std::size_t>(v)); }

  bool has_edge(vertex_t a, vertex_t b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
  }

  Graph complement() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(choose2(n_) - size()));
    auto it = edges_.begin();
    for (vertex_t u = 0; u < n_; ++u)
      for (vertex_t v = u + 1; v < n_; ++v) {
        if (it != edges_.end() && it->u == u && it->v == v) {
          ++it;
          continue;
        }
        out.push_back({u, v});
      }
    return Graph(n_, std::move(out));
  }

  Graph with_edge(vertex_t a, vertex_t b) const {
    auto e = edges_;
    e.push_back({a, b});
    return Graph(n_, std::move(e));
  }

  // new_label[old] = new; must be a permutation of 0..n-1.
  Graph relabeled(std::span<const vertex_t> new_label) const {
    if (static_cast<int>(new_label.size()) != n_)
      throw std::invalid_argument("Graph::relabeled: permutation size mismatch");
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_)
      out.push_back({new_label[static_cast<std::size_t>(e.u)],
                     new_label[static_cast<std::size_t>(e.v)]});
    return Graph(n_, std::move(out));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<count_t> degree_;
};

struct CrossEdge {
  int left = 0;
  int right = 0;
  friend auto operator<=>(const CrossEdge&, const CrossEdge&) = default;
};

enum class Side { left, right };

/// r x s bipartite graph with parts U = {0..r-1} and W = {0..s-1}.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(int r, int s) : BipartiteGraph(r, s, {}) {}

  BipartiteGraph(int r, int s, std::vector<CrossEdge> edges)
      : r_(r), s_(s), edges_(std::move(edges)) {
    if (r < 0 || s < 0) throw std::invalid_argument("BipartiteGraph: negative part size");
    if (r + s > kMaxOrder) throw std::length_error("BipartiteGraph: too many vertices");
    for (const auto& e : edges_)
      if (e.left < 0 || e.left >= r || e.right < 0 || e.right >= s)
        throw std::invalid_argument("BipartiteGraph: edge (" + std::to_string(e.left) + "," +
                                    std::to_string(e.right) + ") outside [" + std::to_string(r) +
                                    "]x[" + std::to_string(s) + "]");
    std::sort(edges_.begin(), edges_.end());
    if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end())
      throw std::invalid_argument("BipartiteGraph: repeated edge (" + std::to_string(it->left) +
                                  "," + std::to_string(it->right) + ")");
    left_degree_.assign(static_cast<std::size_t>(r), 0);
    right_degree_.assign(static_cast<std::size_t>(s), 0);
    for (const auto& e : edges_) {
      ++left_degree_[static_cast<std::size_t>(e.left)];
      ++right_degree_[static_cast<std::size_t>(e.right)];
    }
  }

  int left_size() const noexcept { return r_; }
  int right_size() const noexcept { return s_; }
  count_t size() const noexcept { return static_cast<count_t>(edges_.size()); }
  std::span<const CrossEdge> edges() const noexcept { return edges_; }
  std::span<const count_t> left_degrees() const noexcept { return left_degree_; }
  std::span<const count_t> right_degrees() const noexcept { return right_degree_; }
  std::span<const count_t> degrees(Side side) const noexcept {
    return side == Side::left ? left_degrees() : right_degrees();
  }

  count_t delta_left() const noexcept {
    return left_degree_.empty() ? 0 : *std::max_element(left_degree_.begin(), left_degree_.end());
  }
  count_t delta_right() const noexcept {
    return right_degree_.empty() ? 0
                                 : *std::max_element(right_degree_.begin(), right_degree_.end());
  }

  bool has_edge(int i, int j) const {
    return std::binary_search(edges_.begin(), edges_.end(), CrossEdge{i, j});
  }

  BipartiteGraph transposed() const {
    std::vector<CrossEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({e.right, e.left});
    return BipartiteGraph(s_, r_, std::move(out));
  }

  // Left vertex i -> i, right vertex j -> r + j.
  Graph to_graph() const {
    std::vector<Edge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.push_back({e.left, r_ + e.right});
    return Graph(r_ + s_, std::move(out));
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.r_ == b.r_ && a.s_ == b.s_ && a.edges_ == b.edges_;
  }

 private:
  int r_ = 0;
  int s_ = 0;
  std::vector<CrossEdge> edges_;
  std::vector<count_t> left_degree_;
  std::vector<count_t> right_degree_;
};

inline count_t count_cherries(const Graph& g) { return cherries_from_degrees(g.degrees()); }
inline count_t z1_index(const Graph& g) { return z1_from_degrees(g.degrees()); }

inline count_t count_cherries(const BipartiteGraph& b) {
  return cherries_from_degrees(b.left_degrees()) + cherries_from_degrees(b.right_degrees());
}
inline count_t z1_index(const BipartiteGraph& b) {
  return z1_from_degrees(b.left_degrees()) + z1_from_degrees(b.right_degrees());
}

// Z1 = 2 N(S2) + 2|G|, used to move between the two conventions.
constexpr count_t cherries_from_z1(count_t z1, count_t edges) noexcept { return (z1 - 2 * edges) / 2; }
constexpr count_t z1_from_cherries(count_t cherries, count_t edges) noexcept {
  return 2 * cherries + 2 * edges;
}

struct Densities {
  Rational edge;
  Rational cherry;
};

inline Rational edge_density(count_t n, count_t edges) {
  if (n < 2) throw undefined_density("edge density needs n >= 2, got n = " + std::to_string(n));
  return Rational::make(edges, choose2(n));
}

inline Rational cherry_density(count_t n, count_t cherries) {
  if (n < 3) throw undefined_density("cherry density needs n >= 3, got n = " + std::to_string(n));
  const auto den = static_cast<__int128>(3) * choose3(n);
  if (den > std::numeric_limits<count_t>::max())
    throw std::overflow_error("cherry density: 3*C(n,3) overflows");
  return Rational::make(cherries, static_cast<count_t>(den));
}

/// (|G| / C(n,2), N(S2,G) / (3 C(n,3))).
inline Densities densities(const Graph& g) {
  return {edge_density(g.order(), g.size()), cherry_density(g.order(), count_cherries(g))};
}

inline count_t min_degree_over_set(const Graph& g, std::span<const vertex_t> set) {
  if (set.empty()) throw std::invalid_argument("min_degree_over_set: empty vertex set");
  count_t best = std::numeric_limits<count_t>::max();
  for (const auto v : set) {
    if (v < 0 || v >= g.order())
      throw std::invalid_argument("min_degree_over_set: vertex " + std::to_string(v) +
                                  " outside the graph");
    best = std::min(best, g.degree(v));
  }
  return best;
}

/// An independent set I with |I| >= target_size whose vertices all have
/// degree >= degree_floor.
struct ConstraintWitness {
  std::vector<vertex_t> vertices;
  int target_size = 0;
  count_t degree_floor = 0;
  friend bool operator==(const ConstraintWitness&, const ConstraintWitness&) = default;
};

inline bool witness_holds(const Graph& g, const ConstraintWitness& w) {
  if (static_cast<int>(w.vertices.size()) < w.target_size) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const auto v = w.vertices[i];
    if (v < 0 || v >= g.order() || g.degree(v) < w.degree_floor) return false;
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
      if (w.vertices[j] == v || g.has_edge(v, w.vertices[j])) return false;
  }
  return true;
}

// On a bipartite graph the witness lives on one side, so independence is free.
inline bool witness_holds(const BipartiteGraph& b, Side side, const ConstraintWitness& w) {
  if (static_cast<int>(w.vertices.size()) < w.target_size) return false;
  const auto deg = b.degrees(side);
  std::vector<vertex_t> sorted = w.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return std::all_of(sorted.begin(), sorted.end(), [&](vertex_t v) {
    return v >= 0 && v < static_cast<vertex_t>(deg.size()) &&
           deg[static_cast<std::size_t>(v)] >= w.degree_floor;
  });
}

inline constexpr std::uint64_t kDefaultWitnessCap = 50'000'000;

/// Searches the vertices of degree >= k for an independent l-subset. Subsets are
/// visited in colexicographic order of candidate positions and the first hit
/// wins. Throws cap_exceeded once more than `cap` subsets have been examined.
inline std::optional<ConstraintWitness> find_constraint_witness(
    const Graph& g, int l, count_t k, std::uint64_t cap = kDefaultWitnessCap) {
  if (l < 0 || k < 0) throw std::invalid_argument("find_constraint_witness: negative l or k");
  if (l == 0) return ConstraintWitness{{}, 0, k};

  std::vector<vertex_t> cand;
  for (vertex_t v = 0; v < g.order(); ++v)
    if (g.degree(v) >= k) cand.push_back(v);
  const int c = static_cast<int>(cand.size());
  if (c < l) return std::nullopt;

  std::vector<int> pos(static_cast<std::size_t>(l));
  std::iota(pos.begin(), pos.end(), 0);
  std::uint64_t examined = 0;
  while (true) {
    if (++examined > cap)
      throw cap_exceeded("find_constraint_witness: more than " + std::to_string(cap) +
                         " candidate sets");
    bool independent = true;
    for (int i = 0; i < l && independent; ++i)
      for (int j = i + 1; j < l; ++j)
        if (g.has_edge(cand[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])],
                       cand[static_cast<std::size_t>(pos[static_cast<std::size_t>(j)])])) {
          independent = false;
          break;
        }
    if (independent) {
      ConstraintWitness w{{}, l, k};
      for (const auto p : pos) w.vertices.push_back(cand[static_cast<std::size_t>(p)]);
      return w;
    }
    // colex successor
    int i = 0;
    while (i < l) {
      const int limit = (i + 1 < l) ? pos[static_cast<std::size_t>(i + 1)] : c;
      if (pos[static_cast<std::size_t>(i)] + 1 < limit) break;
      ++i;
    }
    if (i == l) return std::nullopt;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) pos[static_cast<std::size_t>(j)] = j;
  }
}

}  // namespace cherry
