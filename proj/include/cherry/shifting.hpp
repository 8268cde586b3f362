#pragma once
// Z1-monotone edge moves: single swaps with their exact Z1 delta, left
// compression of constrained bipartite graphs, the side-exchange normalization
// Delta_right >= Delta_left, shifting of general graphs around an independent
// set, and the clique-prefix statistic omega of a shifted graph.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cherry {

/// Remove `removed`, add `added`; delta is Z1(after) - Z1(before).
struct SwapMove {
  Edge removed;
  Edge added;
  count_t delta = 0;
  friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

/// 2(d(x)+d(y)-d(u)-d(v)) + 4 for disjoint pairs, + 2 when they share a vertex.
inline count_t swap_delta(const Graph& g, Edge removed, Edge added) {
  const auto [u, v] = removed;
  const auto [x, y] = added;
  if (!g.has_edge(u, v))
    throw precondition_violation("swap_delta: removed edge {" + std::to_string(u) + "," +
                                 std::to_string(v) + "} is not in the graph");
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw precondition_violation("swap_delta: added pair is not a valid vertex pair");
  if (g.has_edge(x, y))
    throw precondition_violation("swap_delta: added edge {" + std::to_string(x) + "," +
                                 std::to_string(y) + "} is already present");
  const bool overlap = u == x || u == y || v == x || v == y;
  return 2 * (g.degree(x) + g.degree(y) - g.degree(u) - g.degree(v)) + (overlap ? 2 : 4);
}

inline Graph apply_move(const Graph& g, Edge removed, Edge added) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  if (removed.u > removed.v) std::swap(removed.u, removed.v);
  auto it = std::find(edges.begin(), edges.end(), removed);
  if (it == edges.end()) throw precondition_violation("apply_move: removed edge absent");
  *it = added;
  return Graph(g.order(), std::move(edges));
}

namespace detail {

using Matrix = std::vector<std::vector<char>>;

// Indices 0..n-1 sorted by key descending, ties by index.
template <typename Key>
std::vector<int> order_by_desc(int n, Key key) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return key(a) > key(b); });
  return idx;
}

inline std::vector<int> inverse(const std::vector<int>& order) {
  std::vector<int> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  return pos;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bipartite compression.

/// Rows sorted by nonincreasing degree and every row neighborhood a prefix of
/// the columns. Column neighborhoods are then nested as well.
inline bool is_left_shifted(const BipartiteGraph& b) {
  const auto deg = b.left_degrees();
  for (std::size_t i = 1; i < deg.size(); ++i)
    if (deg[i] > deg[i - 1]) return false;
  for (const auto& e : b.edges())
    if (e.right >= deg[static_cast<std::size_t>(e.left)]) return false;
  return true;
}

struct CompressionResult {
  BipartiteGraph graph;         // rows and columns relabeled into final sorted order
  ConstraintWitness witness;    // in the new row labels
  std::vector<SwapMove> moves;  // original labels; left i -> i, right j -> r + j
  std::vector<int> row_order;   // new row -> original row
  std::vector<int> col_order;   // new column -> original column
};

/// Applies moves u_i w_j -> u_i w_j' (j' < j in the current column order) in
/// row-major scan order, restarting after each move, until every row is a
/// prefix. Row degrees never change, so the witness survives; every move has
/// delta >= 2, so Z1 strictly increases and the loop terminates.
inline CompressionResult left_compress(const BipartiteGraph& b, const ConstraintWitness& witness) {
  if (!witness_holds(b, Side::left, witness))
    throw precondition_violation("left_compress: witness does not hold on the left part");
  const int r = b.left_size();
  const int s = b.right_size();
  detail::Matrix adj(static_cast<std::size_t>(r), std::vector<char>(static_cast<std::size_t>(s), 0));
  for (const auto& e : b.edges()) adj[static_cast<std::size_t>(e.left)][static_cast<std::size_t>(e.right)] = 1;
  std::vector<count_t> col_deg(b.right_degrees().begin(), b.right_degrees().end());
  const auto row_deg = b.left_degrees();

  CompressionResult res;
  res.row_order = detail::order_by_desc(r, [&](int i) { return row_deg[static_cast<std::size_t>(i)]; });

  while (true) {
    res.col_order = detail::order_by_desc(s, [&](int j) { return col_deg[static_cast<std::size_t>(j)]; });
    bool moved = false;
    for (const int i : res.row_order) {
      const auto& row = adj[static_cast<std::size_t>(i)];
      int hole = -1;
      for (int pos = 0; pos < s; ++pos) {
        const int j = res.col_order[static_cast<std::size_t>(pos)];
        if (!row[static_cast<std::size_t>(j)]) {
          if (hole < 0) hole = j;
          continue;
        }
        if (hole < 0) continue;
        const count_t delta =
            2 * (col_deg[static_cast<std::size_t>(hole)] - col_deg[static_cast<std::size_t>(j)]) + 2;
        res.moves.push_back({Edge{i, r + j}, Edge{i, r + hole}, delta});
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(hole)] = 1;
        --col_deg[static_cast<std::size_t>(j)];
        ++col_deg[static_cast<std::size_t>(hole)];
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) break;
  }

  const auto row_pos = detail::inverse(res.row_order);
  const auto col_pos = detail::inverse(res.col_order);
  std::vector<CrossEdge> edges;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j)
      if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        edges.push_back({row_pos[static_cast<std::size_t>(i)], col_pos[static_cast<std::size_t>(j)]});
  res.graph = BipartiteGraph(r, s, std::move(edges));
  res.witness = witness;
  for (auto& v : res.witness.vertices) v = row_pos[static_cast<std::size_t>(v)];
  std::sort(res.witness.vertices.begin(), res.witness.vertices.end());

  if (res.graph.size() != b.size() || z1_index(res.graph) < z1_index(b) ||
      !witness_holds(res.graph, Side::left, res.witness) || !is_left_shifted(res.graph))
    throw verification_error("left_compress: post-condition failed");
  return res;
}

enum class SwapBranch { identity, isolated_relabel, degree_exchange };

inline const char* to_string(SwapBranch b) {
  switch (b) {
    case SwapBranch::identity: return "identity";
    case SwapBranch::isolated_relabel: return "isolated_relabel";
    case SwapBranch::degree_exchange: return "degree_exchange";
  }
  return "?";
}

struct SwapSidesResult {
  BipartiteGraph graph;
  ConstraintWitness witness;  // rows 0..l-1 of the output
  SwapBranch branch = SwapBranch::identity;
  int t = 0;      // 1-based index of the first column with d(w_t) >= d(u_t) (degree_exchange)
  count_t T = 0;  // d(w_t)
};

/// Turns a left-shifted graph with Delta_right < Delta_left into one with the
/// same size, Z1 and degree multiset and Delta_right >= Delta_left, keeping a
/// witness of size l and floor k on rows u_1..u_l.
///   d(u_k) >= l: rows u_s..u_r are isolated; the parts are exchanged, the
///                isolated rows padding the new left part.
///   d(u_k) <= l-1: with t the first index where d(w_t) >= d(u_t) and
///                T = d(w_t), the row and column arms beyond T are exchanged
///                for the first t-1 indices.
inline SwapSidesResult swap_sides(const BipartiteGraph& b, const ConstraintWitness& witness) {
  if (!is_left_shifted(b))
    throw precondition_violation("swap_sides: input must be left-shifted (run left_compress first)");
  if (!witness_holds(b, Side::left, witness))
    throw precondition_violation("swap_sides: witness does not hold on the left part");
  const int r = b.left_size();
  const int s = b.right_size();
  const int l = witness.target_size;
  const count_t k = witness.degree_floor;

  SwapSidesResult res;
  res.witness = ConstraintWitness{{}, l, k};
  for (int i = 0; i < l; ++i) res.witness.vertices.push_back(i);

  if (b.delta_right() >= b.delta_left()) {
    res.graph = b;
    return res;
  }
  if (k < 1 || k > s || k > r)
    throw precondition_violation("swap_sides: degree floor k must lie in [1, s]");
  if (k > l) throw precondition_violation("swap_sides: needs l >= k");
  if (r < s) throw precondition_violation("swap_sides: needs r >= s");

  const auto du = [&](int i) { return b.left_degrees()[static_cast<std::size_t>(i - 1)]; };   // 1-based
  const auto dw = [&](int j) { return b.right_degrees()[static_cast<std::size_t>(j - 1)]; };  // 1-based

  if (du(static_cast<int>(k)) >= l) {
    res.branch = SwapBranch::isolated_relabel;
    for (int i = s; i <= r; ++i)
      if (du(i) != 0) throw verification_error("swap_sides: rows u_s..u_r expected isolated");
    // new left: w_1..w_s, then u_{s+1}..u_r; new right: u_1..u_s
    std::vector<CrossEdge> edges;
    for (const auto& e : b.edges()) edges.push_back({e.right, e.left});
    res.graph = BipartiteGraph(r, s, std::move(edges));
  } else {
    res.branch = SwapBranch::degree_exchange;
    int t = 0;
    for (int j = 1; j <= k; ++j)
      if (dw(j) >= du(j)) {
        t = j;
        break;
      }
    if (t < 2) throw verification_error("swap_sides: no admissible t in [2, k]");
    const count_t T = dw(t);
    if (T < l) throw verification_error("swap_sides: expected T = d(w_t) >= l");
    res.t = t;
    res.T = T;

    detail::Matrix adj(static_cast<std::size_t>(r), std::vector<char>(static_cast<std::size_t>(s), 0));
    for (const auto& e : b.edges()) adj[static_cast<std::size_t>(e.left)][static_cast<std::size_t>(e.right)] = 1;
    auto set = [&](count_t row1, count_t col1, char v) {
      adj[static_cast<std::size_t>(row1 - 1)][static_cast<std::size_t>(col1 - 1)] = v;
    };
    for (int j = 1; j < t; ++j) {
      for (count_t i = T + 1; i <= dw(j); ++i) set(i, j, 0);
      for (count_t i = T + 1; i <= du(j); ++i) set(j, i, 0);
    }
    for (int j = 1; j < t; ++j) {
      for (count_t i = T + 1; i <= du(j); ++i) set(i, j, 1);
      for (count_t i = T + 1; i <= dw(j); ++i) set(j, i, 1);
    }
    std::vector<CrossEdge> edges;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j)
        if (adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) edges.push_back({i, j});
    res.graph = BipartiteGraph(r, s, std::move(edges));
  }

  auto multiset = [](const BipartiteGraph& g) {
    std::vector<count_t> d(g.left_degrees().begin(), g.left_degrees().end());
    d.insert(d.end(), g.right_degrees().begin(), g.right_degrees().end());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (res.graph.size() != b.size() || z1_index(res.graph) != z1_index(b) ||
      multiset(res.graph) != multiset(b) || res.graph.delta_right() < res.graph.delta_left() ||
      !witness_holds(res.graph, Side::left, res.witness))
    throw verification_error(std::string("swap_sides: post-condition failed in branch ") +
                             to_string(res.branch));
  return res;
}

// ---------------------------------------------------------------------------
// General graphs.

/// Witness block I first, then V; both ordered by nonincreasing degree, ties by
/// label. Returns new position -> vertex.
inline std::vector<vertex_t> shift_order(const Graph& g, const ConstraintWitness& w) {
  std::vector<char> in_i(static_cast<std::size_t>(g.order()), 0);
  for (const auto v : w.vertices) in_i[static_cast<std::size_t>(v)] = 1;
  std::vector<vertex_t> iv, vv;
  for (vertex_t v = 0; v < g.order(); ++v) (in_i[static_cast<std::size_t>(v)] ? iv : vv).push_back(v);
  auto by_degree = [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); };
  std::stable_sort(iv.begin(), iv.end(), by_degree);
  std::stable_sort(vv.begin(), vv.end(), by_degree);
  iv.insert(iv.end(), vv.begin(), vv.end());
  return iv;
}

/// Checks, for a graph whose first `block` vertices are the witness and whose
/// remaining vertices are in V order: (i) I->V neighborhoods are prefixes of V;
/// (ii) V-internal edges are down-closed.
inline bool is_general_shifted(const Graph& g, int block) {
  const int n = g.order();
  for (vertex_t u = 0; u < block; ++u) {
    bool gap = false;
    for (vertex_t v = block; v < n; ++v) {
      const bool e = g.has_edge(u, v);
      if (e && gap) return false;
      if (!e) gap = true;
    }
    for (vertex_t u2 = u + 1; u2 < block; ++u2)
      if (g.has_edge(u, u2)) return false;
  }
  for (const auto& e : g.edges()) {
    if (e.u < block) continue;
    for (vertex_t c = block; c < e.v; ++c)
      if (c != e.u && !g.has_edge(e.u, c)) return false;
    for (vertex_t c = block; c < e.u; ++c)
      if (!g.has_edge(c, e.v)) return false;
  }
  return true;
}

struct GeneralShiftResult {
  Graph graph;                 // relabeled: witness block first, then V in final order
  ConstraintWitness witness;   // vertices 0..|I|-1
  std::vector<SwapMove> moves; // original labels
  std::vector<vertex_t> order; // new position -> original vertex
};

/// Applies Z1-increasing swaps until I->V neighborhoods are V-prefixes and
/// G[V] is down-closed under the degree order. I-degrees never change and no
/// edge is ever added inside I.
inline GeneralShiftResult shift_general(const Graph& g, const ConstraintWitness& witness) {
  if (!witness_holds(g, witness))
    throw precondition_violation("shift_general: witness is not a valid independent set");
  const int n = g.order();
  detail::Matrix adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<count_t> deg(g.degrees().begin(), g.degrees().end());
  for (const auto& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
  }
  auto has = [&](vertex_t a, vertex_t b) { return adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; };
  auto d = [&](vertex_t v) { return deg[static_cast<std::size_t>(v)]; };

  std::vector<char> in_i(static_cast<std::size_t>(n), 0);
  for (const auto v : witness.vertices) in_i[static_cast<std::size_t>(v)] = 1;
  std::vector<vertex_t> iv, vv;
  for (vertex_t v = 0; v < n; ++v) (in_i[static_cast<std::size_t>(v)] ? iv : vv).push_back(v);
  std::stable_sort(iv.begin(), iv.end(), [&](vertex_t a, vertex_t b) { return d(a) > d(b); });

  GeneralShiftResult res;
  auto apply = [&](vertex_t a, vertex_t b, vertex_t x, vertex_t y) {
    const count_t overlap = (a == x || a == y || b == x || b == y) ? 2 : 4;
    res.moves.push_back({Edge{std::min(a, b), std::max(a, b)}, Edge{std::min(x, y), std::max(x, y)},
                         2 * (d(x) + d(y) - d(a) - d(b)) + overlap});
    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 0;
    adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = adj[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    --deg[static_cast<std::size_t>(a)];
    --deg[static_cast<std::size_t>(b)];
    ++deg[static_cast<std::size_t>(x)];
    ++deg[static_cast<std::size_t>(y)];
  };

  std::vector<vertex_t> order(vv.size());
  while (true) {
    order = vv;
    std::stable_sort(order.begin(), order.end(), [&](vertex_t a, vertex_t b) { return d(a) > d(b); });
    const int nv = static_cast<int>(order.size());
    auto at = [&](int pos) { return order[static_cast<std::size_t>(pos)]; };
    bool moved = false;

    // (i) witness rows become V-prefixes
    for (const auto u : iv) {
      int hole = -1;
      for (int pos = 0; pos < nv && !moved; ++pos) {
        if (!has(u, at(pos))) {
          if (hole < 0) hole = pos;
        } else if (hole >= 0) {
          apply(u, at(pos), u, at(hole));
          moved = true;
        }
      }
      if (moved) break;
    }
    // (ii) down-closure inside V
    for (int a = 0; a < nv && !moved; ++a)
      for (int b = a + 1; b < nv && !moved; ++b) {
        if (!has(at(a), at(b))) continue;
        for (int c = 0; c < b; ++c)
          if (c != a && !has(at(a), at(c))) {
            apply(at(a), at(b), at(a), at(c));
            moved = true;
            break;
          }
        if (moved) break;
        for (int c = 0; c < a; ++c)
          if (!has(at(c), at(b))) {
            apply(at(a), at(b), at(c), at(b));
            moved = true;
            break;
          }
      }
    if (!moved) break;
  }

  res.order = iv;
  res.order.insert(res.order.end(), order.begin(), order.end());
  std::vector<vertex_t> label(static_cast<std::size_t>(n));
  for (std::size_t p = 0; p < res.order.size(); ++p) label[static_cast<std::size_t>(res.order[p])] = static_cast<vertex_t>(p);
  std::vector<Edge> edges;
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b = a + 1; b < n; ++b)
      if (has(a, b)) edges.push_back({label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]});
  res.graph = Graph(n, std::move(edges));
  res.witness = ConstraintWitness{{}, witness.target_size, witness.degree_floor};
  for (vertex_t p = 0; p < static_cast<vertex_t>(iv.size()); ++p) res.witness.vertices.push_back(p);

  if (res.graph.size() != g.size() || z1_index(res.graph) < z1_index(g) ||
      !witness_holds(res.graph, res.witness) ||
      !is_general_shifted(res.graph, static_cast<int>(iv.size())))
    throw verification_error("shift_general: post-condition failed");
  return res;
}

struct ShiftAnalysis {
  int omega = 0;                        // 1-based clique-prefix index in V
  std::vector<vertex_t> v_order;        // V by nonincreasing degree, ties by label
  std::vector<vertex_t> clique_block;   // V1 = v_1..v_omega
  std::vector<vertex_t> independent_block;  // V2 = v_{omega+1}..
};

/// omega = largest i with v_{i-1} v_i in G (1 when G[V] has no such edge).
/// Throws verification_error if G[V1] is not complete or G[V2] is not empty.
inline ShiftAnalysis analyze_omega(const Graph& g, const ConstraintWitness& witness) {
  std::vector<char> in_i(static_cast<std::size_t>(g.order()), 0);
  for (const auto v : witness.vertices) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("analyze_omega: witness vertex out of range");
    in_i[static_cast<std::size_t>(v)] = 1;
  }
  ShiftAnalysis res;
  for (vertex_t v = 0; v < g.order(); ++v)
    if (!in_i[static_cast<std::size_t>(v)]) res.v_order.push_back(v);
  std::stable_sort(res.v_order.begin(), res.v_order.end(),
                   [&](vertex_t a, vertex_t b) { return g.degree(a) > g.degree(b); });
  const int nv = static_cast<int>(res.v_order.size());
  if (nv == 0) return res;
  res.omega = 1;
  for (int i = nv; i >= 2; --i)
    if (g.has_edge(res.v_order[static_cast<std::size_t>(i - 2)], res.v_order[static_cast<std::size_t>(i - 1)])) {
      res.omega = i;
      break;
    }
  res.clique_block.assign(res.v_order.begin(), res.v_order.begin() + res.omega);
  res.independent_block.assign(res.v_order.begin() + res.omega, res.v_order.end());
  for (std::size_t i = 0; i < res.clique_block.size(); ++i)
    for (std::size_t j = i + 1; j < res.clique_block.size(); ++j)
      if (!g.has_edge(res.clique_block[i], res.clique_block[j]))
        throw verification_error("analyze_omega: V1 is not complete; input is not shifted");
  for (std::size_t i = 0; i < res.independent_block.size(); ++i)
    for (std::size_t j = i + 1; j < res.independent_block.size(); ++j)
      if (g.has_edge(res.independent_block[i], res.independent_block[j]))
        throw verification_error("analyze_omega: V2 is not empty; input is not shifted");
  return res;
}

}  // namespace cherry
