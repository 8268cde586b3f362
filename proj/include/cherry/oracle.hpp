#pragma once
// Exhaustive maximization of Z1 over constrained families at desk scale.
// Edge subsets are m-subsets of bit positions, enumerated in colex order;
// parallel work is split by the highest set bit and merged by (max Z1, summed
// count, smallest optimal mask), so results do not depend on the job count.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "constructions.hpp"
#include "io.hpp"
#include "shifting.hpp"

namespace cherry {

enum class SearchMode { full, shifted };

inline const char* to_string(SearchMode m) { return m == SearchMode::full ? "full" : "shifted"; }

inline constexpr std::uint64_t kDefaultSearchCap = 200'000'000;

struct CandidateValue {
  std::string name;
  bool constructible = false;  // built without an index collision or guard failure
  bool has_witness = false;    // carries a constraint witness
  count_t z1 = 0;
  bool attains = false;        // equals the oracle optimum
};

struct OracleReport {
  std::string family;  // bipartite-left | bipartite-right | general
  SearchMode mode = SearchMode::full;
  std::vector<std::pair<std::string, count_t>> params;
  bool feasible = false;         // some graph in the family exists
  count_t optimum_z1 = 0;
  count_t optimum_cherries = 0;  // display only
  count_t optimal_count = 0;     // full: labeled graphs; shifted: Ferrers shapes
  std::uint64_t explored = 0;
  std::optional<AnyGraph> witness_graph;
  std::optional<ConstraintWitness> witness;
  std::string branch;            // theorem branch / best construction
  count_t predicted_z1 = 0;
  bool prediction_feasible = true;     // predicted graph lies in the family
  std::optional<bool> boundary_agree;  // m = rk: both branch predictions equal
  bool match = false;                  // optimum == predicted
  std::vector<CandidateValue> candidates;

  bool ok() const { return match && prediction_feasible && boundary_agree.value_or(true); }
};

namespace detail {

inline std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 v = 1;
  for (int i = 1; i <= k; ++i) {
    v = v * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (v > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(v);
}

inline void check_cap(int bits, count_t m, std::uint64_t cap, const char* who) {
  if (bits > 63) throw cap_exceeded(std::string(who) + ": more than 63 edge slots");
  const auto total = binomial_capped(bits, static_cast<int>(m), cap);
  if (total > cap)
    throw cap_exceeded(std::string(who) + ": C(" + std::to_string(bits) + "," + std::to_string(m) +
                       ") subsets exceed the search cap " + std::to_string(cap));
}

// Next mask with the same popcount (Gosper).
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

struct SearchState {
  bool found = false;
  count_t best = 0;
  count_t count = 0;
  std::uint64_t mask = 0;
  std::uint64_t explored = 0;

  void offer(count_t z, std::uint64_t m) {
    if (!found || z > best) {
      found = true;
      best = z;
      count = 1;
      mask = m;
    } else if (z == best) {
      ++count;
      if (m < mask) mask = m;
    }
  }
  void merge(const SearchState& o) {
    explored += o.explored;
    if (!o.found) return;
    if (!found || o.best > best) {
      found = true;
      best = o.best;
      count = o.count;
      mask = o.mask;
    } else if (o.best == best) {
      count += o.count;
      mask = std::min(mask, o.mask);
    }
  }
};

// Visits every m-subset of [0, bits) in colex order, split across jobs by
// the highest element. score(mask) returns nullopt for graphs outside the family.
template <typename Score>
SearchState enumerate_subsets(int bits, int m, int jobs, Score score) {
  SearchState total;
  if (m == 0) {
    ++total.explored;
    if (auto z = score(std::uint64_t{0})) total.offer(*z, 0);
    return total;
  }
  if (m > bits) return total;
  auto run_top = [&](int top, SearchState& st) {
    const std::uint64_t high = std::uint64_t{1} << top;
    const int rest = m - 1;
    if (rest > top) return;
    if (rest == 0) {
      ++st.explored;
      if (auto z = score(high)) st.offer(*z, high);
      return;
    }
    const std::uint64_t end = std::uint64_t{1} << top;
    for (std::uint64_t x = (std::uint64_t{1} << rest) - 1; x < end; x = next_combination(x)) {
      ++st.explored;
      if (auto z = score(x | high)) st.offer(*z, x | high);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (int top = m - 1; top < bits; ++top) run_top(top, total);
    return total;
  }
  std::vector<SearchState> parts(static_cast<std::size_t>(jobs));
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      // the largest tops dominate the work; deal them out from the top down
      int idx = 0;
      for (int top = bits - 1; top >= m - 1; --top, ++idx)
        if (idx % jobs == w) run_top(top, parts[static_cast<std::size_t>(w)]);
    });
  for (auto& t : pool) t.join();
  for (const auto& p : parts) total.merge(p);
  return total;
}

// Bipartite layout: bit i*s + j is the edge (u_i, w_j).
struct BipartiteLayout {
  int r, s;
  std::vector<std::uint64_t> col_masks;
  BipartiteLayout(int r_, int s_) : r(r_), s(s_), col_masks(static_cast<std::size_t>(s_), 0) {
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j) col_masks[static_cast<std::size_t>(j)] |= std::uint64_t{1} << (i * s + j);
  }
  std::uint64_t row_bits() const { return s == 0 ? 0 : (std::uint64_t{1} << s) - 1; }
  BipartiteGraph graph(std::uint64_t mask) const {
    std::vector<CrossEdge> e;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < s; ++j)
        if (mask >> (i * s + j) & 1) e.push_back({i, j});
    return BipartiteGraph(r, s, std::move(e));
  }
};

// Is the t-th largest value of d[0..n) at least floor? (t = 0: vacuous)
inline bool order_statistic_at_least(const int* d, int n, int t, int floor) {
  if (t == 0) return true;
  int c = 0;
  for (int i = 0; i < n; ++i)
    if (d[i] >= floor && ++c >= t) return true;
  return false;
}

struct Prediction {
  std::string branch;
  count_t z1 = 0;
  BipartiteGraph graph;
  std::optional<bool> boundary_agree;
};

inline Prediction bipartite_prediction(const BipartiteFamilyParams& p) {
  const count_t rk = static_cast<count_t>(p.r) * p.k;
  Prediction out;
  std::optional<count_t> lower;
  if (p.m <= rk) {
    const bool b1 = p.k + p.l <= p.r;
    out.graph = b1 ? b1_family(p) : b2_family(p);
    out.branch = b1 ? "B1" : "B2";
    out.z1 = z1_index(out.graph);
    lower = out.z1;
  }
  if (p.m >= rk) {
    auto g = ak_bipartite(p.r, p.s, p.m);
    const count_t z = z1_index(g);
    if (lower) {
      out.boundary_agree = (*lower == z);
    } else {
      out.graph = std::move(g);
      out.branch = "B";
      out.z1 = z;
    }
  }
  return out;
}

inline std::vector<std::pair<std::string, count_t>> bipartite_params(const BipartiteFamilyParams& p) {
  return {{"r", p.r}, {"s", p.s}, {"l", p.l}, {"k", p.k}, {"m", p.m}};
}

// Ferrers shapes lambda_1 >= .. >= lambda_r with parts <= s summing to m.
template <typename Visit>
void for_each_partition(int r, int s, count_t m, Visit visit) {
  std::vector<int> parts(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int i, int cap, count_t left) -> void {
    if (i == r) {
      if (left == 0) visit(parts);
      return;
    }
    if (left > static_cast<count_t>(cap) * (r - i)) return;
    for (int v = static_cast<int>(std::min<count_t>(cap, left)); v >= 0; --v) {
      parts[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, v, left - v);
    }
    parts[static_cast<std::size_t>(i)] = 0;
  };
  rec(rec, 0, s, m);
}

inline OracleReport phi_bipartite_impl(const BipartiteFamilyParams& p, SearchMode mode, Side side,
                                       int jobs, std::uint64_t cap) {
  p.validate();
  OracleReport rep;
  rep.family = side == Side::left ? "bipartite-left" : "bipartite-right";
  rep.mode = mode;
  rep.params = bipartite_params(p);
  // witness size and floor on the constrained side
  const int wsize = side == Side::left ? p.l : p.k;
  const int wfloor = side == Side::left ? p.k : p.l;

  if (mode == SearchMode::full) {
    check_cap(p.r * p.s, p.m, cap, "phi_bipartite");
    const BipartiteLayout lay(p.r, p.s);
    const auto rowbits = lay.row_bits();
    auto score = [&](std::uint64_t mask) -> std::optional<count_t> {
      int dl[64], dr[64];
      count_t z = 0;
      for (int i = 0; i < p.r; ++i) {
        dl[i] = std::popcount((mask >> (i * p.s)) & rowbits);
        z += static_cast<count_t>(dl[i]) * dl[i];
      }
      for (int j = 0; j < p.s; ++j) {
        dr[j] = std::popcount(mask & lay.col_masks[static_cast<std::size_t>(j)]);
        z += static_cast<count_t>(dr[j]) * dr[j];
      }
      const bool ok = side == Side::left ? order_statistic_at_least(dl, p.r, wsize, wfloor)
                                         : order_statistic_at_least(dr, p.s, wsize, wfloor);
      if (!ok) return std::nullopt;
      return z;
    };
    const auto st = enumerate_subsets(p.r * p.s, static_cast<int>(p.m), jobs, score);
    rep.explored = st.explored;
    rep.feasible = st.found;
    if (st.found) {
      rep.optimum_z1 = st.best;
      rep.optimal_count = st.count;
      rep.witness_graph = lay.graph(st.mask);
    }
  } else {
    // nested row neighborhoods: row i is [0, lambda_i), columns are the conjugate
    SearchState st;
    std::vector<int> best_parts;
    for_each_partition(p.r, p.s, p.m, [&](const std::vector<int>& lam) {
      ++st.explored;
      if (st.explored > cap) throw cap_exceeded("phi_bipartite: shifted enumeration exceeds the search cap");
      std::vector<int> conj(static_cast<std::size_t>(p.s), 0);
      count_t z = 0;
      for (int v : lam) {
        z += static_cast<count_t>(v) * v;
        for (int j = 0; j < v; ++j) ++conj[static_cast<std::size_t>(j)];
      }
      for (int c : conj) z += static_cast<count_t>(c) * c;
      const bool ok = side == Side::left ? order_statistic_at_least(lam.data(), p.r, wsize, wfloor)
                                         : order_statistic_at_least(conj.data(), p.s, wsize, wfloor);
      if (!ok) return;
      const bool better = !st.found || z > st.best;
      st.offer(z, 0);
      if (better) best_parts = lam;
    });
    rep.explored = st.explored;
    rep.feasible = st.found;
    if (st.found) {
      rep.optimum_z1 = st.best;
      rep.optimal_count = st.count;
      std::vector<CrossEdge> e;
      for (int i = 0; i < p.r; ++i)
        for (int j = 0; j < best_parts[static_cast<std::size_t>(i)]; ++j) e.push_back({i, j});
      rep.witness_graph = BipartiteGraph(p.r, p.s, std::move(e));
    }
  }

  if (rep.witness_graph) {
    const auto& g = std::get<BipartiteGraph>(*rep.witness_graph);
    // the first wsize vertices by degree (ties by label) form the witness
    const auto deg = g.degrees(side);
    const auto order = order_by_desc(static_cast<int>(deg.size()), [&](int v) { return deg[static_cast<std::size_t>(v)]; });
    ConstraintWitness w{{}, wsize, wfloor};
    for (int i = 0; i < wsize; ++i) w.vertices.push_back(order[static_cast<std::size_t>(i)]);
    std::sort(w.vertices.begin(), w.vertices.end());
    if (!witness_holds(g, side, w)) throw verification_error("phi_bipartite: optimal graph lacks a witness");
    rep.witness = std::move(w);
    rep.optimum_cherries = cherries_from_z1(rep.optimum_z1, p.m);
  }

  auto pred = bipartite_prediction(p);
  rep.branch = pred.branch;
  rep.predicted_z1 = pred.z1;
  rep.boundary_agree = pred.boundary_agree;
  {
    const auto deg = pred.graph.degrees(side);
    std::vector<int> d(deg.begin(), deg.end());
    rep.prediction_feasible = order_statistic_at_least(d.data(), static_cast<int>(d.size()), wsize, wfloor);
  }
  rep.match = rep.feasible && rep.optimum_z1 == rep.predicted_z1;
  return rep;
}

}  // namespace detail

/// phi(r,s,l,k,m): max Z1 over r x s bipartite graphs with m edges and l left
/// vertices of degree >= k, against the B1 / B2 / B(r,s,m) prediction.
inline OracleReport phi_bipartite(const BipartiteFamilyParams& p, SearchMode mode = SearchMode::full,
                                  int jobs = 1, std::uint64_t cap = kDefaultSearchCap) {
  return detail::phi_bipartite_impl(p, mode, Side::left, jobs, cap);
}

/// Same family with k right vertices of degree >= l.
inline OracleReport phi_bipartite_right(const BipartiteFamilyParams& p, SearchMode mode = SearchMode::full,
                                        int jobs = 1, std::uint64_t cap = kDefaultSearchCap) {
  return detail::phi_bipartite_impl(p, mode, Side::right, jobs, cap);
}

namespace detail {

// Bit index of {u,v} (u < v) in colex order of pairs: C(v,2) + u.
inline int pair_bit(int u, int v) { return v * (v - 1) / 2 + u; }

struct GeneralLayout {
  int n;
  std::vector<std::pair<int, int>> pairs;
  explicit GeneralLayout(int n_) : n(n_) {
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  }
  int bits() const { return static_cast<int>(pairs.size()); }
  Graph graph(std::uint64_t mask) const {
    std::vector<Edge> e;
    for (int b = 0; b < bits(); ++b)
      if (mask >> b & 1) e.push_back({pairs[static_cast<std::size_t>(b)].first, pairs[static_cast<std::size_t>(b)].second});
    return Graph(n, std::move(e));
  }
};

inline CandidateValue try_candidate(const std::string& name, int l, int k, auto build) {
  CandidateValue c;
  c.name = name;
  try {
    const Graph g = build();
    c.constructible = true;
    c.z1 = z1_index(g);
    c.has_witness = find_constraint_witness(g, l, k).has_value();
  } catch (const infeasible_parameters&) {
  }
  return c;
}

}  // namespace detail

/// Max Z1 over m-edge graphs on [n] with an independent set of l vertices of
/// degree >= k; compared against quasi-star, quasi-clique, G1 and G2.
inline OracleReport max_cherries_general(int n, count_t m, int l, int k, int jobs = 1,
                                         std::uint64_t cap = kDefaultSearchCap) {
  if (n < 1 || n > 11) throw std::invalid_argument("max_cherries_general: n must lie in [1, 11]");
  if (l < 0 || k < 0 || l > n) throw std::invalid_argument("max_cherries_general: need 0 <= l <= n, k >= 0");
  if (m < 0 || m > choose2(n)) throw std::invalid_argument("max_cherries_general: m outside [0, C(n,2)]");
  if (static_cast<count_t>(k) * l > m) throw infeasible_parameters("max_cherries_general: k*l > m");
  const detail::GeneralLayout lay(n);
  detail::check_cap(lay.bits(), m, cap, "max_cherries_general");

  // all l-subsets of [n] as vertex masks
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 0; s < (1u << n); ++s)
    if (std::popcount(s) == l) subsets.push_back(s);

  OracleReport rep;
  rep.family = "general";
  rep.params = {{"n", n}, {"m", m}, {"l", l}, {"k", k}};
  auto score = [&](std::uint64_t mask) -> std::optional<count_t> {
    int deg[16] = {};
    std::uint32_t adj[16] = {};
    for (std::uint64_t x = mask; x; x &= x - 1) {
      const auto& [u, v] = lay.pairs[static_cast<std::size_t>(std::countr_zero(x))];
      ++deg[u];
      ++deg[v];
      adj[u] |= 1u << v;
      adj[v] |= 1u << u;
    }
    std::uint32_t high = 0;
    count_t z = 0;
    for (int v = 0; v < n; ++v) {
      z += static_cast<count_t>(deg[v]) * deg[v];
      if (deg[v] >= k) high |= 1u << v;
    }
    for (const auto s : subsets) {
      if ((s & high) != s) continue;
      bool indep = true;
      for (std::uint32_t x = s; x && indep; x &= x - 1)
        if (adj[std::countr_zero(x)] & s) indep = false;
      if (indep) return z;
    }
    return std::nullopt;
  };
  const auto st = detail::enumerate_subsets(lay.bits(), static_cast<int>(m), jobs, score);
  rep.explored = st.explored;
  rep.feasible = st.found;
  if (st.found) {
    rep.optimum_z1 = st.best;
    rep.optimum_cherries = cherries_from_z1(st.best, m);
    rep.optimal_count = st.count;
    const Graph g = lay.graph(st.mask);
    rep.witness = find_constraint_witness(g, l, k);
    if (!rep.witness) throw verification_error("max_cherries_general: optimal graph lacks a witness");
    rep.witness_graph = g;
  }

  rep.candidates.push_back(detail::try_candidate("quasi_star", l, k, [&] { return quasi_star(n, m); }));
  rep.candidates.push_back(detail::try_candidate("quasi_clique", l, k, [&] { return quasi_clique(n, m); }));
  rep.candidates.push_back(detail::try_candidate("G1", l, k, [&] { return g1_family(n, m, l, k); }));
  rep.candidates.push_back(detail::try_candidate("G2", l, k, [&] { return g2_family(n, m, l, k); }));

  bool any = false;
  for (auto& c : rep.candidates) {
    if (!c.constructible || !c.has_witness) continue;
    if (rep.feasible && c.z1 > rep.optimum_z1)
      throw verification_error("max_cherries_general: construction " + c.name + " beats the oracle");
    c.attains = rep.feasible && c.z1 == rep.optimum_z1;
    if (!any || c.z1 > rep.predicted_z1) {
      rep.predicted_z1 = c.z1;
      rep.branch = c.name;
    }
    any = true;
  }
  rep.prediction_feasible = any;
  if (!any) rep.branch = "none";
  rep.match = any && rep.feasible && rep.predicted_z1 == rep.optimum_z1;
  return rep;
}

struct UnconstrainedRow {
  std::string kind;  // general | bipartite
  int n = 0;         // general order, or r
  int s = 0;         // bipartite right size
  count_t m = 0;
  count_t brute_z1 = 0;
  count_t predicted_z1 = 0;
  std::string winner;  // quasi_star | quasi_clique | tie | B
  bool match = false;
};

/// Unconstrained maxima: every graph on [n] bucketed by edge count, against
/// max(Z1(S(n,m)), Z1(C(n,m))).
inline std::vector<UnconstrainedRow> verify_ak_general(int n) {
  if (n < 1 || n > 7) throw cap_exceeded("verify_ak_general: n must lie in [1, 7]");
  const detail::GeneralLayout lay(n);
  const int bits = lay.bits();
  std::vector<count_t> best(static_cast<std::size_t>(bits + 1), -1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    int deg[8] = {};
    for (std::uint64_t x = mask; x; x &= x - 1) {
      const auto& [u, v] = lay.pairs[static_cast<std::size_t>(std::countr_zero(x))];
      ++deg[u];
      ++deg[v];
    }
    count_t z = 0;
    for (int v = 0; v < n; ++v) z += static_cast<count_t>(deg[v]) * deg[v];
    auto& b = best[static_cast<std::size_t>(std::popcount(mask))];
    b = std::max(b, z);
  }
  std::vector<UnconstrainedRow> rows;
  for (int m = 0; m <= bits; ++m) {
    const count_t zs = z1_index(quasi_star(n, m));
    const count_t zc = z1_index(quasi_clique(n, m));
    UnconstrainedRow row{"general", n, 0, m, best[static_cast<std::size_t>(m)], std::max(zs, zc),
                         zs == zc ? "tie" : zs > zc ? "quasi_star" : "quasi_clique", false};
    row.match = row.brute_z1 == row.predicted_z1;
    rows.push_back(row);
  }
  return rows;
}

/// Every r x s bipartite graph bucketed by edge count, against Z1(B(r,s,m)).
inline std::vector<UnconstrainedRow> verify_ak_bipartite(int r, int s) {
  if (r < 0 || s < 0 || r * s > 24) throw cap_exceeded("verify_ak_bipartite: r*s must be at most 24");
  const detail::BipartiteLayout lay(r, s);
  const int bits = r * s;
  const auto rowbits = lay.row_bits();
  std::vector<count_t> best(static_cast<std::size_t>(bits + 1), -1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    count_t z = 0;
    for (int i = 0; i < r; ++i) {
      const count_t d = std::popcount((mask >> (i * s)) & rowbits);
      z += d * d;
    }
    for (int j = 0; j < s; ++j) {
      const count_t d = std::popcount(mask & lay.col_masks[static_cast<std::size_t>(j)]);
      z += d * d;
    }
    auto& b = best[static_cast<std::size_t>(std::popcount(mask))];
    b = std::max(b, z);
  }
  std::vector<UnconstrainedRow> rows;
  for (int m = 0; m <= bits; ++m) {
    UnconstrainedRow row{"bipartite", r, s, m, best[static_cast<std::size_t>(m)],
                         z1_index(ak_bipartite(r, s, m)), "B", false};
    row.match = row.brute_z1 == row.predicted_z1;
    rows.push_back(row);
  }
  return rows;
}

/// General graphs for n <= n_max (<= 7) and bipartite r >= s with rs <= rs_max (<= 20).
inline std::vector<UnconstrainedRow> verify_ak_unconstrained(int n_max, int rs_max = 20) {
  if (n_max > 7 || rs_max > 20) throw cap_exceeded("verify_ak_unconstrained: n_max <= 7 and rs_max <= 20");
  std::vector<UnconstrainedRow> rows;
  for (int n = 1; n <= n_max; ++n)
    for (auto& r : verify_ak_general(n)) rows.push_back(std::move(r));
  for (int s = 1; s <= rs_max; ++s)
    for (int r = s; r * s <= rs_max; ++r)
      for (auto& row : verify_ak_bipartite(r, s)) rows.push_back(std::move(row));
  return rows;
}

/// Every valid (r,s,l,k,m) with rs <= max_rs.
inline std::vector<BipartiteFamilyParams> constrained_bipartite_tuples(int max_rs) {
  std::vector<BipartiteFamilyParams> out;
  for (int s = 1; s <= max_rs; ++s)
    for (int r = s; r * s <= max_rs; ++r)
      for (int l = 0; l <= r; ++l)
        for (int k = 0; k <= std::min(l, s); ++k)
          for (count_t m = static_cast<count_t>(k) * l; m <= static_cast<count_t>(r) * s; ++m)
            out.push_back({r, s, m, l, k});
  return out;
}

inline json to_json(const OracleReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j = {{"family", r.family},
            {"mode", to_string(r.mode)},
            {"params", params},
            {"feasible", r.feasible},
            {"optimum_z1", r.optimum_z1},
            {"optimum_cherries", r.optimum_cherries},
            {"optimal_count", r.optimal_count},
            {"explored", r.explored},
            {"branch", r.branch},
            {"predicted_z1", r.predicted_z1},
            {"prediction_feasible", r.prediction_feasible},
            {"match", r.match}};
  j["boundary_agree"] = r.boundary_agree ? json(*r.boundary_agree) : json(nullptr);
  if (r.witness_graph) j["graph"] = std::visit([](const auto& g) { return to_json(g); }, *r.witness_graph);
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.candidates.empty()) {
    json c = json::array();
    for (const auto& x : r.candidates)
      c.push_back({{"name", x.name}, {"constructible", x.constructible}, {"has_witness", x.has_witness},
                   {"z1", x.z1}, {"attains", x.attains}});
    j["candidates"] = c;
  }
  return j;
}

}  // namespace cherry
