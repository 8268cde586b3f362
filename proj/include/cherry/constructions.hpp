#pragma once
// Extremal constructions: quasi-clique C(n,m), quasi-star S(n,m), the column
// filling bipartite graphs B(r,s,m), B1, B2, and the general-graph families
// G1, G2. Vertices are 0-based; the 1-based index sets of the definitions are
// shifted down by one.

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"

namespace cherry {

/// m = C(a,2) + b with 0 <= b <= a-1.
struct TriangularDecomposition {
  count_t m = 0;
  count_t a = 1;
  count_t b = 0;
};

/// m = quotient * divisor + remainder with 0 <= remainder < divisor.
struct LinearDecomposition {
  count_t m = 0;
  count_t divisor = 1;
  count_t quotient = 0;
  count_t remainder = 0;
};

namespace detail {

// Largest a >= lo with f(a) <= m, for f nondecreasing; exact integer bisection.
template <typename F>
count_t largest_with(count_t lo, count_t m, F f) {
  count_t hi = lo + 1;
  while (f(hi) <= m) hi *= 2;
  while (hi - lo > 1) {
    const count_t mid = lo + (hi - lo) / 2;
    (f(mid) <= m ? lo : hi) = mid;
  }
  return lo;
}

inline std::string str(count_t v) { return std::to_string(v); }

}  // namespace detail

inline TriangularDecomposition triangular_decomposition(count_t m) {
  if (m < 0) throw std::invalid_argument("triangular_decomposition: negative m");
  const count_t a = detail::largest_with(1, m, [](count_t x) { return choose2(x); });
  return {m, a, m - choose2(a)};
}

inline LinearDecomposition linear_decomposition(count_t m, count_t divisor) {
  if (m < 0) throw std::invalid_argument("linear_decomposition: negative m");
  if (divisor <= 0) throw std::invalid_argument("linear_decomposition: divisor must be positive");
  return {m, divisor, m / divisor, m % divisor};
}

/// Shared hypotheses of the constrained bipartite theorems:
/// r >= s, l >= k, r >= l, s >= k, k*l <= m <= r*s.
struct BipartiteFamilyParams {
  int r = 0;
  int s = 0;
  count_t m = 0;
  int l = 0;
  int k = 0;

  void validate() const {
    if (r < 0 || s < 0 || m < 0 || l < 0 || k < 0)
      throw std::invalid_argument("BipartiteFamilyParams: negative entry");
    if (r < s) throw std::invalid_argument("BipartiteFamilyParams: need r >= s");
    if (l < k) throw std::invalid_argument("BipartiteFamilyParams: need l >= k");
    if (r < l) throw std::invalid_argument("BipartiteFamilyParams: need r >= l");
    if (s < k) throw std::invalid_argument("BipartiteFamilyParams: need s >= k");
    if (static_cast<count_t>(k) * l > m)
      throw infeasible_parameters("BipartiteFamilyParams: k*l = " +
                                  detail::str(static_cast<count_t>(k) * l) + " > m = " +
                                  detail::str(m));
    if (m > static_cast<count_t>(r) * s)
      throw std::invalid_argument("BipartiteFamilyParams: m > r*s");
  }
};

// ---------------------------------------------------------------------------
// Degree profiles: multiset of degrees as (degree, multiplicity) classes. Large
// constructions are evaluated through these without materializing edges.

struct DegreeClass {
  count_t degree = 0;
  count_t count = 0;
  friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
};

using DegreeProfile = std::vector<DegreeClass>;

inline DegreeProfile normalize(DegreeProfile p) {
  std::erase_if(p, [](const DegreeClass& c) { return c.count == 0; });
  std::sort(p.begin(), p.end(),
            [](const DegreeClass& x, const DegreeClass& y) { return x.degree > y.degree; });
  DegreeProfile out;
  for (const auto& c : p) {
    if (!out.empty() && out.back().degree == c.degree)
      out.back().count += c.count;
    else
      out.push_back(c);
  }
  return out;
}

inline DegreeProfile profile_of(std::span<const count_t> degrees) {
  DegreeProfile p;
  for (const auto d : degrees) p.push_back({d, 1});
  return normalize(std::move(p));
}

inline count_t profile_order(const DegreeProfile& p) {
  count_t n = 0;
  for (const auto& c : p) n += c.count;
  return n;
}

inline count_t profile_edges(const DegreeProfile& p) {
  __int128 sum = 0;
  for (const auto& c : p) sum += static_cast<__int128>(c.degree) * c.count;
  return static_cast<count_t>(sum / 2);
}

inline count_t profile_cherries(const DegreeProfile& p) {
  __int128 sum = 0;
  for (const auto& c : p) sum += static_cast<__int128>(choose2(c.degree)) * c.count;
  if (sum > std::numeric_limits<count_t>::max())
    throw std::overflow_error("profile_cherries: count exceeds 64 bits");
  return static_cast<count_t>(sum);
}

inline count_t profile_z1(const DegreeProfile& p) {
  __int128 sum = 0;
  for (const auto& c : p) sum += static_cast<__int128>(c.degree) * c.degree * c.count;
  if (sum > std::numeric_limits<count_t>::max())
    throw std::overflow_error("profile_z1: value exceeds 64 bits");
  return static_cast<count_t>(sum);
}

namespace detail {

// Degree is constant between consecutive breakpoints; sample one vertex per run.
template <typename DegreeOf>
DegreeProfile piecewise_profile(count_t n, std::vector<count_t> cuts, DegreeOf degree_of) {
  cuts.push_back(0);
  cuts.push_back(n);
  for (auto& c : cuts) c = std::clamp<count_t>(c, 0, n);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  DegreeProfile p;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    p.push_back({degree_of(cuts[i]), cuts[i + 1] - cuts[i]});
  return normalize(std::move(p));
}

inline void check_edge_range(count_t n, count_t m, const char* who) {
  if (n < 0) throw std::invalid_argument(std::string(who) + ": negative n");
  if (m < 0 || m > choose2(n))
    throw std::invalid_argument(std::string(who) + ": m = " + str(m) + " outside [0, C(" + str(n) +
                                ",2) = " + str(choose2(n)) + "]");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quasi-clique and quasi-star.

/// Clique on [a] plus vertex a+1 joined to [b], where m = C(a,2) + b.
inline Graph quasi_clique(int n, count_t m) {
  detail::check_edge_range(n, m, "quasi_clique");
  const auto t = triangular_decomposition(m);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (vertex_t u = 0; u < t.a; ++u)
    for (vertex_t v = u + 1; v < t.a; ++v) edges.push_back({u, v});
  for (vertex_t i = 0; i < t.b; ++i) edges.push_back({i, static_cast<vertex_t>(t.a)});
  return Graph(n, std::move(edges));
}

inline Graph quasi_star(int n, count_t m) {
  detail::check_edge_range(n, m, "quasi_star");
  return quasi_clique(n, choose2(n) - m).complement();
}

inline DegreeProfile quasi_clique_profile(count_t n, count_t m) {
  detail::check_edge_range(n, m, "quasi_clique_profile");
  const auto [mm, a, b] = triangular_decomposition(m);
  return detail::piecewise_profile(n, {b, a, a + 1}, [a = a, b = b](count_t v) {
    count_t d = 0;
    if (v < a) d += a - 1 + (v < b ? 1 : 0);
    if (v == a) d += b;
    return d;
  });
}

inline DegreeProfile quasi_star_profile(count_t n, count_t m) {
  detail::check_edge_range(n, m, "quasi_star_profile");
  auto p = quasi_clique_profile(n, choose2(n) - m);
  for (auto& c : p) c.degree = n - 1 - c.degree;
  return normalize(std::move(p));
}

// ---------------------------------------------------------------------------
// Bipartite constructions.

/// B(r,s,m): p full columns plus q edges into column p+1, m = p r + q.
inline BipartiteGraph ak_bipartite(int r, int s, count_t m) {
  if (r < 0 || s < 0) throw std::invalid_argument("ak_bipartite: negative part size");
  if (r < s) throw std::invalid_argument("ak_bipartite: need r >= s");
  if (m < 0 || m > static_cast<count_t>(r) * s)
    throw std::invalid_argument("ak_bipartite: m = " + detail::str(m) + " outside [0, r*s]");
  if (r == 0) return BipartiteGraph(r, s);
  const auto [mm, div, p, q] = linear_decomposition(m, r);
  std::vector<CrossEdge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < p; ++j) edges.push_back({i, j});
  for (int i = 0; i < q; ++i) edges.push_back({i, static_cast<int>(p)});
  return BipartiteGraph(r, s, std::move(edges));
}

/// Witness {u_1..u_l} with floor k, valid on every B1/B2 graph.
inline ConstraintWitness left_block_witness(const BipartiteFamilyParams& p) {
  ConstraintWitness w{{}, p.l, p.k};
  for (int i = 0; i < p.l; ++i) w.vertices.push_back(i);
  return w;
}

/// m - k l = p (r - l) + q; used by B1.
inline LinearDecomposition b1_decomposition(const BipartiteFamilyParams& prm) {
  const count_t rest = prm.m - static_cast<count_t>(prm.k) * prm.l;
  if (prm.r == prm.l) {
    if (rest != 0) throw infeasible_parameters("b1_family: r = l leaves no rows for m - k*l > 0");
    return {rest, 1, 0, 0};
  }
  return linear_decomposition(rest, prm.r - prm.l);
}

/// m - k l = p k + q; used by B2.
inline LinearDecomposition b2_decomposition(const BipartiteFamilyParams& prm) {
  const count_t rest = prm.m - static_cast<count_t>(prm.k) * prm.l;
  if (prm.k == 0) {
    if (rest != 0) throw infeasible_parameters("b2_family: k = 0 forces m = 0");
    return {rest, 1, 0, 0};
  }
  return linear_decomposition(rest, prm.k);
}

/// B1(r,s,m,l,k), branch m <= rk and k + l <= r. Edge set
/// [l]x[k]  u  [r]x[p]  u  {(i, p+1) : l < i <= l+q}, which is the definitional
/// union of the three groups for p < k and K_{r,k} at p = k.
inline BipartiteGraph b1_family(const BipartiteFamilyParams& prm) {
  prm.validate();
  if (prm.m > static_cast<count_t>(prm.r) * prm.k)
    throw infeasible_parameters("b1_family: needs m <= r*k");
  if (prm.k + prm.l > prm.r) throw infeasible_parameters("b1_family: needs k + l <= r");
  const auto dec = b1_decomposition(prm);
  const auto p = static_cast<int>(dec.quotient);
  const auto q = static_cast<int>(dec.remainder);
  std::vector<CrossEdge> edges;
  for (int i = 0; i < prm.l; ++i)
    for (int j = 0; j < prm.k; ++j) edges.push_back({i, j});
  for (int i = prm.l; i < prm.r; ++i)
    for (int j = 0; j < p; ++j) edges.push_back({i, j});
  for (int i = prm.l; i < prm.l + q; ++i) edges.push_back({i, p});
  return BipartiteGraph(prm.r, prm.s, std::move(edges));
}

/// B2(r,s,m,l,k), branch m <= rk and k + l > r: block [l+p]x[k] plus q edges
/// from row l+p+1.
inline BipartiteGraph b2_family(const BipartiteFamilyParams& prm) {
  prm.validate();
  if (prm.m > static_cast<count_t>(prm.r) * prm.k)
    throw infeasible_parameters("b2_family: needs m <= r*k");
  if (prm.k + prm.l <= prm.r) throw infeasible_parameters("b2_family: needs k + l > r");
  const auto dec = b2_decomposition(prm);
  const auto rows = prm.l + static_cast<int>(dec.quotient);
  const auto q = static_cast<int>(dec.remainder);
  std::vector<CrossEdge> edges;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < prm.k; ++j) edges.push_back({i, j});
  for (int j = 0; j < q; ++j) edges.push_back({rows, j});
  return BipartiteGraph(prm.r, prm.s, std::move(edges));
}

// ---------------------------------------------------------------------------
// General-graph constructions G1 and G2.

/// m - k l = C(a,2) + b with 0 <= b <= a-1.
struct G1Plan {
  int n = 0;
  count_t m = 0;
  int l = 0;
  int k = 0;
  count_t a = 1;
  count_t b = 0;
};

namespace detail {
// A clique on fewer than two vertices occupies no edge slots.
inline count_t clique_extent(count_t a, count_t b) { return b > 0 ? a + 1 : (a >= 2 ? a : 0); }
}  // namespace detail

inline G1Plan g1_plan(int n, count_t m, int l, int k) {
  detail::check_edge_range(n, m, "g1_family");
  if (l < 0 || k < 0) throw std::invalid_argument("g1_family: negative l or k");
  if (static_cast<count_t>(k) * l > m)
    throw infeasible_parameters("g1_family: k*l > m");
  const auto t = triangular_decomposition(m - static_cast<count_t>(k) * l);
  G1Plan plan{n, m, l, k, t.a, t.b};
  if (l > n) throw index_collision("g1_family: l = " + detail::str(l) + " > n");
  const count_t free_prefix = n - l;
  if (k > free_prefix)
    throw index_collision("g1_family: bipartite part [k] (k = " + detail::str(k) +
                          ") overlaps the witness block [n-l+1, n] (n-l = " +
                          detail::str(free_prefix) + ")");
  if (detail::clique_extent(t.a, t.b) > free_prefix)
    throw index_collision("g1_family: clique [a] plus remainder vertex (a = " + detail::str(t.a) +
                          ", b = " + detail::str(t.b) + ") overlaps the witness block [n-l+1, n] (n-l = " +
                          detail::str(free_prefix) + ")");
  return plan;
}

/// Clique on [a], complete bipartite [k] x [n-l+1, n], vertex a+1 joined to [b],
/// with m = k l + C(a,2) + b. The last l vertices are the witness.
inline Graph g1_family(int n, count_t m, int l, int k) {
  const auto plan = g1_plan(n, m, l, k);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  const auto a = static_cast<vertex_t>(plan.a);
  for (vertex_t u = 0; u < a; ++u)
    for (vertex_t v = u + 1; v < a; ++v) edges.push_back({u, v});
  for (vertex_t u = 0; u < k; ++u)
    for (vertex_t w = n - l; w < n; ++w) edges.push_back({u, w});
  for (vertex_t i = 0; i < plan.b; ++i) edges.push_back({i, a});
  return Graph(n, std::move(edges));
}

inline ConstraintWitness g1_witness(int n, int l, int k) {
  ConstraintWitness w{{}, l, k};
  for (vertex_t v = n - l; v < n; ++v) w.vertices.push_back(v);
  return w;
}

inline DegreeProfile g1_profile(const G1Plan& p) {
  const count_t n = p.n, a = p.a, b = p.b, l = p.l, k = p.k;
  return detail::piecewise_profile(n, {b, a, a + 1, k, n - l}, [=](count_t v) {
    count_t d = 0;
    if (v < a) d += a - 1 + (v < b ? 1 : 0);
    if (v == a) d += b;
    if (v < k) d += l;
    if (v >= n - l) d += k;
    return d;
  });
}

/// How G2 places the b remainder edges when b > a, where the literal
/// definition would touch the witness block.
enum class RemainderPolicy {
  strict,  // reject b > a
  split,   // vertex a+l+1 joins [a], vertex a+l+2 joins [b-a]
};

/// m = a l + C(a,2) + b with 0 <= b <= a + l - 1.
struct G2Plan {
  int n = 0;
  count_t m = 0;
  int l = 0;
  int k = 0;
  count_t a = 0;
  count_t b = 0;
  RemainderPolicy policy = RemainderPolicy::strict;

  bool spills() const noexcept { return b > a; }
};

inline G2Plan g2_plan(int n, count_t m, int l, int k,
                      RemainderPolicy policy = RemainderPolicy::strict) {
  detail::check_edge_range(n, m, "g2_family");
  if (l < 0 || k < 0) throw std::invalid_argument("g2_family: negative l or k");
  const count_t ll = l;
  const auto a = detail::largest_with(0, m, [ll](count_t x) { return x * ll + choose2(x); });
  const count_t b = m - a * ll - choose2(a);
  G2Plan plan{n, m, l, k, a, b, policy};
  if (a < k)
    throw infeasible_parameters("g2_family: clique size a = " + detail::str(a) +
                                " is below the degree floor k = " + detail::str(k));
  if (plan.spills() && policy == RemainderPolicy::strict)
    throw infeasible_parameters("g2_family: remainder b = " + detail::str(b) + " exceeds a = " +
                                detail::str(a) + "; vertex a+l+1 would touch the witness block");
  count_t extent = a + ll + (b > 0 ? 1 : 0);
  if (plan.spills()) extent = a + ll + 2;
  if (extent > n)
    throw index_collision("g2_family: construction needs " + detail::str(extent) +
                          " vertices, n = " + detail::str(n));
  return plan;
}

/// Clique on [a], complete bipartite [a] x [a+1, a+l], vertex a+l+1 joined to
/// [b]. The witness is [a+1, a+l] with degree a.
inline Graph g2_family(int n, count_t m, int l, int k,
                       RemainderPolicy policy = RemainderPolicy::strict) {
  const auto plan = g2_plan(n, m, l, k, policy);
  const auto a = static_cast<vertex_t>(plan.a);
  const auto extra = static_cast<vertex_t>(plan.a + l);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (vertex_t u = 0; u < a; ++u)
    for (vertex_t v = u + 1; v < a; ++v) edges.push_back({u, v});
  for (vertex_t u = 0; u < a; ++u)
    for (vertex_t w = a; w < extra; ++w) edges.push_back({u, w});
  if (!plan.spills()) {
    for (vertex_t i = 0; i < plan.b; ++i) edges.push_back({i, extra});
  } else {
    for (vertex_t i = 0; i < a; ++i) edges.push_back({i, extra});
    for (vertex_t i = 0; i < plan.b - plan.a; ++i) edges.push_back({i, extra + 1});
  }
  return Graph(n, std::move(edges));
}

inline ConstraintWitness g2_witness(const G2Plan& p) {
  ConstraintWitness w{{}, p.l, p.k};
  for (count_t v = p.a; v < p.a + p.l; ++v) w.vertices.push_back(static_cast<vertex_t>(v));
  return w;
}

inline DegreeProfile g2_profile(const G2Plan& p) {
  const count_t n = p.n, a = p.a, b = p.b, l = p.l;
  const bool split = p.spills();
  const count_t tail = split ? b - a : b;  // edges into the prefix from the last helper vertex
  return detail::piecewise_profile(n, {tail, a, a + l, a + l + 1, a + l + 2}, [=](count_t v) {
    count_t d = 0;
    if (v < a) d += a - 1 + l + (split ? 1 : 0);
    if (v >= a && v < a + l) d += a;
    if (v < tail) d += 1;  // the tail can run past [a] into the witness block
    if (v == a + l) d += split ? a : b;
    if (split && v == a + l + 1) d += b - a;
    return d;
  });
}

}  // namespace cherry
