#pragma once
// Command-line front end. run() is the whole program minus process plumbing so
// tests can drive it with argument vectors and string streams.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or parameter error.

#include <atomic>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "appendix.hpp"
#include "constructions.hpp"
#include "density.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "shifting.hpp"

namespace cherry::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kConfigEnv = "CHERRY_CONFIG";

struct RunConfig {
  std::string subcommand;
  std::string format;  // json | csv; empty = subcommand default
  int jobs = 1;
  std::uint64_t cap = kDefaultSearchCap;
  std::uint64_t seed = 0;
  std::string output;
};

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::map<std::string, std::string>& examples() {
  static const std::map<std::string, std::string> ex = {
      {"construct", "cherry construct --family g2 --params n=6,m=5,l=2,k=2"},
      {"count", "cherry count --input samples/k3.json"},
      {"shift", "cherry shift --input samples/b_4x3.json --params l=2,k=1"},
      {"maximize", "cherry maximize --family bipartite-left --params r=4,s=3,l=2,k=2,m=6 --mode full"},
      {"verify-theorem", "cherry verify-theorem --theorem 1.7 --max-rs 12"},
      {"density", "cherry density --converge family=g2 rho=0.68 alpha=0.2 n=100,500,2000"},
      {"verify-appendix", "cherry verify-appendix --lemma A4 --steps 100"},
  };
  return ex;
}

namespace detail {

using KeyValues = std::map<std::string, std::string>;

// "a=1,b=2" and separate "c=3" items; keys outside `allowed` are rejected.
inline KeyValues parse_kv(const std::vector<std::string>& items, const std::vector<std::string>& allowed,
                          const std::string& flag) {
  KeyValues kv;
  std::string last;
  for (const auto& item : items) {
    std::stringstream ss(item);
    for (std::string part; std::getline(ss, part, ',');) {
      if (part.empty()) continue;
      const auto eq = part.find('=');
      if (eq == std::string::npos || eq == 0) {
        // continuation of a comma-separated value list, e.g. n=100,500
        if (last == "n") {
          kv["n"] += "," + part;
          continue;
        }
        throw usage_error(flag + ": expected key=value, got '" + part + "'");
      }
      const auto key = part.substr(0, eq);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        std::string list;
        for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
        throw usage_error(flag + ": unknown key '" + key + "' (allowed: " + list + ")");
      }
      kv[key] = part.substr(eq + 1);
      last = key;
    }
  }
  return kv;
}

inline long long to_int(const KeyValues& kv, const std::string& key, const std::string& flag) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw usage_error(flag + ": missing key '" + key + "'");
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(it->second, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != it->second.size()) throw usage_error(flag + ": '" + key + "' must be an integer");
  return v;
}

inline long long to_int_or(const KeyValues& kv, const std::string& key, long long dflt, const std::string& flag) {
  return kv.count(key) ? to_int(kv, key, flag) : dflt;
}

inline double to_double(const KeyValues& kv, const std::string& key, const std::string& flag) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw usage_error(flag + ": missing key '" + key + "'");
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(it->second, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != it->second.size()) throw usage_error(flag + ": '" + key + "' must be a number");
  return v;
}

inline int narrow(long long v, const std::string& what) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw usage_error(what + " out of range");
  return static_cast<int>(v);
}

// Results in input order; workers take indices from a shared counter.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t count, int jobs, F f) {
  std::vector<T> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < std::max(1, jobs); ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

inline BipartiteFamilyParams bipartite_params(const KeyValues& kv, const std::string& flag) {
  return {narrow(to_int(kv, "r", flag), "r"), narrow(to_int(kv, "s", flag), "s"), to_int(kv, "m", flag),
          narrow(to_int_or(kv, "l", 0, flag), "l"), narrow(to_int_or(kv, "k", 0, flag), "k")};
}

inline json graph_summary(const Graph& g) {
  return {{"edges", g.size()}, {"cherries", count_cherries(g)}, {"z1", z1_index(g)}};
}

inline json graph_summary(const BipartiteGraph& g) {
  return {{"edges", g.size()}, {"cherries", count_cherries(g)}, {"z1", z1_index(g)}};
}

// Top-l rows by degree (ties by label) with floor k.
inline ConstraintWitness top_rows_witness(const BipartiteGraph& b, int l, int k) {
  const auto deg = b.left_degrees();
  const auto order =
      cherry::detail::order_by_desc(b.left_size(), [&](int v) { return deg[static_cast<std::size_t>(v)]; });
  if (l > b.left_size()) throw usage_error("--params: l exceeds the left part");
  ConstraintWitness w{{}, l, k};
  for (int i = 0; i < l; ++i) w.vertices.push_back(order[static_cast<std::size_t>(i)]);
  std::sort(w.vertices.begin(), w.vertices.end());
  return w;
}

inline json moves_json(const std::vector<SwapMove>& moves) {
  json arr = json::array();
  for (const auto& m : moves)
    arr.push_back({{"removed", {m.removed.u, m.removed.v}}, {"added", {m.added.u, m.added.v}}, {"delta", m.delta}});
  return arr;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit code and writes its payload to `out`.

inline int cmd_construct(const RunConfig&, const std::string& family, const std::vector<std::string>& params,
                         const std::string& policy, std::ostream& out) {
  const std::string flag = "--params";
  const auto kv = detail::parse_kv(params, {"n", "m", "r", "s", "l", "k"}, flag);
  json j = {{"family", family}};
  if (family == "quasi-clique" || family == "quasi-star") {
    const int n = detail::narrow(detail::to_int(kv, "n", flag), "n");
    const auto m = detail::to_int(kv, "m", flag);
    const Graph g = family == "quasi-clique" ? quasi_clique(n, m) : quasi_star(n, m);
    j["graph"] = to_json(g);
    j["summary"] = detail::graph_summary(g);
  } else if (family == "bipartite") {
    const auto b = ak_bipartite(detail::narrow(detail::to_int(kv, "r", flag), "r"),
                                detail::narrow(detail::to_int(kv, "s", flag), "s"), detail::to_int(kv, "m", flag));
    j["graph"] = to_json(b);
    j["summary"] = detail::graph_summary(b);
  } else if (family == "b1" || family == "b2") {
    const auto p = detail::bipartite_params(kv, flag);
    const auto b = family == "b1" ? b1_family(p) : b2_family(p);
    j["graph"] = to_json(b);
    j["witness"] = to_json(left_block_witness(p));
    j["summary"] = detail::graph_summary(b);
  } else if (family == "g1" || family == "g2") {
    const int n = detail::narrow(detail::to_int(kv, "n", flag), "n");
    const auto m = detail::to_int(kv, "m", flag);
    const int l = detail::narrow(detail::to_int(kv, "l", flag), "l");
    const int k = detail::narrow(detail::to_int(kv, "k", flag), "k");
    if (family == "g1") {
      const Graph g = g1_family(n, m, l, k);
      j["graph"] = to_json(g);
      j["witness"] = to_json(g1_witness(n, l, k));
      j["summary"] = detail::graph_summary(g);
    } else {
      const auto pol = policy == "split" ? RemainderPolicy::split : RemainderPolicy::strict;
      const Graph g = g2_family(n, m, l, k, pol);
      j["graph"] = to_json(g);
      j["witness"] = to_json(g2_witness(g2_plan(n, m, l, k, pol)));
      j["summary"] = detail::graph_summary(g);
    }
  } else {
    throw usage_error("--family: unknown family '" + family + "'");
  }
  out << j.dump() << '\n';
  return kExitOk;
}

inline int cmd_count(const RunConfig& cfg, const std::string& input, std::ostream& out) {
  const auto g = any_graph_from_json(read_json_file(input));
  const auto [edges, cherries, z1] = std::visit(
      [](const auto& x) { return std::tuple{x.size(), count_cherries(x), z1_index(x)}; }, g);
  if (cfg.format == "csv") {
    out << "edges,cherries,z1\n" << edges << ',' << cherries << ',' << z1 << '\n';
  } else {
    nlohmann::ordered_json j;
    j["edges"] = edges;
    j["cherries"] = cherries;
    j["z1"] = z1;
    out << j.dump() << '\n';
  }
  return kExitOk;
}

inline int cmd_shift(const RunConfig&, const std::string& input, const std::vector<std::string>& params,
                     const std::string& kind, std::ostream& out) {
  const std::string flag = "--params";
  const auto kv = detail::parse_kv(params, {"l", "k"}, flag);
  const int l = detail::narrow(detail::to_int_or(kv, "l", 0, flag), "l");
  const int k = detail::narrow(detail::to_int_or(kv, "k", 0, flag), "k");
  const auto any = any_graph_from_json(read_json_file(input));
  const bool general = std::holds_alternative<Graph>(any);
  if (!kind.empty() && (kind == "general") != general)
    throw usage_error("--mode " + kind + ": the input is a " + (general ? "general" : "bipartite") + " graph");
  json j;
  if (const auto* g = std::get_if<Graph>(&any)) {
    const auto w = find_constraint_witness(*g, l, k);
    if (!w) throw usage_error("--params: the input graph has no independent " + std::to_string(l) +
                              "-set with degrees >= " + std::to_string(k));
    const auto res = shift_general(*g, *w);
    const auto om = analyze_omega(res.graph, res.witness);
    j = {{"kind", "general"},
         {"z1_before", z1_index(*g)},
         {"z1_after", z1_index(res.graph)},
         {"graph", to_json(res.graph)},
         {"witness", to_json(res.witness)},
         {"order", res.order},
         {"moves", detail::moves_json(res.moves)},
         {"omega", om.omega},
         {"clique_block", om.clique_block},
         {"independent_block", om.independent_block}};
  } else {
    const auto& b = std::get<BipartiteGraph>(any);
    const auto w = detail::top_rows_witness(b, l, k);
    if (!witness_holds(b, Side::left, w))
      throw usage_error("--params: fewer than l = " + std::to_string(l) + " left vertices have degree >= " +
                        std::to_string(k));
    const auto comp = left_compress(b, w);
    const auto sw = swap_sides(comp.graph, comp.witness);
    j = {{"kind", "bipartite"},
         {"z1_before", z1_index(b)},
         {"z1_compressed", z1_index(comp.graph)},
         {"compressed", to_json(comp.graph)},
         {"moves", detail::moves_json(comp.moves)},
         {"swap_branch", to_string(sw.branch)},
         {"graph", to_json(sw.graph)},
         {"witness", to_json(sw.witness)},
         {"z1_after", z1_index(sw.graph)}};
    if (sw.branch == SwapBranch::degree_exchange) {
      j["t"] = sw.t;
      j["T"] = sw.T;
    }
  }
  out << j.dump() << '\n';
  return kExitOk;
}

inline int cmd_maximize(const RunConfig& cfg, const std::string& family, const std::vector<std::string>& params,
                        const std::string& mode_s, std::ostream& out) {
  const std::string flag = "--params";
  const auto mode = mode_s == "shifted" ? SearchMode::shifted : SearchMode::full;
  OracleReport rep;
  if (family == "general") {
    const auto kv = detail::parse_kv(params, {"n", "m", "l", "k"}, flag);
    if (mode != SearchMode::full) throw usage_error("--mode: general search supports only full");
    rep = max_cherries_general(detail::narrow(detail::to_int(kv, "n", flag), "n"), detail::to_int(kv, "m", flag),
                               detail::narrow(detail::to_int_or(kv, "l", 0, flag), "l"),
                               detail::narrow(detail::to_int_or(kv, "k", 0, flag), "k"), cfg.jobs, cfg.cap);
  } else if (family == "bipartite-left" || family == "bipartite-right") {
    const auto kv = detail::parse_kv(params, {"r", "s", "m", "l", "k"}, flag);
    const auto p = detail::bipartite_params(kv, flag);
    rep = family == "bipartite-left" ? phi_bipartite(p, mode, cfg.jobs, cfg.cap)
                                     : phi_bipartite_right(p, mode, cfg.jobs, cfg.cap);
  } else {
    throw usage_error("--family: expected bipartite-left, bipartite-right or general");
  }
  out << to_json(rep).dump() << '\n';
  return kExitOk;
}

inline int cmd_verify_theorem(const RunConfig& cfg, const std::string& theorem, int max_n, int max_rs,
                              std::ostream& out) {
  const bool csv = cfg.format != "json";
  bool all_ok = true;
  json rows = json::array();
  if (theorem == "1.1" || theorem == "1.6") {
    std::vector<UnconstrainedRow> table;
    if (theorem == "1.1") {
      if (max_n < 1 || max_n > 7) throw usage_error("--max-n: must lie in [1, 7]");
      for (int n = 1; n <= max_n; ++n)
        for (auto& r : verify_ak_general(n)) table.push_back(r);
    } else {
      if (max_rs < 1 || max_rs > 20) throw usage_error("--max-rs: must lie in [1, 20]");
      std::vector<std::pair<int, int>> shapes;
      for (int s = 1; s <= max_rs; ++s)
        for (int r = s; r * s <= max_rs; ++r) shapes.emplace_back(r, s);
      const auto parts = detail::parallel_map<std::vector<UnconstrainedRow>>(
          shapes.size(), cfg.jobs, [&](std::size_t i) { return verify_ak_bipartite(shapes[i].first, shapes[i].second); });
      for (const auto& p : parts) table.insert(table.end(), p.begin(), p.end());
    }
    if (csv) out << (theorem == "1.1" ? "n" : "r,s") << ",m,brute_z1,predicted_z1,brute_cherries,winner,match\n";
    for (const auto& r : table) {
      all_ok = all_ok && r.match;
      if (csv) {
        if (theorem == "1.1")
          out << r.n;
        else
          out << r.n << ',' << r.s;
        out << ',' << r.m << ',' << r.brute_z1 << ',' << r.predicted_z1 << ','
            << cherries_from_z1(r.brute_z1, r.m) << ',' << r.winner << ',' << (r.match ? 1 : 0) << '\n';
      } else {
        rows.push_back({{"n", r.n}, {"s", r.s}, {"m", r.m}, {"brute_z1", r.brute_z1},
                        {"predicted_z1", r.predicted_z1}, {"winner", r.winner}, {"match", r.match}});
      }
    }
  } else if (theorem == "1.7" || theorem == "1.8") {
    if (max_rs < 1 || max_rs > 20) throw usage_error("--max-rs: must lie in [1, 20]");
    const auto tuples = constrained_bipartite_tuples(max_rs);
    const bool left = theorem == "1.7";
    struct Row {
      OracleReport full;
      count_t shifted_z1 = 0;
    };
    const auto results = detail::parallel_map<Row>(tuples.size(), cfg.jobs, [&](std::size_t i) {
      const auto& p = tuples[i];
      Row row;
      row.full = left ? phi_bipartite(p, SearchMode::full, 1, cfg.cap) : phi_bipartite_right(p, SearchMode::full, 1, cfg.cap);
      row.shifted_z1 = (left ? phi_bipartite(p, SearchMode::shifted, 1, cfg.cap)
                             : phi_bipartite_right(p, SearchMode::shifted, 1, cfg.cap)).optimum_z1;
      return row;
    });
    if (csv)
      out << "r,s,l,k,m,branch,optimum_z1,shifted_z1,predicted_z1,boundary_agree,prediction_feasible,match\n";
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      const auto& p = tuples[i];
      const auto& rep = results[i].full;
      const bool ok = rep.ok() && results[i].shifted_z1 == rep.optimum_z1;
      all_ok = all_ok && ok;
      const std::string agree = rep.boundary_agree ? (*rep.boundary_agree ? "1" : "0") : "";
      if (csv) {
        out << p.r << ',' << p.s << ',' << p.l << ',' << p.k << ',' << p.m << ',' << rep.branch << ','
            << rep.optimum_z1 << ',' << results[i].shifted_z1 << ',' << rep.predicted_z1 << ',' << agree << ','
            << (rep.prediction_feasible ? 1 : 0) << ',' << (ok ? 1 : 0) << '\n';
      } else {
        json r = to_json(rep);
        r.erase("graph");
        r["shifted_z1"] = results[i].shifted_z1;
        r["ok"] = ok;
        rows.push_back(std::move(r));
      }
    }
  } else {
    throw usage_error("--theorem: expected 1.1, 1.6, 1.7 or 1.8");
  }
  if (!csv) out << rows.dump() << '\n';
  return all_ok ? kExitOk : kExitMismatch;
}

inline int cmd_density(const RunConfig& cfg, bool do_scan, bool do_converge, bool do_point,
                       const std::vector<std::string>& items, std::ostream& out) {
  const int picked = int(do_scan) + int(do_converge) + int(do_point);
  if (picked != 1) throw usage_error("density: give exactly one of --scan, --converge, --point");
  if (do_scan) {
    const auto kv = detail::parse_kv(items, {"rho", "alpha", "beta"}, "--scan");
    ScanGrid g;
    auto axis = [&](const char* key, GridAxis dflt) {
      const auto it = kv.find(key);
      if (it == kv.end()) return dflt;
      try {
        return parse_axis(it->second);
      } catch (const std::invalid_argument& e) {
        throw usage_error(std::string("--scan ") + key + ": " + e.what());
      }
    };
    g.rho = axis("rho", g.rho);
    g.alpha = axis("alpha", g.alpha);
    if (kv.count("beta") && kv.at("beta") == "alpha")
      g.beta_tracks_alpha = true;
    else
      g.beta = axis("beta", g.beta);
    const auto rows = scan(g);
    if (cfg.format == "json") {
      json arr = json::array();
      for (const auto& r : rows)
        arr.push_back({{"rho", r.bounds.point.rho},
                       {"alpha", r.bounds.point.alpha},
                       {"beta", r.bounds.point.beta},
                       {"quasi_star", r.bounds.quasi_star_value},
                       {"g1", r.bounds.g1_value ? json(*r.bounds.g1_value) : json(nullptr)},
                       {"g2", r.bounds.g2_value},
                       {"max", r.bounds.max_value},
                       {"argmax", r.bounds.argmax},
                       {"thm14", r.thm14.value},
                       {"thm14_in_range", r.thm14.in_range},
                       {"thm15", r.thm15.value},
                       {"thm15_winner", r.thm15.winner},
                       {"thm15_in_range", r.thm15.in_range}});
      out << arr.dump() << '\n';
    } else {
      write_scan_csv(out, rows);
    }
    return kExitOk;
  }
  if (do_point) {
    const auto kv = detail::parse_kv(items, {"rho", "alpha", "beta"}, "--point");
    const DensityPoint p{detail::to_double(kv, "rho", "--point"), detail::to_double(kv, "alpha", "--point"),
                         kv.count("beta") ? detail::to_double(kv, "beta", "--point") : 0.0};
    const auto b = fact13_bounds(p);
    const auto t14 = thm_value(p, Theorem::t14), t15 = thm_value(p, Theorem::t15);
    out << json{{"rho", p.rho},
                {"alpha", p.alpha},
                {"beta", p.beta},
                {"quasi_star", b.quasi_star_value},
                {"g1", b.g1_value ? json(*b.g1_value) : json(nullptr)},
                {"g2", b.g2_value},
                {"max", b.max_value},
                {"argmax", b.argmax},
                {"g1_realizable", b.g1_realizable},
                {"g2_realizable", b.g2_realizable},
                {"thm14", {{"value", t14.value}, {"in_range", t14.in_range}}},
                {"thm15", {{"value", t15.value}, {"in_range", t15.in_range}, {"winner", t15.winner}}}}
               .dump()
        << '\n';
    return kExitOk;
  }
  const auto kv = detail::parse_kv(items, {"family", "rho", "alpha", "beta", "n"}, "--converge");
  if (!kv.count("family")) throw usage_error("--converge: missing key 'family'");
  const auto family = density_family_from_string(kv.at("family"));
  const DensityPoint p{detail::to_double(kv, "rho", "--converge"),
                       kv.count("alpha") ? detail::to_double(kv, "alpha", "--converge") : 0.0,
                       kv.count("beta") ? detail::to_double(kv, "beta", "--converge") : 0.0};
  std::vector<count_t> ns;
  {
    const auto it = kv.find("n");
    std::stringstream ss(it == kv.end() ? "100,500,2000" : it->second);
    for (std::string t; std::getline(ss, t, ',');) {
      detail::KeyValues one{{"n", t}};
      ns.push_back(detail::to_int(one, "n", "--converge"));
    }
  }
  const auto rep = converge(family, p, ns);
  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rep.rows)
      arr.push_back({{"n", r.n}, {"m", r.m}, {"l", r.l}, {"k", r.k}, {"cherry_density", r.cherry_density.value()},
                     {"formula", r.formula}, {"error", r.error}, {"split_remainder", r.split_remainder}});
    out << json{{"family", to_string(family)}, {"rows", arr}, {"fitted_c", rep.fitted_c}, {"max_c", rep.max_c},
                {"monotone", rep.monotone}}
               .dump()
        << '\n';
  } else {
    write_convergence_csv(out, rep);
  }
  return rep.monotone ? kExitOk : kExitMismatch;
}

inline int cmd_verify_appendix(const RunConfig& cfg, const std::string& lemma, int steps, bool interior,
                               std::ostream& out) {
  using namespace appendix;
  std::vector<Lemma> lemmas;
  if (lemma == "all") {
    lemmas = {Lemma::A1, Lemma::A2, Lemma::A3, Lemma::A4, Lemma::A5};
    interior = true;
  } else {
    try {
      lemmas = {lemma_from_string(lemma)};
    } catch (const std::invalid_argument& e) {
      throw usage_error(std::string("--lemma: ") + e.what());
    }
  }
  if (steps < 10) throw usage_error("--steps: must be at least 10");
  const auto reports = detail::parallel_map<LemmaCheckReport>(lemmas.size(), cfg.jobs,
                                                              [&](std::size_t i) { return check_lemma(lemmas[i], steps); });
  bool ok = true;
  json j = {{"reports", json::array()}};
  for (const auto& r : reports) {
    ok = ok && r.passed;
    j["reports"].push_back(to_json(r));
  }
  if (interior) {
    j["interior"] = json::array();
    for (const auto& c : interior_bounds_check()) {
      ok = ok && c.passed;
      j["interior"].push_back(to_json(c));
    }
  }
  j["passed"] = ok;
  out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"cherry: cherry counts, extremal constructions, shifting, oracles and density checks"};
  app.name("cherry");
  app.require_subcommand(1);
  app.fallthrough();
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.set_config("--config", "", "key=value file with defaults for the global flags")->envname(kConfigEnv);
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "largest number of edge subsets a search may visit")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed (default 0)");
  app.add_option("--output", cfg.output, "write the payload to this file instead of stdout");

  std::string family, policy = "strict", input, mode = "full", theorem, lemma = "all", shift_kind;
  std::vector<std::string> params, items;
  int max_n = 7, max_rs = 12, max_size = 0, steps = 100;
  bool do_scan = false, do_converge = false, do_point = false, interior = false;

  auto* construct = app.add_subcommand("construct", "build a construction as JSON");
  construct->add_option("--family", family, "quasi-clique | quasi-star | bipartite | b1 | b2 | g1 | g2")
      ->required()
      ->check(CLI::IsMember({"quasi-clique", "quasi-star", "bipartite", "b1", "b2", "g1", "g2"}));
  construct->add_option("--params", params, "n=..,m=..,r=..,s=..,l=..,k=..")->required()->expected(1, -1);
  construct->add_option("--policy", policy, "G2 remainder policy: strict | split")
      ->check(CLI::IsMember({"strict", "split"}));

  auto* count = app.add_subcommand("count", "edges, cherries and Z1 of a graph file");
  count->add_option("--input", input, "graph JSON")->required();

  auto* shift = app.add_subcommand("shift", "shift a graph file (general or bipartite)");
  shift->add_option("--input", input, "graph JSON")->required();
  shift->add_option("--params", params, "l=..,k=..")->expected(1, -1);
  shift->add_option("--mode", shift_kind, "bipartite | general (must match the input)")
      ->check(CLI::IsMember({"bipartite", "general"}));

  auto* maximize = app.add_subcommand("maximize", "exhaustive maximum with theorem comparison");
  maximize->add_option("--family", family, "bipartite-left | bipartite-right | general")
      ->required()
      ->check(CLI::IsMember({"bipartite-left", "bipartite-right", "general"}));
  maximize->add_option("--params", params, "r=..,s=..,l=..,k=..,m=.. or n=..,m=..,l=..,k=..")
      ->required()
      ->expected(1, -1);
  maximize->add_option("--mode", mode, "full | shifted")->check(CLI::IsMember({"full", "shifted"}));

  auto* verify = app.add_subcommand("verify-theorem", "brute-force replay of an extremal theorem");
  verify->add_option("--theorem", theorem, "1.1 | 1.6 | 1.7 | 1.8")
      ->required()
      ->check(CLI::IsMember({"1.1", "1.6", "1.7", "1.8"}));
  verify->add_option("--max-n", max_n, "largest order for 1.1 (<= 7)");
  verify->add_option("--max-rs", max_rs, "largest r*s for 1.6/1.7/1.8 (<= 20)");
  verify->add_option("--max-size", max_size, "alias: --max-n for 1.1, --max-rs otherwise");

  auto* density = app.add_subcommand("density", "density formulas, scans and convergence");
  density->add_flag("--scan", do_scan, "grid scan: rho=LO:HI:STEP alpha=.. beta=..|alpha");
  density->add_flag("--converge", do_converge, "convergence: family=.. rho=.. alpha=.. beta=.. n=N1,N2,..");
  density->add_flag("--point", do_point, "all bounds at rho=.. alpha=.. beta=..");
  density->add_option("items", items, "key=value items");

  auto* appx = app.add_subcommand("verify-appendix", "grid verification of the auxiliary inequalities");
  appx->add_option("--lemma", lemma, "A1..A5 or all");
  appx->add_option("--steps", steps, "grid intervals per axis (>= 10)");
  appx->add_flag("--interior", interior, "also replay the standalone proof constants");

  std::vector<std::string> argv_store{"cherry"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  auto sub_name = [&]() -> std::string {
    for (auto* s : app.get_subcommands()) return s->get_name();
    for (const auto& a : args)
      if (examples().count(a)) return a;
    return "";
  };
  auto usage = [&](const std::string& msg) {
    err << "error: " << msg << '\n';
    const auto name = sub_name();
    if (examples().count(name))
      err << "example: " << examples().at(name) << '\n';
    else
      err << "run 'cherry --help' for the list of subcommands\n";
    return kExitUsage;
  };

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }
  for (auto* s : app.get_subcommands()) cfg.subcommand = s->get_name();
  if (max_size > 0) max_n = max_rs = max_size;

  std::ostringstream payload;
  int code = kExitOk;
  try {
    if (cfg.subcommand == "construct")
      code = cmd_construct(cfg, family, params, policy, payload);
    else if (cfg.subcommand == "count")
      code = cmd_count(cfg, input, payload);
    else if (cfg.subcommand == "shift")
      code = cmd_shift(cfg, input, params, shift_kind, payload);
    else if (cfg.subcommand == "maximize")
      code = cmd_maximize(cfg, family, params, mode, payload);
    else if (cfg.subcommand == "verify-theorem")
      code = cmd_verify_theorem(cfg, theorem, max_n, max_rs, payload);
    else if (cfg.subcommand == "density")
      code = cmd_density(cfg, do_scan, do_converge, do_point, items, payload);
    else if (cfg.subcommand == "verify-appendix")
      code = cmd_verify_appendix(cfg, lemma, steps, interior, payload);
  } catch (const verification_error& e) {
    err << "verification failed: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::invalid_argument& e) {  // usage, infeasible parameters, bad input files
    return usage(e.what());
  } catch (const std::domain_error& e) {
    return usage(e.what());
  } catch (const cap_exceeded& e) {
    return usage(std::string(e.what()) + " (raise --cap or shrink the instance)");
  } catch (const std::length_error& e) {
    return usage(e.what());
  }

  if (cfg.output.empty()) {
    out << payload.str();
  } else {
    std::ofstream f(cfg.output);
    if (!f) return usage("--output: cannot write " + cfg.output);
    f << payload.str();
  }
  return code;
}

}  // namespace cherry::cli
