// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "pfactor/pfactor.hpp"

using namespace pfactor;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

Outcome closed_form() {
  std::size_t points = 0;
  for (std::int64_t s = 1; s <= 12; ++s) {
    for (std::int64_t n = (5 * s) / 3 + 2; n <= (5 * s) / 3 + 60; ++n, ++points) {
      const auto m = static_cast<std::int64_t>(build_extremal(n, s).size());
      if (edge_count_closed_form(n, s) != m)
        return {false, "n=" + std::to_string(n) + " s=" + std::to_string(s) + ": formula " +
                           std::to_string(edge_count_closed_form(n, s)) + ", counted " + std::to_string(m)};
    }
  }
  return {true, std::to_string(points) + " points"};
}

Outcome spectral_cross_check() {
  double worst = 0.0;
  std::size_t points = 0;
  for (int i = 0; i < 100; ++i, ++points) {
    const std::int64_t s = 1 + i % 12;
    const std::int64_t lo = (5 * s) / 3 + 2;
    const std::int64_t n = lo + (static_cast<std::int64_t>(i) * 97) % (500 - lo + 1);
    const double quotient = rho_closed_form(n, s);
    const double power = spectral_radius(build_extremal(n, s)).rho;
    worst = std::max(worst, std::abs(quotient - power));
    if (std::abs(quotient - power) > 1e-8)
      return {false, "n=" + std::to_string(n) + " s=" + std::to_string(s) + ": difference " + std::to_string(quotient - power)};
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu points, max difference %.2e", points, worst);
  return {true, buf};
}

Outcome hong_and_monotonicity() {
  Rng rng(2024);
  double slack = 1e300;
  for (int i = 0; i < 1000; ++i) {
    const Graph g = random_connected_graph(1 + rng.below(50), rng.unit() * 0.6, rng);
    const double rho = spectral_radius(g).rho;
    const double bound = hong_bound(g);
    slack = std::min(slack, bound - rho);
    if (rho > bound + 1e-9) return {false, "bound exceeded on " + emit_graph6(g)};
  }
  int pairs = 0;
  while (pairs < 200) {
    const Graph g = random_connected_graph(2 + rng.below(49), rng.unit() * 0.6, rng);
    if (g.size() == 0) continue;
    const auto edges = g.edges();
    const Edge e = edges[rng.below(edges.size())];
    GraphBuilder b(g);
    b.remove_edge(e.u, e.v);
    if (!monotonicity_check(g, std::move(b).build())) return {false, "deletion increased rho on " + emit_graph6(g)};
    ++pairs;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "1000 graphs (min slack %.2e), 200 deletions", slack);
  return {true, buf};
}

Outcome sufficiency_sweep() {
  const std::size_t published[] = {1, 1, 2, 6, 21, 112, 853, 11117};  // connected graphs, OEIS A001349
  std::size_t graphs = 0, witness_free = 0, both = 0;
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto corpus = generate_graphs(n, true);
    if (corpus.size() != published[n - 1])
      return {false, "n=" + std::to_string(n) + ": " + std::to_string(corpus.size()) + " graphs, published " +
                         std::to_string(published[n - 1])};
    for (const Graph& g : corpus) {
      ++graphs;
      const auto w = find_witness(g);
      const auto f = find_factor(g);
      if (f && !verify_factor(g, *f)) return {false, "certificate rejected for " + emit_graph6(g)};
      if (!w) {
        ++witness_free;
        if (!f) return {false, "no witness and no factor: " + emit_graph6(g)};
      } else if (f) {
        ++both;
      }
    }
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(witness_free) + " witness-free, all with factors; " +
                    std::to_string(both) + " have a witness and a factor"};
}

Outcome non_necessity() {
  const Graph p3 = path(3);
  const auto w = find_witness(p3);
  const auto f = find_factor(p3);
  if (!w || w->set.members() != std::vector<Vertex>{1} || w->isolated != 2) return {false, "witness on P3 missing or wrong"};
  if (!f || !verify_factor(p3, *f)) return {false, "P3 factor missing"};
  return {true, "P3: S={1}, i=2, factor [[0,1,2]]"};
}

Outcome identity_audit() {
  const auto entries = audit::run_identity_audit(audit::AuditConfig{});
  std::size_t verified = 0, resolved = 0;
  std::string extra;
  for (const auto& e : entries) {
    if (e.claim.ends_with(".chain-rewrite")) {
      if (e.status != audit::Status::Verified && extra.empty()) extra = e.claim + " " + std::string(audit::status_name(e.status));
      continue;
    }
    if (e.claim.starts_with("spectral.above-clique")) continue;
    if (e.checked == 0) return {false, e.claim + ": nothing checked"};
    const bool documented = e.claim == "size.s1d1.difference" || e.claim == "size.s1d1.factorization";
    if (documented) {
      if (e.status != audit::Status::TypoResolved || e.resolved.empty()) return {false, e.claim + ": " + e.detail};
      ++resolved;
    } else if (e.status != audit::Status::Verified) {
      return {false, e.claim + " " + std::string(audit::status_name(e.status)) + ": " + e.detail};
    } else {
      ++verified;
    }
  }
  std::string note = std::to_string(verified) + " verified, " + std::to_string(resolved) + " typo-resolved";
  if (!extra.empty()) note += "; also " + extra;
  return {true, note};
}

Outcome above_clique() {
  audit::AuditConfig cfg;
  cfg.max_delta = 8;
  cfg.rho_max_n = 300;
  double margin = 1e300;
  std::size_t points = 0;
  for (const auto& e : audit::detail::sweep_above_clique(cfg)) {
    if (e.status != audit::Status::Verified) return {false, e.detail};
    margin = std::min(margin, *e.margin);
    points += e.checked;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu points, min gap %.3e", points, margin);
  return {true, buf};
}

Outcome contrapositive() {
  std::string note;
  for (const auto& [n, d] : std::vector<std::pair<std::int64_t, std::int64_t>>{{25, 1}, {31, 2}}) {
    audit::SampleStats st;
    const auto e = audit::contrapositive_sample(n, d, 200, 42, 1e-8, &st);
    if (e.status != audit::Status::Verified || st.trials != 200 || st.violations != 0)
      return {false, "(" + std::to_string(n) + "," + std::to_string(d) + "): " + e.detail + (e.certificate ? " " + *e.certificate : "")};
    note += (note.empty() ? "" : "; ") + std::string("(") + std::to_string(n) + "," + std::to_string(d) + ") 200 samples, up to " +
            std::to_string(st.max_deleted) + " edges deleted";
  }
  return {true, note};
}

Outcome remark() {
  const auto r = audit::remark_audit(7, 1);
  if (!r.witness_holds || r.witness.isolated != 1) return {false, "witness check failed at (7,1)"};
  if (!r.search.factor || !r.certificate_check || !r.entry.certificate) return {false, "no verified certificate at (7,1)"};
  std::size_t with = 0, without = 0;
  for (std::int64_t d : {1, 2}) {
    for (std::int64_t n = (5 * d) / 3 + 2; n <= 14; ++n) {
      const auto a = audit::remark_audit(n, d);
      if (a.search.status == SearchStatus::TimedOut) return {false, "no verdict at n=" + std::to_string(n)};
      if (!a.witness_holds) return {false, "witness check failed at n=" + std::to_string(n)};
      if (a.search.factor && !a.certificate_check) return {false, "bad certificate at n=" + std::to_string(n)};
      (a.search.factor ? with : without) += 1;
    }
  }
  return {true, "(7,1) certificate " + *r.entry.certificate + "; " + std::to_string(with) + " instances with a factor, " +
                    std::to_string(without) + " without"};
}

Outcome graph6_round_trip() {
  Rng rng(99);
  std::size_t padded = 0, rejected = 0;
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(1 + rng.below(30), rng.unit(), rng);
    const std::string s = emit_graph6(g);
    if (!(parse_graph6(s) == g) || emit_graph6(parse_graph6(s)) != s) return {false, "round trip failed: " + s};

    const std::size_t bits = g.order() * (g.order() - 1) / 2;
    if (bits % 6 == 0 || s.size() < 2) continue;
    ++padded;
    std::string bad = s;
    const unsigned pad = 6 - bits % 6;
    bad.back() = static_cast<char>(((bad.back() - 63) | (1U << rng.below(pad))) + 63);
    try {
      parse_graph6(bad);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NonzeroPadding) ++rejected;
    }
  }
  if (rejected != padded) return {false, std::to_string(padded - rejected) + " padding mutations accepted"};

  // Other mutations: out-of-range bytes, truncation, extra bytes.
  const std::string base = emit_graph6(cycle(12));
  auto fails_with = [](const std::string& text, ErrorCode code) {
    try {
      parse_graph6(text);
    } catch (const Error& e) {
      return e.code() == code;
    }
    return false;
  };
  std::string low = base, high = base;
  low[3] = static_cast<char>(62);
  high[3] = static_cast<char>(127);
  if (!fails_with(low, ErrorCode::ByteOutOfRange) || !fails_with(high, ErrorCode::ByteOutOfRange) ||
      !fails_with(base.substr(0, base.size() - 1), ErrorCode::TruncatedPayload) ||
      !fails_with(base + "?", ErrorCode::TrailingBytes))
    return {false, "mutation not rejected"};
  return {true, "10000 graphs; " + std::to_string(rejected) + " padding mutations rejected"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "closed-form edge count equals direct count", 1, closed_form},
      {2, "quotient root agrees with power iteration", 30, spectral_cross_check},
      {3, "Hong bound and subgraph monotonicity on random graphs", 60, hong_and_monotonicity},
      {4, "isolation condition yields a factor on all connected graphs n <= 8", 600, sufficiency_sweep},
      {5, "witness and factor coexist on P3", 1, non_necessity},
      {6, "exact identity audit n <= 200, delta <= 12", 300, identity_audit},
      {7, "extremal rho exceeds n - floor(2 delta/3) - 2", 60, above_clique},
      {8, "witness-preserving subgraphs stay within thresholds", 120, contrapositive},
      {9, "remark audit: witness and factor certificate side by side", 300, remark},
      {10, "graph6 round trip and strict padding", 10, graph6_round_trip},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.note += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    std::printf("%s [%2d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.note.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
