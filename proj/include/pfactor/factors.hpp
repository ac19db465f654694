#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pfactor/error.hpp"
#include "pfactor/graph.hpp"

namespace pfactor {

inline constexpr std::size_t kMaxWitnessOrder = 30;
inline constexpr std::size_t kMaxExactOrder = 24;

/// Vertex-disjoint paths on 3, 4 or 5 vertices covering the whole graph.
struct PathFactor {
  std::vector<std::vector<Vertex>> paths;
};

/// A set S with 3 * i(G - S) > 2 * |S|.
struct WitnessReport {
  VertexSet set;
  std::size_t s = 0;
  std::size_t isolated = 0;
};

namespace detail {

inline std::vector<std::uint64_t> masks_of(const Graph& g) {
  std::vector<std::uint64_t> m(g.order());
  for (Vertex v = 0; v < g.order(); ++v) m[v] = g.mask(v);
  return m;
}

inline std::size_t isolated_in_rest(const std::vector<std::uint64_t>& adj, std::uint64_t rest) {
  std::size_t count = 0;
  for (std::uint64_t bits = rest; bits != 0; bits &= bits - 1) {
    const auto v = static_cast<std::size_t>(std::countr_zero(bits));
    if ((adj[v] & rest) == 0) ++count;
  }
  return count;
}

inline bool violates(std::size_t isolated, std::size_t s) { return 3 * isolated > 2 * s; }

}  // namespace detail

/// Number of isolated vertices of G - S.
inline std::size_t isolated_count(const Graph& g, VertexSet s) {
  if (g.order() > kWordOrder) detail::fail(ErrorCode::TooLarge, "isolated_count needs order <= 64");
  if ((s.mask & ~full_mask(g.order())) != 0) detail::fail(ErrorCode::VertexOutOfRange, "set has vertices outside the graph");
  return detail::isolated_in_rest(detail::masks_of(g), full_mask(g.order()) & ~s.mask);
}

/// Exhaustive search for a set S violating i(G - S) <= 2|S|/3.
///
/// Subsets are visited by increasing size and, within a size, by increasing
/// mask value, so the first hit is the smallest witness. S = {} counts when g
/// has an isolated vertex. A size level is skipped outright when too few
/// vertices have degree <= size to ever become isolated.
inline std::optional<WitnessReport> find_witness(const Graph& g, std::size_t max_order = kMaxWitnessOrder) {
  const std::size_t n = g.order();
  if (n > max_order || n > kWordOrder - 1) {
    detail::fail(ErrorCode::TooLargeForExhaustive, "witness search capped at order " + std::to_string(max_order));
  }
  const auto adj = detail::masks_of(g);
  const std::uint64_t all = full_mask(n);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<std::size_t>(std::popcount(adj[v]));

  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t need = 2 * k / 3 + 1;
    const auto low_degree = static_cast<std::size_t>(std::count_if(deg.begin(), deg.end(), [k](std::size_t d) { return d <= k; }));
    if (low_degree < need || k + need > n) continue;

    // Gosper's hack over k-subsets in increasing numeric order.
    std::uint64_t s = k == 0 ? 0 : full_mask(k);
    while (true) {
      const std::size_t iso = detail::isolated_in_rest(adj, all & ~s);
      if (detail::violates(iso, k)) return WitnessReport{VertexSet{s}, k, iso};
      if (k == 0) break;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
      if (s > all) break;
    }
  }
  return std::nullopt;
}

// Path factors --------------------------------------------------------------

enum class SearchStatus { Found, Exhausted, TimedOut };

struct FactorSearchOptions {
  std::size_t max_order = kMaxExactOrder;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct FactorSearch {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<PathFactor> factor;
  std::size_t states = 0;
};

namespace detail {

class FactorSolver {
 public:
  FactorSolver(const Graph& g, const FactorSearchOptions& opts) : adj_(masks_of(g)), opts_(opts) {}

  FactorSearch run(std::size_t n) {
    FactorSearch out;
    const bool found = solve(full_mask(n));
    out.states = states_;
    if (timed_out_) {
      out.status = SearchStatus::TimedOut;
    } else if (found) {
      out.status = SearchStatus::Found;
      out.factor = PathFactor{std::vector<std::vector<Vertex>>(stack_.rbegin(), stack_.rend())};
    } else {
      out.status = SearchStatus::Exhausted;
    }
    return out;
  }

 private:
  struct Block {
    std::uint64_t mask;
    std::vector<Vertex> path;
  };

  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  bool solve(std::uint64_t uncovered) {
    if (uncovered == 0) return true;
    if (timed_out_) return false;
    if (failed_.contains(uncovered)) return false;
    if ((++states_ & 1023U) == 0 && opts_.deadline && std::chrono::steady_clock::now() > *opts_.deadline) {
      timed_out_ = true;
      return false;
    }

    const auto pivot = static_cast<Vertex>(std::countr_zero(uncovered));
    for (Block& b : blocks_through(pivot, uncovered)) {
      if (solve(uncovered & ~b.mask)) {
        stack_.push_back(std::move(b.path));
        return true;
      }
      if (timed_out_) return false;
    }
    if (failed_.size() >= kMemoCap) failed_.clear();
    failed_.insert(uncovered);
    return false;
  }

  // A path through every vertex of `mask` (at most 5 vertices), oriented with
  // the smaller endpoint first; empty if there is none.
  std::vector<Vertex> spanning_path(std::uint64_t mask) const {
    Vertex vs[5];
    int k = 0;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) vs[k++] = static_cast<Vertex>(std::countr_zero(bits));
    bool reach[32][5] = {};
    std::int8_t parent[32][5];
    for (int i = 0; i < k; ++i) {
      reach[1 << i][i] = true;
      parent[1 << i][i] = -1;
    }
    const int full = (1 << k) - 1;
    for (int sub = 1; sub <= full; ++sub) {
      for (int end = 0; end < k; ++end) {
        if (!reach[sub][end]) continue;
        for (int nxt = 0; nxt < k; ++nxt) {
          if (((sub >> nxt) & 1) || !((adj_[vs[end]] >> vs[nxt]) & 1U) || reach[sub | 1 << nxt][nxt]) continue;
          reach[sub | 1 << nxt][nxt] = true;
          parent[sub | 1 << nxt][nxt] = static_cast<std::int8_t>(end);
        }
      }
    }
    for (int end = 0; end < k; ++end) {
      if (!reach[full][end]) continue;
      std::vector<Vertex> p;
      for (int sub = full, at = end; at >= 0;) {
        p.push_back(vs[at]);
        const int prev = parent[sub][at];
        sub &= ~(1 << at);
        at = prev;
      }
      if (p.front() > p.back()) std::reverse(p.begin(), p.end());
      return p;
    }
    return {};
  }

  // Every vertex set of order 3-5 containing the pivot that spans a path
  // inside `uncovered`, one path per set. Sets are grown outward from the
  // pivot, since a set spanning a path is connected.
  std::vector<Block> blocks_through(Vertex pivot, std::uint64_t uncovered) const {
    std::vector<Block> blocks;
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> layer{std::uint64_t{1} << pivot};
    for (int size = 2; size <= 5; ++size) {
      std::vector<std::uint64_t> next;
      for (std::uint64_t set : layer) {
        std::uint64_t frontier = 0;
        for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) frontier |= adj_[static_cast<std::size_t>(std::countr_zero(bits))];
        frontier &= uncovered & ~set;
        for (std::uint64_t bits = frontier; bits != 0; bits &= bits - 1) {
          const std::uint64_t grown = set | (bits & (~bits + 1));
          if (seen.insert(grown).second) next.push_back(grown);
        }
      }
      if (size >= 3) {
        for (std::uint64_t set : next) {
          auto p = spanning_path(set);
          if (!p.empty()) blocks.push_back({set, std::move(p)});
        }
      }
      layer = std::move(next);
    }
    return blocks;
  }

  std::vector<std::uint64_t> adj_;
  const FactorSearchOptions& opts_;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<std::vector<Vertex>> stack_;
  std::size_t states_ = 0;
  bool timed_out_ = false;
};

}  // namespace detail

/// Exact {P3,P4,P5}-factor search.
///
/// Dynamic programme over the set of still-uncovered vertices: the smallest
/// uncovered vertex must lie on some path, so every vertex set of order 3-5
/// through it that spans a path in the uncovered part is tried in turn.
/// Uncovered sets already shown unsolvable are remembered.
inline FactorSearch search_factor(const Graph& g, const FactorSearchOptions& opts = {}) {
  if (g.order() > opts.max_order || g.order() > kWordOrder) {
    detail::fail(ErrorCode::TooLargeForExact, "factor search capped at order " + std::to_string(opts.max_order));
  }
  return detail::FactorSolver(g, opts).run(g.order());
}

inline std::optional<PathFactor> find_factor(const Graph& g, std::size_t max_order = kMaxExactOrder) {
  FactorSearchOptions opts;
  opts.max_order = max_order;
  return search_factor(g, opts).factor;
}

inline bool has_factor(const Graph& g, std::size_t max_order = kMaxExactOrder) {
  return find_factor(g, max_order).has_value();
}

struct FactorCheck {
  bool ok = false;
  std::string reason;  // first violated condition; empty when ok
  explicit operator bool() const noexcept { return ok; }
};

/// Certificate checker, independent of the search.
inline FactorCheck verify_factor(const Graph& g, const PathFactor& f) {
  std::vector<bool> covered(g.order(), false);
  for (std::size_t idx = 0; idx < f.paths.size(); ++idx) {
    const auto& p = f.paths[idx];
    const std::string where = "path " + std::to_string(idx);
    if (p.size() < 3 || p.size() > 5) return {false, where + " has " + std::to_string(p.size()) + " vertices"};
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] >= g.order()) return {false, where + " uses vertex " + std::to_string(p[i]) + " outside the graph"};
      if (covered[p[i]]) return {false, where + " reuses vertex " + std::to_string(p[i])};
      covered[p[i]] = true;
      if (i > 0 && !g.adjacent(p[i - 1], p[i])) {
        return {false, where + " steps along non-edge " + std::to_string(p[i - 1]) + "-" + std::to_string(p[i])};
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (!covered[v]) return {false, "vertex " + std::to_string(v) + " not covered"};
  return {true, {}};
}

}  // namespace pfactor
