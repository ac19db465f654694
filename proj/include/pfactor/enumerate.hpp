#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "pfactor/error.hpp"
#include "pfactor/graph.hpp"

// Isomorph-free generation of small graphs. Canonical labels come from colour
// refinement plus an individualisation search over the refined cells; the
// canonical code is the largest upper-triangle bit string over all leaves.

namespace pfactor {

inline constexpr std::size_t kMaxEnumOrder = 10;  // n(n-1)/2 code bits must fit in 64

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

// Splits cells by (own cell, neighbour counts per cell) until stable.
inline Partition refine(const std::vector<std::uint64_t>& adj, Partition cells) {
  while (true) {
    std::vector<std::uint64_t> cell_mask(cells.size(), 0);
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (Vertex v : cells[c]) cell_mask[c] |= std::uint64_t{1} << v;

    Partition next;
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> sig;
      for (Vertex v : cell) {
        std::vector<int> counts(cells.size());
        for (std::size_t c = 0; c < cells.size(); ++c) counts[c] = std::popcount(adj[v] & cell_mask[c]);
        sig.emplace_back(std::move(counts), v);
      }
      std::stable_sort(sig.begin(), sig.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<Vertex> cur{sig[0].second};
      for (std::size_t i = 1; i < sig.size(); ++i) {
        if (sig[i].first != sig[i - 1].first) {
          next.push_back(std::move(cur));
          cur.clear();
        }
        cur.push_back(sig[i].second);
      }
      next.push_back(std::move(cur));
    }
    if (next.size() == cells.size()) return next;
    cells = std::move(next);
  }
}

inline std::uint64_t code_of(const std::vector<std::uint64_t>& adj, const std::vector<Vertex>& order) {
  std::uint64_t code = 0;
  const std::size_t n = order.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
  return code;
}

struct CanonSearch {
  const std::vector<std::uint64_t>& adj;
  std::uint64_t best = 0;
  std::vector<Vertex> best_order;
  bool have = false;

  void run(const Partition& p) {
    const auto split = std::find_if(p.begin(), p.end(), [](const auto& c) { return c.size() > 1; });
    if (split == p.end()) {
      std::vector<Vertex> order;
      for (const auto& c : p) order.push_back(c[0]);
      const std::uint64_t code = code_of(adj, order);
      if (!have || code > best) {
        best = code;
        best_order = std::move(order);
        have = true;
      }
      return;
    }
    const auto idx = static_cast<std::size_t>(split - p.begin());
    for (Vertex v : *split) {
      Partition q(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(idx));
      q.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : *split)
        if (w != v) rest.push_back(w);
      q.push_back(std::move(rest));
      q.insert(q.end(), p.begin() + static_cast<std::ptrdiff_t>(idx) + 1, p.end());
      run(refine(adj, std::move(q)));
    }
  }
};

}  // namespace detail

struct CanonicalForm {
  std::uint64_t code = 0;
  std::vector<Vertex> order;  // order[i] = original vertex placed at position i
};

/// Canonical code: equal iff the graphs are isomorphic (same order assumed).
inline CanonicalForm canonical_form(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxEnumOrder) detail::fail(ErrorCode::TooLargeForExhaustive, "canonical form capped at order " + std::to_string(kMaxEnumOrder));
  std::vector<std::uint64_t> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v] = g.mask(v);
  detail::Partition unit(1);
  for (Vertex v = 0; v < n; ++v) unit[0].push_back(v);
  detail::CanonSearch search{adj, 0, {}, false};
  search.run(detail::refine(adj, std::move(unit)));
  return {search.best, std::move(search.best_order)};
}

inline Graph canonical_graph(const Graph& g) {
  const auto form = canonical_form(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < form.order.size(); ++i) perm[form.order[i]] = static_cast<Vertex>(i);
  return relabel(g, perm);
}

/// One representative per isomorphism class on n vertices, canonically
/// labelled, in increasing code order. With connected_only, classes are grown
/// from connected graphs on n - 1 vertices, which suffices because every
/// connected graph has a vertex whose removal keeps it connected.
inline std::vector<Graph> generate_graphs(std::size_t n, bool connected_only) {
  if (n < 1) detail::fail(ErrorCode::InvalidOrder, "order must be >= 1");
  if (n > kMaxEnumOrder) detail::fail(ErrorCode::TooLargeForExhaustive, "enumeration capped at order " + std::to_string(kMaxEnumOrder));
  std::vector<Graph> level{empty_graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<std::uint64_t, Graph>> next;
    for (const Graph& base : level) {
      for (std::uint64_t nb = connected_only ? 1 : 0; nb < (std::uint64_t{1} << (k - 1)); ++nb) {
        GraphBuilder b(k);
        for (const Edge& e : base.edges()) b.add_edge(e.u, e.v);
        for (std::uint64_t bits = nb; bits != 0; bits &= bits - 1)
          b.add_edge(static_cast<Vertex>(std::countr_zero(bits)), static_cast<Vertex>(k - 1));
        const Graph g = std::move(b).build();
        const auto code = canonical_form(g).code;
        if (seen.insert(code).second) next.emplace_back(code, canonical_graph(g));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

}  // namespace pfactor
