#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pfactor/error.hpp"

namespace pfactor {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hard cap on graph order. Exhaustive routines impose much tighter caps.
inline constexpr std::size_t kMaxOrder = 10000;

/// Largest order for which a vertex subset fits in one machine word.
inline constexpr std::size_t kWordOrder = 64;

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one bit
/// row per vertex. Immutable once built; use GraphBuilder to make one.
class Graph {
 public:
  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }

  /// Neighborhood of v as a single word; only valid for order() <= 64.
  std::uint64_t mask(Vertex v) const {
    if (n_ > kWordOrder) detail::fail(ErrorCode::TooLarge, "single-word mask needs order <= 64");
    check_vertex(v);
    return adj_[v];
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    const auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      for (std::uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      }
    }
    return out;
  }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  void check_vertex(Vertex v) const {
    if (v >= n_) detail::fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) {
    if (n == 0 || n > kMaxOrder) {
      detail::fail(ErrorCode::InvalidOrder, "order must be in [1, " + std::to_string(kMaxOrder) + "], got " + std::to_string(n));
    }
    g_.n_ = n;
    g_.words_ = (n + 63) / 64;
    g_.adj_.assign(n * g_.words_, 0);
  }

  explicit GraphBuilder(Graph g) : g_(std::move(g)) {}

  std::size_t order() const noexcept { return g_.n_; }

  bool has_edge(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (g_.adjacent(u, v)) {
      detail::fail(ErrorCode::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " added twice");
    }
    flip(u, v);
    ++g_.m_;
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    if (!g_.adjacent(u, v)) {
      detail::fail(ErrorCode::InvalidArgument, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    }
    flip(u, v);
    --g_.m_;
    return *this;
  }

  Graph build() const& { return g_; }
  Graph build() && { return std::move(g_); }

 private:
  void check_pair(Vertex u, Vertex v) const {
    g_.check_vertex(u);
    g_.check_vertex(v);
    if (u == v) detail::fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
  }

  void flip(Vertex u, Vertex v) {
    g_.adj_[u * g_.words_ + v / 64] ^= std::uint64_t{1} << (v % 64);
    g_.adj_[v * g_.words_ + u / 64] ^= std::uint64_t{1} << (u % 64);
  }

  Graph g_;
};

/// Subset of vertices of a graph with order <= 64.
struct VertexSet {
  std::uint64_t mask = 0;

  static VertexSet range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v < last; ++v) s.mask |= std::uint64_t{1} << v;
    return s;
  }

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.mask |= std::uint64_t{1} << v;
    return s;
  }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(mask)); }
  bool empty() const noexcept { return mask == 0; }
  bool contains(Vertex v) const noexcept { return v < 64 && ((mask >> v) & 1U); }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
      out.push_back(static_cast<Vertex>(std::countr_zero(bits)));
    }
    return out;
  }

  friend constexpr auto operator<=>(const VertexSet&, const VertexSet&) = default;
};

inline std::uint64_t full_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Constructions -------------------------------------------------------------

inline Graph empty_graph(std::size_t k) { return GraphBuilder(k).build(); }

inline Graph complete(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v = u + 1; v < k; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph path(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex v = 0; v + 1 < k; ++v) b.add_edge(v, v + 1);
  return std::move(b).build();
}

inline Graph cycle(std::size_t k) {
  if (k < 3) detail::fail(ErrorCode::InvalidOrder, "cycle needs at least 3 vertices");
  GraphBuilder b(k);
  for (Vertex v = 0; v < k; ++v) b.add_edge(v, static_cast<Vertex>((v + 1) % k));
  return std::move(b).build();
}

/// K_{1,k-1} with centre 0.
inline Graph star(std::size_t k) {
  GraphBuilder b(k);
  for (Vertex v = 1; v < k; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

namespace detail {
inline void copy_shifted(GraphBuilder& b, const Graph& g, Vertex shift) {
  for (const Edge& e : g.edges()) b.add_edge(e.u + shift, e.v + shift);
}
}  // namespace detail

/// a followed by b; b's vertices are shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  detail::copy_shifted(out, a, 0);
  detail::copy_shifted(out, b, static_cast<Vertex>(a.order()));
  return std::move(out).build();
}

/// Disjoint union plus every edge between the two sides.
inline Graph join(const Graph& a, const Graph& b) {
  GraphBuilder out(a.order() + b.order());
  detail::copy_shifted(out, a, 0);
  const auto shift = static_cast<Vertex>(a.order());
  detail::copy_shifted(out, b, shift);
  for (Vertex u = 0; u < a.order(); ++u)
    for (Vertex v = 0; v < b.order(); ++v) out.add_edge(u, v + shift);
  return std::move(out).build();
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) detail::fail(ErrorCode::InvalidArgument, "permutation size mismatch");
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

// Metrics -------------------------------------------------------------------

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

inline std::size_t min_degree(const Graph& g) {
  std::size_t d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

/// Connected-component index per vertex; components numbered in order of
/// their smallest vertex.
inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), unset);
  std::vector<Vertex> stack;
  std::size_t next = 0;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (label[root] != unset) continue;
    label[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == unset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  const auto labels = component_labels(g);
  return std::all_of(labels.begin(), labels.end(), [](std::size_t c) { return c == 0; });
}

/// Subgraph induced by `keep` (listed in increasing order), relabelled 0..k-1.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  GraphBuilder b(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) b.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(b).build();
}

}  // namespace pfactor
