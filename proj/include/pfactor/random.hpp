#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "pfactor/graph.hpp"

namespace pfactor {

/// Seeded generator with distribution code that does not depend on the
/// standard library's (unspecified) distribution algorithms, so a seed means
/// the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  rng.shuffle(perm);
  return perm;
}

/// Erdos-Renyi G(n, p).
inline Graph random_graph(std::size_t n, double p, Rng& rng) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) b.add_edge(u, v);
  return std::move(b).build();
}

/// A random recursive tree on a shuffled vertex order, plus each remaining
/// pair independently with probability p. Always connected.
inline Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  const auto order = random_permutation(n, rng);
  GraphBuilder b(n);
  for (std::size_t i = 1; i < n; ++i) b.add_edge(order[i], order[rng.below(i)]);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!b.has_edge(u, v) && rng.chance(p)) b.add_edge(u, v);
  return std::move(b).build();
}

}  // namespace pfactor
