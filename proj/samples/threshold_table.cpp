// Order bounds and both thresholds for the first few admissible minimum degrees.

#include <cstdio>

#include "pfactor/extremal.hpp"

int main() {
  std::printf("%5s %6s %6s %12s %14s\n", "delta", "n", "bound", "edges", "rho");
  for (std::int64_t delta : {1, 2, 4, 5, 7, 8}) {
    const std::int64_t n = std::max(pfactor::n_min_size(delta), pfactor::n_min_spectral(delta));
    const auto t = pfactor::thresholds(n, delta);
    std::printf("%5lld %6lld %6s %12lld %14.9f\n", static_cast<long long>(delta), static_cast<long long>(n),
                n == t.n_min_size ? "size" : "rho", static_cast<long long>(t.size_threshold), t.rho_threshold);
  }
}
