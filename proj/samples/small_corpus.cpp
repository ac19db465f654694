// Connected graphs up to a given order: how many have a witness, how many
// have a factor, and how many have both.

#include <cstdio>
#include <cstdlib>

#include "pfactor/enumerate.hpp"
#include "pfactor/factors.hpp"

int main(int argc, char** argv) {
  const std::size_t max_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 7;
  std::printf("%3s %8s %8s %8s %8s\n", "n", "graphs", "witness", "factor", "both");
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t total = 0, witness = 0, factor = 0, both = 0;
    for (const auto& g : pfactor::generate_graphs(n, true)) {
      const bool w = pfactor::find_witness(g).has_value();
      const bool f = pfactor::has_factor(g);
      ++total;
      witness += w;
      factor += f;
      both += w && f;
    }
    std::printf("%3zu %8zu %8zu %8zu %8zu\n", n, total, witness, factor, both);
  }
}
