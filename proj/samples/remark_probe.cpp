// Extremal graphs carry a large isolated-vertex witness, yet small ones still
// have path factors. Prints one line per (n, delta).

#include <iostream>

#include "pfactor/audit.hpp"
#include "pfactor/serialize.hpp"

int main(int argc, char** argv) {
  const std::int64_t max_n = argc > 1 ? std::stoll(argv[1]) : 12;
  for (std::int64_t delta : {1, 2}) {
    for (std::int64_t n = (5 * delta) / 3 + 2; n <= max_n; ++n) {
      const auto r = pfactor::audit::remark_audit(n, delta);
      std::cout << "n=" << n << " delta=" << delta << " i(G-S)=" << r.witness.isolated << " factor="
                << (r.search.factor ? pfactor::to_json(*r.search.factor).dump() : "none") << '\n';
    }
  }
}
