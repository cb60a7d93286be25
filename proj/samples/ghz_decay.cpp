// GHZ negativity against bath size, compared with |F_18|^N / 2.

#include <cstdio>

#include "spinbath/spinbath.hpp"

int main() {
  using namespace spinbath;
  const auto state = ghz_state();
  std::printf("%6s %6s %14s %14s\n", "N", "t", "generic", "closed");
  for (std::size_t n : {100u, 300u, 500u}) {
    const auto bath = BathParams::uniform({0.1, 0.2, 0.5}, n, SiteParams{1.0});
    for (double t : {0.0, 0.5, 1.0, 2.0}) {
      const auto f = decoherence_matrix(bath, t);
      const double generic = negativity(evolve_density(state, f), Bipartition::a_vs_bc);
      std::printf("%6zu %6.2f %14.6e %14.6e\n", n, t, generic, ghz_negativity_closed(std::abs(f(0, 7))));
    }
  }
}
