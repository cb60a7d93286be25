// Entanglement of an arbitrary pure state in a non-uniform bath.

#include <cmath>
#include <cstdio>
#include <vector>

#include "spinbath/spinbath.hpp"

int main() {
  using namespace spinbath;
  const double r = 0.5;
  const auto state = make_pure_state({r, 0, 0, Complex(0, r), 0, r, -r, 0});

  std::vector<SiteParams> sites;
  for (int k = 0; k < 12; ++k) sites.push_back(make_site(0.5 + 0.1 * k));
  const auto bath = BathParams::per_site({0.3, -0.2, 0.4}, sites);

  for (int j = 0; j <= 10; ++j) {
    const double t = 0.5 * j;
    const auto report = negativity_report(evolve_density(state, bath, t), t);
    std::printf("t=%4.1f  A|BC=%.6f  B|CA=%.6f  C|AB=%.6f\n", t, report.a_bc, report.b_ca, report.c_ab);
  }
}
