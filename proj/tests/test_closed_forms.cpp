#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "spinbath/closed_forms.hpp"
#include "spinbath/evolve.hpp"
#include "spinbath/validate.hpp"

using namespace spinbath;

TEST(closed_forms, ghz_values) {
  EXPECT_EQ(ghz_negativity_closed(1.0), 0.5);
  EXPECT_EQ(ghz_negativity_closed(0.0), 0.0);
  EXPECT_NEAR(ghz_negativity_closed(std::pow(0.9, 10)), 0.17433922005, 1e-11);
}

TEST(closed_forms, w_values) {
  EXPECT_NEAR(w_negativity_closed(Bipartition::a_vs_bc, 1, 1, 1), std::sqrt(2.0) / 3.0, 1e-15);
  for (auto part : kAllBipartitions) EXPECT_EQ(w_negativity_closed(part, 0, 0, 0), 0.0);
  EXPECT_NEAR(w_negativity_closed(Bipartition::c_vs_ab, 0.6, 0.8, 0.3), 1.0 / 3.0, 1e-15);
}

TEST(closed_forms, ghz_and_w_track_generic_path) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto bath = sampling::random_bath(rng, 40);
    const double t = sampling::uniform(rng, 0, 20);
    const auto f = decoherence_matrix(bath, t);
    const auto ghz = negativity_report(evolve_density(ghz_state(), f), t);
    const auto w = negativity_report(evolve_density(w_state(), f), t);
    for (auto part : kAllBipartitions) {
      EXPECT_NEAR(ghz[part], ghz_negativity_closed(std::abs(f(0, 7))), 1e-10);
      EXPECT_NEAR(w[part], w_negativity_closed(part, std::abs(f(1, 2)), std::abs(f(1, 4)), std::abs(f(2, 4))), 1e-10);
    }
  }
}

TEST(closed_forms, w_xi_a_and_b_match_at_t0) {
  const WXiParams p{2, 0.0, 0.0};
  EXPECT_NEAR(w_xi_negativity_closed(Bipartition::a_vs_bc, p, 1, 1, 1), 0.372677996249965, 1e-12);
  EXPECT_NEAR(w_xi_negativity_closed(Bipartition::b_vs_ca, p, 1, 1, 1), 0.47140452079103173, 1e-12);
}

TEST(closed_forms, w_xi_c_cut_transcription_is_measured) {
  // The generic value at t = 0 is exactly 1/2; the transcribed expression is far off.
  const WXiParams p{2, 0.0, 0.0};
  const double generic = negativity(density_from_pure(w_xi_state(p)), Bipartition::c_vs_ab);
  const double closed = w_xi_negativity_closed(Bipartition::c_vs_ab, p, 1, 1, 1);
  EXPECT_NEAR(generic, 0.5, 1e-12);
  EXPECT_NEAR(closed, 1.3102505711447916, 1e-9);
}

TEST(closed_forms, w_xi_finite_on_grid) {
  const auto bath = BathParams::uniform({0.1, 0.2, 0.5}, 300, SiteParams{1.0});
  for (long xi : {1L, 2L, 20L, 2000L})
    for (int j = 0; j < 40; ++j) {
      const auto f = decoherence_matrix(bath, 0.5 * j);
      for (auto part : kAllBipartitions)
        EXPECT_TRUE(std::isfinite(w_xi_negativity_closed(part, {xi, 0.7, -0.2}, std::abs(f(1, 2)),
                                                         std::abs(f(1, 4)), std::abs(f(2, 4)))));
    }
}
