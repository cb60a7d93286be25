// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "spinbath/spinbath.hpp"

using namespace spinbath;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

const Couplings kG{0.1, 0.2, 0.5};

std::vector<double> grid(double t_max, std::size_t steps) {
  std::vector<double> ts;
  for (std::size_t j = 0; j < steps; ++j) ts.push_back(grid_time(t_max, steps, j));
  return ts;
}

std::vector<PureState3Q> canonical_states() { return {ghz_state(), w_state(), w_xi_state({2, 0.0, 0.0})}; }

const std::vector<std::size_t> kSmallN{1, 2, 4};

Outcome site_factor_oracle() {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto z = zeta_table(sampling::uniform(rng, -2, 2), sampling::uniform(rng, -2, 2), sampling::uniform(rng, -2, 2));
    const auto [gamma, eta] = sampling::unit_pair(rng);
    const double h = sampling::uniform(rng, -3, 3), t = sampling::uniform(rng, 0, 20);
    const std::size_t a = rng() % 8, b = rng() % 8;
    worst = std::max(worst, std::abs(site_factor(a, b, z, h, gamma, eta, t) -
                                     oracle::site_factor_oracle(a, b, z, h, gamma, eta, t)));
  }
  return {worst <= 1e-12, "max |diff| " + sci(worst) + " over 1000 samples"};
}

Outcome joint_oracle() {
  double worst = 0.0;
  for (std::size_t n : kSmallN) {
    const auto bath = BathParams::uniform(kG, n, SiteParams{1.0});
    for (const auto& s : canonical_states())
      for (double t : grid(10.0, 50))
        worst = std::max(worst, max_abs_difference(oracle::joint_evolution_oracle(s, bath, t).matrix(),
                                                   evolve_density(s, bath, t).matrix()));
  }
  return {worst <= 1e-9, "max elementwise |diff| " + sci(worst)};
}

Outcome ghz_closed() {
  double worst = 0.0, t0 = 0.0;
  for (std::size_t n : kSmallN) {
    const auto bath = BathParams::uniform(kG, n, SiteParams{1.0});
    const auto z = zeta_table(kG);
    for (double t : grid(10.0, 50)) {
      const auto f = site_factor(0, 7, z, 1.0, bath.site(0).gamma, bath.site(0).eta, t);
      const double expected = std::pow(std::abs(f), static_cast<double>(n)) / 2.0;
      const auto r = negativity_report(evolve_density(ghz_state(), bath, t), t);
      for (auto part : kAllBipartitions) worst = std::max(worst, std::abs(r[part] - expected));
      if (t == 0.0)
        for (auto part : kAllBipartitions) t0 = std::max(t0, std::abs(r[part] - 0.5));
    }
  }
  return {worst <= 1e-10 && t0 <= 1e-12, "max |diff| " + sci(worst) + ", t=0 offset " + sci(t0)};
}

Outcome ghz_symmetry() {
  double worst = 0.0;
  std::vector<BathParams> baths;
  for (std::size_t n : kSmallN) baths.push_back(BathParams::uniform(kG, n, SiteParams{1.0}));
  baths.push_back(BathParams::uniform(kG, 300, SiteParams{1.0}));
  for (const auto& bath : baths)
    for (double t : grid(10.0, 50)) {
      const auto r = negativity_report(evolve_density(ghz_state(), bath, t), t);
      worst = std::max({worst, std::abs(r.a_bc - r.b_ca), std::abs(r.b_ca - r.c_ab)});
    }
  return {worst <= 1e-12, "max cut spread " + sci(worst)};
}

Outcome w_closed() {
  double worst = 0.0;
  for (std::size_t n : kSmallN) {
    const auto bath = BathParams::uniform(kG, n, SiteParams{1.0});
    for (double t : grid(10.0, 50)) {
      const auto f = decoherence_matrix(bath, t);
      const auto r = negativity_report(evolve_density(w_state(), f), t);
      for (auto part : kAllBipartitions)
        worst = std::max(worst, std::abs(r[part] - w_negativity_closed(part, std::abs(f(1, 2)), std::abs(f(1, 4)),
                                                                       std::abs(f(2, 4)))));
    }
  }
  const double t0 = std::abs(negativity(density_from_pure(w_state()), Bipartition::a_vs_bc) - std::sqrt(2.0) / 3.0);
  return {worst <= 1e-10 && t0 <= 1e-12, "max |diff| " + sci(worst) + ", t=0 offset " + sci(t0)};
}

Outcome fig1_order() {
  std::vector<std::vector<SweepRow>> runs;
  for (std::size_t n : {100u, 300u, 500u}) {
    SweepSpec spec;
    spec.bath = BathParams::uniform(kG, n, SiteParams{1.0});
    spec.t_max = kPresetTMax;
    spec.t_steps = kPresetLineSteps;
    runs.push_back(evaluate_sweep(spec));
  }
  std::size_t violations = 0;
  for (std::size_t j = 0; j < kPresetLineSteps; ++j)
    for (auto part : kAllBipartitions) {
      if (runs[2][j].generic[part] > runs[1][j].generic[part] + 1e-15) ++violations;
      if (runs[1][j].generic[part] > runs[0][j].generic[part] + 1e-15) ++violations;
    }
  return {violations == 0, std::to_string(violations) + " ordering violations over " +
                               std::to_string(kPresetLineSteps) + " grid times"};
}

double first_local_minimum(double h) {
  // Fine grid; the figure grid is too coarse to resolve the h = 5 dip reliably.
  const auto bath = BathParams::uniform(kG, 300, SiteParams{h});
  const auto ts = grid(20.0, 4001);
  std::vector<double> n;
  for (double t : ts) n.push_back(negativity(evolve_density(ghz_state(), bath, t), Bipartition::a_vs_bc));
  // A run of equal samples (the curve can sit at exactly 0 below the negativity
  // floor) counts as one minimum, located at the middle of the run.
  for (std::size_t j = 1; j + 1 < n.size(); ++j) {
    if (!(n[j] < n[j - 1])) continue;
    std::size_t end = j;
    while (end + 1 < n.size() && n[end + 1] == n[j]) ++end;
    if (end + 1 < n.size() && n[end + 1] > n[j]) return 0.5 * (ts[j] + ts[end]);
  }
  return std::nan("");
}

Outcome fig2_period() {
  const double a = first_local_minimum(0.5), b = first_local_minimum(3.0), c = first_local_minimum(5.0);
  std::ostringstream d;
  d << "first minima at t = " << a << " (h=0.5), " << b << " (h=3), " << c << " (h=5)";
  return {a > b && b > c, d.str()};
}

Outcome dephasing_limit() {
  double worst = 0.0;
  for (std::size_t n : {1u, 4u, 50u, 300u}) {
    const auto bath = BathParams::uniform(kG, n, SiteParams{0.0});
    for (double t : grid(20.0, 200)) {
      const double expected = std::pow(std::abs(std::cos((kG.a + kG.b + kG.c) * t)), static_cast<double>(n)) / 2.0;
      const auto r = negativity_report(evolve_density(ghz_state(), bath, t), t);
      for (auto part : kAllBipartitions) worst = std::max(worst, std::abs(r[part] - expected));
    }
  }
  return {worst <= 1e-10, "max |diff| " + sci(worst)};
}

double mean_bc_gap(long xi) {
  const auto bath = BathParams::uniform(kG, 300, SiteParams{1.0});
  const auto state = w_xi_state({xi, std::numbers::pi / 4, std::numbers::pi / 4});
  const auto ts = grid(20.0, 101);
  double sum = 0.0;
  for (double t : ts) {
    const auto rho = evolve_density(state, bath, t);
    sum += std::abs(negativity(rho, Bipartition::b_vs_ca) - negativity(rho, Bipartition::c_vs_ab));
  }
  return sum / static_cast<double>(ts.size());
}

Outcome wxi_convergence() {
  const double near = mean_bc_gap(2), far = mean_bc_gap(2000);
  return {far < near, "mean |N_B - N_C|: xi=2 " + sci(near) + ", xi=2000 " + sci(far)};
}

Outcome wxi_closed_report() {
  const auto checks = run_validation();
  std::ostringstream d;
  std::size_t found = 0;
  for (const auto& c : checks)
    if (c.name.rfind("wxi_closed_vs_generic", 0) == 0) {
      ++found;
      d << (found > 1 ? "; " : "") << c.name << " max dev " << sci(c.max_error);
    }
  return {found == 3 && all_fatal_passed(checks), d.str() + " (measured, non-fatal)"};
}

Outcome structural() {
  std::mt19937_64 rng(777);
  std::size_t failures = 0;
  double worst_identity = 0.0, min_rho_eig = 0.0;
  for (int s = 0; s < 500; ++s) {
    const auto rho = evolve_density(sampling::random_state(rng), sampling::random_bath(rng, 64),
                                    sampling::uniform(rng, 0, 20));
    min_rho_eig = std::min(min_rho_eig, hermitian_eigenvalues(rho.matrix()).front());
    for (auto part : kAllBipartitions) {
      const auto pt = partial_transpose(rho, part);
      if (partial_transpose(pt, part) != rho.matrix()) ++failures;
      if (std::abs(pt.trace() - 1.0) > 1e-12) ++failures;
      if (hermiticity_error(pt) > 1e-12) ++failures;
      const auto spectrum = hermitian_eigenvalues(pt);
      const double n = negativity_from_spectrum(spectrum);
      if (n < 0.0 || n > 0.5 + 1e-12) ++failures;
      double raw = 0.0, trace_norm = 0.0;
      for (double v : spectrum) {
        raw += std::max(0.0, -v);
        trace_norm += std::abs(v);
      }
      worst_identity = std::max(worst_identity, std::abs(raw - (trace_norm - 1.0) / 2.0));
    }
  }
  const bool ok = failures == 0 && worst_identity <= 1e-12 && min_rho_eig >= -1e-10;
  return {ok, std::to_string(failures) + " property failures, identity gap " + sci(worst_identity) +
                  ", min rho eigenvalue " + sci(min_rho_eig)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "CLI path not supplied"};
  const auto dir = std::filesystem::temp_directory_path() / ("spinbath_accept_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::vector<std::string> invocations{
      "simulate --state ghz --n-spins 300 --t-steps 200",
      "simulate --state wxi --xi 20 --delta 0.7853981633974483 --phi 0.7853981633974483 --method both",
      "simulate --state custom --amps '0.3,0.1;0,0;0.5,-0.2;0.1,0;0,0.4;0,0;0.2,0.2;0.6,0' --n-spins 37 --h 2.5"};
  std::size_t identical = 0;
  for (std::size_t k = 0; k < invocations.size(); ++k) {
    std::string files[2];
    for (int rep = 0; rep < 2; ++rep) {
      const auto out = dir / ("run" + std::to_string(k) + "_" + std::to_string(rep) + ".csv");
      const int status = std::system((cli + " " + invocations[k] + " --out " + out.string()).c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        std::filesystem::remove_all(dir);
        return {false, "CLI failed on: " + invocations[k]};
      }
      files[rep] = slurp(out);
    }
    if (!files[0].empty() && files[0] == files[1]) ++identical;
  }
  std::filesystem::remove_all(dir);
  return {identical == invocations.size(),
          std::to_string(identical) + "/" + std::to_string(invocations.size()) + " invocations byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"site factor vs 2x2 exponential oracle", site_factor_oracle},
      {"joint evolution oracle vs factor path", joint_oracle},
      {"GHZ closed form", ghz_closed},
      {"GHZ bipartition symmetry", ghz_symmetry},
      {"W closed forms", w_closed},
      {"larger bath decays faster (GHZ, N=100/300/500)", fig1_order},
      {"stronger field shortens the period (GHZ, h=0.5/3/5)", fig2_period},
      {"pure dephasing limit", dephasing_limit},
      {"W_xi B/C cuts converge at large xi", wxi_convergence},
      {"W_xi closed-form comparison reported", wxi_closed_report},
      {"structural properties (500 samples)", structural},
      {"simulate output is byte-identical across runs", [&] { return determinism(cli); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failed;
    std::printf("[%s] %2zu %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
