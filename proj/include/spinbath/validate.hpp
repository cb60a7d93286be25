#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/closed_forms.hpp"
#include "spinbath/error.hpp"
#include "spinbath/evolve.hpp"
#include "spinbath/negativity.hpp"
#include "spinbath/oracle.hpp"
#include "spinbath/qstate.hpp"
#include "spinbath/sweep.hpp"

namespace spinbath {

struct ValidationCheck {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool fatal = true;
  bool passed = true;
  std::string detail;
};

struct ValidationOptions {
  /// Debug hook: MixingReading::gap deliberately breaks the closed-form site factor.
  MixingReading reading = MixingReading::zeta;
  std::uint64_t seed = 20240611;
};

namespace sampling {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Random (gamma, eta) with |gamma|^2 + |eta|^2 = 1 and random phases.
inline std::pair<Complex, Complex> unit_pair(std::mt19937_64& rng) {
  const double theta = uniform(rng, 0.0, std::numbers::pi / 2.0);
  return {std::polar(std::cos(theta), uniform(rng, -std::numbers::pi, std::numbers::pi)),
          std::polar(std::sin(theta), uniform(rng, -std::numbers::pi, std::numbers::pi))};
}

inline PureState3Q random_state(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Amplitudes amps{};
  double sum = 0.0;
  for (auto& z : amps) {
    z = {normal(rng), normal(rng)};
    sum += std::norm(z);
  }
  for (auto& z : amps) z /= std::sqrt(sum);
  return make_pure_state(amps);
}

/// Uniform or per-site bath with up to `max_spins` spins.
inline BathParams random_bath(std::mt19937_64& rng, std::size_t max_spins) {
  const Couplings g{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_spins)(rng);
  if (rng() % 2 == 0) {
    const auto [gamma, eta] = unit_pair(rng);
    return BathParams::uniform(g, n, {uniform(rng, -2.0, 2.0), gamma, eta});
  }
  std::vector<SiteParams> sites;
  for (std::size_t k = 0; k < n; ++k) {
    const auto [gamma, eta] = unit_pair(rng);
    sites.push_back({uniform(rng, -2.0, 2.0), gamma, eta});
  }
  return BathParams::per_site(g, sites);
}

}  // namespace sampling

namespace detail {

class CheckBuilder {
 public:
  CheckBuilder(std::string name, double tolerance, bool fatal = true) {
    check_.name = std::move(name);
    check_.tolerance = tolerance;
    check_.fatal = fatal;
  }
  void observe(double error) {
    if (std::isnan(error) || error > check_.max_error) check_.max_error = error;
  }
  void fail(const std::string& why) {
    failed_ = true;
    if (check_.detail.empty()) check_.detail = why;
  }
  void note(const std::string& text) { check_.detail += (check_.detail.empty() ? "" : "; ") + text; }
  ValidationCheck finish() {
    check_.passed = !failed_ && !std::isnan(check_.max_error) && check_.max_error <= check_.tolerance;
    return check_;
  }

 private:
  ValidationCheck check_;
  bool failed_ = false;
};

inline const BathParams& figure_bath(std::size_t n) {
  static const std::vector<BathParams> baths = [] {
    std::vector<BathParams> out;
    for (std::size_t n : {1u, 2u, 4u}) out.push_back(BathParams::uniform({0.1, 0.2, 0.5}, n, SiteParams{1.0}));
    return out;
  }();
  return baths.at(n == 1 ? 0 : n == 2 ? 1 : 2);
}

}  // namespace detail

/// Runs every oracle, closed-form and structural comparison.
inline std::vector<ValidationCheck> run_validation(const ValidationOptions& opts = {}) {
  using detail::CheckBuilder;
  std::vector<ValidationCheck> checks;
  std::mt19937_64 rng(opts.seed);

  // (a) closed-form site factor vs 2x2 exponential oracle.
  {
    CheckBuilder c("site_factor_vs_oracle", 1e-12);
    for (int sample = 0; sample < 1000; ++sample) {
      const std::size_t alpha = rng() % kBasisSize;
      const std::size_t beta = rng() % kBasisSize;
      const auto zetas = zeta_table(sampling::uniform(rng, -2, 2), sampling::uniform(rng, -2, 2),
                                    sampling::uniform(rng, -2, 2));
      const double h = sampling::uniform(rng, -2.0, 2.0);
      const auto [gamma, eta] = sampling::unit_pair(rng);
      const double t = sampling::uniform(rng, 0.0, 20.0);
      c.observe(std::abs(site_factor(alpha, beta, zetas, h, gamma, eta, t, opts.reading) -
                         oracle::site_factor_oracle(alpha, beta, zetas, h, gamma, eta, t)));
    }
    c.note("1000 random samples");
    checks.push_back(c.finish());
  }

  // (b) joint-space oracle vs factor path, and the negativities derived from both.
  {
    CheckBuilder rho_check("joint_oracle_vs_factor_path", 1e-9);
    CheckBuilder neg_check("joint_oracle_negativity", 1e-9);
    const std::vector<PureState3Q> states{ghz_state(), w_state(), w_xi_state({2, 0.0, 0.0})};
    for (std::size_t n : {1u, 2u, 4u}) {
      const auto& bath = detail::figure_bath(n);
      for (const auto& state : states) {
        for (std::size_t j = 0; j < 50; ++j) {
          const double t = grid_time(10.0, 50, j);
          try {
            const auto exact = oracle::joint_evolution_oracle(state, bath, t);
            const auto fast = evolve_density(state, decoherence_matrix(bath, t, opts.reading));
            rho_check.observe(max_abs_difference(exact.matrix(), fast.matrix()));
            for (auto part : kAllBipartitions)
              neg_check.observe(std::abs(negativity(exact, part) - negativity(fast, part)));
          } catch (const Error& e) {
            rho_check.fail(e.what());
            neg_check.fail(e.what());
          }
        }
      }
    }
    // Random non-uniform baths exercise the per-site product path.
    for (int sample = 0; sample < 40; ++sample) {
      const auto bath = sampling::random_bath(rng, 4);
      const auto state = sampling::random_state(rng);
      const double t = sampling::uniform(rng, 0.0, 10.0);
      try {
        rho_check.observe(max_abs_difference(oracle::joint_evolution_oracle(state, bath, t).matrix(),
                                             evolve_density(state, decoherence_matrix(bath, t, opts.reading)).matrix()));
      } catch (const Error& e) {
        rho_check.fail(e.what());
      }
    }
    rho_check.note("N in {1,2,4}, GHZ/W/W_xi(2,0,0), 50 points in [0,10] + 40 random baths");
    checks.push_back(rho_check.finish());
    checks.push_back(neg_check.finish());
  }

  // (c) GHZ and W closed forms vs generic path.
  {
    CheckBuilder ghz("ghz_closed_vs_generic", 1e-10);
    CheckBuilder sym("ghz_cut_symmetry", 1e-12);
    CheckBuilder w("w_closed_vs_generic", 1e-10);
    for (std::size_t n : {1u, 2u, 4u, 100u, 300u, 500u}) {
      for (double h : {0.5, 1.0, 3.0}) {
        const auto bath = BathParams::uniform({0.1, 0.2, 0.5}, n, SiteParams{h});
        for (std::size_t j = 0; j < 80; ++j) {
          const double t = grid_time(20.0, 80, j);
          try {
            const auto f = decoherence_matrix(bath, t, opts.reading);
            const auto g = negativity_report(evolve_density(ghz_state(), f), t);
            const auto gc = closed_form_report(StateKind::ghz, std::nullopt, f, t);
            const auto wg = negativity_report(evolve_density(w_state(), f), t);
            const auto wc = closed_form_report(StateKind::w, std::nullopt, f, t);
            for (auto part : kAllBipartitions) {
              ghz.observe(std::abs(g[part] - gc[part]));
              w.observe(std::abs(wg[part] - wc[part]));
            }
            sym.observe(std::max(std::abs(g.a_bc - g.b_ca), std::abs(g.b_ca - g.c_ab)));
          } catch (const Error& e) {
            ghz.fail(e.what());
            w.fail(e.what());
          }
        }
      }
    }
    checks.push_back(ghz.finish());
    checks.push_back(sym.finish());
    checks.push_back(w.finish());

    CheckBuilder t0("canonical_t0_values", 1e-12);
    const auto ones = DecoherenceMatrix::ones();
    const auto g0 = negativity_report(evolve_density(ghz_state(), ones), 0.0);
    const auto w0 = negativity_report(evolve_density(w_state(), ones), 0.0);
    for (auto part : kAllBipartitions) t0.observe(std::abs(g0[part] - 0.5));
    t0.observe(std::abs(w0.a_bc - std::sqrt(2.0) / 3.0));
    checks.push_back(t0.finish());
  }

  // (d) W_xi transcribed closed forms vs generic path: measured, never fatal.
  {
    for (auto part : kAllBipartitions) {
      CheckBuilder c("wxi_closed_vs_generic[" + std::string(to_string(part)) + "]", 1e-10, false);
      double worst_at_t0 = 0.0;
      for (long xi : {1L, 2L, 20L, 200L, 2000L}) {
        for (double phase : {0.0, std::numbers::pi / 4.0}) {
          const WXiParams p{xi, phase, phase};
          const auto state = w_xi_state(p);
          const auto bath = BathParams::uniform({0.1, 0.2, 0.5}, 300, SiteParams{1.0});
          for (std::size_t j = 0; j < 41; ++j) {
            const double t = grid_time(20.0, 41, j);
            const auto f = decoherence_matrix(bath, t, opts.reading);
            try {
              const double generic = negativity(evolve_density(state, f), part);
              const double closed = closed_form_report(StateKind::wxi, p, f, t)[part];
              const double dev = std::abs(generic - closed);
              c.observe(dev);
              if (j == 0) worst_at_t0 = std::max(worst_at_t0, dev);
            } catch (const Error& e) {
              c.fail(e.what());
            }
          }
        }
      }
      c.note("xi in {1,2,20,200,2000}, delta=phi in {0,pi/4}, N=300, 41 points in [0,20]; max |dev| at t=0: " +
             format_double(worst_at_t0));
      checks.push_back(c.finish());
    }
  }

  // (e) structural invariants on random states, baths and times.
  {
    CheckBuilder involution("pt_involution", 0.0);
    CheckBuilder trace("pt_trace", 1e-12);
    CheckBuilder herm("pt_hermitian", 1e-12);
    CheckBuilder psd("rho_psd", 1e-10);
    CheckBuilder range("negativity_range", 1e-12);
    CheckBuilder identity("negativity_identity", 1e-12);
    CheckBuilder populations("populations_conserved", 1e-14);
    CheckBuilder factors("factor_invariants", 1e-12);
    for (int sample = 0; sample < 500; ++sample) {
      const auto state = sampling::random_state(rng);
      const auto bath = sampling::random_bath(rng, 64);
      const double t = sampling::uniform(rng, 0.0, 20.0);
      try {
        const auto f = decoherence_matrix(bath, t, opts.reading);
        for (std::size_t a = 0; a < kBasisSize; ++a) {
          factors.observe(std::abs(f(a, a) - 1.0));
          for (std::size_t b = 0; b < kBasisSize; ++b) {
            factors.observe(std::abs(f(a, b) - std::conj(f(b, a))));
            factors.observe(std::max(0.0, std::abs(f(a, b)) - 1.0));
          }
        }
        const auto rho = evolve_density(state, f);
        for (std::size_t a = 0; a < kBasisSize; ++a)
          populations.observe(std::abs(rho(a, a).real() - std::norm(state[a])));
        psd.observe(std::max(0.0, -hermitian_eigenvalues(rho.matrix()).front()));
        for (auto part : kAllBipartitions) {
          const auto pt = partial_transpose(rho, part);
          involution.observe(max_abs_difference(partial_transpose(pt, part), rho.matrix()));
          trace.observe(std::abs(pt.trace() - 1.0));
          herm.observe(hermiticity_error(pt));
          const auto spectrum = hermitian_eigenvalues(pt);
          const double n = negativity_from_spectrum(spectrum);
          range.observe(std::max({0.0, -n, n - 0.5}));
          double raw = 0.0;
          for (double lambda : spectrum) raw += std::max(0.0, -lambda);
          identity.observe(std::abs(raw - trace_norm_negativity(spectrum)));
        }
      } catch (const Error& e) {
        psd.fail(e.what());
      }
    }
    for (auto* c : {&involution, &trace, &herm, &psd, &range, &identity, &populations, &factors}) {
      c->note("500 random samples");
      checks.push_back(c->finish());
    }

    CheckBuilder dephasing("dephasing_limit", 1e-10);
    for (int sample = 0; sample < 200; ++sample) {
      const Couplings g{sampling::uniform(rng, -1, 1), sampling::uniform(rng, -1, 1), sampling::uniform(rng, -1, 1)};
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 50)(rng);
      const double t = sampling::uniform(rng, 0.0, 20.0);
      const auto f = decoherence_matrix(BathParams::uniform(g, n, SiteParams{0.0}), t, opts.reading);
      const auto zetas = zeta_table(g);
      for (std::size_t a = 0; a < kBasisSize; ++a)
        for (std::size_t b = 0; b < kBasisSize; ++b) {
          const double expected = std::pow(std::abs(std::cos((zetas[a] - zetas[b]) * t)), static_cast<double>(n));
          dephasing.observe(std::abs(std::abs(f(a, b)) - expected));
        }
    }
    checks.push_back(dephasing.finish());
  }

  return checks;
}

inline bool all_fatal_passed(const std::vector<ValidationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return !c.fatal || c.passed; });
}

inline void print_validation(std::ostream& out, const std::vector<ValidationCheck>& checks, bool verbose) {
  char line[256];
  std::snprintf(line, sizeof line, "%-34s %-12s %-10s %s\n", "check", "max_error", "tolerance", "status");
  out << line;
  for (const auto& c : checks) {
    const char* status = c.passed ? "PASS" : (c.fatal ? "FAIL" : "INFO");
    std::snprintf(line, sizeof line, "%-34s %-12.3e %-10.1e %s\n", c.name.c_str(), c.max_error, c.tolerance, status);
    out << line;
    if ((verbose || (c.fatal && !c.passed)) && !c.detail.empty()) out << "    " << c.detail << '\n';
  }
  out << (all_fatal_passed(checks) ? "all fatal checks passed\n" : "FATAL CHECK FAILURE\n");
}

}  // namespace spinbath
