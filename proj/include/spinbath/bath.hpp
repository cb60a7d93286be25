#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "spinbath/error.hpp"
#include "spinbath/matrix.hpp"
#include "spinbath/qstate.hpp"

namespace spinbath {

/// Qubit-bath coupling constants g^A, g^B, g^C (inverse time, hbar = 1).
struct Couplings {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// One bath spin: transverse field h_k and initial state gamma_k|0> + eta_k|1>.
struct SiteParams {
  double h = 0.0;
  Complex gamma{1.0 / std::numbers::sqrt2, 0.0};
  Complex eta{1.0 / std::numbers::sqrt2, 0.0};
};

/// Builds a site, renormalizing (gamma, eta) when |gamma|^2 + |eta|^2 is within 1e-6 of one.
inline SiteParams make_site(double h, Complex gamma = 1.0 / std::numbers::sqrt2,
                            Complex eta = 1.0 / std::numbers::sqrt2) {
  if (!std::isfinite(h) || !std::isfinite(std::abs(gamma)) || !std::isfinite(std::abs(eta)))
    throw Error(ErrorCode::invalid_bath, "site parameters must be finite");
  const double norm = std::norm(gamma) + std::norm(eta);
  if (std::abs(norm - 1.0) > kRenormalizeTolerance)
    throw Error(ErrorCode::invalid_bath,
                "site amplitudes must satisfy |gamma|^2 + |eta|^2 = 1 (got " + std::to_string(norm) + ")");
  if (norm != 1.0) {
    const double scale = 1.0 / std::sqrt(norm);
    gamma *= scale;
    eta *= scale;
  }
  return {h, gamma, eta};
}

/// Spin-chain bath. A single stored site is broadcast to all n_spins sites.
class BathParams {
 public:
  static BathParams uniform(Couplings g, std::size_t n_spins, const SiteParams& site) {
    if (n_spins < 1) throw Error(ErrorCode::invalid_bath, "bath needs at least one spin");
    check_couplings(g);
    return BathParams(g, n_spins, {make_site(site.h, site.gamma, site.eta)});
  }

  static BathParams per_site(Couplings g, const std::vector<SiteParams>& sites) {
    if (sites.empty()) throw Error(ErrorCode::invalid_bath, "bath needs at least one spin");
    check_couplings(g);
    std::vector<SiteParams> checked;
    checked.reserve(sites.size());
    for (const auto& s : sites) checked.push_back(make_site(s.h, s.gamma, s.eta));
    const std::size_t n = checked.size();
    return BathParams(g, n, std::move(checked));
  }

  const Couplings& couplings() const { return g_; }
  std::size_t n_spins() const { return n_spins_; }
  bool is_uniform() const { return sites_.size() == 1; }
  const SiteParams& site(std::size_t k) const { return is_uniform() ? sites_.front() : sites_.at(k); }

 private:
  BathParams(Couplings g, std::size_t n, std::vector<SiteParams> sites)
      : g_(g), n_spins_(n), sites_(std::move(sites)) {}

  static void check_couplings(const Couplings& g) {
    if (!std::isfinite(g.a) || !std::isfinite(g.b) || !std::isfinite(g.c))
      throw Error(ErrorCode::invalid_bath, "couplings must be finite");
  }

  Couplings g_;
  std::size_t n_spins_;
  std::vector<SiteParams> sites_;
};

/// Conditional-bath field zeta_alpha for each qubit basis state alpha. The sign
/// of g^X is + when bit X of alpha is 0 and - when it is 1.
class CouplingSpectrum {
 public:
  explicit CouplingSpectrum(const std::array<double, kBasisSize>& zeta) : zeta_(zeta) {}
  double operator[](std::size_t alpha) const { return zeta_[alpha]; }
  const std::array<double, kBasisSize>& values() const { return zeta_; }

 private:
  std::array<double, kBasisSize> zeta_;
};

inline CouplingSpectrum zeta_table(double gA, double gB, double gC) {
  std::array<double, kBasisSize> z{};
  for (std::size_t alpha = 0; alpha < kBasisSize; ++alpha) {
    const auto bits = basis_bits(alpha);
    const double sa = bits.a ? -gA : gA;
    const double sb = bits.b ? -gB : gB;
    const double sc = bits.c ? -gC : gC;
    z[alpha] = 0.5 * (sa + sb + sc);
  }
  return CouplingSpectrum(z);
}

inline CouplingSpectrum zeta_table(const Couplings& g) { return zeta_table(g.a, g.b, g.c); }

/// Lambda = sqrt(zeta^2 + h^2).
inline double lambda_coeff(double zeta, double hk) { return std::sqrt(zeta * zeta + hk * hk); }

/// Which quantity fills the mixing symbol in the closed-form site factor. Only
/// `zeta` reproduces the exact propagator; `gap` exists for mutation testing.
enum class MixingReading { zeta, gap };

namespace detail {

// sin(t * lambda) / lambda, continuous at lambda = 0.
inline double sin_over(double t, double lambda) { return lambda == 0.0 ? t : std::sin(t * lambda) / lambda; }

/// Closed trigonometric single-site decoherence factor with explicit mixing
/// symbols mix_a, mix_b (zeta_alpha, zeta_beta in the physical reading).
inline Complex site_factor_closed(double zeta_a, double zeta_b, double mix_a, double mix_b, double hk,
                                  Complex gamma, Complex eta, double t) {
  constexpr Complex i{0.0, 1.0};
  const double lam_a = lambda_coeff(zeta_a, hk);
  const double lam_b = lambda_coeff(zeta_b, hk);
  const double cos_a = std::cos(t * lam_a);
  const double cos_b = std::cos(t * lam_b);
  const double sin_a = sin_over(t, lam_a);  // sin(t L_a) / L_a
  const double sin_b = sin_over(t, lam_b);

  const Complex plus_a = cos_a + i * mix_a * sin_a;
  const Complex minus_a = cos_a - i * mix_a * sin_a;
  const Complex plus_b = cos_b + i * mix_b * sin_b;
  const Complex minus_b = cos_b - i * mix_b * sin_b;

  const Complex cross_gamma_eta = i * hk * sin_b * plus_a - i * hk * sin_a * plus_b;
  const Complex cross_eta_gamma = i * hk * sin_b * minus_a + i * hk * sin_a * (-cos_b + i * mix_b * sin_b);

  return std::conj(gamma) * eta * cross_gamma_eta + gamma * std::conj(eta) * cross_eta_gamma +
         gamma * std::conj(gamma) * minus_a * plus_b + eta * std::conj(eta) * plus_a * minus_b +
         hk * hk * sin_a * sin_b;
}

}  // namespace detail

/// Single-site factor <psi_k| e^{+i H_beta t} e^{-i H_alpha t} |psi_k> for the
/// conditional Hamiltonian H_mu = zeta_mu sigma_z + h_k sigma_x.
inline Complex site_factor(std::size_t alpha, std::size_t beta, const CouplingSpectrum& zetas, double hk,
                           Complex gamma, Complex eta, double t, MixingReading reading = MixingReading::zeta) {
  const double za = zetas[alpha];
  const double zb = zetas[beta];
  const double mix_a = reading == MixingReading::zeta ? za : lambda_coeff(za, hk);
  const double mix_b = reading == MixingReading::zeta ? zb : lambda_coeff(zb, hk);
  return detail::site_factor_closed(za, zb, mix_a, mix_b, hk, gamma, eta, t);
}

/// Magnitudes below this underflow to exactly zero.
inline constexpr double kUnderflowMagnitude = 1e-300;

/// z^n through the polar form: |z|^n = exp(n ln|z|), arg = n arg(z).
inline Complex power_log_domain(Complex z, std::size_t n) {
  if (n == 0) return 1.0;
  const double mag = std::abs(z);
  if (mag == 0.0) return 0.0;
  const double log_mag = static_cast<double>(n) * std::log(mag);
  if (log_mag < std::log(kUnderflowMagnitude)) return 0.0;
  return std::polar(std::exp(log_mag), static_cast<double>(n) * std::arg(z));
}

namespace detail {

// A site factor is an overlap of unit vectors; rounding can leave |z| a few ulp
// above 1, which a large power would amplify.
inline Complex clamp_unit(Complex z) {
  const double mag = std::abs(z);
  return mag > 1.0 ? z / mag : z;
}

}  // namespace detail

/// Total decoherence factors F(alpha, beta) at a fixed time.
class DecoherenceMatrix {
 public:
  static DecoherenceMatrix ones() { return DecoherenceMatrix(Matrix8::filled(1.0)); }

  /// Accepts an arbitrary factor matrix after checking unit diagonal,
  /// conjugate symmetry and |F| <= 1.
  static DecoherenceMatrix from_matrix(const Matrix8& f) {
    for (std::size_t a = 0; a < kBasisSize; ++a) {
      if (f(a, a) != Complex(1.0, 0.0))
        throw Error(ErrorCode::invalid_argument, "decoherence factors need a unit diagonal");
      for (std::size_t b = 0; b < kBasisSize; ++b) {
        if (std::abs(f(a, b)) > 1.0 + 1e-12)
          throw Error(ErrorCode::invalid_argument, "decoherence factor magnitude exceeds 1");
      }
    }
    if (hermiticity_error(f) > 1e-12)
      throw Error(ErrorCode::invalid_argument, "decoherence factors must satisfy F(b,a) = conj(F(a,b))");
    return DecoherenceMatrix(f);
  }

  Complex operator()(std::size_t alpha, std::size_t beta) const { return f_(alpha, beta); }
  const Matrix8& matrix() const { return f_; }

 private:
  explicit DecoherenceMatrix(const Matrix8& f) : f_(f) {}
  friend DecoherenceMatrix decoherence_matrix(const BathParams&, double, MixingReading);

  Matrix8 f_;
};

/// F(alpha, beta) = prod_k site_factor_k(alpha, beta). Uniform baths use the
/// power form; non-uniform ones accumulate log-magnitude and phase per site.
inline DecoherenceMatrix decoherence_matrix(const BathParams& p, double t,
                                            MixingReading reading = MixingReading::zeta) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::invalid_argument, "time must be finite and >= 0");
  const auto zetas = zeta_table(p.couplings());
  const double log_floor = std::log(kUnderflowMagnitude);
  Matrix8 f;
  for (std::size_t a = 0; a < kBasisSize; ++a) {
    f(a, a) = 1.0;
    for (std::size_t b = a + 1; b < kBasisSize; ++b) {
      Complex total;
      if (p.is_uniform()) {
        const auto& s = p.site(0);
        total = power_log_domain(detail::clamp_unit(site_factor(a, b, zetas, s.h, s.gamma, s.eta, t, reading)),
                                 p.n_spins());
      } else {
        double log_mag = 0.0;
        double phase = 0.0;
        bool vanished = false;
        for (std::size_t k = 0; k < p.n_spins() && !vanished; ++k) {
          const auto& s = p.site(k);
          const Complex z = detail::clamp_unit(site_factor(a, b, zetas, s.h, s.gamma, s.eta, t, reading));
          const double mag = std::abs(z);
          if (mag == 0.0) {
            vanished = true;
            break;
          }
          log_mag += std::log(mag);
          phase += std::arg(z);
        }
        total = (vanished || log_mag < log_floor) ? Complex(0.0) : std::polar(std::exp(log_mag), phase);
      }
      f(a, b) = total;
      f(b, a) = std::conj(total);
    }
  }
  return DecoherenceMatrix(f);
}

}  // namespace spinbath
