#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/error.hpp"
#include "spinbath/matrix.hpp"
#include "spinbath/qstate.hpp"

// Brute-force ground truth. Nothing here calls the closed-form site factor or
// the decoherence-matrix builder; the only shared input is the coupling table.

namespace spinbath::oracle {

using SpinOperator2 = Matrix2;

inline SpinOperator2 sigma_x() {
  SpinOperator2 m;
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline SpinOperator2 sigma_z() {
  SpinOperator2 m;
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

/// e^{-iHt} for a Hermitian 2x2 H, from its analytic eigendecomposition.
///
/// H - mean*I = r [[cos th, sin th e^{i ph}], [sin th e^{-i ph}, -cos th]] has
/// eigenvectors (cos th/2, e^{-i ph} sin th/2) for mean + r and
/// (-e^{i ph} sin th/2, cos th/2) for mean - r.
inline Matrix2 propagator(const SpinOperator2& h, double t) {
  const double mean = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double half_split = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const Complex off = h(0, 1);
  const double r = std::hypot(half_split, std::abs(off));
  const double theta = std::atan2(std::abs(off), half_split);
  const double ph = std::arg(off);
  const Complex e_ph = std::polar(1.0, ph);

  const Complex up0 = std::cos(0.5 * theta);
  const Complex up1 = std::conj(e_ph) * std::sin(0.5 * theta);
  const Complex dn0 = -e_ph * std::sin(0.5 * theta);
  const Complex dn1 = std::cos(0.5 * theta);

  const Complex w_up = std::polar(1.0, -(mean + r) * t);
  const Complex w_dn = std::polar(1.0, -(mean - r) * t);

  Matrix2 u;
  u(0, 0) = w_up * up0 * std::conj(up0) + w_dn * dn0 * std::conj(dn0);
  u(0, 1) = w_up * up0 * std::conj(up1) + w_dn * dn0 * std::conj(dn1);
  u(1, 0) = w_up * up1 * std::conj(up0) + w_dn * dn1 * std::conj(dn0);
  u(1, 1) = w_up * up1 * std::conj(up1) + w_dn * dn1 * std::conj(dn1);
  return u;
}

/// Per-site conditional Hamiltonian field * sigma_z + h * sigma_x.
inline SpinOperator2 conditional_hamiltonian(double field, double hk) {
  return field * sigma_z() + hk * sigma_x();
}

inline Complex apply_and_overlap(const Matrix2& left, const Matrix2& right, Complex gamma, Complex eta) {
  // <psi| left right |psi>
  const Matrix2 m = left * right;
  const Complex v0 = m(0, 0) * gamma + m(0, 1) * eta;
  const Complex v1 = m(1, 0) * gamma + m(1, 1) * eta;
  return std::conj(gamma) * v0 + std::conj(eta) * v1;
}

/// <psi| e^{+i H_beta t} e^{-i H_alpha t} |psi> by explicit 2x2 exponentials.
inline Complex site_factor_oracle(std::size_t alpha, std::size_t beta, const CouplingSpectrum& zetas, double hk,
                                  Complex gamma, Complex eta, double t) {
  const Matrix2 u_alpha = propagator(conditional_hamiltonian(zetas[alpha], hk), t);
  const Matrix2 u_beta = propagator(conditional_hamiltonian(zetas[beta], hk), t);
  return apply_and_overlap(u_beta.adjoint(), u_alpha, gamma, eta);
}

inline constexpr std::size_t kMaxOracleSpins = 8;

/// S^z eigenvalue of a qubit in basis state `bit` (|0> is spin up).
inline double qubit_sz(unsigned bit) { return bit ? -0.5 : 0.5; }

/// Reduced qubit state from exact evolution of the full qubit + bath vector.
///
/// The joint Hamiltonian is block diagonal in the qubit label mu; inside a
/// block every bath spin sees (sum_X S^z_X g^X) sigma_z + h_k sigma_x, so the
/// block propagator is a tensor product of 2x2 propagators. The 2^(3+N)
/// joint vector is formed explicitly and the bath is traced out entry by entry.
inline DensityMatrix8 joint_evolution_oracle(const PureState3Q& initial, const BathParams& p, double t) {
  const std::size_t n = p.n_spins();
  if (n > kMaxOracleSpins)
    throw Error(ErrorCode::bath_too_large,
                "joint oracle supports at most " + std::to_string(kMaxOracleSpins) + " bath spins");
  const std::size_t bath_dim = std::size_t{1} << n;
  const auto& g = p.couplings();

  std::vector<Complex> joint(kBasisSize * bath_dim);
  for (std::size_t mu = 0; mu < kBasisSize; ++mu) {
    const auto bits = basis_bits(mu);
    const double field = qubit_sz(bits.a) * g.a + qubit_sz(bits.b) * g.b + qubit_sz(bits.c) * g.c;

    // Evolved single-site states for this block.
    std::vector<std::array<Complex, 2>> local(n);
    for (std::size_t k = 0; k < n; ++k) {
      const auto& s = p.site(k);
      const Matrix2 u = propagator(conditional_hamiltonian(field, s.h), t);
      local[k] = {u(0, 0) * s.gamma + u(0, 1) * s.eta, u(1, 0) * s.gamma + u(1, 1) * s.eta};
    }
    // Kronecker product; site 0 is the most significant bath bit.
    for (std::size_t e = 0; e < bath_dim; ++e) {
      Complex amp = initial[mu];
      for (std::size_t k = 0; k < n; ++k) amp *= local[k][(e >> (n - 1 - k)) & 1u];
      joint[mu * bath_dim + e] = amp;
    }
  }

  Matrix8 rho;
  for (std::size_t a = 0; a < kBasisSize; ++a)
    for (std::size_t b = 0; b < kBasisSize; ++b) {
      Complex sum = 0.0;
      for (std::size_t e = 0; e < bath_dim; ++e) sum += joint[a * bath_dim + e] * std::conj(joint[b * bath_dim + e]);
      rho(a, b) = sum;
    }
  return DensityMatrix8::from_matrix(rho);
}

}  // namespace spinbath::oracle
