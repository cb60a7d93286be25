#pragma once

#include <complex>
#include <cstddef>

#include "spinbath/bath.hpp"
#include "spinbath/qstate.hpp"

namespace spinbath {

/// Reduced qubit state: rho(alpha, beta) = C_alpha conj(C_beta) F(alpha, beta).
/// Throws PSDViolation when F is not a valid bath-overlap matrix.
inline DensityMatrix8 evolve_density(const PureState3Q& initial, const DecoherenceMatrix& f) {
  Matrix8 m;
  for (std::size_t a = 0; a < kBasisSize; ++a) {
    m(a, a) = std::norm(initial[a]);
    for (std::size_t b = a + 1; b < kBasisSize; ++b) {
      m(a, b) = initial[a] * std::conj(initial[b]) * f(a, b);
      m(b, a) = std::conj(m(a, b));
    }
  }
  return DensityMatrix8::from_matrix(m);
}

inline DensityMatrix8 evolve_density(const PureState3Q& initial, const BathParams& bath, double t) {
  return evolve_density(initial, decoherence_matrix(bath, t));
}

}  // namespace spinbath
