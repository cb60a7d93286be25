#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>

#include "spinbath/eigen.hpp"
#include "spinbath/error.hpp"
#include "spinbath/matrix.hpp"

namespace spinbath {

// Basis convention: qubit A is the most significant bit, so |abc> sits at
// index 4a + 2b + c (|000> -> 0, |111> -> 7). One-based labels used in the
// physics literature (C_1..C_8, F_18, ...) are index + 1.
inline constexpr std::size_t kBasisSize = 8;

struct QubitBits {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  friend constexpr bool operator==(const QubitBits&, const QubitBits&) = default;
};

constexpr std::size_t basis_index(unsigned a, unsigned b, unsigned c) { return 4u * a + 2u * b + c; }
constexpr std::size_t basis_index(QubitBits bits) { return basis_index(bits.a, bits.b, bits.c); }
constexpr QubitBits basis_bits(std::size_t index) {
  return {static_cast<unsigned>((index >> 2) & 1u), static_cast<unsigned>((index >> 1) & 1u),
          static_cast<unsigned>(index & 1u)};
}

using Amplitudes = std::array<Complex, kBasisSize>;

/// Renormalization is silent only when |sum|amp|^2 - 1| is below this.
inline constexpr double kRenormalizeTolerance = 1e-6;
inline constexpr double kZeroNormThreshold = 1e-12;

/// Normalized three-qubit pure state.
class PureState3Q {
 public:
  const Amplitudes& amps() const { return amps_; }
  Complex operator[](std::size_t index) const { return amps_[index]; }

  double norm_squared() const {
    double sum = 0.0;
    for (const auto& z : amps_) sum += std::norm(z);
    return sum;
  }

 private:
  explicit PureState3Q(const Amplitudes& amps) : amps_(amps) {}
  friend PureState3Q make_pure_state(const Amplitudes& amps);

  Amplitudes amps_{};
};

inline PureState3Q make_pure_state(const Amplitudes& amps) {
  double sum = 0.0;
  for (const auto& z : amps) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::invalid_argument, "amplitudes must be finite");
    sum += std::norm(z);
  }
  if (sum < kZeroNormThreshold) throw Error(ErrorCode::zero_norm, "state has (near) zero norm");
  if (std::abs(sum - 1.0) > kRenormalizeTolerance)
    throw Error(ErrorCode::norm_deviation, "sum of |amplitude|^2 is " + std::to_string(sum) + ", expected 1");
  if (sum == 1.0) return PureState3Q(amps);
  Amplitudes scaled = amps;
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& z : scaled) z *= scale;
  return PureState3Q(scaled);
}

/// (|000> + |111>) / sqrt(2)
inline PureState3Q ghz_state() {
  const double r = 1.0 / std::sqrt(2.0);
  return make_pure_state({r, 0, 0, 0, 0, 0, 0, r});
}

/// (|001> + |010> + |100>) / sqrt(3)
inline PureState3Q w_state() {
  const double r = 1.0 / std::sqrt(3.0);
  return make_pure_state({0, r, r, 0, r, 0, 0, 0});
}

struct WXiParams {
  long xi = 1;  ///< natural number >= 1
  double delta = 0.0;
  double phi = 0.0;
};

/// (e^{i delta} sqrt(xi+1)|001> + e^{i phi} sqrt(xi)|010> + |100>) / sqrt(2 xi + 2)
inline PureState3Q w_xi_state(const WXiParams& p) {
  if (p.xi < 1) throw Error(ErrorCode::invalid_xi, "xi must be a natural number >= 1, got " + std::to_string(p.xi));
  if (!std::isfinite(p.delta) || !std::isfinite(p.phi))
    throw Error(ErrorCode::invalid_argument, "W_xi phases must be finite");
  const double xi = static_cast<double>(p.xi);
  const double denom = std::sqrt(2.0 * xi + 2.0);
  Amplitudes amps{};
  amps[basis_index(0, 0, 1)] = std::polar(std::sqrt(xi + 1.0) / denom, p.delta);
  amps[basis_index(0, 1, 0)] = std::polar(std::sqrt(xi) / denom, p.phi);
  amps[basis_index(1, 0, 0)] = 1.0 / denom;
  return make_pure_state(amps);
}

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

/// Three-qubit density matrix: Hermitian, unit trace, positive semidefinite.
class DensityMatrix8 {
 public:
  /// Validates every invariant; throws PSDViolation if an eigenvalue is below -1e-10.
  static DensityMatrix8 from_matrix(const Matrix8& m) {
    if (hermiticity_error(m) > kHermitianTolerance)
      throw Error(ErrorCode::not_hermitian, "density matrix is not Hermitian");
    if (std::abs(m.trace() - 1.0) > kTraceTolerance)
      throw Error(ErrorCode::invalid_argument, "density matrix trace differs from 1");
    const auto values = hermitian_eigenvalues(m);
    if (values.front() < -kPsdTolerance)
      throw Error(ErrorCode::psd_violation,
                  "density matrix has eigenvalue " + std::to_string(values.front()));
    return DensityMatrix8(m);
  }

  const Matrix8& matrix() const { return m_; }
  Complex operator()(std::size_t row, std::size_t col) const { return m_(row, col); }

 private:
  explicit DensityMatrix8(const Matrix8& m) : m_(m) {}
  friend DensityMatrix8 density_from_pure(const PureState3Q& s);

  Matrix8 m_;
};

/// |s><s|
inline DensityMatrix8 density_from_pure(const PureState3Q& s) {
  Matrix8 m;
  for (std::size_t i = 0; i < kBasisSize; ++i) {
    m(i, i) = std::norm(s[i]);
    for (std::size_t j = i + 1; j < kBasisSize; ++j) {
      m(i, j) = s[i] * std::conj(s[j]);
      m(j, i) = std::conj(m(i, j));
    }
  }
  return DensityMatrix8(m);
}

}  // namespace spinbath
