#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>

#include "spinbath/error.hpp"
#include "spinbath/matrix.hpp"

namespace spinbath {

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm drops below this fraction of ||m||_F.
  double relative_tolerance = 1e-13;
  int max_sweeps = 100;
  /// Input must be Hermitian to this absolute level (scaled by max(1, ||m||_F)).
  double hermitian_tolerance = 1e-10;
};

template <std::size_t N>
struct HermitianEigen {
  std::array<double, N> values{};  ///< ascending
  SquareMatrix<N> vectors;         ///< column k is the eigenvector of values[k]
  int sweeps = 0;
};

namespace detail {

template <std::size_t N>
double off_diagonal_norm(const SquareMatrix<N>& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

}  // namespace detail

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Each rotation is J = D R D^H, where D strips the phase of a(p,q) and R is the
/// real symmetric Jacobi rotation for the resulting real 2x2 block. Pivots are
/// visited in fixed row-major order so the result is reproducible bit for bit.
template <std::size_t N>
HermitianEigen<N> hermitian_eigen(const SquareMatrix<N>& m, const JacobiOptions& opts = {}) {
  const double norm = m.frobenius_norm();
  if (!std::isfinite(norm)) throw Error(ErrorCode::invalid_argument, "matrix has non-finite entries");
  if (hermiticity_error(m) > opts.hermitian_tolerance * std::max(1.0, norm))
    throw Error(ErrorCode::not_hermitian, "eigensolver input is not Hermitian");

  // Work on the exactly Hermitian part built from the upper triangle.
  SquareMatrix<N> a;
  for (std::size_t i = 0; i < N; ++i) {
    a(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < N; ++j) {
      a(i, j) = m(i, j);
      a(j, i) = std::conj(m(i, j));
    }
  }
  auto v = SquareMatrix<N>::identity();

  const double target = opts.relative_tolerance * norm;
  int sweep = 0;
  while (detail::off_diagonal_norm(a) > target) {
    if (sweep == opts.max_sweeps)
      throw Error(ErrorCode::no_convergence,
                  "Jacobi iteration did not converge in " + std::to_string(opts.max_sweeps) + " sweeps");
    ++sweep;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;  // e^{i phi}

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex s_conj_phase = s * std::conj(phase);
        const Complex s_phase = s * phase;

        for (std::size_t k = 0; k < N; ++k) {
          if (k == p || k == q) continue;
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          const Complex new_kp = c * akp - s_conj_phase * akq;
          const Complex new_kq = s_phase * akp + c * akq;
          a(k, p) = new_kp;
          a(k, q) = new_kq;
          a(p, k) = std::conj(new_kp);
          a(q, k) = std::conj(new_kq);
        }
        a(p, p) = app - t * mag;
        a(q, q) = aqq + t * mag;
        a(p, q) = 0.0;
        a(q, p) = 0.0;

        for (std::size_t k = 0; k < N; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp - s_conj_phase * vkq;
          v(k, q) = s_phase * vkp + c * vkq;
        }
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen<N> out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const SquareMatrix<N>& m, const JacobiOptions& opts = {}) {
  return hermitian_eigen(m, opts).values;
}

}  // namespace spinbath
