#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

namespace spinbath {

using Complex = std::complex<double>;

/// Fixed-size dense complex matrix, row-major.
template <std::size_t N>
class SquareMatrix {
 public:
  static constexpr std::size_t dim = N;

  constexpr SquareMatrix() = default;

  static SquareMatrix identity() {
    SquareMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix filled(Complex value) {
    SquareMatrix m;
    m.data_.fill(value);
    return m;
  }

  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * N + col]; }
  const Complex& operator()(std::size_t row, std::size_t col) const { return data_[row * N + col]; }

  SquareMatrix adjoint() const {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  Complex trace() const {
    Complex sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) sum += (*this)(i, i);
    return sum;
  }

  double frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
  }

  SquareMatrix& operator+=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  SquareMatrix& operator-=(const SquareMatrix& rhs) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  SquareMatrix& operator*=(Complex s) {
    for (auto& z : data_) z *= s;
    return *this;
  }

  friend SquareMatrix operator+(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs += rhs; }
  friend SquareMatrix operator-(SquareMatrix lhs, const SquareMatrix& rhs) { return lhs -= rhs; }
  friend SquareMatrix operator*(Complex s, SquareMatrix m) { return m *= s; }
  friend SquareMatrix operator*(SquareMatrix m, Complex s) { return m *= s; }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    SquareMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = SquareMatrix<2>;
using Matrix8 = SquareMatrix<8>;

/// Largest |m(i,j) - conj(m(j,i))|.
template <std::size_t N>
double hermiticity_error(const SquareMatrix<N>& m) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

template <std::size_t N>
double max_abs_difference(const SquareMatrix<N>& a, const SquareMatrix<N>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

}  // namespace spinbath
