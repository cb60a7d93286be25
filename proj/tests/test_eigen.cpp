#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "spinbath/eigen.hpp"

using namespace spinbath;

namespace {

Matrix8 random_hermitian(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> normal(0.0, scale);
  Matrix8 m;
  for (std::size_t i = 0; i < 8; ++i) {
    m(i, i) = normal(rng);
    for (std::size_t j = i + 1; j < 8; ++j) {
      m(i, j) = Complex(normal(rng), normal(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Matrix8 reconstruct(const HermitianEigen<8>& e) {
  Matrix8 d;
  for (std::size_t k = 0; k < 8; ++k) d(k, k) = e.values[k];
  return e.vectors * d * e.vectors.adjoint();
}

}  // namespace

TEST(eigen, identity) {
  for (double v : hermitian_eigenvalues(Matrix8::identity())) EXPECT_EQ(v, 1.0);
}

TEST(eigen, diagonal_is_sorted) {
  Matrix8 m;
  m(0, 0) = 3.0;
  m(1, 1) = -1.0;
  const auto v = hermitian_eigenvalues(m);
  EXPECT_EQ(v[0], -1.0);
  for (std::size_t k = 1; k < 7; ++k) EXPECT_EQ(v[k], 0.0);
  EXPECT_EQ(v[7], 3.0);
}

TEST(eigen, zero_matrix) {
  for (double v : hermitian_eigenvalues(Matrix8{})) EXPECT_EQ(v, 0.0);
}

TEST(eigen, ghz_partial_transpose_block) {
  // Off-diagonal pair (3,4) carrying F/2 with |F| = f.
  for (double f : {1.0, 0.7, 1e-3}) {
    const Complex factor = std::polar(f, 0.9);
    Matrix8 m;
    m(0, 0) = 0.5;
    m(7, 7) = 0.5;
    m(3, 4) = std::conj(factor) / 2.0;
    m(4, 3) = factor / 2.0;
    const auto v = hermitian_eigenvalues(m);
    const std::array<double, 8> expected{-f / 2, 0, 0, 0, 0, f / 2, 0.5, 0.5};
    auto sorted = expected;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(v[k], sorted[k], 1e-15);
  }
}

TEST(eigen, two_by_two_closed_form) {
  Matrix2 m;
  m(0, 0) = 0.3;
  m(1, 1) = -1.2;
  m(0, 1) = Complex(0.4, -0.5);
  m(1, 0) = std::conj(m(0, 1));
  const double mean = -0.45;
  const double r = std::hypot(0.75, std::abs(m(0, 1)));
  const auto v = hermitian_eigenvalues(m);
  EXPECT_NEAR(v[0], mean - r, 1e-15);
  EXPECT_NEAR(v[1], mean + r, 1e-15);
}

TEST(eigen, random_reconstruction_and_newton_identities) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = random_hermitian(rng, trial % 2 ? 1.0 : 1e-3);
    const auto e = hermitian_eigen(m);
    EXPECT_LE(max_abs_difference(reconstruct(e), m), 1e-10 * m.frobenius_norm());
    EXPECT_LE(max_abs_difference(e.vectors.adjoint() * e.vectors, Matrix8::identity()), 1e-13);
    EXPECT_TRUE(std::is_sorted(e.values.begin(), e.values.end()));

    double sum = 0.0, sum_sq = 0.0;
    for (double v : e.values) {
      sum += v;
      sum_sq += v * v;
    }
    EXPECT_NEAR(sum, m.trace().real(), 1e-10);
    EXPECT_NEAR(sum_sq, (m * m).trace().real(), 1e-10);
    EXPECT_LE(e.sweeps, 100);
  }
}

TEST(eigen, degenerate_spectrum) {
  // U diag(1,1,1,-2,-2,5,5,5) U^H for a random unitary built from another eigenproblem.
  std::mt19937_64 rng(5);
  const auto basis = hermitian_eigen(random_hermitian(rng)).vectors;
  Matrix8 d;
  const std::array<double, 8> values{1, 1, 1, -2, -2, 5, 5, 5};
  for (std::size_t k = 0; k < 8; ++k) d(k, k) = values[k];
  const auto v = hermitian_eigenvalues(basis * d * basis.adjoint());
  const std::array<double, 8> expected{-2, -2, 1, 1, 1, 5, 5, 5};
  for (std::size_t k = 0; k < 8; ++k) EXPECT_NEAR(v[k], expected[k], 1e-13);
}

TEST(eigen, deterministic) {
  std::mt19937_64 rng(9);
  const auto m = random_hermitian(rng);
  const auto a = hermitian_eigen(m);
  const auto b = hermitian_eigen(m);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.vectors, b.vectors);
}

TEST(eigen, rejects_non_hermitian) {
  Matrix8 m;
  m(0, 1) = 1.0;
  try {
    hermitian_eigenvalues(m);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_hermitian);
  }
}

TEST(eigen, sweep_budget_exhaustion_reports_no_convergence) {
  std::mt19937_64 rng(13);
  JacobiOptions opts;
  opts.max_sweeps = 1;
  try {
    hermitian_eigen(random_hermitian(rng), opts);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::no_convergence);
  }
}
