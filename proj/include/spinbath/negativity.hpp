#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string_view>

#include "spinbath/eigen.hpp"
#include "spinbath/matrix.hpp"
#include "spinbath/qstate.hpp"

namespace spinbath {

/// One-vs-two cut of the three qubits.
enum class Bipartition { a_vs_bc, b_vs_ca, c_vs_ab };

inline constexpr std::array<Bipartition, 3> kAllBipartitions{Bipartition::a_vs_bc, Bipartition::b_vs_ca,
                                                             Bipartition::c_vs_ab};

inline constexpr std::string_view to_string(Bipartition part) {
  switch (part) {
    case Bipartition::a_vs_bc: return "A_BC";
    case Bipartition::b_vs_ca: return "B_CA";
    case Bipartition::c_vs_ab: return "C_AB";
  }
  return "?";
}

/// Bit of the basis index that belongs to the transposed qubit.
inline constexpr std::size_t transposed_bit(Bipartition part) {
  switch (part) {
    case Bipartition::a_vs_bc: return 0b100;
    case Bipartition::b_vs_ca: return 0b010;
    case Bipartition::c_vs_ab: return 0b001;
  }
  return 0;
}

/// Transposes the indices of a single qubit: out(i', j') = m(i, j) where i'
/// and j' exchange that qubit's bit.
inline Matrix8 partial_transpose(const Matrix8& m, Bipartition part) {
  const std::size_t mask = transposed_bit(part);
  Matrix8 out;
  for (std::size_t i = 0; i < kBasisSize; ++i)
    for (std::size_t j = 0; j < kBasisSize; ++j) {
      const std::size_t row = (i & ~mask) | (j & mask);
      const std::size_t col = (j & ~mask) | (i & mask);
      out(row, col) = m(i, j);
    }
  return out;
}

inline Matrix8 partial_transpose(const DensityMatrix8& rho, Bipartition part) {
  return partial_transpose(rho.matrix(), part);
}

/// Eigenvalues closer to zero than this are rounding noise.
inline constexpr double kNegativityFloor = 1e-12;

/// Sum of |lambda| over negative eigenvalues; noise-level eigenvalues count as zero.
inline double negativity_from_spectrum(std::span<const double> spectrum) {
  double sum = 0.0;
  for (double lambda : spectrum)
    if (lambda < -kNegativityFloor) sum -= lambda;
  return sum;
}

/// (||m||_1 - 1) / 2 for a Hermitian spectrum.
inline double trace_norm_negativity(std::span<const double> spectrum) {
  double norm = 0.0;
  for (double lambda : spectrum) norm += std::abs(lambda);
  return 0.5 * (norm - 1.0);
}

inline double negativity(const DensityMatrix8& rho, Bipartition part) {
  const auto spectrum = hermitian_eigenvalues(partial_transpose(rho, part));
  return negativity_from_spectrum(spectrum);
}

struct NegativityReport {
  double t = 0.0;
  double a_bc = 0.0;
  double b_ca = 0.0;
  double c_ab = 0.0;

  double operator[](Bipartition part) const {
    switch (part) {
      case Bipartition::a_vs_bc: return a_bc;
      case Bipartition::b_vs_ca: return b_ca;
      case Bipartition::c_vs_ab: return c_ab;
    }
    return 0.0;
  }
};

inline NegativityReport negativity_report(const DensityMatrix8& rho, double t) {
  return {t, negativity(rho, Bipartition::a_vs_bc), negativity(rho, Bipartition::b_vs_ca),
          negativity(rho, Bipartition::c_vs_ab)};
}

}  // namespace spinbath
