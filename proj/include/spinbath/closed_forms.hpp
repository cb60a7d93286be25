#pragma once

#include <cmath>
#include <complex>

#include "spinbath/matrix.hpp"
#include "spinbath/negativity.hpp"
#include "spinbath/qstate.hpp"

// Analytic negativity expressions for the canonical initial states. Factor
// arguments are total magnitudes |F| (already raised over the whole chain),
// labelled with one-based basis indices: f23 = |F(1,2)|, f25 = |F(1,4)|,
// f35 = |F(2,4)|, f18 = |F(0,7)|.

namespace spinbath {

/// GHZ: every cut gives |F_18| / 2.
inline double ghz_negativity_closed(double f18) { return 0.5 * f18; }

inline double w_negativity_closed(Bipartition part, double f23, double f25, double f35) {
  switch (part) {
    case Bipartition::a_vs_bc: return std::sqrt(f25 * f25 + f35 * f35) / 3.0;
    case Bipartition::b_vs_ca: return std::sqrt(f23 * f23 + f35 * f35) / 3.0;
    case Bipartition::c_vs_ab: return std::sqrt(f23 * f23 + f25 * f25) / 3.0;
  }
  return 0.0;
}

/// Transcribed closed-form W_xi expressions, evaluated term for term in
/// complex arithmetic (principal square roots), returning the real part.
///
/// These are reference transcriptions, not the canonical path: the generic
/// eigenvalue route is ground truth. The A and B cuts agree with it at t = 0;
/// the C-cut expression as transcribed does not (it contains unbalanced square
/// roots and returns values above 1/2), and `validate` reports the deviation.
inline double w_xi_negativity_closed(Bipartition part, const WXiParams& p, double f23, double f25, double f35) {
  using std::abs;
  using std::sqrt;
  constexpr Complex i{0.0, 1.0};
  const double x = static_cast<double>(p.xi);
  const Complex phase_down = std::exp(-i * (p.delta + p.phi));       // e^{-i(delta+phi)}
  const Complex phase_up2 = std::exp(2.0 * i * (p.delta + p.phi));   // e^{2i(delta+phi)}
  const double root_xx1 = sqrt(x * (x + 1.0));                       // sqrt(xi(xi+1))
  const double pow32 = std::pow(x + 1.0, 1.5);

  switch (part) {
    case Bipartition::a_vs_bc: {
      const Complex lead = root_xx1 * (2.0 * x + 1.0);
      const Complex inner =
          phase_down * sqrt(phase_up2 * x * (x + 1.0) * (x + 1.0) * (4.0 * x * (x + 1.0) * f23 * f23 + 1.0));
      const Complex bracket = -x * abs(lead - inner) - abs(lead - inner) - x * abs(lead + inner) -
                              abs(lead + inner) -
                              4.0 * root_xx1 * pow32 * abs(sqrt(Complex((x + 1.0) * f25 * f25 + x * f35 * f35))) +
                              4.0 * x * root_xx1 * pow32 + 2.0 * root_xx1 * pow32;
      const double prefactor = -1.0 / (8.0 * std::pow(x + 1.0, 2.5) * root_xx1);
      return (prefactor * bracket).real();
    }
    case Bipartition::b_vs_ca: {
      const Complex lead = sqrt(x * (x + 1.0) * (x + 2.0));
      const Complex inner =
          phase_down * sqrt(phase_up2 * x * (x + 1.0) * (x + 1.0) * (x * x + 4.0 * (x + 1.0) * f25 * f25));
      const Complex bracket =
          -x * abs(lead - inner) - abs(lead - inner) - x * abs(lead + inner) - abs(lead + inner) -
          4.0 * sqrt(x) * root_xx1 * pow32 * abs(sqrt(Complex((x + 1.0) * f23 * f23 + f35 * f35))) +
          2.0 * x * root_xx1 * pow32 + 4.0 * root_xx1 * pow32;
      const double prefactor = -1.0 / (8.0 * std::pow(x + 1.0, 2.5) * root_xx1);
      return (prefactor * bracket).real();
    }
    case Bipartition::c_vs_ab: {
      const Complex tail =
          sqrt(phase_up2 * x * (x + 1.0) * (x + 1.0) * (4.0 * x * f35 * f35 + (x - 2.0) * x + 1.0));
      const Complex first = -sqrt(Complex(x * (x + 1.0) * (x + 1.0)) - phase_down) * tail;
      const Complex second = -abs(sqrt(Complex(x * (x + 1.0) * (x + 1.0)) + phase_down) * tail);
      const double mixed = abs(sqrt(Complex(x * f23 * f23 + f25 * f25)));
      const Complex bracket =
          first + second - 4.0 * x * root_xx1 * mixed - 4.0 * root_xx1 * mixed + 2.0 * root_xx1 * pow32;
      const double prefactor = -1.0 / (8.0 * pow32 * root_xx1);
      return (prefactor * bracket).real();
    }
  }
  return 0.0;
}

}  // namespace spinbath
