#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "spinbath/bath.hpp"
#include "spinbath/closed_forms.hpp"
#include "spinbath/error.hpp"
#include "spinbath/evolve.hpp"
#include "spinbath/negativity.hpp"
#include "spinbath/qstate.hpp"

namespace spinbath {

enum class StateKind { ghz, w, wxi, custom };
enum class Method { generic, closed, both };

/// One time sweep of the three negativities.
struct SweepSpec {
  StateKind state = StateKind::ghz;
  std::optional<Amplitudes> custom_amps;  ///< required for StateKind::custom
  std::optional<WXiParams> wxi;           ///< required for StateKind::wxi
  BathParams bath = BathParams::uniform({0.1, 0.2, 0.5}, 300, SiteParams{1.0});
  double t_max = 20.0;
  std::size_t t_steps = 400;
  Method method = Method::generic;
};

inline void validate(const SweepSpec& spec) {
  if (!(spec.t_max > 0.0) || !std::isfinite(spec.t_max))
    throw Error(ErrorCode::invalid_argument, "t-max must be a finite value > 0");
  if (spec.t_steps < 2) throw Error(ErrorCode::invalid_argument, "t-steps must be >= 2");
  if (spec.state == StateKind::wxi && !spec.wxi)
    throw Error(ErrorCode::invalid_argument, "state wxi requires xi/delta/phi");
  if (spec.state == StateKind::custom && !spec.custom_amps)
    throw Error(ErrorCode::invalid_argument, "state custom requires 8 amplitudes");
  if (spec.state == StateKind::custom && spec.method != Method::generic)
    throw Error(ErrorCode::invalid_argument, "closed-form negativity exists only for ghz, w and wxi");
}

inline PureState3Q initial_state(const SweepSpec& spec) {
  switch (spec.state) {
    case StateKind::ghz: return ghz_state();
    case StateKind::w: return w_state();
    case StateKind::wxi: return w_xi_state(spec.wxi.value());
    case StateKind::custom: return make_pure_state(spec.custom_amps.value());
  }
  throw Error(ErrorCode::invalid_argument, "unknown state selector");
}

/// t_j = j * t_max / (t_steps - 1)
inline double grid_time(double t_max, std::size_t steps, std::size_t j) {
  return static_cast<double>(j) * t_max / static_cast<double>(steps - 1);
}

/// Closed-form negativities for the canonical states, from the factor magnitudes in F.
inline NegativityReport closed_form_report(StateKind state, const std::optional<WXiParams>& wxi,
                                           const DecoherenceMatrix& f, double t) {
  const double f18 = std::abs(f(0, 7));
  const double f23 = std::abs(f(1, 2));
  const double f25 = std::abs(f(1, 4));
  const double f35 = std::abs(f(2, 4));
  NegativityReport r{t};
  switch (state) {
    case StateKind::ghz:
      r.a_bc = r.b_ca = r.c_ab = ghz_negativity_closed(f18);
      return r;
    case StateKind::w:
      r.a_bc = w_negativity_closed(Bipartition::a_vs_bc, f23, f25, f35);
      r.b_ca = w_negativity_closed(Bipartition::b_vs_ca, f23, f25, f35);
      r.c_ab = w_negativity_closed(Bipartition::c_vs_ab, f23, f25, f35);
      return r;
    case StateKind::wxi:
      r.a_bc = w_xi_negativity_closed(Bipartition::a_vs_bc, wxi.value(), f23, f25, f35);
      r.b_ca = w_xi_negativity_closed(Bipartition::b_vs_ca, wxi.value(), f23, f25, f35);
      r.c_ab = w_xi_negativity_closed(Bipartition::c_vs_ab, wxi.value(), f23, f25, f35);
      return r;
    case StateKind::custom: break;
  }
  throw Error(ErrorCode::invalid_argument, "no closed form for custom states");
}

/// 17 significant digits, '.' separator regardless of locale.
inline std::string format_double(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw Error(ErrorCode::io, "number formatting failed");
  return std::string(buf.data(), res.ptr);
}

struct SweepRow {
  NegativityReport generic;
  NegativityReport closed;
};

/// Evaluates every grid point. NoConvergence is rethrown with the offending time.
inline std::vector<SweepRow> evaluate_sweep(const SweepSpec& spec) {
  validate(spec);
  const auto initial = initial_state(spec);
  std::vector<SweepRow> rows(spec.t_steps);
  for (std::size_t j = 0; j < spec.t_steps; ++j) {
    const double t = grid_time(spec.t_max, spec.t_steps, j);
    try {
      const auto f = decoherence_matrix(spec.bath, t);
      if (spec.method != Method::closed) rows[j].generic = negativity_report(evolve_density(initial, f), t);
      if (spec.method != Method::generic) rows[j].closed = closed_form_report(spec.state, spec.wxi, f, t);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::no_convergence)
        throw Error(ErrorCode::no_convergence, "at t=" + format_double(t) + ": " + e.what());
      throw;
    }
  }
  return rows;
}

inline void write_report_columns(std::ostream& out, const NegativityReport& r) {
  out << ',' << format_double(r.a_bc) << ',' << format_double(r.b_ca) << ',' << format_double(r.c_ab);
}

/// CSV: header `t,N_A_BC,N_B_CA,N_C_AB` (plus `_closed` columns and a
/// `# max_abs_deviation=` footer for Method::both), '\n' line endings.
inline void run_sweep(const SweepSpec& spec, std::ostream& out) {
  const auto rows = evaluate_sweep(spec);
  out << "t,N_A_BC,N_B_CA,N_C_AB";
  if (spec.method == Method::both) out << ",N_A_BC_closed,N_B_CA_closed,N_C_AB_closed";
  out << '\n';
  double deviation = 0.0;
  for (const auto& row : rows) {
    const double t = spec.method == Method::closed ? row.closed.t : row.generic.t;
    out << format_double(t);
    if (spec.method == Method::closed) {
      write_report_columns(out, row.closed);
    } else {
      write_report_columns(out, row.generic);
    }
    if (spec.method == Method::both) {
      write_report_columns(out, row.closed);
      for (auto part : kAllBipartitions)
        deviation = std::max(deviation, std::abs(row.generic[part] - row.closed[part]));
    }
    out << '\n';
  }
  if (spec.method == Method::both) out << "# max_abs_deviation=" << format_double(deviation) << '\n';
  if (!out) throw Error(ErrorCode::io, "failed writing CSV output");
}

inline std::string sweep_csv(const SweepSpec& spec) {
  std::ostringstream out;
  run_sweep(spec, out);
  return out.str();
}

}  // namespace spinbath
