#pragma once

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinbath/error.hpp"
#include "spinbath/sweep.hpp"

namespace spinbath {

struct CsvDocument {
  std::string filename;
  std::string content;
};

// Shared figure configuration: g = (0.1, 0.2, 0.5), gamma = eta = 1/sqrt(2).
inline constexpr Couplings kFigureCouplings{0.1, 0.2, 0.5};
inline constexpr double kPresetTMax = 20.0;
inline constexpr std::size_t kPresetLineSteps = 400;
inline constexpr long kSurfaceXiMax = 60;
inline constexpr std::size_t kSurfaceTSteps = 60;

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig1", "fig2", "fig3", "fig4", "fig5",
                                              "fig6", "fig7", "fig8", "fig9", "fig10"};
  return names;
}

namespace detail {

inline std::string grid_comment(std::string_view what, const SweepSpec& spec) {
  std::ostringstream out;
  out << "# " << what << "; grid: " << spec.t_steps << " uniform points over [0, " << format_double(spec.t_max)
      << "]\n";
  return out.str();
}

inline SweepSpec line_spec(StateKind state, std::size_t n_spins, double h) {
  SweepSpec spec;
  spec.state = state;
  spec.bath = BathParams::uniform(kFigureCouplings, n_spins, SiteParams{h});
  spec.t_max = kPresetTMax;
  spec.t_steps = kPresetLineSteps;
  return spec;
}

inline CsvDocument line_document(std::string filename, std::string_view what, const SweepSpec& spec) {
  return {std::move(filename), grid_comment(what, spec) + sweep_csv(spec)};
}

inline CsvDocument wxi_document(std::string filename, long xi, double phase) {
  auto spec = line_spec(StateKind::wxi, 300, 1.0);
  spec.wxi = WXiParams{xi, phase, phase};
  const std::string what = "W_xi xi=" + std::to_string(xi) + " delta=phi=" + format_double(phase) +
                           " N=300 h=1 g=(0.1,0.2,0.5)";
  return line_document(std::move(filename), what, spec);
}

/// (xi, t) surface for one cut, xi = 1..kSurfaceXiMax, delta = phi = pi/4.
inline CsvDocument surface_document(std::string filename, Bipartition part) {
  constexpr double phase = std::numbers::pi / 4.0;
  const auto bath = BathParams::uniform(kFigureCouplings, 300, SiteParams{1.0});
  std::ostringstream out;
  out << "# W_xi surface delta=phi=" << format_double(phase) << " N=300 h=1 g=(0.1,0.2,0.5); grid: xi=1.."
      << kSurfaceXiMax << " x " << kSurfaceTSteps << " uniform t points over [0, " << format_double(kPresetTMax)
      << "]\n";
  out << "xi,t,N_" << to_string(part) << '\n';
  // F does not depend on xi, so compute each time slice once.
  std::vector<DecoherenceMatrix> factors;
  factors.reserve(kSurfaceTSteps);
  for (std::size_t j = 0; j < kSurfaceTSteps; ++j)
    factors.push_back(decoherence_matrix(bath, grid_time(kPresetTMax, kSurfaceTSteps, j)));
  for (long xi = 1; xi <= kSurfaceXiMax; ++xi) {
    const auto state = w_xi_state({xi, phase, phase});
    for (std::size_t j = 0; j < kSurfaceTSteps; ++j) {
      const double t = grid_time(kPresetTMax, kSurfaceTSteps, j);
      out << xi << ',' << format_double(t) << ','
          << format_double(negativity(evolve_density(state, factors[j]), part)) << '\n';
    }
  }
  return {std::move(filename), out.str()};
}

}  // namespace detail

/// CSV documents for one figure preset, one per plotted curve or surface.
inline std::vector<CsvDocument> preset_documents(std::string_view name) {
  using detail::line_document;
  using detail::line_spec;
  if (name == "fig1") {
    std::vector<CsvDocument> docs;
    for (std::size_t n : {100u, 300u, 500u})
      docs.push_back(line_document("fig1_N" + std::to_string(n) + ".csv",
                                   "GHZ N=" + std::to_string(n) + " h=1 g=(0.1,0.2,0.5)",
                                   line_spec(StateKind::ghz, n, 1.0)));
    return docs;
  }
  if (name == "fig2") {
    std::vector<CsvDocument> docs;
    for (double h : {0.5, 3.0, 5.0}) {
      const std::string label = format_double(h);
      docs.push_back(line_document("fig2_h" + label + ".csv", "GHZ N=300 h=" + label + " g=(0.1,0.2,0.5)",
                                   line_spec(StateKind::ghz, 300, h)));
    }
    return docs;
  }
  if (name == "fig3") return {line_document("fig3_W.csv", "W N=300 h=1 g=(0.1,0.2,0.5)", line_spec(StateKind::w, 300, 1.0))};
  if (name == "fig4") return {detail::wxi_document("fig4_xi2.csv", 2, 0.0)};
  if (name == "fig5") return {detail::wxi_document("fig5_xi20.csv", 20, 0.0)};
  if (name == "fig6") return {detail::wxi_document("fig6_xi200.csv", 200, std::numbers::pi / 4.0)};
  if (name == "fig7") return {detail::wxi_document("fig7_xi2000.csv", 2000, std::numbers::pi / 4.0)};
  if (name == "fig8") return {detail::surface_document("fig8_surface.csv", Bipartition::a_vs_bc)};
  if (name == "fig9") return {detail::surface_document("fig9_surface.csv", Bipartition::b_vs_ca)};
  if (name == "fig10") return {detail::surface_document("fig10_surface.csv", Bipartition::c_vs_ab)};
  throw Error(ErrorCode::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

/// Writes every document of a preset into `dir`; returns the paths written.
inline std::vector<std::filesystem::path> run_preset(std::string_view name, const std::filesystem::path& dir) {
  const auto docs = preset_documents(name);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  for (const auto& doc : docs) {
    const auto path = dir / doc.filename;
    std::ofstream out(path, std::ios::binary);
    out << doc.content;
    out.close();
    if (!out) throw Error(ErrorCode::io, "cannot write " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace spinbath
