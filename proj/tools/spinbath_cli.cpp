// spinbath command-line front end: sweeps to CSV, figure presets, validation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spinbath/spinbath.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitNumerical = 4;

int exit_code_for(spinbath::ErrorCode code) {
  using spinbath::ErrorCode;
  switch (code) {
    case ErrorCode::io: return kExitIo;
    case ErrorCode::no_convergence:
    case ErrorCode::psd_violation: return kExitNumerical;
    default: return kExitUsage;
  }
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw spinbath::Error(spinbath::ErrorCode::invalid_argument, "cannot parse " + what + " from '" + text + "'");
  }
}

spinbath::Complex parse_pair(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2)
    throw spinbath::Error(spinbath::ErrorCode::invalid_argument, what + " must be 're,im', got '" + text + "'");
  return {parse_real(parts[0], what), parse_real(parts[1], what)};
}

/// "re,im;re,im;..." with exactly 8 pairs.
spinbath::Amplitudes parse_amps(const std::string& text) {
  const auto pairs = split(text, ';');
  if (pairs.size() != spinbath::kBasisSize)
    throw spinbath::Error(spinbath::ErrorCode::invalid_argument,
                          "--amps needs exactly 8 semicolon-separated pairs, got " + std::to_string(pairs.size()));
  spinbath::Amplitudes amps{};
  for (std::size_t i = 0; i < pairs.size(); ++i) amps[i] = parse_pair(pairs[i], "amplitude " + std::to_string(i));
  return amps;
}

/// One `h_k,gamma_re,gamma_im,eta_re,eta_im` line per site; '#' starts a comment.
std::vector<spinbath::SiteParams> read_bath_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spinbath::Error(spinbath::ErrorCode::io, "cannot open bath file " + path);
  std::vector<spinbath::SiteParams> sites;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto fields = split(line, ',');
    const std::string where = path + ":" + std::to_string(line_no);
    if (fields.size() != 5)
      throw spinbath::Error(spinbath::ErrorCode::invalid_argument, where + ": expected 5 comma-separated fields");
    sites.push_back({parse_real(fields[0], where), {parse_real(fields[1], where), parse_real(fields[2], where)},
                     {parse_real(fields[3], where), parse_real(fields[4], where)}});
  }
  return sites;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content << std::flush;
    if (!std::cout) throw spinbath::Error(spinbath::ErrorCode::io, "failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw spinbath::Error(spinbath::ErrorCode::io, "cannot write " + path);
}

struct SimulateArgs {
  std::string state = "ghz";
  double gA = 0.1, gB = 0.2, gC = 0.5;
  double h = 1.0;
  std::size_t n_spins = 300;
  std::string gamma_all;
  std::string eta_all;
  std::string bath_file;
  long xi = 2;
  double delta = 0.0, phi = 0.0;
  std::string amps;
  double t_max = 20.0;
  std::size_t t_steps = 400;
  std::string method = "generic";
  std::string out = "-";
};

spinbath::SweepSpec build_spec(const SimulateArgs& a) {
  using namespace spinbath;
  SweepSpec spec;
  static const std::map<std::string, StateKind> states{
      {"ghz", StateKind::ghz}, {"w", StateKind::w}, {"wxi", StateKind::wxi}, {"custom", StateKind::custom}};
  static const std::map<std::string, Method> methods{
      {"generic", Method::generic}, {"closed", Method::closed}, {"both", Method::both}};
  spec.state = states.at(a.state);
  spec.method = methods.at(a.method);
  if (spec.state == StateKind::wxi) spec.wxi = WXiParams{a.xi, a.delta, a.phi};
  if (spec.state == StateKind::custom) {
    if (a.amps.empty()) throw Error(ErrorCode::invalid_argument, "--state custom requires --amps");
    spec.custom_amps = parse_amps(a.amps);
  }
  const Couplings g{a.gA, a.gB, a.gC};
  if (!a.bath_file.empty()) {
    spec.bath = BathParams::per_site(g, read_bath_file(a.bath_file));
  } else {
    SiteParams site{a.h};
    if (!a.gamma_all.empty()) {
      site.gamma = parse_pair(a.gamma_all, "--gamma-all");
      site.eta = std::sqrt(std::max(0.0, 1.0 - std::norm(site.gamma)));
    }
    if (!a.eta_all.empty()) site.eta = parse_pair(a.eta_all, "--eta-all");
    spec.bath = BathParams::uniform(g, a.n_spins, site);
  }
  spec.t_max = a.t_max;
  spec.t_steps = a.t_steps;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement dynamics of three qubits dephasing through a spin-chain bath"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Sweep negativities over a time grid and write CSV");
  simulate->set_help_flag("--help", "Print this help message and exit");  // frees --h for the field
  simulate->add_option("--state", sim.state, "Initial state")
      ->check(CLI::IsMember({"ghz", "w", "wxi", "custom"}))
      ->capture_default_str();
  simulate->add_option("--gA", sim.gA, "Coupling of qubit A")->capture_default_str();
  simulate->add_option("--gB", sim.gB, "Coupling of qubit B")->capture_default_str();
  simulate->add_option("--gC", sim.gC, "Coupling of qubit C")->capture_default_str();
  simulate->add_option("--h", sim.h, "Transverse field on every bath site")->capture_default_str();
  simulate->add_option("--n-spins", sim.n_spins, "Number of bath spins")->capture_default_str();
  simulate->add_option("--gamma-all", sim.gamma_all, "Site amplitude gamma as 're,im' (eta defaults to the real complement)");
  simulate->add_option("--eta-all", sim.eta_all, "Site amplitude eta as 're,im'");
  auto* bath_file = simulate->add_option("--bath-file", sim.bath_file,
                                         "Per-site bath, lines of h_k,gamma_re,gamma_im,eta_re,eta_im");
  bath_file->excludes(simulate->get_option("--h"));
  simulate->add_option("--xi", sim.xi, "W_xi weight (natural number)")->capture_default_str();
  simulate->add_option("--delta", sim.delta, "W_xi phase delta")->capture_default_str();
  simulate->add_option("--phi", sim.phi, "W_xi phase phi")->capture_default_str();
  simulate->add_option("--amps", sim.amps, "Custom amplitudes 're,im;re,im;...' (8 pairs)");
  simulate->add_option("--t-max", sim.t_max, "Final time")->capture_default_str();
  simulate->add_option("--t-steps", sim.t_steps, "Number of grid points (>= 2)")->capture_default_str();
  simulate->add_option("--method", sim.method, "generic | closed | both")
      ->check(CLI::IsMember({"generic", "closed", "both"}))
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "Output CSV path ('-' for stdout)")->capture_default_str();

  std::string preset_name;
  std::string out_dir = ".";
  auto* preset = app.add_subcommand("preset", "Regenerate the CSV data behind a figure (fig1..fig10)");
  preset->add_option("name", preset_name, "Preset name")->required();
  preset->add_option("--out-dir", out_dir, "Output directory")->capture_default_str();

  bool verbose = false;
  std::string mixing = "zeta";
  auto* validate = app.add_subcommand("validate", "Run every oracle and closed-form comparison");
  validate->add_flag("--verbose", verbose, "Print per-check details");
  validate->add_option("--debug-mixing-symbol", mixing, "Mutation hook for the site-factor check")
      ->check(CLI::IsMember({"zeta", "gap"}))
      ->group("");

  double zg[3] = {0.1, 0.2, 0.5};
  auto* zeta = app.add_subcommand("zeta", "Print the 8-entry coupling table");
  zeta->add_option("--gA", zg[0])->capture_default_str();
  zeta->add_option("--gB", zg[1])->capture_default_str();
  zeta->add_option("--gC", zg[2])->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) {
      const auto spec = build_spec(sim);
      write_output(sim.out, spinbath::sweep_csv(spec));
      return kExitOk;
    }
    if (preset->parsed()) {
      for (const auto& path : spinbath::run_preset(preset_name, out_dir)) std::cerr << "wrote " << path.string() << '\n';
      return kExitOk;
    }
    if (validate->parsed()) {
      spinbath::ValidationOptions opts;
      opts.reading = mixing == "gap" ? spinbath::MixingReading::gap : spinbath::MixingReading::zeta;
      const auto checks = spinbath::run_validation(opts);
      spinbath::print_validation(std::cout, checks, verbose);
      return spinbath::all_fatal_passed(checks) ? kExitOk : kExitValidation;
    }
    if (zeta->parsed()) {
      const auto table = spinbath::zeta_table(zg[0], zg[1], zg[2]);
      std::cout << "alpha,zeta\n";
      for (std::size_t a = 0; a < spinbath::kBasisSize; ++a)
        std::cout << a << ',' << spinbath::format_double(table[a]) << '\n';
      return kExitOk;
    }
  } catch (const spinbath::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
