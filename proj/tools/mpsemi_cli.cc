// mpsemi_cli.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Command line front end.  Each subcommand reads JSON inputs and writes JSON
// or CSV to --out.  Exit codes: 0 success, 1 validation failure, 2 I/O or
// format error, 3 numerical or unsupported configuration.

#include <charconv>
#include <cmath>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mpsemi/evoprop.h"
#include "mpsemi/gausscalc.h"
#include "mpsemi/gridlab.h"
#include "mpsemi/sampling.h"
#include "mpsemi/serialize.h"
#include "mpsemi/sympcore.h"
#include "mpsemi/tfrzoo.h"

namespace {

using namespace mpsemi;

struct Options {
  double tol = kDefaultTol;
  std::uint64_t seed = 0;
  int grid_n = 256;
  double grid_h = 1.0 / 16.0;
  std::string out = "-";
  std::string format = "json";
};

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string &s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return kInf;
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ValidationError("ValidationError", "not a number: " + s);
  return x;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

// "a:b:step" or a comma separated list.
std::vector<double> parse_times(const std::string &s) {
  const auto range = split(s, ':');
  std::vector<double> times;
  if (range.size() == 3) {
    const double a = parse_double(range[0]);
    const double b = parse_double(range[1]);
    const double step = parse_double(range[2]);
    if (!(step > 0.0) || b < a) throw ValidationError("ValidationError", "bad time range");
    const long count = std::lround((b - a) / step);
    for (long k = 0; k <= count; ++k) times.push_back(a + k * step);
  } else {
    for (const auto &p : split(s, ',')) times.push_back(parse_double(p));
  }
  if (times.empty()) throw ValidationError("ValidationError", "empty time grid");
  return times;
}

GridSpec grid_spec(const Options &opt, int d) {
  GridSpec g;
  g.d = d;
  g.n = opt.grid_n;
  g.h = opt.grid_h;
  validate(g);
  return g;
}

void emit_json(const Options &opt, const Json &j) {
  if (opt.format != "json")
    throw ValidationError("ValidationError", "this command writes JSON only");
  write_text(opt.out, j.dump() + "\n");
}

const Json &unwrap(const Json &j, const char *key) {
  return j.is_object() && j.contains(key) ? j.at(key) : j;
}

CMat read_matrix(const std::string &path) {
  const CMat m = cmat_from_json(unwrap(read_json_file(path), "matrix"));
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0)
    throw IoError("FormatError", "expected a nonempty 2d x 2d matrix");
  return m;
}

int cmd_classify(const Options &opt, const std::string &file) {
  const CMat m = read_matrix(file);
  const PositivityReport rep = classify_positivity(m, opt.tol);
  Json out = to_json(rep);
  if (rep.cls != PositivityClass::kNotSymplectic) {
    const BlockSymplectic s(m, opt.tol);
    const double scale = std::max(1.0, m.norm());
    if (s.b().norm() <= opt.tol * scale || s.c().norm() <= opt.tol * scale)
      out["triangular"] = to_json(classify_block_triangular(s, opt.tol));
    try {
      out["conjugation"] = to_json(classify_conjugation_commuting(s, opt.tol));
    } catch (const ValidationError &) {
      out["conjugation"] = nullptr;
    }
  }
  emit_json(opt, out);
  return 0;
}

int cmd_polar(const Options &opt, const std::string &file) {
  const BlockSymplectic s(read_matrix(file), opt.tol);
  const PolarPair p = matrix_polar(s);
  Json out = to_json(p);
  out["atomic"] = to_json(atomic_decompose(p.z));
  emit_json(opt, out);
  return 0;
}

void write_grid(const Options &opt, const GridFn &f) {
  std::ostringstream os;
  if (opt.format == "bin") {
    write_grid_binary(os, f);
  } else if (opt.format == "csv") {
    write_grid_csv(os, f);
  } else {
    throw ValidationError("ValidationError", "grid output needs --format bin or csv");
  }
  write_text(opt.out, os.str());
}

struct GaussianArgs {
  std::string mode;
  std::string state;
  std::string state2;
  std::string word;
  std::vector<double> z;
  double tau = 0.0;
  bool grid_check = false;
};

int cmd_gaussian(const Options &opt, const GaussianArgs &a) {
  const GaussianState f = state_from_json(unwrap(read_json_file(a.state), "state"));
  if (a.mode == "sample") {
    write_grid(opt, sample(f, grid_spec(opt, f.d)));
    return 0;
  }
  if (a.mode == "apply") {
    if (a.word.empty()) throw ValidationError("ValidationError", "apply needs --word");
    const GeneratorWord w = word_from_json(read_json_file(a.word));
    const GaussianState g = apply_word(w, f);
    Json out{{"state", to_json(g)}, {"l2_ratio", l2_norm(g) / l2_norm(f)}};
    if (a.grid_check) {
      const GridSpec spec = grid_spec(opt, f.d);
      const GridFn approx = grid_apply_word(w, sample(f, spec));
      out["grid_error"] = relative_error(approx, sample(g, spec));
    }
    emit_json(opt, out);
    return 0;
  }
  if (a.mode == "wigner") {
    const GaussianState g = a.state2.empty()
                                ? f
                                : state_from_json(unwrap(read_json_file(a.state2), "state"));
    const GaussianState w = wigner_gaussian(f, g);
    Json out{{"state", to_json(w)}};
    if (a.grid_check) {
      if (f.d != 1) throw ValidationError("DimensionError", "grid Wigner needs d = 1");
      const GridSpec spec = grid_spec(opt, 1);
      const GridFn approx = grid_wigner(sample(f, spec), sample(g, spec));
      out["grid_error"] = relative_error(approx, sample(w, grid_spec(opt, 2)));
    }
    emit_json(opt, out);
    return 0;
  }
  if (a.mode == "intertwine") {
    if (a.word.empty()) throw ValidationError("ValidationError", "intertwine needs --word");
    const GeneratorWord w = word_from_json(read_json_file(a.word));
    RVec z = RVec::Zero(2 * f.d);
    if (!a.z.empty()) {
      if (static_cast<int>(a.z.size()) != 2 * f.d)
        throw ValidationError("DimensionError", "--z needs 2d entries");
      for (int k = 0; k < 2 * f.d; ++k) z(k) = a.z[k];
    }
    const IntertwiningResult r = check_intertwining(w, z, a.tau, GaussianSum{f});
    emit_json(opt, Json{{"parameter_residual", r.parameter_residual},
                        {"sample_residual", r.sample_residual},
                        {"residual", r.residual()}});
    return 0;
  }
  throw ValidationError("ValidationError", "unknown gaussian mode " + a.mode);
}

int cmd_tfr(const Options &opt, const std::string &mode, const std::string &file) {
  const TfrSpec s = tfr_spec_from_json(read_json_file(file), opt.tol);
  if (mode == "classify") {
    emit_json(opt, to_json(classify(s, opt.tol)));
    return 0;
  }
  if (mode == "kernel") {
    emit_json(opt, to_json(cohen_kernel(s, opt.tol)));
    return 0;
  }
  if (mode == "windows") {
    const SpectrogramReport sp = classify_spectrogram(s, opt.tol);
    const PureSpectrogramReport pure = classify_pure_spectrogram(s, opt.tol);
    emit_json(opt, Json{{"spectrogram", to_json(sp)}, {"pure_spectrogram", to_json(pure)}});
    if (!sp.ok) {
      std::cerr << "error: " << (sp.failed.empty() ? "NotSpectrogram" : sp.failed.front())
                << "\n";
      return 1;
    }
    return 0;
  }
  throw ValidationError("ValidationError", "unknown tfr mode " + mode);
}

struct EvolveArgs {
  std::string hamiltonian;
  std::string example;
  int d = 1;
  int d1 = 1;
  int d2 = 1;
  double alpha = 1.0;
  double beta = 1.0;
  double theta = 1.0;
  double mu = 0.0;
  std::string t_grid = "0:1:0.25";
  std::string probe;
  std::string bounds = "2,2,0";
  bool grid_check = false;
};

int cmd_evolve(const Options &opt, const EvolveArgs &a) {
  QuadraticHamiltonian h;
  if (!a.example.empty()) {
    if (a.example == "heat") {
      h = heat_hamiltonian(a.d, a.alpha, a.beta);
    } else if (a.example == "hermite") {
      h = hermite_hamiltonian(a.d, a.theta, a.mu);
    } else if (a.example == "harmonic") {
      h = harmonic_hamiltonian(a.d1, a.d2);
    } else {
      throw ValidationError("ValidationError", "unknown example " + a.example);
    }
  } else if (!a.hamiltonian.empty()) {
    h = hamiltonian_from_json(read_json_file(a.hamiltonian));
  } else {
    throw ValidationError("ValidationError", "evolve needs a Hamiltonian file or --example");
  }
  const auto pqs = split(a.bounds, ',');
  if (pqs.size() != 3) throw ValidationError("ValidationError", "--bounds needs p,q,s");
  const double p = parse_double(pqs[0]);
  const double q = parse_double(pqs[1]);
  const double s = parse_double(pqs[2]);
  const GaussianState probe =
      a.probe.empty() ? standard_gaussian(h.d)
                      : state_from_json(unwrap(read_json_file(a.probe), "state"));
  if (probe.d != h.d) throw ValidationError("DimensionError", "probe dimension differs");
  GridSpec grid;
  const bool use_grid = a.grid_check && h.d == 1;
  if (use_grid) grid = grid_spec(opt, 1);
  const auto rows =
      trajectory(h, parse_times(a.t_grid), probe, p, q, s, use_grid ? &grid : nullptr);

  if (opt.format == "json") {
    Json out = Json::array();
    for (const auto &r : rows) {
      out.push_back(Json{{"t", r.t},
                         {"positivity", r.positivity},
                         {"min_eigenvalue", r.min_eigenvalue},
                         {"imag_norm", r.imag_norm},
                         {"polar_residual", r.polar_residual},
                         {"sigma_max_u", r.sigma_max_u},
                         {"u_bound", r.u_bound},
                         {"z_bound", r.z_bound},
                         {"total_bound", r.total_bound},
                         {"bound_available", r.bound_available},
                         {"l2_ratio", r.l2_ratio},
                         {"grid_ratio", r.grid_ratio},
                         {"S", to_json(r.s)}});
    }
    write_text(opt.out, out.dump() + "\n");
    return 0;
  }
  if (opt.format != "csv") throw ValidationError("ValidationError", "evolve writes csv or json");
  const int n = 2 * h.d;
  std::ostringstream os;
  os << "t,positivity,min_eigenvalue,imag_norm,polar_residual,sigma_max_u,u_bound,"
        "z_bound,total_bound,l2_ratio,grid_ratio";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) os << ",S" << i << j << "_re,S" << i << j << "_im";
  os << "\n";
  for (const auto &r : rows) {
    os << format_double(r.t) << ',' << r.positivity << ',' << format_double(r.min_eigenvalue)
       << ',' << format_double(r.imag_norm) << ',' << format_double(r.polar_residual) << ','
       << format_double(r.sigma_max_u) << ',' << format_double(r.u_bound) << ','
       << format_double(r.z_bound) << ',' << format_double(r.total_bound) << ','
       << format_double(r.l2_ratio) << ',' << format_double(r.grid_ratio);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        os << ',' << format_double(r.s(i, j).real()) << ',' << format_double(r.s(i, j).imag());
    os << "\n";
  }
  write_text(opt.out, os.str());
  return 0;
}

int cmd_random(const Options &opt, const std::string &kind, int d, int length) {
  Rng rng(opt.seed);
  if (kind == "word") {
    emit_json(opt, to_json(random_positive_word(rng, d, length)));
  } else if (kind == "real-word") {
    emit_json(opt, to_json(random_real_word(rng, d, length)));
  } else if (kind == "state") {
    emit_json(opt, to_json(random_state(rng, d)));
  } else {
    throw ValidationError("ValidationError", "unknown random kind " + kind);
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"mpsemi: complex metaplectic semigroup calculus"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "relative tolerance")->capture_default_str();
  app.add_option("--seed", opt.seed, "random seed")->capture_default_str();
  app.add_option("--grid-n", opt.grid_n, "grid points per axis")->capture_default_str();
  app.add_option("--grid-h", opt.grid_h, "grid spacing")->capture_default_str();
  app.add_option("--out", opt.out, "output file or -")->capture_default_str();
  app.add_option("--format", opt.format, "json, csv or bin")
      ->check(CLI::IsMember({"json", "csv", "bin"}))
      ->capture_default_str();

  std::string file;
  auto *classify_cmd = app.add_subcommand("classify", "positivity class of a matrix");
  classify_cmd->add_option("matrix", file, "matrix JSON file")->required();

  auto *polar_cmd = app.add_subcommand("polar", "polar and atomic decomposition");
  polar_cmd->add_option("matrix", file, "matrix JSON file")->required();

  GaussianArgs ga;
  auto *gauss_cmd = app.add_subcommand("gaussian", "closed-form action on Gaussians");
  gauss_cmd->add_option("mode", ga.mode, "apply, wigner, intertwine or sample")
      ->required()
      ->check(CLI::IsMember({"apply", "wigner", "intertwine", "sample"}));
  gauss_cmd->add_option("state", ga.state, "state JSON file")->required();
  gauss_cmd->add_option("--word", ga.word, "word JSON file");
  gauss_cmd->add_option("--state2", ga.state2, "second state for wigner");
  gauss_cmd->add_option("--z", ga.z, "phase-space shift")->delimiter(',');
  gauss_cmd->add_option("--tau", ga.tau, "central phase");
  gauss_cmd->add_flag("--grid-check", ga.grid_check, "compare against the grid oracle");

  std::string tfr_mode;
  auto *tfr_cmd = app.add_subcommand("tfr", "metaplectic time-frequency representations");
  tfr_cmd->add_option("mode", tfr_mode, "classify, kernel or windows")
      ->required()
      ->check(CLI::IsMember({"classify", "kernel", "windows"}));
  tfr_cmd->add_option("spec", file, "spec JSON file")->required();

  EvolveArgs ea;
  auto *evolve_cmd = app.add_subcommand("evolve", "propagator trajectory");
  evolve_cmd->add_option("hamiltonian", ea.hamiltonian, "Hamiltonian JSON file");
  evolve_cmd->add_option("--example", ea.example, "heat, hermite or harmonic")
      ->check(CLI::IsMember({"heat", "hermite", "harmonic"}));
  evolve_cmd->add_option("--d", ea.d, "dimension for heat and hermite");
  evolve_cmd->add_option("--d1", ea.d1, "dissipative coordinates for harmonic");
  evolve_cmd->add_option("--d2", ea.d2, "Schroedinger coordinates for harmonic");
  evolve_cmd->add_option("--alpha", ea.alpha, "heat alpha");
  evolve_cmd->add_option("--beta", ea.beta, "heat beta");
  evolve_cmd->add_option("--theta", ea.theta, "hermite damping");
  evolve_cmd->add_option("--mu", ea.mu, "hermite rotation rate");
  auto *tgrid = evolve_cmd->add_option("--t-grid", ea.t_grid, "a:b:step or a list");
  evolve_cmd->add_option("--t", ea.t_grid, "single time")->excludes(tgrid);
  evolve_cmd->add_option("--probe", ea.probe, "probe state JSON file");
  evolve_cmd->add_option("--bounds", ea.bounds, "p,q,s")->capture_default_str();
  evolve_cmd->add_flag("--grid-check", ea.grid_check, "measured grid ratios (d = 1)");

  std::string random_kind = "word";
  int random_d = 1;
  int random_length = 4;
  auto *random_cmd = app.add_subcommand("random", "seeded random inputs");
  random_cmd->add_option("kind", random_kind, "word, real-word or state")
      ->check(CLI::IsMember({"word", "real-word", "state"}));
  random_cmd->add_option("--d", random_d, "dimension");
  random_cmd->add_option("--length", random_length, "word length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*classify_cmd) return cmd_classify(opt, file);
    if (*polar_cmd) return cmd_polar(opt, file);
    if (*gauss_cmd) return cmd_gaussian(opt, ga);
    if (*tfr_cmd) return cmd_tfr(opt, tfr_mode, file);
    if (*evolve_cmd) return cmd_evolve(opt, ea);
    if (*random_cmd) return cmd_random(opt, random_kind, random_d, random_length);
  } catch (const ValidationError &e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 1;
  } catch (const IoError &e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const NumericalError &e) {
    std::cerr << "error: " << e.code() << ": " << e.what() << "\n";
    return 3;
  }
  return 1;
}
