// mixed-spectra: spectral toolkit for mixed graphs built on the
// gamma-signless Laplacian. Verbs: spectrum, verify, linegraph, switch, batch.
//
// Exit codes: 0 all applicable checks hold, 1 inequality violation (finding),
// 2 exact-identity violation (bug), 3 input error.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixedspectra/graph_io.hpp"
#include "mixedspectra/line_graph.hpp"
#include "mixedspectra/matrices.hpp"
#include "mixedspectra/report_io.hpp"
#include "mixedspectra/spectra.hpp"
#include "mixedspectra/theorems.hpp"

namespace ms = mixedspectra;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitIdentityViolation = 2;
constexpr int kExitInputError = 3;

ms::Tolerances tolerances_from_env() {
  ms::Tolerances tol;
  if (const char* env = std::getenv("MIXED_SPECTRA_TOL")) {
    try {
      std::size_t used = 0;
      const double value = std::stod(env, &used);
      if (used != std::string(env).size() || value <= 0.0) throw std::invalid_argument(env);
      tol.assertion = value;
    } catch (const std::exception&) {
      throw std::invalid_argument("MIXED_SPECTRA_TOL must be a positive number, got '" +
                                  std::string(env) + "'");
    }
  }
  return tol;
}

/// stdout unless --out was given.
class OutputTarget {
public:
  explicit OutputTarget(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::invalid_argument(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::string format_eigenvalues(const std::vector<double>& values) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(6);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) os << ", ";
    os << values[i];
  }
  return os.str();
}

int exit_code_for(const std::vector<ms::TheoremReport>& reports) {
  bool identity_violation = false;
  bool finding = false;
  for (const auto& r : reports) {
    if (!r.applicable || r.holds || r.advisory) continue;
    if (ms::is_exact_identity_check(r.name)) {
      identity_violation = true;
    } else {
      finding = true;
    }
  }
  if (identity_violation) return kExitIdentityViolation;
  if (finding) return kExitFinding;
  return kExitOk;
}

struct SpectrumOptions {
  std::string path;
  std::string matrix = "Q";
  bool exact_charpoly = false;
  bool json = false;
  std::string out;
};

int run_spectrum(const SpectrumOptions& opt) {
  const ms::Tolerances tol = tolerances_from_env();
  const ms::MixedGraph x = ms::load_mixed_graph(opt.path);
  const ms::HermitianMatrixExact matrix =
      opt.matrix == "H" ? ms::build_H_gamma(x) : ms::build_Q(x);
  const ms::Spectrum spec = ms::eigenvalues(matrix, tol.convergence);

  double numeric_det = 1.0;
  for (double v : spec.values) numeric_det *= v;

  std::optional<ms::IntPolynomial> charpoly;
  if (opt.exact_charpoly) charpoly = ms::char_poly_exact(matrix);

  OutputTarget target(opt.out);
  std::ostream& os = target.stream();
  if (opt.json) {
    ordered_json j;
    j["file"] = opt.path;
    j["matrix"] = opt.matrix;
    j["n"] = x.vertex_count();
    j["m"] = x.edge_count();
    j["eigenvalues"] = spec.values;
    j["trace"] = matrix.matrix().trace().a.get_str();
    j["det_numeric"] = numeric_det;
    if (charpoly) {
      j["det_exact"] = ms::det_exact(matrix).get_str();
      std::vector<std::string> coeffs;
      for (const auto& c : charpoly->coeffs) coeffs.push_back(c.get_str());
      j["charpoly_coeffs"] = coeffs;
      j["charpoly"] = charpoly->str("x");
    }
    os << j.dump(2) << "\n";
  } else {
    os << "file: " << opt.path << "\n";
    os << "matrix: " << opt.matrix << "\n";
    os << "n: " << x.vertex_count() << "  m: " << x.edge_count() << "\n";
    os << "eigenvalues: " << format_eigenvalues(spec.values) << "\n";
    os << "trace: " << matrix.matrix().trace().a.get_str() << "\n";
    if (charpoly) {
      os << "det: " << ms::det_exact(matrix).get_str() << " (exact)\n";
      os << "charpoly: " << charpoly->str("λ") << "\n";
    } else {
      std::ostringstream det;
      det.setf(std::ios::fixed);
      det.precision(6);
      det << numeric_det;
      os << "det: " << det.str() << " (numeric)\n";
    }
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string path;
  bool json = false;
  std::string out;
  int exact_limit = ms::Tolerances{}.exact_size_limit;
};

int run_verify(const VerifyOptions& opt) {
  ms::Tolerances tol = tolerances_from_env();
  tol.exact_size_limit = opt.exact_limit > 0 ? opt.exact_limit : std::numeric_limits<int>::max();
  const ms::MixedGraph x = ms::load_mixed_graph(opt.path);
  const auto reports = ms::run_all(x, tol);
  OutputTarget target(opt.out);
  std::ostream& os = target.stream();
  if (opt.json) {
    ordered_json j;
    j["file"] = opt.path;
    j["reports"] = ordered_json::array();
    for (const auto& r : reports) j["reports"].push_back(ms::report_to_json(r));
    j["exit"] = exit_code_for(reports);
    os << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) os << ms::report_text_line(r) << "\n";
  }
  return exit_code_for(reports);
}

struct LineGraphOptions {
  std::string path;
  std::string emit_file;
};

int run_linegraph(const LineGraphOptions& opt) {
  const ms::MixedGraph x = ms::load_mixed_graph(opt.path);
  const ms::MixedGraph al = ms::algebraic_line_graph(x);
  std::ostringstream body;
  body << "# line graph of " << opt.path << ": vertex i = i-th edge in canonical order\n";
  const auto edges = x.canonical_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    body << "# " << i << " = " << edges[i].u << (edges[i].is_arc() ? " -> " : " -- ")
         << edges[i].v << "\n";
  }
  body << ms::emit_mixed_graph(al);
  if (opt.emit_file.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(opt.emit_file);
    if (!out) throw std::invalid_argument(opt.emit_file + ": cannot open for writing");
    out << body.str();
    std::cout << "wrote " << opt.emit_file << "\n";
  }
  return kExitOk;
}

struct SwitchOptions {
  std::string path;
  std::string gauge;
  std::string emit_file;
};

std::vector<int> parse_gauge(const std::string& text, int n) {
  std::vector<int> gauge(n, -1);
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw std::invalid_argument("gauge entry '" + item + "' is not of the form v:power");
    }
    int vertex = 0, power = 0;
    try {
      vertex = std::stoi(item.substr(0, colon));
      power = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("gauge entry '" + item + "' is not of the form v:power");
    }
    if (vertex < 0 || vertex >= n) {
      throw std::invalid_argument("gauge vertex " + std::to_string(vertex) + " out of range");
    }
    if (power < 0 || power > 2) {
      throw std::invalid_argument("gauge power must be 0, 1 or 2");
    }
    if (gauge[vertex] >= 0) {
      throw std::invalid_argument("gauge assigns vertex " + std::to_string(vertex) + " twice");
    }
    gauge[vertex] = power;
  }
  for (int v = 0; v < n; ++v) {
    if (gauge[v] < 0) {
      throw std::domain_error("incomplete gauge: vertex " + std::to_string(v) + " missing");
    }
  }
  return gauge;
}

int run_switch(const SwitchOptions& opt) {
  const ms::Tolerances tol = tolerances_from_env();
  const ms::MixedGraph x = ms::load_mixed_graph(opt.path);
  const std::vector<int> gauge = parse_gauge(opt.gauge, x.vertex_count());
  const ms::MixedGraph y = ms::apply_switching(x, gauge);

  const ms::Spectrum before = ms::eigenvalues(ms::build_Q(x), tol.convergence);
  const ms::Spectrum after = ms::eigenvalues(ms::build_Q(y), tol.convergence);
  double deviation = 0.0;
  for (std::size_t i = 0; i < before.values.size(); ++i) {
    deviation = std::max(deviation, std::abs(before.values[i] - after.values[i]));
  }
  std::ostringstream confirm;
  confirm.precision(3);
  confirm << "Q-cospectral check: max spectrum deviation " << deviation
          << (deviation <= 1e-9 ? " <= 1e-9 OK" : " EXCEEDS 1e-9");

  if (opt.emit_file.empty()) {
    std::cout << ms::emit_mixed_graph(y) << "# " << confirm.str() << "\n";
  } else {
    ms::save_mixed_graph(y, opt.emit_file);
    std::cout << "wrote " << opt.emit_file << "\n" << confirm.str() << "\n";
  }
  return deviation <= 1e-9 ? kExitOk : kExitFinding;
}

struct BatchOptions {
  int n_max = 8;
  long trials = 500;
  std::uint64_t seed = 1;
  double p_digon = 0.3;
  double p_arc = 0.3;
  bool json = false;
  std::string out;
  std::string witness_dir = "witnesses";
  int exact_limit = ms::Tolerances{}.exact_size_limit;
};

struct Tally {
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  bool has_slack = false;
};

int run_batch(const BatchOptions& opt) {
  if (opt.n_max < 1 || opt.trials < 0) {
    throw std::invalid_argument("batch: need --n-max >= 1 and --trials >= 0");
  }
  ms::Tolerances tol = tolerances_from_env();
  tol.exact_size_limit = opt.exact_limit > 0 ? opt.exact_limit : std::numeric_limits<int>::max();
  std::mt19937_64 master(opt.seed);

  std::vector<std::string> order;
  std::map<std::string, Tally> tallies;
  struct Failure {
    long trial;
    std::string name;
    std::string file;
    bool advisory;
  };
  std::vector<Failure> failures;
  std::vector<ms::TheoremReport> violating;

  for (long trial = 0; trial < opt.trials; ++trial) {
    const int n = 1 + static_cast<int>(master() % static_cast<std::uint64_t>(opt.n_max));
    const std::uint64_t graph_seed = master();
    const ms::MixedGraph x = ms::random_mixed_graph(n, opt.p_digon, opt.p_arc, graph_seed);
    for (const auto& r : ms::run_all(x, tol)) {
      if (!tallies.count(r.name)) order.push_back(r.name);
      Tally& t = tallies[r.name];
      if (!r.applicable) {
        ++t.inapplicable;
      } else if (r.holds) {
        ++t.pass;
      } else {
        ++t.fail;
        std::filesystem::create_directories(opt.witness_dir);
        const std::string file = opt.witness_dir + "/witness_" + r.name + "_trial" +
                                 std::to_string(trial) + ".mg";
        ms::save_mixed_graph(x, file);
        failures.push_back({trial, r.name, file, r.advisory});
        if (!r.advisory) violating.push_back(r);
      }
      if (r.applicable && r.slack) {
        t.min_slack = std::min(t.min_slack, *r.slack);
        t.has_slack = true;
      }
    }
  }

  OutputTarget target(opt.out);
  std::ostream& os = target.stream();
  const int exit_code = exit_code_for(violating);
  if (opt.json) {
    ordered_json j;
    j["params"] = {{"n_max", opt.n_max},
                   {"trials", opt.trials},
                   {"seed", opt.seed},
                   {"p_digon", opt.p_digon},
                   {"p_arc", opt.p_arc}};
    j["per_theorem"] = ordered_json::array();
    for (const auto& name : order) {
      const Tally& t = tallies[name];
      ordered_json row;
      row["name"] = name;
      row["pass"] = t.pass;
      row["fail"] = t.fail;
      row["inapplicable"] = t.inapplicable;
      row["min_slack"] = t.has_slack ? ordered_json(t.min_slack) : ordered_json(nullptr);
      j["per_theorem"].push_back(row);
    }
    j["failures"] = ordered_json::array();
    for (const auto& f : failures) {
      j["failures"].push_back(
          {{"trial", f.trial}, {"name", f.name}, {"file", f.file}, {"advisory", f.advisory}});
    }
    j["exit"] = exit_code;
    os << j.dump(2) << "\n";
  } else {
    os << "trials: " << opt.trials << "  n-max: " << opt.n_max << "  seed: " << opt.seed
       << "  p-digon: " << opt.p_digon << "  p-arc: " << opt.p_arc << "\n";
    os << std::left << std::setw(30) << "theorem" << std::right << std::setw(8) << "pass"
       << std::setw(8) << "fail" << std::setw(8) << "n/a" << std::setw(16) << "min-slack"
       << "\n";
    for (const auto& name : order) {
      const Tally& t = tallies[name];
      os << std::left << std::setw(30) << name << std::right << std::setw(8) << t.pass
         << std::setw(8) << t.fail << std::setw(8) << t.inapplicable;
      if (t.has_slack) {
        std::ostringstream slack;
        slack.precision(6);
        slack << t.min_slack;
        os << std::setw(16) << slack.str();
      } else {
        os << std::setw(16) << "-";
      }
      os << "\n";
    }
    for (const auto& f : failures) {
      os << (f.advisory ? "flagged" : "FAILED") << ": trial " << f.trial << " " << f.name
         << " witness " << f.file << "\n";
    }
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gamma-signless Laplacian spectra of mixed graphs"};
  app.require_subcommand(1);

  SpectrumOptions spectrum_opt;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues, trace and determinant");
  spectrum->add_option("file", spectrum_opt.path, "graph file (.mg)")->required();
  spectrum->add_option("--matrix", spectrum_opt.matrix, "H or Q (default Q)")
      ->check(CLI::IsMember({"H", "Q"}));
  spectrum->add_flag("--exact-charpoly", spectrum_opt.exact_charpoly,
                     "exact characteristic polynomial and determinant");
  spectrum->add_flag("--json", spectrum_opt.json, "JSON output");
  spectrum->add_option("--out", spectrum_opt.out, "write the report to a file");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "run every identity and bound checker");
  verify->add_option("file", verify_opt.path, "graph file (.mg)")->required();
  verify->add_flag("--json", verify_opt.json, "JSON output");
  verify->add_option("--out", verify_opt.out, "write the report to a file");
  verify->add_option("--exact-limit", verify_opt.exact_limit,
                     "dimension cap for exact charpoly checks, 0 = unlimited (default 64)");

  LineGraphOptions linegraph_opt;
  auto* linegraph = app.add_subcommand("linegraph", "emit the algebraic line mixed graph");
  linegraph->add_option("file", linegraph_opt.path, "graph file (.mg)")->required();
  linegraph->add_option("--emit-file", linegraph_opt.emit_file,
                        "write to a file instead of stdout");

  SwitchOptions switch_opt;
  auto* switch_cmd = app.add_subcommand("switch", "apply a switching gauge");
  switch_cmd->add_option("file", switch_opt.path, "graph file (.mg)")->required();
  switch_cmd->add_option("--gauge", switch_opt.gauge, "comma list v:power with power in 0..2")
      ->required();
  switch_cmd->add_option("--emit-file", switch_opt.emit_file,
                         "write to a file instead of stdout");

  BatchOptions batch_opt;
  auto* batch = app.add_subcommand("batch", "random verification campaign");
  batch->add_option("--n-max", batch_opt.n_max, "largest vertex count (default 8)");
  batch->add_option("--trials", batch_opt.trials, "number of random graphs (default 500)");
  batch->add_option("--seed", batch_opt.seed, "campaign seed (default 1)");
  batch->add_option("--p-digon", batch_opt.p_digon, "digon probability (default 0.3)");
  batch->add_option("--p-arc", batch_opt.p_arc, "arc probability (default 0.3)");
  batch->add_flag("--json", batch_opt.json, "JSON output");
  batch->add_option("--out", batch_opt.out, "write the summary to a file");
  batch->add_option("--witness-dir", batch_opt.witness_dir,
                    "directory for failure witnesses (default 'witnesses')");
  batch->add_option("--exact-limit", batch_opt.exact_limit,
                    "dimension cap for exact charpoly checks, 0 = unlimited (default 64)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  // Input-side failures use the specific logic_error subclasses; a bare
  // logic_error is reserved for broken exact identities inside the library.
  try {
    if (spectrum->parsed()) return run_spectrum(spectrum_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (linegraph->parsed()) return run_linegraph(linegraph_opt);
    if (switch_cmd->parsed()) return run_switch(switch_opt);
    if (batch->parsed()) return run_batch(batch_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::logic_error& e) {
    std::cerr << "internal identity violation: " << e.what() << "\n";
    return kExitIdentityViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
