#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>

#include <CLI11.hpp>
#include <json.hpp>

#include "ptqm/brachistochrone.hpp"
#include "ptqm/error.hpp"
#include "ptqm/hamiltonian.hpp"
#include "ptqm/inner_product.hpp"
#include "ptqm/selftest.hpp"
#include "ptqm/symmetry_ops.hpp"

namespace ptqm::cli {

namespace {

constexpr double kOperatorResidualLimit = 1e-10;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

nlohmann::json to_json(const Cell& cell) {
  return std::visit([](const auto& v) { return nlohmann::json(v); }, cell);
}

std::string to_csv(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return csv_escape(std::get<std::string>(cell));
}

void add_matrix(const std::string& name, const CMat2& m, Table& t, std::vector<Cell>& row) {
  const std::pair<const char*, CScalar> entries[] = {
      {"00", m.m00}, {"01", m.m01}, {"10", m.m10}, {"11", m.m11}};
  for (const auto& [idx, z] : entries) {
    t.header.push_back(name + idx + "_re");
    row.emplace_back(z.real());
    t.header.push_back(name + idx + "_im");
    row.emplace_back(z.imag());
  }
}

// Maps library errors onto the exit-code contract.
template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return kExitDomain;
  }
}

double angle_in(double value, const GlobalOptions& opts) {
  return opts.degrees ? value * std::numbers::pi / 180.0 : value;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_table(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : table.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < table.header.size(); ++i) obj[table.header[i]] = to_json(row[i]);
      arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << csv_escape(table.header[i]);
  }
  out << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << to_csv(row[i]);
    out << "\r\n";
  }
}

int cmd_spectrum(double r, double s, double psi, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const PTDerived d = derive_pt({r, s, angle_in(psi, opts)});
    Table t{{"alpha", "eps_plus", "eps_minus", "omega", "phase"}, {}};
    t.rows.push_back({d.alpha, d.eps_plus, d.eps_minus, d.omega, std::string(to_string(d.phase))});
    write_table(t, opts.format, out);
    return kExitOk;
  });
}

int cmd_operators(double r, double s, double psi, const GlobalOptions& opts, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const OperatorSet ops = make_operator_set({r, s, angle_in(psi, opts)});
    Table t;
    std::vector<Cell> row;
    t.header.push_back("alpha");
    row.emplace_back(ops.alpha);
    add_matrix("p", ops.P, t, row);
    add_matrix("c", ops.C, t, row);
    const ValidationReport& v = ops.residuals;
    const std::pair<const char*, double> residuals[] = {
        {"c_squared_residual", v.c_squared_residual},
        {"ch_commutator_residual", v.ch_commutator_residual},
        {"cpt_commutator_residual", v.cpt_commutator_residual},
        {"completeness_residual", v.completeness_residual},
        {"p_reconstruction_residual", v.p_reconstruction_residual}};
    for (const auto& [name, value] : residuals) {
      t.header.emplace_back(name);
      row.emplace_back(value);
    }
    t.rows.push_back(std::move(row));
    write_table(t, opts.format, out);
    if (!(v.worst() < kOperatorResidualLimit)) {
      err << "error: operator residual " << format_double(v.worst()) << " exceeds "
          << kOperatorResidualLimit << " (too close to the exceptional point)\n";
      return kExitDomain;
    }
    return kExitOk;
  });
}

int cmd_evolve(double r, double s, double psi, double t_max, int steps, StateChoice state,
               const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (steps < 2) throw Error(ErrorKind::DomainError, "--steps must be >= 2");
    const PTParams p{r, s, angle_in(psi, opts)};
    const OperatorSet ops = make_operator_set(p);
    const auto [e_plus, e_minus] = pt_eigenvectors_normalized(derive_pt(p));
    CVec2 state0;
    switch (state) {
      case StateChoice::Nu1: state0 = cpt_normalize({1.0, 0.0}, ops); break;
      case StateChoice::Nu2: state0 = cpt_normalize({0.0, 1.0}, ops); break;
      case StateChoice::EpsPlus: state0 = e_plus; break;
      case StateChoice::EpsMinus: state0 = e_minus; break;
    }
    const EvolutionTrace tr =
        trace_evolution(p, state0, t_max, static_cast<std::size_t>(steps), opts.config());
    Table t{{"time", "re0", "im0", "re1", "im1", "cpt_norm", "dirac_norm"}, {}};
    for (std::size_t i = 0; i < tr.size(); ++i) {
      const CVec2& v = tr.states[i];
      t.rows.push_back({tr.times[i], v.c0.real(), v.c0.imag(), v.c1.real(), v.c1.imag(),
                        tr.cpt_norms[i], tr.dirac_norms[i]});
    }
    write_table(t, opts.format, out);
    return kExitOk;
  });
}

namespace {

const std::vector<std::string> kSweepHeader{"alpha",       "tau_star",  "beta_pt",
                                            "omega",       "b_matched", "t_hermitian",
                                            "beta_h",      "tau_norm_pt", "tau_norm_h"};

std::vector<Cell> sweep_cells(const SweepRow& r) {
  return {r.alpha, r.tau_star, r.beta_pt, r.omega, r.b_matched,
          r.t_h,   r.beta_h,   r.tau_norm_pt, r.tau_norm_h};
}

}  // namespace

int cmd_brachistochrone(double r, double s, double psi, const GlobalOptions& opts,
                        std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SweepRow row = compare_transitions({r, s, angle_in(psi, opts)}, opts.config());
    Table t{kSweepHeader, {sweep_cells(row)}};
    write_table(t, opts.format, out);
    return kExitOk;
  });
}

int cmd_sweep(double alpha_min, double alpha_max, int steps, double s, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (steps < 2) throw Error(ErrorKind::DomainError, "--steps must be >= 2");
    const auto rows = equivalence_sweep(angle_in(alpha_min, opts), angle_in(alpha_max, opts),
                                        static_cast<std::size_t>(steps), s, opts.config());
    Table t{kSweepHeader, {}};
    double worst = 0.0;
    for (const SweepRow& row : rows) {
      t.rows.push_back(sweep_cells(row));
      worst = std::max(worst, equivalence_residual(row));
    }
    write_table(t, opts.format, out);
    if (!(worst < opts.tol)) {
      err << "equivalence violated: worst residual " << format_double(worst) << " >= tol "
          << format_double(opts.tol) << '\n';
      return kExitInvariant;
    }
    return kExitOk;
  });
}

int cmd_selftest(const GlobalOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto results = run_selftest(opts.config());
    Table t{{"invariant", "passed", "worst", "threshold"}, {}};
    const SelftestResult* first_failure = nullptr;
    for (const SelftestResult& r : results) {
      t.rows.push_back({r.invariant, r.passed, r.worst, r.threshold});
      if (!r.passed && !first_failure) first_failure = &r;
    }
    write_table(t, opts.format, out);
    if (first_failure) {
      err << "selftest failed: " << first_failure->invariant << " (worst "
          << format_double(first_failure->worst) << ", threshold "
          << format_double(first_failure->threshold) << ")\n";
      return kExitInvariant;
    }
    return kExitOk;
  });
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-level PT-symmetric quantum mechanics toolkit", "ptqm"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::string format = "csv";
  app.add_option("--hbar", opts.hbar, "Reduced Planck constant (default 1)");
  app.add_option("--tol", opts.tol, "Numerical tolerance (default 1e-12)");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", opts.output, "Write output to PATH instead of stdout");
  app.add_flag("--degrees", opts.degrees, "Angles given in degrees");

  double r = 0.0, s = 1.0, psi = 0.0;
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--r", r, "Diagonal magnitude r >= 0")->required();
    sub->add_option("--s", s, "Off-diagonal coupling s > 0")->required();
    sub->add_option("--psi", psi, "Diagonal phase psi")->required();
  };

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues, alpha and phase of H_NH");
  add_params(spectrum);
  auto* operators = app.add_subcommand("operators", "P and C matrices with validation residuals");
  add_params(operators);

  auto* evolve = app.add_subcommand("evolve", "Sample a CPT-normalized state's evolution");
  add_params(evolve);
  double t_max = 0.0;
  int steps = 101;
  std::string state = "nu1";
  evolve->add_option("--t-max", t_max, "End time")->required();
  evolve->add_option("--steps", steps, "Number of samples (>= 2)");
  evolve->add_option("--state", state, "Initial state")
      ->check(CLI::IsMember({"nu1", "nu2", "eps+", "eps-"}));

  auto* brach = app.add_subcommand("brachistochrone", "PT transition time vs Hermitian match");
  add_params(brach);

  auto* sweep = app.add_subcommand("sweep", "Alpha sweep of the time-distance equivalence");
  double alpha_min = kDefaultSweepMin, alpha_max = kDefaultSweepMax, sweep_s = 1.0;
  int sweep_steps = static_cast<int>(kDefaultSweepSteps);
  sweep->add_option("--alpha-min", alpha_min, "Lower alpha bound (> -pi/2)");
  sweep->add_option("--alpha-max", alpha_max, "Upper alpha bound (<= 0)");
  sweep->add_option("--steps", sweep_steps, "Grid points (>= 2)");
  sweep->add_option("--s", sweep_s, "Coupling scale s > 0");

  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  opts.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  try {
    check_config(opts.config());
  } catch (const Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opts.output.empty()) {
    file.open(opts.output, std::ios::binary);
    if (!file) {
      err << "cannot open output file: " << opts.output << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  if (*spectrum) return cmd_spectrum(r, s, psi, opts, *sink, err);
  if (*operators) return cmd_operators(r, s, psi, opts, *sink, err);
  if (*evolve) {
    static const std::map<std::string, StateChoice> kStates{{"nu1", StateChoice::Nu1},
                                                            {"nu2", StateChoice::Nu2},
                                                            {"eps+", StateChoice::EpsPlus},
                                                            {"eps-", StateChoice::EpsMinus}};
    return cmd_evolve(r, s, psi, t_max, steps, kStates.at(state), opts, *sink, err);
  }
  if (*brach) return cmd_brachistochrone(r, s, psi, opts, *sink, err);
  if (*sweep) return cmd_sweep(alpha_min, alpha_max, sweep_steps, sweep_s, opts, *sink, err);
  if (*selftest) return cmd_selftest(opts, *sink, err);
  return kExitUsage;
}

}  // namespace ptqm::cli
