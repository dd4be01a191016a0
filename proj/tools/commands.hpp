#pragma once

// Command implementations behind the `ptqm` executable. Each command writes
// its table to `out` and diagnostics to `err`, and returns the process exit
// code:
//
//   0 success, 1 usage error, 2 phase/domain error, 3 invariant failure.

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ptqm/evolution.hpp"

namespace ptqm::cli {

enum class OutputFormat { Csv, Json };

struct GlobalOptions {
  double hbar = 1.0;
  double tol = 1e-12;
  OutputFormat format = OutputFormat::Csv;
  std::string output;  // empty: standard output
  bool degrees = false;

  EvolutionConfig config() const { return {hbar, tol}; }
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitInvariant = 3;

using Cell = std::variant<double, std::string, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// %.17g-equivalent, locale independent.
std::string format_double(double x);

/// CSV: header row, comma separated, RFC 4180 quoting for strings.
/// JSON: an array of objects keyed by the header names.
void write_table(const Table& table, OutputFormat format, std::ostream& out);

enum class StateChoice { Nu1, Nu2, EpsPlus, EpsMinus };

int cmd_spectrum(double r, double s, double psi, const GlobalOptions& opts, std::ostream& out,
                 std::ostream& err);
int cmd_operators(double r, double s, double psi, const GlobalOptions& opts, std::ostream& out,
                  std::ostream& err);
int cmd_evolve(double r, double s, double psi, double t_max, int steps, StateChoice state,
               const GlobalOptions& opts, std::ostream& out, std::ostream& err);
int cmd_brachistochrone(double r, double s, double psi, const GlobalOptions& opts,
                        std::ostream& out, std::ostream& err);
int cmd_sweep(double alpha_min, double alpha_max, int steps, double s, const GlobalOptions& opts,
              std::ostream& out, std::ostream& err);
int cmd_selftest(const GlobalOptions& opts, std::ostream& out, std::ostream& err);

/// Full command line entry point (argv[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ptqm::cli
