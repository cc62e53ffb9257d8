#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/polyring.hpp"
#include "sgr/simplex.hpp"

namespace sgr::cli {

enum class Command { enumerate, grade, dilation_poly, weighted_poly, poincare, bijection, series, verify };
enum class OutputFormat { json, csv, plain };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

/// "ones", "staircase", or an explicit comma-separated list.
struct WeightSpec {
  std::string preset = "ones";
  std::vector<std::uint32_t> explicit_weights;

  /// Throws UsageError on an unknown preset or a list of the wrong length.
  WeightVector resolve(std::size_t d) const;
  static WeightSpec parse(const std::string& text);
};

struct RunConfig {
  Command command = Command::verify;
  std::size_t d = 1;
  std::size_t r = 0;
  WeightSpec weight;
  OutputFormat format = OutputFormat::plain;
  std::size_t max_t = 0;
  std::size_t max_z = 0;
  std::size_t d_max = 4;
  std::size_t r_max = 5;
  std::optional<std::string> out_path;
  /// Names a verify check whose implementation-side value gets perturbed.
  std::optional<std::string> inject_fault;

  /// Throws UsageError when a field is out of range.
  void validate() const;
};

std::string_view command_name(Command c);

/// Returns nullopt when --help was requested (help text already written to out).
/// Throws UsageError on bad arguments.
std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out);

/// Executes a validated config. Output goes to config.out_path when set, else
/// to out. Returns an exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run with the usage-error exit convention.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// plain: "1 + 3*t + 6*t^2", "0" for zero. csv: "degree,coefficient" rows.
/// json: array of decimal strings.
std::string format_polynomial(const Polynomial& p, OutputFormat fmt, std::string_view var = "t");

}  // namespace sgr::cli
