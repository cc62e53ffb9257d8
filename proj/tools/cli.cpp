#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sgr/grassmann.hpp"
#include "sgr/serialize.hpp"
#include "sgr/tableaux.hpp"
#include "verify.hpp"

namespace sgr::cli {

namespace {

std::string join(std::span<const std::uint32_t> v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string paren(std::span<const std::uint32_t> v) { return "(" + join(v, ',') + ")"; }

Json header(const RunConfig& c) {
  Json j = Json::object();
  j["d"] = c.d;
  j["r"] = c.r;
  return j;
}

void emit_json(std::ostream& os, const Json& j) { os << j.dump() << '\n'; }

void write_points(const RunConfig& c, std::ostream& os) {
  const auto points = enumerate_lattice_points(DilatedSimplex(c.d, c.r));
  switch (c.format) {
    case OutputFormat::json: {
      Json j = header(c);
      Json arr = Json::array();
      for (const auto& p : points) arr.push_back(to_json(p.coords()));
      j["points"] = std::move(arr);
      emit_json(os, j);
      break;
    }
    case OutputFormat::csv:
      for (const auto& p : points) os << join(p.coords(), ',') << '\n';
      break;
    case OutputFormat::plain:
      for (const auto& p : points) os << paren(p.coords()) << '\n';
      break;
  }
}

void write_grade(const RunConfig& c, std::ostream& os) {
  const DilatedSimplex s(c.d, c.r);
  const WeightVector w = c.weight.resolve(c.d);
  const auto counts = slice_counts(s, w);
  switch (c.format) {
    case OutputFormat::json: {
      Json j = header(c);
      j["weight"] = to_json(w.weights());
      Json classes = Json::array();
      for (std::size_t k = 0; k < counts.size(); ++k) {
        Json cls = Json::object();
        cls["level"] = k;
        cls["count"] = to_json(counts[k]);
        classes.push_back(std::move(cls));
      }
      j["classes"] = std::move(classes);
      j["polynomial"] = to_json(Polynomial(counts));
      emit_json(os, j);
      break;
    }
    case OutputFormat::csv:
      for (std::size_t k = 0; k < counts.size(); ++k) os << k << ',' << counts[k] << '\n';
      break;
    case OutputFormat::plain:
      os << "weight " << paren(w.weights()) << '\n';
      for (std::size_t k = 0; k < counts.size(); ++k) os << "level " << k << ": " << counts[k] << '\n';
      break;
  }
}

void write_polynomial(const Polynomial& p, OutputFormat fmt, std::string_view var, std::ostream& os) {
  os << format_polynomial(p, fmt, var);
  if (fmt != OutputFormat::csv) os << '\n';
}

void write_bijection(const RunConfig& c, std::ostream& os) {
  struct Row {
    LatticePoint point;
    RowTableau tableau;
    BetaVector beta;
    GrassmannianPermutation perm;
  };
  std::vector<Row> rows;
  for (const auto& p : enumerate_lattice_points(DilatedSimplex(c.d, c.r))) {
    auto beta = beta_partition(p.coords());
    auto perm = grassmannian_permutation(beta, c.d + c.r);
    rows.push_back({p, point_to_tableau(p), std::move(beta), std::move(perm)});
  }
  switch (c.format) {
    case OutputFormat::json: {
      Json j = header(c);
      Json arr = Json::array();
      for (const auto& row : rows) {
        Json o = Json::object();
        o["point"] = to_json(row.point.coords());
        o["tableau"] = to_json(row.tableau.entries());
        o["beta"] = to_json(row.beta.entries());
        o["permutation"] = to_json(row.perm.one_line());
        arr.push_back(std::move(o));
      }
      j["rows"] = std::move(arr);
      emit_json(os, j);
      break;
    }
    case OutputFormat::csv:
      // Inner lists are space separated so that each row has four fields.
      for (const auto& row : rows) {
        os << join(row.point.coords(), ' ') << ',' << join(row.tableau.entries(), ' ') << ','
           << join(row.beta.entries(), ' ') << ',' << join(row.perm.one_line(), ' ') << '\n';
      }
      break;
    case OutputFormat::plain: {
      std::vector<std::array<std::string, 4>> cells;
      cells.push_back({"point", "tableau", "beta", "permutation"});
      for (const auto& row : rows) {
        cells.push_back({paren(row.point.coords()),
                         row.tableau.is_empty() ? std::string("[]") : "[" + join(row.tableau.entries(), ' ') + "]",
                         paren(row.beta.entries()), join(row.perm.one_line(), ' ')});
      }
      std::array<std::size_t, 4> width{};
      for (const auto& r : cells) {
        for (std::size_t i = 0; i < 4; ++i) width[i] = std::max(width[i], r[i].size());
      }
      for (const auto& r : cells) {
        std::string line;
        for (std::size_t i = 0; i < 4; ++i) {
          line += r[i];
          if (i < 3) line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << '\n';
      }
      break;
    }
  }
}

void write_series(const RunConfig& c, std::ostream& os) {
  const BiSeries g = dilation_generating_series(c.d, c.max_t, c.max_z);
  switch (c.format) {
    case OutputFormat::json: {
      Json j = Json::object();
      j["d"] = c.d;
      j["max_t"] = c.max_t;
      j["max_z"] = c.max_z;
      j["series"] = to_json(g);
      emit_json(os, j);
      break;
    }
    case OutputFormat::csv:
      for (std::size_t i = 0; i <= g.max_t(); ++i) {
        for (std::size_t k = 0; k <= g.max_z(); ++k) os << i << ',' << k << ',' << g.at(i, k) << '\n';
      }
      break;
    case OutputFormat::plain:
      for (std::size_t k = 0; k <= g.max_z(); ++k) {
        os << "z^" << k << ": " << format_polynomial(g.z_coefficient(k), OutputFormat::plain) << '\n';
      }
      break;
  }
}

int write_verify(const RunConfig& c, std::ostream& os) {
  const auto results = run_verification({c.d_max, c.r_max, c.inject_fault});
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  const bool ok = passed == results.size();
  if (c.format == OutputFormat::json) {
    Json j = Json::object();
    j["d_max"] = c.d_max;
    j["r_max"] = c.r_max;
    Json arr = Json::array();
    for (const auto& r : results) {
      Json o = Json::object();
      o["check"] = r.name;
      o["statement"] = r.statement;
      o["status"] = r.passed ? "PASS" : "FAIL";
      o["cases"] = r.cases;
      if (!r.passed) o["counterexample"] = r.counterexample;
      arr.push_back(std::move(o));
    }
    j["checks"] = std::move(arr);
    j["passed"] = ok;
    emit_json(os, j);
  } else if (c.format == OutputFormat::csv) {
    for (const auto& r : results) os << r.name << ',' << (r.passed ? "PASS" : "FAIL") << ',' << r.cases << '\n';
  } else {
    std::size_t width = 0;
    for (const auto& r : results) width = std::max(width, r.name.size());
    for (const auto& r : results) {
      os << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(static_cast<int>(width)) << r.name << "  "
         << r.statement << "  [" << r.cases << " cases]\n";
      if (!r.passed) os << "      first counterexample: " << r.counterexample << '\n';
    }
    os << "verify: " << passed << '/' << results.size() << " checks passed (d <= " << c.d_max
       << ", r <= " << c.r_max << ")\n";
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int dispatch(const RunConfig& c, std::ostream& os) {
  switch (c.command) {
    case Command::enumerate:
      write_points(c, os);
      return kExitOk;
    case Command::grade:
      write_grade(c, os);
      return kExitOk;
    case Command::dilation_poly:
      write_polynomial(dilation_polynomial(DilatedSimplex(c.d, c.r)), c.format, "t", os);
      return kExitOk;
    case Command::weighted_poly:
      write_polynomial(weighted_polynomial(DilatedSimplex(c.d, c.r), c.weight.resolve(c.d)), c.format, "z", os);
      return kExitOk;
    case Command::poincare:
      write_polynomial(poincare_polynomial(c.d, c.r), c.format, "t", os);
      return kExitOk;
    case Command::bijection:
      write_bijection(c, os);
      return kExitOk;
    case Command::series:
      write_series(c, os);
      return kExitOk;
    case Command::verify:
      return write_verify(c, os);
  }
  return kExitUsage;
}

}  // namespace

WeightVector WeightSpec::resolve(std::size_t d) const {
  if (explicit_weights.empty()) {
    if (preset == "ones") return WeightVector::ones(d);
    if (preset == "staircase") return WeightVector::staircase(d);
    throw UsageError("unknown weight preset '" + preset + "' (expected ones, staircase or a list)");
  }
  if (explicit_weights.size() != d) {
    throw UsageError("weight list has " + std::to_string(explicit_weights.size()) + " entries, expected d = " +
                     std::to_string(d));
  }
  for (auto w : explicit_weights) {
    if (w == 0) throw UsageError("weights must be positive");
  }
  return WeightVector(explicit_weights);
}

WeightSpec WeightSpec::parse(const std::string& text) {
  if (text == "ones" || text == "staircase") return {text, {}};
  WeightSpec spec{"", {}};
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 9) {
      throw UsageError("bad weight entry '" + item + "' in '" + text + "'");
    }
    const auto value = static_cast<std::uint32_t>(std::stoul(item));
    if (value == 0) throw UsageError("weights must be positive");
    spec.explicit_weights.push_back(value);
  }
  if (spec.explicit_weights.empty()) throw UsageError("empty weight list");
  return spec;
}

void RunConfig::validate() const {
  if (command == Command::verify) {
    if (d_max == 0) throw UsageError("--d-max must be at least 1");
    return;
  }
  if (d == 0) throw UsageError("--d must be at least 1");
  if (command == Command::grade || command == Command::weighted_poly) (void)weight.resolve(d);
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::enumerate: return "enumerate";
    case Command::grade: return "grade";
    case Command::dilation_poly: return "dilation-poly";
    case Command::weighted_poly: return "weighted-poly";
    case Command::poincare: return "poincare";
    case Command::bijection: return "bijection";
    case Command::series: return "series";
    case Command::verify: return "verify";
  }
  return "?";
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Lattice points of dilated simplices, row tableaux and Grassmannian permutations"};
  app.name("sgr");
  app.require_subcommand(1);

  RunConfig cfg;
  std::string weight = "ones";
  std::string format = "plain";
  std::string out_path;
  std::optional<std::size_t> max_t;
  std::optional<std::size_t> max_z;
  std::string fault;
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"plain", OutputFormat::plain}};

  auto common = [&](CLI::App* sub, bool needs_r) {
    sub->add_option("--d", cfg.d, "Simplex dimension (>= 1)")->required();
    auto* r = sub->add_option("--r", cfg.r, "Dilation factor (>= 0)");
    if (needs_r) r->required();
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    sub->add_option("--out", out_path, "Write output to this file instead of standard output");
  };

  const std::pair<Command, const char*> commands[] = {
      {Command::enumerate, "Lattice points of r*Delta_d in lexicographic order"},
      {Command::grade, "Slice-class sizes under a weight vector"},
      {Command::dilation_poly, "Dilation polynomial T_r(t)"},
      {Command::weighted_poly, "Weighted polynomial sum_m A_m z^m"},
      {Command::poincare, "Poincare polynomial of Gr(d, d+r) from box partitions"},
      {Command::bijection, "Point / tableau / beta vector / Grassmannian permutation table"},
      {Command::series, "Truncated generating series sum_r T_r(t) z^r"},
      {Command::verify, "Check every identity against brute-force oracles"},
  };
  std::map<CLI::App*, Command> by_sub;
  for (const auto& [cmd, help] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(cmd)), help);
    by_sub[sub] = cmd;
    switch (cmd) {
      case Command::grade:
      case Command::weighted_poly:
        common(sub, true);
        sub->add_option("--weight", weight, "ones | staircase | comma-separated positive integers");
        break;
      case Command::series:
        common(sub, false);
        sub->add_option("--max-t", max_t, "Truncation order in t (default: max-z)");
        sub->add_option("--max-z", max_z, "Truncation order in z (default: r)");
        break;
      case Command::verify:
        sub->add_option("--d-max", cfg.d_max, "Largest d checked")->capture_default_str();
        sub->add_option("--r-max", cfg.r_max, "Largest r checked")->capture_default_str();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
        sub->add_option("--out", out_path, "Write output to this file instead of standard output");
        sub->add_option("--inject-fault", fault, "Perturb one check (self-test of the harness)")->group("");
        break;
      default:
        common(sub, true);
        break;
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [sub, cmd] : by_sub) {
    if (sub->parsed()) cfg.command = cmd;
  }
  cfg.format = formats.at(format);
  cfg.weight = WeightSpec::parse(weight);
  if (!out_path.empty()) cfg.out_path = out_path;
  if (!fault.empty()) cfg.inject_fault = fault;
  if (cfg.command == Command::series) {
    cfg.max_z = max_z.value_or(cfg.r);
    cfg.max_t = max_t.value_or(cfg.max_z);
  }
  cfg.validate();
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
    if (config.command == Command::verify && config.inject_fault) {
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), *config.inject_fault) == names.end()) {
        throw UsageError("unknown check '" + *config.inject_fault + "'");
      }
    }
    if (config.out_path) {
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) {
        err << "sgr: cannot open '" << *config.out_path << "' for writing\n";
        return kExitUsage;
      }
      return dispatch(config, file);
    }
    return dispatch(config, out);
  } catch (const UsageError& e) {
    err << "sgr: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "sgr: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    auto cfg = parse_args(args, out);
    if (!cfg) return kExitOk;
    return run(*cfg, out, err);
  } catch (const Error& e) {
    err << "sgr: " << e.what() << '\n';
    return kExitUsage;
  }
}

std::string format_polynomial(const Polynomial& p, OutputFormat fmt, std::string_view var) {
  const auto& c = p.coeffs();
  switch (fmt) {
    case OutputFormat::json:
      return to_json(p).dump();
    case OutputFormat::csv: {
      std::string out;
      for (std::size_t k = 0; k < c.size(); ++k) out += std::to_string(k) + "," + c[k].str() + "\n";
      return out;
    }
    case OutputFormat::plain:
      break;
  }
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const BigInt magnitude = negative ? BigInt(-c[k]) : c[k];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string term;
    if (k == 0 || magnitude != 1) term = magnitude.str();
    if (k > 0) {
      if (!term.empty()) term += "*";
      term += var;
      if (k > 1) term += "^" + std::to_string(k);
    }
    out += term;
  }
  return out;
}

}  // namespace sgr::cli
