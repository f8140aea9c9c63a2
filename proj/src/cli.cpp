#include "macc/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "macc/bound_export.hpp"
#include "macc/bounds.hpp"
#include "macc/entropy.hpp"
#include "macc/errors.hpp"
#include "macc/scheme.hpp"
#include "macc/tradeoff.hpp"
#include "macc/verify.hpp"

namespace macc::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int K = 0;
  int L = 0;
  int N = 0;
  std::string grid;
  std::string families = "cutset,improved,hkd,hkd2,best";
  int b_cap = 0;
  std::string scheme;
  std::size_t F = 12;
  std::uint64_t seed = 1;
  int alphabet = 2;
  int trials = 0;
  double tol = entropy::kDefaultTol;
  std::string out;
  std::string format = "csv";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

MaccParams params_of(const RunConfig& c) { return MaccParams(c.K, c.L, c.N); }

std::vector<Rational> grid_or_default(const RunConfig& c, const MaccParams& p) {
  return c.grid.empty() ? bounds::default_grid(p) : parse_grid(c.grid);
}

// Resolves the destination and writes `content` there, or to `out` when no
// destination is configured. Returns true if a file was written.
bool emit(const RunConfig& c, const std::string& command, const std::string& content,
          std::ostream& out) {
  std::filesystem::path path;
  if (!c.out.empty()) {
    path = c.out;
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    path = std::filesystem::path(dir) / (command + "." + c.format);
  } else {
    out << content;
    return false;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing " + path.string());
  return true;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

int cmd_bounds(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MaccParams p = params_of(c);
  const std::vector<Rational> grid = grid_or_default(c, p);
  std::vector<bounds::BoundCurve> curves;
  for (const std::string& name : split(c.families, ',')) {
    const auto family = bounds::parse_family(name);
    if (!family) throw DomainError("unknown bound family '" + name + "'");
    curves.push_back(bounds::sweep_curve(p, *family, grid, c.b_cap));
    if (!curves.back().applicable) {
      err << "note: " << bounds::family_id(*family) << " is inapplicable for " << p.to_string()
          << " (needs L <= floor(K/2))\n";
    }
  }
  std::ostringstream body;
  if (c.format == "json") {
    body << dump(bounds::curves_to_json(p, curves));
  } else {
    bounds::write_curves_csv(body, curves);
  }
  emit(c, "bounds", body.str(), out);
  return kOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MaccParams p = params_of(c);
  const bounds::DominanceReport report = bounds::verify_dominance(p, grid_or_default(c, p));
  std::ostringstream body;
  if (c.format == "json") {
    body << dump(bounds::dominance_to_json(report));
  } else {
    bounds::write_dominance_csv(body, report);
  }
  emit(c, "compare", body.str(), out);
  for (const auto& v : report.violations) {
    err << "violation at M=" << v.M << ": " << v.relation << " (" << v.lhs << " vs " << v.rhs << ")\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_simulate(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MaccParams p = params_of(c);
  const auto scheme = sim::make_scheme(c.scheme, p);
  if (!scheme) throw DomainError("unknown scheme '" + c.scheme + "'");
  if (!scheme->admits(p)) throw DomainError(scheme->id() + " does not support " + p.to_string());
  scheme->check_file_size(c.F);
  const sim::FileLibrary library = sim::FileLibrary::random(p, c.F, c.seed);
  const sim::VerificationReport report = sim::verify_scheme(*scheme, library, c.seed);

  RunConfig json_config = c;
  json_config.format = "json";
  const bool to_file = emit(json_config, "simulate", dump(sim::report_to_json(report)), out);
  std::ostream& summary = to_file ? out : err;
  summary << scheme->id() << ": " << (report.ok() ? "pass" : "FAIL") << ", " << report.checks
          << " checks, worst-case rate " << report.worst_case_rate << "\n";
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_entropy(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const entropy::BatchReport report = entropy::run_batch(c.K, c.alphabet, c.trials, c.seed, c.tol);
  RunConfig json_config = c;
  json_config.format = "json";
  const bool to_file = emit(json_config, "entropy-test", dump(entropy::batch_to_json(report)), out);
  std::ostream& summary = to_file ? out : err;
  summary << "entropy-test: " << report.trials << " trials, " << report.failures.size()
          << " failures, min margin " << report.min_margin << "\n";
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_tradeoff(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const MaccParams p(3, 2, 3);
  const auto vertices = sim::achievable_points_323();
  const std::vector<Rational> grid =
      c.grid.empty() ? bounds::uniform_grid(Rational(0), Rational(3, 2), 151) : parse_grid(c.grid);
  int mismatches = 0;
  for (const Rational& M : grid) {
    const Rational shared = sim::memory_share(vertices, M);
    const Rational optimal = sim::optimal_tradeoff_323(M);
    const Rational lower = bounds::best_lower_bound(p, M).R;
    if (shared != optimal || optimal != lower) {
      ++mismatches;
      err << "mismatch at M=" << M << ": shared " << shared << ", closed form " << optimal
          << ", lower bound " << lower << "\n";
    }
  }
  std::ostringstream body;
  sim::write_achievable_csv(body, vertices);
  emit(c, "tradeoff", body.str(), out);
  return mismatches == 0 ? kOk : kCheckFailed;
}

void add_format(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Output file (default: $" + std::string(kOutputDirEnv) + " or stdout)");
}

void add_network(CLI::App* sub, RunConfig& c, bool required) {
  auto* k = sub->add_option("--K", c.K, "Number of users and caches");
  auto* l = sub->add_option("--L", c.L, "Caches accessed per user");
  auto* n = sub->add_option("--N", c.N, "Number of files");
  if (required) {
    k->required();
    l->required();
    n->required();
  }
}

}  // namespace

std::vector<Rational> parse_grid(const std::string& spec) {
  const std::vector<std::string> parts = split(spec, ':');
  if (parts.size() != 3) throw DomainError("grid must look like start:stop:count, got '" + spec + "'");
  const Rational start = Rational::parse(parts[0]);
  const Rational stop = Rational::parse(parts[1]);
  const Rational count = Rational::parse(parts[2]);
  if (!count.is_integer() || count < 2 || count > 1'000'000) {
    throw DomainError("grid count must be an integer in [2, 1000000]");
  }
  return bounds::uniform_grid(start, stop, static_cast<int>(count.num()));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Lower bounds and scheme checks for multi-access coded caching", "macc"};
  app.require_subcommand(1);

  auto* bounds_cmd = app.add_subcommand("bounds", "Sweep lower-bound families over a memory grid");
  add_network(bounds_cmd, c, true);
  bounds_cmd->add_option("--grid", c.grid, "start:stop:count (default 0:N/L:101)");
  bounds_cmd->add_option("--families", c.families, "Comma-separated: cutset,improved,hkd,hkd2,best");
  bounds_cmd->add_option("--b-cap", c.b_cap, "Search cap on b for hkd (default N)");
  add_format(bounds_cmd, c);

  auto* compare_cmd = app.add_subcommand("compare", "Check improved >= cut-set >= uncapped cut-set pointwise");
  add_network(compare_cmd, c, true);
  compare_cmd->add_option("--grid", c.grid, "start:stop:count (default 0:N/L:101)");
  add_format(compare_cmd, c);

  c.K = 3;
  c.L = 2;
  c.N = 3;
  auto* sim_cmd = app.add_subcommand("simulate", "Verify a scheme on every demand vector");
  add_network(sim_cmd, c, false);
  sim_cmd->add_option("--scheme", c.scheme, "appendix-b, corner-323 or zero-memory")->required();
  sim_cmd->add_option("--F", c.F, "Bits per file");
  sim_cmd->add_option("--seed", c.seed, "Library PRNG seed");
  sim_cmd->add_option("--out", c.out, "Report file (JSON)");

  auto* ent_cmd = app.add_subcommand("entropy-test", "Random-pmf checks of the window entropy inequality");
  ent_cmd->add_option("--K", c.K, "Number of variables")->required();
  ent_cmd->add_option("--alphabet", c.alphabet, "Alphabet size of every variable");
  ent_cmd->add_option("--trials", c.trials, "Number of random pmfs")->required();
  ent_cmd->add_option("--seed", c.seed, "PRNG seed");
  ent_cmd->add_option("--tol", c.tol, "Inequality tolerance");
  ent_cmd->add_option("--out", c.out, "Report file (JSON)");

  auto* trade_cmd = app.add_subcommand("tradeoff", "Achievable (3,2,3) vertices and the exact optimum check");
  trade_cmd->add_option("--grid", c.grid, "start:stop:count (default 0:3/2:151)");
  trade_cmd->add_option("--out", c.out, "Output file (CSV)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(c, out, err);
    if (compare_cmd->parsed()) return cmd_compare(c, out, err);
    if (sim_cmd->parsed()) return cmd_simulate(c, out, err);
    if (ent_cmd->parsed()) return cmd_entropy(c, out, err);
    if (trade_cmd->parsed()) return cmd_tradeoff(c, out, err);
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace macc::cli
