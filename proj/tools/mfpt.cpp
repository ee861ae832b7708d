// mfpt: run, bench, gen and validate subcommands.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mfpt/harness.hpp"
#include "mfpt/matrix_io.hpp"
#include "mfpt/problems.hpp"

namespace fs = std::filesystem;

namespace {

constexpr const char* kReportDirEnv = "MFPT_REPORT_DIR";
constexpr const char* kDefaultReportDir = "reports";

struct SweepOptions {
  std::vector<std::string> problems{"builtin"};
  std::vector<std::string> procs{"all"};
  std::string precision = "double";
  int reps = 10;
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::string out;
  bool oracle = false;
};

void add_sweep_options(CLI::App* cmd, SweepOptions& o, bool bench) {
  cmd->add_option("--problems", o.problems,
                  "tp1..tp44, builtin, gen:M[:ZP[:SEED]] or matrix files")
      ->delimiter(',');
  cmd->add_option("--procs", o.procs, "procedure ids, ranges like 1-8, or all")
      ->delimiter(',');
  cmd->add_option("--precision", o.precision)
      ->check(CLI::IsMember({"single", "double", "both"}))
      ->capture_default_str();
  cmd->add_option("--format", o.format)
      ->check(CLI::IsMember({"csv", "json", "md"}))
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "default seed for generated problems")
      ->capture_default_str();
  cmd->add_option("--out", o.out,
                  "report file, '-' for stdout; default is a file in $" +
                      std::string(kReportDirEnv) + " or ./" + kDefaultReportDir);
  if (bench) {
    cmd->add_option("--reps", o.reps, "timed repetitions per cell")
        ->capture_default_str();
  } else {
    cmd->add_flag("--oracle", o.oracle,
                  "compare double results with the column-solve oracle");
  }
}

std::vector<mfpt::Procedure> parse_procs(const std::vector<std::string>& items) {
  std::vector<mfpt::Procedure> out;
  auto add = [&](int id) {
    auto p = mfpt::procedure_from_id(id);
    if (!p) throw CLI::ValidationError("--procs", "unknown procedure " + std::to_string(id));
    out.push_back(*p);
  };
  for (const auto& item : items) {
    if (item.empty()) continue;
    if (item == "all") {
      for (int id = 1; id <= mfpt::kProcedureCount; ++id) add(id);
      continue;
    }
    const auto dash = item.find('-');
    try {
      if (dash != std::string::npos && dash > 0) {
        const int lo = std::stoi(item.substr(0, dash));
        const int hi = std::stoi(item.substr(dash + 1));
        if (lo > hi) throw CLI::ValidationError("--procs", "empty range " + item);
        for (int id = lo; id <= hi; ++id) add(id);
      } else {
        std::size_t used = 0;
        const int id = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        add(id);
      }
    } catch (const std::logic_error&) {
      throw CLI::ValidationError("--procs", "cannot parse '" + item + "'");
    }
  }
  return out;
}

mfpt::RunConfig make_config(const SweepOptions& o) {
  mfpt::RunConfig cfg;
  for (const auto& item : o.problems) {
    if (item == "builtin" || item == "all") {
      for (auto id : mfpt::builtin_ids()) {
        mfpt::ProblemSpec s;
        s.id = id;
        cfg.problems.push_back(s);
      }
    } else {
      cfg.problems.push_back(mfpt::parse_problem(item, o.seed));
    }
  }
  cfg.procedures = parse_procs(o.procs);
  if (o.precision == "single") {
    cfg.precisions = {mfpt::Precision::Single};
  } else if (o.precision == "both") {
    cfg.precisions = {mfpt::Precision::Double, mfpt::Precision::Single};
  } else {
    cfg.precisions = {mfpt::Precision::Double};
  }
  cfg.reps = o.reps;
  cfg.format = o.format == "json"  ? mfpt::ReportFormat::Json
               : o.format == "md"  ? mfpt::ReportFormat::Markdown
                                   : mfpt::ReportFormat::Csv;
  cfg.seed = o.seed;
  cfg.oracle = o.oracle;
  cfg.check();
  return cfg;
}

// Writes `text` to --out, stdout, or the report directory.
void emit(const SweepOptions& o, const std::string& stem,
          mfpt::ReportFormat fmt, const std::string& text) {
  if (o.out == "-") {
    std::cout << text;
    return;
  }
  fs::path path;
  if (!o.out.empty()) {
    path = o.out;
  } else {
    const char* env = std::getenv(kReportDirEnv);
    const fs::path dir = env && *env ? fs::path(env) : fs::path(kDefaultReportDir);
    path = dir / (stem + "." + std::string(mfpt::format_extension(fmt)));
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw mfpt::Error("cannot write '" + path.string() + "'");
  f << text;
  std::cerr << "wrote " << path.string() << '\n';
}

int cmd_run(const SweepOptions& o) {
  const auto cfg = make_config(o);
  const auto rows = mfpt::run_accuracy(cfg);
  std::ostringstream ss;
  mfpt::write_accuracy(ss, rows, cfg.format);
  emit(o, "run", cfg.format, ss.str());
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.ok;
  if (failed > 0) std::cerr << failed << " cell(s) failed; see the status column\n";
  return 0;
}

int cmd_bench(const SweepOptions& o) {
  const auto cfg = make_config(o);
  const auto rows = mfpt::run_bench(cfg);
  std::ostringstream ss;
  mfpt::write_timing(ss, rows, cfg.format);
  emit(o, "bench", cfg.format, ss.str());
  return 0;
}

struct GenOptions {
  std::size_t m = 100;
  double zero_proportion = 0.6;
  std::uint64_t seed = 0;
  std::string out;
  std::string layout = "auto";
};

int cmd_gen(const GenOptions& g) {
  const auto p = mfpt::generate_sparse(g.m, g.zero_proportion, g.seed);
  mfpt::MatrixFormat fmt = mfpt::MatrixFormat::Auto;
  if (g.layout == "coordinate") fmt = mfpt::MatrixFormat::MarketCoordinate;
  if (g.layout == "array") fmt = mfpt::MatrixFormat::MarketArray;
  if (g.layout == "csv") fmt = mfpt::MatrixFormat::Csv;
  if (g.out.empty() || g.out == "-") {
    mfpt::write_matrix(std::cout, p.matrix(),
                       fmt == mfpt::MatrixFormat::Auto
                           ? mfpt::MatrixFormat::MarketCoordinate
                           : fmt);
  } else {
    const fs::path path(g.out);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    mfpt::save_matrix(p, g.out, fmt);
  }
  return 0;
}

int cmd_validate(const std::string& path) {
  mfpt::TransitionMatrix<double> p;
  try {
    p = mfpt::load_matrix(path);
  } catch (const mfpt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  if (auto v = mfpt::validate(p)) {
    std::cerr << "invalid: " << v->message << '\n';
    return 1;
  }
  if (!mfpt::is_irreducible(p)) {
    std::cerr << "invalid: chain is not irreducible\n";
    return 1;
  }
  std::cout << path << ": ok (" << p.states() << " states)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mean first passage time procedures and accuracy harness"};
  app.require_subcommand(1);

  SweepOptions run_opts;
  auto* run = app.add_subcommand("run", "accuracy sweep over problems and procedures");
  add_sweep_options(run, run_opts, false);

  SweepOptions bench_opts;
  bench_opts.precision = "double";
  auto* bench = app.add_subcommand("bench", "timed sweep, one warmup then --reps runs");
  add_sweep_options(bench, bench_opts, true);
  bench->callback([&] {
    if (bench_opts.reps < 1) throw CLI::ValidationError("--reps", "must be at least 1");
  });

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a random sparse irreducible chain");
  gen->add_option("--m", gen_opts.m, "number of states")->required();
  gen->add_option("--zero-proportion", gen_opts.zero_proportion)
      ->check(CLI::Range(0.0, 0.999999))
      ->capture_default_str();
  gen->add_option("--seed", gen_opts.seed)->capture_default_str();
  gen->add_option("--out", gen_opts.out, "matrix file (.mtx or .csv), '-' for stdout");
  gen->add_option("--layout", gen_opts.layout)
      ->check(CLI::IsMember({"auto", "coordinate", "array", "csv"}))
      ->capture_default_str();

  std::string validate_path;
  auto* val = app.add_subcommand("validate", "check that a matrix file is a valid irreducible chain");
  val->add_option("path", validate_path)->required();

  // Argument errors all map to exit code 2; --help still exits 0.
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*run) return cmd_run(run_opts);
    if (*bench) return cmd_bench(bench_opts);
    if (*gen) return cmd_gen(gen_opts);
    if (*val) return cmd_validate(validate_path);
  } catch (const CLI::Error& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const mfpt::ContractViolation& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
