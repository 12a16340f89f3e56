// jfactor command line: partition construction, sparse factorizations of the
// scaled all-ones matrix, exact verification, cost statistics, mixing
// schedules, and finite-time consensus simulation.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "jfactor/consensus.hpp"
#include "jfactor/dshb.hpp"
#include "jfactor/errors.hpp"
#include "jfactor/io.hpp"
#include "jfactor/partition.hpp"
#include "jfactor/rhb.hpp"
#include "jfactor/sds.hpp"

namespace {

using namespace jfactor;

// Distinct exit codes per failure class.
enum ExitCode : int {
  exit_ok = 0,
  exit_verify_failed = 1,
  exit_bad_partition = 2,
  exit_bad_flags = 3,
  exit_io_failure = 4,
  exit_internal = 5,
};

struct PartitionFlags {
  std::int64_t n = 0;
  std::int64_t base = 0;
  std::string parts;
};

void add_partition_flags(CLI::App* cmd, PartitionFlags& flags) {
  cmd->add_option("--n", flags.n, "Total order n (with --base)");
  cmd->add_option("--base", flags.base, "Read the partition off the base-p digits of n");
  cmd->add_option("--parts", flags.parts, "Comma-separated parts, largest scale first");
}

Partition resolve_partition(const PartitionFlags& flags) {
  const bool have_parts = !flags.parts.empty();
  const bool have_base = flags.base != 0 || flags.n != 0;
  if (have_parts == have_base) {
    throw CLI::ValidationError("partition", "give either --parts or both --n and --base");
  }
  if (have_parts) return Partition::from_text("parts=" + flags.parts);
  if (flags.n == 0 || flags.base == 0) {
    throw CLI::ValidationError("partition", "--n and --base are both required");
  }
  return Partition::from_base(flags.n, flags.base);
}

Phase2Method parse_method(const std::string& name) {
  if (name == "rhb") return Phase2Method::rhb;
  if (name == "dshb") return Phase2Method::dshb;
  if (name == "sds-left") return Phase2Method::sds_left;
  if (name == "sds-right") return Phase2Method::sds_right;
  if (name == "t-factors") return Phase2Method::t_sequence;
  throw CLI::ValidationError("--method", "unknown method '" + name + "'");
}

IntraMethod parse_intra(const std::string& name) {
  if (name == "dense") return IntraMethod::dense;
  if (name == "one-peer-exp") return IntraMethod::one_peer_exp;
  throw CLI::ValidationError("--intra", "unknown intra method '" + name + "'");
}

std::filesystem::path resolve_output_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("JFACTOR_OUTPUT_DIR"); env && *env) return env;
  return ".";
}

struct CommandState {
  PartitionFlags flags;
  std::string method;
  std::string intra = "dense";
  std::string t_order = "left";
  std::string input;
  std::string out_dir;
  std::string format;
  std::int64_t dim = 4;
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  int exit_code = exit_ok;
};

void run_partition(CommandState& s) {
  const Partition p = resolve_partition(s.flags);
  if (s.format == "json") {
    nlohmann::json j{{"n", p.n()},
                     {"parts", p.parts()},
                     {"suffix_sums", p.suffix_sums()},
                     {"tau", p.tau()},
                     {"text", p.to_text()}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << p.to_text() << '\n';
  }
}

void run_factorize(CommandState& s) {
  const Partition p = resolve_partition(s.flags);
  const Phase2Method method = parse_method(s.method);
  const std::filesystem::path dir = resolve_output_dir(s.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());

  const FactorDocument doc = build_factor_document(p, method);
  const std::filesystem::path doc_path = dir / (doc.method + ".factor.json");
  write_factor_document(doc_path, doc);
  std::cout << "wrote " << doc_path.string() << '\n';

  auto export_matrix = [&](const std::string& stem, const SparseMatrix& m) {
    const bool mtx = s.format == "mtx";
    const auto path = dir / (stem + (mtx ? ".mtx" : ".matrix.json"));
    if (mtx) {
      write_matrix_market(path, m);
    } else {
      write_matrix_json(path, m);
    }
    std::cout << "wrote " << path.string() << '\n';
  };

  switch (method) {
    case Phase2Method::rhb:
      if (s.format == "mtx") export_matrix("rhb_A", doc.matrices.front());
      break;
    case Phase2Method::dshb: {
      if (s.format == "mtx") export_matrix("dshb_A", doc.matrices.front());
      const auto f = dshb_factorize(p);
      for (std::int64_t k = 1; k <= p.tau(); ++k) {
        export_matrix("dshb_scaled_" + std::to_string(k),
                      f.scaled_sequence[static_cast<std::size_t>(k - 1)]);
      }
      break;
    }
    case Phase2Method::sds_left:
    case Phase2Method::sds_right:
    case Phase2Method::t_sequence: {
      if (s.format == "mtx" && doc.matrices.size() == 1) {
        export_matrix(doc.method == "sds-left" ? "sds_A_L" : "sds_A_R", doc.matrices.front());
      }
      const auto f = sds_factorize(p);
      for (std::int64_t k = 1; k <= p.tau(); ++k) {
        export_matrix("sds_t_" + std::to_string(k), f.t_factors[static_cast<std::size_t>(k - 1)]);
        export_matrix("sds_that_" + std::to_string(k),
                      f.hat_factors[static_cast<std::size_t>(k - 1)]);
      }
      break;
    }
  }

  if (doc.extras.contains("stats")) {
    const auto& stats = doc.extras.at("stats");
    std::cout << "nnz=" << stats.at("nnz").get<std::int64_t>()
              << " d_max=" << stats.at("d_max").get<std::int64_t>() << '\n';
  }
}

void run_verify(CommandState& s) {
  std::optional<FactorDocument> doc;
  if (!s.input.empty()) {
    doc = read_factor_document(s.input);
  } else {
    const Partition p = resolve_partition(s.flags);
    if (s.method.empty()) {
      throw CLI::ValidationError("--method", "verify needs --method unless --input is given");
    }
    doc = build_factor_document(p, parse_method(s.method));
  }

  VerifyResult result{false, Rational(0)};
  std::string detail;
  try {
    result = verify_factor_document(*doc);
  } catch (const IoError& ex) {
    detail = ex.what();
  }

  if (s.format == "json") {
    nlohmann::json j{{"status", result.pass ? "PASS" : "FAIL"},
                     {"method", doc->method},
                     {"partition", doc->partition.to_text()},
                     {"max_abs_diff", to_fraction_string(result.max_diff)}};
    if (!detail.empty()) j["error"] = detail;
    std::cout << j.dump(2) << '\n';
  } else if (result.pass) {
    std::cout << "PASS " << doc->method << " " << doc->partition.to_text() << " max_abs_diff=0\n";
  } else {
    std::cout << "FAIL " << doc->method << " " << doc->partition.to_text();
    if (!detail.empty()) {
      std::cout << " (" << detail << ")\n";
    } else {
      std::cout << " max_abs_diff=" << to_fraction_string(result.max_diff) << '\n';
    }
  }
  s.exit_code = result.pass ? exit_ok : exit_verify_failed;
}

void run_stats(CommandState& s) {
  const Partition p = resolve_partition(s.flags);
  const CostReport report = cost_report(p);
  if (s.format == "json") {
    std::cout << cost_report_json(report).dump(2) << '\n';
  } else if (s.format == "csv") {
    std::cout << cost_report_csv(report);
  } else {
    std::cout << cost_report_text(report);
  }
}

void run_schedule(CommandState& s) {
  const Partition p = resolve_partition(s.flags);
  const MixingSchedule schedule =
      build_schedule(p, parse_method(s.method), parse_intra(s.intra), s.t_order == "right");
  const std::filesystem::path dir = resolve_output_dir(s.out_dir);
  write_schedule_files(dir, schedule, s.format);
  std::cout << "wrote " << schedule.rounds.size() << " rounds + manifest.json to " << dir.string()
            << '\n';
}

void run_simulate(CommandState& s) {
  const Partition p = resolve_partition(s.flags);
  const MixingSchedule schedule =
      build_schedule(p, parse_method(s.method), parse_intra(s.intra), s.t_order == "right");
  const std::vector<double> x0 = random_state(p.n(), s.dim, s.seed);
  const ConsensusTrace trace = simulate(schedule, x0, s.dim, s.tolerance, s.seed);

  const std::filesystem::path dir = resolve_output_dir(s.out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string());
  const auto trace_path = dir / "trace.csv";
  write_trace_csv(trace_path, schedule, trace);
  std::cout << "wrote " << trace_path.string() << '\n';

  char value[32];
  std::snprintf(value, sizeof value, "%.3e", trace.errors.back());
  if (trace.reached) {
    std::cout << "consensus reached in " << schedule.rounds.size()
              << " rounds (final max deviation " << value << ", tolerance " << s.tolerance
              << ")\n";
  } else {
    std::cout << "consensus NOT reached after " << schedule.rounds.size()
              << " rounds (final max deviation " << value << ", tolerance " << s.tolerance
              << ")\n";
    s.exit_code = exit_verify_failed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sparse factorizations of the scaled all-ones matrix and finite-time consensus schedules"};
  app.require_subcommand(1);

  CommandState s;

  auto* cmd_partition = app.add_subcommand("partition", "Construct and print a partition");
  add_partition_flags(cmd_partition, s.flags);
  std::string format_partition = "text";
  cmd_partition->add_option("--format", format_partition, "text or json");

  auto* cmd_factorize = app.add_subcommand("factorize", "Write factor files and metadata");
  add_partition_flags(cmd_factorize, s.flags);
  cmd_factorize->add_option("--method", s.method, "rhb | dshb | sds-left | sds-right | t-factors")
      ->required();
  cmd_factorize->add_option("-o,--output", s.out_dir,
                            "Output directory (default $JFACTOR_OUTPUT_DIR or .)");
  std::string format_factorize = "json";
  cmd_factorize->add_option("--format", format_factorize,
                            "json (lossless) or mtx (adds Matrix Market files)");

  auto* cmd_verify = app.add_subcommand("verify", "Recompute J0*A*J0 exactly and report PASS/FAIL");
  add_partition_flags(cmd_verify, s.flags);
  cmd_verify->add_option("--method", s.method, "Factorization to reconstruct and check");
  cmd_verify->add_option("--input", s.input, "Verify a factor document from disk instead");
  std::string format_verify = "text";
  cmd_verify->add_option("--format", format_verify, "text or json");

  auto* cmd_stats = app.add_subcommand("stats", "Phase-2 cost table (nnz, d_max, rounds)");
  add_partition_flags(cmd_stats, s.flags);
  std::string format_stats = "text";
  cmd_stats->add_option("--format", format_stats, "text, csv, or json");

  auto* cmd_schedule = app.add_subcommand("schedule", "Write the three-phase mixing schedule");
  add_partition_flags(cmd_schedule, s.flags);
  cmd_schedule->add_option("--method", s.method, "Phase-2 choice")->required();
  cmd_schedule->add_option("--intra", s.intra, "dense | one-peer-exp");
  cmd_schedule->add_option("--t-order", s.t_order, "left (product A_L) or right (product A_R)");
  cmd_schedule->add_option("-o,--output", s.out_dir, "Output directory");
  std::string format_schedule = "mtx";
  cmd_schedule->add_option("--format", format_schedule, "mtx or json round files");

  auto* cmd_simulate =
      app.add_subcommand("simulate", "Run the averaging recursion on a random state");
  add_partition_flags(cmd_simulate, s.flags);
  cmd_simulate->add_option("--method", s.method, "Phase-2 choice")->required();
  cmd_simulate->add_option("--intra", s.intra, "dense | one-peer-exp");
  cmd_simulate->add_option("--t-order", s.t_order, "left or right");
  cmd_simulate->add_option("--dim", s.dim, "State columns d");
  cmd_simulate->add_option("--seed", s.seed, "Random state seed");
  cmd_simulate->add_option("--tolerance", s.tolerance, "Consensus tolerance");
  cmd_simulate->add_option("-o,--output", s.out_dir, "Output directory for trace.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return exit_bad_flags;
  }

  try {
    if (cmd_partition->parsed()) {
      s.format = format_partition;
      run_partition(s);
    } else if (cmd_factorize->parsed()) {
      s.format = format_factorize;
      run_factorize(s);
    } else if (cmd_verify->parsed()) {
      s.format = format_verify;
      run_verify(s);
    } else if (cmd_stats->parsed()) {
      s.format = format_stats;
      run_stats(s);
    } else if (cmd_schedule->parsed()) {
      s.format = format_schedule;
      run_schedule(s);
    } else if (cmd_simulate->parsed()) {
      run_simulate(s);
    }
    return s.exit_code;
  } catch (const PartitionError& ex) {
    std::cerr << "partition error: " << ex.what() << '\n';
    return exit_bad_partition;
  } catch (const CLI::ValidationError& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return exit_bad_flags;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "usage error: " << ex.what() << '\n';
    return exit_bad_flags;
  } catch (const IoError& ex) {
    std::cerr << "io error: " << ex.what() << '\n';
    return exit_io_failure;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return exit_internal;
  }
}
