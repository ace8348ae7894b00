// hb: generate point sets, solve the budgeted Hausdorff hull problem, query the decider,
// verify against the reference solvers and benchmark operation counts.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "hb/canonical_values.hpp"
#include "hb/generators.hpp"
#include "hb/hausdorff_metrics.hpp"
#include "hb/instance_io.hpp"
#include "hb/records.hpp"
#include "hb/reference_oracles.hpp"
#include "hb/search_engine.hpp"
#include "hb/svg.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 2, kMismatch = 3, kInvariant = 4, kFallback = 5 };

struct EngineOptions {
  std::size_t k = 1;
  std::uint64_t seed = 0;
  std::uint32_t c = 4;
  std::uint32_t cap = 8;
  std::optional<double> t;
  bool instrument = false;
  bool inject_fault = false;

  hb::TuningParams params() const {
    hb::TuningParams p;
    p.sample_constant = c;
    p.stage3_cap_constant = cap;
    p.t_override = t;
    p.instrumentation = instrument;
    p.inject_fault = inject_fault;
    return p;
  }
};

void add_engine_flags(CLI::App* cmd, EngineOptions& o) {
  cmd->add_option("--k", o.k, "subset budget")->required()->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "random seed")->envname("HB_SEED");
  cmd->add_option("--c", o.c, "sample constant")->check(CLI::PositiveNumber);
  cmd->add_option("--cap", o.cap, "peeling iteration cap constant")->check(CLI::PositiveNumber);
  cmd->add_option("--t", o.t, "override for t")->check(CLI::PositiveNumber);
  cmd->add_flag("--instrument", o.instrument, "check interval invariants with extra decider calls");
  cmd->add_flag("--inject-fault", o.inject_fault, "corrupt the reported optimum (harness self-test)");
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::size_t> input_lines(const hb::PointSet& P, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> out;
  for (std::size_t i : subset) out.push_back(P.input_position(i));
  return out;
}

// ---------------------------------------------------------------------------------------

int cmd_gen(const std::string& shape_name, std::size_t n, std::int64_t bound, std::uint64_t seed,
            const std::string& output) {
  const auto shape = hb::parse_shape(shape_name);
  if (!shape) {
    std::cerr << "unknown shape '" << shape_name << "'\n";
    return kUsage;
  }
  const hb::InstanceFile inst = hb::generate(*shape, n, bound, seed);
  if (output.empty() || output == "-") {
    hb::write_instance(std::cout, inst);
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    hb::write_instance(out, inst);
  }
  return kOk;
}

int cmd_solve(const std::string& path, const EngineOptions& o, const std::string& svg_path, const std::string& format,
              bool verify) {
  const hb::InstanceFile inst = hb::read_instance(path);
  hb::SearchEngine engine(hb::to_point_set(inst));
  const hb::TuningParams params = o.params();
  hb::ResultRecord record =
      hb::make_record(hb::instance_digest(inst), engine.points(), o.k, o.seed, params, engine.solve(o.k, params, o.seed));
  int code = record.solution.stats.fallback ? kFallback : kOk;
  if (verify) {
    const hb::OracleReport base = hb::baseline_solve(engine.decider(), engine.index(), o.k);
    const bool ok = base.ropt_sq == record.solution.ropt_sq;
    record.verification = ok ? "baseline-agrees" : "baseline-mismatch";
    if (!ok) code = kMismatch;
  }
  if (!svg_path.empty()) {
    std::ofstream svg(svg_path);
    if (!svg) throw std::runtime_error("cannot write " + svg_path);
    hb::write_svg(svg, engine.points(), record.solution.subset);
  }
  if (format == "csv") {
    std::cout << hb::csv_header() << '\n' << hb::to_csv_row(record, inst.name, 0, 0, 0) << '\n';
  } else {
    std::cout << hb::to_json_line(record) << '\n';
  }
  return code;
}

int cmd_decide(const std::string& path, std::size_t k, const std::string& value, const std::string& mode) {
  const hb::InstanceFile inst = hb::read_instance(path);
  const hb::PointSet P = hb::to_point_set(inst);
  hb::SquaredDistance v;
  try {
    v = hb::SquaredDistance::parse(value);
  } catch (const std::exception& e) {
    std::cerr << "bad --value '" << value << "': " << e.what() << '\n';
    return kUsage;
  }
  const hb::Threshold t{v, mode == "open" ? hb::ThresholdMode::Open : hb::ThresholdMode::Closed};
  const hb::DeciderVerdict verdict = hb::SweepDecider(P).decide(t, k);
  nlohmann::ordered_json j;
  j["digest"] = hb::instance_digest(inst);
  j["k"] = k;
  j["value_sq"] = {{"num", v.numerator().str()}, {"den", v.denominator().str()}};
  j["mode"] = hb::to_string(t.mode);
  j["verdict"] = verdict.feasible ? "feasible" : "exceeds";
  if (verdict.feasible) {
    j["kopt"] = verdict.kopt;
    j["subset"] = verdict.subset;
    j["input_lines"] = input_lines(P, verdict.subset);
  }
  std::cout << j.dump() << '\n';
  return kOk;
}

struct VerifyOptions {
  std::string file;
  std::string shape = "uniform-disk";
  std::size_t n = 10;
  std::int64_t bound = 50;
  std::size_t k_min = 1;
  std::size_t k_max = 5;
  std::size_t seeds = 10;
  std::uint64_t seed_base = 1;
};

int cmd_verify(const VerifyOptions& v, const EngineOptions& o) {
  const auto shape = hb::parse_shape(v.shape);
  if (!shape) {
    std::cerr << "unknown shape '" << v.shape << "'\n";
    return kUsage;
  }
  std::size_t runs = 0, mismatches = 0, violations = 0, fallbacks = 0;
  std::vector<std::size_t> peel_counts;
  for (std::size_t s = 0; s < v.seeds; ++s) {
    const std::uint64_t seed = v.seed_base + s;
    const hb::InstanceFile inst = v.file.empty() ? hb::generate(*shape, v.n, v.bound, seed) : hb::read_instance(v.file);
    hb::SearchEngine engine(hb::to_point_set(inst));
    const hb::PointSet& P = engine.points();
    std::optional<hb::CanonicalTable> table;
    if (P.size() >= 2 && P.size() <= 1000) table.emplace(P, engine.index());
    for (std::size_t k = v.k_min; k <= std::min(v.k_max, P.size()); ++k) {
      ++runs;
      std::ostringstream line;
      line << "seed=" << seed << " n=" << P.size() << " k=" << k;
      try {
        const hb::TuningParams params = o.params();
        const hb::Solution sol = engine.solve(k, params, seed);
        const hb::OracleReport base = hb::baseline_solve(engine.decider(), engine.index(), k);
        bool ok = base.ropt_sq == sol.ropt_sq;
        line << " ropt_sq=" << sol.ropt_sq << " baseline=" << (ok ? "ok" : "MISMATCH");
        if (P.size() <= hb::kBruteSolveMaxPoints) {
          const bool brute_ok = hb::brute_solve(P, k).ropt_sq == sol.ropt_sq;
          line << " brute=" << (brute_ok ? "ok" : "MISMATCH");
          ok = ok && brute_ok;
        }
        if (!ok) ++mismatches;

        bool sound = true;
        const hb::RunStats& st = sol.stats;
        const bool subset_ok = !sol.subset.empty() && sol.subset.size() <= k &&
                               hb::hausdorff_sq(P, sol.subset).value_sq == sol.ropt_sq;
        line << " subset=" << (subset_ok ? "ok" : "FAIL");
        sound = sound && subset_ok;
        if (table && !sol.ropt_sq.is_zero()) {
          const bool member = table->contains(sol.ropt_sq);
          line << " canonical=" << (member ? "ok" : "FAIL");
          sound = sound && member;
        }
        const double pairs = static_cast<double>(P.size()) * (P.size() - 1) / 2;
        const std::size_t stage1_budget = 2 * static_cast<std::size_t>(std::ceil(std::log2(std::max(pairs, 1.0)))) + 2;
        const bool budget_ok = st.stage_calls[1] <= stage1_budget && st.stage_calls[3] <= 4 * st.peel_iterations + 2;
        line << " budgets=" << (budget_ok ? "ok" : "FAIL") << " X=" << st.peel_iterations;
        sound = sound && budget_ok;
        if (!sound) ++violations;
        if (st.fallback) {
          ++fallbacks;
          line << " fallback";
        }
        if (st.finished_in != hb::Stage::Shortcut) peel_counts.push_back(st.peel_iterations);
      } catch (const hb::InvariantViolation& e) {
        ++violations;
        line << " INVARIANT " << e.what();
      }
      std::cout << line.str() << '\n';
    }
  }
  std::sort(peel_counts.begin(), peel_counts.end());
  std::cout << "verify: runs=" << runs << " mismatches=" << mismatches << " invariant_violations=" << violations
            << " fallbacks=" << fallbacks;
  if (!peel_counts.empty())
    std::cout << " X_median=" << peel_counts[peel_counts.size() / 2] << " X_max=" << peel_counts.back();
  std::cout << '\n';
  if (mismatches) return kMismatch;
  if (violations) return kInvariant;
  if (fallbacks) return kFallback;
  return kOk;
}

struct BenchOptions {
  std::vector<std::size_t> sizes{250, 500, 1000, 2000};
  std::string shape = "uniform-disk";
  std::int64_t bound = hb::kDefaultCoordBound;
  std::size_t seeds = 3;
  std::uint64_t seed_base = 1;
  bool baseline = false;
};

int cmd_bench(const BenchOptions& b, const EngineOptions& o) {
  const auto shape = hb::parse_shape(b.shape);
  if (!shape) {
    std::cerr << "unknown shape '" << b.shape << "'\n";
    return kUsage;
  }
  std::cout << hb::csv_header() << '\n';
  std::map<std::size_t, std::vector<double>> stage23, base_calls, canonical;
  bool any_fallback = false;
  for (std::size_t n : b.sizes) {
    for (std::size_t s = 0; s < b.seeds; ++s) {
      const std::uint64_t seed = b.seed_base + s;
      const hb::InstanceFile inst = hb::generate(*shape, n, b.bound, seed);
      hb::SearchEngine engine(hb::to_point_set(inst));
      const hb::TuningParams params = o.params();
      const hb::ResultRecord rec = hb::make_record(hb::instance_digest(inst), engine.points(), o.k, seed, params,
                                                   engine.solve(o.k, params, seed));
      const hb::RunStats& st = rec.solution.stats;
      any_fallback = any_fallback || st.fallback;
      stage23[n].push_back(static_cast<double>(st.stage_calls[2] + st.stage_calls[3]));
      std::size_t calls = 0, size = 0;
      double secs = 0;
      if (b.baseline) {
        const auto start = std::chrono::steady_clock::now();
        const hb::OracleReport base = hb::baseline_solve(engine.decider(), engine.index(), o.k);
        secs = seconds_since(start);
        calls = base.decide_calls;
        size = base.canonical_size;
        base_calls[n].push_back(static_cast<double>(calls));
        canonical[n].push_back(static_cast<double>(size));
      }
      std::cout << hb::to_csv_row(rec, b.shape, calls, size, secs) << '\n' << std::flush;
    }
  }
  auto report = [&](const char* label, const std::map<std::size_t, std::vector<double>>& series) {
    if (series.size() < 2) return;
    std::vector<double> xs, ys;
    for (const auto& [n, values] : series) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(hb::median(values) + 1);
    }
    std::cout << "# slope " << label << " " << hb::loglog_slope(xs, ys) << '\n';
  };
  report("stage23_calls", stage23);
  report("baseline_calls", base_calls);
  report("canonical_size", canonical);
  return any_fallback ? kFallback : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Budgeted Hausdorff convex-hull subset selection"};
  app.require_subcommand(1);

  std::string shape = "uniform-disk", output, file, svg, format = "json", value, mode = "closed";
  std::size_t gen_n = 100;
  std::int64_t gen_bound = hb::kDefaultCoordBound;
  std::uint64_t gen_seed = 0;
  bool verify_solution = false;
  EngineOptions engine_opts;
  VerifyOptions verify_opts;
  BenchOptions bench_opts;

  auto* gen = app.add_subcommand("gen", "write a random point file");
  gen->add_option("--shape", shape, "uniform-disk | grid | convex | clustered");
  gen->add_option("--n", gen_n, "number of points")->check(CLI::PositiveNumber);
  gen->add_option("--bound", gen_bound, "coordinates lie in [-bound, bound]");
  gen->add_option("--seed", gen_seed, "random seed")->envname("HB_SEED");
  gen->add_option("-o,--output", output, "output path (default stdout)");

  auto* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("file", file, "point file")->required();
  add_engine_flags(solve, engine_opts);
  solve->add_option("--svg", svg, "write a drawing of the solution");
  solve->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  solve->add_flag("--verify", verify_solution, "compare against the baseline solver");

  auto* decide = app.add_subcommand("decide", "run the decider at one threshold");
  std::size_t decide_k = 1;
  decide->add_option("file", file, "point file")->required();
  decide->add_option("--k", decide_k, "subset budget")->required()->check(CLI::PositiveNumber);
  decide->add_option("--value", value, "squared threshold, a or a/b")->required();
  decide->add_option("--mode", mode, "closed | open")->check(CLI::IsMember({"closed", "open"}));

  auto* verify = app.add_subcommand("verify", "compare the search against the reference solvers");
  verify->add_option("file", verify_opts.file, "point file (default: generate per seed)");
  verify->add_option("--shape", verify_opts.shape, "generator shape");
  verify->add_option("--n", verify_opts.n, "generated size")->check(CLI::PositiveNumber);
  verify->add_option("--bound", verify_opts.bound, "generated coordinate bound");
  verify->add_option("--k-min", verify_opts.k_min, "smallest k")->check(CLI::PositiveNumber);
  verify->add_option("--k-max", verify_opts.k_max, "largest k")->check(CLI::PositiveNumber);
  verify->add_option("--seeds", verify_opts.seeds, "number of seeds");
  verify->add_option("--seed-base", verify_opts.seed_base, "first seed");
  engine_opts.k = 1;
  verify->add_flag("--instrument", engine_opts.instrument, "check interval invariants");
  verify->add_flag("--inject-fault", engine_opts.inject_fault, "corrupt every optimum (harness self-test)");
  verify->add_option("--c", engine_opts.c, "sample constant")->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "operation counts and wall times as CSV");
  bench->add_option("--sizes", bench_opts.sizes, "point counts")->delimiter(',');
  bench->add_option("--k", engine_opts.k, "subset budget")->check(CLI::PositiveNumber);
  bench->add_option("--seeds", bench_opts.seeds, "seeds per size");
  bench->add_option("--seed-base", bench_opts.seed_base, "first seed");
  bench->add_option("--shape", bench_opts.shape, "generator shape");
  bench->add_option("--bound", bench_opts.bound, "generated coordinate bound");
  bench->add_option("--c", engine_opts.c, "sample constant")->check(CLI::PositiveNumber);
  bench->add_flag("--baseline", bench_opts.baseline, "also time the canonical-set baseline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(shape, gen_n, gen_bound, gen_seed, output);
    if (*solve) return cmd_solve(file, engine_opts, svg, format, verify_solution);
    if (*decide) return cmd_decide(file, decide_k, value, mode);
    if (*verify) return cmd_verify(verify_opts, engine_opts);
    if (*bench) return cmd_bench(bench_opts, engine_opts);
  } catch (const hb::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const hb::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
