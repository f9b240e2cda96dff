#include "randlp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <iostream>

#include "randlp/bench.hpp"
#include "randlp/errors.hpp"
#include "randlp/generator.hpp"
#include "randlp/instance_io.hpp"
#include "randlp/svg.hpp"
#include "randlp/validator.hpp"

namespace randlp {

namespace {

void add_shape_options(CLI::App& cmd, GeneratorParams& p) {
  cmd.add_option("--alpha", p.alpha, "hypercube edge length")->capture_default_str();
  cmd.add_option("--theta", p.theta, "large hypersphere radius")->capture_default_str();
  cmd.add_option("--rho", p.rho, "small hypersphere radius")->capture_default_str();
  cmd.add_option("--lmax", p.l_max, "near-parallelism bound")->capture_default_str();
  cmd.add_option("--smin", p.s_min, "near-concurrence bound")->capture_default_str();
  cmd.add_option("--amax", p.a_max, "coefficient magnitude bound")->capture_default_str();
  cmd.add_option("--bmax", p.b_max, "constant-term magnitude bound")->capture_default_str();
  cmd.add_option("--max-attempts", p.max_attempts, "draws allowed per accepted inequality")
      ->capture_default_str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to '" + path + "' failed");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random feasible bounded LP instance generator"};
  app.require_subcommand(1);

  GeneratorParams gen_params;
  std::string engine = "seq";
  std::string gen_out = "-";
  std::string stats_out;
  auto* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--n", gen_params.n, "dimension")->capture_default_str();
  gen->add_option("--d", gen_params.d, "number of random inequalities")->capture_default_str();
  add_shape_options(*gen, gen_params);
  gen->add_option("--seed", gen_params.seed, "RNG seed")->capture_default_str();
  gen->add_option("--workers", gen_params.workers, "worker threads of the parallel engine")
      ->capture_default_str();
  gen->add_option("--engine", engine, "seq or par")
      ->check(CLI::IsMember({"seq", "par"}))
      ->capture_default_str();
  gen->add_option("--out", gen_out, "instance file, '-' for stdout")->capture_default_str();
  gen->add_option("--stats-out", stats_out, "write rejection statistics here");

  GeneratorParams file_params;
  std::string validate_in;
  auto* validate = app.add_subcommand("validate", "re-check an instance file");
  validate->add_option("--in", validate_in, "instance file")->required();
  validate->add_option("--rho", file_params.rho, "small hypersphere radius")->capture_default_str();
  validate->add_option("--lmax", file_params.l_max, "near-parallelism bound")->capture_default_str();
  validate->add_option("--smin", file_params.s_min, "near-concurrence bound")->capture_default_str();

  std::string render_in;
  std::string render_out = "-";
  auto* render = app.add_subcommand("render", "draw a two-dimensional instance as SVG");
  render->add_option("--in", render_in, "instance file")->required();
  render->add_option("--out", render_out, "SVG file, '-' for stdout")->capture_default_str();
  render->add_option("--rho", file_params.rho, "small hypersphere radius")->capture_default_str();

  GeneratorParams bench_params;
  bench_params.n = 1000;
  bench_params.d = 200;
  std::vector<std::int64_t> workers_list{1, 2, 4, 8};
  BenchOptions bench_options;
  auto* bench = app.add_subcommand("bench", "time the parallel engine across worker counts");
  bench->add_option("--n", bench_params.n, "dimension")->capture_default_str();
  bench->add_option("--d", bench_params.d, "number of random inequalities")->capture_default_str();
  bench->add_option("--seed", bench_params.seed, "RNG seed")->capture_default_str();
  bench->add_option("--workers-list", workers_list, "comma-separated worker counts")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--repetitions", bench_options.repetitions, "runs per worker count")
      ->capture_default_str();
  bench->add_flag("--validate", bench_options.validate_outputs, "validate every output");
  add_shape_options(*bench, bench_params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*gen) {
      const auto violations = validate_params(gen_params);
      if (!violations.empty()) {
        err << "error: invalid parameters: " << describe(violations) << '\n';
        return 2;
      }
      GenerationResult result = engine == "par" ? generate_parallel(gen_params)
                                                : generate_sequential(gen_params);
      write_text(gen_out, instance_to_string(result.instance), out);
      if (!stats_out.empty()) {
        std::ostringstream os;
        write_stats(result.stats, os);
        write_text(stats_out, os.str(), out);
      }
      return 0;
    }
    if (*validate) {
      const LPInstance inst = read_instance(std::filesystem::path(validate_in), file_params);
      const ValidationReport report = validate_instance(inst);
      (report.ok ? out : err) << to_string(report);
      return report.ok ? 0 : 1;
    }
    if (*render) {
      const LPInstance inst = read_instance(std::filesystem::path(render_in), file_params);
      write_text(render_out, render_svg(inst), out);
      return 0;
    }
    if (*bench) {
      const auto results = run_benchmark(bench_params, workers_list, bench_options);
      write_bench_table(results, out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("randlp");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace randlp
