// pfactor: command-line front end.
//
//   pfactor verify < graphs.g6            one JSON verdict per graph6 line
//   pfactor thresholds --n 25 --delta 1
//   pfactor extremal --n 7 --s 1
//   pfactor rho | factor | witness        per-graph wrappers, same input forms
//   pfactor audit --max-n 200 --max-delta 12 --seed 42
//
// Shared flags may also come from a TOML-style file (--config, or the path in
// PFACTOR_CONFIG) with one "key = value" per line.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pfactor/cli.hpp"

namespace {

int with_input(const std::string& path, const std::function<int(std::istream&)>& body) {
  if (path.empty() || path == "-") return body(std::cin);
  std::ifstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << '\n';
    return pfactor::cli::kInputError;
  }
  return body(f);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace pfactor;
  CLI::App app{"{P3,P4,P5}-factor verification toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML-style file mirroring the flags")->envname("PFACTOR_CONFIG");

  cli::Options opt;
  std::string format = "jsonl";
  std::int64_t timeout_ms = 0;
  std::string input;
  app.add_option("--tol", opt.tol, "power-iteration tolerance")->capture_default_str();
  app.add_option("--max-exact-n", opt.max_exact_n, "largest order for the exact factor decider")->capture_default_str();
  app.add_option("--max-witness-n", opt.max_witness_n, "largest order for the witness search")->capture_default_str();
  app.add_option("--seed", opt.seed, "seed for sampling")->capture_default_str();
  app.add_option("--format", format, "jsonl or csv")->check(CLI::IsMember({"jsonl", "csv"}))->capture_default_str();
  app.add_option("--timeout-ms", timeout_ms, "per-graph limit for the factor decider (0: none)");
  app.add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
  app.add_flag("--edge-list", opt.edge_list, "read an edge list (first line n, then 'u v' lines)");
  app.add_flag("--lenient-padding", opt.lenient_padding, "accept nonzero graph6 padding bits");
  app.add_option("--input,-i", input, "input file (default stdin)");

  auto* verify = app.add_subcommand("verify", "per-graph verdicts")->fallthrough();
  auto* rho = app.add_subcommand("rho", "spectral radius")->fallthrough();
  auto* factor = app.add_subcommand("factor", "exact factor decision with certificate")->fallthrough();
  auto* witness = app.add_subcommand("witness", "smallest set with too many isolated vertices")->fallthrough();

  std::int64_t n = 0, delta = 0, s = 0;
  auto* thr = app.add_subcommand("thresholds", "size and spectral thresholds")->fallthrough();
  thr->add_option("--n", n)->required();
  thr->add_option("--delta", delta)->required();
  auto* ext = app.add_subcommand("extremal", "extremal graph K_s v (K_q u pK_1)")->fallthrough();
  ext->add_option("--n", n)->required();
  ext->add_option("--s", s)->required();

  cli::AuditOptions aopt;
  std::string summary;
  auto* aud = app.add_subcommand("audit", "identity audit, sampling and remark probes")->fallthrough();
  aud->add_option("--max-n", aopt.grid.max_n)->capture_default_str();
  aud->add_option("--max-delta", aopt.grid.max_delta)->capture_default_str();
  aud->add_option("--rho-max-n", aopt.grid.rho_max_n)->capture_default_str();
  aud->add_option("--trials", aopt.trials)->capture_default_str();
  aud->add_option("--remark-max-n", aopt.remark_max_n)->capture_default_str();
  aud->add_option("--summary", summary, "also write the claim x status CSV here");

  CLI11_PARSE(app, argc, argv);
  opt.format = format == "csv" ? cli::Format::Csv : cli::Format::Jsonl;
  if (timeout_ms > 0) opt.timeout_ms = timeout_ms;
  if (!summary.empty()) aopt.summary_path = summary;

  try {
    if (*verify) return with_input(input, [&](std::istream& in) { return cli::cmd_verify(in, std::cout, opt); });
    if (*rho) return with_input(input, [&](std::istream& in) { return cli::cmd_rho(in, std::cout, opt); });
    if (*factor) return with_input(input, [&](std::istream& in) { return cli::cmd_factor(in, std::cout, opt); });
    if (*witness) return with_input(input, [&](std::istream& in) { return cli::cmd_witness(in, std::cout, opt); });
    if (*thr) return cli::cmd_thresholds(n, delta, std::cout, opt);
    if (*ext) return cli::cmd_extremal(n, s, std::cout, opt);
    if (*aud) return cli::cmd_audit(aopt, std::cout, std::cerr, opt);
  } catch (const Error& e) {
    std::cerr << code_name(e.code()) << ": " << e.what() << '\n';
    return cli::kInputError;
  }
  return cli::kClean;
}
