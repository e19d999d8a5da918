// padtrop <subcommand> [input.json|-] [--out F] [--svg F] [--dot F] [--seed S] [--samples N]
//         [--window LO HI] [--threads T]

#include "padtrop/job.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// Writes through a sibling temporary file and a rename.
void write_atomically(const std::string& path, const std::string& text) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
    out << text;
    if (!out.flush()) throw std::runtime_error(fmt::format("cannot write {}", tmp.string()));
  }
  std::filesystem::rename(tmp, target);
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(fmt::format("cannot read {}", path));
    ss << in.rdbuf();
  }
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace padtrop;
  CLI::App app{"p-adic and tropical curve computations"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  JobOptions options;
  std::string out_path, svg_path, dot_path;
  std::uint64_t seed = 0;
  std::uint64_t max_nodes = options.max_nodes_per_type;
  app.add_option("--out", out_path, "write the JSON result here instead of stdout");
  app.add_option("--svg", svg_path, "write a figure of the result");
  app.add_option("--dot", dot_path, "write the dendrogram in Graphviz DOT");
  auto* seed_opt = app.add_option("--seed", seed, "seed for stochastic subcommands");
  std::int64_t samples = 0;
  std::vector<long> window;
  auto* samples_opt = app.add_option("--samples", samples, "Monte-Carlo sample count for amplitude");
  auto* window_opt = app.add_option("--window", window, "valuation window v_min v_max for amplitude")->expected(2);
  app.add_option("--threads", options.threads, "worker threads (results do not depend on it)")->check(CLI::Range(1u, 1024u));
  app.add_option("--max-nodes", max_nodes, "search nodes allowed per combinatorial type in direct counts");

  const std::vector<std::pair<const char*, const char*>> subs = {
      {"dendrogram", "tree spanned by points of P^1(Q_p)"},
      {"tropicalize", "tropical coordinates of points of P^2(Q_p)"},
      {"count", "number of plane curves of degree d and genus g through points"},
      {"mumford", "certified count for points tropicalised through a line configuration"},
      {"amplitude", "Monte-Carlo p-adic tachyon amplitude"},
      {"cells", "cells of M_{0,n}^trop and the tropical-limit measure"},
      {"measure", "discrete measure of a reduction chain of P^1"}};
  std::string input_path = "-";
  for (const auto& [name, help] : subs) app.add_subcommand(name, help)->add_option("input", input_path, "JSON input (- for stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << error_body("invalid_input", e.what()).dump(2) << "\n";
    return static_cast<int>(ExitCode::InvalidInput);
  }
  if (!out_path.empty()) options.out_path = out_path;
  if (!svg_path.empty()) options.svg_path = svg_path;
  if (!dot_path.empty()) options.dot_path = dot_path;
  if (seed_opt->count() > 0) options.seed = seed;
  if (samples_opt->count() > 0) options.samples = samples;
  if (window_opt->count() > 0) options.window = {{window[0], window[1]}};
  options.max_nodes_per_type = max_nodes;

  JobResult res;
  try {
    const Subcommand sub = parse_subcommand(app.get_subcommands().front()->get_name());
    res = run_job(sub, read_input(input_path), options);
    if (res.exit_code != ExitCode::InvalidInput && res.exit_code != ExitCode::ResourceLimit) {
      if (options.svg_path) {
        if (res.svg)
          write_atomically(*options.svg_path, *res.svg);
        else
          std::cerr << "warning: this result has no figure; --svg ignored\n";
      }
      if (options.dot_path) {
        if (res.dot)
          write_atomically(*options.dot_path, *res.dot);
        else
          std::cerr << "warning: only dendrograms have a DOT form; --dot ignored\n";
      }
    }
    if (res.body.contains("warnings"))
      for (const auto& w : res.body["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
    const std::string text = res.body.dump(2) + "\n";
    if (options.out_path)
      write_atomically(*options.out_path, text);
    else
      std::cout << text;
  } catch (const std::exception& e) {
    std::cout << error_body("io", e.what()).dump(2) << "\n";
    return 1;
  }
  return static_cast<int>(res.exit_code);
}
