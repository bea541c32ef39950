// Copyright 2026 The distbal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distbal/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "distbal/error.hpp"
#include "distbal/families.hpp"
#include "distbal/io.hpp"
#include "distbal/oracle.hpp"
#include "distbal/products.hpp"

namespace distbal {
namespace {

using Clock = std::chrono::steady_clock;

const std::map<std::string, GraphFormat> kFormats{
    {"auto", GraphFormat::Auto}, {"g6", GraphFormat::Graph6}, {"edgelist", GraphFormat::EdgeList}};

/// Input problems (I/O, parse, family parameters) map to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& path, GraphFormat format) {
  const auto text = read_input(path);
  try {
    return parse_graph_text(text, format);
  } catch (const Error& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit_graph(const Graph& g, const std::string& out, GraphFormat format, CliStreams& io) {
  if (format == GraphFormat::Auto) format = GraphFormat::Graph6;
  const auto text = write_graph_text(g, format);
  if (out.empty() || out == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f || !(f << text)) throw InputError("cannot write " + out);
}

int cmd_generate(const std::string& name, const std::vector<std::size_t>& params,
                 const std::string& out, GraphFormat format, CliStreams& io) {
  Graph g;
  try {
    g = gen_named(parse_family(name, params));
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  emit_graph(g, out, format, io);
  // Summary goes to stderr when the graph itself is on stdout.
  std::ostream& summary = (out.empty() || out == "-") ? io.err : io.out;
  summary << "n=" << g.order() << " m=" << g.size() << '\n';
  return exit_code::kOk;
}

int cmd_check(const std::string& in, GraphFormat format, bool as_json, unsigned threads,
              CliStreams& io) {
  const auto g = load_graph(in, format);
  ReportDocument doc;
  doc.source = in;
  const auto start = Clock::now();
  try {
    doc.report = full_report(g, threads);
  } catch (const Error& e) {
    throw InputError(in + ": " + e.what());
  }
  doc.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (as_json) {
    io.out << to_json(doc).dump(2) << '\n';
  } else {
    io.out << format_report(doc, io.color);
  }
  return exit_code::kOk;
}

int cmd_product(const std::string& op, const std::string& in_a, const std::string& in_b,
                const std::string& out, GraphFormat format, CliStreams& io) {
  const auto a = load_graph(in_a, format);
  Graph result;
  try {
    if (op == "line") {
      if (!in_b.empty()) throw InputError("line takes a single input");
      result = line_graph(a);
    } else {
      if (in_b.empty()) throw InputError(op + " needs two inputs");
      const auto b = load_graph(in_b, format);
      result = op == "cartesian" ? cartesian(a, b) : lexicographic(a, b);
    }
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  emit_graph(result, out, format == GraphFormat::Auto ? GraphFormat::Graph6 : format, io);
  std::ostream& summary = (out.empty() || out == "-") ? io.err : io.out;
  summary << "n=" << result.order() << " m=" << result.size() << '\n';
  return exit_code::kOk;
}

int cmd_oracle_diff(std::size_t count, std::size_t max_n, std::uint64_t seed, CliStreams& io) {
  if (count < 1 || max_n < 2) throw CLI::ValidationError("need --count >= 1 and --max-n >= 2");
  const auto outcome = oracle::run_differential(count, max_n, seed);
  io.out << "graphs=" << outcome.graphs << " disagreements=" << outcome.disagreements << '\n';
  if (!outcome.first) return exit_code::kOk;

  const auto& d = *outcome.first;
  auto show = [](const oracle::Classification& c) {
    std::ostringstream os;
    os << "db=" << c.is_db << " ndb=" << c.is_ndb << " gamma="
       << (c.gamma ? std::to_string(*c.gamma) : "none") << " sdb=" << c.is_sdb;
    return os.str();
  };
  io.out << "first disagreement: index=" << d.index << " seed=" << d.entry.seed << " n=" << d.entry.n
         << " p=" << d.entry.p.num << "/" << d.entry.p.den << '\n'
         << "graph6: " << write_graph6(d.graph) << '\n'
         << "oracle: " << show(d.expected) << '\n'
         << "fast:   " << show(d.actual) << '\n';
  return exit_code::kDifferential;
}

int cmd_bench(const std::string& family, const std::vector<std::size_t>& ks, CliStreams& io) {
  if (family != "gamma_k") throw CLI::ValidationError("bench supports only gamma_k");
  if (std::any_of(ks.begin(), ks.end(), [](std::size_t k) { return k < 3; })) {
    throw InputError("bench needs k >= 3");
  }
  const auto rows = run_bench(ks);
  io.out << std::setw(6) << "k" << std::setw(8) << "n" << std::setw(8) << "m" << std::setw(14)
         << "seconds" << std::setw(14) << "ns/(m*n)" << '\n';
  for (const auto& r : rows) {
    io.out << std::setw(6) << r.k << std::setw(8) << r.n << std::setw(8) << r.m << std::setw(14)
           << std::setprecision(6) << std::fixed << r.seconds << std::setw(14)
           << std::setprecision(4) << r.ns_per_mn() << '\n';
    io.out.unsetf(std::ios::fixed);
  }
  return exit_code::kOk;
}

}  // namespace

std::vector<BenchRow> run_bench(std::span<const std::size_t> k_values, double min_total_seconds) {
  std::vector<BenchRow> rows;
  for (std::size_t k : k_values) {
    const auto g = gen_gamma_k(k);
    BenchRow row{k, g.order(), g.size(), 0.0};
    double best = 0.0;
    double total = 0.0;
    int runs = 0;
    while (runs < 3 || total < min_total_seconds) {
      const auto start = Clock::now();
      const auto r = full_report(g, 1);
      const double s = std::chrono::duration<double>(Clock::now() - start).count();
      if (!r.is_ndb) throw Error(ErrorCode::GenerationFailed, "gamma_k lost its balance");
      best = runs == 0 ? s : std::min(best, s);
      total += s;
      ++runs;
    }
    row.seconds = best;
    rows.push_back(row);
  }
  return rows;
}

int run_cli(const std::vector<std::string>& args, CliStreams io) {
  CLI::App app{"distbal: distance-balance analysis of graphs", "distbal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  std::string format_name = "auto";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_name, "graph format: auto, g6 or edgelist")
        ->check(CLI::IsMember({"auto", "g6", "edgelist"}));
  };

  auto* gen = app.add_subcommand("generate", "write a graph from a named family");
  std::string family;
  std::vector<std::size_t> params;
  std::string out;
  gen->add_option("family", family, "family name")->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--out,-o", out, "output path (default stdout)");
  add_format(gen);

  auto* check = app.add_subcommand("check", "classify a graph");
  std::string input;
  bool as_json = false;
  unsigned threads = 0;
  check->add_option("input", input, "graph file, or - for stdin")->required();
  check->add_flag("--json", as_json, "emit a JSON report");
  check->add_option("--threads", threads, "BFS worker threads (0 = all cores)");
  add_format(check);

  auto* product = app.add_subcommand("product", "build a product or line graph");
  std::string op;
  std::string in_a;
  std::string in_b;
  product->add_option("op", op, "cartesian, lex or line")
      ->required()
      ->check(CLI::IsMember({"cartesian", "lex", "line"}));
  product->add_option("a", in_a, "first input")->required();
  product->add_option("b", in_b, "second input (not for line)");
  product->add_option("--out,-o", out, "output path (default stdout)");
  add_format(product);

  auto* diff = app.add_subcommand("oracle-diff", "compare fast recognition with the reference");
  std::size_t count = 1000;
  std::size_t max_n = 10;
  std::uint64_t seed = 42;
  diff->add_option("--count", count, "number of random graphs");
  diff->add_option("--max-n", max_n, "largest order drawn");
  diff->add_option("--seed", seed, "base seed");

  auto* bench = app.add_subcommand("bench", "time recognition on gamma_k");
  std::string bench_family;
  std::vector<std::size_t> ks;
  bench->add_option("family", bench_family, "only gamma_k")->required();
  bench->add_option("k", ks, "k values");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    io.out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForVersion& e) {
    io.out << kToolVersion << '\n';
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    io.err << "distbal: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  const auto format = kFormats.at(format_name);
  try {
    if (*gen) return cmd_generate(family, params, out, format, io);
    if (*check) return cmd_check(input, format, as_json, threads, io);
    if (*product) return cmd_product(op, in_a, in_b, out, format, io);
    if (*diff) return cmd_oracle_diff(count, max_n, seed, io);
    if (*bench) return cmd_bench(bench_family, ks, io);
  } catch (const CLI::ValidationError& e) {
    io.err << "distbal: " << e.what() << '\n';
    return exit_code::kUsage;
  } catch (const InputError& e) {
    io.err << "distbal: " << e.what() << '\n';
    return exit_code::kInput;
  } catch (const Error& e) {
    io.err << "distbal: " << e.what() << '\n';
    return exit_code::kInput;
  }
  return exit_code::kUsage;
}

}  // namespace distbal
