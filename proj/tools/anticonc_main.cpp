#include "anticonc/export.hpp"
#include "anticonc/io.hpp"
#include "anticonc/parallel.hpp"
#include "anticonc/verify_suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;
constexpr int kExitExhausted = 4;
constexpr int kExitSuiteFailed = 1;

struct OutputTarget {
  std::string path;  // empty = stdout

  template <class Fn>
  void write(Fn&& fn) const {
    if (path.empty()) {
      fn(std::cout);
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    fn(out);
  }
};

int run_dist(const std::string& set_path, unsigned ell, const std::string& mode,
             const std::string& format, const OutputTarget& out) {
  anticonc::GroundSet set = anticonc::read_ground_set_file(set_path);
  if (mode == "float") {
    anticonc::FloatDist d = anticonc::float_iid_sum(set, ell);
    out.write([&](std::ostream& os) {
      if (format == "csv")
        anticonc::dist_to_csv(os, d);
      else
        os << anticonc::dist_to_json(d).dump(2) << '\n';
    });
  } else {
    anticonc::ExactDist d = anticonc::exact_iid_sum(set, ell);
    out.write([&](std::ostream& os) {
      if (format == "csv")
        anticonc::dist_to_csv(os, d);
      else
        os << anticonc::dist_to_json(d).dump(2) << '\n';
    });
  }
  return kExitOk;
}

int run_lo(const std::string& set_path, unsigned ell, const std::string& format,
           const OutputTarget& out) {
  anticonc::GroundSet set = anticonc::read_ground_set_file(set_path);
  anticonc::SubsetSumTable table = anticonc::build_table(set, ell);
  if (format == "csv") {
    out.write([&](std::ostream& os) { anticonc::table_to_csv(os, table); });
    return kExitOk;
  }
  auto [x, prob] = anticonc::lo_max_prob(table, ell);
  anticonc::Json j;
  j["ell"] = ell;
  j["n"] = set.size();
  anticonc::Json max = anticonc::rational_to_json(prob);
  max["x"] = x.str();
  j["max_point"] = std::move(max);
  out.write([&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return kExitOk;
}

int run_constants(int threads, const OutputTarget& out) {
  anticonc::ConstantsReport report = anticonc::solve_constants(threads);
  out.write([&](std::ostream& os) {
    os << anticonc::constants_to_json(report).dump(2) << '\n';
  });
  return kExitOk;
}

int run_verify(const std::string& suite, unsigned n_max, std::uint64_t seed,
               const OutputTarget& out) {
  anticonc::SuiteCaps caps;
  caps.n_max = n_max;
  caps.seed = seed;
  anticonc::SuiteResult result = anticonc::run_suite(suite, caps);
  out.write([&](std::ostream& os) { anticonc::suite_to_csv(os, result); });
  return result.passed ? kExitOk : kExitSuiteFailed;
}

int run_sequence(const std::string& set_path, const std::string& graph_path,
                 const anticonc::SequencingParams& params, const OutputTarget& out) {
  anticonc::GroundSet set = anticonc::read_ground_set_file(set_path);
  anticonc::ConstraintGraph graph = anticonc::read_graph_file(graph_path);
  if (set.contains(0)) {
    std::cerr << "error: the set contains 0; a sequencing needs consecutive partial sums "
                 "to differ, so 0 cannot be an element\n";
    return kExitInput;
  }
  anticonc::SequencingResult result = anticonc::randomized_sequencing(set, graph, params);
  out.write([&](std::ostream& os) {
    os << anticonc::sequencing_to_json(result).dump(2) << '\n';
  });
  return result.success ? kExitOk : kExitExhausted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact distributions of sums over Z and Z_p, subset-sum counting, "
               "optimized anticoncentration constants, and a graph-constrained "
               "sequencing solver"};
  app.require_subcommand(1);

  std::string mode = "exact";
  std::string format = "json";
  std::uint64_t seed = anticonc::kDefaultSeed;
  int threads = 1;
  OutputTarget out;
  app.add_option("--mode", mode, "arithmetic mode: exact|float")
      ->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--format", format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "PRNG seed (fixed default keeps runs reproducible)");
  app.add_option("--threads", threads, "worker thread cap (results are thread-count independent)");
  app.add_option("--out", out.path, "output path (default: stdout)");

  std::string set_path, graph_path, suite;
  unsigned ell = 1;
  unsigned n_max = 0;
  anticonc::SequencingParams seq_params;

  CLI::App* dist = app.add_subcommand("dist", "distribution of an iid ell-fold sum");
  dist->add_option("--set", set_path, "ground set file")->required();
  dist->add_option("--ell", ell, "number of summands")->required();

  CLI::App* lo = app.add_subcommand("lo", "fixed-cardinality subset-sum peak / count table");
  lo->add_option("--set", set_path, "ground set file")->required();
  lo->add_option("--ell", ell, "subset cardinality")->required();

  app.add_subcommand("constants", "solve the C1/C2/C3/nu constant chain");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("--suite", suite, "bounds2|bounds3|lo|fourier|be")->required();
  verify->add_option("--nmax", n_max, "size cap (0 = suite default)");

  CLI::App* sequence = app.add_subcommand("sequence", "find a graph-constrained ordering");
  sequence->add_option("--set", set_path, "ground set file (0 must not be an element)")
      ->required();
  sequence->add_option("--graph", graph_path, "constraint graph file")->required();
  sequence->add_option("--t", seq_params.t, "zero-sum-free order (0 = auto)");
  sequence->add_option("--m", seq_params.m, "reservoir size (0 = auto)");
  sequence->add_option("--trials", seq_params.max_trials, "random completion budget");

  // Global flags remain usable after the subcommand name.
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; }))
    sub->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    if (dist->parsed()) return run_dist(set_path, ell, mode, format, out);
    if (lo->parsed()) return run_lo(set_path, ell, format, out);
    if (app.get_subcommand("constants")->parsed()) return run_constants(threads, out);
    if (verify->parsed()) return run_verify(suite, n_max, seed, out);
    if (sequence->parsed()) {
      seq_params.seed = seed;
      seq_params.threads = threads;
      return run_sequence(set_path, graph_path, seq_params, out);
    }
  } catch (const anticonc::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}
