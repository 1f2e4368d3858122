#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "tautilt/tautilt.hpp"

namespace {

using namespace tautilt;

constexpr int kExitPass = 0;
constexpr int kExitVerification = 2;
constexpr int kExitCutoff = 3;
constexpr int kExitInput = 4;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::shared_ptr<const Algebra> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str());
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const InvalidRelation& e) {
    throw InputError(e.what());
  } catch (const NotAdmissible& e) {
    throw InputError(e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

std::string matrix_text(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntVector row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    s += (i ? "," : "") + to_string(row);
  }
  return s + "]";
}

void print_summary(const AnalysisReport& r) {
  std::cout << "status: " << to_string(r.status()) << "\n";
  std::cout << "pairs: " << r.pairs.size() << "\n";
  std::cout << "edges: " << r.edges.size() << "\n";
  std::cout << "tau-tilting finite: " << (r.tau_tilting_finite() ? "yes" : "undetermined") << "\n";
}

void print_checks(const AnalysisReport& r) {
  for (const auto& [name, t] : r.checks)
    std::cout << "check " << name << ": " << t.passed << " passed, " << t.failed << " failed\n";
  for (const auto& f : r.failures) std::cerr << "FAIL " << f << "\n";
}

int report_exit(const AnalysisReport& r) { return r.all_passed() ? kExitPass : kExitVerification; }

struct Common {
  std::string algebra;
  std::size_t max_pairs = ExchangeLimits{}.max_pairs;
  int max_depth = ExchangeLimits{}.max_depth;

  void add(CLI::App* cmd, bool depth = true) {
    cmd->add_option("algebra", algebra, "algebra JSON file")->required();
    cmd->add_option("--max-pairs", max_pairs, "stop after this many pairs")->check(CLI::PositiveNumber);
    if (depth) cmd->add_option("--max-depth", max_depth, "stop at this BFS depth")->check(CLI::PositiveNumber);
  }
  ExchangeLimits limits() const { return {max_pairs, max_depth}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tau-tilting pairs, g/c-matrices and bricks of finite-dimensional algebras"};
  app.require_subcommand(1);
  std::uint64_t seed = 0;
  unsigned threads = default_threads();
  app.add_option("--seed", seed, "seed for randomized sampling");
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

  Common check_opt, pairs_opt, cvec_opt, bricks_opt, bt1_opt, verify_opt;
  auto* check = app.add_subcommand("check", "validate an algebra and print its invariants");
  check->add_option("algebra", check_opt.algebra, "algebra JSON file")->required();

  std::string dot_out, pairs_json;
  auto* pairs = app.add_subcommand("pairs", "enumerate the exchange graph");
  pairs_opt.add(pairs);
  pairs->add_option("--dot", dot_out, "write the graph in DOT format");
  pairs->add_option("--json", pairs_json, "write the report as JSON ('-' for stdout)");

  std::string cvec_json;
  auto* cvectors = app.add_subcommand("cvectors", "G- and C-matrices of every pair");
  cvec_opt.add(cvectors);
  cvectors->add_option("--json", cvec_json, "write the report as JSON ('-' for stdout)");

  std::string bricks_json;
  auto* bricks = app.add_subcommand("bricks", "brick certificates for every pair and slot");
  bricks_opt.add(bricks);
  bricks->add_option("--json", bricks_json, "write the report as JSON ('-' for stdout)");

  std::int64_t target = 0;
  auto* bt1 = app.add_subcommand("bt1", "search c-vectors for a brick of a given length");
  bt1_opt.add(bt1);
  bt1->add_option("--target-length", target, "composition length to reach")->required()->check(CLI::PositiveNumber);

  int samples = 100;
  auto* verify = app.add_subcommand("verify", "run every invariant check");
  verify_opt.add(verify);
  verify->add_option("--samples", samples, "random Hom/tau formula samples")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*check) {
      auto alg = load(check_opt.algebra);
      auto d = digest(*alg);
      std::cout << "vertices: " << alg->num_vertices() << "\n";
      std::cout << "arrows: " << alg->num_arrows() << "\n";
      std::cout << "dim A: " << alg->dim() << "\n";
      std::cout << "D_A: " << to_string(d.delta) << "\n";
      IntVector p;
      for (int i = 0; i < alg->num_vertices(); ++i) p.push_back(projective(*alg, i).total_dim());
      std::cout << "dim P(i): " << to_string(p) << "\n";
      return kExitPass;
    }
    if (*pairs) {
      auto alg = load(pairs_opt.algebra);
      AnalysisOptions opt{pairs_opt.limits(), threads, !dot_out.empty(), 0, seed};
      auto r = analyze(*alg, opt);
      if (!dot_out.empty()) write_text(dot_out, export_dot(r));
      if (!pairs_json.empty()) write_text(pairs_json, export_json(r));
      if (pairs_json != "-") print_summary(r);
      return report_exit(r);
    }
    if (*cvectors) {
      auto alg = load(cvec_opt.algebra);
      AnalysisOptions opt{cvec_opt.limits(), threads, false, 0, seed};
      auto r = analyze(*alg, opt);
      if (!cvec_json.empty()) write_text(cvec_json, export_json(r));
      if (cvec_json != "-") {
        for (const auto& p : r.pairs)
          std::cout << pair_label(p.key) << "  G=" << matrix_text(p.g) << " C=" << matrix_text(p.c) << "\n";
        print_summary(r);
        print_checks(r);
      }
      return report_exit(r);
    }
    if (*bricks) {
      auto alg = load(bricks_opt.algebra);
      AnalysisOptions opt{bricks_opt.limits(), threads, true, 0, seed};
      auto r = analyze(*alg, opt);
      if (!bricks_json.empty()) write_text(bricks_json, export_json(r));
      if (bricks_json != "-") {
        for (const auto& p : r.pairs) {
          std::cout << pair_label(p.key) << " ";
          for (const auto& b : p.bricks)
            std::cout << " " << to_string(b.dimension_vector) << "(m=" << b.multiplier << ")";
          std::cout << "\n";
        }
        print_summary(r);
        if (r.max_brick_length) std::cout << "max brick length: " << *r.max_brick_length << "\n";
        print_checks(r);
      }
      return report_exit(r);
    }
    if (*bt1) {
      auto alg = load(bt1_opt.algebra);
      LongBrickResult r;
      try {
        r = find_long_brick(*alg, target, bt1_opt.limits(), threads);
      } catch (const CutoffReached& e) {
        std::cout << e.what() << "\n";
        return kExitCutoff;
      }
      if (r.outcome == LongBrickOutcome::kNotFound) {
        std::cout << "not found: graph closed after " << r.pairs_explored << " pairs, no brick of length >= " << target
                  << "\n";
        return kExitPass;
      }
      std::cout << "brick: " << to_string(r.certificate->dimension_vector) << "\n";
      std::cout << "length: " << r.length << "\n";
      std::cout << "c-vector: " << to_string(r.c_vector) << "\n";
      std::cout << "pair: " << pair_label(r.pair) << " slot " << r.slot + 1 << "\n";
      std::cout << "pairs explored: " << r.pairs_explored << "\n";
      return kExitPass;
    }
    if (*verify) {
      auto alg = load(verify_opt.algebra);
      AnalysisOptions opt{verify_opt.limits(), threads, true, samples, seed};
      auto r = analyze(*alg, opt);
      print_summary(r);
      print_checks(r);
      return report_exit(r);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const CutoffReached& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCutoff;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  }
  return kExitInput;
}
