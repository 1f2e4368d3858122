// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clique_oracle.hpp"
#include "tautilt/tautilt.hpp"
#include "test_util.hpp"

using namespace tautilt;
using namespace tautilt::testing;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr std::size_t kKroneckerPairs = 100;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    detail += (detail.empty() ? "" : "; ") + why;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

IntMatrix identity(std::size_t n) {
  IntVector ones(n, 1);
  return diagonal(ones);
}

struct CorpusEntry {
  std::string name;
  std::shared_ptr<const Algebra> alg;
  AnalysisReport report;
};

const std::vector<std::string> kCorpus{"a1", "a2", "a3", "d4", "loop_x2", "comm_square", "kronecker"};

std::vector<CorpusEntry>& corpus() {
  static std::vector<CorpusEntry> c = [] {
    std::vector<CorpusEntry> out;
    for (const auto& name : kCorpus) {
      CorpusEntry e{name, load_algebra(name), {}};
      AnalysisOptions opt;
      if (name == "kronecker") opt.limits.max_pairs = kKroneckerPairs;
      opt.ar_samples = 100;
      opt.seed = kSeed;
      e.report = analyze(*e.alg, opt);
      out.push_back(std::move(e));
    }
    return out;
  }();
  return c;
}

Outcome enumeration_counts() {
  Outcome o;
  const std::map<std::string, std::pair<std::size_t, std::vector<int>>> expected{
      {"a1", {2, {1}}}, {"a2", {5, {1, 1}}}, {"a3", {14, {1, 1, 1}}}, {"d4", {50, {1, 2, 1, 1}}}};
  std::string counts;
  double slowest = 0;
  for (const auto& [name, exp] : expected) {
    auto alg = load_algebra(name);
    auto t0 = std::chrono::steady_clock::now();
    auto g = exchange_graph(*alg);
    double dt = seconds_since(t0);
    slowest = std::max(slowest, dt);
    std::size_t oracle = oracle::count_pairs(oracle::read_quiver(algebra_path(name)), exp.second);
    counts += (counts.empty() ? "" : ", ") + name + " " + std::to_string(g.nodes.size());
    if (!g.closed()) o.fail(name + " not closed");
    if (g.nodes.size() != exp.first) o.fail(name + " has " + std::to_string(g.nodes.size()) + " pairs");
    if (oracle != exp.first) o.fail(name + " oracle counts " + std::to_string(oracle));
    if (dt >= 30) o.fail(name + " took " + fixed(dt) + " s");
    if (name == "a2") {
      std::map<PairKey, int> degree;
      for (const auto& e : g.edges) ++degree[e.a], ++degree[e.b];
      bool cycle = g.edges.size() == 5 && degree.size() == 5;
      for (const auto& [k, d] : degree) cycle = cycle && d == 2;
      if (!cycle) o.fail("a2 graph is not a 5-cycle");
    }
  }
  if (o.pass) o.detail = counts + "; oracle agrees; slowest " + fixed(slowest) + " s";
  return o;
}

Outcome c_is_inverse_transpose() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& e : corpus())
    for (const auto& p : e.report.pairs) {
      const auto n = p.g.rows();
      if (!(p.g.transpose() * p.c == identity(n)) || !(p.c * p.g.transpose() == identity(n)))
        o.fail(e.name + " " + to_string(p.key));
      ++checked;
    }
  if (o.pass) o.detail = std::to_string(checked) + " pairs";
  return o;
}

Outcome sign_coherence() {
  Outcome o;
  std::size_t columns = 0;
  for (const auto& e : corpus())
    for (const auto& p : e.report.pairs)
      for (std::size_t s = 0; s < p.c.cols(); ++s) {
        IntVector c = p.c.column(s);
        bool nonzero = false;
        for (auto x : c) nonzero = nonzero || x != 0;
        if (!nonzero || !is_sign_coherent(c)) o.fail(e.name + " " + to_string(p.key) + " column " + to_string(c));
        ++columns;
      }
  if (o.pass) o.detail = std::to_string(columns) + " c-vectors";
  return o;
}

Outcome brick_certificates() {
  Outcome o;
  std::size_t certs = 0;
  for (const auto& e : corpus()) {
    for (const auto& f : e.report.failures)
      if (f.rfind("brick_certificates", 0) == 0 || f.rfind("x_matrix", 0) == 0) o.fail(e.name + ": " + f);
    const IntVector delta = d_vector(*e.alg);
    IntMatrix d = diagonal(delta);
    for (const auto& p : e.report.pairs) {
      const std::size_t n = p.g.cols();
      if (p.bricks.size() != n) {
        o.fail(e.name + " " + to_string(p.key) + " has " + std::to_string(p.bricks.size()) + " certificates");
        continue;
      }
      std::vector<IntVector> cols;
      IntVector ms;
      for (const auto& b : p.bricks) {
        const auto& ev = b.evidence;
        if (!ev.hom_from_modules_zero || !ev.hom_to_tau_zero || !ev.hom_from_projectives_zero || !ev.relation_holds ||
            b.multiplier == 0 || b.brick.is_zero())
          o.fail(e.name + " " + to_string(p.key) + " slot " + std::to_string(b.slot + 1));
        for (std::size_t i = 0; i < delta.size(); ++i)
          if (delta[i] * b.dimension_vector[i] != b.multiplier * b.c_vector[i])
            o.fail(e.name + " " + to_string(p.key) + " D[B] != m c");
        if (b.c_vector != p.c.column(b.slot)) o.fail(e.name + " " + to_string(p.key) + " wrong c-vector");
        cols.push_back(b.dimension_vector);
        ms.push_back(b.multiplier);
        ++certs;
      }
      IntMatrix x = IntMatrix::from_columns(cols);
      if (!(p.g.transpose() * d * x == diagonal(ms))) o.fail(e.name + " " + to_string(p.key) + " G^T D X");
      if (!(d * x == p.c * diagonal(ms))) o.fail(e.name + " " + to_string(p.key) + " D X != C D");
    }
  }
  if (o.pass) o.detail = std::to_string(certs) + " certificates";
  return o;
}

Outcome ar_formula() {
  Outcome o;
  std::string counts;
  for (const auto& e : corpus()) {
    CheckTally t;
    for (const auto& [name, tally] : e.report.checks)
      if (name == "ar_formula") t = tally;
    if (t.passed != 100 || t.failed != 0)
      o.fail(e.name + " " + std::to_string(t.passed) + " passed, " + std::to_string(t.failed) + " failed");
  }
  if (o.pass) o.detail = "100 samples on each of " + std::to_string(corpus().size()) + " algebras";
  return o;
}

std::string cli_path() { return TAUTILT_CLI; }

int run(const std::string& cmd, std::string* out = nullptr) {
  std::FILE* p = popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return -1;
  char buf[4096];
  std::string s;
  while (std::size_t k = std::fread(buf, 1, sizeof buf, p)) s.append(buf, k);
  int status = pclose(p);
  if (out) *out = s;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome long_brick() {
  Outcome o;
  auto kr = load_algebra("kronecker");
  ExchangeLimits lim;
  lim.max_pairs = 200;
  auto t0 = std::chrono::steady_clock::now();
  auto r = find_long_brick(*kr, 10, lim);
  double dt = seconds_since(t0);
  if (r.outcome != LongBrickOutcome::kFound) {
    o.fail("kronecker target 10 not found");
  } else {
    if (r.length < 10 || r.certificate->composition_length() < 10) o.fail("brick too short");
    if (!is_brick(r.certificate->brick)) o.fail("not a brick");
    if (!r.certificate->evidence.relation_holds) o.fail("D[B] != m c");
    if (r.pairs_explored > 200) o.fail("explored " + std::to_string(r.pairs_explored) + " pairs");
  }
  if (dt >= 60) o.fail("took " + fixed(dt) + " s");
  auto a3 = find_long_brick(*load_algebra("a3"), 4);
  if (a3.outcome != LongBrickOutcome::kNotFound || a3.pairs_explored != 14) o.fail("a3 target 4 not refuted");
  std::string out;
  int code = run(cli_path() + " bt1 " + algebra_path("kronecker") + " --target-length 10 --max-pairs 200", &out);
  if (code != 0 || out.find("length: ") == std::string::npos) o.fail("CLI kronecker exit " + std::to_string(code));
  code = run(cli_path() + " bt1 " + algebra_path("a3") + " --target-length 4", &out);
  if (code != 0 || out.find("not found") == std::string::npos) o.fail("CLI a3 exit " + std::to_string(code));
  if (o.pass)
    o.detail = "kronecker brick " + to_string(r.certificate->dimension_vector) + " of length " +
               std::to_string(r.length) + " after " + std::to_string(r.pairs_explored) + " pairs in " + fixed(dt) +
               " s; a3 refuted after 14 pairs";
  return o;
}

Outcome tau_spot_checks() {
  Outcome o;
  auto a2 = load_algebra("a2");
  if (!is_isomorphic(tau(simple(*a2, 0)), simple(*a2, 1))) o.fail("a2 tau S(1) != S(2)");
  auto loop = load_algebra("loop_x2");
  if (!is_isomorphic(tau(simple(*loop, 0)), simple(*loop, 0))) o.fail("loop tau S(1) != S(1)");
  std::size_t zeros = 0;
  for (const auto& name : kCorpus) {
    auto alg = load_algebra(name);
    for (int i = 0; i < alg->num_vertices(); ++i, ++zeros)
      if (!tau(projective(*alg, i)).is_zero()) o.fail(name + " tau P(" + std::to_string(i + 1) + ") != 0");
  }
  if (o.pass) o.detail = "a2, loop and " + std::to_string(zeros) + " projectives";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome o;
  auto dir = std::filesystem::temp_directory_path() / ("tautilt_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  const std::string a3 = algebra_path("a3");
  for (const std::string cmd : {"pairs", "bricks"}) {
    std::vector<std::string> outputs;
    for (const auto& [tag, threads] : std::vector<std::pair<std::string, int>>{{"r1", 1}, {"r2", 1}, {"mt", 4}}) {
      auto file = dir / (cmd + "_" + tag + ".json");
      int code = run(cli_path() + " --threads " + std::to_string(threads) + " " + cmd + " " + a3 + " --json " +
                     file.string());
      if (code != 0) o.fail(cmd + " exit " + std::to_string(code));
      outputs.push_back(slurp(file));
    }
    if (outputs[0].empty()) o.fail(cmd + " produced no JSON");
    if (outputs[0] != outputs[1]) o.fail(cmd + " differs between runs");
    if (outputs[0] != outputs[2]) o.fail(cmd + " differs between 1 and 4 threads");
  }
  std::filesystem::remove_all(dir);
  if (o.pass) o.detail = "pairs and bricks on a3, two single-threaded runs and one with 4 threads";
  return o;
}

Outcome mutation_consistency() {
  Outcome o;
  std::size_t graphs = 0, edges = 0;
  for (const auto& e : corpus()) {
    const auto& g = e.report.graph;
    if (!g.closed()) continue;
    ++graphs;
    const std::size_t n = e.alg->num_vertices();
    std::map<PairKey, std::vector<PairKey>> adj;
    for (const auto& ed : g.edges) {
      ++edges;
      if (mutate(g.nodes.at(ed.a), ed.slot_a).key() != ed.b || mutate(g.nodes.at(ed.b), ed.slot_b).key() != ed.a)
        o.fail(e.name + " edge " + to_string(ed.a) + " not involutive");
      std::multiset<IntVector> ka(ed.a.begin(), ed.a.end());
      std::size_t shared = 0;
      for (const auto& gv : ed.b) {
        auto it = ka.find(gv);
        if (it != ka.end()) ka.erase(it), ++shared;
      }
      if (shared != n - 1) o.fail(e.name + " edge shares " + std::to_string(shared) + " summands");
      adj[ed.a].push_back(ed.b);
      adj[ed.b].push_back(ed.a);
    }
    for (const auto& [k, t] : g.nodes) {
      std::set<PairKey> nb(adj[k].begin(), adj[k].end());
      if (adj[k].size() != n || nb.size() != n) o.fail(e.name + " " + to_string(k) + " is not of degree n");
    }
    std::set<PairKey> seen{g.nodes.begin()->first};
    std::vector<PairKey> todo{g.nodes.begin()->first};
    while (!todo.empty()) {
      auto k = todo.back();
      todo.pop_back();
      for (const auto& nb : adj[k])
        if (seen.insert(nb).second) todo.push_back(nb);
    }
    if (seen.size() != g.nodes.size()) o.fail(e.name + " graph is disconnected");
  }
  if (o.pass) o.detail = std::to_string(graphs) + " closed graphs, " + std::to_string(edges) + " edges";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"enumeration counts", enumeration_counts},
      {"C = (G^-1)^T", c_is_inverse_transpose},
      {"sign-coherent nonzero c-vectors", sign_coherence},
      {"verified brick certificates and X-matrix", brick_certificates},
      {"Hom/tau formula on random sums", ar_formula},
      {"long brick search", long_brick},
      {"tau spot checks", tau_spot_checks},
      {"deterministic JSON", determinism},
      {"mutation self-consistency", mutation_consistency},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << ") [" << fixed(seconds_since(t0)) << " s]" << std::endl;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
