// Command line front end: word normalization, diagram evaluation,
// oriented-subgroup membership, planar graphs, moment tables and the
// invariant verification suites.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fpgroups/completion.hpp"
#include "fpgroups/errors.hpp"
#include "fpgroups/moments.hpp"
#include "fpgroups/oriented.hpp"
#include "fpgroups/planar_graph.hpp"
#include "fpgroups/rewriting.hpp"
#include "fpgroups/tree_diagram.hpp"
#include "fpgroups/verify.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
  int p = 2;
  std::string word_text;
  std::string state = "gamma";
  std::string engine;
  std::string format = "csv";
  std::string output;
  std::string suite = "all";
  std::string n_range = "1..1";
  std::size_t d = 2;
  unsigned workers = 1;
  std::uint64_t budget = 50'000'000;
  std::uint64_t seed = 1;
  bool oriented = false;
  bool dot = false;
  bool json = false;
  bool tau_bounds = false;
};

std::vector<std::size_t> parse_range(const std::string& text) {
  std::size_t lo, hi;
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      lo = hi = std::stoull(text);
    } else {
      lo = std::stoull(text.substr(0, dots));
      hi = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("bad n range: " + text);
  }
  if (lo < 1 || hi < lo) throw CLI::ValidationError("bad n range: " + text);
  std::vector<std::size_t> values;
  for (std::size_t n = lo; n <= hi; ++n) values.push_back(n);
  return values;
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw std::runtime_error("cannot open " + opt.output);
  out << payload;
}

int run_normalize(const Options& opt) {
  fpgroups::Word w = fpgroups::parse_word(opt.word_text, opt.p);
  emit(opt, fpgroups::to_json(fpgroups::normalize(w)));
  return 0;
}

int run_eval(const Options& opt) {
  fpgroups::Word w = fpgroups::parse_word(opt.word_text, opt.p);
  fpgroups::TreeDiagram g = fpgroups::eval_word(w);
  emit(opt, opt.json ? fpgroups::to_json(g) : fpgroups::serialize_diagram(g));
  return 0;
}

int run_member(const Options& opt) {
  if (!opt.oriented) throw CLI::ValidationError("member requires --oriented");
  fpgroups::Word w = fpgroups::parse_word(opt.word_text, 2);
  int graph_route = fpgroups::theta(w);
  bool parity_route = fpgroups::parity_membership(fpgroups::eval_word(w));
  if ((graph_route == 1) != parity_route) {
    std::cerr << "membership tests disagree on " << fpgroups::format_word(w)
              << "\n";
    return kExitVerificationFailure;
  }
  emit(opt, std::to_string(graph_route));
  return 0;
}

int run_graph(const Options& opt) {
  fpgroups::Word w = fpgroups::parse_word(opt.word_text, opt.p);
  fpgroups::TreeDiagram g =
      opt.p == 2 ? fpgroups::eval_word(fpgroups::iota_word(w))
                 : fpgroups::eval_word(w);
  emit(opt, fpgroups::to_dot(fpgroups::planar_graph(g)));
  return 0;
}

int run_moments(const Options& opt) {
  fpgroups::MomentRequest req;
  req.p = opt.p;
  req.d = opt.d;
  req.n_values = parse_range(opt.n_range);
  req.state = opt.state == "theta" ? fpgroups::State::theta
                                   : fpgroups::State::gamma;
  if (opt.state == "theta" && req.p != 2)
    throw CLI::ValidationError("theta moments force p = 2");

  if (opt.tau_bounds) {
    if (req.state != fpgroups::State::gamma)
      throw CLI::ValidationError("tau bound reports apply to the gamma state");
    std::string payload = "[";
    bool first = true;
    for (std::size_t n : req.n_values) {
      fpgroups::TauHistogram hist = fpgroups::tau_histogram(
          req.d, n, req.p, fpgroups::Engine::mitm, {opt.budget});
      if (!first) payload += ",\n";
      first = false;
      payload += fpgroups::to_json(fpgroups::bound_report(hist));
    }
    payload += "]";
    emit(opt, payload);
    return 0;
  }
  std::string engine = opt.engine;
  if (engine.empty()) engine = req.state == fpgroups::State::gamma ? "mitm" : "brute";
  req.engine = engine == "mitm" ? fpgroups::Engine::mitm : fpgroups::Engine::brute;
  req.budget.max_words = opt.budget;
  req.workers = opt.workers;

  fpgroups::MomentTable table = fpgroups::moment_table(req);
  emit(opt, opt.format == "json" ? to_json(table) : to_csv(table));
  for (const fpgroups::MomentRow& row : table.rows)
    if (!row.error.empty()) return kExitBudget;
  return 0;
}

int run_verify(const Options& opt) {
  std::vector<fpgroups::CheckResult> checks;
  auto run_suite = [&](const std::string& name) {
    std::vector<fpgroups::CheckResult> suite;
    if (name == "rewrite") suite = fpgroups::verify_rewrite(opt.seed);
    if (name == "trees") suite = fpgroups::verify_trees(opt.seed);
    if (name == "oriented") suite = fpgroups::verify_oriented(opt.seed);
    if (name == "moments") suite = fpgroups::verify_moments(opt.seed);
    checks.insert(checks.end(), suite.begin(), suite.end());
  };
  if (opt.suite == "all") {
    for (const char* name : {"rewrite", "trees", "oriented", "moments"})
      run_suite(name);
  } else {
    run_suite(opt.suite);
  }
  bool all_pass = true;
  for (const fpgroups::CheckResult& check : checks) {
    std::cout << (check.pass ? "[ok]   " : "[FAIL] ") << check.name;
    if (!check.detail.empty()) std::cout << " — " << check.detail;
    std::cout << "\n";
    all_pass = all_pass && check.pass;
  }
  return all_pass ? 0 : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word calculus, tree diagrams and moment enumeration for the "
               "Brown-Thompson groups F_p"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* normalize = app.add_subcommand(
      "normalize", "Rewrite a word to normal form; prints JSON trace");
  normalize->add_option("-p", opt.p, "group parameter")->default_val(2);
  normalize->add_option("word", opt.word_text, "word, e.g. \"x0 x2^-1\"")
      ->required();

  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate a word to its reduced tree diagram");
  eval->add_option("-p", opt.p, "group parameter")->default_val(2);
  eval->add_flag("--json", opt.json, "emit JSON instead of top|bottom text");
  eval->add_option("word", opt.word_text)->required();

  CLI::App* member = app.add_subcommand(
      "member", "Oriented-subgroup membership of an F_2 word (prints 0/1)");
  member->add_flag("--oriented", opt.oriented,
                   "test membership in the oriented subgroup");
  member->add_option("word", opt.word_text)->required();

  CLI::App* graph = app.add_subcommand(
      "graph", "Planar graph of a word (p=2 words are embedded first)");
  graph->add_option("-p", opt.p, "group parameter (2 or 3)")
      ->default_val(2)
      ->check(CLI::IsMember({2, 3}));
  graph->add_flag("--dot", opt.dot, "emit DOT (the only format)");
  graph->add_option("word", opt.word_text)->required();

  CLI::App* moments = app.add_subcommand(
      "moments", "Moment tables for the trace gamma or the oriented state");
  moments->add_option("--state", opt.state)
      ->check(CLI::IsMember({"gamma", "theta"}))
      ->default_val("gamma");
  moments->add_option("-p", opt.p, "group parameter")->default_val(2);
  moments->add_option("-d", opt.d, "moment order")->required();
  moments->add_option("-n", opt.n_range, "inclusive generator range A..B")
      ->required();
  moments->add_option("--engine", opt.engine,
                      "brute or mitm (mitm folds over elements for theta)")
      ->check(CLI::IsMember({"brute", "mitm"}));
  moments->add_option("--format", opt.format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->default_val("csv");
  moments->add_option("--workers", opt.workers)->default_val(1);
  moments->add_option("--budget", opt.budget, "word budget per cell");
  moments->add_flag("--tau-bounds", opt.tau_bounds,
                    "emit per-permutation count bound reports (gamma only)");
  moments->add_option("-o,--output", opt.output, "output path (default stdout)");

  CLI::App* verify = app.add_subcommand(
      "verify", "Run the invariant suites; nonzero exit on any violation");
  verify->add_option("--suite", opt.suite)
      ->check(CLI::IsMember({"rewrite", "trees", "oriented", "moments", "all"}))
      ->default_val("all");
  verify->add_option("--seed", opt.seed, "seed for randomized checks")
      ->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (normalize->parsed()) return run_normalize(opt);
    if (eval->parsed()) return run_eval(opt);
    if (member->parsed()) return run_member(opt);
    if (graph->parsed()) return run_graph(opt);
    if (moments->parsed()) return run_moments(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fpgroups::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const fpgroups::ParseError& e) {
    std::cerr << "error: " << e.what() << " (token " << e.position << ")\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
