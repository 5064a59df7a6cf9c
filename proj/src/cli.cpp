#include "vasun/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "vasun/analyses.hpp"
#include "vasun/klmst.hpp"
#include "vasun/predicates.hpp"

namespace vasun::cli {

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::int64_t max_token = Limits{}.max_token;
  std::size_t max_worklist = Limits{}.max_worklist;
  std::size_t max_basis = Limits{}.max_basis;
  std::string out;
  std::string dot;
  std::size_t maxlen = 6;
  std::string net;
  std::string net2;
  std::string nfa;
  std::string ca;
  std::string predicate;
  std::string word;
  std::vector<std::string> factors;
};

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path);
  if (!f) throw PreconditionError("cannot write '" + path.string() + "'");
  f << text;
}

Word parse_word(const std::string& s) {
  if (s.find(',') == std::string::npos) return word(s);
  Word w;
  std::stringstream in(s);
  for (std::string x; std::getline(in, x, ',');)
    if (!x.empty()) w.push_back(x);
  return w;
}

json words_json(const std::set<Word, LengthLex>& words) {
  json a = json::array();
  for (const auto& w : words) a.push_back(to_string(w));
  return a;
}

class Runner {
 public:
  Runner(const Options& o, Usage& usage) : o_(o) {
    limits_.max_token = o.max_token;
    limits_.max_worklist = o.max_worklist;
    limits_.max_basis = o.max_basis;
    limits_.usage = &usage;
  }

  nets::LabeledPetriNet net(const std::string& path) const { return nets::load_net(path); }

  json decompose() {
    auto n = net(o_.net);
    auto d = klmst::decompose(n, limits_);
    json files = json::array();
    json dumps = json::array();
    for (std::size_t i = 0; i < d.perfect.size(); ++i) {
      auto text = klmst::dump(n, d.perfect[i]);
      if (o_.out.empty()) {
        dumps.push_back(text);
      } else {
        auto path = fs::path(o_.out) / ("mgts_" + std::to_string(i) + ".txt");
        write_file(path, text);
        files.push_back(path.string());
      }
    }
    json r{{"verdict", "decomposed"}, {"mgts", d.perfect.size()}, {"files", files}};
    if (o_.out.empty()) r["dumps"] = dumps;
    return r;
  }

  json approx() {
    auto n = net(o_.net);
    auto a = klmst::approximate(n, limits_);
    json files = json::array();
    if (!o_.out.empty()) {
      std::ostringstream index;
      for (std::size_t i = 0; i < a.rows.size(); ++i) {
        index << "row " << i;
        for (std::size_t j = 0; j < a.rows[i].size(); ++j) {
          auto name = "r" + std::to_string(i) + "_" + std::to_string(j) + ".nfa";
          write_file(fs::path(o_.out) / name, automata::print_nfa(a.rows[i][j]));
          files.push_back((fs::path(o_.out) / name).string());
          index << " " << name;
        }
        index << "\n";
      }
      write_file(fs::path(o_.out) / "index.txt", index.str());
      files.push_back((fs::path(o_.out) / "index.txt").string());
    }
    if (!o_.dot.empty()) {
      write_file(o_.dot, automata::to_dot(a.union_nfa(), "approximation"));
      files.push_back(o_.dot);
    }
    return {{"verdict", "approximated"}, {"rows", a.rows.size()}, {"width", a.width}, {"files", files}};
  }

  json bounded() {
    auto v = analyses::decide_bounded(net(o_.net), limits_);
    json r{{"verdict", v.bounded ? "bounded" : "unbounded"}};
    if (v.bounded) r["witness"] = v.witness.expression();
    return r;
  }

  json dclosure() {
    auto d = analyses::downward_closure(net(o_.net), limits_);
    json r{{"verdict", "computed"}, {"states", d.state_count()}};
    json files = json::array();
    if (!o_.out.empty()) {
      write_file(o_.out, automata::print_nfa(d));
      files.push_back(o_.out);
    } else {
      r["nfa"] = automata::print_nfa(d);
    }
    if (!o_.dot.empty()) {
      write_file(o_.dot, automata::to_dot(d, "closure"));
      files.push_back(o_.dot);
    }
    r["files"] = files;
    return r;
  }

  json predicate() {
    auto p = predicates::from_registry(o_.predicate);
    bool holds = predicates::lift(p, net(o_.net), limits_);
    return {{"verdict", holds ? "holds" : "fails"}, {"predicate", p.name}, {"dimension", p.dimension}};
  }

  json factors() {
    auto r = analyses::decide_factor_unbounded(net(o_.net), automata::load_nfa(o_.nfa), limits_);
    json j{{"verdict", r.unbounded ? "unbounded" : "bounded"}};
    if (!r.unbounded) j["bound"] = r.bound;
    return j;
  }

  json universal() {
    bool u = analyses::decide_factor_universal(net(o_.net), automata::load_nfa(o_.nfa), limits_);
    return {{"verdict", u ? "universal" : "not_universal"}};
  }

  json counting() {
    auto r = analyses::decide_ca_bounded(net(o_.net), analyses::load_ca(o_.ca), limits_);
    json j{{"verdict", r.unbounded ? "unbounded" : "bounded"}};
    if (!r.unbounded) j["bound"] = r.bound;
    return j;
  }

  json separable(int& code) {
    auto inst = analyses::separability_reduce(net(o_.net), net(o_.net2), limits_);
    auto v = analyses::recog_separability_oracle(inst, limits_);
    json words = json::array();
    for (const auto& w : inst.words) words.push_back(to_string(w));
    json j{{"verdict", analyses::to_string(v.kind)}, {"reason", v.reason}, {"words", words}};
    if (v.kind == analyses::SeparabilityVerdict::Kind::separable) {
      json set = json::array();
      for (const auto& x : v.finite_set) set.push_back(x);
      j["separator"] = {{"finite_set", set}, {"complement", v.complement}};
      if (v.congruence)
        j["congruence"] = {{"threshold", v.congruence->threshold}, {"modulus", v.congruence->modulus}};
    }
    if (v.kind == analyses::SeparabilityVerdict::Kind::unknown) code = kUnknown;
    return j;
  }

  json oracle_enum(int& code) {
    auto e = nets::enumerate_language(net(o_.net), o_.maxlen, o_.max_token);
    if (e.token_cap_hit) code = kUnknown;
    return {{"verdict", e.token_cap_hit ? "partial" : "enumerated"}, {"words", words_json(e.words)},
            {"token_cap_hit", e.token_cap_hit}};
  }

  json oracle_factors(int& code) {
    std::vector<Word> tuple;
    for (const auto& f : o_.factors) tuple.push_back(f == "-" ? Word{} : parse_word(f));
    auto r = nets::oracle_factors(net(o_.net), tuple, o_.max_token);
    json j;
    switch (r.status) {
      case nets::SearchStatus::found:
        j = {{"verdict", "found"}, {"witness", to_string(r.witness)}};
        break;
      case nets::SearchStatus::not_found:
        j = {{"verdict", "not_found"}};
        break;
      case nets::SearchStatus::budget_exhausted:
        j = {{"verdict", "unknown"}, {"reason", "budget"}};
        code = kUnknown;
        break;
    }
    return j;
  }

  json oracle_fcount() {
    auto n = nets::f_count(parse_word(o_.word), automata::load_nfa(o_.nfa));
    return {{"verdict", "counted"}, {"count", n}};
  }

  json budget(const Usage& usage, double ms) const {
    return {{"max_token", limits_.max_token},
            {"max_worklist", limits_.max_worklist},
            {"max_basis", limits_.max_basis},
            {"mgts_processed", usage.mgts_processed},
            {"refinements", usage.refinements},
            {"milliseconds", static_cast<std::int64_t>(ms)}};
  }

 private:
  const Options& o_;
  Limits limits_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Unboundedness analyses for labeled Petri net languages", "vasun"};
  app.require_subcommand(1);
  auto budgets = [&](CLI::App* c) {
    c->add_option("--max-token", o.max_token, "Per-place token cap in searches")->check(CLI::PositiveNumber);
    c->add_option("--max-worklist", o.max_worklist, "MGTS processed by the decomposition")->check(CLI::PositiveNumber);
    c->add_option("--max-basis", o.max_basis, "Solver basis and frontier size")->check(CLI::PositiveNumber);
  };
  auto with_net = [&](CLI::App* c) {
    c->add_option("net", o.net, "Net file")->required()->check(CLI::ExistingFile);
    budgets(c);
    return c;
  };
  auto* decompose = with_net(app.add_subcommand("decompose", "Decompose into perfect MGTS"));
  decompose->add_option("--out", o.out, "Directory for MGTS dumps");
  auto* approx = with_net(app.add_subcommand("approx", "Regular approximation rows"));
  approx->add_option("--out", o.out, "Directory for row automata and index.txt");
  approx->add_option("--dot", o.dot, "DOT file for the union automaton");
  auto* bounded = with_net(app.add_subcommand("bounded", "Decide boundedness"));
  auto* dclosure = with_net(app.add_subcommand("dclosure", "Downward closure"));
  dclosure->add_option("--out", o.out, "File for the closure automaton");
  dclosure->add_option("--dot", o.dot, "DOT file for the closure automaton");
  auto* predicate = with_net(app.add_subcommand("predicate", "Evaluate an unboundedness predicate"));
  predicate->add_option("name", o.predicate, "inf, notb, sup:a,b, nof:<nfa>, fu:<nfa>, word:<w>, count:<nfa>,...")
      ->required();
  auto* factors = with_net(app.add_subcommand("factors", "Is the number of K factors unbounded"));
  factors->add_option("nfa", o.nfa, "Automaton for K")->required()->check(CLI::ExistingFile);
  auto* universal = with_net(app.add_subcommand("universal", "Is K* included in the factors"));
  universal->add_option("nfa", o.nfa, "Automaton for K")->required()->check(CLI::ExistingFile);
  auto* counting = with_net(app.add_subcommand("counting", "Counting automaton boundedness"));
  counting->add_option("ca", o.ca, "Counting automaton file")->required()->check(CLI::ExistingFile);
  auto* separable = with_net(app.add_subcommand("separable", "Separability by a bounded regular language"));
  separable->add_option("net2", o.net2, "Second net")->required()->check(CLI::ExistingFile);

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* o_enum = with_net(oracle->add_subcommand("enum", "Enumerate the language"));
  o_enum->add_option("--maxlen", o.maxlen, "Maximal word length");
  auto* o_factors = with_net(oracle->add_subcommand("factors", "Search a word with the given factors"));
  o_factors->add_option("factors", o.factors, "Factors in order; '-' is the empty word");
  auto* o_fcount = oracle->add_subcommand("fcount", "Count disjoint factors of a word in K");
  o_fcount->add_option("word", o.word, "Word")->required();
  o_fcount->add_option("nfa", o.nfa, "Automaton for K")->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kDecided;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kInputError;
  }

  Usage usage;
  Runner run(o, usage);
  int code = kDecided;
  auto start = std::chrono::steady_clock::now();
  json report;
  try {
    if (decompose->parsed()) report = run.decompose();
    else if (approx->parsed()) report = run.approx();
    else if (bounded->parsed()) report = run.bounded();
    else if (dclosure->parsed()) report = run.dclosure();
    else if (predicate->parsed()) report = run.predicate();
    else if (factors->parsed()) report = run.factors();
    else if (universal->parsed()) report = run.universal();
    else if (counting->parsed()) report = run.counting();
    else if (separable->parsed()) report = run.separable(code);
    else if (o_enum->parsed()) report = run.oracle_enum(code);
    else if (o_factors->parsed()) report = run.oracle_factors(code);
    else if (o_fcount->parsed()) report = run.oracle_fcount();
  } catch (const BudgetError& e) {
    report = {{"verdict", "unknown"}, {"reason", "budget"}, {"error", e.what()}};
    code = kUnknown;
  } catch (const ParseError& e) {
    report = {{"verdict", "error"}, {"error", e.what()}, {"line", e.line()}};
    code = kInputError;
  } catch (const std::exception& e) {
    // Structural and precondition violations are input errors.
    report = {{"verdict", "error"}, {"error", e.what()}};
    code = kInputError;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["budget_used"] = run.budget(usage, ms);
  out << report.dump() << "\n";
  if (code == kInputError) err << "error: " << report["error"].get<std::string>() << "\n";
  return code;
}

}  // namespace vasun::cli
