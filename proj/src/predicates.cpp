#include "vasun/predicates.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "vasun/klmst.hpp"

namespace vasun::predicates {

using automata::Nfa;

namespace {

void require_no_epsilon(const Nfa& k, const std::string& who) {
  if (automata::accepts(k, {})) throw PreconditionError(who + ": ε must not belong to K");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string part; std::getline(in, part, sep);)
    if (!part.empty()) out.push_back(part);
  return out;
}

Nfa path_language(const Nfa& t, automata::State p, automata::State q) {
  Nfa between = t;
  for (automata::State s = 0; s < t.state_count(); ++s) {
    between.set_initial(s, s == p);
    between.set_final(s, s == q);
  }
  return between;
}

}  // namespace

Predicate predicate_inf() {
  return {1, "inf", [](const Nfa& r) { return !automata::is_finite(r); }};
}

Predicate predicate_not_bounded() {
  return {1, "notb", [](const Nfa& r) { return !automata::is_bounded_regular(r).bounded; }};
}

Predicate predicate_sup(std::vector<Symbol> letters) {
  if (letters.empty()) throw PreconditionError("sup: at least one letter expected");
  std::string name = "sup:";
  for (std::size_t i = 0; i < letters.size(); ++i) name += (i ? "," : "") + letters[i];
  auto n = letters.size();
  return {n, name, [letters = std::move(letters)](const Nfa& r) { return automata::chain_inclusion(letters, r); }};
}

Predicate predicate_nof(Nfa k) {
  require_no_epsilon(k, "nof");
  automata::RegularFactorOracle oracle(std::move(k));
  return {1, "nof", [oracle](const Nfa& r) { return automata::factor_unbounded_regular(r, oracle).unbounded; }};
}

Predicate predicate_fu(Nfa k) {
  automata::RegularFactorOracle oracle(std::move(k));
  return {1, "fu", [oracle](const Nfa& r) {
            // K* always contains ε, which F(∅) lacks.
            if (automata::is_empty(r)) return false;
            return automata::factor_universal_regular(r, oracle);
          }};
}

Predicate predicate_word(Word w) {
  if (w.empty()) throw PreconditionError("word: the word must be nonempty");
  auto n = w.size();
  std::string name = "word:" + to_string(w);
  return {n, name, [w = std::move(w)](const Nfa& r) {
            auto alphabet = automata::merge_alphabets(r.alphabet(), Nfa::literal(w).alphabet());
            return automata::accepts(automata::downward_closure_nfa(automata::with_alphabet(r, alphabet)), w);
          }};
}

automata::BoundResult counting_bound(const Nfa& r, const std::vector<Nfa>& ks) {
  const std::size_t n = ks.size();
  if (n == 0 || n > 16) throw PreconditionError("count: between 1 and 16 languages expected");
  Nfa t = automata::trim(r);
  auto alphabet = t.alphabet();
  for (const auto& k : ks) alphabet = automata::merge_alphabets(alphabet, k.alphabet());
  t = automata::with_alphabet(t, alphabet);

  // ∩_{i ∈ S} K_i for every nonempty S.
  std::vector<Nfa> meets(std::size_t{1} << n, Nfa::universal(alphabet));
  for (std::size_t s = 1; s < meets.size(); ++s) {
    std::size_t low = 0;
    while (!(s >> low & 1)) ++low;
    meets[s] = automata::trim(automata::intersection(meets[s & (s - 1)], automata::with_alphabet(ks[low], alphabet)));
  }

  std::vector<Symbol> letters;
  std::vector<std::vector<std::size_t>> contributions;
  for (std::size_t s = 1; s < meets.size(); ++s) {
    letters.push_back("s" + std::to_string(s));
    contributions.emplace_back();
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) contributions.back().push_back(i);
  }
  // Sorted alphabet order may differ from the mask order.
  Nfa b(letters);
  std::vector<std::vector<std::size_t>> by_letter(b.alphabet().size());
  for (std::size_t x = 0; x < letters.size(); ++x) {
    auto pos = std::find(b.alphabet().begin(), b.alphabet().end(), letters[x]) - b.alphabet().begin();
    by_letter[static_cast<std::size_t>(pos)] = contributions[x];
  }
  for (automata::State q = 0; q < t.state_count(); ++q) b.add_state(t.is_initial(q), t.is_final(q));
  for (automata::State p = 0; p < t.state_count(); ++p)
    for (automata::State q = 0; q < t.state_count(); ++q) {
      Nfa between = path_language(t, p, q);
      for (std::size_t s = 1; s < meets.size(); ++s)
        if (meets[s].state_count() > 0 && !automata::is_empty(automata::intersection(between, meets[s])))
          b.add_edge(p, "s" + std::to_string(s), q);
    }
  for (const auto& e : t.edges()) b.add_epsilon(e.from, e.to);
  return automata::simultaneous_unbounded(b, by_letter, n);
}

Predicate predicate_counting(std::vector<Nfa> ks) {
  for (const auto& k : ks) require_no_epsilon(k, "count");
  auto n = ks.size();
  return {n, "count", [ks = std::move(ks)](const Nfa& r) { return counting_bound(r, ks).unbounded; }};
}

bool lift(const Predicate& p, const nets::LabeledPetriNet& n, const Limits& limits) {
  return p(klmst::approximate(n, limits).union_nfa());
}

AxiomReport axiom_check_1dim(const Predicate& p, const std::vector<std::pair<Nfa, Nfa>>& samples) {
  if (p.dimension != 1) throw PreconditionError("axiom_check_1dim: the predicate must be 1-dimensional");
  AxiomReport report;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto alphabet = automata::merge_alphabets(samples[i].first.alphabet(), samples[i].second.alphabet());
    Nfa k = automata::with_alphabet(samples[i].first, alphabet);
    Nfa l = automata::with_alphabet(samples[i].second, alphabet);
    bool pk = p(k), pl = p(l), pu = p(automata::union_of(k, l)), pc = p(automata::concat(k, l));
    auto fail = [&](const char* axiom) { report.failures.push_back({axiom, i, k, l}); };
    if (pk && !pu) fail("i");
    if (pu && !pk && !pl) fail("ii");
    if (pc && !pk && !pl) fail("iii");
    report.checked += 3;
  }
  return report;
}

Predicate from_registry(const std::string& spec, const std::string& base_dir) {
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto load = [&](const std::string& file) {
    std::filesystem::path path(file);
    if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
    return automata::load_nfa(path.string());
  };
  auto need_arg = [&] {
    if (arg.empty()) throw PreconditionError("predicate '" + name + "' needs an argument");
  };
  if (name == "inf" && arg.empty()) return predicate_inf();
  if (name == "notb" && arg.empty()) return predicate_not_bounded();
  if (name == "sup") {
    need_arg();
    return predicate_sup(split(arg, ','));
  }
  if (name == "nof") {
    need_arg();
    return predicate_nof(load(arg));
  }
  if (name == "fu") {
    need_arg();
    return predicate_fu(load(arg));
  }
  if (name == "word") {
    need_arg();
    return predicate_word(arg.find(',') != std::string::npos ? split(arg, ',') : word(arg));
  }
  if (name == "count") {
    need_arg();
    std::vector<Nfa> ks;
    for (const auto& f : split(arg, ',')) ks.push_back(load(f));
    auto p = predicate_counting(std::move(ks));
    p.name = spec;
    return p;
  }
  throw PreconditionError("unknown predicate '" + spec + "'");
}

std::vector<std::string> registry_names() { return {"inf", "notb", "sup", "nof", "fu", "word", "count"}; }

}  // namespace vasun::predicates
