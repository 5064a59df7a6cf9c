#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "vasun/automata.hpp"
#include "vasun/nets.hpp"

using namespace vasun;
using namespace vasun::automata;

namespace {

using Words = std::set<Word, LengthLex>;

Words words_of(std::initializer_list<const char*> ws) {
  Words out;
  for (auto w : ws) out.insert(word(w));
  return out;
}

bool is_subword(const Word& u, const Word& v) {
  std::size_t i = 0;
  for (const auto& x : v)
    if (i < u.size() && u[i] == x) ++i;
  return i == u.size();
}

// Every factor of a word in the sample, used as a brute-force F(L).
Words factors_of(const Words& sample, std::size_t max_len) {
  Words out;
  for (const auto& w : sample)
    for (std::size_t i = 0; i <= w.size(); ++i)
      for (std::size_t j = i; j <= w.size() && j - i <= max_len; ++j)
        out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j)));
  return out;
}

}  // namespace

TEST_CASE("basic operations") {
  auto r1 = fixtures::nfa("r1"), r2 = fixtures::nfa("r2"), r3 = fixtures::nfa("r3");
  CHECK(accepts(concat(r1, r1), word("abab")));
  CHECK_FALSE(is_finite(r1));
  CHECK(includes(r1, r2));
  CHECK_FALSE(includes(r2, r3));
  CHECK(is_empty(Nfa::empty_language({"a"})));
  CHECK(is_finite(Nfa::literal(word("ab"))));
  CHECK_THROWS_AS(intersection(Nfa::regex("a*"), r1), StructuralError);
  CHECK(equivalent(Nfa::regex("(ab)*", fixtures::kAb), r1));
  CHECK(equivalent(Nfa::regex("a*b*"), r3));
  CHECK(equivalent(complement(complement(r3)), r3));
  CHECK(enumerate(union_of(r1, r3), 2) == words_of({"", "a", "b", "aa", "ab", "bb"}));
  CHECK(enumerate(star(Nfa::literal(word("ab"))), 4) == words_of({"", "ab", "abab"}));
  CHECK(count_words(r2, 4) == std::vector<std::uint64_t>{1, 2, 4, 8, 16});
  CHECK(longest_word_length(Nfa::finite({word("ab"), word("aab")})) == 3u);
  CHECK(longest_word_length(r1) == std::nullopt);
  CHECK(longest_word_length(Nfa::empty_language()) == 0u);
}

TEST_CASE("operations agree with enumeration on random automata") {
  std::mt19937 rng(23);
  for (int round = 0; round < 40; ++round) {
    auto a = fixtures::random_nfa(rng, 3), b = fixtures::random_nfa(rng, 3);
    auto la = enumerate(a, 5), lb = enumerate(b, 5);
    Words u, i, c;
    for (const auto& w : la) (lb.count(w) ? i : u).insert(w);
    u.insert(lb.begin(), lb.end());
    CHECK(enumerate(union_of(a, b), 5) == u);
    CHECK(enumerate(intersection(a, b), 5) == i);
    Words ab;
    for (const auto& x : la)
      for (const auto& y : lb)
        if (x.size() + y.size() <= 5) {
          Word w = x;
          w.insert(w.end(), y.begin(), y.end());
          ab.insert(w);
        }
    CHECK(enumerate(concat(a, b), 5) == ab);
    for (const auto& w : enumerate(Nfa::universal(fixtures::kAb), 4)) {
      CHECK(accepts(complement(a), w) != accepts(a, w));
      CHECK(accepts(determinize(a), w) == accepts(a, w));
      CHECK(accepts(remove_epsilon(a), w) == accepts(a, w));
      CHECK(accepts(trim(a), w) == accepts(a, w));
    }
    // three states: finite languages have no word longer than 2
    auto long_words = enumerate(a, 5).size() != enumerate(a, 2).size();
    CHECK(is_finite(a) == !long_words);
  }
}

TEST_CASE("downward closure") {
  CHECK(equivalent(downward_closure_nfa(Nfa::regex("a*")), Nfa::regex("a*")));
  CHECK(enumerate(downward_closure_nfa(Nfa::literal(word("ab"))), 3) == words_of({"", "a", "b", "ab"}));
  auto r1 = fixtures::nfa("r1"), r2 = fixtures::nfa("r2");
  // w ⪯ (ab)^|w| for every w over {a, b}
  for (const auto& w : enumerate(r2, 6)) {
    Word host;
    for (std::size_t i = 0; i < w.size(); ++i) host.insert(host.end(), {"a", "b"});
    CHECK(is_subword(w, host));
  }
  CHECK(equivalent(downward_closure_nfa(r1), r2));
}

TEST_CASE("downward closure is extensive and idempotent") {
  std::mt19937 rng(29);
  for (int round = 0; round < 30; ++round) {
    auto a = fixtures::random_nfa(rng, 4);
    auto d = downward_closure_nfa(a);
    CHECK(includes(a, d));
    CHECK(equivalent(d, downward_closure_nfa(d)));
    // u ∈ ↓L iff L meets Σ*u_1Σ*⋯u_kΣ*
    for (const auto& u : enumerate(d, 4)) {
      std::string re = "(a|b)*";
      for (const auto& x : u) re += x + "(a|b)*";
      CHECK_FALSE(is_empty(intersection(a, Nfa::regex(re, fixtures::kAb))));
    }
  }
}

TEST_CASE("factor language") {
  CHECK(enumerate(factor_language(Nfa::literal(word("ab"))), 3) == words_of({"", "a", "b", "ab"}));
  CHECK(is_empty(factor_language(Nfa::empty_language(fixtures::kAb))));
  Words sample;
  Word w;
  for (int n = 0; n <= 6; ++n) {
    sample.insert(w);
    w.insert(w.end(), {"a", "b"});
  }
  Words expected;
  for (const auto& f : factors_of(sample, 4))
    if (f.size() <= 4) expected.insert(f);
  CHECK(expected == words_of({"", "a", "b", "ab", "ba", "aba", "bab", "abab", "baba"}));
  CHECK(enumerate(factor_language(fixtures::nfa("r1")), 4) == expected);
}

TEST_CASE("factors of a concatenation straddle at most one boundary") {
  std::mt19937 rng(31);
  for (int round = 0; round < 15; ++round) {
    auto a = fixtures::random_nfa(rng, 3), b = fixtures::random_nfa(rng, 3);
    auto fa = factor_language(a), fb = factor_language(b);
    auto la = enumerate(a, 6), lb = enumerate(b, 6);
    for (const auto& w : enumerate(factor_language(concat(a, b)), 6)) {
      bool ok = accepts(fa, w) || accepts(fb, w);
      for (std::size_t k = 0; k <= w.size() && !ok; ++k) {
        Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)), v(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
        bool u_suffix = false, v_prefix = false;
        for (const auto& x : la)
          u_suffix |= x.size() >= u.size() && std::equal(u.begin(), u.end(), x.end() - static_cast<std::ptrdiff_t>(u.size()));
        for (const auto& y : lb) v_prefix |= y.size() >= v.size() && std::equal(v.begin(), v.end(), y.begin());
        ok = u_suffix && v_prefix;
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("is_bounded_regular") {
  auto r1 = is_bounded_regular(fixtures::nfa("r1"));
  CHECK(r1.bounded);
  CHECK(r1.expression() == "(ab)*");
  auto r3 = is_bounded_regular(fixtures::nfa("r3"));
  CHECK(r3.bounded);
  CHECK(r3.expression() == "a*b*");
  auto r2 = fixtures::nfa("r2");
  CHECK_FALSE(is_bounded_regular(r2).bounded);
  auto counts = count_words(r2, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(counts[n] == (std::uint64_t{1} << n));
  CHECK(is_bounded_regular(Nfa::empty_language()).expression() == "ε");
  CHECK(is_bounded_regular(Nfa::regex("(ab)*(ba)*c")).bounded);
  CHECK_FALSE(is_bounded_regular(Nfa::regex("(ab|ba)*")).bounded);
  CHECK(is_bounded_regular(Nfa::regex("(aab)*|(aba)*")).bounded);
}

TEST_CASE("boundedness agrees with the growth oracle and witnesses contain the language") {
  std::mt19937 rng(37);
  for (int round = 0; round < 50; ++round) {
    auto a = fixtures::random_nfa(rng, 4, 0.25);
    auto res = is_bounded_regular(a);
    auto counts = count_words(a, 12);
    if (res.bounded) {
      CHECK(includes(a, res.automaton(a.alphabet())));
      // polynomially many words per length
      for (std::size_t n = 0; n <= 12; ++n) CHECK(counts[n] <= (n + 1) * (n + 1) * (n + 1) * 16);
    } else {
      // two non-commuting cycles give at least 2^{n/(2|Q|)} words of some length ≤ n
      std::uint64_t total = 0;
      for (auto c : count_words(a, 24)) total += c;
      CHECK(total >= 8);
    }
  }
}

TEST_CASE("chain_inclusion") {
  CHECK(chain_inclusion({"a"}, Nfa::regex("a*")));
  CHECK(chain_inclusion({"a", "b"}, fixtures::nfa("r1")));
  CHECK_FALSE(chain_inclusion({"a", "b"}, Nfa::regex("a*|b*")));
}

TEST_CASE("c-edge automata") {
  RegularFactorOracle ab(Nfa::literal(word("ab")));
  auto b = c_edge_automaton(fixtures::nfa("r1"), ab, CEdgeMode::erase);
  for (std::size_t n = 0; n < 6; ++n) CHECK(accepts(b, Word(n, kMarker)));
  auto single = c_edge_automaton(Nfa::literal(word("ab")), ab, CEdgeMode::remove);
  CHECK(enumerate(single, 4) == Words{{kMarker}});
  RegularFactorOracle never(Nfa::empty_language(fixtures::kAb));
  auto free = c_edge_automaton(fixtures::nfa("r1"), never, CEdgeMode::erase);
  CHECK(enumerate(free, 4) == Words{{}});
}

TEST_CASE("factor_unbounded_regular") {
  RegularFactorOracle ab(Nfa::literal(word("ab")));
  CHECK(factor_unbounded_regular(fixtures::nfa("r1"), ab).unbounded);
  auto aabb = factor_unbounded_regular(Nfa::literal(word("aabb")), ab);
  CHECK_FALSE(aabb.unbounded);
  CHECK(aabb.bound == nets::f_count(word("aabb"), ab.language()));
  CHECK(aabb.bound == 1);
  auto none = factor_unbounded_regular(Nfa::empty_language(fixtures::kAb), ab);
  CHECK_FALSE(none.unbounded);
  CHECK(none.bound == 0);
}

TEST_CASE("factor bound dominates exhaustive f_count") {
  std::mt19937 rng(41);
  auto k = Nfa::regex("ab|ba");
  RegularFactorOracle oracle(k);
  for (int round = 0; round < 30; ++round) {
    auto a = fixtures::random_nfa(rng, 3, 0.25);
    auto res = factor_unbounded_regular(a, oracle);
    if (res.unbounded) continue;
    std::size_t best = 0;
    for (const auto& w : enumerate(a, 10)) best = std::max(best, nets::f_count(w, k));
    CHECK(best <= res.bound);
    if (is_finite(a) && longest_word_length(a).value_or(99) <= 10) CHECK(best == res.bound);
  }
}

TEST_CASE("factor_universal_regular") {
  RegularFactorOracle a_or_b(fixtures::nfa("k_a_or_b"));
  CHECK(factor_universal_regular(fixtures::nfa("r2"), a_or_b));
  CHECK_FALSE(factor_universal_regular(Nfa::regex("a*"), a_or_b));
  CHECK(factor_universal_regular(fixtures::nfa("r1"), RegularFactorOracle(Nfa::literal(word("ab")))));
  // (ab)^k is a factor of (ab)^n for all n ≥ k
  auto f = factor_language(fixtures::nfa("r1"));
  Word w;
  for (int k = 0; k < 6; ++k, w.insert(w.end(), {"a", "b"})) CHECK(accepts(f, w));
  CHECK_FALSE(factor_universal_regular(Nfa::empty_language(fixtures::kAb), a_or_b));
}

TEST_CASE("simultaneous_unbounded") {
  std::vector<Symbol> a12{"a1", "a2"};
  Nfa cyc(a12);
  cyc.add_state(true, true);
  cyc.add_state();
  cyc.add_edge(0, "a1", 1);
  cyc.add_edge(1, "a2", 0);
  CHECK(simultaneous_unbounded(cyc).unbounded);

  Nfa chain(a12);
  chain.add_state(true, true);
  chain.add_state(false, true);
  chain.add_edge(0, "a1", 0);
  chain.add_epsilon(0, 1);
  chain.add_edge(1, "a2", 1);
  CHECK(simultaneous_unbounded(chain).unbounded);

  Nfa either(a12);
  either.add_state(true, true);
  either.add_state(true, true);
  either.add_edge(0, "a1", 0);
  either.add_edge(1, "a2", 1);
  auto r = simultaneous_unbounded(either);
  CHECK_FALSE(r.unbounded);
  CHECK(r.bound == 0);
}

TEST_CASE("simultaneous bound matches brute force on bounded automata") {
  std::mt19937 rng(43);
  int bounded = 0;
  for (int round = 0; round < 60; ++round) {
    auto a = fixtures::random_nfa(rng, 3, 0.25);
    auto r = simultaneous_unbounded(a);
    if (r.unbounded) continue;
    ++bounded;
    std::size_t best = 0;
    for (const auto& w : enumerate(a, 10)) {
      std::size_t ca = 0, cb = 0;
      for (const auto& x : w) (x == "a" ? ca : cb)++;
      best = std::max(best, std::min(ca, cb));
    }
    CHECK(best == r.bound);
  }
  CHECK(bounded > 5);
}

TEST_CASE("NFA text format") {
  auto r3 = fixtures::nfa("r3");
  CHECK(print_nfa(parse_nfa_string(print_nfa(r3))) == print_nfa(r3));
  CHECK_THROWS_AS(parse_nfa_string("states q\nalphabet a\nedge q b q\n"), ParseError);
  CHECK_THROWS_AS(parse_nfa_string("states q\nalphabet a\nedge q a r\n"), ParseError);
  CHECK_THROWS_AS(parse_nfa_string("states q\nstart q\n"), ParseError);
  CHECK(to_dot(r3).find("digraph") == 0);
}

TEST_CASE("minimize preserves the language and never grows the trimmed DFA") {
  std::mt19937 rng(77);
  for (int i = 0; i < 60; ++i) {
    auto a = fixtures::random_nfa(rng, 4);
    auto m = minimize(a);
    CHECK(equivalent(m, a));
    CHECK(m.state_count() <= trim(determinize(a)).state_count());
    CHECK(equivalent(reverse(reverse(a)), a));
  }
  CHECK(minimize(Nfa::regex("(a|b)*(a|b)*")).state_count() == 1);
  CHECK_THROWS_AS(determinize(Nfa::regex("(a|b)*a(a|b)(a|b)(a|b)"), 4), BudgetError);
}
