#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "vasun/predicates.hpp"

using namespace vasun;
using namespace vasun::predicates;
using automata::Nfa;

namespace {

Nfa re(const std::string& e) { return automata::with_alphabet(Nfa::regex(e), fixtures::kAb); }
Nfa empty_ab() { return Nfa::empty_language(fixtures::kAb); }

// Oracle: f_t(w) by dynamic programming over positions; each factor w[i..j)
// may count for every K_i containing it.
std::size_t f_t(const Word& w, const std::vector<Nfa>& ks) {
  const std::size_t n = ks.size();
  using Counts = std::vector<std::size_t>;
  std::vector<std::set<Counts>> best(w.size() + 1);
  best[0].insert(Counts(n, 0));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (const auto& c : best[i]) best[i + 1].insert(c);  // skip a letter
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      Word f(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j));
      std::vector<bool> in(n);
      for (std::size_t k = 0; k < n; ++k) in[k] = automata::accepts(ks[k], f);
      for (auto c : best[i]) {
        for (std::size_t k = 0; k < n; ++k) c[k] += in[k];
        best[j].insert(c);
      }
    }
  }
  std::size_t out = 0;
  for (const auto& c : best[w.size()]) out = std::max(out, *std::min_element(c.begin(), c.end()));
  return out;
}

std::vector<std::pair<Nfa, Nfa>> random_pairs(std::uint32_t seed, std::size_t count) {
  std::mt19937 rng(seed);
  std::vector<std::pair<Nfa, Nfa>> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto k = fixtures::random_nfa(rng, 3);
    auto l = fixtures::random_nfa(rng, 3);
    out.emplace_back(std::move(k), std::move(l));
  }
  return out;
}

std::vector<Predicate> one_dimensional() {
  return {predicate_inf(), predicate_not_bounded(), predicate_nof(re("ab")), predicate_fu(re("a|b")),
          predicate_nof(re("aa|b"))};
}

}  // namespace

TEST_CASE("infinity and boundedness predicates") {
  auto inf = predicate_inf();
  CHECK(inf(fixtures::nfa("r1")));
  CHECK_FALSE(inf(empty_ab()));
  CHECK_FALSE(inf(re("ab")));

  auto notb = predicate_not_bounded();
  CHECK(notb(fixtures::nfa("r2")));
  CHECK_FALSE(notb(fixtures::nfa("r1")));
  CHECK_FALSE(notb(empty_ab()));
}

TEST_CASE("sup and word predicates") {
  CHECK(predicate_sup({"a", "b"})(fixtures::nfa("r1")));
  CHECK(predicate_sup({"a"})(re("a*")));
  CHECK_FALSE(predicate_sup({"a", "b"})(re("a*|b*")));
  CHECK(predicate_sup({"a", "b"}).dimension == 2);

  CHECK(predicate_word(word("ab"))(fixtures::nfa("r1")));
  CHECK_FALSE(predicate_word(word("ba"))(re("a*b*")));
  CHECK(predicate_word(word("bb"))(fixtures::nfa("r1")));
  CHECK_FALSE(predicate_word(word("ac"))(fixtures::nfa("r2")));
}

TEST_CASE("factor predicates") {
  auto nof = predicate_nof(fixtures::nfa("k_ab"));
  CHECK(nof(fixtures::nfa("r1")));
  CHECK_FALSE(nof(re("aabb")));
  CHECK_FALSE(nof(empty_ab()));
  CHECK_THROWS_AS(predicate_nof(re("a*")), PreconditionError);

  auto fu = predicate_fu(fixtures::nfa("k_a_or_b"));
  CHECK(fu(fixtures::nfa("r2")));
  CHECK_FALSE(fu(re("a*")));
  CHECK_FALSE(fu(empty_ab()));
  CHECK(predicate_fu(fixtures::nfa("k_ab"))(fixtures::nfa("r1")));
}

TEST_CASE("counting predicate") {
  std::vector<Symbol> sigma{"da", "db", "e1", "e2"};
  auto cycle = automata::star(Nfa::literal({"da", "e1", "db", "e2"}, sigma));
  auto t = predicate_counting({Nfa::literal({"da", "e1"}, sigma), Nfa::literal({"db", "e2"}, sigma)});
  CHECK(t.dimension == 2);
  CHECK(t(cycle));
  CHECK_FALSE(t(Nfa::empty_language(sigma)));
  CHECK_FALSE(t(automata::star(Nfa::literal({"da", "e1"}, sigma))));

  auto single = predicate_counting({fixtures::nfa("k_ab")});
  CHECK(single(fixtures::nfa("r1")));
  CHECK_FALSE(single(re("aabb")));
  CHECK_THROWS_AS(predicate_counting({re("()|a")}), PreconditionError);
}

TEST_CASE("counting bound matches the brute-force oracle on finite languages") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> len(0, 6), count(1, 4), bit(0, 1);
  std::vector<std::vector<Nfa>> tuples{{re("ab")}, {re("a"), re("b")}, {re("ab|ba"), re("b")}, {re("aa"), re("a")},
                                       {re("ab"), re("ba"), re("a")}};
  for (int i = 0; i < 60; ++i) {
    std::vector<Word> words(count(rng));
    for (auto& w : words) {
      w.resize(len(rng));
      for (auto& x : w) x = bit(rng) ? "a" : "b";
    }
    auto r = Nfa::finite(words, fixtures::kAb);
    for (const auto& ks : tuples) {
      std::size_t expected = 0;
      for (const auto& w : words) expected = std::max(expected, f_t(w, ks));
      auto got = counting_bound(r, ks);
      CHECK_FALSE(got.unbounded);
      CHECK(got.bound == expected);
    }
  }
}

TEST_CASE("nof agrees with f_count on finite languages") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> len(0, 7), bit(0, 1);
  auto k = fixtures::nfa("k_ab");
  for (int i = 0; i < 40; ++i) {
    std::vector<Word> words(3);
    for (auto& w : words) {
      w.resize(len(rng));
      for (auto& x : w) x = bit(rng) ? "a" : "b";
    }
    std::size_t expected = 0;
    for (const auto& w : words) expected = std::max(expected, nets::f_count(w, k));
    auto got = automata::factor_unbounded_regular(Nfa::finite(words, fixtures::kAb), automata::RegularFactorOracle(k));
    CHECK(got.bound == expected);
    CHECK(counting_bound(Nfa::finite(words, fixtures::kAb), {k}).bound == expected);
  }
}

TEST_CASE("axioms hold on random samples") {
  auto samples = random_pairs(31, 50);
  for (const auto& p : one_dimensional()) {
    CAPTURE(p.name);
    auto report = axiom_check_1dim(p, samples);
    CHECK(report.checked == 150);
    CHECK(report.ok());
  }
  CHECK_THROWS_AS(axiom_check_1dim(predicate_sup({"a", "b"}), samples), PreconditionError);
}

TEST_CASE("predicates are monotone under inclusion") {
  auto samples = random_pairs(37, 50);
  auto preds = one_dimensional();
  preds.push_back(predicate_sup({"a", "b"}));
  preds.push_back(predicate_word(word("ab")));
  preds.push_back(predicate_counting({re("a"), re("b")}));
  for (auto [a, b] : samples) {
    auto big = automata::union_of(a, b);
    for (const auto& p : preds) {
      CAPTURE(p.name);
      REQUIRE(automata::includes(a, big));
      if (p(a)) CHECK(p(big));
      if (automata::includes(a, b) && p(a)) CHECK(p(b));
    }
  }
}

TEST_CASE("sup splits over concatenations") {
  auto samples = random_pairs(41, 50);
  std::vector<std::vector<Symbol>> chains{{"a"}, {"a", "b"}, {"b", "a"}, {"a", "b", "a"}, {"b", "b", "a"}};
  for (const auto& [a, b] : samples) {
    auto ab = automata::concat(a, b);
    for (const auto& chain : chains) {
      if (!automata::chain_inclusion(chain, ab)) continue;
      bool split = false;
      for (std::size_t k = 0; k <= chain.size() && !split; ++k) {
        std::vector<Symbol> left(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(k));
        std::vector<Symbol> right(chain.begin() + static_cast<std::ptrdiff_t>(k), chain.end());
        bool l = left.empty() ? !automata::is_empty(a) : automata::chain_inclusion(left, a);
        bool r = right.empty() ? !automata::is_empty(b) : automata::chain_inclusion(right, b);
        split = l && r;
      }
      CHECK(split);
    }
  }
}

TEST_CASE("lifting to nets") {
  CHECK(lift(predicate_inf(), fixtures::net_b()));
  auto c = fixtures::net_c();
  for (const auto& p : one_dimensional()) CHECK_FALSE(lift(p, c));
  CHECK_FALSE(lift(predicate_sup({"a"}), c));
  CHECK_FALSE(lift(predicate_word(word("a")), c));

  // Desk-scale agreement with the enumerated language.
  for (const std::string name : {"net_a", "net_b", "net_d", "net_l1"}) {
    CAPTURE(name);
    auto n = fixtures::net(name);
    auto words = nets::enumerate_language(n, 10, 48, 4000000).words;
    std::size_t longest = 0;
    for (const auto& w : words) longest = std::max(longest, w.size());
    bool inf = lift(predicate_inf(), n);
    CHECK(inf == (longest > 9));
    auto k = fixtures::nfa("k_ab");
    bool nof = lift(predicate_nof(k), n);
    std::map<std::size_t, std::size_t> best;  // length → max f_count
    for (const auto& w : words) best[w.size()] = std::max(best[w.size()], nets::f_count(w, k));
    if (nof) CHECK(std::max_element(best.begin(), best.end(), [](auto x, auto y) { return x.second < y.second; })->second >= 3);
  }
  CHECK(lift(predicate_nof(fixtures::nfa("k_ab")), fixtures::net_a()));
  CHECK_FALSE(lift(predicate_nof(fixtures::nfa("k_ab")), fixtures::net_b()));
  CHECK_FALSE(lift(predicate_not_bounded(), fixtures::net_b()));
  CHECK(lift(predicate_not_bounded(), fixtures::net_a()));
  CHECK(lift(predicate_sup({"a", "b"}), fixtures::net_b()));
  CHECK_FALSE(lift(predicate_sup({"b", "a"}), fixtures::net_b()));
}

TEST_CASE("registry") {
  auto dir = std::string(VASUN_DATA_DIR);
  CHECK(from_registry("inf").name == "inf");
  CHECK(from_registry("sup:a,b").dimension == 2);
  CHECK(from_registry("word:ab").dimension == 2);
  CHECK(from_registry("nof:k_ab.nfa", dir)(fixtures::nfa("r1")));
  CHECK(from_registry("fu:k_a_or_b.nfa", dir)(fixtures::nfa("r2")));
  CHECK(from_registry("count:k_a.nfa,k_ab.nfa", dir).dimension == 2);
  CHECK_THROWS_AS(from_registry("bogus"), PreconditionError);
  CHECK_THROWS_AS(from_registry("nof"), PreconditionError);
  CHECK_THROWS(from_registry("nof:missing.nfa", dir));
}
