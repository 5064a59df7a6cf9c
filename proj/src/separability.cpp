#include <algorithm>
#include <deque>
#include <functional>

#include "vasun/analyses.hpp"

namespace vasun::analyses {

using nets::Marking;

namespace {

// All tuples of nonempty words with the given total length, sorted.
std::vector<std::vector<Word>> tuples_of_length(const std::vector<Symbol>& sigma, std::size_t total) {
  std::vector<std::vector<Word>> out;
  std::vector<Word> cur;
  std::function<void(std::size_t)> go = [&](std::size_t left) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    // Next word of length len, built letter by letter.
    for (std::size_t len = 1; len <= left; ++len) {
      Word w(len);
      std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == len) {
          cur.push_back(w);
          go(left - len);
          cur.pop_back();
          return;
        }
        for (const auto& x : sigma) {
          w[i] = x;
          fill(i + 1);
        }
      };
      fill(0);
    }
  };
  go(total);
  std::sort(out.begin(), out.end());
  return out;
}

Control expression_control(const std::vector<Word>& words) {
  Control c;
  std::vector<std::size_t> offset;
  for (const auto& w : words) {
    offset.push_back(c.states);
    c.states += w.size();
  }
  if (words.empty()) {
    c.states = 1;
    c.final = {0};
    return c;
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    c.extra_places.push_back("x" + std::to_string(i + 1));
    c.final.insert(offset[i]);
    if (i + 1 < words.size()) c.edges.push_back({offset[i], std::nullopt, std::nullopt, offset[i + 1], {}});
    for (std::size_t j = 0; j < words[i].size(); ++j) {
      bool last = j + 1 == words[i].size();
      c.edges.push_back({offset[i] + j, words[i][j], words[i][j], last ? offset[i] : offset[i] + j + 1,
                         last ? std::vector<std::size_t>{i} : std::vector<std::size_t>{}});
    }
  }
  return c;
}

std::string describe(const std::vector<Word>& words) {
  std::string s;
  for (const auto& w : words) s += "(" + vasun::to_string(w) + ")*";
  return s.empty() ? "ε" : s;
}

}  // namespace

Nfa bounded_expression(const std::vector<Word>& words, const std::vector<Symbol>& alphabet) {
  auto out = Nfa::epsilon_language(alphabet);
  for (const auto& w : words) out = automata::concat(out, automata::star(Nfa::literal(w, alphabet)));
  return out;
}

Word power_word(const std::vector<Word>& words, const std::vector<std::int64_t>& x) {
  Word out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::int64_t k = 0; k < x.at(i); ++k) out.insert(out.end(), words[i].begin(), words[i].end());
  return out;
}

SeparabilityInstance separability_reduce(const nets::LabeledPetriNet& k, const nets::LabeledPetriNet& l,
                                         const Limits& limits) {
  SeparabilityInstance inst;
  inst.k = k;
  inst.l = l;
  auto sigma = automata::merge_alphabets(k.alphabet(), l.alphabet());
  auto r = automata::with_alphabet(klmst::approximate(k, limits).union_nfa(), sigma);
  auto witness = automata::is_bounded_regular(r);
  if (!witness.bounded) return inst;
  inst.bounded = true;

  std::size_t witness_length = 0;
  for (const auto& w : witness.words) witness_length += w.size();
  std::optional<std::vector<Word>> found;
  std::vector<Word> last;
  for (std::size_t total = 1; !found && total < witness_length && !sigma.empty(); ++total) {
    for (auto& tuple : tuples_of_length(sigma, total)) {
      if (++inst.expressions_tried > limits.max_chains)
        throw BudgetError("separability: " + std::to_string(limits.max_chains) + " expressions tried, largest " +
                          describe(last));
      last = tuple;
      if (automata::includes(r, bounded_expression(tuple, sigma))) {
        found = std::move(tuple);
        break;
      }
    }
  }
  inst.words = found ? *found : witness.words;
  auto control = expression_control(inst.words);
  inst.u0 = {synchronize(k, control), k.final};
  inst.u1 = {synchronize(l, control), l.final};
  return inst;
}

Exploration explore_section(const Section& s, std::int64_t max_token, std::size_t max_states) {
  const auto& n = s.product.net;
  Exploration out;
  std::set<Marking> seen{n.initial};
  std::deque<Marking> todo{n.initial};
  bool capped = false;
  while (!todo.empty()) {
    Marking m = std::move(todo.front());
    todo.pop_front();
    if (m[s.product.done] == 1 && std::equal(s.pinned.begin(), s.pinned.end(), m.begin())) {
      std::vector<std::int64_t> x;
      for (auto p : s.product.extra) x.push_back(m[p]);
      out.vectors.insert(std::move(x));
    }
    for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
      auto next = nets::fire(n.net, m, t);
      if (!next) continue;
      if (std::any_of(next->begin(), next->end(), [&](std::int64_t v) { return v > max_token; })) {
        capped = true;
        continue;
      }
      if (!seen.insert(*next).second) continue;
      if (seen.size() > max_states) return out;
      todo.push_back(std::move(*next));
    }
  }
  out.exact = !capped;
  return out;
}

std::vector<std::int64_t> Congruence::cls(const std::vector<std::int64_t>& x) const {
  std::vector<std::int64_t> out;
  for (auto v : x) out.push_back(v < threshold ? v : threshold + (v - threshold) % modulus);
  return out;
}

bool SeparabilityVerdict::contains(const std::vector<std::int64_t>& x) const {
  return complement != (finite_set.count(x) > 0);
}

std::string to_string(SeparabilityVerdict::Kind k) {
  switch (k) {
    case SeparabilityVerdict::Kind::separable:
      return "separable";
    case SeparabilityVerdict::Kind::inseparable:
      return "inseparable";
    case SeparabilityVerdict::Kind::unknown:
      return "unknown";
  }
  return "unknown";
}

SeparabilityVerdict recog_separability_oracle(const SeparabilityInstance& inst, const Limits& limits) {
  using Kind = SeparabilityVerdict::Kind;
  SeparabilityVerdict v;
  if (!inst.bounded) {
    v.kind = Kind::inseparable;
    v.reason = "K is not bounded";
    return v;
  }
  auto e0 = explore_section(inst.u0, limits.max_token);
  auto e1 = explore_section(inst.u1, limits.max_token);

  // Members of the finite side must all be absent from the other language.
  auto settle = [&](const Exploration& finite, const Exploration& other, const nets::LabeledPetriNet& other_net,
                    bool complement) {
    for (const auto& x : finite.vectors) {
      if (other.vectors.count(x)) {
        v.kind = Kind::inseparable;
        v.reason = "both languages contain " + vasun::to_string(power_word(inst.words, x));
        return;
      }
    }
    for (const auto& x : finite.vectors) {
      auto status = word_in_language(other_net, power_word(inst.words, x), limits.max_token);
      if (status == nets::SearchStatus::found) {
        v.kind = Kind::inseparable;
        v.reason = "both languages contain " + vasun::to_string(power_word(inst.words, x));
        return;
      }
      if (status == nets::SearchStatus::budget_exhausted) {
        v.kind = Kind::unknown;
        v.reason = "membership of " + vasun::to_string(power_word(inst.words, x)) + " undecided within the token cap";
        return;
      }
    }
    v.kind = Kind::separable;
    v.finite_set = finite.vectors;
    v.complement = complement;
    v.reason = complement ? "the second section is finite and disjoint from the first"
                          : "the first section is finite and disjoint from the second";
    for (std::int64_t t = 0; t <= 5 && !v.congruence; ++t)
      for (std::int64_t p = 1; p <= 4 && !v.congruence; ++p) {
        Congruence c{t, p};
        std::set<std::vector<std::int64_t>> classes;
        for (const auto& x : finite.vectors) classes.insert(c.cls(x));
        if (std::none_of(other.vectors.begin(), other.vectors.end(),
                         [&](const auto& y) { return classes.count(c.cls(y)) > 0; }))
          v.congruence = c;
      }
  };
  if (e0.exact) {
    settle(e0, e1, inst.l, false);
  } else if (e1.exact) {
    settle(e1, e0, inst.k, true);
  } else {
    v.kind = Kind::unknown;
    v.reason = "both sections are infinite at token cap " + std::to_string(limits.max_token) +
               "; deciding them needs a recognizable-separability procedure for vector sets";
  }
  return v;
}

}  // namespace vasun::analyses
