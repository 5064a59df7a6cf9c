#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vasun/common.hpp"

namespace vasun::automata {
class Nfa;
}

namespace vasun::nets {

/// Token counts indexed like the owning net's places.
using Marking = std::vector<std::int64_t>;

struct Transition {
  std::string name;
  Marking pre;
  Marking post;
};

class PetriNet {
 public:
  PetriNet() = default;
  PetriNet(std::vector<std::string> places, std::vector<Transition> transitions);

  const std::vector<std::string>& places() const { return places_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::size_t place_count() const { return places_.size(); }
  std::size_t transition_count() const { return transitions_.size(); }

  /// Throws StructuralError for unknown names.
  std::size_t place_index(const std::string& name) const;
  std::size_t transition_index(const std::string& name) const;
  std::optional<std::size_t> find_transition(const std::string& name) const;

  /// post - pre, per place.
  std::vector<std::int64_t> delta(std::size_t t) const;

 private:
  std::vector<std::string> places_;
  std::vector<Transition> transitions_;
  std::map<std::string, std::size_t> place_ids_;
  std::map<std::string, std::size_t> transition_ids_;
};

/// m + Δ(t) if m ≥ pre(t), nothing otherwise. Unknown t → StructuralError.
std::optional<Marking> fire(const PetriNet& net, const Marking& m, std::size_t t);
std::optional<Marking> fire(const PetriNet& net, const Marking& m, const std::string& t);

struct LabeledPetriNet {
  PetriNet net;
  std::vector<std::optional<Symbol>> labels;  // nullopt is ε
  Marking initial;
  Marking final;

  /// Checks label/marking sizes and non-negativity.
  void validate() const;
  /// Sorted set of visible letters.
  std::vector<Symbol> alphabet() const;
  /// h applied to a transition word.
  Word label_word(const std::vector<std::size_t>& transitions) const;
};

struct VasTransition {
  std::string name;
  std::vector<std::int64_t> delta;
  std::optional<Symbol> label;
};

struct Vas {
  std::size_t dimension = 0;
  std::vector<VasTransition> transitions;
  std::vector<std::int64_t> source;
  std::vector<std::int64_t> target;
};

/// Places p0..p{d-1}; Pre/Post are the negative/positive parts of each vector.
LabeledPetriNet vas_to_net(const Vas& v);

/// Words over the VAS semantics directly, for cross-checking vas_to_net.
std::set<Word, LengthLex> enumerate_vas_language(const Vas& v, std::size_t max_len, std::int64_t max_token,
                                                 std::size_t max_states = 4'000'000);

struct Enumeration {
  std::set<Word, LengthLex> words;
  /// Some successor was discarded because a place exceeded max_token; the
  /// result is then only a lower bound of L ∩ Σ^{≤max_len}.
  bool token_cap_hit = false;
};

/// {h(w) : M_I →w M_F, |h(w)| ≤ max_len, all markings ≤ max_token}.
/// Runs may use arbitrarily many ε transitions. BudgetError when the number
/// of explored (marking, word) states exceeds max_states.
Enumeration enumerate_language(const LabeledPetriNet& n, std::size_t max_len, std::int64_t max_token,
                               std::size_t max_states = 4'000'000);

enum class SearchStatus { found, not_found, budget_exhausted };

struct FactorSearch {
  SearchStatus status = SearchStatus::not_found;
  Word witness;
  /// When status is not_found and this is false, the search was exhaustive
  /// below the token cap only.
  bool token_cap_hit = false;
};

/// Breadth-first search for u ∈ L containing w_1,…,w_k as ordered disjoint
/// factors. not_found is only reported when the whole capped space was
/// explored without hitting the token cap.
FactorSearch oracle_factors(const LabeledPetriNet& n, const std::vector<Word>& tuple, std::int64_t max_token,
                            std::size_t max_states = 1'000'000);

/// Maximum number of disjoint ordered factors of w in L(K). ε ∈ L(K) →
/// PreconditionError.
std::size_t f_count(const Word& w, const automata::Nfa& k);

/// Net text format. Throws ParseError with the offending line.
LabeledPetriNet parse_net(std::istream& in);
LabeledPetriNet parse_net_string(const std::string& text);
LabeledPetriNet load_net(const std::string& path);
/// Canonical text; parse_net(print_net(n)) == n.
std::string print_net(const LabeledPetriNet& n);

bool operator==(const LabeledPetriNet& a, const LabeledPetriNet& b);

}  // namespace vasun::nets
