#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "vasun/common.hpp"

namespace vasun::automata {

using State = std::size_t;

/// NFA with ε-edges over a sorted alphabet of string symbols. Letters on
/// edges are alphabet indices, kEpsilon for ε.
class Nfa {
 public:
  static constexpr int kEpsilon = -1;

  struct Edge {
    State from;
    int letter;
    State to;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  Nfa() = default;
  /// Duplicates are removed and the alphabet sorted.
  explicit Nfa(std::vector<Symbol> alphabet);

  State add_state(bool initial = false, bool final = false);
  void add_edge(State from, const Symbol& letter, State to);
  void add_epsilon(State from, State to);
  void add_edge_index(State from, int letter, State to);
  void set_initial(State q, bool on = true);
  void set_final(State q, bool on = true);

  const std::vector<Symbol>& alphabet() const { return alphabet_; }
  std::size_t state_count() const { return initial_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool is_initial(State q) const { return initial_[q]; }
  bool is_final(State q) const { return final_[q]; }
  std::vector<State> initial_states() const;
  std::vector<State> final_states() const;
  std::optional<int> letter_index(const Symbol& s) const;
  const Symbol& letter(int index) const { return alphabet_[static_cast<std::size_t>(index)]; }

  /// Names used by the text format; generated as q0, q1, … when unset.
  std::string state_name(State q) const;
  void set_state_name(State q, std::string name);

  // Fixture constructors.
  static Nfa empty_language(std::vector<Symbol> alphabet = {});
  static Nfa epsilon_language(std::vector<Symbol> alphabet = {});
  static Nfa universal(std::vector<Symbol> alphabet);
  static Nfa literal(const Word& w, std::vector<Symbol> alphabet = {});
  static Nfa finite(const std::vector<Word>& words, std::vector<Symbol> alphabet = {});
  /// Tiny regular expressions over one-character letters: juxtaposition, |,
  /// *, parentheses; "()" is ε. The alphabet defaults to the letters used.
  static Nfa regex(std::string_view expr, std::vector<Symbol> alphabet = {});

 private:
  std::vector<Symbol> alphabet_;
  std::vector<bool> initial_;
  std::vector<bool> final_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
};

/// Sorted union of both alphabets.
std::vector<Symbol> merge_alphabets(const std::vector<Symbol>& a, const std::vector<Symbol>& b);
/// Same language over a superset alphabet. StructuralError if not a superset.
Nfa with_alphabet(const Nfa& a, const std::vector<Symbol>& alphabet);

// Binary constructions require identical alphabets (StructuralError otherwise).
Nfa union_of(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
Nfa intersection(const Nfa& a, const Nfa& b);
bool includes(const Nfa& a, const Nfa& b);  // L(a) ⊆ L(b)
bool equivalent(const Nfa& a, const Nfa& b);

Nfa star(const Nfa& a);
/// Complete DFA (ε-free, exactly one initial state, sink included).
Nfa determinize(const Nfa& a, std::size_t max_states = static_cast<std::size_t>(-1));
Nfa reverse(const Nfa& a);
/// Minimal trimmed DFA (double reversal). BudgetError past max_states subsets.
Nfa minimize(const Nfa& a, std::size_t max_states = static_cast<std::size_t>(-1));
Nfa complement(const Nfa& a);
Nfa remove_epsilon(const Nfa& a);
/// Drops states that are not both reachable and co-reachable.
Nfa trim(const Nfa& a);

bool is_empty(const Nfa& a);
bool is_finite(const Nfa& a);
bool accepts(const Nfa& a, const Word& w);
/// Accepted words of length ≤ max_len.
std::set<Word, LengthLex> enumerate(const Nfa& a, std::size_t max_len);
/// counts[ℓ] = number of accepted words of length ℓ, ℓ ≤ max_len (saturating).
std::vector<std::uint64_t> count_words(const Nfa& a, std::size_t max_len);
/// nullopt for infinite languages; 0 for the empty language.
std::optional<std::size_t> longest_word_length(const Nfa& a);

/// Letter homomorphism into `alphabet`; nullopt maps a letter to ε.
Nfa relabel(const Nfa& a, const std::function<std::optional<Symbol>(const Symbol&)>& h,
            std::vector<Symbol> alphabet);

Nfa downward_closure_nfa(const Nfa& a);
Nfa factor_language(const Nfa& a);

struct BoundedWitness {
  bool bounded = false;
  /// L ⊆ words[0]* ⋯ words[n-1]* when bounded.
  std::vector<Word> words;
  std::string expression() const;
  Nfa automaton(const std::vector<Symbol>& alphabet) const;
};
BoundedWitness is_bounded_regular(const Nfa& a);

/// a_1* ⋯ a_n* ⊆ ↓L(a).
bool chain_inclusion(const std::vector<Symbol>& letters, const Nfa& a);

/// Decides K ∩ L(A) ≠ ∅ for a fixed hidden K.
class FactorOracle {
 public:
  virtual ~FactorOracle() = default;
  virtual bool intersects(const Nfa& a) const = 0;
  /// Letters K may use; complements are taken relative to these as well.
  virtual std::vector<Symbol> alphabet() const = 0;
};

class RegularFactorOracle : public FactorOracle {
 public:
  explicit RegularFactorOracle(Nfa k) : k_(std::move(k)) {}
  bool intersects(const Nfa& a) const override;
  std::vector<Symbol> alphabet() const override { return k_.alphabet(); }
  const Nfa& language() const { return k_; }

 private:
  Nfa k_;
};

enum class CEdgeMode { erase, remove };

inline const Symbol kMarker = "c";

/// For every trimmed state pair (p, q) whose path language meets K, adds an
/// edge labeled kMarker. erase: all other labels become ε; remove: all other
/// edges are dropped. The result is over the alphabet {kMarker}.
Nfa c_edge_automaton(const Nfa& a, const FactorOracle& oracle, CEdgeMode mode);

struct BoundResult {
  bool unbounded = false;
  std::size_t bound = 0;  // meaningful when !unbounded
};

/// f_K on L(a). Precondition (not checked): ε ∉ K.
BoundResult factor_unbounded_regular(const Nfa& a, const FactorOracle& oracle);
/// K* ⊆ F(L(a)).
bool factor_universal_regular(const Nfa& a, const FactorOracle& oracle);

/// Letters a_1..a_n are the alphabet of a: unbounded iff for every ℓ some
/// accepted word has each letter ≥ ℓ times; otherwise max_w min_i |w|_{a_i}.
BoundResult simultaneous_unbounded(const Nfa& a);
/// Generalized form: reading letter x increments every counter in
/// contributions[x] (indices < counters).
BoundResult simultaneous_unbounded(const Nfa& a, const std::vector<std::vector<std::size_t>>& contributions,
                                   std::size_t counters);

Nfa parse_nfa(std::istream& in);
Nfa parse_nfa_string(const std::string& text);
Nfa load_nfa(const std::string& path);
std::string print_nfa(const Nfa& a);
std::string to_dot(const Nfa& a, const std::string& name = "nfa");

}  // namespace vasun::automata
