#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vasun/automata.hpp"
#include "vasun/common.hpp"
#include "vasun/klmst.hpp"
#include "vasun/nets.hpp"

namespace vasun::analyses {

using automata::BoundResult;
using automata::Nfa;

// ---------------------------------------------------------------------------
// Decision procedures on nets

struct BoundedVerdict {
  bool bounded = false;
  automata::BoundedWitness witness;  // meaningful when bounded
};

BoundedVerdict decide_bounded(const nets::LabeledPetriNet& n, const Limits& limits = {});
/// ↓L as an automaton over the net's letters.
Nfa downward_closure(const nets::LabeledPetriNet& n, const Limits& limits = {});
/// PreconditionError if ε ∈ K.
BoundResult decide_factor_unbounded(const nets::LabeledPetriNet& n, const Nfa& k, const Limits& limits = {});
bool decide_factor_universal(const nets::LabeledPetriNet& n, const Nfa& k, const Limits& limits = {});

/// Exact membership of a word, by search over (marking, position) with a
/// token cap. not_found only when the cap was never hit.
nets::SearchStatus word_in_language(const nets::LabeledPetriNet& n, const Word& w, std::int64_t max_token,
                                    std::size_t max_states = 1'000'000);

// ---------------------------------------------------------------------------
// Finite-state control synchronized with a labeled net

struct ControlEdge {
  std::size_t from;
  std::optional<Symbol> input;   // nothing: moves without reading
  std::optional<Symbol> output;  // nothing: emits ε
  std::size_t to;
  std::vector<std::size_t> increments;  // extra places bumped by one
};

/// A one-letter-per-edge transducer, optionally incrementing extra places.
struct Control {
  std::size_t states = 0;
  std::size_t initial = 0;
  std::set<std::size_t> final;
  std::vector<ControlEdge> edges;
  std::vector<std::string> extra_places;
};

struct Product {
  nets::LabeledPetriNet net;
  std::size_t original_places = 0;
  std::vector<std::size_t> extra;  // place index of each extra place
  std::size_t done = 0;            // place marked once control has finished
};

/// Net whose language is the image of L under the control, read as a
/// transducer. Final marking: M_F, the done place, extra places 0.
Product synchronize(const nets::LabeledPetriNet& n, const Control& control);

// ---------------------------------------------------------------------------
// Counting automata

struct CaEdge {
  enum class Op { none, push, check };
  std::size_t from;
  std::optional<Symbol> input;
  Op op = Op::none;
  Symbol letter;             // push
  std::size_t language = 0;  // check: index into languages
  std::size_t counter = 0;   // check
  std::size_t to;
};

struct CountingAutomaton {
  std::vector<std::string> states;
  std::vector<Symbol> input;
  std::vector<Symbol> tape;
  std::vector<std::string> counters;
  std::vector<Nfa> languages;  // over the tape alphabet
  std::vector<std::string> language_names;
  std::vector<CaEdge> edges;
  std::size_t initial = 0;
  std::set<std::size_t> final;

  /// StructuralError when an edge refers to something undeclared.
  void validate() const;
};

struct CaConfiguration {
  std::size_t state;
  Word tape;
  std::vector<std::uint64_t> counters;
  auto operator<=>(const CaConfiguration&) const = default;
};

CaConfiguration ca_initial(const CountingAutomaton& a);
/// One-edge successors reading x (nothing: ε edges only).
std::vector<CaConfiguration> ca_step(const CountingAutomaton& a, const CaConfiguration& c,
                                     const std::optional<Symbol>& x);
/// A(w): max over accepting runs of the minimum counter (0 with no accepting
/// run). BudgetError when ε steps grow the tape beyond max_tape.
std::uint64_t ca_evaluate(const CountingAutomaton& a, const Word& w, std::size_t max_tape = 32);

struct CaCompiled {
  Control transducer;           // input Σ, output Λ
  std::vector<Symbol> output;   // Λ = Γ ∪ {d, e_{i,c}}
  std::vector<Nfa> tuple;       // K̄_c per counter, over Λ
  Symbol d;
  std::vector<std::vector<Symbol>> e;  // e[i][c]
};

CaCompiled ca_compile(const CountingAutomaton& a);
/// Unbounded, or a bound B ≥ A(w) for every w ∈ L.
BoundResult decide_ca_bounded(const nets::LabeledPetriNet& n, const CountingAutomaton& a, const Limits& limits = {});

CountingAutomaton parse_ca(std::istream& in, const std::string& base_dir = ".");
CountingAutomaton load_ca(const std::string& path);

// ---------------------------------------------------------------------------
// Separability by bounded regular languages

/// {x : original places = pinned, done marked, extra places = x} over the
/// reachable markings of a product net.
struct Section {
  Product product;
  nets::Marking pinned;
};

struct SeparabilityInstance {
  bool bounded = false;      // false: K is not bounded, hence inseparable
  std::vector<Word> words;   // w_1..w_n with L(K) ⊆ w_1*⋯w_n*
  Section u0;                // from K
  Section u1;                // from L
  std::size_t expressions_tried = 0;
  nets::LabeledPetriNet k;
  nets::LabeledPetriNet l;
};

/// Expression w_1*⋯w_n* as an automaton over `alphabet`.
Nfa bounded_expression(const std::vector<Word>& words, const std::vector<Symbol>& alphabet);
/// w_1^{x_1}⋯w_n^{x_n}.
Word power_word(const std::vector<Word>& words, const std::vector<std::int64_t>& x);

/// BudgetError carries the largest expression tried.
SeparabilityInstance separability_reduce(const nets::LabeledPetriNet& k, const nets::LabeledPetriNet& l,
                                         const Limits& limits = {});

struct Exploration {
  std::set<std::vector<std::int64_t>> vectors;
  bool exact = false;  // the whole reachability set was explored below the cap
};

Exploration explore_section(const Section& s, std::int64_t max_token, std::size_t max_states = 1'000'000);

struct Congruence {
  std::int64_t threshold = 0;
  std::int64_t modulus = 1;
  std::vector<std::int64_t> cls(const std::vector<std::int64_t>& x) const;
};

struct SeparabilityVerdict {
  enum class Kind { separable, inseparable, unknown };
  Kind kind = Kind::unknown;
  std::string reason;
  /// Separable: S = finite_set when !complement, ℕ^n \ finite_set otherwise.
  std::set<std::vector<std::int64_t>> finite_set;
  bool complement = false;
  /// Smallest threshold/modulus congruence whose classes around the finite
  /// side avoid every explored vector of the other side.
  std::optional<Congruence> congruence;
  bool contains(const std::vector<std::int64_t>& x) const;
};

SeparabilityVerdict recog_separability_oracle(const SeparabilityInstance& inst, const Limits& limits = {});

std::string to_string(SeparabilityVerdict::Kind k);

}  // namespace vasun::analyses
