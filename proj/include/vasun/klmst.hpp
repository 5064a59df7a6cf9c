#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vasun/automata.hpp"
#include "vasun/common.hpp"
#include "vasun/nets.hpp"
#include "vasun/numeric.hpp"

namespace vasun::klmst {

using numeric::OmegaNat;
using OmegaMarking = std::vector<OmegaNat>;

OmegaMarking omega_of(const nets::Marking& m);
OmegaMarking all_omega(std::size_t places);
/// u ≤_ω v: every coordinate equal or v has ω there.
bool leq_omega(const OmegaMarking& u, const OmegaMarking& v);
bool leq_omega(const nets::Marking& u, const OmegaMarking& v);
/// Greatest lower bound under ≤_ω, nothing if two finite values differ.
std::optional<OmegaMarking> meet(const OmegaMarking& u, const OmegaMarking& v);
std::size_t omega_count(const OmegaMarking& m);
/// Firing with ω - k = ω = ω + k.
std::optional<OmegaMarking> fire_omega(const nets::PetriNet& net, const OmegaMarking& m, std::size_t t);
std::string to_string(const OmegaMarking& m);

struct PgEdge {
  std::size_t from;
  std::size_t to;
  std::size_t transition;
  friend bool operator==(const PgEdge&, const PgEdge&) = default;
};

struct PrecoveringGraph {
  std::vector<OmegaMarking> vertices;  // labels may repeat
  std::vector<PgEdge> edges;
  std::size_t distinguished = 0;
  OmegaMarking initial;
  OmegaMarking final;

  const OmegaMarking& m() const { return vertices.at(distinguished); }
  /// Strong connectivity, edge consistency and init/fin ≤_ω m.
  /// Throws StructuralError naming the violated condition.
  void validate(const nets::PetriNet& net) const;
};

struct Mgts {
  std::vector<PrecoveringGraph> components;
  std::vector<std::size_t> links;  // links[j] sits between components j and j+1

  void validate(const nets::LabeledPetriNet& n) const;
};

/// Automaton over the net's transition names reading paths from → to.
automata::Nfa component_language(const nets::PetriNet& net, const PrecoveringGraph& c, std::size_t from,
                                 std::size_t to);
automata::Nfa component_language(const nets::PetriNet& net, const PrecoveringGraph& c);

/// Transition words use the net's transition names.
bool mgts_member(const nets::LabeledPetriNet& n, const Mgts& g, const Word& transitions);

/// One component with the all-ω vertex and a self-loop per transition.
Mgts initial_mgts(const nets::LabeledPetriNet& n);

/// Pre/Post swapped; runs of the result are the reversed runs.
nets::PetriNet reverse_net(const nets::PetriNet& net);
/// Edges reversed, initial and final swapped.
PrecoveringGraph reverse_component(const PrecoveringGraph& c);

// ---------------------------------------------------------------------------
// Coverability

struct KmNode {
  std::size_t vertex;  // vertex of the explored component
  OmegaMarking marking;
};

struct KmGraph {
  std::vector<KmNode> nodes;  // nodes[0] is the root
  std::vector<PgEdge> edges;  // transition labels
};

/// Karp–Miller graph of the component's runs from `start` at the
/// distinguished vertex; identical nodes are merged. BudgetError past
/// max_nodes.
KmGraph coverability_graph(const nets::PetriNet& net, const PrecoveringGraph& c, const OmegaMarking& start,
                           std::size_t max_nodes);

/// u ∈ L(C) fireable from m_init with the three-case covering condition.
bool is_covering(const nets::PetriNet& net, const PrecoveringGraph& c, const std::vector<std::size_t>& u);

enum class CoverStatus { found, absent };

struct CoverResult {
  CoverStatus status = CoverStatus::absent;
  std::vector<std::size_t> word;  // transition indices
};

/// absent is a proof (no coverability node at m carries m's ω places);
/// BudgetError when a sequence exists but the capped search misses it.
CoverResult covering_sequence(const nets::PetriNet& net, const PrecoveringGraph& c, const Limits& limits = {});
/// Covering sequence of the reversed component in the reversed net, given in
/// forward orientation (the reversed word).
CoverResult backward_covering_sequence(const nets::PetriNet& net, const PrecoveringGraph& c,
                                       const Limits& limits = {});

/// s^k v with k = 1 + the largest drop of a prefix of v on an ω place of m.
/// PreconditionError unless s is covering and v ∈ L(C).
std::vector<std::size_t> covering_with_suffix(const nets::PetriNet& net, const PrecoveringGraph& c,
                                              const std::vector<std::size_t>& s,
                                              const std::vector<std::size_t>& v);

// ---------------------------------------------------------------------------
// Characteristic system and perfectness

struct CharVariable {
  enum class Kind { edge, link, boundary } kind;
  std::size_t component;  // edge: owner; link: left component; boundary: component 0 or n
  std::size_t index;      // edge index, or place
  bool entry = false;     // boundary only: entry of component 0 (else exit of component n)
};

struct CharSystem {
  std::vector<CharVariable> variables;
  numeric::DiophSystem system;
  bool trivially_unsolvable = false;  // inconsistent constants at a link
  std::string reason;
};

CharSystem characteristic_system(const nets::LabeledPetriNet& n, const Mgts& g);

struct CharSolution {
  bool solvable = false;
  std::vector<bool> unbounded;                     // per variable
  std::vector<std::vector<numeric::Integer>> values;  // bounded variables only
};

CharSolution solve_characteristic(const CharSystem& cs, std::size_t max_basis);

struct Defect {
  enum class Kind { forward_cover, backward_cover, unsolvable, bounded_link, bounded_edge } kind;
  std::size_t component = 0;
  CharVariable variable{CharVariable::Kind::edge, 0, 0};
  std::vector<numeric::Integer> values;  // possible values of a bounded variable
  std::string describe(const nets::LabeledPetriNet& n) const;
};

struct PerfectnessReport {
  std::optional<Defect> defect;
  bool perfect() const { return !defect.has_value(); }
};

PerfectnessReport is_perfect(const nets::LabeledPetriNet& n, const Mgts& g, const Limits& limits = {});

/// Component-wise (ω count of m, edge count, ω count of init and fin).
using RankTuple = std::array<std::size_t, 3>;
std::vector<RankTuple> rank(const Mgts& g);
/// Multiset extension of the lexicographic tuple order.
bool rank_less(const std::vector<RankTuple>& a, const std::vector<RankTuple>& b);

std::vector<Mgts> refine(const nets::LabeledPetriNet& n, const Mgts& g, const Defect& defect,
                         const Limits& limits = {});

using RefineObserver = std::function<void(const Mgts& parent, const Defect&, const std::vector<Mgts>& children)>;

struct Decomposition {
  std::vector<Mgts> perfect;
  std::size_t processed = 0;
  std::size_t refinements = 0;
};

Decomposition decompose(const nets::LabeledPetriNet& n, const Limits& limits = {},
                        const RefineObserver& observer = {});

/// A word of L(g) containing v_0 t_1 v_1 ⋯ t_n v_n as ordered factors.
/// Returns nothing when the search budget runs out.
std::optional<std::vector<std::size_t>> iteration_witness(const nets::LabeledPetriNet& n, const Mgts& g,
                                                          const std::vector<std::vector<std::size_t>>& factors,
                                                          const Limits& limits = {});

struct RegularApproximation {
  std::size_t width = 0;
  std::vector<std::vector<automata::Nfa>> rows;  // over the net's letters
  std::vector<Mgts> sources;                     // the MGTS behind each row
  /// ⋃_i R_{i,1} ⋯ R_{i,k}.
  automata::Nfa union_nfa() const;
  std::vector<Symbol> alphabet;
};

RegularApproximation approximate(const nets::LabeledPetriNet& n, const Limits& limits = {});
/// Row i over transition names, before labeling.
std::vector<automata::Nfa> transition_row(const nets::LabeledPetriNet& n, const Mgts& g);

std::string dump(const nets::LabeledPetriNet& n, const Mgts& g);

}  // namespace vasun::klmst
