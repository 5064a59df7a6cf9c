#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vasun/automata.hpp"
#include "vasun/common.hpp"
#include "vasun/nets.hpp"

namespace vasun::predicates {

/// An unboundedness predicate packaged with its decision procedure on
/// regular languages: decide_regular(R) answers p(F_n(L(R))).
struct Predicate {
  std::size_t dimension = 1;
  std::string name;
  std::function<bool(const automata::Nfa&)> decide_regular;

  bool operator()(const automata::Nfa& r) const { return decide_regular(r); }
};

Predicate predicate_inf();
Predicate predicate_not_bounded();
Predicate predicate_sup(std::vector<Symbol> letters);
/// PreconditionError if ε ∈ K.
Predicate predicate_nof(automata::Nfa k);
Predicate predicate_fu(automata::Nfa k);
Predicate predicate_word(Word w);
/// PreconditionError if ε belongs to some K_i.
Predicate predicate_counting(std::vector<automata::Nfa> ks);

/// f_t on L(r) for t = (K_1..K_n): the largest ℓ such that some word has
/// pairwise disjoint factors with at least ℓ of them in every K_i.
automata::BoundResult counting_bound(const automata::Nfa& r, const std::vector<automata::Nfa>& ks);

/// p(F_n(L(n))) through the regular approximation.
bool lift(const Predicate& p, const nets::LabeledPetriNet& n, const Limits& limits = {});

struct AxiomFailure {
  std::string axiom;  // "i", "ii" or "iii"
  std::size_t sample;
  automata::Nfa k;
  automata::Nfa l;
};

struct AxiomReport {
  std::size_t checked = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

AxiomReport axiom_check_1dim(const Predicate& p,
                             const std::vector<std::pair<automata::Nfa, automata::Nfa>>& samples);

/// inf, notb, sup:a,b, nof:<nfa-file>, fu:<nfa-file>, word:<w>, count:<nfa-file>,...
/// Relative files are resolved against base_dir. PreconditionError on unknown names.
Predicate from_registry(const std::string& spec, const std::string& base_dir = ".");
std::vector<std::string> registry_names();

}  // namespace vasun::predicates
