#include <deque>
#include <map>

#include "vasun/analyses.hpp"
#include "vasun/predicates.hpp"

namespace vasun::analyses {

using nets::Marking;
using nets::SearchStatus;

namespace {

Nfa approximation(const nets::LabeledPetriNet& n, const Limits& limits) {
  return klmst::approximate(n, limits).union_nfa();
}

}  // namespace

BoundedVerdict decide_bounded(const nets::LabeledPetriNet& n, const Limits& limits) {
  auto w = automata::is_bounded_regular(approximation(n, limits));
  return {w.bounded, std::move(w)};
}

Nfa downward_closure(const nets::LabeledPetriNet& n, const Limits& limits) {
  auto closed = automata::downward_closure_nfa(approximation(n, limits));
  try {
    return automata::minimize(closed, 4096);
  } catch (const BudgetError&) {
    return automata::trim(automata::remove_epsilon(closed));
  }
}

BoundResult decide_factor_unbounded(const nets::LabeledPetriNet& n, const Nfa& k, const Limits& limits) {
  if (automata::accepts(k, {})) throw PreconditionError("factors: ε must not belong to K");
  return automata::factor_unbounded_regular(approximation(n, limits), automata::RegularFactorOracle(k));
}

bool decide_factor_universal(const nets::LabeledPetriNet& n, const Nfa& k, const Limits& limits) {
  return predicates::lift(predicates::predicate_fu(k), n, limits);
}

SearchStatus word_in_language(const nets::LabeledPetriNet& n, const Word& w, std::int64_t max_token,
                              std::size_t max_states) {
  std::set<std::pair<Marking, std::size_t>> seen{{n.initial, 0}};
  std::deque<std::pair<Marking, std::size_t>> todo{{n.initial, 0}};
  bool capped = false;
  while (!todo.empty()) {
    auto [m, pos] = todo.front();
    todo.pop_front();
    if (pos == w.size() && m == n.final) return SearchStatus::found;
    for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
      const auto& label = n.labels[t];
      if (label && (pos == w.size() || *label != w[pos])) continue;
      auto next = nets::fire(n.net, m, t);
      if (!next) continue;
      if (std::any_of(next->begin(), next->end(), [&](std::int64_t v) { return v > max_token; })) {
        capped = true;
        continue;
      }
      if (!seen.emplace(*next, pos + (label ? 1 : 0)).second) continue;
      if (seen.size() > max_states) return SearchStatus::budget_exhausted;
      todo.emplace_back(std::move(*next), pos + (label ? 1 : 0));
    }
  }
  return capped ? SearchStatus::budget_exhausted : SearchStatus::not_found;
}

Product synchronize(const nets::LabeledPetriNet& n, const Control& control) {
  std::set<std::string> taken(n.net.places().begin(), n.net.places().end());
  auto fresh = [&](std::string name) {
    while (taken.count(name)) name = "_" + name;
    taken.insert(name);
    return name;
  };
  std::vector<std::string> places = n.net.places();
  Product out;
  out.original_places = places.size();
  for (const auto& name : control.extra_places) {
    out.extra.push_back(places.size());
    places.push_back(fresh(name));
  }
  const std::size_t ctl0 = places.size();
  for (std::size_t q = 0; q < control.states; ++q) places.push_back(fresh("ctl" + std::to_string(q)));
  out.done = places.size();
  places.push_back(fresh("done"));
  const std::size_t np = places.size();

  std::vector<nets::Transition> ts;
  std::vector<std::optional<Symbol>> labels;
  auto widen = [&](const std::vector<std::int64_t>& v) {
    auto w = v;
    w.resize(np, 0);
    return w;
  };
  auto add = [&](nets::Transition t, std::optional<Symbol> label) {
    ts.push_back(std::move(t));
    labels.push_back(std::move(label));
  };
  for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
    const auto& tr = n.net.transitions()[t];
    if (!n.labels[t]) add({tr.name, widen(tr.pre), widen(tr.post)}, std::nullopt);
  }
  for (std::size_t k = 0; k < control.edges.size(); ++k) {
    const auto& e = control.edges[k];
    auto apply = [&](nets::Transition t) {
      t.pre[ctl0 + e.from] += 1;
      t.post[ctl0 + e.to] += 1;
      for (auto i : e.increments) t.post[out.extra.at(i)] += 1;
      add(std::move(t), e.output);
    };
    if (!e.input) {
      apply({"c" + std::to_string(k), std::vector<std::int64_t>(np, 0), std::vector<std::int64_t>(np, 0)});
      continue;
    }
    for (std::size_t t = 0; t < n.net.transition_count(); ++t) {
      if (n.labels[t] != e.input) continue;
      const auto& tr = n.net.transitions()[t];
      apply({tr.name + "|c" + std::to_string(k), widen(tr.pre), widen(tr.post)});
    }
  }
  for (auto q : control.final) {
    std::vector<std::int64_t> pre(np, 0), post(np, 0);
    pre[ctl0 + q] = 1;
    post[out.done] = 1;
    add({"fin" + std::to_string(q), pre, post}, std::nullopt);
  }
  out.net.net = nets::PetriNet(places, ts);
  out.net.labels = std::move(labels);
  out.net.initial = widen(n.initial);
  out.net.initial[ctl0 + control.initial] = 1;
  out.net.final = widen(n.final);
  out.net.final[out.done] = 1;
  return out;
}

}  // namespace vasun::analyses
