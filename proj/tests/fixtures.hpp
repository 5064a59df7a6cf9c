#pragma once

#include <random>
#include <string>

#include "vasun/automata.hpp"
#include "vasun/nets.hpp"

namespace fixtures {

inline std::string data(const std::string& file) { return std::string(VASUN_DATA_DIR) + "/" + file; }

inline vasun::nets::LabeledPetriNet net(const std::string& name) { return vasun::nets::load_net(data(name + ".net")); }
inline vasun::nets::LabeledPetriNet net_a() { return net("net_a"); }
inline vasun::nets::LabeledPetriNet net_b() { return net("net_b"); }
inline vasun::nets::LabeledPetriNet net_c() { return net("net_c"); }
inline vasun::nets::LabeledPetriNet net_d() { return net("net_d"); }
inline vasun::nets::LabeledPetriNet net_l1() { return net("net_l1"); }

inline vasun::automata::Nfa nfa(const std::string& name) { return vasun::automata::load_nfa(data(name + ".nfa")); }

inline const std::vector<vasun::Symbol> kAb{"a", "b"};

/// Random NFA over {a, b} with the given number of states.
inline vasun::automata::Nfa random_nfa(std::mt19937& rng, std::size_t states, double density = 0.3) {
  vasun::automata::Nfa a(kAb);
  std::bernoulli_distribution coin(density), half(0.5);
  for (std::size_t q = 0; q < states; ++q) a.add_state(q == 0 || coin(rng), half(rng));
  for (std::size_t p = 0; p < states; ++p)
    for (std::size_t q = 0; q < states; ++q)
      for (int x = -1; x < 2; ++x)
        if (coin(rng) && (x >= 0 || coin(rng))) a.add_edge_index(p, x, q);
  return a;
}

/// Random labeled net: places ≤ 3, transitions ≤ 4, small Pre/Post.
inline vasun::nets::LabeledPetriNet random_net(std::mt19937& rng) {
  std::uniform_int_distribution<int> places_d(1, 3), trans_d(1, 4), count(0, 1), label(0, 2), marking(0, 1);
  std::size_t np = static_cast<std::size_t>(places_d(rng));
  std::size_t nt = static_cast<std::size_t>(trans_d(rng));
  std::vector<std::string> places;
  for (std::size_t p = 0; p < np; ++p) places.push_back("p" + std::to_string(p));
  std::vector<vasun::nets::Transition> ts;
  vasun::nets::LabeledPetriNet n;
  for (std::size_t t = 0; t < nt; ++t) {
    vasun::nets::Transition tr{"t" + std::to_string(t), {}, {}};
    for (std::size_t p = 0; p < np; ++p) {
      tr.pre.push_back(count(rng));
      tr.post.push_back(count(rng));
    }
    ts.push_back(tr);
    int l = label(rng);
    n.labels.push_back(l == 2 ? std::nullopt : std::optional<std::string>(l == 0 ? "a" : "b"));
  }
  n.net = vasun::nets::PetriNet(places, ts);
  for (std::size_t p = 0; p < np; ++p) {
    n.initial.push_back(marking(rng));
    n.final.push_back(marking(rng));
  }
  return n;
}

}  // namespace fixtures
