#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "vasun/numeric.hpp"

using namespace vasun;
using namespace vasun::numeric;

namespace {

std::set<oracles::Vec> as_set(const std::vector<IntVector>& vs) {
  std::set<oracles::Vec> out;
  for (const auto& v : vs) out.insert(oracles::to_vec(v));
  return out;
}

}  // namespace

TEST_CASE("omega arithmetic absorbs naturals") {
  auto w = OmegaNat::omega();
  CHECK(w.plus(5).is_omega());
  CHECK(w.plus(-5).is_omega());
  CHECK(OmegaNat(3).plus(-3) == OmegaNat(0));
  CHECK_THROWS_AS(OmegaNat(1).plus(-2), PreconditionError);
  CHECK(OmegaNat(7) < w);
  CHECK_FALSE(w < OmegaNat(7));
  CHECK(w.covers(1000));
}

TEST_CASE("solve_nat on small systems") {
  SUBCASE("x - y = 0") {
    auto s = solve_nat(DiophSystem({{1, -1}}, {0}));
    CHECK(as_set(s.particular) == std::set<oracles::Vec>{{0, 0}});
    CHECK(as_set(s.homogeneous) == std::set<oracles::Vec>{{1, 1}});
  }
  SUBCASE("2x - y = 1 matches the box oracle") {
    auto sols = oracles::box_solutions({{2, -1}}, {1}, 2, 8);
    auto hom = oracles::box_solutions({{2, -1}}, {0}, 2, 8);
    auto part = oracles::minimal(sols, false);
    auto basis = oracles::minimal(hom, true);
    CHECK(part == std::set<oracles::Vec>{{1, 1}});
    CHECK(basis == std::set<oracles::Vec>{{1, 2}});
    auto s = solve_nat(DiophSystem({{2, -1}}, {1}));
    CHECK(as_set(s.particular) == part);
    CHECK(as_set(s.homogeneous) == basis);
  }
  SUBCASE("2x - 2y = 1 has no solution") { CHECK_FALSE(solve_nat(DiophSystem({{2, -2}}, {1})).solvable()); }
  SUBCASE("no constraints") {
    auto s = solve_nat(DiophSystem(std::vector<IntVector>{}, IntVector{}));
    CHECK(s.solvable());
  }
}

TEST_CASE("variable_unbounded") {
  CHECK(variable_unbounded(DiophSystem({{1, -1}}, {0}), 0));
  CHECK_FALSE(variable_unbounded(DiophSystem({{1, 1}}, {3}), 0));
  CHECK(variable_unbounded(DiophSystem({{2, -1}}, {1}), 1));
  CHECK_THROWS_AS(variable_unbounded(DiophSystem({{2, -2}}, {1}), 0), PreconditionError);
  auto s = solve_nat(DiophSystem({{1, 1}}, {3}));
  CHECK(bounded_values(s, 0) == std::vector<Integer>{0, 1, 2, 3});
}

TEST_CASE("solver budget is explicit") {
  CHECK_THROWS_AS(solve_nat(DiophSystem({{1, 1, 1, -7}}, {0}), 3), BudgetError);
}

TEST_CASE("every boxed solution dominates a particular solution plus basis combination") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int round = 0; round < 25; ++round) {
    std::vector<std::vector<long>> a(2, std::vector<long>(3));
    oracles::Vec b(2);
    for (auto& r : a)
      for (auto& x : r) x = entry(rng);
    for (auto& x : b) x = entry(rng);
    std::vector<IntVector> rows;
    for (auto& r : a) rows.emplace_back(r.begin(), r.end());
    auto s = solve_nat(DiophSystem(rows, IntVector(b.begin(), b.end())));
    for (const auto& x : oracles::box_solutions(a, b, 3, 6)) {
      bool covered = false;
      for (const auto& p : s.particular) covered |= oracles::leq(oracles::to_vec(p), x);
      CHECK(covered);
    }
    for (const auto& p : s.particular) CHECK(DiophSystem(rows, IntVector(b.begin(), b.end())).satisfied_by(p));
  }
}

TEST_CASE("column permutation permutes the output") {
  auto s = solve_nat(DiophSystem({{2, -1, 1}}, {3}));
  auto t = solve_nat(DiophSystem({{1, 2, -1}}, {3}));
  auto permute = [](const std::vector<IntVector>& vs) {
    std::set<oracles::Vec> out;
    for (const auto& v : vs) out.insert({static_cast<long>(v[2]), static_cast<long>(v[0]), static_cast<long>(v[1])});
    return out;
  };
  CHECK(permute(s.particular) == as_set(t.particular));
  CHECK(permute(s.homogeneous) == as_set(t.homogeneous));
}
