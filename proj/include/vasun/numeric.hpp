#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <vector>

#include "vasun/common.hpp"

namespace vasun::numeric {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// A natural number or ω. ω absorbs addition and subtraction of naturals.
class OmegaNat {
 public:
  constexpr OmegaNat() = default;
  constexpr OmegaNat(std::int64_t value) : value_(value) {}  // NOLINT: implicit on purpose

  static constexpr OmegaNat omega() { return OmegaNat(kOmega, 0); }

  constexpr bool is_omega() const { return value_ == kOmega; }
  /// Precondition: !is_omega().
  constexpr std::int64_t value() const { return value_; }

  /// ω + k = ω - k = ω; finite values must stay non-negative.
  OmegaNat plus(std::int64_t delta) const;

  /// True when this value can pay `amount` tokens.
  constexpr bool covers(std::int64_t amount) const { return is_omega() || value_ >= amount; }

  friend constexpr bool operator==(OmegaNat a, OmegaNat b) { return a.value_ == b.value_; }
  /// Natural order with ω on top.
  friend constexpr bool operator<(OmegaNat a, OmegaNat b) {
    if (a.is_omega()) return false;
    if (b.is_omega()) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(OmegaNat a, OmegaNat b) { return a == b || a < b; }

 private:
  static constexpr std::int64_t kOmega = -1;
  constexpr OmegaNat(std::int64_t raw, int) : value_(raw) {}
  std::int64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, OmegaNat v);

/// A x = b over the naturals.
struct DiophSystem {
  std::vector<IntVector> a;  // rows
  IntVector b;
  std::size_t variables = 0;

  DiophSystem() = default;
  DiophSystem(std::vector<IntVector> rows, IntVector rhs);
  DiophSystem(std::initializer_list<std::initializer_list<std::int64_t>> rows, std::initializer_list<std::int64_t> rhs);

  std::size_t rows() const { return a.size(); }
  bool satisfied_by(const IntVector& x) const;
};

/// Every solution is a minimal particular solution plus a natural
/// combination of the homogeneous basis. Both lists are ⊆-antichains.
struct SolutionDescription {
  std::vector<IntVector> particular;
  std::vector<IntVector> homogeneous;

  bool solvable() const { return !particular.empty(); }
};

/// Minimal natural solutions of A x = b and the Hilbert basis of A x = 0,
/// computed by a breadth-first completion search (Contejean–Devie) with
/// domination pruning. Frontier levels are processed by vector sum, ties in
/// lexicographic order.
///
/// Throws BudgetError when the basis or a frontier level exceeds `max_basis`.
SolutionDescription solve_nat(const DiophSystem& sys, std::size_t max_basis = 50'000);

/// True iff some homogeneous basis vector is positive at `var`, i.e. the
/// variable takes arbitrarily large values. Throws PreconditionError for an
/// unsolvable system.
bool variable_unbounded(const SolutionDescription& sol, std::size_t var);
bool variable_unbounded(const DiophSystem& sys, std::size_t var, std::size_t max_basis = 50'000);

/// Distinct values of a bounded variable across all solutions, ascending.
/// Precondition: solvable and !variable_unbounded(sol, var).
std::vector<Integer> bounded_values(const SolutionDescription& sol, std::size_t var);

}  // namespace vasun::numeric
