#include "vasun/numeric.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace vasun::numeric {

OmegaNat OmegaNat::plus(std::int64_t delta) const {
  if (is_omega()) return *this;
  if (value_ + delta < 0) throw PreconditionError("OmegaNat: result would be negative");
  return OmegaNat(value_ + delta);
}

std::ostream& operator<<(std::ostream& os, OmegaNat v) {
  if (v.is_omega()) return os << "w";
  return os << v.value();
}

DiophSystem::DiophSystem(std::vector<IntVector> rows, IntVector rhs) : a(std::move(rows)), b(std::move(rhs)) {
  if (a.size() != b.size()) throw StructuralError("DiophSystem: row count differs from right-hand side");
  variables = a.empty() ? 0 : a.front().size();
  for (const auto& r : a)
    if (r.size() != variables) throw StructuralError("DiophSystem: ragged matrix");
}

DiophSystem::DiophSystem(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                         std::initializer_list<std::int64_t> rhs) {
  std::vector<IntVector> m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  *this = DiophSystem(std::move(m), IntVector(rhs.begin(), rhs.end()));
}

bool DiophSystem::satisfied_by(const IntVector& x) const {
  if (x.size() != variables) return false;
  for (const auto& v : x)
    if (v < 0) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    Integer s = 0;
    for (std::size_t j = 0; j < variables; ++j) s += a[r][j] * x[j];
    if (s != b[r]) return false;
  }
  return true;
}

namespace {

struct Overflow {};

// Checked arithmetic; cpp_int never overflows.
inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw Overflow{};
  return r;
}
inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw Overflow{};
  return r;
}
inline Integer add(const Integer& x, const Integer& y) { return x + y; }
inline Integer mul(const Integer& x, const Integer& y) { return x * y; }

template <class T>
bool dominates(const std::vector<T>& big, const std::vector<T>& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] < small[i]) return false;
  return true;
}

// Contejean–Devie completion on the homogeneous system M y = 0 where the last
// column of M is -b and the last variable is restricted to {0, 1}.
template <class T>
std::vector<std::vector<T>> contejean_devie(const std::vector<std::vector<T>>& m, std::size_t vars,
                                            std::size_t max_basis) {
  const std::size_t rows = m.size();
  const std::size_t z = vars - 1;
  auto defect = [&](const std::vector<T>& y) {
    std::vector<T> d(rows, T(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t j = 0; j < vars; ++j)
        if (y[j] != 0) d[r] = add(d[r], mul(m[r][j], y[j]));
    return d;
  };

  std::vector<std::vector<T>> basis;
  auto covered = [&](const std::vector<T>& y) {
    return std::any_of(basis.begin(), basis.end(), [&](const auto& s) { return dominates(y, s); });
  };

  std::set<std::vector<T>> frontier;
  for (std::size_t j = 0; j < vars; ++j) {
    std::vector<T> e(vars, T(0));
    e[j] = 1;
    frontier.insert(std::move(e));
  }
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<T>, std::vector<T>>> open;
    for (const auto& y : frontier) {
      auto d = defect(y);
      if (std::all_of(d.begin(), d.end(), [](const T& v) { return v == 0; })) {
        if (!covered(y)) basis.push_back(y);
      } else {
        open.emplace_back(y, std::move(d));
      }
    }
    if (basis.size() > max_basis) throw BudgetError("solve_nat: basis exceeds " + std::to_string(max_basis));
    std::set<std::vector<T>> next;
    for (const auto& [y, d] : open) {
      if (covered(y)) continue;
      for (std::size_t j = 0; j < vars; ++j) {
        if (j == z && y[z] != 0) continue;
        T dot = 0;
        for (std::size_t r = 0; r < rows; ++r) dot = add(dot, mul(d[r], m[r][j]));
        if (!(dot < 0)) continue;
        auto succ = y;
        succ[j] = add(succ[j], T(1));
        if (covered(succ)) continue;
        next.insert(std::move(succ));
        if (next.size() > max_basis)
          throw BudgetError("solve_nat: frontier exceeds " + std::to_string(max_basis));
      }
    }
    frontier = std::move(next);
  }
  return basis;
}

template <class T>
SolutionDescription run(const DiophSystem& sys, std::size_t max_basis) {
  const std::size_t vars = sys.variables + 1;
  std::vector<std::vector<T>> m(sys.rows(), std::vector<T>(vars));
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    for (std::size_t j = 0; j < sys.variables; ++j) m[r][j] = static_cast<T>(sys.a[r][j]);
    m[r][vars - 1] = static_cast<T>(-sys.b[r]);
  }
  auto basis = contejean_devie(m, vars, max_basis);
  SolutionDescription out;
  for (const auto& y : basis) {
    IntVector x(y.begin(), y.end() - 1);
    (y.back() == 0 ? out.homogeneous : out.particular).push_back(std::move(x));
  }
  auto order = [](const IntVector& p, const IntVector& q) {
    Integer sp = 0, sq = 0;
    for (const auto& v : p) sp += v;
    for (const auto& v : q) sq += v;
    if (sp != sq) return sp < sq;
    return p < q;
  };
  std::sort(out.particular.begin(), out.particular.end(), order);
  std::sort(out.homogeneous.begin(), out.homogeneous.end(), order);
  return out;
}

bool fits_int64(const DiophSystem& sys) {
  const Integer lim = 1 << 20;
  auto small = [&](const Integer& v) { return v < lim && v > -lim; };
  for (const auto& r : sys.a)
    if (!std::all_of(r.begin(), r.end(), small)) return false;
  return std::all_of(sys.b.begin(), sys.b.end(), small);
}

}  // namespace

SolutionDescription solve_nat(const DiophSystem& sys, std::size_t max_basis) {
  if (fits_int64(sys)) {
    try {
      return run<std::int64_t>(sys, max_basis);
    } catch (const Overflow&) {
    }
  }
  return run<Integer>(sys, max_basis);
}

bool variable_unbounded(const SolutionDescription& sol, std::size_t var) {
  if (!sol.solvable()) throw PreconditionError("variable_unbounded: system has no solution");
  return std::any_of(sol.homogeneous.begin(), sol.homogeneous.end(),
                     [&](const IntVector& h) { return var < h.size() && h[var] > 0; });
}

bool variable_unbounded(const DiophSystem& sys, std::size_t var, std::size_t max_basis) {
  if (var >= sys.variables) throw StructuralError("variable_unbounded: no such variable");
  return variable_unbounded(solve_nat(sys, max_basis), var);
}

std::vector<Integer> bounded_values(const SolutionDescription& sol, std::size_t var) {
  if (variable_unbounded(sol, var)) throw PreconditionError("bounded_values: variable is unbounded");
  std::set<Integer> values;
  for (const auto& p : sol.particular) values.insert(p[var]);
  return {values.begin(), values.end()};
}

}  // namespace vasun::numeric
