#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "vasun/klmst.hpp"

namespace vasun::klmst {

namespace {

// value = constant + (variable ? x_variable : 0)
struct Affine {
  std::int64_t constant = 0;
  std::optional<std::size_t> variable;
};

}  // namespace

CharSystem characteristic_system(const nets::LabeledPetriNet& n, const Mgts& g) {
  const std::size_t places = n.net.place_count();
  const std::size_t comps = g.components.size();
  CharSystem cs;
  auto fail = [&](std::string why) {
    cs.trivially_unsolvable = true;
    if (cs.reason.empty()) cs.reason = std::move(why);
  };
  std::vector<std::vector<Affine>> entry(comps, std::vector<Affine>(places)), exit(comps, std::vector<Affine>(places));

  for (std::size_t p = 0; p < places; ++p) {
    const auto& first = g.components.front().initial[p];
    if (first.is_omega()) {
      entry[0][p].variable = cs.variables.size();
      cs.variables.push_back({CharVariable::Kind::boundary, 0, p, true});
    } else {
      entry[0][p].constant = first.value();
    }
    const auto& last = g.components.back().final[p];
    if (last.is_omega()) {
      exit[comps - 1][p].variable = cs.variables.size();
      cs.variables.push_back({CharVariable::Kind::boundary, comps - 1, p, false});
    } else {
      exit[comps - 1][p].constant = last.value();
    }
  }
  for (std::size_t j = 0; j + 1 < comps; ++j) {
    const auto& tr = n.net.transitions().at(g.links[j]);
    for (std::size_t p = 0; p < places; ++p) {
      OmegaNat fin = g.components[j].final[p], ini = g.components[j + 1].initial[p];
      std::int64_t pre = tr.pre[p], post = tr.post[p];
      Affine& x = exit[j][p];
      Affine& y = entry[j + 1][p];
      const std::string where = "link " + std::to_string(j) + " (" + tr.name + ") at " + n.net.places()[p];
      if (!fin.is_omega() && !ini.is_omega()) {
        if (fin.value() < pre || fin.value() - pre + post != ini.value()) fail(where + ": inconsistent constants");
        x.constant = fin.value();
        y.constant = ini.value();
      } else if (!fin.is_omega()) {
        if (fin.value() < pre) fail(where + ": link transition not fireable");
        x.constant = fin.value();
        y.constant = fin.value() - pre + post;
      } else if (!ini.is_omega()) {
        if (ini.value() < post) fail(where + ": entry value below Post");
        x.constant = ini.value() - post + pre;
        y.constant = ini.value();
      } else {
        std::size_t z = cs.variables.size();
        cs.variables.push_back({CharVariable::Kind::link, j, p, false});
        x = {pre, z};
        y = {post, z};
      }
    }
  }
  std::vector<std::vector<std::size_t>> edge_var(comps);
  for (std::size_t j = 0; j < comps; ++j)
    for (std::size_t e = 0; e < g.components[j].edges.size(); ++e) {
      edge_var[j].push_back(cs.variables.size());
      cs.variables.push_back({CharVariable::Kind::edge, j, e, false});
    }

  const std::size_t vars = cs.variables.size();
  std::vector<numeric::IntVector> rows;
  numeric::IntVector rhs;
  auto emit = [&](numeric::IntVector row, numeric::Integer b) {
    bool zero = std::all_of(row.begin(), row.end(), [](const numeric::Integer& v) { return v == 0; });
    if (zero) {
      if (b != 0) fail("constant marking equation violated");
      return;
    }
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
  };
  for (std::size_t j = 0; j < comps; ++j) {
    const auto& c = g.components[j];
    // exit = entry + Σ x_e Δ(h(e))
    for (std::size_t p = 0; p < places; ++p) {
      numeric::IntVector row(vars, 0);
      if (exit[j][p].variable) row[*exit[j][p].variable] += 1;
      if (entry[j][p].variable) row[*entry[j][p].variable] -= 1;
      for (std::size_t e = 0; e < c.edges.size(); ++e) row[edge_var[j][e]] -= n.net.delta(c.edges[e].transition)[p];
      emit(std::move(row), numeric::Integer(entry[j][p].constant - exit[j][p].constant));
    }
    // Kirchhoff: closed walks enter each vertex as often as they leave it.
    for (std::size_t v = 0; v < c.vertices.size(); ++v) {
      numeric::IntVector row(vars, 0);
      for (std::size_t e = 0; e < c.edges.size(); ++e) {
        if (c.edges[e].to == v) row[edge_var[j][e]] += 1;
        if (c.edges[e].from == v) row[edge_var[j][e]] -= 1;
      }
      emit(std::move(row), 0);
    }
  }
  if (rows.empty()) {
    cs.system.variables = vars;
  } else {
    cs.system = numeric::DiophSystem(std::move(rows), std::move(rhs));
  }
  return cs;
}

CharSolution solve_characteristic(const CharSystem& cs, std::size_t max_basis) {
  CharSolution out;
  const std::size_t vars = cs.variables.size();
  if (cs.trivially_unsolvable) return out;
  out.unbounded.assign(vars, true);
  out.values.assign(vars, {});

  // Split into blocks of variables connected through shared rows.
  std::vector<std::size_t> uf(vars);
  std::iota(uf.begin(), uf.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return uf[x] == x ? x : uf[x] = find(uf[x]); };
  const auto& sys = cs.system;
  for (const auto& row : sys.a) {
    std::optional<std::size_t> first;
    for (std::size_t v = 0; v < vars; ++v) {
      if (row[v] == 0) continue;
      if (first)
        uf[find(v)] = find(*first);
      else
        first = v;
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> block_rows, block_vars;
  for (std::size_t r = 0; r < sys.rows(); ++r)
    for (std::size_t v = 0; v < vars; ++v)
      if (sys.a[r][v] != 0) {
        block_rows[find(v)].push_back(r);
        break;
      }
  for (std::size_t v = 0; v < vars; ++v) block_vars[find(v)].push_back(v);

  for (const auto& [root, rs] : block_rows) {
    const auto& vs = block_vars[root];
    std::vector<numeric::IntVector> a;
    numeric::IntVector b;
    for (auto r : rs) {
      numeric::IntVector row;
      for (auto v : vs) row.push_back(sys.a[r][v]);
      a.push_back(std::move(row));
      b.push_back(sys.b[r]);
    }
    auto sol = numeric::solve_nat(numeric::DiophSystem(std::move(a), std::move(b)), max_basis);
    if (!sol.solvable()) return out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      out.unbounded[vs[i]] = numeric::variable_unbounded(sol, i);
      if (!out.unbounded[vs[i]]) out.values[vs[i]] = numeric::bounded_values(sol, i);
    }
  }
  out.solvable = true;
  return out;
}

std::string Defect::describe(const nets::LabeledPetriNet& n) const {
  std::ostringstream os;
  switch (kind) {
    case Kind::forward_cover:
      os << "component " << component << ": no covering sequence";
      break;
    case Kind::backward_cover:
      os << "component " << component << ": no backward covering sequence";
      break;
    case Kind::unsolvable:
      os << "characteristic system unsolvable";
      break;
    case Kind::bounded_link:
    case Kind::bounded_edge:
      if (kind == Kind::bounded_edge)
        os << "component " << variable.component << ": edge " << variable.index << " bounded";
      else
        os << (variable.kind == CharVariable::Kind::link ? "link " : "boundary of component ") << variable.component
           << ": place " << n.net.places().at(variable.index) << " bounded";
      os << ", values {";
      for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
      os << "}";
      break;
  }
  return os.str();
}

PerfectnessReport is_perfect(const nets::LabeledPetriNet& n, const Mgts& g, const Limits& limits) {
  PerfectnessReport report;
  for (std::size_t j = 0; j < g.components.size(); ++j)
    if (covering_sequence(n.net, g.components[j], limits).status == CoverStatus::absent) {
      report.defect = Defect{Defect::Kind::forward_cover, j, {}, {}};
      return report;
    }
  for (std::size_t j = 0; j < g.components.size(); ++j)
    if (backward_covering_sequence(n.net, g.components[j], limits).status == CoverStatus::absent) {
      report.defect = Defect{Defect::Kind::backward_cover, j, {}, {}};
      return report;
    }
  auto cs = characteristic_system(n, g);
  auto sol = solve_characteristic(cs, limits.max_basis);
  if (!sol.solvable) {
    report.defect = Defect{Defect::Kind::unsolvable, 0, {}, {}};
    return report;
  }
  // Variables are ordered boundary, link, then edge.
  for (std::size_t v = 0; v < cs.variables.size(); ++v) {
    if (sol.unbounded[v]) continue;
    const auto& var = cs.variables[v];
    auto kind = var.kind == CharVariable::Kind::edge ? Defect::Kind::bounded_edge : Defect::Kind::bounded_link;
    report.defect = Defect{kind, var.component, var, sol.values[v]};
    return report;
  }
  return report;
}

}  // namespace vasun::klmst
