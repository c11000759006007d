#include "convdiff/scenarios.hpp"

#include <algorithm>
#include <sstream>

#include "convdiff/boolean.hpp"
#include "convdiff/cayley.hpp"
#include "convdiff/differential.hpp"
#include "convdiff/digraph.hpp"
#include "convdiff/error.hpp"
#include "convdiff/group.hpp"
#include "convdiff/io.hpp"

namespace convdiff {

namespace {

struct DotCounts {
  std::size_t nodes = 0;
  std::size_t undirected = 0;
  std::size_t directed = 0;
};

DotCounts count_dot(const std::string &dot) {
  DotCounts c;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("->") != std::string::npos) {
      (line.find("dir=none") != std::string::npos ? c.undirected : c.directed)++;
    } else if (line.rfind("  ", 0) == 0) {
      ++c.nodes;
    }
  }
  return c;
}

std::string describe(const DotCounts &c) {
  return std::to_string(c.nodes) + " nodes, " + std::to_string(c.undirected) +
         " undirected, " + std::to_string(c.directed) + " directed";
}

CayleyGraph s3_cayley() {
  auto s3 = symmetric(3);
  const Element gens[] = {1, 3}; // r, t
  return cayley_graph(s3, GeneratingSet::validate(s3, gens));
}

CayleyGraph cyclic_cayley(std::size_t n) {
  const Element one[] = {1};
  auto g = cyclic(n);
  return cayley_graph(g, GeneratingSet::validate(g, one));
}

// Index of a Boolean function's matrix within D(Bᵐ, Bⁿ).
std::optional<std::size_t> matrix_index(const DiffSpace &space,
                                        const GF2Matrix &m) {
  return space.index_of(to_finite_map(m));
}

ScenarioResult pentacle_scenario() {
  const auto p = pentacle();
  bool ok = p.size() == 5;
  for (Vertex v = 0; ok && v < 5; ++v)
    for (Vertex u = 0; u < 5; ++u)
      ok = ok && p.adjacent(v, u) == (u != (v + 3) % 5);
  const auto props = space_properties(p);
  std::ostringstream detail;
  detail << std::boolalpha << "T0=" << props.is_T0
         << " topological=" << props.is_topological;
  return {"pentacle neighborhoods and properties",
          ok && props.is_T0 && !props.is_topological, detail.str()};
}

ScenarioResult pentacle_dot_scenario() {
  const auto c = count_dot(emit_dot(pentacle()));
  return {"pentacle DOT reduction",
          c.nodes == 5 && c.undirected == 5 && c.directed == 5, describe(c)};
}

ScenarioResult s3_generators_scenario() {
  const auto s3 = symmetric(3);
  const Element rt[] = {1, 3};
  const auto cl = closure(s3, rt);
  bool ok = cl.size() == 6;
  std::string detail = "<r,t> has " + std::to_string(cl.size()) + " elements";
  const Element redundant[] = {1, 2, 3};
  try {
    GeneratingSet::validate(s3, redundant);
    ok = false;
    detail += "; {r,r2,t} accepted";
  } catch (const Error &e) {
    ok = ok && e.code() == ErrorCode::Redundant;
    detail += "; {r,r2,t}: " + std::string(e.what());
  }
  return {"S3 generated by r and t, {r,r2,t} redundant", ok, detail};
}

ScenarioResult s3_dot_scenario() {
  const auto c = count_dot(emit_dot(s3_cayley().digraph(), symmetric(3).names()));
  return {"S3 Cayley graph DOT reduction",
          c.nodes == 6 && c.undirected == 3 && c.directed == 6, describe(c)};
}

ScenarioResult s3_translation_scenario() {
  const auto check = left_mult_automorphism_check(s3_cayley());
  return {"S3 left translations are automorphisms", check.holds, check.detail};
}

ScenarioResult integers_scenario() {
  const auto d = integers_diff_space();
  bool ok = d.size() == 2;
  for (auto l : d)
    ok = ok && is_isolated(l) && is_continuous_on_window(l, 20);
  // f(n) = n on a window is differentiable with the identity; shifted by one
  // it is differentiable nowhere.
  IntegerWindow ident{-3, {-3, -2, -1, 0, 1, 2, 3}};
  IntegerWindow shifted{-3, {-2, -1, 0, 1, 2, 3, 4}};
  const auto a = integers_differentiable_at(ident, 0);
  const auto b = integers_differentiable_at(shifted, 0);
  ok = ok && a == std::vector{IntegerLineMap::Identity} && b.empty();
  return {"Z: two isolated differentials", ok,
          std::to_string(d.size()) + " members"};
}

ScenarioResult integers_plane_scenario() {
  const auto d = integers_plane_diff_space();
  bool ok = d.size() == 4;
  for (auto l : d)
    ok = ok && is_isolated(l) && is_continuous_on_window(l, 10);
  // Addition on the cyclic surrogate Z6 x Z6 with the box structure.
  const auto z6 = cyclic_cayley(6);
  const auto plane = box_product(z6.digraph(), z6.digraph());
  std::vector<Vertex> sum(36);
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      sum[pair_index(a, b, 6)] = (a + b) % 6;
  const bool add_ok = is_continuous(plane, z6.digraph(), FiniteMap(6, sum));
  return {"Z2: four differentials, addition continuous", ok && add_ok,
          std::to_string(d.size()) + " members, addition continuous=" +
              (add_ok ? "true" : "false")};
}

ScenarioResult diagonal_scenario() {
  std::vector<std::pair<std::string, CayleyGraph>> cases;
  cases.emplace_back("Z6", cyclic_cayley(6));
  cases.emplace_back("S3", s3_cayley());
  cases.emplace_back("B2", hypercube(2));
  bool ok = true;
  std::string detail;
  for (const auto &[name, c] : cases) {
    const auto target = direct_sum(c, c);
    const auto space = diff_space(c, target);
    const auto n = c.group().order();
    std::vector<Vertex> diag(n);
    for (Vertex x = 0; x < n; ++x)
      diag[x] = pair_index(x, x, n);
    const FiniteMap f(n * n, diag);
    std::size_t continuous = 0, differentiable = 0;
    for (Vertex a = 0; a < n; ++a) {
      continuous += is_continuous_at(c.digraph(), target.digraph(), f, a);
      differentiable += !differentials_at({space, f, a}).empty();
    }
    ok = ok && continuous == 0 && differentiable == 0;
    detail += name + ": continuous at " + std::to_string(continuous) +
              ", differentiable at " + std::to_string(differentiable) + "; ";
  }
  detail.resize(detail.size() - 2);
  return {"diagonal nowhere continuous or differentiable", ok, detail};
}

ScenarioResult boolean_worked_scenario() {
  const auto f = parse_bool_function("(p,(1+p)(1+q),q)", 2);
  const auto at = BoolPoint::parse("(1,1)");
  const auto ds = boolean_differentials_at(f, at);
  const auto expected = GF2Matrix::parse("[[1,0],[0,0],[0,1]]");
  const bool ok = ds.size() == 1 && ds[0] == expected && is_isolated_linear(expected);
  std::string detail;
  for (const auto &m : ds)
    detail += m.to_formula() + " ";
  return {"Boolean f at (1,1) has the single differential (p,q) -> (p,0,q)", ok,
          detail.empty() ? "none" : detail.substr(0, detail.size() - 1)};
}

ScenarioResult boolean_g_scenario() {
  const auto g = parse_bool_function("((1+q)(1+p+pr),(1+r)q)", 3);
  const auto ds = boolean_differentials_at(g, BoolPoint::parse("(1,0,1)"));
  const auto expected = GF2Matrix::parse("[[0,1,1],[0,0,0]]");
  const bool ok = std::find(ds.begin(), ds.end(), expected) != ds.end();
  return {"Boolean g at (1,0,1) admits (p,q,r) -> (q+r,0)", ok,
          std::to_string(ds.size()) + " differentials"};
}

ScenarioResult chain_rule_scenario() {
  const auto b2 = hypercube(2), b3 = hypercube(3);
  const auto inner = diff_space(b2, b3);
  const auto outer = diff_space(b3, b2);
  const auto composite = diff_space(b2, b2);
  const auto f = parse_bool_function("(p,(1+p)(1+q),q)", 2).to_finite_map();
  const auto g = parse_bool_function("((1+q)(1+p+pr),(1+r)q)", 3).to_finite_map();
  const Vertex at = BoolPoint::parse("(1,1)").bits();
  const auto report = chain_rule_check(g, f, at, inner, outer, composite);
  const auto gf = compose(g, f);
  const bool matches_formula =
      gf == parse_bool_function("(q,(1+p)(1+q))", 2).to_finite_map();
  const auto want = matrix_index(composite, GF2Matrix::parse("[[0,1],[0,0]]"));
  const auto ds = differentials_at({composite, gf, at});
  const bool listed =
      want && std::find(ds.begin(), ds.end(), *want) != ds.end();
  return {"chain rule gives (p,q) -> (q,0) for g o f at (1,1)",
          report.holds && report.pairs_checked > 0 && matches_formula && listed,
          std::to_string(report.pairs_checked) + " pairs, " +
              std::to_string(report.violations.size()) + " violations"};
}

ScenarioResult bad_example_scenario() {
  const auto b3 = hypercube(3);
  const auto f = parse_bool_function(
      "(p(1+q)(1+r),pr(1+q),r(1+p)(1+q))", 3);
  const auto at = BoolPoint::parse("(1,0,1)");
  const bool differentiable = boolean_differentiable_at(f, at);
  const bool continuous =
      is_continuous_at(b3.digraph(), b3.digraph(), f.to_finite_map(), at.bits());
  return {"bad example differentiable but discontinuous at (1,0,1)",
          differentiable && !continuous,
          std::string("differentiable=") + (differentiable ? "true" : "false") +
              " continuous=" + (continuous ? "true" : "false")};
}

ScenarioResult endomorphism_scenario() {
  const auto s3 = s3_cayley();
  const auto homs = enumerate_homomorphisms(s3.group(), s3.group());
  const auto space = diff_space(s3, s3);
  return {"S3 endomorphisms: 10 homomorphisms, 3 differentials",
          homs.size() == 10 && space.size() == 3,
          "|Hom|=" + std::to_string(homs.size()) +
              " |D|=" + std::to_string(space.size())};
}

} // namespace

std::vector<ScenarioResult> run_reference_scenarios() {
  using Scenario = ScenarioResult (*)();
  const Scenario all[] = {
      pentacle_scenario,       pentacle_dot_scenario, s3_generators_scenario,
      s3_dot_scenario,         s3_translation_scenario, integers_scenario,
      integers_plane_scenario, diagonal_scenario,     boolean_worked_scenario,
      boolean_g_scenario,      chain_rule_scenario,   bad_example_scenario,
      endomorphism_scenario,
  };
  std::vector<ScenarioResult> results;
  for (auto run : all) {
    try {
      results.push_back(run());
    } catch (const Error &e) {
      results.push_back({"(scenario threw)", false,
                         std::string(to_string(e.code())) + ": " + e.what()});
    }
  }
  return results;
}

} // namespace convdiff
