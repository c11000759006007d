// Prints one PASS/FAIL line per acceptance criterion. Exits 2 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "convdiff/boolean.hpp"
#include "convdiff/cayley.hpp"
#include "convdiff/differential.hpp"
#include "convdiff/digraph.hpp"
#include "convdiff/error.hpp"
#include "convdiff/group.hpp"
#include "oracles.hpp"

using namespace convdiff;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

constexpr std::uint64_t kSeed = 0x5eed'c0de;

std::string str(std::size_t n) { return std::to_string(n); }

Outcome pentacle_criterion() {
  const auto p = pentacle();
  std::size_t wrong = 0;
  for (Vertex v = 0; v < 5; ++v) {
    std::vector<Vertex> want;
    for (Vertex u = 0; u < 5; ++u)
      if (u != (v + 3) % 5)
        want.push_back(u);
    wrong += !std::ranges::equal(p.nbhd(v), want);
  }
  const auto props = space_properties(p);
  const bool t0 = oracle::t0_by_filters(p.neighborhoods());
  const bool top = oracle::topological_by_closure(p.neighborhoods());
  return {wrong == 0 && props.is_T0 && t0 && !props.is_topological && !top,
          str(wrong) + " wrong neighborhoods, T0=" + (props.is_T0 ? "true" : "false") +
              " topological=" + (props.is_topological ? "true" : "false")};
}

Outcome integer_line_criterion() {
  std::size_t windows = 0, mismatches = 0;
  for (std::int64_t n = -1; n <= 1; ++n) {
    // Window [n-1, n+2], every value in -2..2.
    oracle::for_each_map(4, 5, [&](const std::vector<Vertex> &v) {
      IntegerWindow w{n - 1, {}};
      for (auto x : v)
        w.values.push_back(static_cast<std::int64_t>(x) - 2);
      std::vector<IntegerLineMap> want;
      if (w(n) == 0 && w(n + 1) == 0)
        want.push_back(IntegerLineMap::Zero);
      if (w(n) == n && w(n + 1) == n + 1)
        want.push_back(IntegerLineMap::Identity);
      mismatches += integers_differentiable_at(w, n) != want;
      ++windows;
    });
  }
  bool guarded = false;
  try {
    integers_differentiable_at(IntegerWindow{0, {0}}, 0);
  } catch (const Error &e) {
    guarded = e.code() == ErrorCode::WindowTooSmall;
  }
  return {mismatches == 0 && guarded,
          str(windows) + " windows, " + str(mismatches) + " mismatches"};
}

Outcome integer_plane_criterion() {
  const auto d = integers_plane_diff_space();
  const auto z6 = cyclic(6);
  const Element one[] = {1};
  const auto c = cayley_graph(z6, GeneratingSet::validate(z6, one));
  const auto plane = box_product(c.digraph(), c.digraph());
  std::vector<Vertex> sum(36);
  for (Vertex a = 0; a < 6; ++a)
    for (Vertex b = 0; b < 6; ++b)
      sum[pair_index(a, b, 6)] = (a + b) % 6;
  const bool lib = is_continuous(plane, c.digraph(), FiniteMap(6, sum));
  const bool direct = oracle::graph_hom(plane.neighborhoods(),
                                        c.digraph().neighborhoods(), sum);
  return {d.size() == 4 && lib && direct,
          str(d.size()) + " members, addition continuous=" + (lib ? "true" : "false")};
}

Outcome diagonal_criterion() {
  std::vector<oracle::NamedCayley> cases;
  {
    const auto z6 = cyclic(6);
    const Element one[] = {1};
    cases.push_back({"Z6", cayley_graph(z6, GeneratingSet::validate(z6, one))});
    for (auto &nc : oracle::standard_cayley_graphs())
      if (nc.name == "S3" || nc.name == "B2")
        cases.push_back(std::move(nc));
  }
  bool pass = true;
  std::string detail;
  for (const auto &[name, c] : cases) {
    const auto target = direct_sum(c, c);
    const auto space = diff_space(c, target, {}, true);
    const auto n = c.group().order();
    std::vector<Vertex> diag(n);
    for (Vertex x = 0; x < n; ++x)
      diag[x] = pair_index(x, x, n);
    const FiniteMap f(n * n, diag);
    std::size_t cont = 0, diff = 0;
    for (Vertex a = 0; a < n; ++a) {
      const bool lc = is_continuous_at(c.digraph(), target.digraph(), f, a);
      const bool oc = oracle::graph_hom_at(c.digraph().neighborhoods(),
                                           target.digraph().neighborhoods(), diag, a);
      const bool ld = !differentials_at({space, f, a}).empty();
      const bool od = !oracle::differentials_direct(c.digraph().neighborhoods(),
                                                   target.digraph().neighborhoods(),
                                                   space.maps(), f, a)
                           .empty();
      pass = pass && lc == oc && ld == od;
      cont += lc;
      diff += ld;
    }
    pass = pass && cont == 0 && diff == 0;
    detail += name + " " + str(cont) + "/" + str(diff) + " ";
  }
  return {pass, "continuous/differentiable points: " + detail};
}

Outcome boolean_worked_criterion() {
  const auto f = parse_bool_function("(p,(1+p)(1+q),q)", 2);
  const auto g = parse_bool_function("((1+q)(1+p+pr),(1+r)q)", 3);
  const auto df = boolean_differentials_at(f, BoolPoint::parse("(1,1)"));
  const auto dg = boolean_differentials_at(g, BoolPoint::parse("(1,0,1)"));
  const auto want_f = GF2Matrix::from_columns(3, {0b100, 0b001});
  const auto want_g = GF2Matrix::parse("[[0,1,1],[0,0,0]]");
  const bool f_ok = df == std::vector{want_f};
  const bool g_ok = std::ranges::find(dg, want_g) != dg.end();

  const auto b2 = hypercube(2), b3 = hypercube(3);
  const auto inner = diff_space(b2, b3), outer = diff_space(b3, b2),
             composite = diff_space(b2, b2);
  const Vertex at = 0b11;
  const auto report = chain_rule_check(g.to_finite_map(), f.to_finite_map(), at,
                                       inner, outer, composite);
  const auto gf = compose(g.to_finite_map(), f.to_finite_map());
  const auto q0 = composite.index_of(to_finite_map(GF2Matrix::parse("[[0,1],[0,0]]")));
  const auto dgf = differentials_at({composite, gf, at});
  const bool chain_ok = report.holds && report.pairs_checked > 0 && q0 &&
                        std::ranges::find(dgf, *q0) != dgf.end();
  return {f_ok && g_ok && chain_ok,
          "df=" + (df.empty() ? std::string("none") : df[0].to_formula()) +
              ", " + str(dg.size()) + " differentials of g, chain rule " +
              str(report.pairs_checked) + " pairs"};
}

Outcome bad_example_criterion() {
  const auto f = parse_bool_function("(p(1+q)(1+r),pr(1+q),r(1+p)(1+q))", 3);
  const auto at = BoolPoint::parse("(1,0,1)");
  const auto ds = boolean_differentials_at(f, at);
  const auto b3 = hypercube(3);
  const bool cont = is_continuous_at(b3.digraph(), b3.digraph(), f.to_finite_map(), at.bits());
  const bool zero_listed = std::ranges::find(ds, GF2Matrix::zero(3, 3)) != ds.end();
  return {!ds.empty() && zero_listed && !cont,
          str(ds.size()) + " differentials, continuous=" + (cont ? "true" : "false")};
}

// Random functions C -> D drawn from three families, plus every function when
// there are few enough.
std::vector<FiniteMap> sample_functions(std::mt19937_64 &rng, const CayleyGraph &c,
                                        const CayleyGraph &d, const DiffSpace &space,
                                        std::size_t random_count) {
  const auto n = c.group().order(), k = d.group().order();
  std::vector<FiniteMap> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n && total <= 4096; ++i)
    total *= k;
  if (total <= 4096)
    oracle::for_each_map(n, k, [&](const std::vector<Vertex> &v) {
      out.emplace_back(k, v);
    });

  std::vector<Vertex> small{0};
  for (auto g : d.gens().elements())
    if (element_order(d.group(), g) == 2)
      small.push_back(g);
  std::uniform_int_distribution<Vertex> any(0, static_cast<Vertex>(k - 1));
  for (std::size_t i = 0; i < random_count; ++i) {
    std::vector<Vertex> v(n);
    switch (i % 3) {
    case 0:
      for (auto &x : v)
        x = any(rng);
      break;
    case 1:
      for (auto &x : v)
        x = small[rng() % small.size()];
      break;
    default: {
      const auto &l = space.map(rng() % space.size());
      v.assign(l.values().begin(), l.values().end());
      const auto flips = 1 + rng() % 2;
      for (std::size_t j = 0; j < flips; ++j)
        v[rng() % n] = any(rng);
    }
    }
    out.emplace_back(k, v);
  }
  return out;
}

Outcome equivalence_criterion() {
  std::mt19937_64 rng(kSeed);
  const auto groups = oracle::standard_cayley_graphs();
  std::size_t queries = 0, sweeps = 0, mismatches = 0;
  std::vector<std::string> no_sweep;
  for (const auto &[cn, c] : groups)
    for (const auto &[dn, d] : groups) {
      const auto space = diff_space(c, d, {}, true);
      const auto fs = sample_functions(rng, c, d, space, 510);
      bool swept = false;
      for (const auto &f : fs)
        for (Vertex a = 0; a < c.group().order(); ++a) {
          const DifferentialQuery q{space, f, a};
          const auto generic = differentials_at(q);
          bool same = differentials_by_theorem(q) == generic &&
                      differential_oracle(q, OracleMode::SmallestNeighborhood) == generic;
          if (filter_sweep_feasible(q)) {
            same = same && differential_oracle(q, OracleMode::FilterSweep) == generic;
            ++sweeps;
            swept = true;
          }
          mismatches += !same;
          ++queries;
        }
      if (!swept)
        no_sweep.push_back(cn + "->" + dn);
    }
  std::string detail = str(queries) + " queries, " + str(sweeps) +
                       " with the literal sweep, " + str(mismatches) + " mismatches";
  if (!no_sweep.empty()) {
    detail += "; sweep beyond guard for";
    for (const auto &p : no_sweep)
      detail += " " + p;
  }
  return {mismatches == 0, detail};
}

Outcome lemma_criterion() {
  const auto groups = oracle::standard_cayley_graphs();
  std::size_t checks = 0, mismatches = 0;
  for (const auto &[cn, c] : groups)
    for (const auto &[dn, d] : groups) {
      for (const auto &h : enumerate_homomorphisms(c.group(), d.group())) {
        mismatches += is_continuous_at(c.digraph(), d.digraph(), h, 0) !=
                      is_continuous(c.digraph(), d.digraph(), h);
        ++checks;
      }
      const auto space = diff_space(c, d);
      for (const auto &phi : space.maps())
        for (const auto &psi : space.maps()) {
          const bool by_generator =
              phi == psi || shared_involution(d, phi, psi).has_value();
          mismatches += by_generator != hom_neighbor(c.digraph(), d.digraph(), phi, psi);
          ++checks;
        }
    }
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned n = 1; n <= 3; ++n) {
      const auto x = hypercube(m), y = hypercube(n);
      std::vector<GF2Matrix> continuous;
      for (std::uint32_t bits = 0; bits < (1u << (m * n)); ++bits) {
        std::vector<std::uint32_t> cols(m);
        for (unsigned j = 0; j < m; ++j)
          cols[j] = (bits >> (j * n)) & ((1u << n) - 1);
        const auto mat = GF2Matrix::from_columns(n, cols);
        const bool generic = is_continuous(x.digraph(), y.digraph(), to_finite_map(mat));
        mismatches += is_continuous_linear(mat) != generic;
        ++checks;
        if (generic)
          continuous.push_back(mat);
      }
      for (const auto &mat : continuous) {
        const auto nb = linear_neighbors(mat);
        for (const auto &k : continuous) {
          const bool lemma = std::ranges::find(nb, k) != nb.end();
          mismatches += lemma != hom_neighbor(x.digraph(), y.digraph(),
                                              to_finite_map(k), to_finite_map(mat));
          ++checks;
        }
      }
    }
  return {mismatches == 0, str(checks) + " checks, " + str(mismatches) + " mismatches"};
}

// A map X -> Y continuous at a: values on N(a) stay inside N(g(a)).
FiniteMap continuous_at_sample(std::mt19937_64 &rng, const CayleyGraph &x,
                               const CayleyGraph &y, const DiffSpace &space,
                               Vertex a) {
  const auto n = x.group().order(), k = y.group().order();
  std::vector<Vertex> v(n);
  if (rng() % 2) {
    const auto &l = space.map(rng() % space.size());
    v.assign(l.values().begin(), l.values().end());
    v[rng() % n] = static_cast<Vertex>(rng() % k);
  } else {
    for (auto &t : v)
      t = static_cast<Vertex>(rng() % k);
  }
  const auto nb = y.digraph().nbhd(v[a]);
  for (auto u : x.digraph().nbhd(a))
    if (u != a)
      v[u] = nb[rng() % nb.size()];
  return FiniteMap(k, v);
}

Outcome chain_rule_criterion() {
  std::mt19937_64 rng(kSeed + 9);
  const auto groups = oracle::standard_cayley_graphs();
  std::map<std::pair<std::size_t, std::size_t>, DiffSpace> spaces;
  auto space = [&](std::size_t i, std::size_t j) -> const DiffSpace & {
    auto it = spaces.find({i, j});
    if (it == spaces.end())
      it = spaces.emplace(std::pair{i, j}, diff_space(groups[i].graph, groups[j].graph)).first;
    return it->second;
  };
  // Triples where either map has no differential are drawn again, so every
  // counted triple exercises at least one pair.
  std::size_t triples = 0, drawn = 0, pairs = 0, violations = 0;
  while (triples < 1000) {
    const auto i = rng() % groups.size(), j = rng() % groups.size(),
               l = rng() % groups.size();
    const auto &x = groups[i].graph, &y = groups[j].graph, &z = groups[l].graph;
    const Vertex a = static_cast<Vertex>(rng() % x.group().order());
    const auto g = continuous_at_sample(rng, x, y, space(i, j), a);
    const auto f = continuous_at_sample(rng, y, z, space(j, l), g(a));
    const auto report = chain_rule_check(f, g, a, space(i, j), space(j, l), space(i, l));
    ++drawn;
    if (report.pairs_checked == 0)
      continue;
    ++triples;
    pairs += report.pairs_checked;
    violations += report.violations.size();
  }
  return {violations == 0, str(triples) + " triples (" + str(drawn) + " drawn), " +
                               str(pairs) + " pairs, " + str(violations) + " violations"};
}

Outcome t1_criterion() {
  std::mt19937_64 rng(kSeed + 10);
  std::size_t trials = 0, differentials = 0, violations = 0;
  while (trials < 500) {
    const auto n = 2 + rng() % 5, k = 2 + rng() % 3;
    const ReflexiveDigraph x(oracle::random_reflexive_digraph(rng, n, 0.3));
    const auto y = discrete_space(k);
    auto maps = continuous_maps(x, y);
    std::shuffle(maps.begin(), maps.end(), rng);
    maps.resize(1 + rng() % maps.size());
    const auto space = DiffSpace::from_maps(x, y, maps);
    std::vector<Vertex> v(n);
    for (auto &t : v)
      t = static_cast<Vertex>(rng() % k);
    if (rng() % 2) {
      const auto &l = space.map(rng() % space.size());
      v.assign(l.values().begin(), l.values().end());
      v[rng() % n] = static_cast<Vertex>(rng() % k);
    }
    const FiniteMap f(k, v);
    const Vertex a = static_cast<Vertex>(rng() % n);
    const DifferentialQuery q{space, f, a};
    const auto ds = differentials_at(q);
    for (auto l : ds)
      violations += space.map(l)(a) != f(a);
    differentials += ds.size();
    violations += !t1_forces_value_check(q);
    ++trials;
  }
  return {violations == 0, str(trials) + " trials, " + str(differentials) +
                               " differentials, " + str(violations) + " violations"};
}

Outcome census_criterion() {
  std::mt19937_64 rng(kSeed + 11);
  std::size_t mismatches = 0;
  const auto b3 = hypercube(3), b1 = hypercube(1);
  const auto space = diff_space(b3, b1);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::uint32_t> table(8);
    for (auto &x : table)
      x = rng() % 2;
    const BoolFunction f(3, 1, table);
    const auto report = scalar_differentiability_census(f);
    // Expected pattern, checked point by point with the generic criterion.
    for (Vertex x = 0; x < 8; ++x) {
      const bool near_zero = std::popcount(x) <= 1;
      const bool expected = !near_zero || table[0] == 0;
      const bool generic = !differentials_at({space, f.to_finite_map(), x}).empty();
      mismatches += expected != generic || report.differentiable[x] != expected;
    }
    mismatches += !report.matches_corollary();
  }
  return {mismatches == 0, "200 functions, " + str(mismatches) + " mismatches"};
}

Outcome endomorphism_criterion() {
  const auto groups = oracle::standard_cayley_graphs();
  const auto &s3 = std::ranges::find(groups, "S3", &oracle::NamedCayley::name)->graph;
  const auto homs = enumerate_homomorphisms(s3.group(), s3.group());
  const auto brute = oracle::homomorphisms_by_exhaustion(s3.group(), s3.group());
  const auto space = diff_space(s3, s3, {}, true);
  const auto brute_d = oracle::diff_space_by_exhaustion(s3, s3);
  const bool ok = homs.size() == 10 && homs == brute && space.size() == 3 &&
                  space.maps() == brute_d;
  return {ok, "|Hom|=" + str(homs.size()) + " (oracle " + str(brute.size()) +
                  "), |D|=" + str(space.size()) + " (oracle " + str(brute_d.size()) + ")"};
}

} // namespace

int main() {
  const std::pair<const char *, std::function<Outcome()>> criteria[] = {
      {"pentacle neighborhoods, T0, not topological", pentacle_criterion},
      {"integer line differentiability windows", integer_line_criterion},
      {"integer plane differential space and addition", integer_plane_criterion},
      {"diagonal nowhere continuous or differentiable", diagonal_criterion},
      {"Boolean worked example and chain rule", boolean_worked_criterion},
      {"discontinuous but differentiable example", bad_example_criterion},
      {"criterion, classification and oracle agree", equivalence_criterion},
      {"lemma equivalence suites", lemma_criterion},
      {"chain rule on random triples", chain_rule_criterion},
      {"discrete codomain forces L(a) = f(a)", t1_criterion},
      {"scalar differentiability census", census_criterion},
      {"S3 endomorphism counts", endomorphism_criterion},
  };
  bool all = true;
  int index = 0;
  for (const auto &[name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << index << ": " << name
              << " (" << o.detail << ", " << ms << " ms)" << std::endl;
  }
  return all ? 0 : 2;
}
