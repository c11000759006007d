#include "convdiff/differential.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "convdiff/error.hpp"

namespace convdiff {

namespace {

using Mask = std::uint64_t;

bool matched_in(const DiffSpace &space, std::size_t l, Vertex x, Vertex value) {
  for (auto k : space.nbhd(l))
    if (space.map(k)(x) == value)
      return true;
  return false;
}

struct CayleyPair {
  const CayleyGraph &domain;
  const CayleyGraph &codomain;
};

CayleyPair require_cayley(const DiffSpace &space) {
  if (!space.domain_cayley() || !space.codomain_cayley())
    throw Error(ErrorCode::NotCayley,
                "the group criterion needs Cayley graph domain and codomain");
  return {*space.domain_cayley(), *space.codomain_cayley()};
}

bool is_involutive_generator(const CayleyGraph &graph, Element h) {
  return graph.gens().contains(h) &&
         graph.group().mul(h, h) == FiniteGroup::identity();
}

// The non-identity value of a non-constant L in a non-isolated position.
Element involution_of(const CayleyGraph &codomain, const FiniteMap &l) {
  for (auto v : l.values())
    if (v != FiniteGroup::identity()) {
      if (!is_involutive_generator(codomain, v))
        throw Error(ErrorCode::CrossCheckFailed,
                    "non-isolated map with image outside {e, δ}");
      return v;
    }
  throw Error(ErrorCode::CrossCheckFailed, "constant map reached case 3");
}

// Shared between the corrected classification and the literal statement:
// `vanishes(x)` says whether f(x) must be e when L is not isolated.
template <typename Vanishes>
std::vector<std::size_t> classify(const DifferentialQuery &query,
                                  Vanishes vanishes) {
  validate(query);
  const auto [c, d] = require_cayley(query.space);
  const auto &G = c.group();
  const auto &H = d.group();
  const auto &f = query.f;
  const auto a = query.at;
  const auto e = FiniteGroup::identity();

  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < query.space.size(); ++l) {
    const auto &L = query.space.map(l);
    bool ok = true;
    if (is_isolated(query.space, l)) {
      for (auto gamma : c.identity_nbhd())
        ok = ok && f(G.mul(a, gamma)) == H.mul(L(a), L(gamma));
    } else if (L.is_constant()) {
      for (auto gamma : c.identity_nbhd()) {
        const auto x = G.mul(a, gamma);
        const auto y = f(x);
        ok = ok && (y == e || (is_involutive_generator(d, y) && !vanishes(x)));
      }
    } else {
      const auto delta = involution_of(d, L);
      for (auto gamma : c.identity_nbhd()) {
        const auto x = G.mul(a, gamma);
        const auto y = f(x);
        ok = ok && (y == e || (y == delta && !vanishes(x)));
      }
    }
    if (ok)
      out.push_back(l);
  }
  return out;
}

} // namespace

void validate(const DifferentialQuery &query) {
  const auto &space = query.space;
  if (query.f.dom_size() != space.domain().size() ||
      query.f.cod_size() != space.codomain().size())
    throw Error(ErrorCode::InvalidArgument,
                "function shape does not match the differential space");
  if (query.at >= space.domain().size())
    throw Error(ErrorCode::InvalidArgument,
                "point " + std::to_string(query.at) + " is not in the domain");
}

std::vector<std::size_t> differentials_at(const DifferentialQuery &query) {
  validate(query);
  const auto &space = query.space;
  const auto nbhd_a = space.domain().nbhd(query.at);
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < space.size(); ++l) {
    const bool ok = std::all_of(nbhd_a.begin(), nbhd_a.end(), [&](Vertex x) {
      return matched_in(space, l, x, query.f(x));
    });
    if (ok)
      out.push_back(l);
  }
  return out;
}

std::vector<std::size_t>
differentials_by_theorem(const DifferentialQuery &query) {
  const auto &G = require_cayley(query.space).domain.group();
  std::vector<bool> square(G.order(), false);
  for (auto x : square_subgroup(G))
    square[x] = true;
  return classify(query, [&](Vertex x) { return square[x]; });
}

std::vector<std::size_t>
differentials_by_theorem_as_stated(const DifferentialQuery &query) {
  validate(query);
  const auto [c, d] = require_cayley(query.space);
  const auto &G = c.group();
  const auto e = FiniteGroup::identity();
  const auto &f = query.f;
  const auto a = query.at;

  std::vector<std::size_t> out;
  for (std::size_t l = 0; l < query.space.size(); ++l) {
    const auto &L = query.space.map(l);
    bool ok = true;
    if (is_isolated(query.space, l)) {
      for (auto gamma : c.identity_nbhd())
        ok = ok && f(G.mul(a, gamma)) == d.group().mul(L(a), L(gamma));
    } else if (L.is_constant()) {
      // f(N(a)) ⊆ {e} ∪ {δ ∈ Δ : δ² = e}, and f(e) = e if e ∈ N(a).
      for (auto gamma : c.identity_nbhd()) {
        const auto x = G.mul(a, gamma);
        ok = ok && (f(x) == e || is_involutive_generator(d, f(x)));
        ok = ok && (x != e || f(x) == e);
      }
    } else {
      // f(N(a)) ⊆ {e, δ}, and f(aγ) = e whenever aγ is e or of odd order.
      const auto delta = involution_of(d, L);
      for (auto gamma : c.identity_nbhd()) {
        const auto x = G.mul(a, gamma);
        ok = ok && (f(x) == e || f(x) == delta);
        if (x == e || element_order(G, x) % 2 == 1)
          ok = ok && f(x) == e;
      }
    }
    if (ok)
      out.push_back(l);
  }
  return out;
}

bool filter_sweep_feasible(const DifferentialQuery &query,
                           const Limits &limits) {
  const auto &space = query.space;
  const auto n = space.domain().size();
  const auto d = space.size();
  if (n > 64 || d > 64)
    return false;
  const auto u = space.domain().nbhd(query.at).size();
  const auto log_n = std::bit_width(n);
  return u + d + log_n <= limits.max_filter_sweep_log2;
}

std::vector<std::size_t> differential_oracle(const DifferentialQuery &query,
                                             OracleMode mode,
                                             const Limits &limits) {
  validate(query);
  const auto &space = query.space;
  const auto &f = query.f;
  const auto nbhd_a = space.domain().nbhd(query.at);
  if (nbhd_a.size() * space.size() > limits.max_oracle_work)
    throw Error(ErrorCode::SizeGuardExceeded,
                "oracle work |N(a)|·|D| exceeds guard");

  std::vector<std::size_t> out;
  if (mode == OracleMode::SmallestNeighborhood) {
    // V = N(L), U = N(a): f(x) ∈ V·{x} for every x ∈ U.
    for (std::size_t l = 0; l < space.size(); ++l) {
      bool ok = true;
      for (auto x : nbhd_a) {
        std::vector<Vertex> evaluations;
        for (auto k : space.nbhd(l))
          evaluations.push_back(space.map(k)(x));
        ok = std::find(evaluations.begin(), evaluations.end(), f(x)) !=
             evaluations.end();
        if (!ok)
          break;
      }
      if (ok)
        out.push_back(l);
    }
    return out;
  }

  if (!filter_sweep_feasible(query, limits))
    throw Error(ErrorCode::SizeGuardExceeded,
                "literal filter sweep exceeds guard for this query");

  const auto n = space.domain().size();
  const auto d = space.size();
  const Mask all_x = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const Mask all_d = d == 64 ? ~Mask{0} : (Mask{1} << d) - 1;

  // matches[x]: members k of D with k(x) = f(x), i.e. f(x) ∈ K·{x} iff
  // K ∩ matches[x] ≠ ∅.
  std::vector<Mask> matches(n, 0);
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t k = 0; k < d; ++k)
      if (space.map(k)(x) == f(x))
        matches[x] |= Mask{1} << k;

  auto approximates = [&](Mask set_a, Mask set_k) {
    for (Mask rest = set_a; rest; rest &= rest - 1)
      if (!(matches[std::countr_zero(rest)] & set_k))
        return false;
    return true;
  };

  // Expand a subset index over `members` into a bitmask.
  auto subset_mask = [](const auto &members, Mask pick) {
    Mask out = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (pick >> i & 1)
        out |= Mask{1} << members[i];
    return out;
  };

  const auto u = nbhd_a.size();
  for (std::size_t l = 0; l < d; ++l) {
    const auto &nbhd_l = space.nbhd(l);
    const auto v = nbhd_l.size();
    bool differential = true;

    // ∀ [A] -> a, i.e. nonempty A ⊆ N(a).
    for (Mask pick_a = 1; pick_a < (Mask{1} << u) && differential; ++pick_a) {
      const Mask set_a = subset_mask(nbhd_a, pick_a);
      bool witness = false;
      // ∃ [M] -> L, i.e. nonempty M ⊆ N(L).
      for (Mask pick_m = (Mask{1} << v) - 1; pick_m >= 1 && !witness; --pick_m) {
        const Mask set_m = subset_mask(nbhd_l, pick_m);
        const Mask free_k = all_d & ~set_m;
        bool every_k = true;
        // ∀ K ∈ [M], i.e. K = M ∪ E.
        for (Mask extra = 0;; extra = (extra - free_k) & free_k) {
          const Mask set_k = set_m | extra;
          const Mask free_a = all_x & ~set_a;
          bool some_a = false;
          // ∃ A' ∈ [A], i.e. A' = A ∪ F.
          for (Mask grow = 0;; grow = (grow - free_a) & free_a) {
            if (approximates(set_a | grow, set_k)) {
              some_a = true;
              break;
            }
            if (grow == free_a)
              break;
          }
          if (!some_a) {
            every_k = false;
            break;
          }
          if (extra == free_k)
            break;
        }
        witness = every_k;
      }
      differential = witness;
    }
    if (differential)
      out.push_back(l);
  }
  return out;
}

bool t1_forces_value_check(const DifferentialQuery &query) {
  if (!space_properties(query.space.codomain()).is_T1)
    throw Error(ErrorCode::PreconditionViolated,
                "the codomain is not T1 (equivalently, not discrete)");
  for (auto l : differentials_at(query))
    if (query.space.map(l)(query.at) != query.f(query.at))
      return false;
  return true;
}

ChainRuleReport chain_rule_check(const FiniteMap &f, const FiniteMap &g,
                                 Vertex a, const DiffSpace &inner,
                                 const DiffSpace &outer,
                                 const DiffSpace &composite) {
  if (inner.codomain() != outer.domain() ||
      inner.domain() != composite.domain() ||
      outer.codomain() != composite.codomain())
    throw Error(ErrorCode::InvalidArgument,
                "differential spaces are not composable");
  if (!is_continuous_at(inner.domain(), inner.codomain(), g, a))
    throw Error(ErrorCode::HypothesisViolated,
                "the inner function is not continuous at the point");

  const auto fg = compose(f, g);
  const auto inner_diffs = differentials_at({inner, g, a});
  const auto outer_diffs = differentials_at({outer, f, g(a)});
  const auto composite_diffs = differentials_at({composite, fg, a});

  ChainRuleReport report;
  for (auto lg : inner_diffs)
    for (auto lf : outer_diffs) {
      ++report.pairs_checked;
      const auto index =
          composite.index_of(compose(outer.map(lf), inner.map(lg)));
      if (!index || !std::binary_search(composite_diffs.begin(),
                                        composite_diffs.end(), *index)) {
        report.holds = false;
        report.violations.push_back({lg, lf, index});
      }
    }
  return report;
}

bool is_composition_closed(const DiffSpace &inner, const DiffSpace &outer,
                           const DiffSpace &composite) {
  for (const auto &lg : inner.maps())
    for (const auto &lf : outer.maps())
      if (!composite.index_of(compose(lf, lg)))
        return false;
  return true;
}

std::vector<IntegerLineMap> integers_differentiable_at(const IntegerWindow &f,
                                                       std::int64_t n) {
  if (!f.covers(n) || !f.covers(n + 1))
    throw Error(ErrorCode::WindowTooSmall,
                "window must cover n and n + 1 for n = " + std::to_string(n));
  std::vector<IntegerLineMap> out;
  for (auto l : integers_diff_space()) {
    // N(L) = {L}, so some k ∈ N(L) matches f at x only if L does.
    if (!is_isolated(l))
      throw Error(ErrorCode::CrossCheckFailed, "D(Z,Z) must be discrete");
    if (apply(l, n) == f(n) && apply(l, n + 1) == f(n + 1))
      out.push_back(l);
  }
  return out;
}

} // namespace convdiff
