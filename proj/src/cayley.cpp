#include "convdiff/cayley.hpp"

#include <algorithm>
#include <string>

#include "convdiff/error.hpp"

namespace convdiff {

namespace {

ReflexiveDigraph build_cayley_digraph(const FiniteGroup &group,
                                      const GeneratingSet &gens) {
  std::vector<std::vector<Vertex>> nbhd(group.order());
  for (Element g = 0; g < group.order(); ++g) {
    nbhd[g].push_back(g);
    for (auto gamma : gens.elements())
      nbhd[g].push_back(group.mul(g, gamma));
  }
  return ReflexiveDigraph(std::move(nbhd));
}

bool continuous_at_identity(const CayleyGraph &domain,
                            const CayleyGraph &codomain, const FiniteMap &phi) {
  for (auto x : domain.identity_nbhd())
    if (!codomain.digraph().adjacent(FiniteGroup::identity(), phi(x)))
      return false;
  return true;
}

} // namespace

CayleyGraph::CayleyGraph(FiniteGroup group, GeneratingSet gens)
    : group_(std::move(group)),
      gens_(GeneratingSet::validate(group_, gens.elements())),
      digraph_(build_cayley_digraph(group_, gens_)) {}

CayleyGraph cayley_graph(FiniteGroup group, GeneratingSet gens) {
  return CayleyGraph(std::move(group), std::move(gens));
}

CayleyGraph direct_sum(const CayleyGraph &left, const CayleyGraph &right,
                       const Limits &limits) {
  auto sum = direct_sum(left.group(), right.group(), limits);
  const auto nh = right.group().order();
  std::vector<Element> gens;
  for (auto gamma : left.gens().elements())
    gens.push_back(static_cast<Element>(gamma * nh));
  for (auto delta : right.gens().elements())
    gens.push_back(delta);
  auto validated = GeneratingSet::validate(sum, gens);
  return CayleyGraph(std::move(sum), std::move(validated));
}

AutomorphismCheck left_mult_automorphism_check(const FiniteGroup &group,
                                               const ReflexiveDigraph &digraph) {
  AutomorphismCheck result;
  if (digraph.size() != group.order()) {
    result.holds = false;
    result.detail = "digraph and group have different carriers";
    return result;
  }
  const auto n = group.order();
  for (Element v = 0; v < n; ++v) {
    std::vector<Vertex> forward(n), backward(n);
    for (Element x = 0; x < n; ++x) {
      forward[x] = group.mul(v, x);
      backward[x] = group.mul(group.inverse(v), x);
    }
    const FiniteMap lambda(n, std::move(forward));
    const FiniteMap lambda_inv(n, std::move(backward));
    if (!is_continuous(digraph, digraph, lambda) ||
        !is_continuous(digraph, digraph, lambda_inv)) {
      result.holds = false;
      result.witness = v;
      result.detail = "left multiplication by " + group.name(v) +
                      " is not a digraph automorphism";
      return result;
    }
  }
  return result;
}

AutomorphismCheck left_mult_automorphism_check(const CayleyGraph &graph) {
  return left_mult_automorphism_check(graph.group(), graph.digraph());
}

DiffSpace DiffSpace::from_maps(ReflexiveDigraph domain,
                               ReflexiveDigraph codomain,
                               std::vector<FiniteMap> maps) {
  for (const auto &map : maps)
    if (!is_continuous(domain, codomain, map))
      throw Error(ErrorCode::NotContinuous,
                  "differential spaces hold continuous maps only");
  std::sort(maps.begin(), maps.end());
  maps.erase(std::unique(maps.begin(), maps.end()), maps.end());

  DiffSpace space;
  space.nbhd_.resize(maps.size());
  for (std::size_t l = 0; l < maps.size(); ++l)
    for (std::size_t k = 0; k < maps.size(); ++k)
      if (k == l || hom_neighbor_unchecked(domain, codomain, maps[k], maps[l]))
        space.nbhd_[l].push_back(k);
  space.domain_ = std::move(domain);
  space.codomain_ = std::move(codomain);
  space.maps_ = std::move(maps);
  return space;
}

bool DiffSpace::adjacent(std::size_t l, std::size_t k) const {
  return std::binary_search(nbhd_[l].begin(), nbhd_[l].end(), k);
}

std::optional<std::size_t> DiffSpace::index_of(const FiniteMap &map) const {
  auto it = std::lower_bound(maps_.begin(), maps_.end(), map);
  if (it == maps_.end() || *it != map)
    return std::nullopt;
  return static_cast<std::size_t>(it - maps_.begin());
}

ReflexiveDigraph DiffSpace::as_digraph() const {
  std::vector<std::vector<Vertex>> nbhd(nbhd_.size());
  for (std::size_t l = 0; l < nbhd_.size(); ++l)
    for (auto k : nbhd_[l])
      nbhd[l].push_back(static_cast<Vertex>(k));
  return ReflexiveDigraph(std::move(nbhd));
}

std::optional<Element> shared_involution(const CayleyGraph &codomain,
                                         const FiniteMap &phi,
                                         const FiniteMap &psi) {
  std::optional<Element> delta;
  for (const auto *map : {&phi, &psi})
    for (auto value : map->values()) {
      if (value == FiniteGroup::identity())
        continue;
      if (delta && *delta != value)
        return std::nullopt;
      delta = value;
    }
  if (!delta || !codomain.gens().contains(*delta) ||
      codomain.group().mul(*delta, *delta) != FiniteGroup::identity())
    return std::nullopt;
  return delta;
}

DiffSpace diff_space(const CayleyGraph &domain, const CayleyGraph &codomain,
                     const Limits &limits, bool cross_check) {
  auto homs = enumerate_homomorphisms(domain.group(), codomain.group(), limits);

  DiffSpace space;
  space.domain_ = domain.digraph();
  space.codomain_ = codomain.digraph();
  space.domain_cayley_ = domain;
  space.codomain_cayley_ = codomain;

  for (auto &phi : homs) {
    const bool at_identity = continuous_at_identity(domain, codomain, phi);
    if (cross_check &&
        at_identity != is_continuous(domain.digraph(), codomain.digraph(), phi))
      throw Error(ErrorCode::CrossCheckFailed,
                  "continuity at the identity disagrees with global continuity");
    if (at_identity)
      space.maps_.push_back(std::move(phi));
  }

  const auto n = space.maps_.size();
  space.nbhd_.resize(n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t k = 0; k < n; ++k) {
      const bool adjacent =
          k == l ||
          shared_involution(codomain, space.maps_[k], space.maps_[l]).has_value();
      if (cross_check &&
          adjacent != hom_neighbor_unchecked(space.domain_, space.codomain_,
                                             space.maps_[k], space.maps_[l]))
        throw Error(ErrorCode::CrossCheckFailed,
                    "order-2 generator criterion disagrees with hom_neighbor");
      if (adjacent)
        space.nbhd_[l].push_back(k);
    }
  return space;
}

bool is_isolated(const DiffSpace &space, std::size_t map_index) {
  return space.nbhd(map_index).size() == 1;
}

std::vector<IntegerLineMap> integers_diff_space() {
  return {IntegerLineMap::Zero, IntegerLineMap::Identity};
}

std::vector<IntegerPlaneMap> integers_plane_diff_space() {
  return {IntegerPlaneMap::Zero, IntegerPlaneMap::Proj1, IntegerPlaneMap::Proj2,
          IntegerPlaneMap::Sum};
}

std::int64_t apply(IntegerLineMap map, std::int64_t n) {
  return map == IntegerLineMap::Zero ? 0 : n;
}

std::int64_t apply(IntegerPlaneMap map, std::int64_t a, std::int64_t b) {
  switch (map) {
  case IntegerPlaneMap::Zero: return 0;
  case IntegerPlaneMap::Proj1: return a;
  case IntegerPlaneMap::Proj2: return b;
  case IntegerPlaneMap::Sum: return a + b;
  }
  return 0;
}

IntegerLineMap compose(IntegerLineMap outer, IntegerLineMap inner) {
  return outer == IntegerLineMap::Identity ? inner : IntegerLineMap::Zero;
}

bool is_isolated(IntegerLineMap) { return true; }
bool is_isolated(IntegerPlaneMap) { return true; }

std::string to_string(IntegerLineMap map) {
  return map == IntegerLineMap::Zero ? "n -> 0" : "n -> n";
}

std::string to_string(IntegerPlaneMap map) {
  switch (map) {
  case IntegerPlaneMap::Zero: return "(a,b) -> 0";
  case IntegerPlaneMap::Proj1: return "(a,b) -> a";
  case IntegerPlaneMap::Proj2: return "(a,b) -> b";
  case IntegerPlaneMap::Sum: return "(a,b) -> a+b";
  }
  return {};
}

bool is_continuous_on_window(IntegerLineMap map, std::int64_t radius) {
  for (auto n = -radius; n <= radius; ++n) {
    const auto fn = apply(map, n);
    for (auto x : {n, n + 1}) {
      const auto fx = apply(map, x);
      if (fx != fn && fx != fn + 1)
        return false;
    }
  }
  return true;
}

bool is_continuous_on_window(IntegerPlaneMap map, std::int64_t radius) {
  for (auto a = -radius; a <= radius; ++a)
    for (auto b = -radius; b <= radius; ++b) {
      const auto v = apply(map, a, b);
      for (auto [x, y] : {std::pair{a, b}, std::pair{a + 1, b},
                          std::pair{a, b + 1}}) {
        const auto w = apply(map, x, y);
        if (w != v && w != v + 1)
          return false;
      }
    }
  return true;
}

} // namespace convdiff
