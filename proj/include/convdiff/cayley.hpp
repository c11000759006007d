#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convdiff/digraph.hpp"
#include "convdiff/finite_map.hpp"
#include "convdiff/group.hpp"
#include "convdiff/limits.hpp"

namespace convdiff {

/// Reflexive Cayley graph: N(g) = {g} ∪ {gγ : γ ∈ Γ}.
class CayleyGraph {
public:
  CayleyGraph(FiniteGroup group, GeneratingSet gens);

  const FiniteGroup &group() const noexcept { return group_; }
  const GeneratingSet &gens() const noexcept { return gens_; }
  const ReflexiveDigraph &digraph() const noexcept { return digraph_; }

  /// N(e) = {e} ∪ Γ.
  std::span<const Vertex> identity_nbhd() const { return digraph_.nbhd(0); }

private:
  FiniteGroup group_;
  GeneratingSet gens_;
  ReflexiveDigraph digraph_;
};

CayleyGraph cayley_graph(FiniteGroup group, GeneratingSet gens);

/// Cayley graph of G ⊕ H generated by (Γ × {e}) ∪ ({e} × Δ). Its digraph is
/// the box product of the factors.
CayleyGraph direct_sum(const CayleyGraph &left, const CayleyGraph &right,
                       const Limits &limits = {});

struct AutomorphismCheck {
  bool holds = true;
  /// The multiplier v whose left translation failed.
  std::optional<Element> witness;
  std::string detail;
};

/// Checks that x ↦ vx is a digraph automorphism for every v.
AutomorphismCheck left_mult_automorphism_check(const CayleyGraph &graph);
AutomorphismCheck left_mult_automorphism_check(const FiniteGroup &group,
                                               const ReflexiveDigraph &digraph);

/// A chosen subspace D(X,Y) of continuous maps together with its
/// neighborhood structure. Built either from Cayley graphs (continuous
/// homomorphisms) or from an explicit list of continuous maps.
class DiffSpace {
public:
  /// Neighborhoods from the exponential structure: K ∈ N(L) iff
  /// hom_neighbor(K, L). Throws NotContinuous if any map is not.
  static DiffSpace from_maps(ReflexiveDigraph domain, ReflexiveDigraph codomain,
                             std::vector<FiniteMap> maps);

  const ReflexiveDigraph &domain() const noexcept { return domain_; }
  const ReflexiveDigraph &codomain() const noexcept { return codomain_; }
  const std::optional<CayleyGraph> &domain_cayley() const noexcept {
    return domain_cayley_;
  }
  const std::optional<CayleyGraph> &codomain_cayley() const noexcept {
    return codomain_cayley_;
  }

  std::size_t size() const noexcept { return maps_.size(); }
  const std::vector<FiniteMap> &maps() const noexcept { return maps_; }
  const FiniteMap &map(std::size_t i) const { return maps_[i]; }
  /// Sorted map indices, always containing i.
  const std::vector<std::size_t> &nbhd(std::size_t i) const { return nbhd_[i]; }
  bool adjacent(std::size_t l, std::size_t k) const;

  std::optional<std::size_t> index_of(const FiniteMap &map) const;

  /// The space's neighborhoods as a reflexive digraph on map indices.
  ReflexiveDigraph as_digraph() const;

private:
  friend DiffSpace diff_space(const CayleyGraph &, const CayleyGraph &,
                              const Limits &, bool);
  DiffSpace() = default;

  ReflexiveDigraph domain_;
  ReflexiveDigraph codomain_;
  std::optional<CayleyGraph> domain_cayley_;
  std::optional<CayleyGraph> codomain_cayley_;
  std::vector<FiniteMap> maps_;
  std::vector<std::vector<std::size_t>> nbhd_;
};

/// D(C,D): homomorphisms continuous at the identity, adjacent when distinct
/// and both images fit in {e, δ} for an order-2 generator δ of the codomain.
/// With `cross_check`, continuity and neighborhoods are recomputed from the
/// digraph definitions and any disagreement throws CrossCheckFailed.
DiffSpace diff_space(const CayleyGraph &domain, const CayleyGraph &codomain,
                     const Limits &limits = {}, bool cross_check = false);

bool is_isolated(const DiffSpace &space, std::size_t map_index);

/// The order-2 generator δ with φ(G) ∪ ψ(G) ⊆ {e, δ}, if one exists.
std::optional<Element> shared_involution(const CayleyGraph &codomain,
                                         const FiniteMap &phi,
                                         const FiniteMap &psi);

// The integer line ℤ with generator {1} and the plane ℤ² with the box
// structure are infinite, so their differential spaces are described
// symbolically.

enum class IntegerLineMap { Zero, Identity };
enum class IntegerPlaneMap { Zero, Proj1, Proj2, Sum };

/// D(ℤ,ℤ): the discrete two-point space {n ↦ 0, n ↦ n}.
std::vector<IntegerLineMap> integers_diff_space();
/// D(ℤ²,ℤ): {0, (a,b) ↦ a, (a,b) ↦ b, (a,b) ↦ a+b}.
std::vector<IntegerPlaneMap> integers_plane_diff_space();

std::int64_t apply(IntegerLineMap map, std::int64_t n);
std::int64_t apply(IntegerPlaneMap map, std::int64_t a, std::int64_t b);
IntegerLineMap compose(IntegerLineMap outer, IntegerLineMap inner);
/// No generator of ℤ has order 2, so every member is isolated.
bool is_isolated(IntegerLineMap map);
bool is_isolated(IntegerPlaneMap map);
std::string to_string(IntegerLineMap map);
std::string to_string(IntegerPlaneMap map);

/// Checks f(N(v)) ⊆ N(f(v)) for v in [-radius, radius] (or its square), with
/// N(n) = {n, n+1} and N((a,b)) = {(a,b), (a+1,b), (a,b+1)}.
bool is_continuous_on_window(IntegerLineMap map, std::int64_t radius);
bool is_continuous_on_window(IntegerPlaneMap map, std::int64_t radius);

} // namespace convdiff
