#pragma once

#include <span>
#include <vector>

#include "convdiff/finite_map.hpp"
#include "convdiff/limits.hpp"

namespace convdiff {

/// A finite reflexive digraph viewed as a convergence space: a filter
/// converges to v iff it contains the graph neighborhood N(v).
class ReflexiveDigraph {
public:
  ReflexiveDigraph() = default;

  /// nbhd[v] lists the out-neighbors of v. Entries are sorted and
  /// deduplicated; v ∉ nbhd[v] throws NotReflexive.
  explicit ReflexiveDigraph(std::vector<std::vector<Vertex>> nbhd);

  std::size_t size() const noexcept { return nbhd_.size(); }
  std::span<const Vertex> nbhd(Vertex v) const { return nbhd_[v]; }
  const std::vector<std::vector<Vertex>> &neighborhoods() const noexcept {
    return nbhd_;
  }

  /// u ∈ N(v).
  bool adjacent(Vertex v, Vertex u) const;

  bool operator==(const ReflexiveDigraph &) const = default;

private:
  std::vector<std::vector<Vertex>> nbhd_;
};

/// Filter on a finite carrier, represented by its smallest member.
class PrincipalFilter {
public:
  /// Throws EmptyFilter when `minset` is empty.
  explicit PrincipalFilter(std::vector<Vertex> minset);
  static PrincipalFilter point(Vertex p) { return PrincipalFilter({p}); }

  std::span<const Vertex> minset() const noexcept { return minset_; }

private:
  std::vector<Vertex> minset_;
};

bool converges(const ReflexiveDigraph &space, const PrincipalFilter &filter,
               Vertex v);

bool is_continuous_at(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                      const FiniteMap &f, Vertex v);
bool is_continuous(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                   const FiniteMap &f);

/// f ∈ N(g) in the space of continuous maps: f(a) ∈ N(g(b)) for all b and
/// a ∈ N(b). Throws NotContinuous if either map is not continuous.
bool hom_neighbor(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                  const FiniteMap &f, const FiniteMap &g);

/// hom_neighbor without the continuity precondition check.
bool hom_neighbor_unchecked(const ReflexiveDigraph &from,
                            const ReflexiveDigraph &to, const FiniteMap &f,
                            const FiniteMap &g);

/// Every graph homomorphism from -> to, in lexicographic order.
std::vector<FiniteMap> continuous_maps(const ReflexiveDigraph &from,
                                       const ReflexiveDigraph &to,
                                       const Limits &limits = {});

/// Vertex (a,b) sits at a·|Y| + b in both products.
inline Vertex pair_index(Vertex a, Vertex b, std::size_t right_size) {
  return static_cast<Vertex>(a * right_size + b);
}

/// N((a,b)) = ({a} × N(b)) ∪ (N(a) × {b}).
ReflexiveDigraph box_product(const ReflexiveDigraph &x,
                             const ReflexiveDigraph &y,
                             const Limits &limits = {});

/// N((a,b)) = N(a) × N(b).
ReflexiveDigraph categorical_product(const ReflexiveDigraph &x,
                                     const ReflexiveDigraph &y,
                                     const Limits &limits = {});

struct SpaceProperties {
  bool is_T0 = false;
  bool is_T1 = false;
  bool is_discrete = false;
  bool is_topological = false;
};

SpaceProperties space_properties(const ReflexiveDigraph &space);

/// Five points, N(p) = everything except p + 3 (mod 5).
ReflexiveDigraph pentacle();

ReflexiveDigraph discrete_space(std::size_t size);

} // namespace convdiff
