#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convdiff/cayley.hpp"
#include "convdiff/finite_map.hpp"
#include "convdiff/limits.hpp"

namespace convdiff {

/// Is some member of `space` a differential of `f` at `at`?
struct DifferentialQuery {
  const DiffSpace &space;
  const FiniteMap &f;
  Vertex at;
};

/// Throws InvalidArgument if f or the point does not fit the space.
void validate(const DifferentialQuery &query);

/// L qualifies iff every x ∈ N(a) is matched by some k ∈ N(L) with
/// k(x) = f(x). Returns sorted map indices; empty means not differentiable.
std::vector<std::size_t> differentials_at(const DifferentialQuery &query);

/// Three-case classification for Cayley graphs (isolated L agreeing with f on
/// N(a); constant non-isolated L; non-constant non-isolated L with image
/// {e, δ}). Points of N(a) in the square subgroup of the domain must map to e
/// in the last two cases. Throws NotCayley.
std::vector<std::size_t>
differentials_by_theorem(const DifferentialQuery &query);

/// The same classification with the square-subgroup condition replaced by
/// "aγ is e or has odd order" (case 3) and "x = e" (case 2). Agrees with
/// differentials_at only when the square subgroup of the domain consists of
/// e and the odd-order elements; kept to document where it does not.
std::vector<std::size_t>
differentials_by_theorem_as_stated(const DifferentialQuery &query);

enum class OracleMode {
  /// Smallest neighborhoods V = N(L) and U = N(a).
  SmallestNeighborhood,
  /// Quantifies over every principal filter [A] -> a, every [M] -> L, every
  /// K ⊇ M and every A' ⊇ A literally.
  FilterSweep,
};

std::vector<std::size_t> differential_oracle(const DifferentialQuery &query,
                                             OracleMode mode,
                                             const Limits &limits = {});

/// True when FilterSweep fits in limits.max_filter_sweep_log2 for the query.
bool filter_sweep_feasible(const DifferentialQuery &query,
                           const Limits &limits = {});

/// Every differential L at a satisfies L(a) = f(a). Throws
/// PreconditionViolated when the codomain is not T1.
bool t1_forces_value_check(const DifferentialQuery &query);

struct ChainRuleViolation {
  std::size_t inner_differential; // index in the inner space
  std::size_t outer_differential; // index in the outer space
  std::optional<std::size_t> composite; // index in the composite space
};

struct ChainRuleReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<ChainRuleViolation> violations;
};

/// For g: X -> Y continuous at a and f: Y -> Z, checks that L_f ∘ L_g is a
/// differential of f ∘ g at a for every differential L_g of g at a and L_f of
/// f at g(a). Throws HypothesisViolated when g is not continuous at a.
ChainRuleReport chain_rule_check(const FiniteMap &f, const FiniteMap &g,
                                 Vertex a, const DiffSpace &inner,
                                 const DiffSpace &outer,
                                 const DiffSpace &composite);

/// Whether L_f ∘ L_g lands in `composite` for every pair of members.
bool is_composition_closed(const DiffSpace &inner, const DiffSpace &outer,
                           const DiffSpace &composite);

/// ℤ restricted to [start, start + values.size()).
struct IntegerWindow {
  std::int64_t start = 0;
  std::vector<std::int64_t> values;

  bool covers(std::int64_t n) const {
    return n >= start && n < start + static_cast<std::int64_t>(values.size());
  }
  std::int64_t operator()(std::int64_t n) const { return values[n - start]; }
};

/// Differentials of f: ℤ -> ℤ at n among {n ↦ 0, n ↦ n}. Both are isolated,
/// so L qualifies iff it agrees with f on N(n) = {n, n+1}. Throws
/// WindowTooSmall unless the window covers n and n + 1.
std::vector<IntegerLineMap> integers_differentiable_at(const IntegerWindow &f,
                                                       std::int64_t n);

} // namespace convdiff
