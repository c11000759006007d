#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "convdiff/finite_map.hpp"
#include "convdiff/limits.hpp"

namespace convdiff {

/// A finite group stored as a full multiplication table. The identity is
/// always element 0.
class FiniteGroup {
public:
  /// Validates `table` (table[g][h] = g·h) and relabels so the identity is 0.
  /// Names are carried through the relabeling; missing names default to the
  /// element's index.
  static FiniteGroup from_table(const std::vector<std::vector<Element>> &table,
                                std::vector<std::string> names = {},
                                const Limits &limits = {});

  std::size_t order() const noexcept { return order_; }
  static constexpr Element identity() noexcept { return 0; }

  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }

  const std::string &name(Element g) const { return names_[g]; }
  const std::vector<std::string> &names() const noexcept { return names_; }
  std::optional<Element> find(std::string_view name) const;

  bool is_abelian() const;
  std::vector<std::vector<Element>> table() const;

  bool operator==(const FiniteGroup &other) const {
    return order_ == other.order_ && table_ == other.table_;
  }

private:
  FiniteGroup() = default;

  std::size_t order_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
};

FiniteGroup cyclic(std::size_t n, const Limits &limits = {});

/// Symmetric group on n <= 5 letters, (g·h)(i) = g(h(i)). For n = 3 the
/// elements are ordered e, r, r², t, tr, tr² with r = (1 2 3), t = (1 2) and
/// named accordingly; otherwise permutations are listed lexicographically and
/// named in cycle notation.
FiniteGroup symmetric(unsigned n);

/// G ⊕ H with (g,h) at index g·|H| + h.
FiniteGroup direct_sum(const FiniteGroup &g, const FiniteGroup &h,
                       const Limits &limits = {});

/// ℤ₂ⁿ. Element bits are coordinates, coordinate 1 in the most significant bit.
FiniteGroup z2_power(unsigned n, const Limits &limits = {});

/// Smallest subgroup containing `elements`, sorted ascending.
std::vector<Element> closure(const FiniteGroup &group,
                             std::span<const Element> elements);

/// Least k >= 1 with g^k = e.
unsigned element_order(const FiniteGroup &group, Element g);

/// Subgroup generated by all squares. It is the common kernel of every
/// homomorphism into a group of order 2.
std::vector<Element> square_subgroup(const FiniteGroup &group);

/// A validated non-redundant generating set, sorted ascending.
class GeneratingSet {
public:
  /// Throws NotGenerating or Redundant (with a witnessing word) on failure.
  static GeneratingSet validate(const FiniteGroup &group,
                                std::span<const Element> elements);

  std::span<const Element> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Element g) const;

private:
  std::vector<Element> elements_;
};

/// A short word over `letters` whose product is `target`, or nullopt when
/// target is outside their closure. Breadth-first, so the word is shortest.
std::optional<std::vector<Element>> find_word(const FiniteGroup &group,
                                              std::span<const Element> letters,
                                              Element target);

/// Greedy generating set: scans elements in index order, keeping each one not
/// already in the closure of those kept.
std::vector<Element> greedy_generators(const FiniteGroup &group);

/// All homomorphisms G -> H in lexicographic order of their value tables.
std::vector<FiniteMap> enumerate_homomorphisms(const FiniteGroup &domain,
                                               const FiniteGroup &codomain,
                                               const Limits &limits = {});

bool is_homomorphism(const FiniteGroup &domain, const FiniteGroup &codomain,
                     const FiniteMap &map);

} // namespace convdiff
