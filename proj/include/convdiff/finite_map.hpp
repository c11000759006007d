#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace convdiff {

using Vertex = std::uint32_t;
using Element = std::uint32_t;

/// A total function between finite carriers {0..dom-1} -> {0..cod-1}.
class FiniteMap {
public:
  FiniteMap() = default;
  FiniteMap(std::size_t cod_size, std::vector<Vertex> values);

  static FiniteMap identity(std::size_t size);
  static FiniteMap constant(std::size_t dom_size, std::size_t cod_size,
                            Vertex value);

  std::size_t dom_size() const noexcept { return values_.size(); }
  std::size_t cod_size() const noexcept { return cod_size_; }
  std::span<const Vertex> values() const noexcept { return values_; }

  Vertex operator()(Vertex x) const { return values_[x]; }

  bool is_constant() const noexcept;

  auto operator<=>(const FiniteMap &) const = default;
  bool operator==(const FiniteMap &) const = default;

private:
  // Declaration order fixes the defaulted ordering: lexicographic on values.
  std::vector<Vertex> values_;
  std::size_t cod_size_ = 0;
};

/// (outer ∘ inner)(x) = outer(inner(x)).
FiniteMap compose(const FiniteMap &outer, const FiniteMap &inner);

} // namespace convdiff
