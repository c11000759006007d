#include "convdiff/finite_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "convdiff/error.hpp"

namespace convdiff {

FiniteMap::FiniteMap(std::size_t cod_size, std::vector<Vertex> values)
    : values_(std::move(values)), cod_size_(cod_size) {
  for (std::size_t x = 0; x < values_.size(); ++x)
    if (values_[x] >= cod_size_)
      throw Error(ErrorCode::InvalidArgument,
                  "map value " + std::to_string(values_[x]) + " at " +
                      std::to_string(x) + " is outside codomain of size " +
                      std::to_string(cod_size_));
}

FiniteMap FiniteMap::identity(std::size_t size) {
  std::vector<Vertex> values(size);
  std::iota(values.begin(), values.end(), Vertex{0});
  return FiniteMap(size, std::move(values));
}

FiniteMap FiniteMap::constant(std::size_t dom_size, std::size_t cod_size,
                              Vertex value) {
  return FiniteMap(cod_size, std::vector<Vertex>(dom_size, value));
}

bool FiniteMap::is_constant() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(),
                            std::not_equal_to<>{}) == values_.end();
}

FiniteMap compose(const FiniteMap &outer, const FiniteMap &inner) {
  if (inner.cod_size() != outer.dom_size())
    throw Error(ErrorCode::DimMismatch, "maps are not composable");
  std::vector<Vertex> values(inner.dom_size());
  for (std::size_t x = 0; x < values.size(); ++x)
    values[x] = outer(inner(static_cast<Vertex>(x)));
  return FiniteMap(outer.cod_size(), std::move(values));
}

} // namespace convdiff
