#include "convdiff/digraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "convdiff/error.hpp"

namespace convdiff {

namespace {

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::size_t checked_product(std::size_t a, std::size_t b,
                            const Limits &limits) {
  if (a != 0 && b > limits.max_product_size / a)
    throw Error(ErrorCode::SizeGuardExceeded,
                "product of sizes " + std::to_string(a) + " and " +
                    std::to_string(b) + " exceeds guard " +
                    std::to_string(limits.max_product_size));
  return a * b;
}

void require_fits(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                  const FiniteMap &f) {
  if (f.dom_size() != from.size() || f.cod_size() != to.size())
    throw Error(ErrorCode::DimMismatch,
                "map of shape " + std::to_string(f.dom_size()) + "->" +
                    std::to_string(f.cod_size()) + " does not fit digraphs " +
                    std::to_string(from.size()) + "->" +
                    std::to_string(to.size()));
}

} // namespace

ReflexiveDigraph::ReflexiveDigraph(std::vector<std::vector<Vertex>> nbhd)
    : nbhd_(std::move(nbhd)) {
  const auto n = nbhd_.size();
  for (Vertex v = 0; v < n; ++v) {
    auto &row = nbhd_[v];
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    if (!row.empty() && row.back() >= n)
      throw Error(ErrorCode::InvalidArgument,
                  "neighbor " + std::to_string(row.back()) + " of vertex " +
                      std::to_string(v) + " is out of range");
    if (!contains(row, v))
      throw Error(ErrorCode::NotReflexive,
                  "vertex " + std::to_string(v) + " is missing its loop");
  }
}

bool ReflexiveDigraph::adjacent(Vertex v, Vertex u) const {
  return contains(nbhd_[v], u);
}

PrincipalFilter::PrincipalFilter(std::vector<Vertex> minset)
    : minset_(std::move(minset)) {
  if (minset_.empty())
    throw Error(ErrorCode::EmptyFilter, "a filter cannot contain the empty set");
  std::sort(minset_.begin(), minset_.end());
  minset_.erase(std::unique(minset_.begin(), minset_.end()), minset_.end());
}

bool converges(const ReflexiveDigraph &space, const PrincipalFilter &filter,
               Vertex v) {
  // N(v) ∈ [A] iff A ⊆ N(v).
  const auto n = space.nbhd(v);
  return std::includes(n.begin(), n.end(), filter.minset().begin(),
                       filter.minset().end());
}

bool is_continuous_at(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                      const FiniteMap &f, Vertex v) {
  require_fits(from, to, f);
  const auto target = to.nbhd(f(v));
  return std::all_of(from.nbhd(v).begin(), from.nbhd(v).end(),
                     [&](Vertex u) { return contains(target, f(u)); });
}

bool is_continuous(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                   const FiniteMap &f) {
  for (Vertex v = 0; v < from.size(); ++v)
    if (!is_continuous_at(from, to, f, v))
      return false;
  return true;
}

bool hom_neighbor_unchecked(const ReflexiveDigraph &from,
                            const ReflexiveDigraph &to, const FiniteMap &f,
                            const FiniteMap &g) {
  require_fits(from, to, f);
  require_fits(from, to, g);
  for (Vertex b = 0; b < from.size(); ++b) {
    const auto target = to.nbhd(g(b));
    for (auto a : from.nbhd(b))
      if (!contains(target, f(a)))
        return false;
  }
  return true;
}

bool hom_neighbor(const ReflexiveDigraph &from, const ReflexiveDigraph &to,
                  const FiniteMap &f, const FiniteMap &g) {
  if (!is_continuous(from, to, f) || !is_continuous(from, to, g))
    throw Error(ErrorCode::NotContinuous,
                "hom_neighbor requires continuous maps");
  return hom_neighbor_unchecked(from, to, f, g);
}

std::vector<FiniteMap> continuous_maps(const ReflexiveDigraph &from,
                                       const ReflexiveDigraph &to,
                                       const Limits &limits) {
  const auto n = from.size();
  const auto m = to.size();
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (m != 0 && candidates > limits.max_map_candidates / m)
      throw Error(ErrorCode::SizeGuardExceeded,
                  std::to_string(m) + "^" + std::to_string(n) +
                      " candidate maps exceed guard " +
                      std::to_string(limits.max_map_candidates));
    candidates *= m;
  }

  std::vector<FiniteMap> out;
  if (m == 0 && n > 0)
    return out;
  std::vector<Vertex> values(n, 0);

  // Vertex v may take value y when every edge to an earlier vertex survives.
  auto fits = [&](Vertex v) {
    for (Vertex u = 0; u < v; ++u) {
      if (from.adjacent(v, u) && !to.adjacent(values[v], values[u]))
        return false;
      if (from.adjacent(u, v) && !to.adjacent(values[u], values[v]))
        return false;
    }
    return true;
  };

  std::size_t depth = 0;
  if (n == 0) {
    out.emplace_back(m, values);
    return out;
  }
  values[0] = 0;
  while (true) {
    if (values[depth] < m && fits(static_cast<Vertex>(depth))) {
      if (depth + 1 == n) {
        out.emplace_back(m, values);
      } else {
        values[++depth] = 0;
        continue;
      }
    }
    // Advance to the next candidate, backtracking over exhausted levels.
    while (true) {
      if (values[depth] < m)
        ++values[depth];
      if (values[depth] < m)
        break;
      if (depth == 0)
        return out;
      --depth;
    }
  }
}

ReflexiveDigraph box_product(const ReflexiveDigraph &x,
                             const ReflexiveDigraph &y, const Limits &limits) {
  const auto n = checked_product(x.size(), y.size(), limits);
  std::vector<std::vector<Vertex>> nbhd(n);
  for (Vertex a = 0; a < x.size(); ++a)
    for (Vertex b = 0; b < y.size(); ++b) {
      auto &row = nbhd[pair_index(a, b, y.size())];
      for (auto b2 : y.nbhd(b))
        row.push_back(pair_index(a, b2, y.size()));
      for (auto a2 : x.nbhd(a))
        row.push_back(pair_index(a2, b, y.size()));
    }
  return ReflexiveDigraph(std::move(nbhd));
}

ReflexiveDigraph categorical_product(const ReflexiveDigraph &x,
                                     const ReflexiveDigraph &y,
                                     const Limits &limits) {
  const auto n = checked_product(x.size(), y.size(), limits);
  std::vector<std::vector<Vertex>> nbhd(n);
  for (Vertex a = 0; a < x.size(); ++a)
    for (Vertex b = 0; b < y.size(); ++b) {
      auto &row = nbhd[pair_index(a, b, y.size())];
      for (auto a2 : x.nbhd(a))
        for (auto b2 : y.nbhd(b))
          row.push_back(pair_index(a2, b2, y.size()));
    }
  return ReflexiveDigraph(std::move(nbhd));
}

SpaceProperties space_properties(const ReflexiveDigraph &space) {
  SpaceProperties props;
  const auto n = space.size();

  std::set<std::vector<Vertex>> distinct(space.neighborhoods().begin(),
                                         space.neighborhoods().end());
  props.is_T0 = distinct.size() == n;

  props.is_discrete = true;
  for (Vertex v = 0; v < n; ++v)
    props.is_discrete = props.is_discrete && space.nbhd(v).size() == 1;

  // T1 from point filters: [x] converges to y only when x = y.
  props.is_T1 = true;
  for (Vertex x = 0; x < n && props.is_T1; ++x)
    for (Vertex y = 0; y < n && props.is_T1; ++y)
      if (x != y && converges(space, PrincipalFilter::point(x), y))
        props.is_T1 = false;

  props.is_topological = true;
  for (Vertex v = 0; v < n && props.is_topological; ++v)
    for (auto u : space.nbhd(v)) {
      const auto nu = space.nbhd(u), nv = space.nbhd(v);
      if (!std::includes(nv.begin(), nv.end(), nu.begin(), nu.end())) {
        props.is_topological = false;
        break;
      }
    }
  return props;
}

ReflexiveDigraph pentacle() {
  std::vector<std::vector<Vertex>> nbhd(5);
  for (Vertex p = 0; p < 5; ++p)
    for (Vertex q = 0; q < 5; ++q)
      if (q != (p + 3) % 5)
        nbhd[p].push_back(q);
  return ReflexiveDigraph(std::move(nbhd));
}

ReflexiveDigraph discrete_space(std::size_t size) {
  std::vector<std::vector<Vertex>> nbhd(size);
  for (Vertex v = 0; v < size; ++v)
    nbhd[v] = {v};
  return ReflexiveDigraph(std::move(nbhd));
}

} // namespace convdiff
