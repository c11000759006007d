#include "convdiff/group.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <sstream>

#include "convdiff/error.hpp"

namespace convdiff {

namespace {

using Table = std::vector<std::vector<Element>>;

std::string triple(Element a, Element b, Element c) {
  std::ostringstream os;
  os << "(" << a << ", " << b << ", " << c << ")";
  return os.str();
}

// Elements reachable as left-associated words over `seeds`. In a group this
// is the generated subgroup.
std::vector<bool> word_closure(const Table &table,
                               const std::vector<Element> &seeds) {
  std::vector<bool> seen(table.size(), false);
  std::deque<Element> queue;
  for (auto s : seeds)
    if (!seen[s]) {
      seen[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto s : seeds) {
      auto y = table[x][s];
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

// Light's test: the elements b with (x·b)·y = x·(b·y) for all x, y form a
// submagma, so checking a set whose words reach everything suffices.
bool associative(const Table &t) {
  const auto n = static_cast<Element>(t.size());
  std::vector<Element> seeds;
  std::vector<bool> covered(n, false);
  for (Element g = 0; g < n; ++g) {
    if (covered[g])
      continue;
    seeds.push_back(g);
    covered = word_closure(t, seeds);
  }
  for (auto b : seeds)
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (t[t[x][b]][y] != t[x][t[b][y]])
          return false;
  return true;
}

std::string cycle_name(const std::vector<unsigned> &perm) {
  std::vector<bool> done(perm.size(), false);
  std::string out;
  for (unsigned i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i)
      continue;
    out += "(";
    for (unsigned j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      if (j != i)
        out += " ";
      out += std::to_string(j + 1);
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

} // namespace

FiniteGroup FiniteGroup::from_table(const Table &table,
                                    std::vector<std::string> names,
                                    const Limits &limits) {
  const std::size_t n = table.size();
  if (n == 0)
    throw Error(ErrorCode::MalformedTable, "group table is empty");
  if (n > limits.max_group_order)
    throw Error(ErrorCode::SizeGuardExceeded,
                "group order " + std::to_string(n) + " exceeds guard " +
                    std::to_string(limits.max_group_order));
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorCode::MalformedTable,
                  "row " + std::to_string(a) + " has " +
                      std::to_string(table[a].size()) + " entries, expected " +
                      std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (table[a][b] >= n)
        throw Error(ErrorCode::MalformedTable,
                    "entry (" + std::to_string(a) + ", " + std::to_string(b) +
                        ") = " + std::to_string(table[a][b]) +
                        " is out of range");
  }
  if (!names.empty() && names.size() != n)
    throw Error(ErrorCode::MalformedTable,
                "expected " + std::to_string(n) + " names, got " +
                    std::to_string(names.size()));

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element g = 0; g < n && ok; ++g)
      ok = table[e][g] == g && table[g][e] == g;
    if (ok)
      identity = e;
  }
  if (!identity)
    throw Error(ErrorCode::NoIdentity, "no two-sided identity element");

  for (Element g = 0; g < n; ++g) {
    bool found = false;
    for (Element h = 0; h < n && !found; ++h)
      found = table[g][h] == *identity && table[h][g] == *identity;
    if (!found)
      throw Error(ErrorCode::NoInverse,
                  "element " + std::to_string(g) + " has no inverse");
  }

  if (!associative(table)) {
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorCode::NotAssociative,
                        "associativity fails at " + triple(a, b, c));
  }

  // Swap the identity into slot 0.
  const Element e = *identity;
  auto relabel = [e](Element x) -> Element {
    return x == e ? 0 : x == 0 ? e : x;
  };

  FiniteGroup g;
  g.order_ = n;
  g.table_.resize(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      g.table_[relabel(a) * n + relabel(b)] = relabel(table[a][b]);
  g.inverse_.resize(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (g.table_[a * n + b] == 0)
        g.inverse_[a] = b;
  g.names_.resize(n);
  for (Element a = 0; a < n; ++a)
    g.names_[relabel(a)] = names.empty() ? std::string() : names[a];
  for (Element a = 0; a < n; ++a)
    if (g.names_[a].empty())
      g.names_[a] = std::to_string(a);
  return g;
}

std::optional<Element> FiniteGroup::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    return std::nullopt;
  return static_cast<Element>(it - names_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  Table t(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      t[a][b] = mul(a, b);
  return t;
}

FiniteGroup cyclic(std::size_t n, const Limits &limits) {
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "cyclic group needs n >= 1");
  if (n > limits.max_group_order)
    throw Error(ErrorCode::SizeGuardExceeded,
                "cyclic(" + std::to_string(n) + ") exceeds group order guard");
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>((a + b) % n);
  return FiniteGroup::from_table(t, {}, limits);
}

FiniteGroup symmetric(unsigned n) {
  if (n == 0 || n > 5)
    throw Error(ErrorCode::SizeGuardExceeded,
                "symmetric(n) supports 1 <= n <= 5, got " + std::to_string(n));
  using Perm = std::vector<unsigned>;
  auto compose = [](const Perm &g, const Perm &h) {
    Perm out(g.size());
    for (std::size_t i = 0; i < g.size(); ++i)
      out[i] = g[h[i]];
    return out;
  };

  std::vector<Perm> perms;
  std::vector<std::string> names;
  if (n == 3) {
    const Perm e{0, 1, 2}, r{1, 2, 0}, t{1, 0, 2};
    const Perm r2 = compose(r, r);
    perms = {e, r, r2, t, compose(t, r), compose(t, r2)};
    names = {"e", "r", "r2", "t", "tr", "tr2"};
  } else {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      perms.push_back(p);
      names.push_back(cycle_name(p));
    } while (std::next_permutation(p.begin(), p.end()));
  }

  const auto order = perms.size();
  Table t(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      auto prod = compose(perms[a], perms[b]);
      t[a][b] = static_cast<Element>(
          std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  return FiniteGroup::from_table(t, std::move(names));
}

FiniteGroup direct_sum(const FiniteGroup &g, const FiniteGroup &h,
                       const Limits &limits) {
  const auto ng = g.order(), nh = h.order();
  if (ng * nh > limits.max_group_order)
    throw Error(ErrorCode::SizeGuardExceeded,
                "direct sum of order " + std::to_string(ng * nh) +
                    " exceeds group order guard");
  const auto n = ng * nh;
  Table t(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) {
    names[a] = "(" + g.name(a / nh) + "," + h.name(a % nh) + ")";
    for (Element b = 0; b < n; ++b)
      t[a][b] = static_cast<Element>(g.mul(a / nh, b / nh) * nh +
                                     h.mul(a % nh, b % nh));
  }
  return FiniteGroup::from_table(t, std::move(names), limits);
}

FiniteGroup z2_power(unsigned n, const Limits &limits) {
  if (n >= 32 || (std::uint64_t{1} << n) > limits.max_group_order)
    throw Error(ErrorCode::SizeGuardExceeded,
                "z2^" + std::to_string(n) + " exceeds group order guard");
  const std::size_t size = std::size_t{1} << n;
  Table t(size, std::vector<Element>(size));
  std::vector<std::string> names(size);
  for (Element a = 0; a < size; ++a) {
    for (Element b = 0; b < size; ++b)
      t[a][b] = a ^ b;
    for (unsigned i = 0; i < n; ++i)
      names[a] += ((a >> (n - 1 - i)) & 1u) ? '1' : '0';
  }
  if (n == 0)
    names[0] = "e";
  return FiniteGroup::from_table(t, std::move(names), limits);
}

std::vector<Element> closure(const FiniteGroup &group,
                             std::span<const Element> elements) {
  std::vector<bool> seen(group.order(), false);
  std::deque<Element> queue{FiniteGroup::identity()};
  seen[FiniteGroup::identity()] = true;
  while (!queue.empty()) {
    auto x = queue.front();
    queue.pop_front();
    for (auto s : elements) {
      auto y = group.mul(x, s);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Element> out;
  for (Element g = 0; g < group.order(); ++g)
    if (seen[g])
      out.push_back(g);
  return out;
}

unsigned element_order(const FiniteGroup &group, Element g) {
  unsigned k = 1;
  for (Element x = g; x != FiniteGroup::identity(); x = group.mul(x, g))
    ++k;
  return k;
}

std::vector<Element> square_subgroup(const FiniteGroup &group) {
  std::vector<Element> squares;
  for (Element g = 0; g < group.order(); ++g)
    squares.push_back(group.mul(g, g));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  return closure(group, squares);
}

std::optional<std::vector<Element>> find_word(const FiniteGroup &group,
                                              std::span<const Element> letters,
                                              Element target) {
  constexpr auto kUnseen = static_cast<Element>(-1);
  std::vector<Element> parent(group.order(), kUnseen);
  std::vector<Element> via(group.order(), kUnseen);
  std::deque<Element> queue{FiniteGroup::identity()};
  parent[FiniteGroup::identity()] = FiniteGroup::identity();
  while (!queue.empty() && parent[target] == kUnseen) {
    auto x = queue.front();
    queue.pop_front();
    for (auto s : letters) {
      auto y = group.mul(x, s);
      if (parent[y] == kUnseen) {
        parent[y] = x;
        via[y] = s;
        queue.push_back(y);
      }
    }
  }
  if (parent[target] == kUnseen)
    return std::nullopt;
  std::vector<Element> word;
  for (auto x = target; x != FiniteGroup::identity(); x = parent[x])
    word.push_back(via[x]);
  std::reverse(word.begin(), word.end());
  return word;
}

GeneratingSet GeneratingSet::validate(const FiniteGroup &group,
                                      std::span<const Element> elements) {
  std::vector<Element> gens(elements.begin(), elements.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto g : gens) {
    if (g >= group.order())
      throw Error(ErrorCode::InvalidArgument,
                  "generator " + std::to_string(g) + " is not an element");
    if (g == FiniteGroup::identity())
      throw Error(ErrorCode::InvalidArgument,
                  "the identity cannot be a generator");
  }

  auto span = closure(group, gens);
  if (span.size() != group.order()) {
    std::string missed;
    for (Element g = 0, i = 0; g < group.order(); ++g) {
      if (i < span.size() && span[i] == g) {
        ++i;
        continue;
      }
      missed += (missed.empty() ? "" : ", ") + group.name(g);
    }
    throw Error(ErrorCode::NotGenerating,
                "generators miss elements: " + missed);
  }

  // Later elements are tested first, so the witness expresses a later
  // generator through earlier ones (r2 = r·r rather than r = r2·r2).
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<Element> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i)
        others.push_back(gens[j]);
    if (auto word = find_word(group, others, gens[i])) {
      std::string text;
      for (auto letter : *word)
        text += (text.empty() ? "" : "·") + group.name(letter);
      throw Error(ErrorCode::Redundant, "generator " + group.name(gens[i]) +
                                            " is redundant: " +
                                            group.name(gens[i]) + " = " + text);
    }
  }

  GeneratingSet out;
  out.elements_ = std::move(gens);
  return out;
}

bool GeneratingSet::contains(Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::vector<Element> greedy_generators(const FiniteGroup &group) {
  std::vector<Element> gens;
  std::vector<bool> covered(group.order(), false);
  covered[FiniteGroup::identity()] = true;
  for (Element g = 1; g < group.order(); ++g) {
    if (covered[g])
      continue;
    gens.push_back(g);
    std::fill(covered.begin(), covered.end(), false);
    for (auto x : closure(group, gens))
      covered[x] = true;
  }
  return gens;
}

bool is_homomorphism(const FiniteGroup &domain, const FiniteGroup &codomain,
                     const FiniteMap &map) {
  if (map.dom_size() != domain.order() || map.cod_size() != codomain.order())
    return false;
  for (Element a = 0; a < domain.order(); ++a)
    for (Element b = 0; b < domain.order(); ++b)
      if (map(domain.mul(a, b)) != codomain.mul(map(a), map(b)))
        return false;
  return true;
}

std::vector<FiniteMap> enumerate_homomorphisms(const FiniteGroup &domain,
                                               const FiniteGroup &codomain,
                                               const Limits &limits) {
  const auto gens = greedy_generators(domain);
  const auto k = gens.size();

  std::uint64_t budget = 1;
  for (std::size_t i = 0; i < k; ++i) {
    budget *= codomain.order();
    if (budget > limits.max_hom_candidates)
      throw Error(ErrorCode::SizeGuardExceeded,
                  "|H|^" + std::to_string(k) + " candidate assignments exceed " +
                      std::to_string(limits.max_hom_candidates));
  }

  // Breadth-first spanning tree: each y != e is reached as parent·gen.
  struct Step {
    Element target, parent;
    std::size_t gen;
  };
  std::vector<Step> steps;
  {
    std::vector<bool> seen(domain.order(), false);
    std::deque<Element> queue{FiniteGroup::identity()};
    seen[FiniteGroup::identity()] = true;
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (std::size_t s = 0; s < k; ++s) {
        auto y = domain.mul(x, gens[s]);
        if (!seen[y]) {
          seen[y] = true;
          steps.push_back({y, x, s});
          queue.push_back(y);
        }
      }
    }
  }

  // A generator's image must have order dividing the generator's order.
  std::vector<std::vector<Element>> candidates(k);
  for (std::size_t s = 0; s < k; ++s) {
    auto order = element_order(domain, gens[s]);
    for (Element h = 0; h < codomain.order(); ++h)
      if (order % element_order(codomain, h) == 0)
        candidates[s].push_back(h);
  }

  std::vector<FiniteMap> out;
  std::vector<std::size_t> choice(k, 0);
  std::vector<Vertex> values(domain.order());
  while (true) {
    values[FiniteGroup::identity()] = FiniteGroup::identity();
    for (const auto &step : steps)
      values[step.target] =
          codomain.mul(values[step.parent], candidates[step.gen][choice[step.gen]]);

    bool consistent = true;
    for (Element x = 0; x < domain.order() && consistent; ++x)
      for (std::size_t s = 0; s < k && consistent; ++s)
        consistent = values[domain.mul(x, gens[s])] ==
                     codomain.mul(values[x], candidates[s][choice[s]]);
    if (consistent) {
      FiniteMap map(codomain.order(), values);
      if (is_homomorphism(domain, codomain, map))
        out.push_back(std::move(map));
    }

    std::size_t i = 0;
    while (i < k && ++choice[i] == candidates[i].size())
      choice[i++] = 0;
    if (i == k)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace convdiff
