#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "convdiff/cayley.hpp"
#include "convdiff/finite_map.hpp"
#include "convdiff/limits.hpp"

namespace convdiff {

/// A point of Bᵐ. Coordinate 1 is the most significant bit of `bits`, so a
/// point's bits equal its element index in z2_power(m).
class BoolPoint {
public:
  BoolPoint() = default;
  BoolPoint(unsigned dim, std::uint32_t bits);

  /// Accepts "(1,0,1)" or "101".
  static BoolPoint parse(std::string_view text);

  unsigned dim() const noexcept { return dim_; }
  std::uint32_t bits() const noexcept { return bits_; }
  /// Coordinate i, 1-based.
  bool coord(unsigned i) const { return (bits_ >> (dim_ - i)) & 1u; }
  unsigned weight() const;

  std::string to_string() const; // "(1,0,1)"

  auto operator<=>(const BoolPoint &) const = default;

private:
  unsigned dim_ = 0;
  std::uint32_t bits_ = 0;
};

/// An n×m matrix over GF(2), i.e. a linear map Bᵐ -> Bⁿ. Row i keeps column j
/// in bit (m - j), matching BoolPoint.
class GF2Matrix {
public:
  GF2Matrix() = default;
  GF2Matrix(unsigned rows, unsigned cols);

  static GF2Matrix zero(unsigned rows, unsigned cols) { return {rows, cols}; }
  static GF2Matrix identity(unsigned size);
  /// Builds from columns; each column is a point of Bⁿ.
  static GF2Matrix from_columns(unsigned rows,
                                const std::vector<std::uint32_t> &columns);
  /// Reads rows "[[1,0],[0,0],[0,1]]".
  static GF2Matrix parse(std::string_view text);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }
  /// 1-based entry.
  bool get(unsigned i, unsigned j) const;
  void set(unsigned i, unsigned j, bool value);
  /// Column j (1-based) as a point of Bⁿ.
  std::uint32_t column(unsigned j) const;
  std::uint32_t row_bits(unsigned i) const { return row_bits_[i - 1]; }

  bool is_zero() const;

  /// Row-major literal "[[1,0],[0,0],[0,1]]".
  std::string to_string() const;
  /// "(p,q) ↦ (p,0,q)" style, with variables p,q,r,... and + for XOR.
  std::string to_formula() const;

  auto operator<=>(const GF2Matrix &) const = default;

private:
  unsigned rows_ = 0;
  unsigned cols_ = 0;
  std::vector<std::uint32_t> row_bits_;
};

BoolPoint apply(const GF2Matrix &m, const BoolPoint &x);
/// a · b, a linear map composition Bᵏ -> Bᵐ -> Bⁿ.
GF2Matrix multiply(const GF2Matrix &a, const GF2Matrix &b);

/// The table of a matrix as a map between element indices of z2 powers.
FiniteMap to_finite_map(const GF2Matrix &m);
/// Inverse of to_finite_map; throws InvalidArgument if the map is not linear.
GF2Matrix to_matrix(const FiniteMap &map, unsigned rows, unsigned cols);

/// Bⁿ: the Cayley graph of ℤ₂ⁿ on the unit vectors. The group is stored as a
/// table, so n is bounded by both max_hypercube_dim and max_group_order.
CayleyGraph hypercube(unsigned n, const Limits &limits = {});

/// Every column has Hamming weight at most 1.
bool is_continuous_linear(const GF2Matrix &m);
/// All (n+1)^m continuous linear maps Bᵐ -> Bⁿ in ascending order.
std::vector<GF2Matrix> continuous_linear_maps(unsigned m, unsigned n);
/// M itself plus every continuous K whose nonzero columns, together with
/// those of M, are one common vector. Throws NotContinuous.
std::vector<GF2Matrix> linear_neighbors(const GF2Matrix &m);
bool is_isolated_linear(const GF2Matrix &m);

/// f: Bᵐ -> Bⁿ stored as a table of 2ᵐ output bit patterns.
class BoolFunction {
public:
  BoolFunction(unsigned m, unsigned n, std::vector<std::uint32_t> table);
  static BoolFunction from_finite_map(const FiniteMap &map, unsigned m,
                                      unsigned n);

  unsigned input_dim() const noexcept { return m_; }
  unsigned output_dim() const noexcept { return n_; }
  BoolPoint operator()(const BoolPoint &x) const;
  std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }
  const std::vector<std::uint32_t> &table() const noexcept { return table_; }
  FiniteMap to_finite_map() const;

  bool operator==(const BoolFunction &) const = default;

private:
  unsigned m_;
  unsigned n_;
  std::vector<std::uint32_t> table_;
};

/// Parses a GF(2) polynomial or a parenthesized tuple of them over m
/// variables and tabulates it. `+` is XOR, `*` or juxtaposition is AND,
/// constants are 0 and 1. Variables 1..8 are p, q, r, s, t, u, v, w; any
/// variable k may also be written xk.
BoolFunction parse_bool_function(std::string_view text, unsigned m);

/// Three-case Boolean classification; sorted ascending. Throws DimMismatch
/// and SizeGuardExceeded when more than limits.max_map_candidates matrices
/// would be returned.
std::vector<GF2Matrix> boolean_differentials_at(const BoolFunction &f,
                                                const BoolPoint &b,
                                                const Limits &limits = {});

/// Whether boolean_differentials_at(f, b) is nonempty, without listing it.
bool boolean_differentiable_at(const BoolFunction &f, const BoolPoint &b);

/// Solves L · [x₁ … x_k] = [f(x₁) … f(x_k)] over the points of N(b) and
/// keeps the continuous solutions.
std::vector<GF2Matrix> solve_matrix_equation(const BoolFunction &f,
                                             const BoolPoint &b);

/// All solutions X of A·X = B for a k×m system given as rows (bit (m-j)
/// holds column j), each rhs bit in `rhs`. Empty when inconsistent.
std::vector<std::uint32_t> solve_gf2_system(unsigned unknowns,
                                            const std::vector<std::uint32_t> &rows,
                                            const std::vector<bool> &rhs);

struct CensusReport {
  unsigned dim = 0;
  std::vector<bool> differentiable; // per point index
  /// Points where the pattern "differentiable off N(0), and on N(0) iff
  /// f(0) = 0" fails.
  std::vector<BoolPoint> mismatches;
  bool matches_corollary() const { return mismatches.empty(); }
};

/// f: Bᵐ -> B¹ only; throws DimMismatch otherwise.
CensusReport scalar_differentiability_census(const BoolFunction &f);

struct LeibnizPair {
  GF2Matrix df;
  GF2Matrix dg;
  GF2Matrix candidate; // df·g(b) + f(b)·dg
  bool is_differential = false;
};

struct LeibnizReport {
  std::size_t pairs = 0;
  std::size_t satisfied = 0;
  std::vector<LeibnizPair> details;
};

/// For every differential pair of f and g at b, tests whether
/// df·g(b) + f(b)·dg is a differential of the pointwise product at b.
/// Observational only. Throws NotDifferentiable if either has none.
LeibnizReport leibniz_probe(const BoolFunction &f, const BoolFunction &g,
                            const BoolPoint &b);

} // namespace convdiff
