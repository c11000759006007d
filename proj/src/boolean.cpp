#include "convdiff/boolean.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include <json.hpp>

#include "convdiff/error.hpp"

namespace convdiff {

namespace {

constexpr unsigned kMaxDim = 31;

std::uint32_t unit(unsigned dim, unsigned j) { return 1u << (dim - j); }

bool weight_at_most_one(std::uint32_t bits) { return std::popcount(bits) <= 1; }

std::string variable_name(unsigned j) {
  static constexpr std::string_view kLetters = "pqrstuvw";
  if (j <= kLetters.size())
    return std::string(1, kLetters[j - 1]);
  return "x" + std::to_string(j);
}

// N(b) as point bits: b first, then b with coordinate j flipped.
std::vector<std::uint32_t> hamming_ball(const BoolPoint &b) {
  std::vector<std::uint32_t> out{b.bits()};
  for (unsigned j = 1; j <= b.dim(); ++j)
    out.push_back(b.bits() ^ unit(b.dim(), j));
  return out;
}

void require_dim(const BoolFunction &f, const BoolPoint &b) {
  if (b.dim() != f.input_dim())
    throw Error(ErrorCode::DimMismatch,
                "point of dimension " + std::to_string(b.dim()) +
                    " for a function on B^" + std::to_string(f.input_dim()));
}

// The unit vectors β for which f(N(b)) ⊆ {0, β}, provided f(0) = 0 whenever
// 0 ∈ N(b). These drive both non-isolated cases.
struct LocalShape {
  bool zero_condition = true;       // f(0) = 0 if 0 ∈ N(b)
  bool inside_unit_ball = true;     // f(N(b)) ⊆ N(0)
  std::vector<std::uint32_t> betas; // admissible β for case 3
};

LocalShape local_shape(const BoolFunction &f, const BoolPoint &b) {
  LocalShape shape;
  const auto ball = hamming_ball(b);
  if (b.weight() <= 1)
    shape.zero_condition = f(0u) == 0;
  for (auto x : ball)
    shape.inside_unit_ball = shape.inside_unit_ball && weight_at_most_one(f(x));
  for (unsigned i = 1; i <= f.output_dim(); ++i) {
    const auto beta = unit(f.output_dim(), i);
    if (std::all_of(ball.begin(), ball.end(), [&](std::uint32_t x) {
          return f(x) == 0 || f(x) == beta;
        }))
      shape.betas.push_back(beta);
  }
  return shape;
}

std::optional<GF2Matrix> isolated_candidate(const BoolFunction &f,
                                            const BoolPoint &b) {
  // If L = f on N(b) then L e_j = f(b) + f(b + e_j).
  std::vector<std::uint32_t> columns;
  for (unsigned j = 1; j <= b.dim(); ++j)
    columns.push_back(f(b.bits()) ^ f(b.bits() ^ unit(b.dim(), j)));
  auto l = GF2Matrix::from_columns(f.output_dim(), columns);
  if (!is_continuous_linear(l) || !is_isolated_linear(l))
    return std::nullopt;
  for (auto x : hamming_ball(b))
    if (apply(l, BoolPoint(b.dim(), x)).bits() != f(x))
      return std::nullopt;
  return l;
}

// Parser for GF(2) polynomials, evaluated pointwise into a truth table.
class PolyParser {
public:
  PolyParser(std::string_view text, unsigned m) : text_(text), m_(m) {}

  std::vector<std::vector<std::uint8_t>> parse_top() {
    skip();
    std::vector<std::vector<std::uint8_t>> components;
    if (is_tuple()) {
      expect('(');
      components.push_back(expr());
      while (peek() == ',') {
        ++pos_;
        components.push_back(expr());
      }
      expect(')');
    } else {
      components.push_back(expr());
    }
    skip();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return components;
  }

private:
  using Values = std::vector<std::uint8_t>;

  // A leading parenthesis encloses the whole input and holds a top-level
  // comma.
  bool is_tuple() const {
    if (pos_ >= text_.size() || text_[pos_] != '(')
      return false;
    int depth = 0;
    bool comma = false;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '(')
        ++depth;
      else if (c == ')' && --depth == 0) {
        auto rest = text_.substr(i + 1);
        return comma && rest.find_first_not_of(" \t") == std::string_view::npos;
      } else if (c == ',' && depth == 1)
        comma = true;
    }
    return false;
  }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string &what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" +
                    std::string(text_) + "\"");
  }

  std::size_t points() const { return std::size_t{1} << m_; }

  Values expr() {
    auto acc = term();
    while (peek() == '+') {
      ++pos_;
      auto rhs = term();
      for (std::size_t x = 0; x < acc.size(); ++x)
        acc[x] ^= rhs[x];
    }
    return acc;
  }

  static bool starts_factor(char c) {
    return c == '(' || c == '0' || c == '1' || (c >= 'p' && c <= 'x');
  }

  Values term() {
    auto acc = factor();
    while (true) {
      char c = peek();
      if (c == '*')
        ++pos_;
      else if (!starts_factor(c))
        break;
      auto rhs = factor();
      for (std::size_t x = 0; x < acc.size(); ++x)
        acc[x] &= rhs[x];
    }
    return acc;
  }

  Values factor() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      auto inner = expr();
      expect(')');
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return Values(points(), static_cast<std::uint8_t>(c - '0'));
    }
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9')
        ++pos_;
      if (start == pos_)
        fail("expected a variable number after 'x'");
      return variable(static_cast<unsigned>(
          std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    static constexpr std::string_view kLetters = "pqrstuvw";
    if (auto at = kLetters.find(c); c != '\0' && at != std::string_view::npos) {
      ++pos_;
      return variable(static_cast<unsigned>(at) + 1);
    }
    fail("expected a factor");
  }

  Values variable(unsigned j) {
    if (j == 0 || j > m_)
      fail("variable " + std::to_string(j) + " outside B^" + std::to_string(m_));
    Values out(points());
    for (std::size_t x = 0; x < out.size(); ++x)
      out[x] = (x >> (m_ - j)) & 1u;
    return out;
  }

  std::string_view text_;
  unsigned m_;
  std::size_t pos_ = 0;
};

} // namespace

BoolPoint::BoolPoint(unsigned dim, std::uint32_t bits) : dim_(dim), bits_(bits) {
  if (dim == 0 || dim > kMaxDim)
    throw Error(ErrorCode::DimMismatch,
                "point dimension must be in 1..31, got " + std::to_string(dim));
  if (bits >> dim)
    throw Error(ErrorCode::DimMismatch, "bits exceed point dimension");
}

BoolPoint BoolPoint::parse(std::string_view text) {
  std::uint32_t bits = 0;
  unsigned dim = 0;
  for (char c : text) {
    if (c == '0' || c == '1') {
      bits = bits << 1 | static_cast<std::uint32_t>(c - '0');
      ++dim;
    } else if (c != '(' && c != ')' && c != ',' && c != ' ') {
      throw Error(ErrorCode::ParseError,
                  "bad character in point \"" + std::string(text) + "\"");
    }
  }
  if (dim == 0)
    throw Error(ErrorCode::ParseError, "empty point \"" + std::string(text) + "\"");
  return BoolPoint(dim, bits);
}

unsigned BoolPoint::weight() const { return std::popcount(bits_); }

std::string BoolPoint::to_string() const {
  std::string out = "(";
  for (unsigned i = 1; i <= dim_; ++i)
    out += std::string(i > 1 ? "," : "") + (coord(i) ? "1" : "0");
  return out + ")";
}

GF2Matrix::GF2Matrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), row_bits_(rows, 0) {
  if (rows == 0 || cols == 0 || rows > kMaxDim || cols > kMaxDim)
    throw Error(ErrorCode::DimMismatch, "matrix dimensions must be in 1..31");
}

GF2Matrix GF2Matrix::identity(unsigned size) {
  GF2Matrix m(size, size);
  for (unsigned i = 1; i <= size; ++i)
    m.set(i, i, true);
  return m;
}

GF2Matrix GF2Matrix::from_columns(unsigned rows,
                                  const std::vector<std::uint32_t> &columns) {
  GF2Matrix m(rows, static_cast<unsigned>(columns.size()));
  for (unsigned j = 1; j <= m.cols_; ++j)
    for (unsigned i = 1; i <= rows; ++i)
      m.set(i, j, (columns[j - 1] >> (rows - i)) & 1u);
  return m;
}

GF2Matrix GF2Matrix::parse(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &ex) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix literal: ") + ex.what());
  }
  if (!doc.is_array() || doc.empty() || !doc[0].is_array() || doc[0].empty())
    throw Error(ErrorCode::ParseError, "matrix literal must be [[...],...]");
  GF2Matrix m(static_cast<unsigned>(doc.size()),
              static_cast<unsigned>(doc[0].size()));
  for (unsigned i = 0; i < m.rows_; ++i) {
    if (!doc[i].is_array() || doc[i].size() != m.cols_)
      throw Error(ErrorCode::ParseError, "ragged matrix literal");
    for (unsigned j = 0; j < m.cols_; ++j) {
      if (!doc[i][j].is_number_integer() || doc[i][j].get<int>() < 0 ||
          doc[i][j].get<int>() > 1)
        throw Error(ErrorCode::ParseError, "matrix entries must be 0 or 1");
      m.set(i + 1, j + 1, doc[i][j].get<int>() == 1);
    }
  }
  return m;
}

bool GF2Matrix::get(unsigned i, unsigned j) const {
  return (row_bits_[i - 1] >> (cols_ - j)) & 1u;
}

void GF2Matrix::set(unsigned i, unsigned j, bool value) {
  const auto bit = unit(cols_, j);
  if (value)
    row_bits_[i - 1] |= bit;
  else
    row_bits_[i - 1] &= ~bit;
}

std::uint32_t GF2Matrix::column(unsigned j) const {
  std::uint32_t out = 0;
  for (unsigned i = 1; i <= rows_; ++i)
    out = out << 1 | static_cast<std::uint32_t>(get(i, j));
  return out;
}

bool GF2Matrix::is_zero() const {
  return std::all_of(row_bits_.begin(), row_bits_.end(),
                     [](std::uint32_t r) { return r == 0; });
}

std::string GF2Matrix::to_string() const {
  std::string out = "[";
  for (unsigned i = 1; i <= rows_; ++i) {
    out += i > 1 ? ",[" : "[";
    for (unsigned j = 1; j <= cols_; ++j)
      out += std::string(j > 1 ? "," : "") + (get(i, j) ? "1" : "0");
    out += "]";
  }
  return out + "]";
}

std::string GF2Matrix::to_formula() const {
  std::string out = "(";
  for (unsigned j = 1; j <= cols_; ++j)
    out += (j > 1 ? "," : "") + variable_name(j);
  out += ") -> (";
  for (unsigned i = 1; i <= rows_; ++i) {
    std::string sum;
    for (unsigned j = 1; j <= cols_; ++j)
      if (get(i, j))
        sum += (sum.empty() ? "" : "+") + variable_name(j);
    out += (i > 1 ? "," : "") + (sum.empty() ? std::string("0") : sum);
  }
  return out + ")";
}

BoolPoint apply(const GF2Matrix &m, const BoolPoint &x) {
  if (x.dim() != m.cols())
    throw Error(ErrorCode::DimMismatch,
                "matrix with " + std::to_string(m.cols()) +
                    " columns applied to a point of dimension " +
                    std::to_string(x.dim()));
  std::uint32_t out = 0;
  for (unsigned i = 1; i <= m.rows(); ++i)
    out = out << 1 | (std::popcount(m.row_bits(i) & x.bits()) & 1u);
  return BoolPoint(m.rows(), out);
}

GF2Matrix multiply(const GF2Matrix &a, const GF2Matrix &b) {
  if (a.cols() != b.rows())
    throw Error(ErrorCode::DimMismatch, "matrix product shapes do not agree");
  GF2Matrix out(a.rows(), b.cols());
  for (unsigned i = 1; i <= a.rows(); ++i)
    for (unsigned l = 1; l <= a.cols(); ++l)
      if (a.get(i, l))
        for (unsigned j = 1; j <= b.cols(); ++j)
          if (b.get(l, j))
            out.set(i, j, !out.get(i, j));
  return out;
}

FiniteMap to_finite_map(const GF2Matrix &m) {
  std::vector<Vertex> values(std::size_t{1} << m.cols());
  for (std::uint32_t x = 0; x < values.size(); ++x)
    values[x] = apply(m, BoolPoint(m.cols(), x)).bits();
  return FiniteMap(std::size_t{1} << m.rows(), std::move(values));
}

GF2Matrix to_matrix(const FiniteMap &map, unsigned rows, unsigned cols) {
  if (map.dom_size() != (std::size_t{1} << cols) ||
      map.cod_size() != (std::size_t{1} << rows))
    throw Error(ErrorCode::DimMismatch, "map does not fit B^m -> B^n");
  std::vector<std::uint32_t> columns;
  for (unsigned j = 1; j <= cols; ++j)
    columns.push_back(map(unit(cols, j)));
  auto m = GF2Matrix::from_columns(rows, columns);
  if (to_finite_map(m) != map)
    throw Error(ErrorCode::InvalidArgument, "map is not linear over GF(2)");
  return m;
}

CayleyGraph hypercube(unsigned n, const Limits &limits) {
  if (n == 0 || n > limits.max_hypercube_dim)
    throw Error(ErrorCode::SizeGuardExceeded,
                "hypercube dimension " + std::to_string(n) + " outside 1.." +
                    std::to_string(limits.max_hypercube_dim));
  auto group = z2_power(n, limits);
  std::vector<Element> gens;
  for (unsigned j = 1; j <= n; ++j)
    gens.push_back(unit(n, j));
  auto validated = GeneratingSet::validate(group, gens);
  return CayleyGraph(std::move(group), std::move(validated));
}

bool is_continuous_linear(const GF2Matrix &m) {
  for (unsigned j = 1; j <= m.cols(); ++j)
    if (!weight_at_most_one(m.column(j)))
      return false;
  return true;
}

std::vector<GF2Matrix> continuous_linear_maps(unsigned m, unsigned n) {
  std::uint64_t count = 1;
  for (unsigned j = 0; j < m; ++j) {
    count *= n + 1;
    if (count > 10'000'000)
      throw Error(ErrorCode::SizeGuardExceeded,
                  "too many continuous linear maps to list");
  }
  // Column choice 0 is the zero column, choice i is the unit vector e_i.
  std::vector<unsigned> choice(m, 0);
  std::vector<GF2Matrix> out;
  while (true) {
    std::vector<std::uint32_t> columns(m);
    for (unsigned j = 0; j < m; ++j)
      columns[j] = choice[j] == 0 ? 0 : unit(n, choice[j]);
    out.push_back(GF2Matrix::from_columns(n, columns));
    unsigned j = 0;
    while (j < m && ++choice[j] == n + 1)
      choice[j++] = 0;
    if (j == m)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GF2Matrix> linear_neighbors(const GF2Matrix &m) {
  if (!is_continuous_linear(m))
    throw Error(ErrorCode::NotContinuous,
                "linear_neighbors needs a continuous matrix");
  std::vector<std::uint32_t> nonzero;
  for (unsigned j = 1; j <= m.cols(); ++j)
    if (auto c = m.column(j))
      nonzero.push_back(c);
  std::sort(nonzero.begin(), nonzero.end());
  nonzero.erase(std::unique(nonzero.begin(), nonzero.end()), nonzero.end());
  if (nonzero.size() > 1)
    return {m};

  std::vector<std::uint32_t> betas = nonzero;
  if (betas.empty())
    for (unsigned i = 1; i <= m.rows(); ++i)
      betas.push_back(unit(m.rows(), i));

  std::vector<GF2Matrix> out{GF2Matrix::zero(m.rows(), m.cols())};
  for (auto beta : betas)
    for (std::uint32_t support = 1; support < (1u << m.cols()); ++support) {
      std::vector<std::uint32_t> columns(m.cols());
      for (unsigned j = 1; j <= m.cols(); ++j)
        columns[j - 1] = (support >> (m.cols() - j)) & 1u ? beta : 0;
      out.push_back(GF2Matrix::from_columns(m.rows(), columns));
    }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isolated_linear(const GF2Matrix &m) {
  std::optional<std::uint32_t> seen;
  for (unsigned j = 1; j <= m.cols(); ++j)
    if (auto c = m.column(j)) {
      if (seen && *seen != c)
        return true;
      seen = c;
    }
  return false;
}

BoolFunction::BoolFunction(unsigned m, unsigned n,
                           std::vector<std::uint32_t> table)
    : m_(m), n_(n), table_(std::move(table)) {
  if (m == 0 || n == 0 || m > 20 || n > kMaxDim)
    throw Error(ErrorCode::DimMismatch,
                "Boolean functions need 1 <= m <= 20 and 1 <= n <= 31");
  if (table_.size() != (std::size_t{1} << m))
    throw Error(ErrorCode::DimMismatch, "table needs 2^m entries");
  for (auto y : table_)
    if (y >> n)
      throw Error(ErrorCode::DimMismatch, "table value outside B^n");
}

BoolFunction BoolFunction::from_finite_map(const FiniteMap &map, unsigned m,
                                           unsigned n) {
  if (map.dom_size() != (std::size_t{1} << m) ||
      map.cod_size() != (std::size_t{1} << n))
    throw Error(ErrorCode::DimMismatch, "map does not fit B^m -> B^n");
  return BoolFunction(m, n, {map.values().begin(), map.values().end()});
}

BoolPoint BoolFunction::operator()(const BoolPoint &x) const {
  if (x.dim() != m_)
    throw Error(ErrorCode::DimMismatch, "point dimension does not match");
  return BoolPoint(n_, table_[x.bits()]);
}

FiniteMap BoolFunction::to_finite_map() const {
  return FiniteMap(std::size_t{1} << n_,
                   std::vector<Vertex>(table_.begin(), table_.end()));
}

BoolFunction parse_bool_function(std::string_view text, unsigned m) {
  if (m == 0 || m > 20)
    throw Error(ErrorCode::DimMismatch, "polynomial input needs 1 <= m <= 20");
  auto components = PolyParser(text, m).parse_top();
  const auto n = static_cast<unsigned>(components.size());
  std::vector<std::uint32_t> table(std::size_t{1} << m, 0);
  for (std::size_t x = 0; x < table.size(); ++x)
    for (unsigned i = 0; i < n; ++i)
      table[x] = table[x] << 1 | components[i][x];
  return BoolFunction(m, n, std::move(table));
}

bool boolean_differentiable_at(const BoolFunction &f, const BoolPoint &b) {
  require_dim(f, b);
  if (isolated_candidate(f, b))
    return true;
  const auto shape = local_shape(f, b);
  return shape.zero_condition && (shape.inside_unit_ball || !shape.betas.empty());
}

std::vector<GF2Matrix> boolean_differentials_at(const BoolFunction &f,
                                                const BoolPoint &b,
                                                const Limits &limits) {
  require_dim(f, b);
  const auto m = f.input_dim();
  const auto n = f.output_dim();
  std::vector<GF2Matrix> out;

  // Case 1: L isolated and L = f on N(b).
  if (auto l = isolated_candidate(f, b))
    out.push_back(*l);

  const auto shape = local_shape(f, b);
  if (shape.zero_condition) {
    // Case 2: L = 0 with f(N(b)) ⊆ N(0).
    if (shape.inside_unit_ball)
      out.push_back(GF2Matrix::zero(n, m));
    // Case 3: every nonzero column of L equals β and f(N(b)) ⊆ {0, β}.
    const std::uint64_t per_beta = (std::uint64_t{1} << m) - 1;
    if (shape.betas.size() * per_beta > limits.max_map_candidates)
      throw Error(ErrorCode::SizeGuardExceeded,
                  "too many non-isolated differentials to list");
    for (auto beta : shape.betas)
      for (std::uint32_t support = 1; support <= per_beta; ++support) {
        std::vector<std::uint32_t> columns(m);
        for (unsigned j = 1; j <= m; ++j)
          columns[j - 1] = (support >> (m - j)) & 1u ? beta : 0;
        out.push_back(GF2Matrix::from_columns(n, columns));
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint32_t> solve_gf2_system(unsigned unknowns,
                                            const std::vector<std::uint32_t> &rows,
                                            const std::vector<bool> &rhs) {
  if (rows.size() != rhs.size())
    throw Error(ErrorCode::DimMismatch, "system rows and right-hand side differ");
  // Augmented rows: coefficient bits shifted left once, rhs in bit 0.
  std::vector<std::uint64_t> aug(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    aug[r] = (std::uint64_t{rows[r]} << 1) | (rhs[r] ? 1u : 0u);

  std::vector<unsigned> pivot_bits;
  std::size_t rank = 0;
  for (int bit = static_cast<int>(unknowns); bit >= 1 && rank < aug.size(); --bit) {
    const auto mask = std::uint64_t{1} << bit;
    auto it = std::find_if(aug.begin() + static_cast<std::ptrdiff_t>(rank),
                           aug.end(), [&](std::uint64_t r) { return r & mask; });
    if (it == aug.end())
      continue;
    std::iter_swap(aug.begin() + static_cast<std::ptrdiff_t>(rank), it);
    for (std::size_t r = 0; r < aug.size(); ++r)
      if (r != rank && (aug[r] & mask))
        aug[r] ^= aug[rank];
    pivot_bits.push_back(static_cast<unsigned>(bit));
    ++rank;
  }
  for (std::size_t r = rank; r < aug.size(); ++r)
    if (aug[r] == 1)
      return {};

  std::vector<unsigned> free_bits;
  for (unsigned bit = 1; bit <= unknowns; ++bit)
    if (std::find(pivot_bits.begin(), pivot_bits.end(), bit) == pivot_bits.end())
      free_bits.push_back(bit);
  if (free_bits.size() > 20)
    throw Error(ErrorCode::SizeGuardExceeded, "solution space too large to list");

  std::vector<std::uint32_t> out;
  for (std::uint32_t assign = 0; assign < (1u << free_bits.size()); ++assign) {
    std::uint64_t x = 0;
    for (std::size_t i = 0; i < free_bits.size(); ++i)
      if (assign >> i & 1)
        x |= std::uint64_t{1} << free_bits[i];
    // Row r of the reduced system fixes its pivot from the free variables.
    for (std::size_t r = 0; r < rank; ++r) {
      const auto others = aug[r] & ~(std::uint64_t{1} << pivot_bits[r]) & ~std::uint64_t{1};
      const bool value = ((aug[r] & 1u) ^ (std::popcount(others & x) & 1u)) != 0;
      if (value)
        x |= std::uint64_t{1} << pivot_bits[r];
    }
    out.push_back(static_cast<std::uint32_t>(x >> 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GF2Matrix> solve_matrix_equation(const BoolFunction &f,
                                             const BoolPoint &b) {
  require_dim(f, b);
  const auto m = f.input_dim();
  const auto n = f.output_dim();
  const auto ball = hamming_ball(b);

  // Row i of L solves ⟨row, x_t⟩ = f(x_t)_i for every x_t ∈ N(b).
  std::vector<std::vector<std::uint32_t>> row_solutions(n);
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<bool> rhs;
    for (auto x : ball)
      rhs.push_back((f(x) >> (n - i)) & 1u);
    row_solutions[i - 1] = solve_gf2_system(m, ball, rhs);
    if (row_solutions[i - 1].empty())
      return {};
  }

  std::vector<GF2Matrix> out;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    GF2Matrix l(n, m);
    for (unsigned i = 1; i <= n; ++i)
      for (unsigned j = 1; j <= m; ++j)
        l.set(i, j, (row_solutions[i - 1][choice[i - 1]] >> (m - j)) & 1u);
    if (is_continuous_linear(l))
      out.push_back(l);
    unsigned i = 0;
    while (i < n && ++choice[i] == row_solutions[i].size())
      choice[i++] = 0;
    if (i == n)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CensusReport scalar_differentiability_census(const BoolFunction &f) {
  if (f.output_dim() != 1)
    throw Error(ErrorCode::DimMismatch, "the census needs a scalar function");
  const auto m = f.input_dim();
  CensusReport report;
  report.dim = m;
  report.differentiable.resize(std::size_t{1} << m);
  for (std::uint32_t x = 0; x < report.differentiable.size(); ++x) {
    const BoolPoint b(m, x);
    const bool differentiable = boolean_differentiable_at(f, b);
    report.differentiable[x] = differentiable;
    const bool expected = b.weight() > 1 || f(0u) == 0;
    if (differentiable != expected)
      report.mismatches.push_back(b);
  }
  return report;
}

LeibnizReport leibniz_probe(const BoolFunction &f, const BoolFunction &g,
                            const BoolPoint &b) {
  if (f.output_dim() != 1 || g.output_dim() != 1 ||
      f.input_dim() != g.input_dim())
    throw Error(ErrorCode::DimMismatch,
                "the Leibniz probe needs two scalar functions on one cube");
  const auto df = boolean_differentials_at(f, b);
  const auto dg = boolean_differentials_at(g, b);
  if (df.empty() || dg.empty())
    throw Error(ErrorCode::NotDifferentiable,
                std::string(df.empty() ? "f" : "g") + " is not differentiable at " +
                    b.to_string());

  std::vector<std::uint32_t> product(f.table().size());
  for (std::size_t x = 0; x < product.size(); ++x)
    product[x] = f.table()[x] & g.table()[x];
  const BoolFunction fg(f.input_dim(), 1, std::move(product));
  const auto dfg = boolean_differentials_at(fg, b);

  const bool fb = f(b.bits()) != 0, gb = g(b.bits()) != 0;
  LeibnizReport report;
  for (const auto &lf : df)
    for (const auto &lg : dg) {
      GF2Matrix candidate(1, f.input_dim());
      for (unsigned j = 1; j <= f.input_dim(); ++j)
        candidate.set(1, j, (gb && lf.get(1, j)) != (fb && lg.get(1, j)));
      const bool ok = std::binary_search(dfg.begin(), dfg.end(), candidate);
      ++report.pairs;
      report.satisfied += ok ? 1 : 0;
      report.details.push_back({lf, lg, candidate, ok});
    }
  return report;
}

} // namespace convdiff
