#include "convdiff/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "convdiff/boolean.hpp"
#include "convdiff/cayley.hpp"
#include "convdiff/differential.hpp"
#include "convdiff/error.hpp"
#include "convdiff/io.hpp"
#include "convdiff/scenarios.hpp"

namespace convdiff::cli {

namespace {

using nlohmann::json;

constexpr const char *kLimitsEnv = "CONVDIFF_LIMITS";

Error user_error(const std::string &message) {
  return Error(ErrorCode::InvalidArgument, message);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos)
    return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on `sep` outside parentheses and brackets.
std::vector<std::string> split_top(std::string_view text, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : text) {
    if (c == '(' || c == '[')
      ++depth;
    if (c == ')' || c == ']')
      --depth;
    if (c == sep && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(trim(cur));
  return parts;
}

std::size_t parse_count(const std::string &text, const std::string &what) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) ||
      text.size() > 9)
    throw user_error("bad " + what + " \"" + text + "\"");
  return std::stoul(text);
}

// A group together with the generators used when none are given.
struct BuiltGroup {
  FiniteGroup group;
  std::vector<Element> default_gens;
  std::optional<unsigned> boolean_dim; // set for z2^n
};

BuiltGroup build_single(const std::string &spec, const Limits &limits) {
  const auto colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (spec.rfind("z2^", 0) == 0) {
    const auto n = parse_count(spec.substr(3), "dimension");
    if (n < 1 || n > limits.max_hypercube_dim)
      throw Error(ErrorCode::SizeGuardExceeded,
                  "z2^" + std::to_string(n) + " is outside 1.." +
                      std::to_string(limits.max_hypercube_dim));
    auto g = z2_power(static_cast<unsigned>(n), limits);
    std::vector<Element> units;
    for (std::size_t i = 0; i < n; ++i)
      units.push_back(Element{1} << (n - 1 - i));
    std::sort(units.begin(), units.end());
    return {std::move(g), units, static_cast<unsigned>(n)};
  }
  if (kind == "cyclic" || kind == "z") {
    const auto n = parse_count(arg, "order");
    if (n < 1)
      throw user_error("cyclic order must be positive");
    auto g = cyclic(n, limits);
    std::vector<Element> gens;
    if (n > 1)
      gens.push_back(1);
    return {std::move(g), gens, n == 2 ? std::optional<unsigned>(1) : std::nullopt};
  }
  if (kind == "s" || kind == "sym") {
    const auto n = parse_count(arg, "degree");
    if (n < 1 || n > 5)
      throw user_error("symmetric groups are available for 1 <= n <= 5");
    auto g = symmetric(static_cast<unsigned>(n));
    if (g.order() > limits.max_group_order)
      throw Error(ErrorCode::SizeGuardExceeded, "group order exceeds guard");
    auto gens = n == 3 ? std::vector<Element>{1, 3} : greedy_generators(g);
    return {std::move(g), gens, std::nullopt};
  }
  if (kind == "file") {
    auto g = group_from_json(read_json_file(arg));
    if (g.order() > limits.max_group_order)
      throw Error(ErrorCode::SizeGuardExceeded, "group order exceeds guard");
    auto gens = greedy_generators(g);
    return {std::move(g), gens, std::nullopt};
  }
  throw user_error("unknown group \"" + spec +
                   "\" (expected cyclic:n, s:n, z2^n, file:path or A+B)");
}

BuiltGroup build_group(const std::string &spec, const Limits &limits) {
  const auto parts = split_top(spec, '+');
  auto acc = build_single(parts.front(), limits);
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto right = build_single(parts[i], limits);
    const auto h = right.group.order();
    std::vector<Element> gens;
    for (auto g : acc.default_gens)
      gens.push_back(static_cast<Element>(g * h));
    for (auto d : right.default_gens)
      gens.push_back(d);
    std::sort(gens.begin(), gens.end());
    std::optional<unsigned> dim;
    if (acc.boolean_dim && right.boolean_dim)
      dim = *acc.boolean_dim + *right.boolean_dim;
    acc = {direct_sum(acc.group, right.group, limits), gens, dim};
  }
  return acc;
}

Element parse_element(const FiniteGroup &group, const std::string &token) {
  if (auto g = group.find(token))
    return *g;
  // "(1,0,1)" for bitstring-named elements.
  if (token.size() > 2 && token.front() == '(' && token.back() == ')') {
    std::string packed;
    for (char c : token.substr(1, token.size() - 2))
      if (c != ',' && c != ' ')
        packed += c;
    if (auto g = group.find(packed))
      return *g;
  }
  if (!token.empty() && std::all_of(token.begin(), token.end(), ::isdigit) &&
      token.size() < 10) {
    const auto i = std::stoul(token);
    if (i < group.order())
      return static_cast<Element>(i);
  }
  throw user_error("unknown element \"" + token + "\"");
}

CayleyGraph build_cayley(const std::string &spec,
                         const std::optional<std::string> &gens,
                         const Limits &limits,
                         std::optional<unsigned> *boolean_dim = nullptr) {
  auto built = build_group(spec, limits);
  std::vector<Element> elements = built.default_gens;
  if (gens) {
    elements.clear();
    for (const auto &t : split_top(*gens, ','))
      elements.push_back(parse_element(built.group, t));
  }
  if (boolean_dim)
    *boolean_dim = gens ? std::nullopt : built.boolean_dim;
  auto validated = GeneratingSet::validate(built.group, elements);
  return cayley_graph(std::move(built.group), std::move(validated));
}

std::string join_names(const FiniteGroup &group, std::span<const Element> xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i)
    s += (i ? ", " : "") + group.name(xs[i]);
  return s + "}";
}

std::string map_names(const FiniteGroup &cod, const FiniteMap &map) {
  std::string s = "[";
  for (std::size_t i = 0; i < map.dom_size(); ++i)
    s += (i ? ", " : "") + cod.name(map(static_cast<Vertex>(i)));
  return s + "]";
}

json gens_json(const CayleyGraph &c) {
  json names = json::array();
  for (auto g : c.gens().elements())
    names.push_back(c.group().name(g));
  return names;
}

void print_props(std::ostream &out, const ReflexiveDigraph &space) {
  const auto p = space_properties(space);
  auto b = [](bool v) { return v ? "true" : "false"; };
  out << "T0=" << b(p.is_T0) << "\nT1=" << b(p.is_T1)
      << "\ndiscrete=" << b(p.is_discrete)
      << "\ntopological=" << b(p.is_topological) << "\n";
}

// --- diff -------------------------------------------------------------------

struct DiffOptions {
  std::string dom, cod;
  std::optional<std::string> dom_gens, cod_gens;
  std::optional<std::string> poly, file, builtin;
  std::string at;
  std::string oracle = "none";
  std::string format = "text";
};

struct BuiltinFunction {
  const char *name;
  const char *dom;
  const char *cod;
  const char *poly; // nullptr for the structural ones
};

constexpr BuiltinFunction kBuiltins[] = {
    {"identity", nullptr, nullptr, nullptr},
    {"zero", nullptr, nullptr, nullptr},
    {"diagonal", nullptr, nullptr, nullptr},
    {"worked-f", "z2^2", "z2^3", "(p,(1+p)(1+q),q)"},
    {"worked-g", "z2^3", "z2^2", "((1+q)(1+p+pr),(1+r)q)"},
    {"worked-gf", "z2^2", "z2^2", "(q,(1+p)(1+q))"},
    {"bad", "z2^3", "z2^3", "(p(1+q)(1+r),pr(1+q),r(1+p)(1+q))"},
};

const BuiltinFunction &find_builtin(const std::string &name) {
  for (const auto &b : kBuiltins)
    if (name == b.name)
      return b;
  std::string known;
  for (const auto &b : kBuiltins)
    known += std::string(known.empty() ? "" : ", ") + b.name;
  throw user_error("unknown builtin \"" + name + "\" (known: " + known + ")");
}

FiniteMap function_from_poly(const std::string &text,
                             std::optional<unsigned> dom_dim,
                             std::optional<unsigned> cod_dim) {
  if (!dom_dim || !cod_dim)
    throw user_error("--f needs z2^m domain and codomain with default generators");
  const auto f = parse_bool_function(text, *dom_dim);
  if (f.output_dim() != *cod_dim)
    throw Error(ErrorCode::DimMismatch,
                "polynomial has " + std::to_string(f.output_dim()) +
                    " components but the codomain is z2^" +
                    std::to_string(*cod_dim));
  return f.to_finite_map();
}

std::string describe_differential(const DiffSpace &space, std::size_t i,
                                  std::optional<unsigned> dom_dim,
                                  std::optional<unsigned> cod_dim) {
  const auto &map = space.map(i);
  std::string s;
  if (dom_dim && cod_dim) {
    const auto m = to_matrix(map, *cod_dim, *dom_dim);
    s = m.to_formula() + "  " + m.to_string();
  } else {
    s = map_names(space.codomain_cayley()->group(), map);
  }
  return s + (is_isolated(space, i) ? "  isolated" : "");
}

int run_diff(const DiffOptions &o, const Limits &limits, std::ostream &out) {
  std::string dom = o.dom, cod = o.cod, poly = o.poly.value_or("");
  const BuiltinFunction *builtin = o.builtin ? &find_builtin(*o.builtin) : nullptr;
  if (builtin && builtin->poly) {
    if (dom.empty())
      dom = builtin->dom;
    if (cod.empty())
      cod = builtin->cod;
    if (dom != builtin->dom || cod != builtin->cod)
      throw Error(ErrorCode::DimMismatch, std::string(builtin->name) + " maps " +
                                              builtin->dom + " -> " + builtin->cod);
    poly = builtin->poly;
  }
  if (builtin && std::string(builtin->name) == "diagonal" && cod.empty())
    cod = dom + "+" + dom;
  if (builtin && !builtin->poly && std::string(builtin->name) != "diagonal" &&
      cod.empty())
    cod = dom;
  if (dom.empty() || cod.empty())
    throw user_error("--dom and --cod are required");

  std::optional<unsigned> dom_dim, cod_dim;
  const auto c = build_cayley(dom, o.dom_gens, limits, &dom_dim);
  const auto d = build_cayley(cod, o.cod_gens, limits, &cod_dim);
  const auto n = c.group().order(), k = d.group().order();

  FiniteMap f;
  if (o.file) {
    f = map_from_json(read_json_file(*o.file));
    if (f.dom_size() != n || f.cod_size() != k)
      throw Error(ErrorCode::DimMismatch, "map table does not fit the groups");
  } else if (!poly.empty()) {
    f = function_from_poly(poly, dom_dim, cod_dim);
  } else {
    const std::string name = builtin->name;
    if (name == "zero") {
      f = FiniteMap::constant(n, k, 0);
    } else if (name == "identity") {
      if (n != k)
        throw Error(ErrorCode::DimMismatch, "identity needs equal groups");
      f = FiniteMap::identity(n);
    } else {
      if (k != n * n)
        throw Error(ErrorCode::DimMismatch, "diagonal needs --cod G+G");
      std::vector<Vertex> v(n);
      for (Vertex x = 0; x < n; ++x)
        v[x] = pair_index(x, x, n);
      f = FiniteMap(k, v);
    }
  }

  const Vertex at = parse_element(c.group(), o.at);
  const auto space = diff_space(c, d, limits, /*cross_check=*/true);
  const DifferentialQuery q{space, f, at};
  const auto generic = differentials_at(q);
  const auto theorem = differentials_by_theorem(q);
  if (generic != theorem)
    throw Error(ErrorCode::CrossCheckFailed,
                "generic criterion and three-case classification disagree");
  std::vector<OracleMode> modes;
  if (o.oracle == "smallest" || o.oracle == "both")
    modes.push_back(OracleMode::SmallestNeighborhood);
  if (o.oracle == "sweep" || o.oracle == "both")
    modes.push_back(OracleMode::FilterSweep);
  for (auto mode : modes)
    if (differential_oracle(q, mode, limits) != generic)
      throw Error(ErrorCode::CrossCheckFailed,
                  std::string("oracle (") +
                      (mode == OracleMode::FilterSweep ? "sweep" : "smallest") +
                      ") disagrees with the criterion");

  const bool continuous = is_continuous_at(c.digraph(), d.digraph(), f, at);
  if (o.format == "json") {
    json ds = json::array();
    for (auto i : generic) {
      json entry = to_json(space.map(i));
      entry["isolated"] = is_isolated(space, i);
      if (dom_dim && cod_dim)
        entry["matrix"] = to_matrix(space.map(i), *cod_dim, *dom_dim).to_string();
      ds.push_back(entry);
    }
    out << json{{"at", c.group().name(at)},
                {"continuous", continuous},
                {"differentiable", !generic.empty()},
                {"differentials", ds}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "point: " << c.group().name(at) << "\n"
      << "continuous: " << (continuous ? "true" : "false") << "\n"
      << "differentiable: " << (generic.empty() ? "false" : "true") << "\n"
      << "differentials: " << generic.size() << "\n";
  for (auto i : generic)
    out << "  " << describe_differential(space, i, dom_dim, cod_dim) << "\n";
  return kOk;
}

// --- bool -------------------------------------------------------------------

void check_dims(const BoolFunction &f, std::optional<unsigned> n) {
  if (n && f.output_dim() != *n)
    throw Error(ErrorCode::DimMismatch,
                "function has " + std::to_string(f.output_dim()) +
                    " components, expected " + std::to_string(*n));
}

BoolPoint parse_point(const std::string &text, unsigned m) {
  const auto p = BoolPoint::parse(text);
  if (p.dim() != m)
    throw Error(ErrorCode::DimMismatch, "point " + text + " is not in B^" +
                                            std::to_string(m));
  return p;
}

void print_matrices(std::ostream &out, const std::vector<GF2Matrix> &ms) {
  for (const auto &m : ms)
    out << "  " << m.to_formula() << "  " << m.to_string()
        << (is_isolated_linear(m) ? "  isolated" : "") << "\n";
}

// Independent route through the generic machinery, when the space is small.
void bool_cross_check(const BoolFunction &f, const BoolPoint &b,
                      const std::vector<GF2Matrix> &ds, const Limits &limits) {
  const unsigned m = f.input_dim(), n = f.output_dim();
  std::uint64_t maps = 1;
  for (unsigned i = 0; i < m; ++i)
    maps *= n + 1;
  if (m > 4 || n > 4 || maps > 4096)
    return;
  const auto space = diff_space(hypercube(m, limits), hypercube(n, limits), limits);
  const auto fm = f.to_finite_map();
  std::vector<GF2Matrix> generic;
  for (auto i : differentials_at({space, fm, b.bits()}))
    generic.push_back(to_matrix(space.map(i), n, m));
  std::sort(generic.begin(), generic.end());
  if (generic != ds)
    throw Error(ErrorCode::CrossCheckFailed,
                "Boolean classification disagrees with the generic criterion");
}

} // namespace

int run(const std::vector<std::string> &argv, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Differentials on finite groups and reflexive digraphs", "convdiff"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  // group
  std::string group_spec, group_format = "text";
  std::optional<std::string> group_gens, homs_to;
  auto *group = app.add_subcommand("group", "Inspect a group");
  group->add_option("--group", group_spec, "cyclic:n, s:n, z2^n, file:path, A+B")->required();
  group->add_option("--gens", group_gens, "Comma-separated generators to validate");
  group->add_option("--homs-to", homs_to, "List homomorphisms into this group");
  group->add_option("--format", group_format)->check(CLI::IsMember({"text", "json"}));

  // cayley
  std::string cay_spec, cay_format = "text";
  std::optional<std::string> cay_gens;
  bool cay_check = false;
  auto *cayley = app.add_subcommand("cayley", "Build a Cayley graph");
  cayley->add_option("--group", cay_spec)->required();
  cayley->add_option("--gens", cay_gens);
  cayley->add_option("--format", cay_format)->check(CLI::IsMember({"text", "json", "dot"}));
  cayley->add_flag("--check", cay_check, "Verify left translations are automorphisms");

  // space
  bool sp_pentacle = false, sp_props = false;
  std::optional<std::string> sp_file, sp_group, sp_gens;
  std::optional<std::size_t> sp_discrete;
  std::string sp_format = "json";
  auto *space = app.add_subcommand("space", "Inspect a reflexive digraph");
  auto *src_pentacle = space->add_flag("--pentacle", sp_pentacle);
  auto *src_file = space->add_option("--file", sp_file, "Digraph JSON");
  auto *src_group = space->add_option("--group", sp_group, "Cayley graph of a group");
  auto *src_discrete = space->add_option("--discrete", sp_discrete, "Discrete space on n points");
  src_pentacle->excludes(src_file, src_group, src_discrete);
  src_file->excludes(src_group, src_discrete);
  src_group->excludes(src_discrete);
  space->add_option("--gens", sp_gens)->needs(src_group);
  space->add_flag("--props", sp_props, "Print T0/T1/discrete/topological");
  space->add_option("--format", sp_format)->check(CLI::IsMember({"json", "dot"}));

  // diffspace
  std::string ds_dom, ds_cod, ds_format = "text";
  std::optional<std::string> ds_dom_gens, ds_cod_gens;
  auto *diffspace = app.add_subcommand("diffspace", "List D(C,D) for two Cayley graphs");
  diffspace->add_option("--dom", ds_dom)->required();
  diffspace->add_option("--cod", ds_cod)->required();
  diffspace->add_option("--dom-gens", ds_dom_gens);
  diffspace->add_option("--cod-gens", ds_cod_gens);
  diffspace->add_option("--format", ds_format)->check(CLI::IsMember({"text", "json", "dot"}));

  // diff
  DiffOptions d;
  auto *diff = app.add_subcommand("diff", "Differentials of a function at a point");
  diff->add_option("--dom", d.dom);
  diff->add_option("--cod", d.cod);
  diff->add_option("--dom-gens", d.dom_gens);
  diff->add_option("--cod-gens", d.cod_gens);
  auto *f_poly = diff->add_option("--f", d.poly, "GF(2) polynomial tuple");
  auto *f_file = diff->add_option("--fn", d.file, "Map JSON file");
  auto *f_builtin = diff->add_option("--builtin", d.builtin, "Named function");
  f_poly->excludes(f_file, f_builtin);
  f_file->excludes(f_builtin);
  diff->add_option("--at", d.at, "Point (element name or index)")->required();
  diff->add_option("--oracle", d.oracle, "Also compare against an oracle")
      ->check(CLI::IsMember({"none", "smallest", "sweep", "both"}));
  diff->add_option("--format", d.format)->check(CLI::IsMember({"text", "json"}));

  // bool
  auto *boolean = app.add_subcommand("bool", "Boolean hypercube tools");
  boolean->require_subcommand(1);
  unsigned b_m = 0;
  std::optional<unsigned> b_n;
  std::string b_f, b_g, b_at;
  auto *b_diff = boolean->add_subcommand("diff", "Differentials at a point");
  auto *b_census = boolean->add_subcommand("census", "Differentiability of f: B^m -> B at every point");
  auto *b_leibniz = boolean->add_subcommand("leibniz", "Product-rule probe for f*g");
  auto *b_solve = boolean->add_subcommand("solve", "Continuous solutions of L x = f(x) on N(b)");
  for (auto *sub : {b_diff, b_census, b_leibniz, b_solve}) {
    sub->add_option("--m", b_m, "Input dimension")->required()->check(CLI::Range(1, 20));
    sub->add_option("--f", b_f, "GF(2) polynomial")->required();
  }
  for (auto *sub : {b_diff, b_leibniz, b_solve})
    sub->add_option("--at", b_at)->required();
  for (auto *sub : {b_diff, b_solve})
    sub->add_option("--n", b_n, "Expected output dimension");
  b_leibniz->add_option("--g", b_g, "Second GF(2) polynomial")->required();

  // examples
  std::string suite;
  auto *examples = app.add_subcommand("examples", "Run the reference scenarios");
  examples->add_option("--suite", suite, "reference (alias: paper)")
      ->required()
      ->check(CLI::IsMember({"reference", "paper"}));

  std::vector<const char *> args;
  args.push_back("convdiff");
  for (const auto &a : argv)
    args.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(args.size()), args.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError &e) {
    err << "error[Usage]: " << e.what() << "\n";
    return kUserError;
  }

  try {
    Limits limits;
    if (const char *env = std::getenv(kLimitsEnv))
      limits = parse_limits(env);

    if (*group) {
      auto built = build_group(group_spec, limits);
      const auto &g = built.group;
      std::vector<Element> gens = built.default_gens;
      if (group_gens) {
        gens.clear();
        for (const auto &t : split_top(*group_gens, ','))
          gens.push_back(parse_element(g, t));
      }
      const auto validated = GeneratingSet::validate(g, gens);
      std::optional<BuiltGroup> target;
      std::vector<FiniteMap> homs;
      if (homs_to) {
        target = build_group(*homs_to, limits);
        homs = enumerate_homomorphisms(g, target->group, limits);
      }
      if (group_format == "json") {
        json doc = to_json(g);
        json names = json::array();
        for (auto x : validated.elements())
          names.push_back(g.name(x));
        doc["gens"] = names;
        if (target) {
          json hs = json::array();
          for (const auto &h : homs)
            hs.push_back(to_json(h));
          doc["homomorphisms"] = hs;
        }
        out << doc.dump(2) << "\n";
        return kOk;
      }
      out << "order: " << g.order() << "\n"
          << "abelian: " << (g.is_abelian() ? "true" : "false") << "\n"
          << "generators: " << join_names(g, validated.elements()) << "\n"
          << "square subgroup: " << join_names(g, square_subgroup(g)) << "\n"
          << "elements:\n";
      for (Element x = 0; x < g.order(); ++x)
        out << "  " << g.name(x) << "  order " << element_order(g, x) << "\n";
      if (target) {
        out << "homomorphisms: " << homs.size() << "\n";
        for (const auto &h : homs)
          out << "  " << map_names(target->group, h) << "\n";
      }
      return kOk;
    }

    if (*cayley) {
      const auto c = build_cayley(cay_spec, cay_gens, limits);
      if (cay_check) {
        const auto check = left_mult_automorphism_check(c);
        out << "left translations are automorphisms: "
            << (check.holds ? "true" : "false") << "\n";
        if (!check.holds)
          out << check.detail << "\n";
        return check.holds ? kOk : kCrossCheckMismatch;
      }
      if (cay_format == "dot") {
        out << emit_dot(c.digraph(), c.group().names());
      } else if (cay_format == "json") {
        out << json{{"group", to_json(c.group())},
                    {"gens", gens_json(c)},
                    {"digraph", to_json(c.digraph())}}
                   .dump(2)
            << "\n";
      } else {
        out << "generators: " << join_names(c.group(), c.gens().elements()) << "\n";
        for (Vertex v = 0; v < c.group().order(); ++v)
          out << "N(" << c.group().name(v)
              << ") = " << join_names(c.group(), c.digraph().nbhd(v)) << "\n";
      }
      return kOk;
    }

    if (*space) {
      ReflexiveDigraph g;
      std::vector<std::string> names;
      if (sp_pentacle) {
        g = pentacle();
      } else if (sp_file) {
        g = digraph_from_json(read_json_file(*sp_file));
      } else if (sp_group) {
        const auto c = build_cayley(*sp_group, sp_gens, limits);
        g = c.digraph();
        names = c.group().names();
      } else if (sp_discrete) {
        g = discrete_space(*sp_discrete);
      } else {
        throw user_error("space needs one of --pentacle, --file, --group, --discrete");
      }
      if (sp_props)
        print_props(out, g);
      else if (sp_format == "dot")
        out << emit_dot(g, names);
      else
        out << to_json(g).dump(2) << "\n";
      return kOk;
    }

    if (*diffspace) {
      const auto c = build_cayley(ds_dom, ds_dom_gens, limits);
      const auto dd = build_cayley(ds_cod, ds_cod_gens, limits);
      const auto s = diff_space(c, dd, limits, /*cross_check=*/true);
      if (ds_format == "json") {
        out << to_json(s).dump(2) << "\n";
      } else if (ds_format == "dot") {
        std::vector<std::string> labels;
        for (const auto &m : s.maps())
          labels.push_back(map_names(dd.group(), m));
        out << emit_dot(s.as_digraph(), labels);
      } else {
        out << "|D| = " << s.size() << "\n";
        for (std::size_t i = 0; i < s.size(); ++i) {
          out << "  " << i << ": " << map_names(dd.group(), s.map(i));
          if (is_isolated(s, i)) {
            out << "  isolated\n";
          } else {
            out << "  N = {";
            for (std::size_t j = 0; j < s.nbhd(i).size(); ++j)
              out << (j ? ", " : "") << s.nbhd(i)[j];
            out << "}\n";
          }
        }
      }
      return kOk;
    }

    if (*diff) {
      if (!d.poly && !d.file && !d.builtin)
        throw user_error("diff needs one of --f, --fn, --builtin");
      return run_diff(d, limits, out);
    }

    if (*boolean) {
      const auto f = parse_bool_function(b_f, b_m);
      if (*b_census) {
        const auto report = scalar_differentiability_census(f);
        for (std::uint32_t x = 0; x < report.differentiable.size(); ++x)
          out << BoolPoint(b_m, x).to_string() << "  "
              << (report.differentiable[x] ? "differentiable" : "not differentiable")
              << "\n";
        out << "corollary pattern: " << (report.matches_corollary() ? "holds" : "fails")
            << "\n";
        return report.matches_corollary() ? kOk : kCrossCheckMismatch;
      }
      const auto at = parse_point(b_at, b_m);
      if (*b_diff) {
        check_dims(f, b_n);
        const auto ds = boolean_differentials_at(f, at, limits);
        bool_cross_check(f, at, ds, limits);
        out << "differentiable: " << (ds.empty() ? "false" : "true") << "\n"
            << "differentials: " << ds.size() << "\n";
        print_matrices(out, ds);
        return kOk;
      }
      if (*b_solve) {
        check_dims(f, b_n);
        const auto sols = solve_matrix_equation(f, at);
        out << "solutions: " << sols.size() << "\n";
        print_matrices(out, sols);
        return kOk;
      }
      const auto g = parse_bool_function(b_g, b_m);
      const auto report = leibniz_probe(f, g, at);
      out << "pairs: " << report.pairs << "\n"
          << "satisfied: " << report.satisfied << "\n";
      for (const auto &p : report.details)
        out << "  df=" << p.df.to_formula() << "  dg=" << p.dg.to_formula()
            << "  candidate=" << p.candidate.to_formula() << "  "
            << (p.is_differential ? "differential" : "not a differential") << "\n";
      return kOk;
    }

    if (*examples) {
      const auto results = run_reference_scenarios();
      std::size_t passed = 0;
      for (const auto &r : results) {
        passed += r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  (" << r.detail
            << ")\n";
      }
      out << passed << "/" << results.size() << " scenarios passed\n";
      return passed == results.size() ? kOk : kCrossCheckMismatch;
    }
  } catch (const Error &e) {
    err << "error[" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::CrossCheckFailed ? kCrossCheckMismatch
                                                   : kUserError;
  } catch (const nlohmann::json::exception &e) {
    err << "error[ParseError]: " << e.what() << "\n";
    return kUserError;
  }
  return kUserError;
}

} // namespace convdiff::cli
