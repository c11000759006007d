#include "convdiff/io.hpp"

#include <fstream>
#include <sstream>

#include "convdiff/error.hpp"

namespace convdiff {

using nlohmann::json;

namespace {

template <typename T> T field(const json &doc, const char *key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception &ex) {
    throw Error(ErrorCode::ParseError,
                std::string("bad field \"") + key + "\": " + ex.what());
  }
}

} // namespace

json to_json(const FiniteGroup &group) {
  return {{"order", group.order()},
          {"table", group.table()},
          {"names", group.names()}};
}

FiniteGroup group_from_json(const json &doc) {
  const auto order = field<std::size_t>(doc, "order");
  auto table = field<std::vector<std::vector<Element>>>(doc, "table");
  if (table.size() != order)
    throw Error(ErrorCode::MalformedTable,
                "\"order\" is " + std::to_string(order) + " but the table has " +
                    std::to_string(table.size()) + " rows");
  std::vector<std::string> names;
  if (doc.contains("names"))
    names = field<std::vector<std::string>>(doc, "names");
  return FiniteGroup::from_table(table, std::move(names));
}

json to_json(const ReflexiveDigraph &digraph) {
  return {{"size", digraph.size()}, {"nbhd", digraph.neighborhoods()}};
}

ReflexiveDigraph digraph_from_json(const json &doc) {
  const auto size = field<std::size_t>(doc, "size");
  auto nbhd = field<std::vector<std::vector<Vertex>>>(doc, "nbhd");
  if (nbhd.size() != size)
    throw Error(ErrorCode::ParseError, "\"size\" disagrees with \"nbhd\"");
  return ReflexiveDigraph(std::move(nbhd));
}

json to_json(const FiniteMap &map) {
  return {{"dom_size", map.dom_size()},
          {"cod_size", map.cod_size()},
          {"values", std::vector<Vertex>(map.values().begin(), map.values().end())}};
}

FiniteMap map_from_json(const json &doc) {
  const auto dom = field<std::size_t>(doc, "dom_size");
  const auto cod = field<std::size_t>(doc, "cod_size");
  auto values = field<std::vector<Vertex>>(doc, "values");
  if (values.size() != dom)
    throw Error(ErrorCode::ParseError, "\"dom_size\" disagrees with \"values\"");
  return FiniteMap(cod, std::move(values));
}

json to_json(const DiffSpace &space) {
  json maps = json::array();
  json nbhd = json::array();
  for (std::size_t l = 0; l < space.size(); ++l) {
    maps.push_back(std::vector<Vertex>(space.map(l).values().begin(),
                                       space.map(l).values().end()));
    nbhd.push_back(space.nbhd(l));
  }
  return {{"dom_size", space.domain().size()},
          {"cod_size", space.codomain().size()},
          {"maps", maps},
          {"nbhd", nbhd}};
}

json read_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception &ex) {
    throw Error(ErrorCode::ParseError, path + ": " + ex.what());
  }
}

std::string emit_dot(const ReflexiveDigraph &digraph,
                     const std::vector<std::string> &names) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < digraph.size(); ++v) {
    os << "  " << v;
    if (v < names.size())
      os << " [label=" << json(names[v]).dump() << "]";
    os << ";\n";
  }
  for (Vertex v = 0; v < digraph.size(); ++v)
    for (auto u : digraph.nbhd(v)) {
      if (u == v)
        continue;
      const bool mutual = digraph.adjacent(u, v);
      if (mutual && u < v)
        continue; // drawn once from the smaller endpoint
      os << "  " << v << " -> " << u << (mutual ? " [dir=none]" : "") << ";\n";
    }
  os << "}\n";
  return os.str();
}

} // namespace convdiff
