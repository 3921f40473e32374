#include "bcrystal/json_io.hpp"

#include <algorithm>

namespace bcrystal {

namespace {

using nlohmann::json;

json type_header(LieType t) {
  return json{{"type", t.kind == Kind::B ? "B" : "C"}, {"rank", t.rank}};
}

LieType type_from_header(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j.contains("rank"))
    throw std::invalid_argument("element JSON needs \"type\" and \"rank\"");
  const std::string code = j.at("type").get<std::string>();
  if (code != "B" && code != "C")
    throw std::invalid_argument("type must be \"B\" or \"C\"");
  return LieType(code == "B" ? Kind::B : Kind::C, j.at("rank").get<int>());
}

}  // namespace

json to_json(const MLTableau& tableau) {
  json rows = json::array();
  for (const auto& row : tableau.rows()) {
    json encoded = json::array();
    for (Entry e : row) encoded.push_back(e.code());
    rows.push_back(std::move(encoded));
  }
  json j = type_header(tableau.type());
  j["rows"] = std::move(rows);
  return j;
}

MLTableau tableau_from_json(const json& j) {
  const LieType t = type_from_header(j);
  if (!j.contains("rows") || !j.at("rows").is_array())
    throw std::invalid_argument("tableau JSON needs a \"rows\" array");
  std::vector<std::vector<Entry>> rows;
  for (const json& row : j.at("rows")) {
    if (!row.is_array())
      throw std::invalid_argument("tableau rows must be arrays");
    std::vector<Entry> entries;
    for (const json& code : row)
      entries.push_back(Entry::from_code(code.get<int>()));
    rows.push_back(std::move(entries));
  }
  return MLTableau::from_canonical(t, std::move(rows));
}

json to_json(const KostantPartition& partition) {
  json counts = json::object();
  for (const auto& [root, c] : partition.counts()) counts[to_string(root)] = c;
  json j = type_header(partition.type());
  j["counts"] = std::move(counts);
  return j;
}

KostantPartition kostant_from_json(const json& j) {
  const LieType t = type_from_header(j);
  if (!j.contains("counts") || !j.at("counts").is_object())
    throw std::invalid_argument("partition JSON needs a \"counts\" object");
  std::map<RootLabel, int> counts;
  for (const auto& [key, value] : j.at("counts").items()) {
    const int c = value.get<int>();
    if (c < 0)
      throw std::invalid_argument("count for " + key + " is negative");
    if (c > 0) counts[parse_root_label(key)] += c;
  }
  return KostantPartition::from_counts(t, std::move(counts));
}

namespace {

template <typename Elem>
json graph_to_json(const CrystalGraph<Elem>& graph) {
  json vertices = json::array();
  for (const Elem& v : graph.vertices) vertices.push_back(to_json(v));
  json edges = json::array();
  for (const auto& [src, i, dst] : graph.edges)
    edges.push_back(json::array({src, i, dst}));
  return json{{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

template <typename Elem, typename Parse>
CrystalGraph<Elem> graph_from_json(const json& j, Parse parse) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"vertices\" and \"edges\"");
  CrystalGraph<Elem> graph{LieType(Kind::B, 2), 0, {}, {}};
  for (const json& v : j.at("vertices")) graph.vertices.push_back(parse(v));
  if (graph.vertices.empty())
    throw std::invalid_argument("graph JSON has no vertices");
  graph.type = graph.vertices.front().type();
  int depth = 0;
  for (const Elem& v : graph.vertices)
    depth = std::max(depth, -coefficient_sum(v.weight()));
  graph.depth = depth;
  const int size = static_cast<int>(graph.vertices.size());
  for (const json& edge : j.at("edges")) {
    if (!edge.is_array() || edge.size() != 3)
      throw std::invalid_argument("graph edges must be [src,i,dst] triples");
    std::array<int, 3> triple{edge[0].get<int>(), edge[1].get<int>(),
                              edge[2].get<int>()};
    if (triple[0] < 0 || triple[0] >= size || triple[2] < 0 || triple[2] >= size)
      throw std::invalid_argument("graph edge endpoint out of range");
    graph.edges.push_back(triple);
  }
  return graph;
}

}  // namespace

json to_json(const TableauGraph& graph) { return graph_to_json(graph); }
json to_json(const KostantGraph& graph) { return graph_to_json(graph); }

std::string export_json(const TableauGraph& graph) {
  return to_json(graph).dump();
}
std::string export_json(const KostantGraph& graph) {
  return to_json(graph).dump();
}

TableauGraph tableau_graph_from_json(const json& j) {
  return graph_from_json<MLTableau>(j, tableau_from_json);
}

KostantGraph kostant_graph_from_json(const json& j) {
  return graph_from_json<KostantPartition>(j, kostant_from_json);
}

}  // namespace bcrystal
