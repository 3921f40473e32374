#pragma once

#include <string>

#include <json.hpp>

#include "bcrystal/explorer.hpp"
#include "bcrystal/kostant.hpp"
#include "bcrystal/tableau.hpp"

/*
  JSON codecs.  Elements:

    tableau:    {"type":"B","rank":3,"rows":[[2,0,-3],[3],[]]}
                with entries k / 0 / -k for letter / zero / bar, rows
                canonical (unshaded, sorted);
    partition:  {"type":"C","rank":3,"counts":{"B(1,2)":4,...}}
                with zero counts omitted;
    graph:      {"vertices":[...],"edges":[[src,i,dst],...]}
                vertices in BFS order, edges by (src,i).

  Output is deterministic: object keys are sorted and all container orders
  are canonical.
*/

namespace bcrystal {

nlohmann::json to_json(const MLTableau& tableau);
MLTableau tableau_from_json(const nlohmann::json& j);

nlohmann::json to_json(const KostantPartition& partition);
KostantPartition kostant_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TableauGraph& graph);
nlohmann::json to_json(const KostantGraph& graph);
std::string export_json(const TableauGraph& graph);
std::string export_json(const KostantGraph& graph);
TableauGraph tableau_graph_from_json(const nlohmann::json& j);
KostantGraph kostant_graph_from_json(const nlohmann::json& j);

}  // namespace bcrystal
