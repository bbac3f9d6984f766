#ifndef SUBFREE_JSON_IO_HPP
#define SUBFREE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "treewidth.hpp"

namespace subfree {

// Wire formats:
//   graph       {"n": int, "edges": [[u,v], ...]}
//   family      [graph, ...]
//   td          {"nodes": int, "tree_edges": [[a,b], ...], "bags": [[v,...], ...]}
//   embedding   {"h": graph, "h_td": td (optional), "path_len": L,
//                "map": [[h_vertex, layer], ...]}

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph graph_from_json_text(const std::string& text);

nlohmann::json family_to_json(const PatternFamily& fam);
PatternFamily family_from_json(const nlohmann::json& j);
PatternFamily family_from_json_text(const std::string& text);

nlohmann::json td_to_json(const TreeDecomposition& td);
TreeDecomposition td_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const ProductEmbedding& e);
// h_td is computed with compute_td(h) when the field is absent.
ProductEmbedding embedding_from_json(const nlohmann::json& j);

nlohmann::json edges_to_json(const std::vector<Edge>& edges);

}  // namespace subfree

#endif
