#include "json_io.hpp"

namespace subfree {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Err::parse, "invalid JSON");
    return j;
}

std::vector<Edge> edges_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw Error(Err::parse, std::string(what) + " must be an array");
    std::vector<Edge> out;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(Err::parse, std::string(what) + " entries must be [int,int]");
        out.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    return out;
}

}  // namespace

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return json{{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error(Err::parse, "graph JSON needs fields \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw Error(Err::parse, "graph field \"n\" must be an integer");
    return build_graph(j["n"].get<int>(), edges_from_json(j["edges"], "edges"));
}

Graph graph_from_json_text(const std::string& text) { return graph_from_json(parse(text)); }

json family_to_json(const PatternFamily& fam) {
    json out = json::array();
    for (const auto& p : fam.patterns) out.push_back(graph_to_json(p));
    return out;
}

PatternFamily family_from_json(const json& j) {
    if (!j.is_array()) throw Error(Err::parse, "family JSON must be an array of graphs");
    std::vector<Graph> pats;
    for (const auto& p : j) pats.push_back(graph_from_json(p));
    return PatternFamily(std::move(pats));
}

PatternFamily family_from_json_text(const std::string& text) {
    return family_from_json(parse(text));
}

json td_to_json(const TreeDecomposition& td) {
    json bags = json::array();
    for (const auto& b : td.bags) bags.push_back(b);
    json edges = json::array();
    for (auto [a, b] : td.tree_edges) edges.push_back({a, b});
    return json{{"nodes", td.nodes}, {"tree_edges", edges}, {"bags", bags}};
}

TreeDecomposition td_from_json(const json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j.contains("tree_edges") || !j.contains("bags"))
        throw Error(Err::parse, "td JSON needs \"nodes\", \"tree_edges\" and \"bags\"");
    TreeDecomposition td;
    td.nodes = j["nodes"].get<int>();
    for (auto [a, b] : edges_from_json(j["tree_edges"], "tree_edges")) td.tree_edges.push_back({a, b});
    if (!j["bags"].is_array()) throw Error(Err::parse, "bags must be an array");
    for (const auto& b : j["bags"]) {
        std::vector<int> bag = b.get<std::vector<int>>();
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        td.bags.push_back(std::move(bag));
    }
    return td;
}

json embedding_to_json(const ProductEmbedding& e) {
    json map = json::array();
    for (auto [h, layer] : e.placement) map.push_back({h, layer});
    return json{{"h", graph_to_json(e.h)},
                {"h_td", td_to_json(e.h_td)},
                {"path_len", e.path_length},
                {"map", map}};
}

ProductEmbedding embedding_from_json(const json& j) {
    if (!j.is_object() || !j.contains("h") || !j.contains("path_len") || !j.contains("map"))
        throw Error(Err::parse, "embedding JSON needs \"h\", \"path_len\" and \"map\"");
    ProductEmbedding e;
    e.h = graph_from_json(j["h"]);
    e.path_length = j["path_len"].get<int>();
    if (j.contains("h_td") && !j["h_td"].is_null())
        e.h_td = td_from_json(j["h_td"]);
    else
        e.h_td = compute_td(e.h);
    auto v = validate_td(e.h, e.h_td);
    if (!v.empty())
        throw Error(Err::invalid_decomposition, "embedded factor decomposition: " + v[0].detail);
    for (auto [h, layer] : edges_from_json(j["map"], "map")) e.placement.push_back({h, layer});
    return e;
}

json edges_to_json(const std::vector<Edge>& edges) {
    json out = json::array();
    for (auto [u, v] : edges) out.push_back({u, v});
    return out;
}

}  // namespace subfree
