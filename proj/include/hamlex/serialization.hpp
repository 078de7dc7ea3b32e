#ifndef HAMLEX_SERIALIZATION_HPP
#define HAMLEX_SERIALIZATION_HPP

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hamlex/decide.hpp"
#include "hamlex/graph.hpp"
#include "hamlex/product.hpp"

namespace hamlex {

using nlohmann::json;

/// Repo-wide graph encoding: {"n": order, "edges": [[u, v], ...]} with
/// 0-indexed vertices and lexicographically sorted edges on output.
inline json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
    return json{{"n", g.order()}, {"edges", std::move(edges)}};
}

inline SimpleGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw std::invalid_argument("graph JSON: need an integer field \"n\"");
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw std::invalid_argument("graph JSON: \"edges\" must be an array");
        for (const json& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
                throw std::invalid_argument("graph JSON: each edge must be a pair of integers");
            edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
        }
    }
    return SimpleGraph(j["n"].get<int>(), std::move(edges));
}

/// Product spec: {"m": ..., "layers": [graph, ...]} or the uniform
/// shorthand {"m": ..., "layer": graph}.
inline json product_spec_to_json(const ProductSpec& spec) {
    json layers = json::array();
    for (const SimpleGraph& h : spec.layers()) layers.push_back(graph_to_json(h));
    return json{{"m", spec.length()}, {"layers", std::move(layers)}};
}

inline ProductSpec product_spec_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer())
        throw std::invalid_argument("product JSON: need an integer field \"m\"");
    const int m = j["m"].get<int>();
    if (j.contains("layer")) {
        if (j.contains("layers"))
            throw std::invalid_argument("product JSON: give \"layer\" or \"layers\", not both");
        return ProductSpec(m, graph_from_json(j["layer"]));
    }
    if (!j.contains("layers") || !j["layers"].is_array())
        throw std::invalid_argument("product JSON: need \"layers\" (array) or \"layer\"");
    std::vector<SimpleGraph> layers;
    for (const json& g : j["layers"]) layers.push_back(graph_from_json(g));
    if (static_cast<int>(layers.size()) != m)
        throw std::invalid_argument("product JSON: \"m\" does not match the layer count");
    return ProductSpec(std::move(layers));
}

/// Witness encoding: {"closed": bool, "walk": [[layer, inner], ...]}.
inline json walk_to_json(const ProductWalk& walk) {
    json verts = json::array();
    for (const ProductVertex& v : walk.vertices) verts.push_back(json::array({v.layer, v.inner}));
    return json{{"closed", walk.closed}, {"walk", std::move(verts)}};
}

inline ProductWalk walk_from_json(const json& j) {
    if (!j.is_object() || !j.contains("closed") || !j["closed"].is_boolean() || !j.contains("walk") ||
        !j["walk"].is_array())
        throw std::invalid_argument("witness JSON: need \"closed\" (bool) and \"walk\" (array)");
    ProductWalk walk;
    walk.closed = j["closed"].get<bool>();
    for (const json& v : j["walk"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw std::invalid_argument("witness JSON: each walk entry must be [layer, inner]");
        walk.vertices.push_back(ProductVertex{v[0].get<int>(), v[1].get<int>()});
    }
    return walk;
}

inline json multiple_to_json(const PathMultigraph& gm) {
    return json{{"mult", gm.multiplicities()}, {"loops", gm.loops()}};
}

inline PathMultigraph multiple_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mult") || !j.contains("loops"))
        throw std::invalid_argument("multiple JSON: need \"mult\" and \"loops\"");
    return PathMultigraph(j["mult"].get<std::vector<int>>(), j["loops"].get<std::vector<int>>());
}

inline json forest_to_json(const LinearForest& f) {
    json comps = json::array();
    for (const auto& comp : f.components()) comps.push_back(comp);
    return json{{"host_order", f.host_order()},
                {"edge_count", f.edge_count()},
                {"components", std::move(comps)}};
}

inline json decision_to_json(const Decision& d) {
    json rows = json::array();
    for (const Condition& c : d.conditions)
        rows.push_back(json{{"condition", c.name},
                            {"required", c.required},
                            {"actual", c.actual},
                            {"satisfied", c.satisfied}});
    json out{{"verdict", d.verdict}, {"ledger", std::move(rows)}, {"citation", d.citation}};
    if (!d.notes.empty()) out["notes"] = d.notes;
    return out;
}

}  // namespace hamlex

#endif  // HAMLEX_SERIALIZATION_HPP
