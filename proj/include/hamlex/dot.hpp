#ifndef HAMLEX_DOT_HPP
#define HAMLEX_DOT_HPP

#include <ostream>
#include <set>
#include <string>
#include <utility>

#include "hamlex/graph.hpp"
#include "hamlex/product.hpp"

namespace hamlex {

namespace detail {

inline std::string dot_node(ProductVertex v) {
    return "\"" + std::to_string(v.layer) + ":" + std::to_string(v.inner) + "\"";
}

}  // namespace detail

/// GraphViz rendering of a product: one ranked cluster per layer, layer
/// edges inside the clusters, crossing edges between them. When a walk is
/// given its edges are drawn bold and the rest fade to gray.
inline void write_product_dot(std::ostream& os, const ProductSpec& spec,
                              const ProductWalk* walk = nullptr) {
    const int m = spec.length();
    const int n = spec.layer_order();
    std::set<std::pair<int, int>> walk_edges;
    if (walk != nullptr) {
        const std::size_t size = walk->vertices.size();
        const std::size_t steps = walk->closed ? size : (size == 0 ? 0 : size - 1);
        for (std::size_t p = 0; p < steps; ++p) {
            const int a = flatten(walk->vertices[p].layer, walk->vertices[p].inner, n);
            const int b = flatten(walk->vertices[(p + 1) % size].layer,
                                  walk->vertices[(p + 1) % size].inner, n);
            walk_edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    auto style = [&](ProductVertex u, ProductVertex v) {
        const int fu = flatten(u.layer, u.inner, n);
        const int fv = flatten(v.layer, v.inner, n);
        const bool bold = walk_edges.count({std::min(fu, fv), std::max(fu, fv)}) != 0;
        if (bold) return std::string(" [penwidth=2.5]");
        return walk != nullptr ? std::string(" [color=gray70]") : std::string();
    };

    os << "graph product {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
    for (int i = 1; i <= m; ++i) {
        os << "  subgraph cluster_" << i << " {\n    label=\"H" << i << "\";\n";
        for (int h = 0; h < n; ++h) os << "    " << detail::dot_node({i, h}) << ";\n";
        for (const Edge& e : spec.layer(i).edges())
            os << "    " << detail::dot_node({i, e.u}) << " -- " << detail::dot_node({i, e.v})
               << style({i, e.u}, {i, e.v}) << ";\n";
        os << "  }\n";
    }
    for (int i = 1; i < m; ++i)
        for (int h = 0; h < n; ++h)
            for (int h2 = 0; h2 < n; ++h2)
                os << "  " << detail::dot_node({i, h}) << " -- " << detail::dot_node({i + 1, h2})
                   << style({i, h}, {i + 1, h2}) << ";\n";
    os << "}\n";
}

/// Plain graph rendering with the repo's flat vertex labels.
inline void write_graph_dot(std::ostream& os, const SimpleGraph& g) {
    os << "graph g {\n  node [shape=circle, fontsize=10];\n";
    for (int v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
    for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
    os << "}\n";
}

}  // namespace hamlex

#endif  // HAMLEX_DOT_HPP
