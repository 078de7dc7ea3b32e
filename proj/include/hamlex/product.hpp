#ifndef HAMLEX_PRODUCT_HPP
#define HAMLEX_PRODUCT_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "hamlex/graph.hpp"

namespace hamlex {

/// A path P_m with one layer graph per path vertex, all of equal order.
/// The product replaces u_i by H_i and joins consecutive layers completely.
class ProductSpec {
public:
    explicit ProductSpec(std::vector<SimpleGraph> layers) : layers_(std::move(layers)) {
        if (layers_.empty())
            throw std::invalid_argument("ProductSpec: need at least one layer");
        for (const SimpleGraph& h : layers_)
            if (h.order() != layers_.front().order())
                throw std::invalid_argument("ProductSpec: unequal layer orders");
    }

    /// Uniform product: the same layer graph at every path vertex.
    ProductSpec(int m, const SimpleGraph& layer)
        : ProductSpec(std::vector<SimpleGraph>(static_cast<std::size_t>(require_m(m)), layer)) {}

    int length() const { return static_cast<int>(layers_.size()); }
    int layer_order() const { return layers_.front().order(); }
    int total_order() const { return length() * layer_order(); }

    /// Layer graph H_i, 1 <= i <= m.
    const SimpleGraph& layer(int i) const {
        if (i < 1 || i > length())
            throw std::invalid_argument("ProductSpec: layer index out of range");
        return layers_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<SimpleGraph>& layers() const { return layers_; }

private:
    static int require_m(int m) {
        if (m < 1) throw std::invalid_argument("ProductSpec: need at least one layer");
        return m;
    }

    std::vector<SimpleGraph> layers_;
};

/// Row-major flat index of (layer i, inner h) with layers of order n.
inline int flatten(int layer, int inner, int n) {
    if (n < 1 || layer < 1 || inner < 0 || inner >= n)
        throw std::invalid_argument("flatten: index out of range");
    return (layer - 1) * n + inner;
}

inline ProductVertex unflatten(int idx, int n) {
    if (n < 1 || idx < 0)
        throw std::invalid_argument("unflatten: index out of range");
    return ProductVertex{idx / n + 1, idx % n};
}

/// Adjacency of two product vertices, straight from the definition:
/// consecutive layers are completely joined, within a layer the layer
/// graph decides.
inline bool product_adjacent(const ProductSpec& spec, ProductVertex p, ProductVertex q) {
    const int m = spec.length();
    const int n = spec.layer_order();
    auto in_range = [&](ProductVertex v) {
        return v.layer >= 1 && v.layer <= m && v.inner >= 0 && v.inner < n;
    };
    if (!in_range(p) || !in_range(q))
        throw std::invalid_argument("product_adjacent: vertex out of range");
    if (p.layer == q.layer) return spec.layer(p.layer).has_edge(p.inner, q.inner);
    return p.layer - q.layer == 1 || q.layer - p.layer == 1;
}

/// Materialize the product as a SimpleGraph on m*n vertices using the
/// row-major flat indexing.
inline SimpleGraph build_product(const ProductSpec& spec) {
    const int m = spec.length();
    const int n = spec.layer_order();
    std::vector<std::pair<Vertex, Vertex>> edge_list;
    for (int i = 1; i <= m; ++i) {
        for (const Edge& e : spec.layer(i).edges())
            edge_list.emplace_back(flatten(i, e.u, n), flatten(i, e.v, n));
        if (i < m)
            for (int h = 0; h < n; ++h)
                for (int h2 = 0; h2 < n; ++h2)
                    edge_list.emplace_back(flatten(i, h, n), flatten(i + 1, h2, n));
    }
    return SimpleGraph(m * n, std::move(edge_list));
}

}  // namespace hamlex

#endif  // HAMLEX_PRODUCT_HPP
