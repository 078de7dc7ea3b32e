#ifndef HAMLEX_GRAPH_HPP
#define HAMLEX_GRAPH_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hamlex {

using Vertex = int;

/// Thrown when an instance exceeds the configured exact-search limits.
struct InstanceTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when forest constraints cannot be met; indicates a caller bug,
/// since feasibility is supposed to be established before construction.
struct InfeasibleConstraints : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An undirected edge stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected loopless graph on vertices 0..order-1. Immutable after
/// construction; equality is by exact labelled edge set.
class SimpleGraph {
public:
    explicit SimpleGraph(int order, std::vector<std::pair<Vertex, Vertex>> edge_list = {})
        : order_(order), adj_(static_cast<std::size_t>(std::max(order, 0))) {
        if (order < 1)
            throw std::invalid_argument("SimpleGraph: order must be at least 1");
        edges_.reserve(edge_list.size());
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= order || v >= order)
                throw std::invalid_argument("SimpleGraph: edge endpoint out of range");
            if (u == v)
                throw std::invalid_argument("SimpleGraph: self-loops are not allowed");
            if (u > v) std::swap(u, v);
            edges_.push_back({u, v});
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw std::invalid_argument("SimpleGraph: duplicate edge");
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
        for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    }

    int order() const { return order_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        const auto& nbrs = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nbrs.begin(), nbrs.end(), v);
    }

    int degree(Vertex v) const {
        check_vertex(v);
        return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
    }

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
        return a.order_ == b.order_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= order_)
            throw std::invalid_argument("SimpleGraph: vertex " + std::to_string(v) + " out of range");
    }

    int order_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Disjoint union; vertices of the second operand are shifted by g1.order().
inline SimpleGraph disjoint_union(const SimpleGraph& g1, const SimpleGraph& g2) {
    std::vector<std::pair<Vertex, Vertex>> edge_list;
    edge_list.reserve(g1.edge_count() + g2.edge_count());
    for (const Edge& e : g1.edges()) edge_list.emplace_back(e.u, e.v);
    for (const Edge& e : g2.edges()) edge_list.emplace_back(e.u + g1.order(), e.v + g1.order());
    return SimpleGraph(g1.order() + g2.order(), std::move(edge_list));
}

// Small named families used throughout the tests and the CLI corpus.

inline SimpleGraph empty_graph(int n) { return SimpleGraph(n); }

inline SimpleGraph path_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(0, n - 1);
    return SimpleGraph(n, std::move(e));
}

inline SimpleGraph complete_graph(int n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return SimpleGraph(n, std::move(e));
}

/// Star with one center (vertex 0) and `leaves` leaves.
inline SimpleGraph star_graph(int leaves) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
    return SimpleGraph(leaves + 1, std::move(e));
}

inline SimpleGraph complete_bipartite(int a, int b) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return SimpleGraph(a + b, std::move(e));
}

/// Multiple of a path on vertices u_1..u_m: per-edge multiplicities plus
/// per-vertex loop counts. Edge e_j joins u_j and u_{j+1}. The vertex and
/// edge accessors are 1-indexed to match that naming.
class PathMultigraph {
public:
    PathMultigraph(std::vector<int> mult, std::vector<int> loops)
        : mult_(std::move(mult)), loops_(std::move(loops)) {
        if (loops_.empty())
            throw std::invalid_argument("PathMultigraph: need at least one vertex");
        if (mult_.size() + 1 != loops_.size())
            throw std::invalid_argument("PathMultigraph: mult must have one entry per path edge");
        for (int v : mult_)
            if (v < 0) throw std::invalid_argument("PathMultigraph: negative multiplicity");
        for (int v : loops_)
            if (v < 0) throw std::invalid_argument("PathMultigraph: negative loop count");
    }

    int path_order() const { return static_cast<int>(loops_.size()); }

    /// Multiplicity of e_j = u_j u_{j+1}, 1 <= j <= m-1.
    int multiplicity(int j) const {
        if (j < 1 || j >= path_order())
            throw std::invalid_argument("PathMultigraph: edge index out of range");
        return mult_[static_cast<std::size_t>(j - 1)];
    }

    /// Loop count at u_i, 1 <= i <= m.
    int loop_count(int i) const {
        check_vertex(i);
        return loops_[static_cast<std::size_t>(i - 1)];
    }

    /// d(u_i) = mult[i-1] + mult[i] + 2*loops[i], absent boundary terms 0.
    int degree(int i) const {
        check_vertex(i);
        int d = 2 * loops_[static_cast<std::size_t>(i - 1)];
        if (i > 1) d += mult_[static_cast<std::size_t>(i - 2)];
        if (i < path_order()) d += mult_[static_cast<std::size_t>(i - 1)];
        return d;
    }

    /// Degree ignoring loops; this is what Euler-trail parity sees.
    int loopless_degree(int i) const { return degree(i) - 2 * loop_count(i); }

    /// Connected iff every path edge has multiplicity at least 1.
    bool is_connected() const {
        return std::all_of(mult_.begin(), mult_.end(), [](int v) { return v >= 1; });
    }

    const std::vector<int>& multiplicities() const { return mult_; }
    const std::vector<int>& loops() const { return loops_; }

    friend bool operator==(const PathMultigraph&, const PathMultigraph&) = default;

private:
    void check_vertex(int i) const {
        if (i < 1 || i > path_order())
            throw std::invalid_argument("PathMultigraph: vertex index out of range");
    }

    std::vector<int> mult_;
    std::vector<int> loops_;
};

/// Operation named in the interface contract; forwards to the member.
inline int multigraph_degree(const PathMultigraph& gm, int i) { return gm.degree(i); }

/// Vertex-disjoint union of paths spanning a host graph's vertex set.
/// Components are stored canonically: each path oriented with its lower
/// endpoint first, components sorted by their smallest vertex.
class LinearForest {
public:
    LinearForest(int host_order, std::vector<std::vector<Vertex>> components)
        : host_order_(host_order), components_(std::move(components)) {
        if (host_order < 1)
            throw std::invalid_argument("LinearForest: host order must be at least 1");
        std::vector<char> seen(static_cast<std::size_t>(host_order), 0);
        int covered = 0;
        for (auto& comp : components_) {
            if (comp.empty())
                throw std::invalid_argument("LinearForest: empty component");
            for (std::size_t t = 0; t < comp.size(); ++t) {
                Vertex v = comp[t];
                if (v < 0 || v >= host_order)
                    throw std::invalid_argument("LinearForest: vertex out of range");
                if (seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("LinearForest: vertex repeated");
                seen[static_cast<std::size_t>(v)] = 1;
                ++covered;
                if (t > 0 && comp[t - 1] == v)
                    throw std::invalid_argument("LinearForest: repeated consecutive vertex");
            }
            if (comp.size() > 1 && comp.back() < comp.front())
                std::reverse(comp.begin(), comp.end());
        }
        if (covered != host_order)
            throw std::invalid_argument("LinearForest: components must cover every vertex");
        std::sort(components_.begin(), components_.end(),
                  [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
                      return *std::min_element(a.begin(), a.end()) <
                             *std::min_element(b.begin(), b.end());
                  });
        edge_count_ = host_order - static_cast<int>(components_.size());
    }

    int host_order() const { return host_order_; }
    int edge_count() const { return edge_count_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    const std::vector<std::vector<Vertex>>& components() const { return components_; }

    /// Degree of v inside the forest (0, 1 or 2).
    int forest_degree(Vertex v) const {
        for (const auto& comp : components_) {
            for (std::size_t t = 0; t < comp.size(); ++t) {
                if (comp[t] != v) continue;
                if (comp.size() == 1) return 0;
                return (t == 0 || t + 1 == comp.size()) ? 1 : 2;
            }
        }
        throw std::invalid_argument("LinearForest: vertex out of range");
    }

    /// Index of the component containing v.
    int component_of(Vertex v) const {
        for (std::size_t c = 0; c < components_.size(); ++c)
            if (std::find(components_[c].begin(), components_[c].end(), v) != components_[c].end())
                return static_cast<int>(c);
        throw std::invalid_argument("LinearForest: vertex out of range");
    }

    std::vector<Edge> edge_set() const {
        std::vector<Edge> out;
        for (const auto& comp : components_)
            for (std::size_t t = 0; t + 1 < comp.size(); ++t)
                out.push_back({std::min(comp[t], comp[t + 1]), std::max(comp[t], comp[t + 1])});
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    int host_order_;
    std::vector<std::vector<Vertex>> components_;
    int edge_count_;
};

/// One vertex of a product: layer index in 1..m, inner vertex in 0..n-1.
struct ProductVertex {
    int layer;
    int inner;

    friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// A candidate Hamiltonian cycle (closed) or path (open) in a product.
struct ProductWalk {
    std::vector<ProductVertex> vertices;
    bool closed = false;

    friend bool operator==(const ProductWalk&, const ProductWalk&) = default;
};

}  // namespace hamlex

#endif  // HAMLEX_GRAPH_HPP
