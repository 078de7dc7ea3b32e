#ifndef HAMLEX_LINEAR_FOREST_HPP
#define HAMLEX_LINEAR_FOREST_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlex/graph.hpp"

namespace hamlex {

namespace detail {

inline int env_int(const char* name, int fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    return std::atoi(raw);
}

/// Builds path components (including singletons) from a deg<=2 acyclic
/// edge set over vertices 0..n-1.
inline std::vector<std::vector<Vertex>> components_from_edges(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<char> visited(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < n; ++s) {
        if (visited[static_cast<std::size_t>(s)] || adj[static_cast<std::size_t>(s)].size() > 1)
            continue;
        std::vector<Vertex> comp{s};
        visited[static_cast<std::size_t>(s)] = 1;
        Vertex prev = -1, cur = s;
        while (true) {
            Vertex next = -1;
            for (Vertex w : adj[static_cast<std::size_t>(cur)])
                if (w != prev) next = w;
            if (next == -1) break;
            comp.push_back(next);
            visited[static_cast<std::size_t>(next)] = 1;
            prev = cur;
            cur = next;
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Minimum number of vertex-disjoint paths covering the whole vertex set,
/// by subset DP over (covered set, endpoint of the path being grown).
inline int min_path_cover_dp(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    const std::uint32_t full = (1u << n) - 1;
    const std::uint8_t kUnset = 0xff;
    std::vector<std::uint8_t> dp((static_cast<std::size_t>(full) + 1) * static_cast<std::size_t>(n), kUnset);
    auto cell = [&](std::uint32_t mask, int v) -> std::uint8_t& {
        return dp[static_cast<std::size_t>(mask) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v)];
    };
    for (int v = 0; v < n; ++v) cell(1u << v, v) = 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint8_t row_min = kUnset;
        for (int v = 0; v < n; ++v) {
            if ((mask >> v & 1u) == 0) continue;
            const std::uint8_t cur = cell(mask, v);
            if (cur == kUnset) continue;
            if (cur < row_min) row_min = cur;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                std::uint8_t& tgt = cell(mask | (1u << w), w);
                if (cur < tgt) tgt = cur;
            }
        }
        if (row_min == kUnset || mask == full) continue;
        std::uint32_t rest = full & ~mask;
        while (rest != 0) {
            const int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint8_t& tgt = cell(mask | (1u << w), w);
            if (row_min + 1 < tgt) tgt = static_cast<std::uint8_t>(row_min + 1);
        }
    }
    std::uint8_t best = kUnset;
    for (int v = 0; v < n; ++v) best = std::min(best, cell(full, v));
    return best;
}

/// Branch-and-bound over the lex-ordered edge list. Supports per-vertex
/// degree caps (terminals get cap 1) and a pair that must stay in
/// different components. Union-find operations are kept on an undo stack
/// so branches can be rolled back.
class ForestSearch {
public:
    ForestSearch(const SimpleGraph& g, const std::vector<Vertex>& terminals,
                 std::optional<std::pair<Vertex, Vertex>> separated)
        : g_(&g),
          deg_(static_cast<std::size_t>(g.order()), 0),
          cap_(static_cast<std::size_t>(g.order()), 2),
          parent_(static_cast<std::size_t>(g.order())),
          size_(static_cast<std::size_t>(g.order()), 1) {
        for (Vertex t : terminals) {
            if (t < 0 || t >= g.order())
                throw std::invalid_argument("ForestSearch: terminal vertex out of range");
            cap_[static_cast<std::size_t>(t)] = 1;
        }
        if (separated) {
            auto [x, y] = *separated;
            if (x < 0 || x >= g.order() || y < 0 || y >= g.order() || x == y)
                throw std::invalid_argument("ForestSearch: bad separated pair");
            sep_x_ = x;
            sep_y_ = y;
        }
        for (int v = 0; v < g.order(); ++v) parent_[static_cast<std::size_t>(v)] = v;
        for (int cap : cap_) residual_ += cap;
    }

    /// Maximum number of edges of a spanning linear forest under the
    /// constraints.
    int max_edges() {
        best_ = chosen_;
        search_max(0);
        return best_;
    }

    /// Lexicographically smallest edge set of the given cardinality
    /// (callers pass the maximum, or any feasible value below it).
    std::vector<Edge> lex_min_edge_set(int target) {
        std::vector<Edge> out;
        const auto& edges = g_->edges();
        for (std::size_t idx = 0; idx < edges.size() && chosen_ < target; ++idx) {
            if (!can_add(edges[idx])) continue;
            add(edges[idx]);
            if (reach(idx + 1, target)) {
                out.push_back(edges[idx]);
            } else {
                remove(edges[idx]);
            }
        }
        if (chosen_ != target)
            throw InfeasibleConstraints("lex_min_edge_set: target cardinality unreachable");
        return out;
    }

private:
    int find(int v) const {
        while (parent_[static_cast<std::size_t>(v)] != v) v = parent_[static_cast<std::size_t>(v)];
        return v;
    }

    bool can_add(const Edge& e) const {
        if (deg_[static_cast<std::size_t>(e.u)] >= cap_[static_cast<std::size_t>(e.u)]) return false;
        if (deg_[static_cast<std::size_t>(e.v)] >= cap_[static_cast<std::size_t>(e.v)]) return false;
        const int ru = find(e.u), rv = find(e.v);
        if (ru == rv) return false;
        if (sep_x_ >= 0) {
            const int rx = find(sep_x_), ry = find(sep_y_);
            if ((rx == ru && ry == rv) || (rx == rv && ry == ru)) return false;
        }
        return true;
    }

    void add(const Edge& e) {
        int ru = find(e.u), rv = find(e.v);
        if (size_[static_cast<std::size_t>(ru)] < size_[static_cast<std::size_t>(rv)]) std::swap(ru, rv);
        parent_[static_cast<std::size_t>(rv)] = ru;
        size_[static_cast<std::size_t>(ru)] += size_[static_cast<std::size_t>(rv)];
        undo_.emplace_back(rv, ru);
        ++deg_[static_cast<std::size_t>(e.u)];
        ++deg_[static_cast<std::size_t>(e.v)];
        residual_ -= 2;
        ++chosen_;
    }

    void remove(const Edge& e) {
        auto [child, root] = undo_.back();
        undo_.pop_back();
        parent_[static_cast<std::size_t>(child)] = child;
        size_[static_cast<std::size_t>(root)] -= size_[static_cast<std::size_t>(child)];
        --deg_[static_cast<std::size_t>(e.u)];
        --deg_[static_cast<std::size_t>(e.v)];
        residual_ += 2;
        --chosen_;
    }

    int bound_from(std::size_t idx) const {
        const int by_edges = static_cast<int>(g_->edges().size() - idx);
        const int by_residual = residual_ / 2;
        const int by_components = g_->order() - 1 - chosen_;
        return std::min({by_edges, by_residual, by_components});
    }

    void search_max(std::size_t idx) {
        if (chosen_ > best_) best_ = chosen_;
        if (idx >= g_->edges().size()) return;
        if (chosen_ + bound_from(idx) <= best_) return;
        const Edge& e = g_->edges()[idx];
        if (can_add(e)) {
            add(e);
            search_max(idx + 1);
            remove(e);
        }
        search_max(idx + 1);
    }

    bool reach(std::size_t idx, int target) {
        if (chosen_ == target) return true;
        if (idx >= g_->edges().size()) return false;
        if (chosen_ + bound_from(idx) < target) return false;
        const Edge& e = g_->edges()[idx];
        if (can_add(e)) {
            add(e);
            if (reach(idx + 1, target)) {
                remove(e);
                return true;
            }
            remove(e);
        }
        return reach(idx + 1, target);
    }

    const SimpleGraph* g_;
    std::vector<int> deg_;
    std::vector<int> cap_;
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<std::pair<int, int>> undo_;
    int sep_x_ = -1;
    int sep_y_ = -1;
    int chosen_ = 0;
    int best_ = 0;
    int residual_ = 0;
};

}  // namespace detail

/// Vertex-count ceiling for the exact spanning-forest search. Subset DP
/// runs up to 20 vertices, branch-and-bound covers the rest of the range.
inline int pi_search_limit() { return detail::env_int("HAMLEX_PI_LIMIT", 24); }

constexpr int kPiDpLimit = 20;

/// Side constraints for forest construction: an exact edge count, a set of
/// vertices that must end with forest-degree <= 1, and an optional pair
/// that must land in distinct components.
struct ForestConstraints {
    int exact_edges = 0;
    std::vector<Vertex> terminal_vertices;
    std::optional<std::pair<Vertex, Vertex>> separated_pair;
};

/// Maximum number of edges of a spanning linear forest of h, exact.
inline int pi(const SimpleGraph& h) {
    if (h.order() > pi_search_limit())
        throw InstanceTooLarge("pi: graph exceeds the exact-search limit of " +
                               std::to_string(pi_search_limit()) + " vertices");
    if (h.edge_count() == 0) return 0;
    if (h.order() <= kPiDpLimit) return h.order() - detail::min_path_cover_dp(h);
    detail::ForestSearch search(h, {}, std::nullopt);
    return search.max_edges();
}

/// Maximum edge count under terminal/separation constraints.
inline int constrained_pi(const SimpleGraph& h, const std::vector<Vertex>& terminals,
                          std::optional<std::pair<Vertex, Vertex>> separated = std::nullopt) {
    if (h.order() > pi_search_limit())
        throw InstanceTooLarge("constrained_pi: graph exceeds the exact-search limit");
    detail::ForestSearch search(h, terminals, separated);
    return search.max_edges();
}

/// A maximum spanning linear forest; ties broken by the lexicographically
/// smallest edge set so repeated runs return identical witnesses.
inline LinearForest max_linear_forest(const SimpleGraph& h) {
    const int target = pi(h);
    detail::ForestSearch search(h, {}, std::nullopt);
    const std::vector<Edge> picked = search.lex_min_edge_set(target);
    return LinearForest(h.order(), detail::components_from_edges(h.order(), picked));
}

/// A spanning linear forest with exactly c.exact_edges edges satisfying the
/// constraints: built from the constrained maximum forest, then trimmed by
/// repeatedly deleting the last edge of the longest component (ties go to
/// the component listed first).
inline LinearForest constrained_forest(const SimpleGraph& h, const ForestConstraints& c) {
    if (c.exact_edges < 0)
        throw std::invalid_argument("constrained_forest: negative edge count");
    const int cmax = constrained_pi(h, c.terminal_vertices, c.separated_pair);
    if (c.exact_edges > cmax)
        throw InfeasibleConstraints("constrained_forest: requested " + std::to_string(c.exact_edges) +
                                    " edges but only " + std::to_string(cmax) + " are achievable");
    detail::ForestSearch search(h, c.terminal_vertices, c.separated_pair);
    const std::vector<Edge> picked = search.lex_min_edge_set(cmax);
    auto comps = detail::components_from_edges(h.order(), picked);

    int edges = cmax;
    while (edges > c.exact_edges) {
        std::size_t longest = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() > comps[longest].size()) longest = i;
        Vertex dropped = comps[longest].back();
        comps[longest].pop_back();
        comps.push_back({dropped});
        --edges;
    }
    return LinearForest(h.order(), std::move(comps));
}

}  // namespace hamlex

#endif  // HAMLEX_LINEAR_FOREST_HPP
