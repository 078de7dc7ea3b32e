#ifndef HAMLEX_ORACLE_HPP
#define HAMLEX_ORACLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hamlex/graph.hpp"
#include "hamlex/linear_forest.hpp"

namespace hamlex {

/// Exhaustive searches are certified (both directions) up to this many
/// vertices; above it only existence can be confirmed.
inline int oracle_exact_limit() { return detail::env_int("HAMLEX_ORACLE_LIMIT", 22); }

/// All-pairs hamiltonian connectivity stays within this vertex count.
inline int oracle_pairs_limit() { return detail::env_int("HAMLEX_ORACLE_HC_LIMIT", 14); }

constexpr int kOracleExistenceLimit = 32;

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks32(const SimpleGraph& g) {
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= 1u << e.v;
        adj[static_cast<std::size_t>(e.v)] |= 1u << e.u;
    }
    return adj;
}

/// dp[mask] = set of vertices v such that some path visits exactly `mask`
/// and ends at v; seeded from `starts`.
inline std::vector<std::uint32_t> path_dp(const SimpleGraph& g, std::uint32_t starts) {
    const int n = g.order();
    const auto adj = adjacency_masks32(g);
    const std::uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    std::vector<std::uint32_t> dp(static_cast<std::size_t>(full) + 1, 0);
    for (int v = 0; v < n; ++v)
        if (starts >> v & 1u) dp[1u << v] |= 1u << v;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = dp[mask];
        while (ends != 0) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj[static_cast<std::size_t>(v)] & ~mask;
            while (ext != 0) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                dp[mask | (1u << w)] |= 1u << w;
            }
        }
    }
    return dp;
}

inline std::vector<std::uint64_t> adjacency_masks64(const SimpleGraph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.order()), 0);
    for (const Edge& e : g.edges()) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    return adj;
}

/// Backtracking Hamiltonian-cycle search used above the subset-DP range.
/// Prunes branches whose unvisited region is unreachable or contains a
/// vertex with too few usable neighbours left, takes forced moves without
/// branching, and explores only one candidate out of each class of twin
/// vertices (identical neighbourhoods make them interchangeable). A node
/// budget keeps the search from running away on adversarial instances.
class CycleBacktracker {
public:
    explicit CycleBacktracker(const SimpleGraph& g, long long node_budget = 100'000'000)
        : n_(g.order()), adj_(adjacency_masks64(g)), budget_(node_budget) {
        twin_.assign(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u)
            for (int w = u + 1; w < n_; ++w) {
                const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << w);
                if ((adj_[static_cast<std::size_t>(u)] & ~pair) == (adj_[static_cast<std::size_t>(w)] & ~pair)) {
                    twin_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << w;
                    twin_[static_cast<std::size_t>(w)] |= std::uint64_t{1} << u;
                }
            }
    }

    bool has_cycle() {
        if (n_ < 3) return false;
        full_ = (n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
        nodes_ = 0;
        return extend(0, std::uint64_t{1});
    }

private:
    bool extend(int cur, std::uint64_t visited) {
        if (++nodes_ > budget_)
            throw InstanceTooLarge("brute_hamiltonian: existence search exceeded its node budget");
        if (visited == full_) return (adj_[static_cast<std::size_t>(cur)] & 1u) != 0;
        const std::uint64_t rest = full_ & ~visited;
        if (!reachable(cur, rest)) return false;
        std::uint64_t scan = rest;
        while (scan != 0) {
            const int w = std::countr_zero(scan);
            scan &= scan - 1;
            const std::uint64_t usable = adj_[static_cast<std::size_t>(w)] & (rest | (std::uint64_t{1} << cur) | 1u);
            if (std::popcount(usable) < 2) return false;
        }
        const std::uint64_t cand = adj_[static_cast<std::size_t>(cur)] & rest;
        // a candidate with only two usable connections left must be taken
        // now; two of them at once is a dead end. At the root both edges of
        // the start vertex are still free, so the rule only applies later.
        if (visited != 1u) {
            int forced = -1;
            scan = cand;
            while (scan != 0) {
                const int w = std::countr_zero(scan);
                scan &= scan - 1;
                const std::uint64_t access =
                    (adj_[static_cast<std::size_t>(w)] & rest & ~(std::uint64_t{1} << w)) |
                    (adj_[static_cast<std::size_t>(w)] & ((std::uint64_t{1} << cur) | 1u));
                if (std::popcount(access) == 2) {
                    if (forced >= 0) return false;
                    forced = w;
                }
            }
            if (forced >= 0) return extend(forced, visited | (std::uint64_t{1} << forced));
        }
        std::uint64_t keep = cand;
        scan = cand;
        while (scan != 0) {
            const int w = std::countr_zero(scan);
            scan &= scan - 1;
            if ((twin_[static_cast<std::size_t>(w)] & cand & ((std::uint64_t{1} << w) - 1)) != 0)
                keep &= ~(std::uint64_t{1} << w);
        }
        while (keep != 0) {
            const int w = std::countr_zero(keep);
            keep &= keep - 1;
            if (extend(w, visited | (std::uint64_t{1} << w))) return true;
        }
        return false;
    }

    bool reachable(int cur, std::uint64_t rest) const {
        std::uint64_t frontier = adj_[static_cast<std::size_t>(cur)] & rest;
        std::uint64_t seen = frontier;
        while (frontier != 0) {
            std::uint64_t grow = 0;
            std::uint64_t scan = frontier;
            while (scan != 0) {
                const int v = std::countr_zero(scan);
                scan &= scan - 1;
                grow |= adj_[static_cast<std::size_t>(v)] & rest & ~seen;
            }
            seen |= grow;
            frontier = grow;
        }
        return seen == rest;
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::uint64_t> twin_;
    std::uint64_t full_ = 0;
    long long budget_ = 0;
    long long nodes_ = 0;
};

}  // namespace detail

/// Hamiltonian-cycle existence. Exact (both directions) up to the oracle
/// limit via subset DP; above it a pruned backtracking search runs to
/// exhaustion, so callers should only exceed the limit on instances
/// expected to contain a cycle.
inline bool brute_hamiltonian(const SimpleGraph& g) {
    const int n = g.order();
    if (n < 3) return false;
    if (n <= oracle_exact_limit()) {
        const auto dp = detail::path_dp(g, 1u);
        const std::uint32_t full = (1u << n) - 1;
        std::uint32_t closers = 0;
        for (Vertex w : g.neighbors(0)) closers |= 1u << w;
        return (dp[full] & closers) != 0;
    }
    if (n > kOracleExistenceLimit)
        throw InstanceTooLarge("brute_hamiltonian: " + std::to_string(n) + " vertices exceeds the search limit");
    detail::CycleBacktracker search(g);
    return search.has_cycle();
}

/// Hamiltonian-path existence between the two given vertices.
inline bool brute_xy_traceable(const SimpleGraph& g, Vertex x, Vertex y) {
    const int n = g.order();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw std::invalid_argument("brute_xy_traceable: vertex out of range");
    if (x == y) return n == 1;
    if (n > oracle_exact_limit())
        throw InstanceTooLarge("brute_xy_traceable: graph exceeds the exact-search limit");
    const auto dp = detail::path_dp(g, 1u << x);
    const std::uint32_t full = (1u << n) - 1;
    return (dp[full] >> y & 1u) != 0;
}

/// Hamiltonian-path existence (any endpoints).
inline bool brute_traceable(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 1) return true;
    if (n > oracle_exact_limit())
        throw InstanceTooLarge("brute_traceable: graph exceeds the exact-search limit");
    const auto dp = detail::path_dp(g, (n == 32) ? ~0u : (1u << n) - 1);
    const std::uint32_t full = (1u << n) - 1;
    return dp[full] != 0;
}

/// True iff every vertex pair is joined by a Hamiltonian path.
inline bool brute_ham_connected(const SimpleGraph& g) {
    const int n = g.order();
    if (n > oracle_pairs_limit())
        throw InstanceTooLarge("brute_ham_connected: graph exceeds the all-pairs search limit");
    if (n == 1) return true;
    const std::uint32_t full = (1u << n) - 1;
    for (Vertex x = 0; x < n; ++x) {
        const auto dp = detail::path_dp(g, 1u << x);
        for (Vertex y = x + 1; y < n; ++y)
            if ((dp[full] >> y & 1u) == 0) return false;
    }
    return true;
}

namespace detail {

/// Exhaustive max spanning linear forest over edge subsets.
inline void pi_edge_dfs(const std::vector<Edge>& edges, std::size_t idx, std::vector<int>& deg,
                        std::vector<int>& parent, int chosen, int& best) {
    best = std::max(best, chosen);
    if (idx >= edges.size()) return;
    if (chosen + static_cast<int>(edges.size() - idx) <= best) return;
    const Edge& e = edges[idx];
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    const int ru = find(e.u), rv = find(e.v);
    if (deg[static_cast<std::size_t>(e.u)] < 2 && deg[static_cast<std::size_t>(e.v)] < 2 && ru != rv) {
        parent[static_cast<std::size_t>(rv)] = ru;
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
        pi_edge_dfs(edges, idx + 1, deg, parent, chosen + 1, best);
        parent[static_cast<std::size_t>(rv)] = rv;
        --deg[static_cast<std::size_t>(e.u)];
        --deg[static_cast<std::size_t>(e.v)];
    }
    pi_edge_dfs(edges, idx + 1, deg, parent, chosen, best);
}

}  // namespace detail

/// Independent ground truth for pi. Sparse graphs are handled by an
/// exhaustive run over edge subsets; dense graphs up to 10 vertices fall
/// back to sweeping all vertex orderings and counting consecutive edges.
inline int brute_pi(const SimpleGraph& h) {
    const int n = h.order();
    if (h.edge_count() <= 24) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        std::vector<int> parent(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(v)] = v;
        int best = 0;
        detail::pi_edge_dfs(h.edges(), 0, deg, parent, 0, best);
        return best;
    }
    if (n > 10)
        throw InstanceTooLarge("brute_pi: instance too dense and too large for exhaustion");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    int best = 0;
    do {
        int count = 0;
        for (int t = 0; t + 1 < n; ++t)
            if (h.has_edge(order[static_cast<std::size_t>(t)], order[static_cast<std::size_t>(t + 1)])) ++count;
        best = std::max(best, count);
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

}  // namespace hamlex

#endif  // HAMLEX_ORACLE_HPP
