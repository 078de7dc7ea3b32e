#ifndef HAMLEX_VERIFY_HPP
#define HAMLEX_VERIFY_HPP

#include <cstdlib>
#include <string>
#include <vector>

#include "hamlex/graph.hpp"
#include "hamlex/product.hpp"

namespace hamlex {

enum class ViolationCode {
    walk_empty,
    expected_closed,
    expected_open,
    cycle_too_short,
    wrong_vertex_count,
    vertex_out_of_range,
    vertex_repeated,
    step_not_adjacent,
    endpoint_mismatch,
    layer_step_jump,
    crossing_count_mismatch,
    layer_edge_count_mismatch,
    multiple_disconnected,
    degree_mismatch,
};

inline const char* violation_code_name(ViolationCode code) {
    switch (code) {
        case ViolationCode::walk_empty: return "walk_empty";
        case ViolationCode::expected_closed: return "expected_closed";
        case ViolationCode::expected_open: return "expected_open";
        case ViolationCode::cycle_too_short: return "cycle_too_short";
        case ViolationCode::wrong_vertex_count: return "wrong_vertex_count";
        case ViolationCode::vertex_out_of_range: return "vertex_out_of_range";
        case ViolationCode::vertex_repeated: return "vertex_repeated";
        case ViolationCode::step_not_adjacent: return "step_not_adjacent";
        case ViolationCode::endpoint_mismatch: return "endpoint_mismatch";
        case ViolationCode::layer_step_jump: return "layer_step_jump";
        case ViolationCode::crossing_count_mismatch: return "crossing_count_mismatch";
        case ViolationCode::layer_edge_count_mismatch: return "layer_edge_count_mismatch";
        case ViolationCode::multiple_disconnected: return "multiple_disconnected";
        case ViolationCode::degree_mismatch: return "degree_mismatch";
    }
    return "unknown";
}

/// First failing position plus a machine-readable reason. `index` is the
/// walk position, edge index or vertex index the code refers to.
struct Violation {
    ViolationCode code = ViolationCode::walk_empty;
    int index = 0;
};

struct VerifyResult {
    bool ok = true;
    Violation violation{};

    static VerifyResult pass() { return VerifyResult{}; }
    static VerifyResult fail(ViolationCode code, int index) {
        return VerifyResult{false, Violation{code, index}};
    }
};

namespace detail {

/// Coverage and adjacency checks shared by the cycle and path verifiers.
/// Works from the raw product graph; no builder metadata is trusted.
inline VerifyResult check_walk_body(const SimpleGraph& product, int layer_order,
                                    const ProductWalk& walk) {
    const int total = product.order();
    const std::size_t size = walk.vertices.size();
    if (size != static_cast<std::size_t>(total))
        return VerifyResult::fail(ViolationCode::wrong_vertex_count, static_cast<int>(size));
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    for (std::size_t p = 0; p < size; ++p) {
        const ProductVertex v = walk.vertices[p];
        if (v.layer < 1 || v.inner < 0 || v.inner >= layer_order)
            return VerifyResult::fail(ViolationCode::vertex_out_of_range, static_cast<int>(p));
        const int flat = (v.layer - 1) * layer_order + v.inner;
        if (flat >= total)
            return VerifyResult::fail(ViolationCode::vertex_out_of_range, static_cast<int>(p));
        if (seen[static_cast<std::size_t>(flat)])
            return VerifyResult::fail(ViolationCode::vertex_repeated, static_cast<int>(p));
        seen[static_cast<std::size_t>(flat)] = 1;
    }
    const std::size_t steps = walk.closed ? size : size - 1;
    for (std::size_t p = 0; p < steps; ++p) {
        const ProductVertex from = walk.vertices[p];
        const ProductVertex to = walk.vertices[(p + 1) % size];
        const int fu = (from.layer - 1) * layer_order + from.inner;
        const int fv = (to.layer - 1) * layer_order + to.inner;
        if (!product.has_edge(fu, fv))
            return VerifyResult::fail(ViolationCode::step_not_adjacent, static_cast<int>(p));
    }
    return VerifyResult::pass();
}

}  // namespace detail

/// Walk is a Hamiltonian cycle of the product: closed, covers every vertex
/// exactly once, every step (including the wraparound) is a product edge.
inline VerifyResult verify_ham_cycle(const SimpleGraph& product, int layer_order,
                                     const ProductWalk& walk) {
    if (walk.vertices.empty()) return VerifyResult::fail(ViolationCode::walk_empty, 0);
    if (!walk.closed) return VerifyResult::fail(ViolationCode::expected_closed, 0);
    if (walk.vertices.size() < 3)
        return VerifyResult::fail(ViolationCode::cycle_too_short, static_cast<int>(walk.vertices.size()));
    return detail::check_walk_body(product, layer_order, walk);
}

/// Walk is a Hamiltonian path of the product from x to y.
inline VerifyResult verify_ham_path(const SimpleGraph& product, int layer_order,
                                    const ProductWalk& walk, ProductVertex x, ProductVertex y) {
    if (walk.vertices.empty()) return VerifyResult::fail(ViolationCode::walk_empty, 0);
    if (walk.closed) return VerifyResult::fail(ViolationCode::expected_open, 0);
    if (walk.vertices.front() != x) return VerifyResult::fail(ViolationCode::endpoint_mismatch, 0);
    if (walk.vertices.back() != y)
        return VerifyResult::fail(ViolationCode::endpoint_mismatch,
                                  static_cast<int>(walk.vertices.size()) - 1);
    return detail::check_walk_body(product, layer_order, walk);
}

/// The walk uses exactly mult[j] crossing edges between layers j and j+1
/// and exactly loops[i] edges inside layer i.
inline VerifyResult verify_edge_profile(const ProductWalk& walk, const PathMultigraph& gm) {
    const int m = gm.path_order();
    if (walk.vertices.empty()) return VerifyResult::fail(ViolationCode::walk_empty, 0);
    std::vector<long long> crossing(static_cast<std::size_t>(m), 0);
    std::vector<long long> within(static_cast<std::size_t>(m + 1), 0);
    const std::size_t size = walk.vertices.size();
    const std::size_t steps = walk.closed ? size : size - 1;
    for (std::size_t p = 0; p < steps; ++p) {
        const int l1 = walk.vertices[p].layer;
        const int l2 = walk.vertices[(p + 1) % size].layer;
        if (l1 < 1 || l1 > m || l2 < 1 || l2 > m)
            return VerifyResult::fail(ViolationCode::vertex_out_of_range, static_cast<int>(p));
        if (l1 == l2)
            ++within[static_cast<std::size_t>(l1)];
        else if (l1 + 1 == l2 || l2 + 1 == l1)
            ++crossing[static_cast<std::size_t>(std::min(l1, l2))];
        else
            return VerifyResult::fail(ViolationCode::layer_step_jump, static_cast<int>(p));
    }
    for (int j = 1; j < m; ++j)
        if (crossing[static_cast<std::size_t>(j)] != gm.multiplicity(j))
            return VerifyResult::fail(ViolationCode::crossing_count_mismatch, j);
    for (int i = 1; i <= m; ++i)
        if (within[static_cast<std::size_t>(i)] != gm.loop_count(i))
            return VerifyResult::fail(ViolationCode::layer_edge_count_mismatch, i);
    return VerifyResult::pass();
}

/// Expected degree pattern of a built multiple: 2n everywhere for closed
/// trails, or 2n with exceptions 2n-1 at a and b (2n-2 when a = b).
struct DegreeProfile {
    bool closed = true;
    int a = 0;
    int b = 0;

    static DegreeProfile cycle() { return DegreeProfile{true, 0, 0}; }
    static DegreeProfile open(int a, int b) { return DegreeProfile{false, a, b}; }
};

inline VerifyResult verify_multiple(const PathMultigraph& gm, int n, const DegreeProfile& profile) {
    const int m = gm.path_order();
    for (int j = 1; j < m; ++j)
        if (gm.multiplicity(j) < 1)
            return VerifyResult::fail(ViolationCode::multiple_disconnected, j);
    for (int i = 1; i <= m; ++i) {
        int expected = 2 * n;
        if (!profile.closed) {
            if (profile.a == profile.b) {
                if (i == profile.a) expected = 2 * n - 2;
            } else {
                if (i == profile.a || i == profile.b) expected = 2 * n - 1;
            }
        }
        if (gm.degree(i) != expected)
            return VerifyResult::fail(ViolationCode::degree_mismatch, i);
    }
    return VerifyResult::pass();
}

}  // namespace hamlex

#endif  // HAMLEX_VERIFY_HPP
