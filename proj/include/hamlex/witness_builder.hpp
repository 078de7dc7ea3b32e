#ifndef HAMLEX_WITNESS_BUILDER_HPP
#define HAMLEX_WITNESS_BUILDER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlex/decide.hpp"
#include "hamlex/graph.hpp"
#include "hamlex/linear_forest.hpp"
#include "hamlex/multiple_builder.hpp"
#include "hamlex/product.hpp"

namespace hamlex {

/// Walk over the path vertices of a multiple covering every non-loop edge
/// exactly as often as its multiplicity. Closed trails omit the repeated
/// final vertex; open trails list both endpoints (which coincide for the
/// cut-open closed trails used when both walk endpoints share a layer).
struct EulerTrail {
    std::vector<int> layers;
    bool closed = false;
};

/// Deterministic Hierholzer walk: at every vertex the lower-indexed path
/// edge is expanded first. Loops are ignored. Pass no endpoints for a
/// closed trail; pass start == end to cut a closed trail open at that
/// vertex.
inline EulerTrail euler_trail(const PathMultigraph& gm, std::optional<int> start = std::nullopt,
                              std::optional<int> end = std::nullopt) {
    const int m = gm.path_order();
    if (m < 2) throw std::invalid_argument("euler_trail: need at least two path vertices");
    if (start.has_value() != end.has_value())
        throw std::invalid_argument("euler_trail: give both endpoints or neither");
    if (!gm.is_connected()) throw std::invalid_argument("euler_trail: multiple is disconnected");
    std::vector<int> odd;
    for (int i = 1; i <= m; ++i)
        if (gm.loopless_degree(i) % 2 == 1) odd.push_back(i);
    const bool closed = !start.has_value();
    if (closed || *start == *end) {
        if (!odd.empty()) throw std::invalid_argument("euler_trail: closed trail needs even degrees");
    } else {
        if (odd.size() != 2 || std::min(*start, *end) != odd[0] || std::max(*start, *end) != odd[1])
            throw std::invalid_argument("euler_trail: open trail endpoints must be the odd-degree vertices");
    }
    const int origin = closed ? 1 : *start;

    std::vector<int> remaining(gm.multiplicities());
    std::vector<int> stack{origin}, trail;
    while (!stack.empty()) {
        const int v = stack.back();
        if (v > 1 && remaining[static_cast<std::size_t>(v - 2)] > 0) {
            --remaining[static_cast<std::size_t>(v - 2)];
            stack.push_back(v - 1);
        } else if (v < m && remaining[static_cast<std::size_t>(v - 1)] > 0) {
            --remaining[static_cast<std::size_t>(v - 1)];
            stack.push_back(v + 1);
        } else {
            trail.push_back(v);
            stack.pop_back();
        }
    }
    std::reverse(trail.begin(), trail.end());
    for (int r : remaining)
        if (r != 0) throw std::logic_error("euler_trail: edges left untraversed");
    if (!closed && trail.back() != *end) throw std::logic_error("euler_trail: wrong final vertex");
    if (closed) trail.pop_back();
    return EulerTrail{std::move(trail), closed};
}

/// Number of times each path vertex u_1..u_m occurs in the trail.
inline std::vector<int> occurrence_counts(const EulerTrail& trail, int m) {
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int layer : trail.layers) {
        if (layer < 1 || layer > m)
            throw std::invalid_argument("occurrence_counts: layer out of range");
        ++counts[static_cast<std::size_t>(layer - 1)];
    }
    return counts;
}

namespace detail {

struct OrientedComponent {
    const std::vector<Vertex>* vertices;
    bool reversed;
};

}  // namespace detail

/// Substitutes the t-th occurrence of layer i in the trail by the t-th
/// component of that layer's forest. The component holding x is pinned to
/// the first occurrence of its layer and oriented to start at x; y's is
/// pinned to the last occurrence and oriented to end at y. Unpinned
/// components keep their canonical order and orientation.
inline ProductWalk assemble(const EulerTrail& trail, const std::vector<LinearForest>& forests,
                            std::optional<ProductVertex> x = std::nullopt,
                            std::optional<ProductVertex> y = std::nullopt) {
    const int m = static_cast<int>(forests.size());
    const std::vector<int> occ = occurrence_counts(trail, m);
    for (int i = 1; i <= m; ++i)
        if (forests[static_cast<std::size_t>(i - 1)].component_count() != occ[static_cast<std::size_t>(i - 1)])
            throw std::invalid_argument("assemble: component count of layer " + std::to_string(i) +
                                        " does not match its trail occurrences");

    // Per layer: component index per occurrence slot, then pinning.
    std::vector<std::vector<int>> slots(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        slots[static_cast<std::size_t>(i)].resize(
            static_cast<std::size_t>(forests[static_cast<std::size_t>(i)].component_count()));
        for (std::size_t t = 0; t < slots[static_cast<std::size_t>(i)].size(); ++t)
            slots[static_cast<std::size_t>(i)][t] = static_cast<int>(t);
    }
    auto pin = [&](const ProductVertex& v, bool front) {
        auto& order = slots[static_cast<std::size_t>(v.layer - 1)];
        const int comp = forests[static_cast<std::size_t>(v.layer - 1)].component_of(v.inner);
        order.erase(std::find(order.begin(), order.end(), comp));
        if (front)
            order.insert(order.begin(), comp);
        else
            order.push_back(comp);
    };
    if (x && y && x->layer == y->layer) {
        const auto& forest = forests[static_cast<std::size_t>(x->layer - 1)];
        if (forest.component_of(x->inner) == forest.component_of(y->inner))
            throw std::invalid_argument("assemble: x and y must lie in distinct components");
    }
    if (y) pin(*y, false);
    if (x) pin(*x, true);

    auto oriented = [&](int layer, int comp, bool start_at_x, bool end_at_y) {
        const auto& seq =
            forests[static_cast<std::size_t>(layer - 1)].components()[static_cast<std::size_t>(comp)];
        bool reversed = false;
        if (start_at_x) {
            if (seq.back() == x->inner && seq.size() > 1)
                reversed = true;
            else if (seq.front() != x->inner)
                throw std::invalid_argument("assemble: x is not an endpoint of its component");
        } else if (end_at_y) {
            if (seq.front() == y->inner && seq.size() > 1)
                reversed = true;
            else if (seq.back() != y->inner)
                throw std::invalid_argument("assemble: y is not an endpoint of its component");
        }
        return detail::OrientedComponent{&seq, reversed};
    };

    std::vector<int> used(static_cast<std::size_t>(m), 0);
    ProductWalk walk;
    walk.closed = trail.closed;
    for (std::size_t p = 0; p < trail.layers.size(); ++p) {
        const int layer = trail.layers[p];
        const int t = used[static_cast<std::size_t>(layer - 1)]++;
        const int comp = slots[static_cast<std::size_t>(layer - 1)][static_cast<std::size_t>(t)];
        const bool first_of_layer = t == 0;
        const bool last_of_layer = t + 1 == occ[static_cast<std::size_t>(layer - 1)];
        const bool start_here = x && x->layer == layer && first_of_layer && p == 0;
        const bool end_here = y && y->layer == layer && last_of_layer && p + 1 == trail.layers.size();
        const detail::OrientedComponent oc = oriented(layer, comp, start_here, end_here);
        if (oc.reversed)
            for (auto it = oc.vertices->rbegin(); it != oc.vertices->rend(); ++it)
                walk.vertices.push_back(ProductVertex{layer, *it});
        else
            for (Vertex v : *oc.vertices) walk.vertices.push_back(ProductVertex{layer, v});
    }
    if (x && (walk.vertices.empty() || walk.vertices.front() != *x))
        throw std::invalid_argument("assemble: trail does not start at x's layer");
    if (y && (walk.vertices.empty() || walk.vertices.back() != *y))
        throw std::invalid_argument("assemble: trail does not end at y's layer");
    return walk;
}

enum class WalkGoal { Cycle, Path, XYPath };

/// Outcome of a construction attempt. When feasible, the walk comes with
/// the multiple and per-layer forests that produced it, so the edge
/// profile can be checked independently; otherwise the decision ledger
/// explains which condition failed.
struct ConstructResult {
    bool feasible = false;
    std::optional<ProductWalk> walk;
    std::optional<PathMultigraph> multiple;
    std::vector<LinearForest> forests;
    Decision decision;
};

namespace detail {

inline ConstructResult infeasible_result(Decision d) {
    ConstructResult r;
    r.feasible = false;
    r.decision = std::move(d);
    return r;
}

inline LinearForest singleton_forest(int n) {
    std::vector<std::vector<Vertex>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) comps.push_back({v});
    return LinearForest(n, std::move(comps));
}

/// Walk sanity check against the product adjacency; failures here mean an
/// internal assembly bug, not bad input.
inline void require_valid_walk(const ProductSpec& spec, const ProductWalk& walk) {
    const int total = spec.total_order();
    if (static_cast<int>(walk.vertices.size()) != total)
        throw std::logic_error("construct: walk does not cover the product");
    std::vector<char> seen(static_cast<std::size_t>(total), 0);
    for (const ProductVertex& v : walk.vertices) {
        const int flat = flatten(v.layer, v.inner, spec.layer_order());
        if (seen[static_cast<std::size_t>(flat)]) throw std::logic_error("construct: repeated vertex");
        seen[static_cast<std::size_t>(flat)] = 1;
    }
    const std::size_t steps = walk.closed ? walk.vertices.size() : walk.vertices.size() - 1;
    for (std::size_t p = 0; p < steps; ++p)
        if (!product_adjacent(spec, walk.vertices[p], walk.vertices[(p + 1) % walk.vertices.size()]))
            throw std::logic_error("construct: non-adjacent step in assembled walk");
}

inline ConstructResult finish_result(const ProductSpec& spec, ProductWalk walk, PathMultigraph gm,
                                     std::vector<LinearForest> forests, Decision d) {
    require_valid_walk(spec, walk);
    ConstructResult r;
    r.feasible = true;
    r.walk = std::move(walk);
    r.multiple = std::move(gm);
    r.forests = std::move(forests);
    r.decision = std::move(d);
    return r;
}

/// Forests with exactly the loop count of each layer as edges, honoring
/// endpoint pinning constraints.
inline std::vector<LinearForest> forests_for(const ProductSpec& spec, const PathMultigraph& gm,
                                             std::optional<ProductVertex> x,
                                             std::optional<ProductVertex> y) {
    std::vector<LinearForest> forests;
    forests.reserve(static_cast<std::size_t>(spec.length()));
    for (int i = 1; i <= spec.length(); ++i) {
        ForestConstraints c;
        c.exact_edges = gm.loop_count(i);
        if (x && x->layer == i) c.terminal_vertices.push_back(x->inner);
        if (y && y->layer == i) c.terminal_vertices.push_back(y->inner);
        if (x && y && x->layer == i && y->layer == i)
            c.separated_pair = std::make_pair(x->inner, y->inner);
        forests.push_back(constrained_forest(spec.layer(i), c));
    }
    return forests;
}

inline ConstructResult construct_cycle(const ProductSpec& spec, const std::vector<int>& pis) {
    const int m = spec.length();
    const int n = spec.layer_order();
    Decision d = decide_hamiltonian(m, pis, n);
    if (!d.verdict) return infeasible_result(std::move(d));
    PathMultigraph gm = [&] {
        if (m % 2 == 1) {
            const LoopPlan plan = plan_loops(pis, n, {1, 1});
            return build_cycle_multiple_odd(n, (m - 1) / 2, plan);
        }
        if (pis.front() >= 1 && pis.back() >= 1) return build_even_cycle_multiple(n, m / 2);
        // m == 2 with an edgeless end layer: ride the spanning K_{n,n}.
        return PathMultigraph({2 * n}, {0, 0});
    }();
    std::vector<LinearForest> forests = forests_for(spec, gm, std::nullopt, std::nullopt);
    const EulerTrail trail = euler_trail(gm);
    ProductWalk walk = assemble(trail, forests);
    return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
}

inline ConstructResult construct_path(const ProductSpec& spec, const std::vector<int>& pis) {
    const int m = spec.length();
    const int n = spec.layer_order();
    Decision d = decide_traceable(m, pis, n);
    if (!d.verdict) return infeasible_result(std::move(d));
    if (m % 2 == 0) {
        // Pairwise zigzag: layers (2p-1, 2p) interleaved in index order,
        // pairs chained by one crossing edge.
        ProductWalk walk;
        for (int p = 1; p <= m / 2; ++p)
            for (int h = 0; h < n; ++h) {
                walk.vertices.push_back(ProductVertex{2 * p - 1, h});
                walk.vertices.push_back(ProductVertex{2 * p, h});
            }
        std::vector<int> mult(static_cast<std::size_t>(m - 1), 0);
        for (int j = 1; j < m; ++j) mult[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? 2 * n - 1 : 1;
        PathMultigraph gm(std::move(mult), std::vector<int>(static_cast<std::size_t>(m), 0));
        std::vector<LinearForest> forests(static_cast<std::size_t>(m), singleton_forest(n));
        return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
    }
    const LoopPlan plan = plan_loops(pis, n - 1, {0, 0});
    PathMultigraph gm = build_open_multiple_odd(EndpointParityCase::BothOdd, n, (m - 1) / 2, 1, m, plan);
    std::vector<LinearForest> forests = forests_for(spec, gm, std::nullopt, std::nullopt);
    const EulerTrail trail = euler_trail(gm, 1, m);
    ProductWalk walk = assemble(trail, forests);
    return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
}

inline ProductWalk reversed_walk(ProductWalk walk) {
    std::reverse(walk.vertices.begin(), walk.vertices.end());
    return walk;
}

inline ConstructResult construct_xy_two_layers(const ProductSpec& spec, const std::vector<int>& pis,
                                               ProductVertex x, ProductVertex y) {
    const int n = spec.layer_order();
    if (x.layer != y.layer) {
        if (x.layer == 2) {
            ConstructResult r = construct_xy_two_layers(spec, pis, y, x);
            if (r.feasible) {
                r.walk = reversed_walk(std::move(*r.walk));
                require_valid_walk(spec, *r.walk);
            }
            return r;
        }
        std::vector<Vertex> first{x.inner}, second;
        for (Vertex v = 0; v < n; ++v)
            if (v != x.inner) first.push_back(v);
        for (Vertex v = 0; v < n; ++v)
            if (v != y.inner) second.push_back(v);
        second.push_back(y.inner);
        ProductWalk walk;
        for (int t = 0; t < n; ++t) {
            walk.vertices.push_back(ProductVertex{1, first[static_cast<std::size_t>(t)]});
            walk.vertices.push_back(ProductVertex{2, second[static_cast<std::size_t>(t)]});
        }
        Decision d = finish({}, "two-layer product: endpoints in different layers (alternating path)");
        std::vector<LinearForest> forests(2, singleton_forest(n));
        return finish_result(spec, std::move(walk), PathMultigraph({2 * n - 1}, {0, 0}),
                             std::move(forests), std::move(d));
    }
    const int shared = x.layer;
    const int other = 3 - shared;
    Decision d = finish({at_least("pi(H_" + std::to_string(other) + ")", 1,
                                  pis[static_cast<std::size_t>(other - 1)])},
                        "two-layer product: endpoints share a layer, one edge of the opposite layer");
    if (!d.verdict) return infeasible_result(std::move(d));
    const Edge link = spec.layer(other).edges().front();
    std::vector<Vertex> shared_order{x.inner};
    for (Vertex v = 0; v < n; ++v)
        if (v != x.inner && v != y.inner) shared_order.push_back(v);
    shared_order.push_back(y.inner);
    std::vector<Vertex> other_order;
    for (Vertex v = 0; v < n; ++v)
        if (v != link.u && v != link.v) other_order.push_back(v);
    other_order.push_back(link.u);
    other_order.push_back(link.v);
    ProductWalk walk;
    for (int t = 0; t + 1 < n; ++t) {
        walk.vertices.push_back(ProductVertex{shared, shared_order[static_cast<std::size_t>(t)]});
        walk.vertices.push_back(ProductVertex{other, other_order[static_cast<std::size_t>(t)]});
    }
    walk.vertices.push_back(ProductVertex{other, other_order.back()});
    walk.vertices.push_back(ProductVertex{shared, shared_order.back()});
    std::vector<int> loops{0, 0};
    loops[static_cast<std::size_t>(other - 1)] = 1;
    std::vector<std::vector<Vertex>> other_comps{{link.u, link.v}};
    for (Vertex v = 0; v < n; ++v)
        if (v != link.u && v != link.v) other_comps.push_back({v});
    std::vector<LinearForest> forests;
    for (int i = 1; i <= 2; ++i)
        forests.push_back(i == other ? LinearForest(n, other_comps) : singleton_forest(n));
    return finish_result(spec, std::move(walk), PathMultigraph({2 * n - 2}, std::move(loops)),
                         std::move(forests), std::move(d));
}

inline ConstructResult construct_xy_odd(const ProductSpec& spec, const std::vector<int>& pis,
                                        ProductVertex x, ProductVertex y) {
    const int m = spec.length();
    const int n = spec.layer_order();
    const int k = (m - 1) / 2;
    const bool x_odd = x.layer % 2 == 1, y_odd = y.layer % 2 == 1;
    const bool swap = (!x_odd && y_odd) || (x_odd == y_odd && x.layer > y.layer);
    if (swap) {
        ConstructResult r = construct_xy_odd(spec, pis, y, x);
        if (r.feasible) {
            r.walk = reversed_walk(std::move(*r.walk));
            require_valid_walk(spec, *r.walk);
        }
        return r;
    }
    const int a = x.layer, b = y.layer;
    const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;

    // Endpoint layers on odd positions carry loops, so their usable
    // budget is the constrained forest maximum with the endpoint forced to
    // degree <= 1 (and x, y separated when they share the layer).
    std::vector<int> budget = pis;
    if (a_odd) {
        if (a == b)
            budget[static_cast<std::size_t>(a - 1)] =
                constrained_pi(spec.layer(a), {x.inner, y.inner}, std::make_pair(x.inner, y.inner));
        else
            budget[static_cast<std::size_t>(a - 1)] = constrained_pi(spec.layer(a), {x.inner});
    }
    if (b_odd && b != a)
        budget[static_cast<std::size_t>(b - 1)] = constrained_pi(spec.layer(b), {y.inner});

    EndpointParityCase parity_case;
    int target = 0;
    std::pair<int, int> minima{0, 0};
    std::vector<Condition> rows;
    std::string citation;
    const long long sum = odd_layer_sum(budget);
    auto budget_row = [&](int layer, int required) {
        const bool adjusted = budget[static_cast<std::size_t>(layer - 1)] != pis[static_cast<std::size_t>(layer - 1)];
        return at_least("usable pi(H_" + std::to_string(layer) + ")" + (adjusted ? " (endpoint-constrained)" : ""),
                        required, budget[static_cast<std::size_t>(layer - 1)]);
    };
    if (!a_odd && !b_odd) {
        parity_case = EndpointParityCase::BothEven;
        target = n + 1;
        minima = {2, 2};
        rows = {budget_row(1, 2), budget_row(m, 2),
                at_least("usable odd-layer pi sum", n + 1, sum)};
        citation = "odd-path endpoint pair on even layers";
    } else if (a_odd && !b_odd) {
        parity_case = EndpointParityCase::OddEven;
        target = n;
        minima = {1, 1};
        rows = {budget_row(1, 1), budget_row(m, 1), at_least("usable odd-layer pi sum", n, sum)};
        citation = "odd-path endpoint pair on mixed-parity layers";
    } else if (a == 1 && b == m) {
        parity_case = EndpointParityCase::BothOdd;
        target = n - 1;
        minima = {0, 0};
        rows = {at_least("usable odd-layer pi sum", n - 1, sum)};
        citation = "odd-path endpoint pair at the two path ends";
    } else {
        parity_case = EndpointParityCase::BothOdd;
        target = n - 1;
        minima = {1, 1};
        rows = {at_least("layer order n", 3, n), budget_row(1, 1), budget_row(m, 1),
                at_least("usable odd-layer pi sum", n - 1, sum)};
        citation = "odd-path endpoint pair on odd layers";
    }
    Decision d = finish(std::move(rows), std::move(citation));
    if (!d.verdict) return infeasible_result(std::move(d));

    const LoopPlan plan = plan_loops(budget, target, minima);
    PathMultigraph gm = build_open_multiple_odd(parity_case, n, k, a, b, plan);
    std::vector<LinearForest> forests = forests_for(spec, gm, x, y);
    const EulerTrail trail = euler_trail(gm, a, b);
    ProductWalk walk = assemble(trail, forests, x, y);
    return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
}

inline ConstructResult construct_xy_even(const ProductSpec& spec, const std::vector<int>& pis,
                                         ProductVertex x, ProductVertex y) {
    const int m = spec.length();
    const int n = spec.layer_order();
    const int k = m / 2;
    if (x.layer > y.layer) {
        ConstructResult r = construct_xy_even(spec, pis, y, x);
        if (r.feasible) {
            r.walk = reversed_walk(std::move(*r.walk));
            require_valid_walk(spec, *r.walk);
        }
        return r;
    }
    const int a = x.layer, b = y.layer;
    if (a == 1 && b == m) {
        // The two path ends are joined unconditionally: the alternating
        // profile crosses every join an odd number of times and needs no
        // layer edges at all.
        std::vector<int> mult(static_cast<std::size_t>(m - 1), 0);
        for (int j = 1; j < m; ++j) mult[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? 2 * n - 1 : 1;
        PathMultigraph gm(std::move(mult), std::vector<int>(static_cast<std::size_t>(m), 0));
        Decision d = finish({}, "even-path endpoint pair at the two path ends (alternating profile)");
        std::vector<LinearForest> forests = forests_for(spec, gm, x, y);
        const EulerTrail trail = euler_trail(gm, a, b);
        ProductWalk walk = assemble(trail, forests, x, y);
        return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
    }
    if ((b - a) % 2 == 0 && n < 3) {
        Decision d = finish({at_least("layer order n", 3, n)},
                            "even-path endpoint pair on same-parity layers needs n >= 3");
        return infeasible_result(std::move(d));
    }
    PathMultigraph gm = build_open_multiple_even(n, k, a, b);

    std::vector<Condition> rows;
    for (int i : {1, m}) {
        const int need = gm.loop_count(i);
        if (need == 0) continue;
        const bool pinned = (x.layer == i) || (y.layer == i);
        long long have;
        std::string name = "pi(H_" + std::to_string(i) + ")";
        if (pinned) {
            std::vector<Vertex> terminals;
            std::optional<std::pair<Vertex, Vertex>> sep;
            if (x.layer == i) terminals.push_back(x.inner);
            if (y.layer == i) terminals.push_back(y.inner);
            if (x.layer == i && y.layer == i) sep = std::make_pair(x.inner, y.inner);
            have = constrained_pi(spec.layer(i), terminals, sep);
            name = "usable " + name + " (endpoint-constrained)";
        } else {
            have = pis[static_cast<std::size_t>(i - 1)];
        }
        rows.push_back(at_least(name, need, have));
    }
    Decision d = finish(std::move(rows), (b - a) % 2 == 1
                                             ? "even-path endpoint pair, odd layer offset"
                                             : "even-path endpoint pair, even layer offset");
    if (!d.verdict) return infeasible_result(std::move(d));
    std::vector<LinearForest> forests = forests_for(spec, gm, x, y);
    const EulerTrail trail = euler_trail(gm, a, b);
    ProductWalk walk = assemble(trail, forests, x, y);
    return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
}

inline ConstructResult construct_xy_unit_layers(const ProductSpec& spec, ProductVertex x,
                                                ProductVertex y) {
    const int m = spec.length();
    const bool ends = (x.layer == 1 && y.layer == m) || (x.layer == m && y.layer == 1);
    Decision d = finish({Condition{"endpoint layers are the two path ends", 1, ends ? 1 : 0, ends}},
                        "single-vertex layers: the product is the path itself");
    if (!d.verdict) return infeasible_result(std::move(d));
    ProductWalk walk;
    if (x.layer == 1)
        for (int i = 1; i <= m; ++i) walk.vertices.push_back(ProductVertex{i, 0});
    else
        for (int i = m; i >= 1; --i) walk.vertices.push_back(ProductVertex{i, 0});
    PathMultigraph gm(std::vector<int>(static_cast<std::size_t>(m - 1), 1),
                      std::vector<int>(static_cast<std::size_t>(m), 0));
    std::vector<LinearForest> forests(static_cast<std::size_t>(m), singleton_forest(1));
    return finish_result(spec, std::move(walk), std::move(gm), std::move(forests), std::move(d));
}

}  // namespace detail

/// End-to-end witness construction: decide, plan loops, build the
/// multiple, pick the layer forests, extract the Euler trail and
/// substitute. Infeasibility is a value carrying the failed conditions,
/// not an error.
inline ConstructResult construct(const ProductSpec& spec, WalkGoal goal,
                                 std::optional<ProductVertex> x = std::nullopt,
                                 std::optional<ProductVertex> y = std::nullopt) {
    const int m = spec.length();
    const int n = spec.layer_order();
    if (m < 2) throw std::invalid_argument("construct: need a path with at least 2 vertices");
    if (goal == WalkGoal::XYPath) {
        if (!x || !y) throw std::invalid_argument("construct: xy-path needs both endpoints");
        for (const ProductVertex* v : {&*x, &*y})
            if (v->layer < 1 || v->layer > m || v->inner < 0 || v->inner >= n)
                throw std::invalid_argument("construct: endpoint out of range");
        if (*x == *y) throw std::invalid_argument("construct: endpoints must differ");
    } else if (x || y) {
        throw std::invalid_argument("construct: endpoints apply only to xy-path goals");
    }
    const std::vector<int> pis = layer_pis(spec);
    switch (goal) {
        case WalkGoal::Cycle: return detail::construct_cycle(spec, pis);
        case WalkGoal::Path: return detail::construct_path(spec, pis);
        case WalkGoal::XYPath: break;
    }
    if (m == 2) return detail::construct_xy_two_layers(spec, pis, *x, *y);
    if (m % 2 == 1) return detail::construct_xy_odd(spec, pis, *x, *y);
    if (n == 1) return detail::construct_xy_unit_layers(spec, *x, *y);
    return detail::construct_xy_even(spec, pis, *x, *y);
}

}  // namespace hamlex

#endif  // HAMLEX_WITNESS_BUILDER_HPP
