#ifndef HAMLEX_DECIDE_HPP
#define HAMLEX_DECIDE_HPP

#include <numeric>
#include <string>
#include <vector>

#include "hamlex/linear_forest.hpp"
#include "hamlex/product.hpp"

namespace hamlex {

enum class GraphProperty { Hamiltonian, Traceable, HamConnected };

inline std::string property_name(GraphProperty p) {
    switch (p) {
        case GraphProperty::Hamiltonian: return "hamiltonian";
        case GraphProperty::Traceable: return "traceable";
        case GraphProperty::HamConnected: return "ham-connected";
    }
    return "?";
}

/// One row of a decision ledger.
struct Condition {
    std::string name;
    long long required = 0;
    long long actual = 0;
    bool satisfied = false;
};

/// Verdict plus the conditions that produced it. The verdict is always the
/// conjunction of the ledger rows; purely informational remarks go into
/// `notes` so they cannot skew the conjunction.
struct Decision {
    bool verdict = false;
    std::vector<Condition> conditions;
    std::string citation;
    std::vector<std::string> notes;
};

namespace detail {

inline Condition at_least(std::string name, long long required, long long actual) {
    return Condition{std::move(name), required, actual, actual >= required};
}

inline Decision finish(std::vector<Condition> conditions, std::string citation,
                       std::vector<std::string> notes = {}) {
    Decision d;
    d.verdict = true;
    for (const Condition& c : conditions) d.verdict = d.verdict && c.satisfied;
    d.conditions = std::move(conditions);
    d.citation = std::move(citation);
    d.notes = std::move(notes);
    return d;
}

inline void check_decide_args(int m, const std::vector<int>& pis, int n) {
    if (m < 2) throw std::invalid_argument("decide: path length must be at least 2");
    if (static_cast<int>(pis.size()) != m)
        throw std::invalid_argument("decide: need one pi value per layer");
    if (n < 1) throw std::invalid_argument("decide: layer order must be at least 1");
}

inline long long odd_layer_sum(const std::vector<int>& pis) {
    long long sum = 0;
    for (std::size_t i = 0; i < pis.size(); i += 2) sum += pis[i];
    return sum;
}

}  // namespace detail

/// Hamiltonicity of P_m[H_1..H_m] from the per-layer pi values.
/// Odd m: edges at both end layers and odd-layer pi sum at least n.
/// Even m >= 4: edges at both end layers. m = 2 is special: the product
/// contains K_{n,n}, so any two layers of order >= 2 suffice.
inline Decision decide_hamiltonian(int m, const std::vector<int>& pis, int n) {
    detail::check_decide_args(m, pis, n);
    if (m == 2) {
        return detail::finish({detail::at_least("layer order n", 2, n)},
                              "two-layer product: contains K_{n,n}, hamiltonian iff n >= 2",
                              {"end-layer edge requirements do not apply at m = 2"});
    }
    std::vector<Condition> rows{detail::at_least("pi(H_1)", 1, pis.front()),
                                detail::at_least("pi(H_" + std::to_string(m) + ")", 1, pis.back())};
    if (m % 2 == 1) {
        rows.push_back(detail::at_least("sum of pi over odd layers", n, detail::odd_layer_sum(pis)));
        return detail::finish(std::move(rows), "odd-path hamiltonicity criterion");
    }
    return detail::finish(std::move(rows), "even-path hamiltonicity criterion");
}

/// Traceability: even paths always, odd paths need odd-layer sum >= n-1.
inline Decision decide_traceable(int m, const std::vector<int>& pis, int n) {
    detail::check_decide_args(m, pis, n);
    if (m % 2 == 0)
        return detail::finish({}, "even-path traceability (unconditional)");
    return detail::finish(
        {detail::at_least("sum of pi over odd layers", n - 1, detail::odd_layer_sum(pis))},
        "odd-path traceability criterion");
}

/// Hamiltonian connectivity. Odd paths: pi >= 2 at both ends and odd-layer
/// sum >= n+1. Even paths: m = 2 needs an edge in each layer (or n = 1,
/// where the only pair is joined by the single cross edge); m >= 4 needs
/// pi >= 2 at both end layers.
inline Decision decide_ham_connected(int m, const std::vector<int>& pis, int n) {
    detail::check_decide_args(m, pis, n);
    if (m == 2) {
        if (n == 1)
            return detail::finish({Condition{"single-pair product (n = 1)", 1, 1, true}},
                                  "two-layer connectivity: K_2 joins its only vertex pair");
        return detail::finish({detail::at_least("pi(H_1)", 1, pis.front()),
                               detail::at_least("pi(H_2)", 1, pis.back())},
                              "two-layer hamiltonian connectivity criterion");
    }
    if (m % 2 == 1) {
        return detail::finish({detail::at_least("pi(H_1)", 2, pis.front()),
                               detail::at_least("pi(H_" + std::to_string(m) + ")", 2, pis.back()),
                               detail::at_least("sum of pi over odd layers", n + 1,
                                                detail::odd_layer_sum(pis))},
                              "odd-path hamiltonian connectivity criterion");
    }
    const bool alternate = pis[1] >= 2;
    return detail::finish(
        {detail::at_least("pi(H_1)", 2, pis.front()),
         detail::at_least("pi(H_" + std::to_string(m) + ")", 2, pis.back())},
        "even-path hamiltonian connectivity criterion (requirement at the far end layer)",
        {"mirrored reading would require pi(H_2) >= 2 instead: pi(H_2) = " + std::to_string(pis[1]) +
         (alternate ? " (satisfied)" : " (violated)")});
}

inline Decision decide_property(GraphProperty p, int m, const std::vector<int>& pis, int n) {
    switch (p) {
        case GraphProperty::Hamiltonian: return decide_hamiltonian(m, pis, n);
        case GraphProperty::Traceable: return decide_traceable(m, pis, n);
        case GraphProperty::HamConnected: return decide_ham_connected(m, pis, n);
    }
    throw std::invalid_argument("decide_property: unknown property");
}

/// Per-layer pi values of a product spec; the expensive half of a decision.
inline std::vector<int> layer_pis(const ProductSpec& spec) {
    std::vector<int> pis;
    pis.reserve(static_cast<std::size_t>(spec.length()));
    for (const SimpleGraph& h : spec.layers()) pis.push_back(pi(h));
    return pis;
}

/// Convenience wrapper: computes pi per layer, then decides.
inline Decision decide(const ProductSpec& spec, GraphProperty p) {
    return decide_property(p, spec.length(), layer_pis(spec), spec.layer_order());
}

enum class LayerParity { Odd, Even };

/// Required odd-layer pi sum for a Hamiltonian path whose endpoints lie in
/// layers of the given parities (odd path length): n+1, n or n-1.
struct RequiredSum {
    int offset;  // required sum = n + offset
    long long value(int n) const { return static_cast<long long>(n) + offset; }
};

inline RequiredSum necessity_bound(LayerParity a, LayerParity b) {
    if (a == LayerParity::Even && b == LayerParity::Even) return RequiredSum{1};
    if (a == LayerParity::Odd && b == LayerParity::Odd) return RequiredSum{-1};
    return RequiredSum{0};
}

namespace detail {

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace detail

/// Uniform-layer decision in ceiling form for odd paths: with all layers
/// equal to H, the odd-layer sum becomes (k+1)*pi(H) and each criterion
/// turns into a ceiling comparison. Even m delegates to the general
/// procedure, as does pi = 0 (where the ceiling is undefined).
inline Decision decide_uniform(int m, int n, int pi_h, GraphProperty p) {
    const std::vector<int> pis(static_cast<std::size_t>(m), pi_h);
    if (m % 2 == 0 || pi_h == 0) return decide_property(p, m, pis, n);
    const int k = (m - 1) / 2;
    long long numerator = 0;
    int pi_floor = 1;
    switch (p) {
        case GraphProperty::Hamiltonian: numerator = n; break;
        case GraphProperty::Traceable: numerator = n - 1; break;
        case GraphProperty::HamConnected:
            numerator = n + 1;
            pi_floor = 2;
            break;
    }
    std::vector<Condition> rows{detail::at_least("pi(H)", pi_floor, pi_h)};
    rows.push_back(Condition{"ceil((" + std::to_string(numerator) + ") / pi) <= k+1",
                             k + 1, detail::ceil_div(numerator, pi_h),
                             detail::ceil_div(numerator, pi_h) <= k + 1});
    return detail::finish(std::move(rows),
                          "uniform-layer ceiling form of the odd-path " + property_name(p) +
                              " criterion");
}

}  // namespace hamlex

#endif  // HAMLEX_DECIDE_HPP
