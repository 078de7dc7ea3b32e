#ifndef HAMLEX_MULTIPLE_BUILDER_HPP
#define HAMLEX_MULTIPLE_BUILDER_HPP

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hamlex/graph.hpp"

namespace hamlex {

/// Loop assignment for a multiple of an odd path: loops sit only on
/// odd-position vertices, bounded by the per-layer forest budgets, with
/// required minimums at the two ends and a fixed total.
struct LoopPlan {
    std::vector<int> loops;
    std::pair<int, int> minima{0, 0};
    int target_sum = 0;
};

/// The two step functions marking the walk-endpoint layers a and b:
/// step_a(t) = 1 iff t >= a, likewise for b. They inject the degree
/// deficits at u_a and u_b into the multiplicity formulas.
struct EndpointSteps {
    int a = 1;
    int b = 1;
    int step_a(int t) const { return t >= a ? 1 : 0; }
    int step_b(int t) const { return t >= b ? 1 : 0; }
};

/// Parity class of the endpoint layers (a, b) on an odd path.
enum class EndpointParityCase { BothEven, OddEven, BothOdd };

/// Deterministic loop assignment. Starts from loops[odd i] = pis[i], then
/// sheds the excess by decrementing u_3, u_5, ..., u_m in order (down to
/// each vertex's floor) and finally u_1, until the sum hits target_sum.
inline LoopPlan plan_loops(const std::vector<int>& pis, int target_sum, std::pair<int, int> minima) {
    const int m = static_cast<int>(pis.size());
    if (m < 3 || m % 2 == 0)
        throw std::invalid_argument("plan_loops: need an odd path with at least 3 vertices");
    if (target_sum < 0 || minima.first < 0 || minima.second < 0)
        throw std::invalid_argument("plan_loops: negative budget");
    for (int v : pis)
        if (v < 0) throw std::invalid_argument("plan_loops: negative pi value");
    if (minima.first > pis.front() || minima.second > pis.back())
        throw InfeasibleConstraints("plan_loops: end-layer minimum exceeds its pi budget");
    if (target_sum < minima.first + minima.second)
        throw InfeasibleConstraints("plan_loops: target below the end-layer minimums");

    std::vector<int> loops(static_cast<std::size_t>(m), 0);
    long long sum = 0;
    for (int i = 0; i < m; i += 2) {
        loops[static_cast<std::size_t>(i)] = pis[static_cast<std::size_t>(i)];
        sum += pis[static_cast<std::size_t>(i)];
    }
    if (sum < target_sum)
        throw InfeasibleConstraints("plan_loops: odd-layer pi sum " + std::to_string(sum) +
                                    " is below the target " + std::to_string(target_sum));
    std::vector<std::size_t> order;
    for (int i = 2; i < m; i += 2) order.push_back(static_cast<std::size_t>(i));
    order.push_back(0);
    for (std::size_t idx : order) {
        int floor = 0;
        if (idx == 0) floor = minima.first;
        if (idx + 1 == static_cast<std::size_t>(m)) floor = minima.second;
        while (sum > target_sum && loops[idx] > floor) {
            --loops[idx];
            --sum;
        }
    }
    if (sum != target_sum)
        throw InfeasibleConstraints("plan_loops: cannot shed enough loops");
    return LoopPlan{std::move(loops), minima, target_sum};
}

namespace detail {

inline long long odd_position_sum(const std::vector<int>& loops) {
    long long sum = 0;
    for (std::size_t i = 0; i < loops.size(); i += 2) sum += loops[i];
    return sum;
}

inline void check_plan(const LoopPlan& plan, int m, int target, std::pair<int, int> minima) {
    if (static_cast<int>(plan.loops.size()) != m)
        throw std::invalid_argument("multiple builder: loop plan length mismatch");
    for (std::size_t i = 1; i < plan.loops.size(); i += 2)
        if (plan.loops[i] != 0)
            throw std::invalid_argument("multiple builder: loops on an even-position vertex");
    if (plan.target_sum != target || odd_position_sum(plan.loops) != target)
        throw std::invalid_argument("multiple builder: loop plan target mismatch");
    if (plan.minima != minima || plan.loops.front() < minima.first || plan.loops.back() < minima.second)
        throw std::invalid_argument("multiple builder: loop plan minima mismatch");
}

inline PathMultigraph balanced_odd_multiple(int n, int k, const std::vector<int>& loops,
                                            int sign_a_even, int sign_b_even, EndpointSteps steps) {
    // Even-indexed edges absorb the loop prefix sums, odd-indexed edges
    // complete each vertex back to degree 2n; the step terms carve the
    // deficits out at u_a and u_b.
    const int m = 2 * k + 1;
    std::vector<int> mult(static_cast<std::size_t>(m - 1), 0);
    int prefix = 0;
    for (int i = 1; i <= k; ++i) {
        prefix += 2 * loops[static_cast<std::size_t>(2 * i - 2)];
        const int odd_edge = 2 * i - 1;
        const int even_edge = 2 * i;
        mult[static_cast<std::size_t>(odd_edge - 1)] =
            2 * n - prefix - sign_a_even * steps.step_a(odd_edge) - sign_b_even * steps.step_b(odd_edge);
        mult[static_cast<std::size_t>(even_edge - 1)] =
            prefix + sign_a_even * steps.step_a(even_edge) + sign_b_even * steps.step_b(even_edge);
    }
    for (int v : mult)
        if (v < 0) throw std::logic_error("multiple builder: negative multiplicity");
    return PathMultigraph(std::move(mult), loops);
}

}  // namespace detail

/// 2n-regular connected multiple of an odd path; the closed-trail source
/// for Hamiltonian cycles. Needs loop total n with at least one loop at
/// each end.
inline PathMultigraph build_cycle_multiple_odd(int n, int k, const LoopPlan& plan) {
    if (n < 2 || k < 1) throw std::invalid_argument("build_cycle_multiple_odd: need n >= 2, k >= 1");
    detail::check_plan(plan, 2 * k + 1, n, {1, 1});
    return detail::balanced_odd_multiple(n, k, plan.loops, 0, 0, EndpointSteps{1, 1});
}

/// Multiple of an odd path whose degrees drop to 2n-1 at the endpoint
/// layers a and b (2n-2 when a = b), feeding an open trail. The parity
/// case fixes the loop total and the end minimums: both endpoints on even
/// layers need total n+1 with two loops at each end; mixed parity needs
/// total n; both odd needs total n-1, and when (a, b) is exactly the pair
/// of path ends the end minimums vanish entirely.
inline PathMultigraph build_open_multiple_odd(EndpointParityCase parity, int n, int k, int a, int b,
                                              const LoopPlan& plan) {
    if (n < 1 || k < 1) throw std::invalid_argument("build_open_multiple_odd: need n >= 1, k >= 1");
    const int m = 2 * k + 1;
    if (a < 1 || a > m || b < 1 || b > m)
        throw std::invalid_argument("build_open_multiple_odd: endpoint layer out of range");
    const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;
    int sign_a = 0, sign_b = 0;
    switch (parity) {
        case EndpointParityCase::BothEven:
            if (a_odd || b_odd) throw std::invalid_argument("build_open_multiple_odd: case needs even a and b");
            detail::check_plan(plan, m, n + 1, {2, 2});
            sign_a = -1;
            sign_b = -1;
            break;
        case EndpointParityCase::OddEven:
            if (!a_odd || b_odd)
                throw std::invalid_argument("build_open_multiple_odd: case needs odd a and even b");
            detail::check_plan(plan, m, n, {1, 1});
            sign_a = 1;
            sign_b = -1;
            break;
        case EndpointParityCase::BothOdd:
            if (!a_odd || !b_odd) throw std::invalid_argument("build_open_multiple_odd: case needs odd a and b");
            if (a == 1 && b == m)
                detail::check_plan(plan, m, n - 1, {0, 0});
            else
                detail::check_plan(plan, m, n - 1, {1, 1});
            sign_a = 1;
            sign_b = 1;
            break;
    }
    return detail::balanced_odd_multiple(n, k, plan.loops, sign_a, sign_b, EndpointSteps{a, b});
}

/// 2n-regular multiple of an even path: one loop at each end, path edges
/// alternating 2n-2 and 2.
inline PathMultigraph build_even_cycle_multiple(int n, int k) {
    if (n < 2 || k < 1) throw std::invalid_argument("build_even_cycle_multiple: need n >= 2, k >= 1");
    const int m = 2 * k;
    std::vector<int> loops(static_cast<std::size_t>(m), 0);
    loops.front() = 1;
    loops.back() = 1;
    std::vector<int> mult(static_cast<std::size_t>(m - 1), 0);
    for (int j = 1; j < m; ++j)
        mult[static_cast<std::size_t>(j - 1)] = (j % 2 == 1) ? 2 * n - 2 : 2;
    return PathMultigraph(std::move(mult), std::move(loops));
}

namespace detail {

/// Even-path multiple for endpoint layers a <= b with a odd (or b - a
/// odd). Starts from the doubled path plus a (2n-4)-fold 1-factor and the
/// end loops, then adjusts along the a..b and b..2k subpaths by
/// alternately removing and adding 1-factor edges.
inline PathMultigraph open_multiple_even_normalized(int n, int k, int a, int b) {
    const int m = 2 * k;
    std::vector<int> mult(static_cast<std::size_t>(m - 1), 0);
    for (int j = 1; j < m; ++j) mult[static_cast<std::size_t>(j - 1)] = 2 + (j % 2 == 1 ? 2 * n - 4 : 0);
    std::vector<int> loops(static_cast<std::size_t>(m), 0);
    loops.front() = 1;
    loops.back() = 1;
    if ((b - a) % 2 == 1) {
        for (int j = a; j <= b - 1; ++j) {
            if ((j - a) % 2 == 0)
                mult[static_cast<std::size_t>(j - 1)] -= 1;
            else
                mult[static_cast<std::size_t>(j - 1)] += 1;
        }
    } else {
        loops.back() = 2;
        for (int j = a; j <= b - 2; j += 2) mult[static_cast<std::size_t>(j - 1)] -= 1;
        for (int j = a + 1; j <= b - 1; j += 2) mult[static_cast<std::size_t>(j - 1)] += 1;
        for (int j = b; j <= m - 1; j += 2) mult[static_cast<std::size_t>(j - 1)] -= 2;
        for (int j = b + 1; j <= m - 2; j += 2) mult[static_cast<std::size_t>(j - 1)] += 2;
    }
    for (int v : mult)
        if (v < 1) throw std::logic_error("open_multiple_even: nonpositive multiplicity");
    return PathMultigraph(std::move(mult), std::move(loops));
}

}  // namespace detail

/// Multiple of an even path P_2k, k > 1, with degrees 2n everywhere except
/// 2n-1 at the endpoint layers a and b (2n-2 when a = b). Same-parity
/// endpoint pairs need n >= 3; when a is even the path is reflected first
/// and the result mapped back.
inline PathMultigraph build_open_multiple_even(int n, int k, int a, int b) {
    if (k < 2) throw std::invalid_argument("build_open_multiple_even: need k > 1");
    const int m = 2 * k;
    if (a < 1 || b < 1 || a > m || b > m || a > b)
        throw std::invalid_argument("build_open_multiple_even: need 1 <= a <= b <= 2k");
    if ((b - a) % 2 == 1) {
        if (n < 2) throw std::invalid_argument("build_open_multiple_even: need n >= 2");
        return detail::open_multiple_even_normalized(n, k, a, b);
    }
    if (n < 3)
        throw std::invalid_argument("build_open_multiple_even: same-parity endpoints need n >= 3");
    if (a % 2 == 1) return detail::open_multiple_even_normalized(n, k, a, b);
    PathMultigraph reflected = detail::open_multiple_even_normalized(n, k, m + 1 - b, m + 1 - a);
    std::vector<int> mult(reflected.multiplicities().rbegin(), reflected.multiplicities().rend());
    std::vector<int> loops(reflected.loops().rbegin(), reflected.loops().rend());
    return PathMultigraph(std::move(mult), std::move(loops));
}

}  // namespace hamlex

#endif  // HAMLEX_MULTIPLE_BUILDER_HPP
