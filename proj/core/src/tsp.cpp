#include "uavplan/tsp.hpp"

#include "uavplan/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace uavplan {

namespace {

constexpr double kImproveEps = 1e-9; // meters; guards against float cycling

void validate_permutation(const CostMatrix& m, std::span<const int> order) {
    const int n = m.size();
    if (static_cast<int>(order.size()) != n) {
        throw ValidationError("tour order has " + std::to_string(order.size()) +
                              " entries for " + std::to_string(n) + " nodes");
    }
    std::vector<std::uint8_t> seen(static_cast<std::size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("tour order is not a permutation of 0.." +
                                  std::to_string(n - 1));
        }
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

} // namespace

CostMatrix::CostMatrix(int n) : n_(n) {
    if (n < 1) throw ValidationError("cost matrix needs at least the depot node");
    costs_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void CostMatrix::set(int a, int b, double meters) {
    costs_[static_cast<std::size_t>(a) * n_ + b] = meters;
    costs_[static_cast<std::size_t>(b) * n_ + a] = meters;
}

void CostMatrix::validate() const {
    for (int a = 0; a < n_; ++a) {
        if (at(a, a) != 0.0) throw ValidationError("cost matrix diagonal must be zero");
        for (int b = 0; b < n_; ++b) {
            const double v = at(a, b);
            if (!std::isfinite(v) || v < 0.0) {
                throw ValidationError("cost matrix entry (" + std::to_string(a) + ", " +
                                      std::to_string(b) + ") is not finite and >= 0");
            }
            if (std::abs(v - at(b, a)) > 1e-9) {
                throw ValidationError("cost matrix is not symmetric at (" + std::to_string(a) +
                                      ", " + std::to_string(b) + ")");
            }
        }
    }
}

double tour_length(const CostMatrix& m, std::span<const int> order) {
    validate_permutation(m, order);
    const int n = m.size();
    double total = 0.0;
    for (int k = 0; k + 1 < n; ++k) total += m.at(order[k], order[k + 1]);
    total += m.at(order[n - 1], order[0]);
    return total;
}

Tour two_opt(const CostMatrix& m, std::vector<int> initial) {
    validate_permutation(m, initial);
    if (initial[0] != 0) {
        throw ValidationError("two_opt requires the depot (node 0) first in the initial order");
    }
    const int n = m.size();
    std::vector<int>& order = initial;

    // Reversing order[i..k] replaces edges (i-1,i) and (k,k+1); the depot
    // at position 0 is never part of a reversed segment.
    while (n >= 4) {
        double best_delta = 0.0;
        int best_i = -1;
        int best_k = -1;
        for (int i = 1; i < n - 1; ++i) {
            const int prev = order[i - 1];
            const int a = order[i];
            for (int k = i + 1; k < n; ++k) {
                const int b = order[k];
                const int next = order[(k + 1) % n];
                const double delta = m.at(prev, b) + m.at(a, next) -
                                     m.at(prev, a) - m.at(b, next);
                if (delta < best_delta) { // strict, so the first of equal moves wins
                    best_delta = delta;
                    best_i = i;
                    best_k = k;
                }
            }
        }
        if (best_i < 0 || -best_delta <= kImproveEps) break;
        std::reverse(order.begin() + best_i, order.begin() + best_k + 1);
    }

    return Tour{order, tour_length(m, order)};
}

std::vector<int> nearest_neighbor_init(const CostMatrix& m) {
    const int n = m.size();
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(n), 0);
    int current = 0;
    order.push_back(current);
    visited[0] = 1;
    for (int step = 1; step < n; ++step) {
        int nearest = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int cand = 0; cand < n; ++cand) {
            if (visited[static_cast<std::size_t>(cand)]) continue;
            if (m.at(current, cand) < best) {
                best = m.at(current, cand);
                nearest = cand;
            }
        }
        visited[static_cast<std::size_t>(nearest)] = 1;
        order.push_back(nearest);
        current = nearest;
    }
    return order;
}

Tour brute_force_tsp(const CostMatrix& m) {
    const int n = m.size();
    if (n > 11) {
        throw ValidationError("brute_force_tsp refuses n > 11, got " + std::to_string(n));
    }
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> best_order = order;
    double best_length = tour_length(m, order);
    while (std::next_permutation(order.begin() + 1, order.end())) {
        const double len = tour_length(m, order);
        if (len < best_length) {
            best_length = len;
            best_order = order;
        }
    }
    return Tour{best_order, best_length};
}

} // namespace uavplan
