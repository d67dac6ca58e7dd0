#pragma once

#include <span>
#include <vector>

namespace uavplan {

/// Symmetric travel-cost matrix in meters; node 0 is the depot (home).
class CostMatrix {
public:
    explicit CostMatrix(int n);

    int size() const { return n_; }
    double at(int a, int b) const { return costs_[static_cast<std::size_t>(a) * n_ + b]; }

    /// Sets costs[a][b] and costs[b][a].
    void set(int a, int b, double meters);

    /// Throws ValidationError unless the matrix is symmetric within 1e-9,
    /// has a zero diagonal, and every entry is finite and >= 0.
    void validate() const;

private:
    int n_;
    std::vector<double> costs_;
};

/// Closed tour anchored at the depot: order is a permutation of 0..n-1
/// with order[0] == 0; length_m includes the return edge to the depot.
struct Tour {
    std::vector<int> order;
    double length_m = 0.0;
};

/// Closed-tour length including the return edge. Throws ValidationError
/// on a malformed permutation.
double tour_length(const CostMatrix& m, std::span<const int> order);

/// 2-opt local search, best improvement per sweep: scan every segment
/// reversal over positions 1..n-1 (the depot never moves), apply the
/// single best move, repeat until no reversal improves the length by more
/// than 1e-9 m. Deterministic; the result is 2-opt locally minimal and
/// never longer than the initial tour.
Tour two_opt(const CostMatrix& m, std::vector<int> initial);

/// Greedy tour from the depot, repeatedly visiting the nearest unvisited
/// node, ties broken by lowest index.
std::vector<int> nearest_neighbor_init(const CostMatrix& m);

/// Globally optimal closed tour by exhaustive enumeration with the depot
/// fixed first. Refuses n > 11 (factorial blow-up). Test oracle grade.
Tour brute_force_tsp(const CostMatrix& m);

} // namespace uavplan
