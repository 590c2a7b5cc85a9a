#pragma once

#include "bzeta/rational.hpp"

#include <vector>

namespace bzeta {

/// Triangle of Stirling numbers of the second kind S(r, k) for
/// 1 <= k <= r <= max_row, built eagerly by the recurrence
/// S(r, k) = k S(r-1, k) + S(r-1, k-1). Immutable after construction,
/// so lookups are safe from any number of threads.
class StirlingTable {
public:
    /// Throws std::invalid_argument for max_row < 1.
    explicit StirlingTable(int max_row);

    int max_row() const { return max_row_; }

    /// S(r, k); 0 when k < 1 or k > r. Throws std::out_of_range when r
    /// lies outside the built range [1, max_row].
    const BigInt& operator()(int r, int k) const;

private:
    int max_row_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[r-1][k-1] = S(r, k)
};

/// Triangle of Eulerian numbers <r, j> (permutations of r elements with
/// exactly j descents) for 0 <= j <= r-1, built by the recurrence
/// <r, j> = (j+1) <r-1, j> + (r-j) <r-1, j-1>.
class EulerianTable {
public:
    /// Throws std::invalid_argument for max_row < 1.
    explicit EulerianTable(int max_row);

    int max_row() const { return max_row_; }

    /// <r, j>; 0 when j < 0 or j > r-1. Throws std::out_of_range when r
    /// lies outside the built range [1, max_row].
    const BigInt& operator()(int r, int j) const;

private:
    int max_row_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[r-1][j] = <r, j>
};

}  // namespace bzeta
