#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracles {

unsigned long factorial_u64(int n) {
    unsigned long v = 1;
    for (int i = 2; i <= n; ++i)
        v *= static_cast<unsigned long>(i);
    return v;
}

bzeta::BigInt pascal_binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    std::vector<bzeta::BigInt> row{1};  // row 0
    for (int i = 1; i <= n; ++i) {
        std::vector<bzeta::BigInt> next(static_cast<size_t>(i) + 1, bzeta::BigInt(1));
        for (int j = 1; j < i; ++j)
            next[static_cast<size_t>(j)] =
                row[static_cast<size_t>(j - 1)] + row[static_cast<size_t>(j)];
        row = std::move(next);
    }
    return row[static_cast<size_t>(k)];
}

namespace {

// assign element `next` to one of the existing blocks or a fresh one
void partitions_rec(int r, int next, int blocks, long counts[]) {
    if (next == r) {
        ++counts[blocks];
        return;
    }
    for (int b = 0; b < blocks; ++b)
        partitions_rec(r, next + 1, blocks, counts);
    partitions_rec(r, next + 1, blocks + 1, counts);
}

}  // namespace

long count_set_partitions(int r, int k) {
    if (r == 0)
        return k == 0 ? 1 : 0;
    if (k < 1 || k > r)
        return 0;
    long counts[16] = {0};
    partitions_rec(r, 1, 1, counts);  // element 0 opens the first block
    return counts[k];
}

long count_descent_permutations(int r, int j) {
    if (j < 0 || j > r - 1)
        return 0;
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 1);
    long count = 0;
    do {
        int descents = 0;
        for (int i = 0; i + 1 < r; ++i)
            if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(i + 1)])
                ++descents;
        if (descents == j)
            ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

long bell_number(int r) {
    long total = 0;
    for (int k = 0; k <= r; ++k)
        total += count_set_partitions(r, k);
    return total;
}

}  // namespace oracles
