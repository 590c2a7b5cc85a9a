#pragma once

#include "bzeta/rational.hpp"

// Brute-force reference implementations, deliberately independent of the
// library's recurrences: Pascal-triangle binomials, direct set-partition and
// permutation-descent enumeration, and a plain iterative factorial.
namespace oracles {

unsigned long factorial_u64(int n);  // n <= 20

bzeta::BigInt pascal_binomial(int n, int k);

// set partitions of an r-element set into exactly k nonempty blocks (r <= 10)
long count_set_partitions(int r, int k);

// permutations of {1..r} with exactly j descents (r <= 8)
long count_descent_permutations(int r, int j);

long bell_number(int r);  // r <= 10

}  // namespace oracles
