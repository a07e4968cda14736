#pragma once

#include "kinn/count.hpp"

namespace kinn {

// C_n = C(2n,n)/(n+1) for n >= 0; defined as 0 for n < 0. Memoized per thread.
Count catalan(long long n);

// C(n,k). Requires n >= 0; returns 0 when k < 0 or k > n.
Count binomial(long long n, long long k);

// Number of k-in-n dissections, C(2n-k-1, n-1). Requires 3 <= k <= n.
Count f_closed(int k, int n);

// Sum over compositions (i_1,...,i_k) of n with positive parts of
// C_{i_1-1}...C_{i_k-1}, computed as an iterated sequence convolution.
// Requires 1 <= k <= n.
Count convolution_lhs(int k, int n);

// k/(2n-k) * C(2n-k, n) with the division checked exact. Requires 1 <= k <= n.
Count convolution_rhs(int k, int n);

// sum_{i>=0} i*C_i*C_{n-i}, equal to C(2n+1, n-1). Requires n >= 1.
Count weighted_catalan_sum(int n);

// sum_{i>=0} C_i * C(p-1-2i, q-1-i), equal to C(p,q). Requires 1 <= q <= p <= 2q-1.
Count lemma_pq_sum(int p, int q);

// Average number of cycles of length k over all triangulations of an n-gon:
// C(2n-k-1, n-1) * C_{k-2} / C_{n-2}, reduced. Requires 3 <= k < n.
Ratio average_cycles_closed(int k, int n);

}  // namespace kinn
