#include "kinn/catalan.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kinn {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::domain_error(what);
}

}  // namespace

Count binomial(long long n, long long k) {
    require(n >= 0, "binomial: n must be nonnegative");
    if (k < 0 || k > n) return Count(0);
    if (k > n - k) k = n - k;
    Count result(1);
    // Multiplicative form; each division is exact after multiplying a full
    // run of consecutive factors.
    for (long long i = 1; i <= k; ++i) {
        result *= Count(n - k + i);
        result = result.div_exact(Count(i));
    }
    return result;
}

Count catalan(long long n) {
    if (n < 0) return Count(0);
    thread_local std::vector<Count> memo;  // memo[i] = C_i
    while (static_cast<long long>(memo.size()) <= n) {
        const long long m = static_cast<long long>(memo.size());
        memo.push_back(binomial(2 * m, m).div_exact(Count(m + 1)));
    }
    return memo[static_cast<std::size_t>(n)];
}

Count f_closed(int k, int n) {
    require(k >= 3, "f_closed: requires k >= 3");
    require(k <= n, "f_closed: requires k <= n");
    return binomial(2LL * n - k - 1, n - 1);
}

Count convolution_lhs(int k, int n) {
    require(k >= 1 && k <= n, "convolution_lhs: requires 1 <= k <= n");
    // cur[m] = sum over compositions of m into r positive parts of the
    // product of C_{part-1}; r-fold convolution built iteratively.
    std::vector<Count> cur(static_cast<std::size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) cur[m] = catalan(m - 1);
    for (int r = 2; r <= k; ++r) {
        std::vector<Count> next(static_cast<std::size_t>(n) + 1, Count(0));
        for (int m = r; m <= n; ++m) {
            Count sum(0);
            for (int j = r - 1; j <= m - 1; ++j) sum += cur[j] * catalan(m - j - 1);
            next[m] = sum;
        }
        cur.swap(next);
    }
    return cur[static_cast<std::size_t>(n)];
}

Count convolution_rhs(int k, int n) {
    require(k >= 1 && k <= n, "convolution_rhs: requires 1 <= k <= n");
    const long long d = 2LL * n - k;  // >= n >= 1
    return (Count(k) * binomial(d, n)).div_exact(Count(d));
}

Count weighted_catalan_sum(int n) {
    require(n >= 1, "weighted_catalan_sum: requires n >= 1");
    Count sum(0);
    for (int i = 1; i <= n; ++i) sum += Count(i) * catalan(i) * catalan(n - i);
    return sum;
}

Count lemma_pq_sum(int p, int q) {
    require(q >= 1 && q <= p && p <= 2 * q - 1, "lemma_pq_sum: requires 1 <= q <= p <= 2q-1");
    Count sum(0);
    for (int i = 0; p - 1 - 2 * i >= 0 && q - 1 - i >= 0; ++i)
        sum += catalan(i) * binomial(p - 1 - 2 * i, q - 1 - i);
    return sum;
}

Ratio average_cycles_closed(int k, int n) {
    require(k >= 3, "average_cycles_closed: requires k >= 3");
    require(k < n, "average_cycles_closed: requires k < n");
    return Ratio(f_closed(k, n) * catalan(k - 2), catalan(n - 2));
}

}  // namespace kinn
