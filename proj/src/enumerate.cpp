#include "kinn/enumerate.hpp"

#include "kinn/catalan.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace kinn {

namespace {

// Enumerates all triangulations of the polygon whose boundary is the vertex
// run lo, lo+1, ..., hi (labels taken mod n) closed by the chord (lo,hi).
// Diagonals are pushed onto buf; cont() is invoked once per complete
// triangulation and may return false to stop.
class ArcTriangulator {
public:
    ArcTriangulator(int n, std::vector<Diagonal>& buf) : n_(n), buf_(buf) {}

    bool run(int lo, int hi, const std::function<bool()>& cont) {
        if (hi - lo < 2) return cont();
        for (int apex = lo + 1; apex < hi; ++apex) {
            std::size_t added = 0;
            if (apex - lo >= 2) {
                buf_.emplace_back(lo % n_, apex % n_);
                ++added;
            }
            if (hi - apex >= 2) {
                buf_.emplace_back(apex % n_, hi % n_);
                ++added;
            }
            const bool keep_going =
                run(lo, apex, [&] { return run(apex, hi, cont); });
            buf_.resize(buf_.size() - added);
            if (!keep_going) return false;
        }
        return true;
    }

private:
    int n_;
    std::vector<Diagonal>& buf_;
};

// Lexicographic k-subsets of {0..n-1}; visit returns false to stop.
bool for_each_subset(int n, int k, std::vector<int>& pick,
                     const std::function<bool()>& visit, int next = 0) {
    if (static_cast<int>(pick.size()) == k) return visit();
    const int need = k - static_cast<int>(pick.size());
    for (int v = next; v <= n - need; ++v) {
        pick.push_back(v);
        const bool keep_going = for_each_subset(n, k, pick, visit, v + 1);
        pick.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void enumerate_triangulations(int n, const TriangulationSink& sink) {
    if (n < 3) throw std::domain_error("enumerate_triangulations: requires n >= 3");
    std::vector<Diagonal> buf;
    ArcTriangulator tri(n, buf);
    tri.run(0, n - 1, [&] { return sink(Triangulation(n, buf)); });
}

void enumerate_k_in_n(int k, int n, const KInNSink& sink) {
    if (k < 3 || k > n) throw std::domain_error("enumerate_k_in_n: requires 3 <= k <= n");

    if (k == 3) {
        enumerate_triangulations(n, [&](const Triangulation& t) {
            for (const Face& f : t.faces())
                if (!sink(KInN(t, f))) return false;
            return true;
        });
        return;
    }

    std::vector<Diagonal> buf;
    ArcTriangulator tri(n, buf);
    std::vector<int> corners;

    // Triangulate the gaps between consecutive k-gon corners, left to right.
    const std::function<bool(int)> fill_gaps = [&](int r) -> bool {
        if (r == k) {
            Face face = corners;
            return sink(KInN(Dissection(n, buf), std::move(face)));
        }
        const int lo = corners[r];
        const int hi = r + 1 < k ? corners[r + 1] : corners[0] + n;
        if (hi - lo >= 2) {
            buf.emplace_back(lo % n, hi % n);  // the k-gon side is a chord
            const bool keep_going = tri.run(lo, hi, [&] { return fill_gaps(r + 1); });
            buf.pop_back();
            return keep_going;
        }
        return fill_gaps(r + 1);
    };

    for_each_subset(n, k, corners, [&] { return fill_gaps(0); });
}

std::vector<Triangulation> all_triangulations(int n) {
    std::vector<Triangulation> out;
    enumerate_triangulations(n, [&](const Triangulation& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

std::vector<KInN> all_k_in_n(int k, int n) {
    std::vector<KInN> out;
    enumerate_k_in_n(k, n, [&](const KInN& x) {
        out.push_back(x);
        return true;
    });
    return out;
}

Count count_k_cycles(const Triangulation& t, int k) {
    const int n = t.n();
    if (k < 3 || k > n) throw std::domain_error("count_k_cycles: requires 3 <= k <= n");
    if (!t.is_triangulation())
        throw std::invalid_argument("count_k_cycles: dissection is not a triangulation");

    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    const auto join = [&](int a, int b) { adj[a][b] = adj[b][a] = true; };
    for (int v = 0; v < n; ++v) join(v, (v + 1) % n);
    for (const Diagonal& d : t.diagonals()) join(d.a, d.b);

    // In a noncrossing chord set every simple cycle's vertex set is in convex
    // position, so cycles of length k are exactly the k-subsets whose
    // cyclically consecutive members are all adjacent.
    Count total(0);
    std::vector<int> pick;
    for_each_subset(n, k, pick, [&] {
        for (int i = 0; i < k; ++i)
            if (!adj[pick[i]][pick[(i + 1) % k]]) return true;
        total += Count(1);
        return true;
    });
    return total;
}

Ratio average_cycles_bruteforce(int k, int n) {
    if (k < 3 || k >= n) throw std::domain_error("average_cycles_bruteforce: requires 3 <= k < n");
    Count total(0);
    enumerate_triangulations(n, [&](const Triangulation& t) {
        total += count_k_cycles(t, k);
        return true;
    });
    return Ratio(total, catalan(n - 2));
}

Count count_k_in_n_bruteforce(int k, int n) {
    Count total(0);
    enumerate_k_in_n(k, n, [&](const KInN&) {
        total += Count(1);
        return true;
    });
    return total;
}

}  // namespace kinn
