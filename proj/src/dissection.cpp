#include "kinn/dissection.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace kinn {

namespace {

std::string diagonal_str(const Diagonal& d) {
    return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

std::string face_str(const Face& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + ")";
}

}  // namespace

Diagonal::Diagonal(Vertex x, Vertex y) : a(std::min(x, y)), b(std::max(x, y)) {
    if (x == y) throw std::invalid_argument("diagonal endpoints must be distinct");
}

bool is_valid_diagonal(int n, const Diagonal& d) {
    if (d.a < 0 || d.b >= n || d.a >= d.b) return false;
    const int gap = d.b - d.a;
    return gap >= 2 && n - gap >= 2;
}

bool diagonals_cross(int n, const Diagonal& d1, const Diagonal& d2) {
    if (!is_valid_diagonal(n, d1)) throw std::invalid_argument("invalid diagonal " + diagonal_str(d1));
    if (!is_valid_diagonal(n, d2)) throw std::invalid_argument("invalid diagonal " + diagonal_str(d2));
    if (d1.a == d2.a || d1.a == d2.b || d1.b == d2.a || d1.b == d2.b) return false;
    const auto inside = [&](Vertex x) {
        const int off = ((x - d1.a) % n + n) % n;
        return off > 0 && off < d1.b - d1.a;
    };
    return inside(d2.a) != inside(d2.b);
}

Dissection::Dissection(int n, std::vector<Diagonal> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
    if (n_ < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    std::sort(diagonals_.begin(), diagonals_.end());
    for (std::size_t i = 0; i < diagonals_.size(); ++i) {
        const Diagonal& d = diagonals_[i];
        if (!is_valid_diagonal(n_, d))
            throw std::invalid_argument("invalid diagonal " + diagonal_str(d) + " for n=" + std::to_string(n_));
        if (i > 0 && diagonals_[i - 1] == d)
            throw std::invalid_argument("duplicate diagonal " + diagonal_str(d));
        for (std::size_t j = 0; j < i; ++j)
            if (diagonals_cross(n_, diagonals_[j], d))
                throw std::invalid_argument("diagonals cross: " + diagonal_str(diagonals_[j]) + " and " + diagonal_str(d));
    }
}

bool Dissection::contains(const Diagonal& d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

std::vector<Face> Dissection::faces() const {
    // Neighbors of v sorted by (u - v) mod n, which for vertices on a circle
    // is the counterclockwise angular order around v.
    std::vector<std::vector<Vertex>> nbrs(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
        nbrs[v].push_back((v + 1) % n_);
        nbrs[v].push_back((v + n_ - 1) % n_);
    }
    for (const Diagonal& d : diagonals_) {
        nbrs[d.a].push_back(d.b);
        nbrs[d.b].push_back(d.a);
    }
    for (int v = 0; v < n_; ++v)
        std::sort(nbrs[v].begin(), nbrs[v].end(),
                  [&](Vertex x, Vertex y) { return (x - v + n_) % n_ < (y - v + n_) % n_; });

    // Walk every directed edge once. At each arrival the face turns to the
    // neighbor just clockwise of the reversed edge, tracing interior faces
    // counterclockwise; the single clockwise cycle is the outer face.
    std::vector<std::pair<Vertex, Vertex>> directed;
    for (int v = 0; v < n_; ++v)
        for (Vertex u : nbrs[v]) directed.emplace_back(v, u);
    std::sort(directed.begin(), directed.end());
    std::vector<bool> visited(directed.size(), false);
    const auto edge_index = [&](Vertex u, Vertex v) {
        return static_cast<std::size_t>(
            std::lower_bound(directed.begin(), directed.end(), std::pair<Vertex, Vertex>(u, v)) -
            directed.begin());
    };

    std::vector<Face> result;
    bool outer_seen = false;
    for (std::size_t start = 0; start < directed.size(); ++start) {
        if (visited[start]) continue;
        Vertex u = directed[start].first;
        Vertex v = directed[start].second;
        Face cycle;
        do {
            visited[edge_index(u, v)] = true;
            cycle.push_back(v);
            const auto& ring = nbrs[v];
            const std::size_t deg = ring.size();
            std::size_t idx = 0;
            while (ring[idx] != u) ++idx;
            const Vertex w = ring[(idx + deg - 1) % deg];
            u = v;
            v = w;
        } while (!visited[edge_index(u, v)]);

        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
        if (std::is_sorted(cycle.begin(), cycle.end())) {
            result.push_back(std::move(cycle));
        } else {
            // clockwise full-boundary cycle
            if (outer_seen || static_cast<int>(cycle.size()) != n_)
                throw std::logic_error("face walk produced a non-canonical cycle");
            outer_seen = true;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Dissection Dissection::rotated(int shift) const {
    std::vector<Diagonal> moved;
    moved.reserve(diagonals_.size());
    const int s = ((shift % n_) + n_) % n_;
    for (const Diagonal& d : diagonals_) moved.emplace_back((d.a + s) % n_, (d.b + s) % n_);
    return Dissection(n_, std::move(moved));
}

KInN::KInN(Dissection dissection, Face marked_face)
    : dissection_(std::move(dissection)), marked_face_(std::move(marked_face)) {
    const int n = dissection_.n();
    const int k = static_cast<int>(marked_face_.size());
    if (k < 3) throw std::invalid_argument("marked face must have at least 3 vertices");
    if (static_cast<int>(dissection_.diagonals().size()) != n - k)
        throw std::invalid_argument("wrong diagonal count: a " + std::to_string(k) + "-in-" +
                                    std::to_string(n) + " dissection needs " + std::to_string(n - k) +
                                    " diagonals");
    bool found = false;
    for (const Face& f : dissection_.faces()) {
        if (f == marked_face_) {
            found = true;
        } else if (f.size() != 3) {
            throw std::invalid_argument("face profile mismatch: unmarked face " + face_str(f) +
                                        " is not a triangle");
        }
    }
    if (!found)
        throw std::invalid_argument("marked face " + face_str(marked_face_) +
                                    " is not a face of the dissection");
}

KInN as_k_in_n(const Dissection& d, int k, const std::optional<Face>& mark) {
    const int n = d.n();
    if (k < 3 || k > n) throw std::domain_error("as_k_in_n: requires 3 <= k <= n");
    if (static_cast<int>(d.diagonals().size()) != n - k)
        throw std::invalid_argument("wrong diagonal count: expected " + std::to_string(n - k) +
                                    ", got " + std::to_string(d.diagonals().size()));
    if (k == 3) {
        // The distinguished triangle is genuinely extra data.
        if (!mark) throw std::invalid_argument("k=3 requires an explicit marked face");
        return KInN(d, *mark);
    }
    const auto faces = d.faces();
    const Face* k_face = nullptr;
    for (const Face& f : faces) {
        if (f.size() == 3) continue;
        if (f.size() != static_cast<std::size_t>(k))
            throw std::invalid_argument("face profile mismatch: face " + face_str(f) + " has size " +
                                        std::to_string(f.size()));
        if (k_face)
            throw std::invalid_argument("face profile mismatch: two non-triangle faces " +
                                        face_str(*k_face) + " and " + face_str(f));
        k_face = &f;
    }
    if (!k_face) throw std::invalid_argument("face profile mismatch: no face of size " + std::to_string(k));
    if (mark && *mark != *k_face)
        throw std::invalid_argument("mark " + face_str(*mark) + " does not match the k-gon face " +
                                    face_str(*k_face));
    return KInN(d, *k_face);
}

}  // namespace kinn
