#include "kinn/bijection.hpp"

#include "kinn/serialize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kinn {

namespace {

// True iff x lies on the closed counterclockwise arc from a spanning
// `edges` boundary edges.
bool on_arc(int n, Vertex a, int edges, Vertex x) {
    return ((x - a) % n + n) % n <= edges;
}

// Diagonals of d lying entirely on the closed arc from a spanning `edges`
// boundary edges, relabeled so that a becomes 0, excluding the arc's chord.
std::vector<Diagonal> sub_diagonals(const Dissection& d, Vertex a, int edges) {
    const int n = d.n();
    std::vector<Diagonal> out;
    for (const Diagonal& diag : d.diagonals()) {
        const int oa = ((diag.a - a) % n + n) % n;
        const int ob = ((diag.b - a) % n + n) % n;
        if (oa > edges || ob > edges) continue;
        if (std::min(oa, ob) == 0 && std::max(oa, ob) == edges) continue;  // the chord itself
        out.emplace_back(oa, ob);
    }
    return out;
}

Face relabel_face(const Face& f, int n, Vertex a) {
    Face out;
    out.reserve(f.size());
    for (Vertex x : f) out.push_back(((x - a) % n + n) % n);
    std::sort(out.begin(), out.end());
    return out;
}

void embed_diagonals(std::vector<Diagonal>& out, const Dissection& sub, int n, Vertex a) {
    for (const Diagonal& d : sub.diagonals()) out.emplace_back((a + d.a) % n, (a + d.b) % n);
}

}  // namespace

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x < 1) throw std::invalid_argument("composition parts must be positive");
}

int Composition::sum() const { return std::accumulate(parts.begin(), parts.end(), 0); }

DiagonalMarkedKInN::DiagonalMarkedKInN(KInN b, Diagonal d)
    : base(std::move(b)), marked_diagonal(d) {
    if (!base.dissection().contains(marked_diagonal))
        throw std::invalid_argument("marked diagonal is not a diagonal of the dissection");
}

VertexMarkedKInN::VertexMarkedKInN(KInN b, Vertex v) : base(std::move(b)), marked_vertex(v) {
    const Face& f = base.marked_face();
    if (!std::binary_search(f.begin(), f.end(), v))
        throw std::invalid_argument("marked vertex is not on the marked face");
}

DiagonalDecomposition diagonal_mark_forward(const DiagonalMarkedKInN& x) {
    const Dissection& d = x.base.dissection();
    const int n = d.n();
    const Diagonal diag = x.marked_diagonal;

    // The marked face lies entirely on one side of the marked diagonal; the
    // other side is fully triangulated. v is the diagonal endpoint from which
    // the triangulated arc runs counterclockwise.
    const int fwd = diag.b - diag.a;  // edges on the ccw arc a -> b
    const Face& face = x.base.marked_face();
    const bool face_on_ab_side =
        std::all_of(face.begin(), face.end(), [&](Vertex w) { return on_arc(n, diag.a, fwd, w); });
    const Vertex v = face_on_ab_side ? diag.b : diag.a;
    const int i = face_on_ab_side ? n - fwd : fwd;

    Triangulation cap(i + 1, sub_diagonals(d, v, i));
    const Vertex rest_start = (v + i) % n;
    Dissection rest_d(n - i + 1, sub_diagonals(d, rest_start, n - i));
    KInN rest(std::move(rest_d), relabel_face(face, n, rest_start));
    return DiagonalDecomposition{v, i, std::move(cap), std::move(rest)};
}

DiagonalMarkedKInN diagonal_mark_inverse(const DiagonalDecomposition& dec) {
    const int i = dec.i;
    if (dec.cap.n() != i + 1)
        throw std::invalid_argument("inconsistent component sizes: cap must have i+1 vertices");
    if (!dec.cap.is_triangulation())
        throw std::invalid_argument("cap is not a triangulation");
    const int n = dec.rest.n() + i - 1;
    const int k = dec.rest.k();
    if (i < 2 || i > n - k + 1)
        throw std::invalid_argument("inconsistent component sizes: i out of range");
    if (dec.v < 0 || dec.v >= n) throw std::invalid_argument("v out of range");

    const Vertex v = dec.v;
    const Vertex rest_start = (v + i) % n;
    std::vector<Diagonal> diagonals;
    const Diagonal marked(v, rest_start);
    diagonals.push_back(marked);
    embed_diagonals(diagonals, dec.cap, n, v);
    embed_diagonals(diagonals, dec.rest.dissection(), n, rest_start);

    Face face;
    for (Vertex w : dec.rest.marked_face()) face.push_back((rest_start + w) % n);
    std::sort(face.begin(), face.end());

    return DiagonalMarkedKInN(KInN(Dissection(n, std::move(diagonals)), std::move(face)), marked);
}

VertexDecomposition vertex_mark_forward(const VertexMarkedKInN& x) {
    const Dissection& d = x.base.dissection();
    const int n = d.n();
    const Face& face = x.base.marked_face();
    const int k = x.base.k();

    // Corners of the k-gon counterclockwise from the marked vertex.
    const auto at = std::find(face.begin(), face.end(), x.marked_vertex);
    const std::size_t start = static_cast<std::size_t>(at - face.begin());
    std::vector<int> parts;
    std::vector<std::optional<Triangulation>> caps;
    for (int r = 0; r < k; ++r) {
        const Vertex w = face[(start + r) % k];
        const Vertex w_next = face[(start + r + 1) % k];
        const int len = ((w_next - w) % n + n) % n;
        parts.push_back(len);
        if (len >= 2)
            caps.emplace_back(Triangulation(len + 1, sub_diagonals(d, w, len)));
        else
            caps.emplace_back(std::nullopt);
    }
    return VertexDecomposition{x.marked_vertex, Composition(std::move(parts)), std::move(caps)};
}

VertexMarkedKInN vertex_mark_inverse(const VertexDecomposition& dec) {
    const int k = dec.comp.size();
    const int n = dec.comp.sum();
    if (k < 3) throw std::invalid_argument("composition needs at least 3 parts");
    if (dec.v < 0 || dec.v >= n) throw std::invalid_argument("v out of range");
    if (static_cast<int>(dec.caps.size()) != k)
        throw std::invalid_argument("cap count mismatch: need one per part");

    std::vector<Diagonal> diagonals;
    Face face;
    Vertex w = dec.v;
    for (int r = 0; r < k; ++r) {
        const int len = dec.comp.parts[r];
        face.push_back(w);
        const Vertex w_next = (w + len) % n;
        if (len == 1) {
            if (dec.caps[r])
                throw std::invalid_argument("cap size mismatch: side of length 1 takes no cap");
        } else {
            if (!dec.caps[r])
                throw std::invalid_argument("cap size mismatch: side of length " +
                                            std::to_string(len) + " needs a cap");
            if (dec.caps[r]->n() != len + 1)
                throw std::invalid_argument("cap size mismatch: expected " + std::to_string(len + 1) +
                                            " vertices");
            if (!dec.caps[r]->is_triangulation())
                throw std::invalid_argument("cap is not a triangulation");
            diagonals.emplace_back(w, w_next);
            embed_diagonals(diagonals, *dec.caps[r], n, w);
        }
        w = w_next;
    }
    std::sort(face.begin(), face.end());
    return VertexMarkedKInN(KInN(Dissection(n, std::move(diagonals)), std::move(face)), dec.v);
}

std::string serialize(const DiagonalDecomposition& d) {
    return "{\"v\":" + std::to_string(d.v) + ",\"i\":" + std::to_string(d.i) +
           ",\"cap\":" + serialize(d.cap) + ",\"rest\":" + serialize(d.rest) + "}";
}

std::string serialize(const VertexDecomposition& d) {
    std::string out = "{\"v\":" + std::to_string(d.v) + ",\"comp\":[";
    for (int r = 0; r < d.comp.size(); ++r) {
        if (r) out += ',';
        out += std::to_string(d.comp.parts[r]);
    }
    out += "],\"caps\":[";
    for (std::size_t r = 0; r < d.caps.size(); ++r) {
        if (r) out += ',';
        out += d.caps[r] ? serialize(*d.caps[r]) : "null";
    }
    out += "]}";
    return out;
}

}  // namespace kinn
