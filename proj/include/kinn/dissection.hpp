#pragma once

#include <compare>
#include <optional>
#include <vector>

namespace kinn {

// Vertices of the n-gon are labeled 0..n-1 counterclockwise; vertex 0 is
// drawn at the bottom of the circle.
using Vertex = int;

// Chord between two non-adjacent polygon vertices, stored with a < b.
struct Diagonal {
    Vertex a = 0;
    Vertex b = 2;

    Diagonal() = default;
    Diagonal(Vertex x, Vertex y);

    friend bool operator==(const Diagonal&, const Diagonal&) = default;
    friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
};

// Face boundary in counterclockwise order, rotated to start at its smallest
// vertex. Because all faces of a noncrossing dissection are in convex
// position, the canonical boundary is simply the strictly increasing list of
// the face's vertices.
using Face = std::vector<Vertex>;

// Endpoints in range, distinct and non-adjacent on the n-gon.
bool is_valid_diagonal(int n, const Diagonal& d);

// True iff the diagonals share no endpoint and their interiors intersect,
// i.e. exactly one endpoint of d2 lies strictly inside the counterclockwise
// arc from d1.a to d1.b. Throws std::invalid_argument on invalid diagonals.
bool diagonals_cross(int n, const Diagonal& d1, const Diagonal& d2);

// A convex n-gon partitioned by pairwise noncrossing diagonals. Immutable
// after construction; the diagonal set is kept sorted.
class Dissection {
public:
    explicit Dissection(int n, std::vector<Diagonal> diagonals = {});

    int n() const { return n_; }
    const std::vector<Diagonal>& diagonals() const { return diagonals_; }
    bool contains(const Diagonal& d) const;
    bool is_triangulation() const { return static_cast<int>(diagonals_.size()) == n_ - 3; }

    // All faces, each in canonical form, sorted lexicographically.
    // |faces| = |diagonals| + 1 and the boundary lengths sum to n + 2|diagonals|.
    std::vector<Face> faces() const;

    // Relabels v -> (v + shift) mod n.
    Dissection rotated(int shift) const;

    friend bool operator==(const Dissection&, const Dissection&) = default;

private:
    int n_;
    std::vector<Diagonal> diagonals_;
};

// A triangulation is a dissection with n-3 diagonals (all faces triangles).
using Triangulation = Dissection;

// A dissection with exactly n-k diagonals and a distinguished face of size k;
// every other face is a triangle. For k = 3 the dissection is a full
// triangulation and the mark singles out one of its n-2 triangles.
class KInN {
public:
    KInN(Dissection dissection, Face marked_face);

    const Dissection& dissection() const { return dissection_; }
    const Face& marked_face() const { return marked_face_; }
    int n() const { return dissection_.n(); }
    int k() const { return static_cast<int>(marked_face_.size()); }

    friend bool operator==(const KInN&, const KInN&) = default;

private:
    Dissection dissection_;
    Face marked_face_;
};

// Interprets d as a k-in-n dissection. Requires |d.diagonals| = n-k. For
// k >= 4 the marked face is found automatically (mark, when given, must
// match it); for k = 3 an explicit mark is required.
KInN as_k_in_n(const Dissection& d, int k, const std::optional<Face>& mark = std::nullopt);

}  // namespace kinn
