#pragma once

#include "kinn/dissection.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kinn {

// Ordered tuple of positive integers; the side lengths (i_1,...,i_k) of the
// marked k-gon, summing to n.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> p);
    int sum() const;
    int size() const { return static_cast<int>(parts.size()); }

    friend bool operator==(const Composition&, const Composition&) = default;
};

// A k-in-n dissection with one of its n-k diagonals marked.
struct DiagonalMarkedKInN {
    KInN base;
    Diagonal marked_diagonal;

    DiagonalMarkedKInN(KInN b, Diagonal d);

    friend bool operator==(const DiagonalMarkedKInN&, const DiagonalMarkedKInN&) = default;
};

// The split produced by the marked diagonal: the diagonal runs from v to
// v+i (counterclockwise, 2 <= i <= n-k+1); cap is the triangulation of the
// (i+1)-gon cut off on the side away from the k-gon, rest the k-in-(n-i+1)
// dissection on the other side. Both are relabeled to start at 0.
struct DiagonalDecomposition {
    Vertex v;
    int i;
    Triangulation cap;
    KInN rest;

    friend bool operator==(const DiagonalDecomposition&, const DiagonalDecomposition&) = default;
};

// A k-in-n dissection with one vertex of the k-gon marked.
struct VertexMarkedKInN {
    KInN base;
    Vertex marked_vertex;

    VertexMarkedKInN(KInN b, Vertex v);

    friend bool operator==(const VertexMarkedKInN&, const VertexMarkedKInN&) = default;
};

// The k-gon unfolded from its marked vertex: side r subtends i_r boundary
// edges; sides with i_r >= 2 cut off an (i_r+1)-gon whose triangulation is
// caps[r] (relabeled to start at 0); sides with i_r = 1 carry no cap.
struct VertexDecomposition {
    Vertex v;
    Composition comp;
    std::vector<std::optional<Triangulation>> caps;

    friend bool operator==(const VertexDecomposition&, const VertexDecomposition&) = default;
};

DiagonalDecomposition diagonal_mark_forward(const DiagonalMarkedKInN& x);
DiagonalMarkedKInN diagonal_mark_inverse(const DiagonalDecomposition& d);

VertexDecomposition vertex_mark_forward(const VertexMarkedKInN& x);
VertexMarkedKInN vertex_mark_inverse(const VertexDecomposition& d);

// JSON forms embedding the canonical dissection format:
//   {"v":0,"i":2,"cap":{...},"rest":{...}}
//   {"v":0,"comp":[1,4,2,2,3],"caps":[null,{...},{...},{...},{...}]}
std::string serialize(const DiagonalDecomposition& d);
std::string serialize(const VertexDecomposition& d);

}  // namespace kinn
