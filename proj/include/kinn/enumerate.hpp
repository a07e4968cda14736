#pragma once

#include "kinn/count.hpp"
#include "kinn/dissection.hpp"

#include <functional>
#include <vector>

namespace kinn {

// Sinks return false to stop a stream early; generation is lazy.
using TriangulationSink = std::function<bool(const Triangulation&)>;
using KInNSink = std::function<bool(const KInN&)>;

// Yields every triangulation of the n-gon exactly once, in the deterministic
// order of the root-edge recursion (apex of the triangle on edge (n-1,0),
// then the two sub-polygons). Total count is C_{n-2}. Requires n >= 3.
void enumerate_triangulations(int n, const TriangulationSink& sink);

// Yields every k-in-n dissection exactly once, deterministically. For k >= 4
// the k-gon is placed directly: each k-subset of vertices in lexicographic
// order, each gap triangulated in recursion order. For k = 3 every
// (triangulation, marked triangle) pair is produced. Total count is
// f_closed(k, n). Requires 3 <= k <= n.
void enumerate_k_in_n(int k, int n, const KInNSink& sink);

std::vector<Triangulation> all_triangulations(int n);
std::vector<KInN> all_k_in_n(int k, int n);

// Number of k-element vertex subsets {v_1 < ... < v_k} whose cyclically
// consecutive pairs are all joined by a side or diagonal of T. Each cycle is
// counted once, unoriented. Requires 3 <= k <= n and T a triangulation.
Count count_k_cycles(const Triangulation& t, int k);

// Sum of count_k_cycles over all triangulations of the n-gon, divided by
// C_{n-2}, as an exact reduced rational. Requires 3 <= k < n.
Ratio average_cycles_bruteforce(int k, int n);

// Item count of enumerate_k_in_n; the exhaustive oracle for f_closed.
Count count_k_in_n_bruteforce(int k, int n);

}  // namespace kinn
