#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kinn/bijection.hpp"
#include "kinn/catalan.hpp"
#include "kinn/enumerate.hpp"
#include "kinn/serialize.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using kinn::as_k_in_n;
using kinn::Composition;
using kinn::Count;
using kinn::Diagonal;
using kinn::DiagonalDecomposition;
using kinn::DiagonalMarkedKInN;
using kinn::Dissection;
using kinn::Face;
using kinn::KInN;
using kinn::Triangulation;
using kinn::VertexDecomposition;
using kinn::VertexMarkedKInN;

namespace {

KInN figure_k_in_n() {
    return as_k_in_n(
        Dissection(12, {{0, 9}, {1, 3}, {1, 4}, {1, 5}, {5, 7}, {7, 9}, {9, 11}}), 5);
}

// Every (k-in-n, marked diagonal) pair.
std::vector<DiagonalMarkedKInN> diagonal_marked_domain(int k, int n) {
    std::vector<DiagonalMarkedKInN> out;
    for (const KInN& x : kinn::all_k_in_n(k, n))
        for (const Diagonal& d : x.dissection().diagonals()) out.emplace_back(x, d);
    return out;
}

// Every (v, i, cap, rest) tuple for the given k and n.
std::vector<DiagonalDecomposition> diagonal_decomposition_codomain(int k, int n) {
    std::vector<DiagonalDecomposition> out;
    for (int v = 0; v < n; ++v)
        for (int i = 2; i <= n - k + 1; ++i)
            for (const Triangulation& cap : kinn::all_triangulations(i + 1))
                for (const KInN& rest : kinn::all_k_in_n(k, n - i + 1))
                    out.push_back(DiagonalDecomposition{v, i, cap, rest});
    return out;
}

// Every (k-in-n, marked k-gon vertex) pair.
std::vector<VertexMarkedKInN> vertex_marked_domain(int k, int n) {
    std::vector<VertexMarkedKInN> out;
    for (const KInN& x : kinn::all_k_in_n(k, n))
        for (kinn::Vertex v : x.marked_face()) out.emplace_back(x, v);
    return out;
}

void compositions_of(int n, int parts, std::vector<int>& cur,
                     const std::function<void(const std::vector<int>&)>& visit) {
    if (parts == 1) {
        if (n >= 1) {
            cur.push_back(n);
            visit(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = 1; first <= n - parts + 1; ++first) {
        cur.push_back(first);
        compositions_of(n - first, parts - 1, cur, visit);
        cur.pop_back();
    }
}

// Every (v, composition, cap tuple) for the given k and n.
std::vector<VertexDecomposition> vertex_decomposition_codomain(int k, int n) {
    std::vector<VertexDecomposition> out;
    std::vector<int> cur;
    compositions_of(n, k, cur, [&](const std::vector<int>& parts) {
        for (int v = 0; v < n; ++v) {
            std::vector<std::vector<std::optional<Triangulation>>> choices{{}};
            for (int part : parts) {
                std::vector<std::vector<std::optional<Triangulation>>> next;
                if (part == 1) {
                    for (auto& prefix : choices) {
                        auto extended = prefix;
                        extended.emplace_back(std::nullopt);
                        next.push_back(std::move(extended));
                    }
                } else {
                    for (const Triangulation& cap : kinn::all_triangulations(part + 1))
                        for (const auto& prefix : choices) {
                            auto extended = prefix;
                            extended.emplace_back(cap);
                            next.push_back(std::move(extended));
                        }
                }
                choices = std::move(next);
            }
            for (auto& caps : choices)
                out.push_back(VertexDecomposition{v, Composition(parts), std::move(caps)});
        }
    });
    return out;
}

}  // namespace

TEST_CASE("marked structures validate their marks") {
    const KInN x = as_k_in_n(Dissection(5, {{0, 2}}), 4);
    CHECK_THROWS_AS(DiagonalMarkedKInN(x, Diagonal(1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(VertexMarkedKInN(x, 1), std::invalid_argument);  // 1 not on (0,2,3,4)
    CHECK_THROWS_AS(Composition({1, 0, 2}), std::invalid_argument);
}

TEST_CASE("diagonal mark forward: worked examples") {
    // pentagon, marked quadrilateral (0,2,3,4), diagonal (0,2)
    const auto dec = kinn::diagonal_mark_forward(
        DiagonalMarkedKInN(as_k_in_n(Dissection(5, {{0, 2}}), 4), Diagonal(0, 2)));
    CHECK(dec.v == 0);
    CHECK(dec.i == 2);
    CHECK(dec.cap == Triangulation(3));
    CHECK(dec.rest == as_k_in_n(Dissection(4), 4));
    CHECK(kinn::serialize(dec) ==
          R"({"v":0,"i":2,"cap":{"n":3,"diagonals":[]},"rest":{"n":4,"diagonals":[],"marked_face":[0,1,2,3]}})");

    // square triangulation with marked triangle (0,2,3)
    const auto dec2 = kinn::diagonal_mark_forward(
        DiagonalMarkedKInN(as_k_in_n(Dissection(4, {{0, 2}}), 3, Face{0, 2, 3}), Diagonal(0, 2)));
    CHECK(dec2.v == 0);
    CHECK(dec2.i == 2);
    CHECK(dec2.cap == Triangulation(3));
    CHECK(dec2.rest == as_k_in_n(Dissection(3), 3, Face{0, 1, 2}));

    // same dissection, marked triangle on the other side
    const auto dec3 = kinn::diagonal_mark_forward(
        DiagonalMarkedKInN(as_k_in_n(Dissection(4, {{0, 2}}), 3, Face{0, 1, 2}), Diagonal(0, 2)));
    CHECK(dec3.v == 2);
    CHECK(dec3.i == 2);
    CHECK(dec3.rest.marked_face() == Face{0, 1, 2});
}

TEST_CASE("diagonal mark inverse: worked examples") {
    const DiagonalDecomposition dec{0, 2, Triangulation(3), as_k_in_n(Dissection(4), 4)};
    const DiagonalMarkedKInN back = kinn::diagonal_mark_inverse(dec);
    CHECK(back.base == as_k_in_n(Dissection(5, {{0, 2}}), 4));
    CHECK(back.marked_diagonal == Diagonal(0, 2));

    CHECK_THROWS_AS(
        kinn::diagonal_mark_inverse(DiagonalDecomposition{0, 3, Triangulation(3),  // cap size
                                                          as_k_in_n(Dissection(4), 4)}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        kinn::diagonal_mark_inverse(DiagonalDecomposition{9, 2, Triangulation(3),  // v range
                                                          as_k_in_n(Dissection(4), 4)}),
        std::invalid_argument);
    CHECK_THROWS_AS(
        kinn::diagonal_mark_inverse(DiagonalDecomposition{0, 2, Triangulation(4),  // not triangulated
                                                          as_k_in_n(Dissection(4), 4)}),
        std::invalid_argument);
}

TEST_CASE("diagonal mark bijection: exhaustive round trips") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 3; k <= n; ++k) {
            const auto domain = diagonal_marked_domain(k, n);
            std::set<std::string> images;
            for (const auto& x : domain) {
                const auto dec = kinn::diagonal_mark_forward(x);
                CHECK(kinn::diagonal_mark_inverse(dec) == x);
                CHECK(images.insert(kinn::serialize(dec)).second);  // injective
            }

            const auto codomain = diagonal_decomposition_codomain(k, n);
            CHECK(domain.size() == codomain.size());
            for (const auto& dec : codomain) {
                const auto x = kinn::diagonal_mark_inverse(dec);
                CHECK(kinn::diagonal_mark_forward(x) == dec);
            }
        }
}

TEST_CASE("diagonal mark cardinality equals the recurrence") {
    // |domain| = (n-k) f_k(n); |codomain| = n sum C_{i-1} f_k(n-i+1)
    for (int n = 3; n <= 8; ++n)
        for (int k = 3; k <= n; ++k) {
            const Count lhs = Count(n - k) * kinn::count_k_in_n_bruteforce(k, n);
            Count rhs(0);
            for (int i = 2; i <= n - k + 1; ++i)
                rhs += kinn::catalan(i - 1) * kinn::count_k_in_n_bruteforce(k, n - i + 1);
            rhs = Count(n) * rhs;
            CHECK(lhs == Count(diagonal_marked_domain(k, n).size()));
            CHECK(rhs == Count(diagonal_decomposition_codomain(k, n).size()));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("vertex mark forward: worked examples") {
    // the 5-in-12 golden case, marked at the bottom vertex
    const auto dec = kinn::vertex_mark_forward(VertexMarkedKInN(figure_k_in_n(), 0));
    CHECK(dec.comp == Composition({1, 4, 2, 2, 3}));
    CHECK(dec.v == 0);
    REQUIRE(dec.caps.size() == 5);
    CHECK_FALSE(dec.caps[0].has_value());
    CHECK(*dec.caps[1] == Triangulation(5, {{0, 2}, {0, 3}}));
    CHECK(*dec.caps[2] == Triangulation(3));
    CHECK(*dec.caps[3] == Triangulation(3));
    CHECK(*dec.caps[4] == Triangulation(4, {{0, 2}}));

    // k = n: all sides of length 1
    const auto whole = kinn::vertex_mark_forward(VertexMarkedKInN(as_k_in_n(Dissection(5), 5), 3));
    CHECK(whole.comp == Composition({1, 1, 1, 1, 1}));
    for (const auto& cap : whole.caps) CHECK_FALSE(cap.has_value());

    const auto quad = kinn::vertex_mark_forward(
        VertexMarkedKInN(as_k_in_n(Dissection(5, {{0, 2}}), 4), 0));
    CHECK(quad.comp == Composition({2, 1, 1, 1}));
    REQUIRE(quad.caps[0].has_value());
    CHECK(*quad.caps[0] == Triangulation(3));
}

TEST_CASE("vertex mark inverse: worked examples") {
    // rebuild the 5-in-12 golden case from its decomposition
    const auto dec = kinn::vertex_mark_forward(VertexMarkedKInN(figure_k_in_n(), 0));
    const auto back = kinn::vertex_mark_inverse(dec);
    CHECK(back.base == figure_k_in_n());
    CHECK(back.marked_vertex == 0);

    CHECK_THROWS_AS(kinn::vertex_mark_inverse(VertexDecomposition{
                        0, Composition({2, 1, 1, 1}), {std::nullopt, std::nullopt, std::nullopt,
                                                       std::nullopt}}),  // missing cap
                    std::invalid_argument);
    CHECK_THROWS_AS(kinn::vertex_mark_inverse(VertexDecomposition{
                        0, Composition({2, 1, 1, 1}),
                        {Triangulation(4), std::nullopt, std::nullopt, std::nullopt}}),  // cap size
                    std::invalid_argument);
    CHECK_THROWS_AS(kinn::vertex_mark_inverse(VertexDecomposition{
                        5, Composition({2, 1, 1, 1}),
                        {Triangulation(3), std::nullopt, std::nullopt, std::nullopt}}),  // v range
                    std::invalid_argument);
    CHECK_THROWS_AS(kinn::vertex_mark_inverse(VertexDecomposition{
                        0, Composition({2, 1}), {Triangulation(3), std::nullopt}}),  // k < 3
                    std::invalid_argument);
}

TEST_CASE("vertex mark bijection: exhaustive round trips") {
    for (int n = 3; n <= 8; ++n)
        for (int k = 3; k <= n; ++k) {
            const auto domain = vertex_marked_domain(k, n);
            std::set<std::string> images;
            for (const auto& x : domain) {
                const auto dec = kinn::vertex_mark_forward(x);
                CHECK(kinn::vertex_mark_inverse(dec) == x);
                CHECK(images.insert(kinn::serialize(dec)).second);  // injective
            }

            const auto codomain = vertex_decomposition_codomain(k, n);
            CHECK(domain.size() == codomain.size());
            for (const auto& dec : codomain) {
                const auto x = kinn::vertex_mark_inverse(dec);
                CHECK(kinn::vertex_mark_forward(x) == dec);
            }
        }
}

TEST_CASE("vertex mark cardinality equals the convolution") {
    // k f_k(n) = n * convolution_lhs(k, n)
    for (int n = 4; n <= 8; ++n)
        for (int k = 3; k < n; ++k) {
            const Count lhs = Count(k) * kinn::count_k_in_n_bruteforce(k, n);
            const Count rhs = Count(n) * kinn::convolution_lhs(k, n);
            CHECK(lhs == Count(vertex_marked_domain(k, n).size()));
            CHECK(rhs == Count(vertex_decomposition_codomain(k, n).size()));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("decomposition serialization") {
    const auto dec = kinn::vertex_mark_forward(VertexMarkedKInN(figure_k_in_n(), 0));
    CHECK(kinn::serialize(dec) ==
          R"({"v":0,"comp":[1,4,2,2,3],"caps":[null,{"n":5,"diagonals":[[0,2],[0,3]]},)"
          R"({"n":3,"diagonals":[]},{"n":3,"diagonals":[]},{"n":4,"diagonals":[[0,2]]}]})");
}
