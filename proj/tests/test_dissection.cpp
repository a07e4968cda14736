#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "kinn/dissection.hpp"
#include "kinn/serialize.hpp"

#include <algorithm>
#include <stdexcept>
#include <variant>

using kinn::as_k_in_n;
using kinn::Diagonal;
using kinn::Dissection;
using kinn::Face;
using kinn::KInN;

namespace {

// 5-in-12 dissection used as the rendering golden case: marked pentagon
// (0,1,5,7,9) with side lengths 1,4,2,2,3 from vertex 0.
const char* kPentagonIn12 =
    R"({"n":12,"diagonals":[[0,9],[1,3],[1,4],[1,5],[5,7],[7,9],[9,11]],"marked_face":[0,1,5,7,9]})";

Dissection figure_dissection() {
    return Dissection(12, {{0, 9}, {1, 3}, {1, 4}, {1, 5}, {5, 7}, {7, 9}, {9, 11}});
}

}  // namespace

TEST_CASE("diagonal canonicalization") {
    CHECK(Diagonal(3, 1) == Diagonal(1, 3));
    CHECK(Diagonal(1, 3) < Diagonal(1, 4));
    CHECK(Diagonal(1, 4) < Diagonal(2, 3));
    CHECK_THROWS_AS(Diagonal(2, 2), std::invalid_argument);
}

TEST_CASE("diagonals_cross") {
    CHECK(kinn::diagonals_cross(4, {0, 2}, {1, 3}));
    CHECK(kinn::diagonals_cross(6, {0, 3}, {2, 5}));
    CHECK_FALSE(kinn::diagonals_cross(6, {0, 2}, {2, 4}));  // shared endpoint
    CHECK_FALSE(kinn::diagonals_cross(6, {0, 2}, {3, 5}));
    CHECK_FALSE(kinn::diagonals_cross(8, {0, 4}, {1, 3}));  // nested
    CHECK(kinn::diagonals_cross(8, {1, 4}, {2, 6}));
    CHECK_THROWS_AS(kinn::diagonals_cross(4, {0, 1}, {1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(kinn::diagonals_cross(4, {0, 3}, {1, 3}), std::invalid_argument);  // wraps adjacent
    CHECK_THROWS_AS(kinn::diagonals_cross(4, {0, 2}, {1, 5}), std::invalid_argument);  // out of range
}

TEST_CASE("dissection validation") {
    CHECK_THROWS_AS(Dissection(2), std::invalid_argument);
    CHECK_THROWS_AS(Dissection(4, {{0, 2}, {1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Dissection(5, {{0, 2}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Dissection(5, {{0, 4}}), std::invalid_argument);  // adjacent via wrap

    // canonical sort regardless of input order
    const Dissection d(6, {{1, 3}, {0, 3}});
    CHECK(d.diagonals() == std::vector<Diagonal>{{0, 3}, {1, 3}});
    CHECK(d.contains({1, 3}));
    CHECK_FALSE(d.contains({2, 4}));
}

TEST_CASE("faces of small dissections") {
    CHECK(Dissection(4, {{0, 2}}).faces() == std::vector<Face>{{0, 1, 2}, {0, 2, 3}});
    CHECK(Dissection(5).faces() == std::vector<Face>{{0, 1, 2, 3, 4}});
    CHECK(Dissection(5, {{0, 2}, {0, 3}}).faces() ==
          std::vector<Face>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
    // a face bounded by diagonals only
    CHECK(Dissection(6, {{0, 2}, {2, 4}, {0, 4}}).faces() ==
          std::vector<Face>{{0, 1, 2}, {0, 2, 4}, {0, 4, 5}, {2, 3, 4}});
}

TEST_CASE("face count and edge conservation") {
    const auto check_posts = [](const Dissection& d) {
        const auto faces = d.faces();
        CHECK(faces.size() == d.diagonals().size() + 1);
        std::size_t boundary_total = 0;
        for (const Face& f : faces) {
            CHECK(f.size() >= 3);
            CHECK(std::is_sorted(f.begin(), f.end()));
            boundary_total += f.size();
        }
        CHECK(boundary_total == d.n() + 2 * d.diagonals().size());
    };
    check_posts(Dissection(3));
    check_posts(Dissection(7, {{1, 5}}));
    check_posts(Dissection(9, {{0, 2}, {2, 7}, {3, 7}, {4, 6}}));
    check_posts(figure_dissection());
}

TEST_CASE("rotation equivariance of faces") {
    const Dissection d = figure_dissection();
    for (int shift = 1; shift < d.n(); ++shift) {
        const Dissection r = d.rotated(shift);
        auto expected = d.faces();
        for (Face& f : expected) {
            for (auto& v : f) v = (v + shift) % d.n();
            std::sort(f.begin(), f.end());
        }
        std::sort(expected.begin(), expected.end());
        CHECK(r.faces() == expected);
    }
}

TEST_CASE("as_k_in_n") {
    const KInN quad = as_k_in_n(Dissection(5, {{0, 2}}), 4);
    CHECK(quad.marked_face() == Face{0, 2, 3, 4});
    CHECK(quad.k() == 4);

    const KInN marked_triangle = as_k_in_n(Dissection(4, {{0, 2}}), 3, Face{0, 1, 2});
    CHECK(marked_triangle.marked_face() == Face{0, 1, 2});

    // whole polygon marked when k = n
    CHECK(as_k_in_n(Dissection(6), 6).marked_face() == Face{0, 1, 2, 3, 4, 5});

    // valid 4-in-6: faces (0,1,2), (0,2,3), (0,3,4,5)
    const KInN six = as_k_in_n(Dissection(6, {{0, 2}, {0, 3}}), 4);
    CHECK(six.marked_face() == Face{0, 3, 4, 5});

    CHECK_THROWS_AS(as_k_in_n(Dissection(5, {{0, 2}}), 3), std::invalid_argument);  // needs a mark
    CHECK_THROWS_AS(as_k_in_n(Dissection(5, {{0, 2}}), 5), std::invalid_argument);  // diagonal count
    CHECK_THROWS_AS(as_k_in_n(Dissection(5, {{0, 2}}), 2), std::domain_error);
    // two non-triangle faces (sizes 3,4,4) cannot form a 5-in-7
    CHECK_THROWS_AS(as_k_in_n(Dissection(7, {{0, 2}, {3, 6}}), 5), std::invalid_argument);
    // mark must match the k-gon
    CHECK_THROWS_AS(as_k_in_n(Dissection(5, {{0, 2}}), 4, Face{0, 1, 2}), std::invalid_argument);
    // mark must be a face
    CHECK_THROWS_AS(as_k_in_n(Dissection(4, {{0, 2}}), 3, Face{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("serialize is canonical") {
    CHECK(kinn::serialize(Dissection(4, {{0, 2}})) == R"({"n":4,"diagonals":[[0,2]]})");
    CHECK(kinn::serialize(Dissection(3)) == R"({"n":3,"diagonals":[]})");
    const KInN x = as_k_in_n(figure_dissection(), 5);
    CHECK(kinn::serialize(x) == kPentagonIn12);
}

TEST_CASE("parse round trips") {
    const auto square = kinn::parse(R"({"n":4,"diagonals":[[0,2]]})");
    REQUIRE(std::holds_alternative<Dissection>(square));
    CHECK(std::get<Dissection>(square) == Dissection(4, {{0, 2}}));

    const auto fig = kinn::parse(kPentagonIn12);
    REQUIRE(std::holds_alternative<KInN>(fig));
    CHECK(kinn::serialize(std::get<KInN>(fig)) == kPentagonIn12);
    CHECK(std::get<KInN>(fig).marked_face() == Face{0, 1, 5, 7, 9});
}

TEST_CASE("parse rejects malformed input") {
    using kinn::parse;
    CHECK_THROWS_AS(parse(R"({"n":4,"diagonals":[[0,2],[1,3]]})"), std::invalid_argument);  // crossing
    CHECK_THROWS_AS(parse("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse("[1,2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"diagonals":[],"n":4})"), std::invalid_argument);   // key order
    CHECK_THROWS_AS(parse(R"({"n":4})"), std::invalid_argument);                  // missing key
    CHECK_THROWS_AS(parse(R"({"n":4,"diagonals":[],"x":1})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"n":2,"diagonals":[]})"), std::invalid_argument);
    CHECK_THROWS_AS(parse(R"({"n":4,"diagonals":[[2,0]]})"), std::invalid_argument);  // a >= b
    CHECK_THROWS_AS(parse(R"({"n":4,"diagonals":[[0,7]]})"), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(parse(R"({"n":6,"diagonals":[[1,3],[0,2]]})"), std::invalid_argument);  // unsorted
    CHECK_THROWS_AS(parse(R"({"n":6,"diagonals":[[0,2]],"marked_face":[3,0,4,5]})"),
                    std::invalid_argument);  // mark not in canonical rotation
    CHECK_THROWS_AS(parse(R"({"n":5,"diagonals":[[0,2]],"marked_face":[0,1,2]})"),
                    std::invalid_argument);  // mark is not the k-gon
    // message carries the cause
    try {
        parse(R"({"n":4,"diagonals":[[0,2],[1,3]]})");
        FAIL("expected a throw");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("cross") != std::string::npos);
    }
}
