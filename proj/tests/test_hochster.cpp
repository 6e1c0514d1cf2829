#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>

#include "test_support.hpp"
#include "topcoh/errors.hpp"
#include "topcoh/hochster.hpp"

using namespace topcoh;
using ts::GF;
using ts::QQ;

namespace {

std::uint32_t mask_of(std::initializer_list<int> vertices) {
    std::uint32_t m = 0;
    for (int v : vertices) m |= std::uint32_t(1) << v;
    return m;
}

// Minimal 6-vertex triangulation of the real projective plane. Every edge
// lies in exactly two of these triangles and the Euler characteristic is 1.
const std::vector<std::uint32_t> kProjectivePlaneFacets = {
    mask_of({0, 1, 2}), mask_of({0, 1, 3}), mask_of({0, 2, 4}), mask_of({0, 3, 5}),
    mask_of({0, 4, 5}), mask_of({1, 2, 5}), mask_of({1, 3, 4}), mask_of({1, 4, 5}),
    mask_of({2, 3, 4}), mask_of({2, 3, 5}),
};

const std::vector<std::string> kProjectivePlaneIdeal = {
    "x*y*u", "x*y*v", "x*z*w", "x*z*v", "x*w*u",
    "y*z*w", "y*z*u", "y*w*v", "z*u*v", "w*u*v",
};

int rank_at(const TopRankReport& report, const std::vector<int>& degree) {
    for (const GradedRank& r : report.ranks)
        if (r.degree == degree) return r.rank;
    FAIL("degree not present in report");
    return -1;
}

} // namespace

TEST_CASE("complexes from face lists") {
    auto C = SimplicialComplex::from_faces(3, {0b011, 0b001, 0b011, 0b000});
    CHECK(C.facets() == std::vector<std::uint32_t>{0b011});
    CHECK(C.dimension() == 1);
    CHECK(C.has_face(0b000));
    CHECK(C.has_face(0b010));
    CHECK_FALSE(C.has_face(0b100));
    CHECK(C.faces_of_size(1) == std::vector<std::uint32_t>{0b001, 0b010});
    CHECK(C.faces_of_size(2) == std::vector<std::uint32_t>{0b011});
    CHECK(C.faces_of_size(3).empty());

    auto empty_face_only = SimplicialComplex::from_faces(2, {0});
    CHECK(empty_face_only.dimension() == -1);
    auto void_complex = SimplicialComplex::from_faces(2, {});
    CHECK(void_complex.dimension() == -2);
    CHECK_FALSE(void_complex.has_face(0));

    CHECK_THROWS_AS(SimplicialComplex::from_faces(-1, {}), InvalidArgumentError);
    CHECK_THROWS_AS(SimplicialComplex::from_faces(32, {}), InvalidArgumentError);
}

TEST_CASE("Stanley-Reisner complexes") {
    auto R = QQ({"x", "y"});
    auto two_points = stanley_reisner(ts::I(R, {"x*y"}));
    CHECK(two_points.facets() == std::vector<std::uint32_t>{0b01, 0b10});
    CHECK(two_points.dimension() == 0);

    auto point = stanley_reisner(ts::I(R, {"x"}));
    CHECK(point.facets() == std::vector<std::uint32_t>{0b10});

    auto full = stanley_reisner(Ideal::zero(R));
    CHECK(full.facets() == std::vector<std::uint32_t>{0b11});

    CHECK_THROWS_AS(stanley_reisner(Ideal::unit(R)), InvalidArgumentError);
    CHECK_THROWS_AS(stanley_reisner(ts::I(R, {"x + y"})), InvalidArgumentError);
    CHECK_THROWS_AS(stanley_reisner(ts::I(R, {"x^2"})), InvalidArgumentError);
}

TEST_CASE("links inside the hollow triangle") {
    auto R = QQ({"x", "y", "z"});
    auto circle = stanley_reisner(ts::I(R, {"x*y*z"}));
    CHECK(circle.facets() == std::vector<std::uint32_t>{0b011, 0b101, 0b110});
    CHECK(circle.dimension() == 1);

    auto around_vertex = link(circle, 0b001);
    CHECK(around_vertex.facets() == std::vector<std::uint32_t>{0b010, 0b100});
    auto around_edge = link(circle, 0b011);
    CHECK(around_edge.facets() == std::vector<std::uint32_t>{0});
    CHECK(around_edge.dimension() == -1);
    CHECK_THROWS_AS(link(circle, 0b111), InvalidArgumentError);
}

TEST_CASE("reduced cohomology of small complexes") {
    // The complex {emptyset} carries a single class in degree -1.
    auto empty_face_only = SimplicialComplex::from_faces(1, {0});
    CHECK(reduced_cohomology_ranks(empty_face_only, 0) == std::vector<int>{1});

    auto two_points = SimplicialComplex::from_faces(2, {0b01, 0b10});
    CHECK(reduced_cohomology_ranks(two_points, 0) == std::vector<int>{0, 1});

    auto circle = SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110});
    CHECK(reduced_cohomology_ranks(circle, 0) == std::vector<int>{0, 0, 1});
    CHECK(reduced_cohomology_ranks(circle, 5) == std::vector<int>{0, 0, 1});

    auto solid_triangle = SimplicialComplex::from_faces(3, {0b111});
    CHECK(reduced_cohomology_ranks(solid_triangle, 0) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("projective plane detects the characteristic") {
    auto R = QQ({"x", "y", "z", "w", "u", "v"});
    auto I = ts::I(R, kProjectivePlaneIdeal);
    auto C = stanley_reisner(I);

    auto expected = kProjectivePlaneFacets;
    std::sort(expected.begin(), expected.end());
    auto got = C.facets();
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    CHECK(C.dimension() == 2);
    CHECK(C.faces_of_size(2).size() == 15);  // complete 1-skeleton
    CHECK(C.faces_of_size(3).size() == 10);
    CHECK(krull_dim(I) == 3);

    CHECK(reduced_cohomology_ranks(C, 0) == std::vector<int>{0, 0, 0, 0});
    CHECK(reduced_cohomology_ranks(C, 2) == std::vector<int>{0, 0, 1, 1});
    CHECK(reduced_cohomology_ranks(C, 7) == std::vector<int>{0, 0, 0, 0});

    // Links of vertices are circles, so H^3 survives in every characteristic,
    // but its rank in multidegree zero is the torsion signature of the plane.
    const std::vector<int> zero(6, 0);
    std::vector<int> at_vertex(6, 0);
    at_vertex[0] = -1;

    auto over_q = top_local_cohomology_ranks(I);
    CHECK(over_q.d == 3);
    CHECK(over_q.nonvanishing);
    CHECK(rank_at(over_q, zero) == 0);
    CHECK(rank_at(over_q, at_vertex) == 1);

    auto R2 = GF(2, {"x", "y", "z", "w", "u", "v"});
    auto over_f2 = top_local_cohomology_ranks(ts::I(R2, kProjectivePlaneIdeal));
    CHECK(over_f2.d == 3);
    CHECK(over_f2.nonvanishing);
    CHECK(rank_at(over_f2, zero) == 1);
    CHECK(rank_at(over_f2, at_vertex) == 1);

    auto R7 = GF(7, {"x", "y", "z", "w", "u", "v"});
    auto over_f7 = top_local_cohomology_ranks(ts::I(R7, kProjectivePlaneIdeal));
    CHECK(rank_at(over_f7, zero) == 0);
}

TEST_CASE("graded ranks of the top module") {
    auto R = QQ({"x", "y"});
    auto report = top_local_cohomology_ranks(ts::I(R, {"x*y"}));
    CHECK(report.d == 1);
    CHECK(report.nonvanishing);
    CHECK(report.ranks.size() == 4);  // all squarefree non-positive degrees
    CHECK(rank_at(report, {0, 0}) == 1);
    CHECK(rank_at(report, {-1, 0}) == 1);
    CHECK(rank_at(report, {0, -1}) == 1);
    CHECK(rank_at(report, {-1, -1}) == 0);

    auto R1 = QQ({"x"});
    auto h0 = top_local_cohomology_ranks(ts::I(R1, {"x"}));
    CHECK(h0.d == 0);
    CHECK(rank_at(h0, {0}) == 1);
    CHECK(rank_at(h0, {-1}) == 0);

    auto h1 = top_local_cohomology_ranks(Ideal::zero(R1));
    CHECK(h1.d == 1);
    CHECK(rank_at(h1, {0}) == 0);
    CHECK(rank_at(h1, {-1}) == 1);
}

TEST_CASE("explicit degree boxes") {
    auto R = QQ({"x", "y"});
    auto I = ts::I(R, {"x*y"});
    // The rank in a non-positive multidegree depends only on its support.
    auto boxed = top_local_cohomology_ranks(I, {{-2, 0}, {-3, -1}});
    REQUIRE(boxed.ranks.size() == 2);
    CHECK(boxed.ranks[0].degree == std::vector<int>{-3, -1});  // sorted by degree
    CHECK(rank_at(boxed, {-2, 0}) == 1);
    CHECK(rank_at(boxed, {-3, -1}) == 0);

    CHECK_THROWS_AS(top_local_cohomology_ranks(I, {{1, 0}}), InvalidArgumentError);
    CHECK_THROWS_AS(top_local_cohomology_ranks(I, {{0}}), InvalidArgumentError);
}
