#include "support.hpp"

#include "s3rec/enumeration.hpp"
#include "s3rec/error.hpp"
#include "s3rec/surface_builder.hpp"

#include <doctest.h>

using namespace s3rec;

TEST_CASE("vertex links instantiate as spheres")
{
    for (const auto& name : testing::closed_corpus()) {
        CAPTURE(name);
        auto t = testing::load3(name);
        for (int v = 0; v < t.vertex_count(); ++v) {
            auto link = vertex_linking_vector(t, v);
            auto s = instantiate(t, link);
            REQUIRE(s.components.size() == 1);
            CHECK(s.components[0].is_sphere());
            CHECK(s.components[0].two_sided);
            CHECK(s.euler_characteristic() == 2);
            CHECK(s.recovered_vector(CoordMode::Normal, t.size()) == link);
            CHECK(is_normal_two_sphere(t, link));
            CHECK(is_vertex_linking(t, link));
        }
    }
}

TEST_CASE("open tetrahedron: corner triangles are disks")
{
    auto t = testing::load3("one_tet_open.tri");
    auto link = vertex_linking_vector(t, 2);
    auto s = instantiate(t, link);
    REQUIRE(s.components.size() == 1);
    CHECK_FALSE(s.components[0].is_closed());
    CHECK(s.components[0].euler_characteristic() == 1);
    CHECK_FALSE(is_two_sphere(t, link));
}

TEST_CASE("sums of disjoint surfaces split into components")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto a = vertex_linking_vector(t, 0), b = vertex_linking_vector(t, 3);
    auto both = a + b;
    auto comps = components(t, both);
    std::vector<NormalVector> expected{a, b};
    std::sort(expected.begin(), expected.end());
    CHECK(comps == expected);
    CHECK(are_disjoint(t, a, b));
    CHECK(instantiate(t, both).euler_characteristic() == 4);
    // Two parallel copies of one link.
    CHECK(components(t, a + a) == std::vector<NormalVector>{a, a});
    CHECK_FALSE(is_two_sphere(t, a + a));
}

TEST_CASE("invalid vectors are rejected")
{
    auto t = testing::load3("lens_3_1.tri");
    IntVector c(14, 0);
    c[4] = 1;
    c[5] = 1;
    CHECK_THROWS_AS(instantiate(t, NormalVector(CoordMode::Normal, c)), Error);
    IntVector m(14, 0);
    m[0] = 1;
    try {
        instantiate(t, NormalVector(CoordMode::Normal, m));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidArgument);
    }
    CHECK_THROWS_AS(instantiate(t, NormalVector(CoordMode::Normal, IntVector(7, 0))), Error);
}

TEST_CASE("edge links of the 4-simplex boundary")
{
    // Each fundamental surface that is not a vertex link is the boundary of
    // a neighbourhood of an edge: a sphere made of quads and triangles.
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto basis = hilbert_basis(matching_matrix(t, CoordMode::Normal));
    long links = 0, spheres = 0;
    for (const auto& v : basis.vectors()) {
        if (is_vertex_linking(t, v)) ++links;
        if (is_normal_two_sphere(t, v)) ++spheres;
    }
    CHECK(links == 5);
    CHECK(spheres == 15);
}
