#include "support.hpp"

#include "s3rec/cutting.hpp"
#include "s3rec/enumeration.hpp"
#include "s3rec/error.hpp"
#include "s3rec/homology.hpp"
#include "s3rec/surface_builder.hpp"

#include <doctest.h>

using namespace s3rec;

namespace {

bool trivial_homology(const Triangulation& t)
{
    auto h = cellular_homology(t);
    return h.groups[0] == HomologyGroup{1, {}} && h.groups[1] == HomologyGroup{} && h.groups[2] == HomologyGroup{} &&
           h.groups[3] == HomologyGroup{};
}

std::vector<NormalVector> non_vertex_spheres(const Triangulation& t)
{
    auto basis = hilbert_basis(matching_matrix(t, CoordMode::Normal));
    std::vector<NormalVector> out;
    for (const auto& s : find_spheres(t, basis, SphereKind::Normal))
        if (!is_vertex_linking(t, s)) out.push_back(s);
    return out;
}

}  // namespace

TEST_CASE("cutting the 4-simplex boundary along vertex links")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    for (int v = 0; v < 5; ++v) {
        CAPTURE(v);
        auto cut = cut_along(t, vertex_linking_vector(t, v));
        REQUIRE(cut.components.size() == 2);
        int stars = 0;
        for (std::size_t c = 0; c < 2; ++c) {
            CHECK(cut.boundary[c].size() == 1);
            auto bs = boundary_surfaces(cut.components[c]);
            REQUIRE(bs.size() == 1);
            CHECK(bs[0].is_sphere());
            CHECK(trivial_homology(cut.components[c]));
            if (cut.tags[c].kind == ComponentTag::Kind::VertexStar) {
                ++stars;
                CHECK(cut.tags[c].vertex_class == v);
                CHECK(cut.vertices[c] == std::vector<int>{v});
            }
        }
        CHECK(stars == 1);
        auto back = reglue(cut);
        CHECK(is_closed_3_manifold(back).ok());
        CHECK(homology(back).is_sphere_homology());
    }
}

TEST_CASE("cutting along edge links")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto spheres = non_vertex_spheres(t);
    CHECK(spheres.size() == 10);
    for (const auto& s : spheres) {
        auto cut = cut_along(t, s);
        REQUIRE(cut.components.size() == 2);
        for (const auto& c : cut.components) CHECK(trivial_homology(c));
        // The two sides hold the edge's two ends and the other three vertices.
        std::vector<std::size_t> sizes{cut.vertices[0].size(), cut.vertices[1].size()};
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::size_t>{2, 3});
        CHECK(homology(reglue(cut)).is_sphere_homology());
    }
}

TEST_CASE("lens space: non-vertex-linking spheres bound balls")
{
    auto t = testing::load3("lens_3_1.tri");
    auto spheres = non_vertex_spheres(t);
    REQUIRE_FALSE(spheres.empty());
    for (const auto& s : spheres) {
        auto cut = cut_along(t, s);
        REQUIRE(cut.components.size() == 2);
        int balls = 0;
        for (const auto& c : cut.components) balls += trivial_homology(c) ? 1 : 0;
        CHECK(balls == 1);
        auto back = reglue(cut);
        CHECK(homology(back) == homology(t));
    }
}

TEST_CASE("S2 x S1: a non-separating sphere")
{
    auto t = testing::load3("s2xs1.tri");
    auto spheres = non_vertex_spheres(t);
    bool found = false;
    for (const auto& s : spheres) {
        auto cut = cut_along(t, s);
        if (cut.components.size() == 1) {
            found = true;
            CHECK(cut.boundary[0].size() == 2);
            CHECK(boundary_surfaces(cut.components[0]).size() == 2);
            CHECK(homology(reglue(cut)) == homology(t));
        }
    }
    CHECK(found);
}

TEST_CASE("cutting along a family")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    std::vector<NormalVector> links;
    for (int v = 0; v < 5; ++v) links.push_back(vertex_linking_vector(t, v));
    auto cut = cut_along_family(t, links);
    CHECK(cut.components.size() == 6);
    int stars = 0;
    for (std::size_t c = 0; c < cut.components.size(); ++c)
        if (cut.tags[c].kind == ComponentTag::Kind::VertexStar) ++stars;
    CHECK(stars == 5);
    CHECK(homology(reglue(cut)).is_sphere_homology());
}

TEST_CASE("cut preconditions")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    try {
        cut_along(t, NormalVector::zero(CoordMode::Normal, 5));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotASphere);
    }
    try {
        cut_along(t, vertex_linking_vector(t, 0) + vertex_linking_vector(t, 1));
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotConnectedSurface);
    }
}
