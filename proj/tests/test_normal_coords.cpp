#include "support.hpp"

#include "s3rec/error.hpp"
#include "s3rec/normal_coords.hpp"
#include "s3rec/surface_builder.hpp"

#include <doctest.h>

using namespace s3rec;

namespace {

bool in_kernel(const MatchingSystem& sys, const NormalVector& v)
{
    const auto a = testing::to_rows(sys.matrix);
    for (const auto& row : a) {
        Integer s = 0;
        for (std::size_t j = 0; j < row.size(); ++j) s += row[j] * v.coords()[j];
        if (s != 0) return false;
    }
    return true;
}

NormalVector normal(std::vector<long> xs)
{
    IntVector c(xs.begin(), xs.end());
    return NormalVector(CoordMode::Normal, c);
}

}  // namespace

TEST_CASE("local disk geometry")
{
    for (int local = 0; local < 10; ++local) {
        CAPTURE(local);
        int arcs = 0, points = 0;
        for (int f = 0; f < 4; ++f)
            for (int u = 0; u < 4; ++u)
                if (u != f) arcs += arc_count(local, f, u);
        for (int e = 0; e < 6; ++e) points += edge_point_count(local, e);
        // Each side of the polygon is one arc and each corner one edge point.
        CHECK(arcs == disk_sides(local));
        CHECK(points == disk_sides(local));
    }
    CHECK(disk_sides(0) == 3);
    CHECK(disk_sides(4) == 4);
    CHECK(disk_sides(7) == 8);
    // Quad 0 separates {0,1} from {2,3}: it misses edges 01 and 23.
    CHECK(edge_point_count(4, edge_index(0, 1)) == 0);
    CHECK(edge_point_count(4, edge_index(2, 3)) == 0);
    CHECK(edge_point_count(7, edge_index(0, 1)) == 2);
    CHECK(edge_point_count(7, edge_index(0, 2)) == 1);
}

TEST_CASE("matching matrix shape and vertex links")
{
    for (const auto& name : testing::closed_corpus()) {
        CAPTURE(name);
        auto t = testing::load3(name);
        auto sys = matching_matrix(t, CoordMode::Normal);
        CHECK(sys.matrix.rows() == 6 * t.size());
        CHECK(sys.matrix.cols() == 7 * t.size());
        auto almost = matching_matrix(t, CoordMode::AlmostNormal);
        CHECK(almost.matrix.rows() == 6 * t.size());
        CHECK(almost.matrix.cols() == 10 * t.size());
        for (int v = 0; v < t.vertex_count(); ++v) {
            auto link = vertex_linking_vector(t, v);
            CHECK(in_kernel(sys, link));
            CHECK(satisfies_matching(t, link));
            CHECK(in_kernel(almost, vertex_linking_vector(t, v, CoordMode::AlmostNormal)));
            CHECK(euler_characteristic(t, link) == 2);
        }
    }
    auto open = testing::load3("one_tet_open.tri");
    CHECK(matching_matrix(open, CoordMode::Normal).matrix.rows() == 0);
}

TEST_CASE("vertex link weights in the 4-simplex boundary")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    for (int v = 0; v < 5; ++v) {
        auto link = vertex_linking_vector(t, v);
        CHECK(weight(t, link) == 4);          // four edges at each vertex
        CHECK(link.total_disks() == 4);       // one triangle per incident tetrahedron
    }
}

TEST_CASE("admissibility")
{
    auto ok = normal({1, 0, 0, 0, 2, 0, 0});
    CHECK(is_admissible(ok, CoordMode::Normal, 1));
    auto two_quads = normal({0, 0, 0, 0, 1, 1, 0});
    CHECK_FALSE(is_admissible(two_quads, CoordMode::Normal, 1));
    CHECK_FALSE(is_embeddable(two_quads));
    CHECK_THROWS_AS(is_admissible(ok, CoordMode::Normal, 2), Error);

    IntVector an(10, 0);
    an[7] = 1;
    NormalVector oct(CoordMode::AlmostNormal, an);
    CHECK(is_admissible(oct, CoordMode::AlmostNormal, 1));
    an[7] = 2;
    CHECK_FALSE(is_admissible(NormalVector(CoordMode::AlmostNormal, an), CoordMode::AlmostNormal, 1));
    an[7] = 1;
    an[4] = 1;
    CHECK_FALSE(is_admissible(NormalVector(CoordMode::AlmostNormal, an), CoordMode::AlmostNormal, 1));
}

TEST_CASE("mode conversion")
{
    auto t = testing::load3("lens_3_1.tri");
    auto link = vertex_linking_vector(t, 0);
    auto wide = link.as_mode(CoordMode::AlmostNormal);
    CHECK(wide.size() == 20);
    CHECK(wide.as_mode(CoordMode::Normal) == link);
    CHECK(wide.octagon_total() == 0);
}
