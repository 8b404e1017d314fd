#include "support.hpp"

#include "s3rec/enumeration.hpp"
#include "s3rec/error.hpp"
#include "s3rec/surface_builder.hpp"

#include <doctest.h>

#include <random>

using namespace s3rec;

namespace {

IntegerMatrix from(const testing::Matrix& rows, std::size_t n)
{
    IntegerMatrix m(static_cast<int>(rows.size()), static_cast<int>(n));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(int(i), int(j)) = rows[i][j];
    return m;
}

std::vector<std::vector<long>> as_long(const std::vector<IntVector>& vs)
{
    std::vector<std::vector<long>> out;
    for (const auto& v : vs) {
        std::vector<long> w;
        for (const auto& x : v) w.push_back(static_cast<long>(x));
        out.push_back(w);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("plain systems: Hilbert basis against exhaustive search")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> vars(2, 8), eqs(1, 4);
    int compared = 0;
    for (int attempt = 0; attempt < 400 && compared < 25; ++attempt) {
        const std::size_t n = vars(rng), m = std::min<std::size_t>(eqs(rng), n - 1);
        auto a = testing::random_system(rng, n, m);
        std::vector<std::vector<long>> expected;
        if (!testing::brute_force_hilbert_basis(a, n, n <= 6 ? 24 : 12, expected)) continue;
        auto got = hilbert_basis(MatchingSystem::plain(from(a, n)));
        CAPTURE(n);
        CAPTURE(m);
        CHECK(as_long(got.members) == expected);
        ++compared;
    }
    CHECK(compared >= 20);
}

TEST_CASE("plain systems: vertex solutions are the extreme rays")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 6, m = 1 + trial % 3;
        auto a = testing::random_system(rng, n, std::min(m, n - 1));
        auto rays = testing::extreme_rays(a, n);
        std::vector<IntVector> expected(rays.begin(), rays.end());
        auto got = vertex_solutions(MatchingSystem::plain(from(a, n)));
        CHECK(as_long(got.members) == as_long(expected));
    }
}

TEST_CASE("known small monoid")
{
    // x + y = 2z: basis (2,0,1), (1,1,1), (0,2,1).
    auto sys = MatchingSystem::plain(IntegerMatrix::from_rows({{1, 1, -2}}));
    auto h = hilbert_basis(sys);
    CHECK(as_long(h.members) == std::vector<std::vector<long>>{{0, 2, 1}, {1, 1, 1}, {2, 0, 1}});
    auto v = vertex_solutions(sys);
    CHECK(as_long(v.members) == std::vector<std::vector<long>>{{0, 2, 1}, {2, 0, 1}});
}

TEST_CASE("4-simplex boundary: normal enumeration")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto sys = matching_matrix(t, CoordMode::Normal);
    CHECK(admissibility_cells(sys).size() == 243);  // 3^5 quad choices
    auto h = hilbert_basis(sys);
    CHECK(h.members.size() == 15);
    CHECK(h.provenance == system_hash(sys));
    CHECK(std::is_sorted(h.members.begin(), h.members.end()));
    for (const auto& v : h.vectors()) {
        CHECK(satisfies_matching(t, v));
        CHECK(is_admissible(v, CoordMode::Normal, t.size()));
    }
    for (int c = 0; c < 5; ++c) {
        auto link = vertex_linking_vector(t, c);
        CHECK(std::find(h.members.begin(), h.members.end(), link.coords()) != h.members.end());
    }
    auto spheres = find_spheres(t, h, SphereKind::Normal);
    CHECK(spheres.size() == 15);
}

TEST_CASE("almost normal cells")
{
    auto t = testing::load3("lens_3_1.tri");
    auto sys = matching_matrix(t, CoordMode::AlmostNormal);
    // Octagon tetrahedron (2 choices) x octagon kind (3) x quad kind elsewhere (3).
    CHECK(admissibility_cells(sys).size() == 18);
    auto h = hilbert_basis(sys);
    for (const auto& v : h.vectors()) {
        CHECK(v.octagon_total() == 1);
        CHECK(satisfies_matching(t, v));
        CHECK(is_admissible(v, CoordMode::AlmostNormal, t.size()));
    }
}

TEST_CASE("threads do not change the result")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto sys = matching_matrix(t, CoordMode::Normal);
    auto one = hilbert_basis(sys, {1'000'000, 1});
    auto four = hilbert_basis(sys, {1'000'000, 4});
    CHECK(one.members == four.members);
    CHECK(vertex_solutions(sys, {1'000'000, 1}).members == vertex_solutions(sys, {1'000'000, 3}).members);
}

TEST_CASE("budget exhaustion")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto sys = matching_matrix(t, CoordMode::Normal);
    try {
        hilbert_basis(sys, {3, 1});
        FAIL("no error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ResourceBudgetExceeded);
    }
}

TEST_CASE("provenance hash distinguishes systems")
{
    auto a = matching_matrix(testing::load3("lens_3_1.tri"), CoordMode::Normal);
    auto b = matching_matrix(testing::load3("s2xs1.tri"), CoordMode::Normal);
    CHECK(system_hash(a) != system_hash(b));
    CHECK(system_hash(a) == system_hash(matching_matrix(testing::load3("lens_3_1.tri"), CoordMode::Normal)));
    CHECK(system_hash(a).size() == 16);
}
