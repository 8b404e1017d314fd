#include "support.hpp"

#include "s3rec/io.hpp"
#include "s3rec/recognition.hpp"

#include <doctest.h>

using namespace s3rec;

namespace {

Triangulation parse3(const char* text) { return std::get<Triangulation>(parse_gluing_table(text)); }

const char* kOneTetSphereA = "dim 3\ncount 1\nsimplex 0: f0=(0,1023) f1=(0,1023) f2=(0,0132) f3=(0,0132)\n";
const char* kOneTetSphereB = "dim 3\ncount 1\nsimplex 0: f0=(0,1023) f1=(0,1023) f2=(0,1230) f3=(0,3012)\n";

}  // namespace

TEST_CASE("4-simplex boundary is the 3-sphere")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto r = recognize(t);
    CHECK(r.verdict == Verdict::YesSphere);
    CHECK(r.normal_basis_size == 15);
    for (const auto& c : r.components) CHECK(c.certificate != Certificate::Uncertified);
    auto v = verify_certificate(t, r);
    CHECK(v.ok);
    CHECK(v.failed_step.empty());
}

TEST_CASE("one-tetrahedron 3-spheres")
{
    for (const char* text : {kOneTetSphereA, kOneTetSphereB}) {
        auto t = parse3(text);
        auto r = recognize(t);
        CHECK(r.verdict == Verdict::YesSphere);
        CHECK(verify_certificate(t, r).ok);
    }
}

TEST_CASE("lens space is rejected by homology")
{
    auto t = testing::load3("lens_3_1.tri");
    auto r = recognize(t);
    CHECK(r.verdict == Verdict::NoSphere);
    CHECK(r.reason.rfind("homology", 0) == 0);
    REQUIRE(r.homology);
    CHECK(r.homology->groups[1] == HomologyGroup{0, {3}});
    CHECK(verify_certificate(t, r).ok);
}

TEST_CASE("other negative gates")
{
    auto s2s1 = testing::load3("s2xs1.tri");
    auto r = recognize(s2s1);
    CHECK(r.verdict == Verdict::NoSphere);
    CHECK(r.homology->groups[1] == HomologyGroup{1, {}});
    CHECK(verify_certificate(s2s1, r).ok);

    auto open = testing::load3("one_tet_open.tri");
    auto o = recognize(open);
    CHECK(o.verdict == Verdict::NoSphere);
    CHECK(o.reason == "manifold: BoundaryFace");
    CHECK_FALSE(o.homology);
    CHECK(verify_certificate(open, o).ok);
}

TEST_CASE("budget exhaustion is inconclusive")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto r = recognize(t, {2, 1});
    CHECK(r.verdict == Verdict::Inconclusive);
    // A larger budget resolves it the same way every time.
    CHECK(recognize(t, {1'000'000, 1}).verdict == Verdict::YesSphere);
}

TEST_CASE("reports are deterministic and relabelling-invariant in verdict")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto a = recognize(t, {1'000'000, 1});
    auto b = recognize(t, {1'000'000, 4});
    CHECK(a.family == b.family);
    CHECK(a.trace.size() == b.trace.size());
    auto r = relabel(t, {3, 0, 4, 1, 2});
    CHECK(recognize(r).verdict == Verdict::YesSphere);
}

TEST_CASE("tampered certificates fail verification")
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    auto r = recognize(t);

    auto flipped = r;
    flipped.verdict = Verdict::NoSphere;
    CHECK_FALSE(verify_certificate(t, flipped).ok);

    auto broken = r;
    REQUIRE_FALSE(broken.family.empty());
    broken.family[0].coords()[0] += 1;
    CHECK_FALSE(verify_certificate(t, broken).ok);

    auto missing = r;
    missing.family.pop_back();
    CHECK_FALSE(verify_certificate(t, missing).ok);

    auto wrong_hash = r;
    wrong_hash.provenance = "0000000000000000";
    CHECK_FALSE(verify_certificate(t, wrong_hash).ok);

    // A lens report presented for the 3-sphere does not verify.
    auto lens = recognize(testing::load3("lens_3_1.tri"));
    CHECK_FALSE(verify_certificate(t, lens).ok);
}
