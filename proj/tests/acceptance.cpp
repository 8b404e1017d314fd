// End-to-end acceptance checks: one PASS/FAIL line per criterion, exit code 1
// if any fails. Expected values come from independent computations in
// support.hpp or from hand-checked facts about the bundled inputs.

#include "support.hpp"

#include "s3rec/cutting.hpp"
#include "s3rec/enumeration.hpp"
#include "s3rec/homology.hpp"
#include "s3rec/plcurve.hpp"
#include "s3rec/recognition.hpp"
#include "s3rec/surface_builder.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace s3rec;

namespace {

int failures = 0;

// Every integer matrix produced along the way; their Smith forms are checked
// at the end.
std::vector<IntegerMatrix> produced;

void collect(const Triangulation& t)
{
    for (const auto& m : boundary_matrices(t)) produced.push_back(m);
}

// Runs one criterion; `body` returns an empty string on success, otherwise
// the reason for failure.
void criterion(int n, const char* title, double limit_seconds, const std::function<std::string()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
        why = body();
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > limit_seconds) why = "took longer than the time limit";
    if (!why.empty()) ++failures;
    std::printf("%s [%d] %s (%.2f s / %.0f s)%s%s\n", why.empty() ? "PASS" : "FAIL", n, title, secs, limit_seconds,
                why.empty() ? "" : ": ", why.c_str());
    std::fflush(stdout);
}

template <class T>
std::string str(const T& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string recognize_s3()
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    collect(t);
    auto r = recognize(t);
    if (r.verdict != Verdict::YesSphere) return std::string("verdict ") + verdict_name(r.verdict) + ": " + r.reason;
    auto v = verify_certificate(t, r);
    if (!v.ok) return "certificate rejected at " + v.failed_step;
    return {};
}

std::string recognize_lens()
{
    auto t = testing::load3("lens_3_1.tri");
    collect(t);
    auto r = recognize(t);
    if (r.verdict != Verdict::NoSphere) return std::string("verdict ") + verdict_name(r.verdict);
    if (!r.homology) return "no homology obstruction reported";
    const auto& h1 = r.homology->groups[1];
    if (!(h1 == HomologyGroup{0, {3}})) return "H1 = " + to_string(h1);
    if (!verify_certificate(t, r).ok) return "report rejected by verify";
    return {};
}

std::string matching_shapes()
{
    for (const auto& name : testing::closed_corpus()) {
        auto t = testing::load3(name);
        const int n = t.size();
        auto sys = matching_matrix(t, CoordMode::Normal);
        produced.push_back(sys.matrix);
        if (sys.matrix.rows() != 6 * n || sys.matrix.cols() != 7 * n)
            return name + ": matrix is " + str(sys.matrix.rows()) + "x" + str(sys.matrix.cols());
        // Vertex links, multiplied out independently of satisfies_matching.
        const auto rows = testing::to_rows(sys.matrix);
        for (int v = 0; v < t.vertex_count(); ++v) {
            const auto link = vertex_linking_vector(t, v);
            for (const auto& row : rows) {
                Integer dot = 0;
                for (int j = 0; j < 7 * n; ++j) dot += row[j] * link.coords()[j];
                if (dot != 0) return name + ": link of vertex " + str(v) + " is not in the kernel";
            }
        }
    }
    return {};
}

std::string hilbert_vs_brute_force()
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> vars(2, 8), eqs(1, 4);
    int compared = 0, nonempty = 0;
    for (int attempt = 0; attempt < 2000 && nonempty < 30; ++attempt) {
        const std::size_t n = vars(rng), m = std::min<std::size_t>(eqs(rng), n - 1);
        auto a = testing::random_system(rng, n, m);
        std::vector<std::vector<long>> expected;
        if (!testing::brute_force_hilbert_basis(a, n, n <= 6 ? 24 : 12, expected)) continue;
        std::vector<std::vector<long>> rows;
        for (const auto& r : a) {
            rows.emplace_back();
            for (const auto& x : r) rows.back().push_back(static_cast<long>(x));
        }
        auto got = hilbert_basis(MatchingSystem::plain(IntegerMatrix::from_rows(rows)));
        produced.push_back(IntegerMatrix::from_rows(rows));
        std::vector<std::vector<long>> members;
        for (const auto& v : got.members) {
            members.emplace_back();
            for (const auto& x : v) members.back().push_back(static_cast<long>(x));
        }
        std::sort(members.begin(), members.end());
        if (members != expected) return "mismatch on a " + str(m) + "x" + str(n) + " system";
        ++compared;
        if (!expected.empty()) ++nonempty;
    }
    if (nonempty < 20) return "only " + str(nonempty) + " systems with a nonempty basis were compared";
    std::printf("     compared %d systems, %d with a nonempty basis\n", compared, nonempty);
    return {};
}

// Every admissible vector with entries at most 3 (per tetrahedron: any
// triangles, at most one quad or octagon type, at most one octagon overall).
std::string sweep_mode(const std::string& name, CoordMode mode, long& checked)
{
    auto t = testing::load3(name);
    const int n = t.size(), w = coords_per_tet(mode);
    const auto rows = testing::to_rows(matching_matrix(t, mode).matrix);

    std::vector<std::vector<long>> local;  // admissible blocks for one tetrahedron
    for (int tri = 0; tri < 256; ++tri)
        for (int kind = -1; kind < w - 4; ++kind)
            for (int value = 1; value <= (kind < 0 ? 1 : 3); ++value) {
                std::vector<long> b(w, 0);
                for (int k = 0; k < 4; ++k) b[k] = tri >> (2 * k) & 3;
                if (kind >= 0) b[4 + kind] = value;
                local.push_back(b);
            }
    auto octagons = [&](const std::vector<long>& b) {
        long s = 0;
        for (int k = 7; k < w; ++k) s += b[k];
        return s;
    };

    // Row contributions of each block in each tetrahedron.
    std::vector<std::vector<std::vector<long>>> contrib(n);
    for (int i = 0; i < n; ++i)
        for (const auto& b : local) {
            std::vector<long> c(rows.size(), 0);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int k = 0; k < w; ++k) c[r] += static_cast<long>(rows[r][i * w + k]) * b[k];
            contrib[i].push_back(c);
        }

    std::vector<std::size_t> pick(n, 0);
    std::string failure;
    std::function<void(int, std::vector<long>&, long)> rec = [&](int i, std::vector<long>& sum, long oct) {
        if (!failure.empty()) return;
        if (i == n) {
            if (std::any_of(sum.begin(), sum.end(), [](long x) { return x != 0; })) return;
            IntVector coords;
            for (int j = 0; j < n; ++j)
                for (long x : local[pick[j]]) coords.push_back(x);
            if (std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; })) return;
            NormalVector v(mode, coords);
            ++checked;
            const auto linear = euler_characteristic(t, v);
            const auto surface = instantiate(t, v);
            if (surface.euler_characteristic() != linear)
                failure = name + ": " + v.to_string() + " chi " + str(linear) + " vs " + str(surface.euler_characteristic());
            else if (!(surface.recovered_vector(mode, n) == v))
                failure = name + ": round trip changed " + v.to_string();
            return;
        }
        for (std::size_t c = 0; c < local.size(); ++c) {
            const long o = octagons(local[c]);
            if (oct + o > 1) continue;
            pick[i] = c;
            for (std::size_t r = 0; r < sum.size(); ++r) sum[r] += contrib[i][c][r];
            rec(i + 1, sum, oct + o);
            for (std::size_t r = 0; r < sum.size(); ++r) sum[r] -= contrib[i][c][r];
        }
    };
    std::vector<long> sum(rows.size(), 0);
    rec(0, sum, 0);
    return failure;
}

std::string euler_sweep()
{
    long normal = 0, almost = 0;
    for (const char* name : {"one_tet_open.tri", "lens_3_1.tri", "s2xs1.tri"}) {
        if (testing::load3(name).size() > 3) continue;
        if (auto f = sweep_mode(name, CoordMode::Normal, normal); !f.empty()) return f;
        if (auto f = sweep_mode(name, CoordMode::AlmostNormal, almost); !f.empty()) return f;
    }
    std::printf("     %ld normal and %ld almost normal vectors checked\n", normal, almost);
    if (normal == 0 || almost == 0) return "sweep found no vectors";
    return {};
}

std::string tetrahedron_curves()
{
    auto f = testing::load2("tetrahedron_boundary.tri");
    int links = 0, quads = 0;
    for (const auto& c : enumerate_normal_curves(f, 4)) {
        const long w = curve_weight(f, c);
        const bool link = is_vertex_linking_curve(f, c);
        const auto cls = classify(f, c);
        if (w == 3 && link && cls.status == CurveStatus::NormalNotGeodesic)
            ++links;
        else if (w == 4 && !link && cls.status == CurveStatus::UnstablePLGeodesic)
            ++quads;
        else
            return "unexpected curve " + c.to_string() + " (" + curve_status_name(cls.status) + ")";
    }
    if (links != 4 || quads != 3) return str(links) + " vertex links and " + str(quads) + " quad curves";
    return {};
}

std::string cut_vertex_links()
{
    auto t = testing::load3("s3_boundary4simplex.tri");
    for (int v = 0; v < 5; ++v) {
        auto cut = cut_along(t, vertex_linking_vector(t, v));
        if (cut.components.size() != 2) return "vertex " + str(v) + ": " + str(cut.components.size()) + " components";
        int stars = 0;
        for (std::size_t c = 0; c < 2; ++c) {
            collect(cut.components[c]);
            if (cut.tags[c].kind == ComponentTag::Kind::VertexStar) ++stars;
            auto bs = boundary_surfaces(cut.components[c]);
            if (bs.size() != 1 || !bs[0].is_connected() || bs[0].euler_characteristic() != 2)
                return "vertex " + str(v) + ": component " + str(c) + " boundary is not one sphere";
        }
        if (stars != 1) return "vertex " + str(v) + ": " + str(stars) + " vertex stars";
        auto back = reglue(cut);
        collect(back);
        const auto h = homology(back);
        if (!(h.groups[0] == HomologyGroup{1, {}} && h.groups[1] == HomologyGroup{} && h.groups[2] == HomologyGroup{} &&
              h.groups[3] == HomologyGroup{1, {}}))
            return "vertex " + str(v) + ": reglued homology is not that of S3";
    }
    return {};
}

std::string s2xs1_and_smith()
{
    auto t = testing::load3("s2xs1.tri");
    collect(t);
    if (is_homology_sphere(t)) return "S2 x S1 passed as a homology sphere";
    if (!(homology(t).groups[1] == HomologyGroup{1, {}})) return "H1 = " + to_string(homology(t).groups[1]);
    collect(testing::load3("one_tet_open.tri"));
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dim(1, 7), entry(-9, 9);
    for (int i = 0; i < 100; ++i) {
        IntegerMatrix m(dim(rng), dim(rng));
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) m(r, c) = entry(rng);
        produced.push_back(m);
    }
    for (std::size_t i = 0; i < produced.size(); ++i)
        if (!testing::smith_identities_hold(produced[i], smith_normal_form(produced[i])))
            return "Smith witness identity fails on matrix " + str(i);
    std::printf("     Smith witnesses checked on %zu matrices\n", produced.size());
    return {};
}

}  // namespace

int main()
{
    criterion(1, "boundary of the 4-simplex is recognized as S3 with a verified certificate", 60, recognize_s3);
    criterion(2, "L(3,1) is rejected with H1 = Z/3", 5, recognize_lens);
    criterion(3, "matching matrices are 6t x 7t and contain every vertex link in their kernel", 60, matching_shapes);
    criterion(4, "Hilbert bases of random systems agree with exhaustive search", 600, hilbert_vs_brute_force);
    criterion(5, "linear and instantiated Euler characteristics agree; vectors round-trip", 600, euler_sweep);
    criterion(6, "tetrahedron boundary: 4 vertex-link curves not geodesic, 3 quad curves unstable", 10,
              tetrahedron_curves);
    criterion(7, "cutting S3 along each vertex link gives a vertex star and a ball; regluing restores S3", 60,
              cut_vertex_links);
    criterion(8, "S2 x S1 is not a homology sphere (H1 = Z); all Smith witnesses hold", 60, s2xs1_and_smith);
    std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
