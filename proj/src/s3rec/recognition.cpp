#include "s3rec/recognition.hpp"

#include "s3rec/error.hpp"
#include "s3rec/surface_builder.hpp"

#include <algorithm>

namespace s3rec {

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::YesSphere: return "YesSphere";
    case Verdict::NoSphere: return "NoSphere";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* certificate_name(Certificate c)
{
    switch (c) {
    case Certificate::VertexStar: return "VertexStar";
    case Certificate::PuncturedBall: return "PuncturedBall";
    case Certificate::AlmostNormalSphere: return "AlmostNormalSphere";
    case Certificate::Uncertified: return "Uncertified";
    }
    return "?";
}

namespace {

constexpr const char* kPuncturedBallTrust =
    "a component with two or more normal boundary spheres is a punctured ball";
constexpr const char* kAlmostNormalTrust =
    "a component with one boundary sphere containing an almost normal sphere is a ball";

std::string homology_summary(const HomologyGroups& h)
{
    std::string s;
    for (int k = 0; k < 4; ++k) s += (k ? ", H" : "H") + std::to_string(k) + " = " + to_string(h.groups[k]);
    return s;
}

NormalVector sum_of(const std::vector<NormalVector>& vs, CoordMode mode, int tets)
{
    auto s = NormalVector::zero(mode, tets);
    for (const auto& v : vs) s += v.as_mode(mode);
    return s;
}

// The members are pairwise disjoint: their sum instantiates as exactly them.
bool disjoint_family(const Triangulation& tri, std::vector<NormalVector> members)
{
    if (members.empty()) return true;
    const CoordMode mode = members.front().mode();
    auto sum = sum_of(members, mode, tri.size());
    if (!is_embeddable(sum)) return false;
    std::sort(members.begin(), members.end());
    return components(tri, sum) == members;
}

bool fits_family(const Triangulation& tri, const std::vector<NormalVector>& family, const NormalVector& a)
{
    std::vector<NormalVector> members;
    for (const auto& f : family) members.push_back(f.as_mode(a.mode()));
    members.push_back(a);
    return disjoint_family(tri, members);
}

int octagon_tet(const NormalVector& a)
{
    for (int t = 0; t < a.tetrahedra(); ++t)
        for (int k = 7; k < 10; ++k)
            if (a.at(t, k) != 0) return t;
    return -1;
}

// The sphere family: non-vertex-linking spheres in order of weight, each
// kept when disjoint from those already chosen, then every vertex link.
std::vector<NormalVector> choose_family(const Triangulation& tri, const std::vector<NormalVector>& spheres)
{
    std::vector<std::pair<Integer, NormalVector>> ordered;
    for (const auto& s : spheres)
        if (!is_vertex_linking(tri, s)) ordered.emplace_back(weight(tri, s), s);
    std::sort(ordered.begin(), ordered.end());
    std::vector<NormalVector> family;
    for (const auto& [w, s] : ordered)
        if (fits_family(tri, family, s)) family.push_back(s);
    for (int c = 0; c < tri.vertex_count(); ++c) {
        auto link = vertex_linking_vector(tri, c);
        if (fits_family(tri, family, link)) family.push_back(link);
    }
    std::sort(family.begin(), family.end());
    return family;
}

}  // namespace

RecognitionReport recognize(const Triangulation& tri, const RecognitionOptions& opt)
{
    RecognitionReport r;
    auto finish = [&](Verdict v, std::string reason) {
        r.verdict = v;
        r.reason = std::move(reason);
        r.trace.push_back({"verdict", std::string(verdict_name(v)) + (r.reason.empty() ? "" : ": " + r.reason)});
        return r;
    };

    r.manifold = is_closed_3_manifold(tri);
    r.trace.push_back({"manifold", reason_name(r.manifold.reason)});
    if (!r.manifold.ok()) return finish(Verdict::NoSphere, std::string("manifold: ") + reason_name(r.manifold.reason));

    r.orientable = is_orientable(tri);
    r.trace.push_back({"orientability", *r.orientable ? "orientable" : "non-orientable"});
    if (!*r.orientable) return finish(Verdict::NoSphere, "orientability: non-orientable");

    r.homology = homology(tri);
    r.trace.push_back({"homology", homology_summary(*r.homology)});
    if (!r.homology->is_sphere_homology())
        return finish(Verdict::NoSphere, "homology: H1 = " + to_string(r.homology->groups[1]) +
                                             ", H2 = " + to_string(r.homology->groups[2]));

    EnumerationOptions eo{opt.budget, opt.threads};
    const auto normal_sys = matching_matrix(tri, CoordMode::Normal);
    SolutionSet basis;
    try {
        basis = hilbert_basis(normal_sys, eo);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ResourceBudgetExceeded) throw;
        r.trace.push_back({"normal enumeration", e.what()});
        return finish(Verdict::Inconclusive, "budget: normal enumeration");
    }
    r.provenance = basis.provenance;
    r.normal_basis_size = static_cast<long>(basis.members.size());
    r.trace.push_back({"normal enumeration", std::to_string(basis.members.size()) + " fundamental solutions over " +
                                                 std::to_string(basis.cells) + " cells"});

    r.normal_spheres = find_spheres(tri, basis, SphereKind::Normal);
    long linking = 0;
    for (const auto& s : r.normal_spheres) linking += is_vertex_linking(tri, s);
    r.trace.push_back({"normal spheres", std::to_string(r.normal_spheres.size()) + " found, " + std::to_string(linking) +
                                             " vertex-linking"});

    r.family = choose_family(tri, r.normal_spheres);
    auto cut = cut_along_family(tri, r.family);
    r.trace.push_back({"cut", std::to_string(r.family.size()) + " disjoint spheres, " +
                                  std::to_string(cut.components.size()) + " components"});

    std::optional<std::vector<NormalVector>> almost;
    bool uncertified = false;
    for (std::size_t c = 0; c < cut.components.size(); ++c) {
        ComponentReport cr;
        cr.tetrahedra = cut.components[c].size();
        cr.tag = cut.tags[c];
        cr.boundary = cut.boundary[c];
        cr.vertices = cut.vertices[c];
        if (cr.boundary.size() >= 2) {
            cr.certificate = Certificate::PuncturedBall;
            r.trust_points.push_back("component " + std::to_string(c) + ": " + kPuncturedBallTrust);
        } else if (cr.tag.kind == ComponentTag::Kind::VertexStar) {
            cr.certificate = Certificate::VertexStar;
        } else {
            if (!almost) {
                try {
                    auto ab = hilbert_basis(matching_matrix(tri, CoordMode::AlmostNormal), eo);
                    r.almost_basis_size = static_cast<long>(ab.members.size());
                    almost = find_spheres(tri, ab, SphereKind::OctagonalAlmostNormal);
                    r.trace.push_back({"almost normal enumeration", std::to_string(ab.members.size()) +
                                                                        " fundamental solutions, " +
                                                                        std::to_string(almost->size()) + " octagonal spheres"});
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::ResourceBudgetExceeded) throw;
                    r.trace.push_back({"almost normal enumeration", e.what()});
                    return finish(Verdict::Inconclusive, "budget: almost normal enumeration");
                }
            }
            for (const auto& a : *almost) {
                const int t = octagon_tet(a);
                if (cut.central_component[t] != static_cast<int>(c)) continue;
                if (!fits_family(tri, r.family, a)) continue;
                cr.certificate = Certificate::AlmostNormalSphere;
                cr.witness = a;
                r.trust_points.push_back("component " + std::to_string(c) + ": " + kAlmostNormalTrust);
                break;
            }
            if (cr.certificate == Certificate::Uncertified) uncertified = true;
        }
        r.trace.push_back({"component " + std::to_string(c),
                           std::string(certificate_name(cr.certificate)) + ", " + std::to_string(cr.boundary.size()) +
                               " boundary spheres, " + std::to_string(cr.tetrahedra) + " tetrahedra"});
        r.components.push_back(std::move(cr));
    }
    if (uncertified)
        return finish(Verdict::Inconclusive,
                      "component with one boundary sphere and no almost normal sphere among the fundamental solutions");
    return finish(Verdict::YesSphere, "");
}

VerifyResult verify_certificate(const Triangulation& tri, const RecognitionReport& r)
{
    auto fail = [](std::string step) { return VerifyResult{false, std::move(step)}; };

    auto mc = is_closed_3_manifold(tri);
    if (mc.reason != r.manifold.reason) return fail("manifold");
    if (!mc.ok()) return r.verdict == Verdict::NoSphere ? VerifyResult{} : fail("manifold");

    if (!r.orientable) return r.verdict == Verdict::Inconclusive ? VerifyResult{} : fail("orientability");
    if (*r.orientable != is_orientable(tri)) return fail("orientability");
    if (!*r.orientable) return r.verdict == Verdict::NoSphere ? VerifyResult{} : fail("orientability");

    if (!r.homology) return r.verdict == Verdict::Inconclusive ? VerifyResult{} : fail("homology");
    auto h = homology(tri);
    if (!(h == *r.homology)) return fail("homology");
    if (!h.is_sphere_homology()) return r.verdict == Verdict::NoSphere ? VerifyResult{} : fail("homology");
    if (r.verdict == Verdict::NoSphere) return fail("verdict");
    if (r.verdict == Verdict::Inconclusive && r.family.empty()) return {};

    if (r.provenance != system_hash(matching_matrix(tri, CoordMode::Normal))) return fail("provenance");

    const int per = coords_per_tet(CoordMode::Normal);
    for (std::size_t i = 0; i < r.family.size(); ++i) {
        const auto& s = r.family[i];
        const std::string step = "family[" + std::to_string(i) + "]";
        if (s.mode() != CoordMode::Normal || static_cast<int>(s.size()) != per * tri.size()) return fail(step + ": length");
        if (!satisfies_matching(tri, s)) return fail(step + ": matching equations");
        if (!is_admissible(s, CoordMode::Normal, tri.size())) return fail(step + ": admissibility");
        if (!is_normal_two_sphere(tri, s)) return fail(step + ": not a normal sphere");
    }
    if (!disjoint_family(tri, r.family)) return fail("family: not disjoint");
    for (int c = 0; c < tri.vertex_count(); ++c)
        if (std::find(r.family.begin(), r.family.end(), vertex_linking_vector(tri, c)) == r.family.end())
            return fail("family: vertex link " + std::to_string(c) + " missing");

    auto cut = cut_along_family(tri, r.family);
    if (cut.components.size() != r.components.size()) return fail("cut: component count");
    bool all_certified = true;
    for (std::size_t c = 0; c < cut.components.size(); ++c) {
        const auto& cr = r.components[c];
        const std::string step = "component " + std::to_string(c);
        if (cr.tetrahedra != cut.components[c].size()) return fail(step + ": size");
        if (!(cr.boundary == cut.boundary[c])) return fail(step + ": boundary");
        if (!(cr.tag == cut.tags[c])) return fail(step + ": tag");
        for (const auto& b : boundary_surfaces(cut.components[c]))
            if (!b.is_sphere()) return fail(step + ": boundary is not a sphere");
        switch (cr.certificate) {
        case Certificate::PuncturedBall:
            if (cut.boundary[c].size() < 2) return fail(step + ": punctured ball needs two boundary spheres");
            break;
        case Certificate::VertexStar:
            if (cut.tags[c].kind != ComponentTag::Kind::VertexStar || cut.boundary[c].size() != 1)
                return fail(step + ": not a vertex star");
            break;
        case Certificate::AlmostNormalSphere: {
            if (!cr.witness) return fail(step + ": missing witness");
            const auto& a = *cr.witness;
            if (a.mode() != CoordMode::AlmostNormal || static_cast<int>(a.size()) != 10 * tri.size())
                return fail(step + ": witness length");
            if (!satisfies_matching(tri, a)) return fail(step + ": witness matching equations");
            if (!is_admissible(a, CoordMode::AlmostNormal, tri.size())) return fail(step + ": witness admissibility");
            if (!is_octagonal_almost_normal_sphere(tri, a)) return fail(step + ": witness is not an almost normal sphere");
            if (!fits_family(tri, r.family, a)) return fail(step + ": witness meets the family");
            if (cut.central_component[octagon_tet(a)] != static_cast<int>(c)) return fail(step + ": witness elsewhere");
            break;
        }
        case Certificate::Uncertified:
            all_certified = false;
            break;
        }
    }
    if (r.verdict == Verdict::YesSphere && !all_certified) return fail("verdict");
    return {};
}

}  // namespace s3rec
