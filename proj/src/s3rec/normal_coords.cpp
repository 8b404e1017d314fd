#include "s3rec/normal_coords.hpp"

#include "s3rec/error.hpp"

#include <sstream>

namespace s3rec {

DiskType DiskType::from_local(int tet, int local)
{
    if (local < 4) return {tet, DiskKind::Triangle, local};
    if (local < 7) return {tet, DiskKind::Quad, local - 4};
    return {tet, DiskKind::Octagon, local - 7};
}

int arc_count(int local, int face, int u)
{
    if (local < 4) return (local != face && u == local) ? 1 : 0;
    if (local < 7) return u == pairing_partner(local - 4, face) ? 1 : 0;
    return (u != pairing_partner(local - 7, face) && u != face) ? 1 : 0;
}

int edge_point_count(int local, int edge)
{
    int a = kEdgeVertices[edge][0], b = kEdgeVertices[edge][1];
    if (local < 4) return (local == a || local == b) ? 1 : 0;
    int k = local < 7 ? local - 4 : local - 7;
    bool same_block = in_first_block(k, a) == in_first_block(k, b);
    if (local < 7) return same_block ? 0 : 1;
    return same_block ? 2 : 1;
}

int disk_sides(int local) { return local < 4 ? 3 : local < 7 ? 4 : 8; }

bool NormalVector::is_zero() const
{
    for (const auto& x : coords_)
        if (x != 0) return false;
    return true;
}

Integer NormalVector::total_disks() const
{
    Integer s = 0;
    for (const auto& x : coords_) s += x;
    return s;
}

Integer NormalVector::octagon_total() const
{
    Integer s = 0;
    if (mode_ == CoordMode::AlmostNormal)
        for (int t = 0; t < tetrahedra(); ++t)
            for (int k = 7; k < 10; ++k) s += at(t, k);
    return s;
}

NormalVector NormalVector::as_mode(CoordMode mode) const
{
    if (mode == mode_) return *this;
    const int t = tetrahedra();
    NormalVector out = zero(mode, t);
    if (mode == CoordMode::Normal && octagon_total() != 0)
        throw Error(ErrorCode::InvalidArgument, "vector with octagons has no normal-mode form");
    for (int i = 0; i < t; ++i)
        for (int k = 0; k < 7; ++k) out.at(i, k) = at(i, k);
    return out;
}

NormalVector& NormalVector::operator+=(const NormalVector& o)
{
    if (o.mode_ != mode_ || o.coords_.size() != coords_.size())
        throw Error(ErrorCode::LengthMismatch, "adding vectors of different shapes");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

std::string NormalVector::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ' ';
        out << coords_[i];
    }
    return out.str();
}

MatchingSystem matching_matrix(const Triangulation& tri, CoordMode mode)
{
    const int per = coords_per_tet(mode);
    const auto gl = tri.gluings();
    MatchingSystem sys;
    sys.kind = mode == CoordMode::Normal ? MatchingSystem::Kind::Normal : MatchingSystem::Kind::AlmostNormal;
    sys.tetrahedra = tri.size();
    sys.matrix = IntegerMatrix(3 * static_cast<int>(gl.size()), per * tri.size());
    int row = 0;
    for (const auto& g : gl) {
        for (int u = 0; u < 4; ++u) {
            if (u == g.source_face) continue;
            int u2 = g.map[u];
            for (int local = 0; local < per; ++local) {
                sys.matrix(row, g.source_tet * per + local) += arc_count(local, g.source_face, u);
                sys.matrix(row, g.target_tet * per + local) -= arc_count(local, g.target_face, u2);
            }
            sys.origins.push_back({g.source_tet, g.source_face, u});
            ++row;
        }
    }
    return sys;
}

bool satisfies_matching(const Triangulation& tri, const NormalVector& v)
{
    if (static_cast<int>(v.size()) != coords_per_tet(v.mode()) * tri.size())
        throw Error(ErrorCode::LengthMismatch, "vector length does not match triangulation");
    const int per = coords_per_tet(v.mode());
    for (const auto& g : tri.gluings())
        for (int u = 0; u < 4; ++u) {
            if (u == g.source_face) continue;
            Integer s = 0;
            for (int local = 0; local < per; ++local) {
                s += arc_count(local, g.source_face, u) * v.at(g.source_tet, local);
                s -= arc_count(local, g.target_face, g.map[u]) * v.at(g.target_tet, local);
            }
            if (s != 0) return false;
        }
    return true;
}

NormalVector vertex_linking_vector(const Triangulation& tri, int vclass, CoordMode mode)
{
    if (vclass < 0 || vclass >= tri.vertex_count()) throw Error(ErrorCode::InvalidArgument, "vertex class out of range");
    auto v = NormalVector::zero(mode, tri.size());
    for (auto [t, c] : tri.corners(vclass)) v.at(t, c) += 1;
    return v;
}

bool is_admissible(const NormalVector& v, CoordMode mode, int tetrahedra)
{
    if (v.mode() != mode || static_cast<int>(v.size()) != coords_per_tet(mode) * tetrahedra)
        throw Error(ErrorCode::LengthMismatch, "vector length does not match coordinate mode");
    for (const auto& x : v.coords())
        if (x < 0) return false;
    int octagon_tets = 0;
    for (int t = 0; t < tetrahedra; ++t) {
        int kinds = 0;
        for (int k = 4; k < coords_per_tet(mode); ++k)
            if (v.at(t, k) != 0) ++kinds;
        if (kinds > 1) return false;
        if (mode == CoordMode::AlmostNormal) {
            for (int k = 7; k < 10; ++k)
                if (v.at(t, k) != 0) {
                    if (v.at(t, k) != 1) return false;
                    ++octagon_tets;
                }
        }
    }
    return mode == CoordMode::Normal || octagon_tets == 1;
}

bool is_embeddable(const NormalVector& v)
{
    const int per = coords_per_tet(v.mode());
    for (const auto& x : v.coords())
        if (x < 0) return false;
    for (int t = 0; t < v.tetrahedra(); ++t) {
        int kinds = 0;
        for (int k = 4; k < per; ++k)
            if (v.at(t, k) != 0) ++kinds;
        if (kinds > 1) return false;
    }
    return v.octagon_total() <= 1;
}

Integer weight(const Triangulation& tri, const NormalVector& v)
{
    if (static_cast<int>(v.size()) != coords_per_tet(v.mode()) * tri.size())
        throw Error(ErrorCode::LengthMismatch, "vector length does not match triangulation");
    const int per = coords_per_tet(v.mode());
    std::vector<bool> done(tri.edge_count(), false);
    Integer w = 0;
    for (int t = 0; t < tri.size(); ++t)
        for (int e = 0; e < 6; ++e) {
            int ec = tri.edge_class(t, e);
            if (done[ec]) continue;
            done[ec] = true;
            for (int local = 0; local < per; ++local)
                if (int c = edge_point_count(local, e)) w += c * v.at(t, local);
        }
    return w;
}

Integer euler_characteristic(const Triangulation& tri, const NormalVector& v)
{
    const int per = coords_per_tet(v.mode());
    Integer faces = v.total_disks();
    Integer sides = 0;
    for (int t = 0; t < tri.size(); ++t)
        for (int local = 0; local < per; ++local) sides += disk_sides(local) * v.at(t, local);
    Integer boundary_arcs = 0;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f) {
            if (tri.partner(t, f)) continue;
            for (int u = 0; u < 4; ++u) {
                if (u == f) continue;
                for (int local = 0; local < per; ++local) boundary_arcs += arc_count(local, f, u) * v.at(t, local);
            }
        }
    Integer edges = (sides + boundary_arcs) / 2;
    return weight(tri, v) - edges + faces;
}

}  // namespace s3rec
