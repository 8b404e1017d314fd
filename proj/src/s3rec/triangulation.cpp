#include "s3rec/triangulation.hpp"

#include "s3rec/error.hpp"
#include "s3rec/union_find.hpp"

#include <algorithm>

namespace s3rec {

namespace {

std::string slot_name(int tet, int face)
{
    return "(" + std::to_string(tet) + "," + std::to_string(face) + ")";
}

// Sign of the arrangement (x0, x1, x2) relative to ascending order.
int arrangement_sign(int x0, int x1, int x2)
{
    int inv = (x0 > x1) + (x0 > x2) + (x1 > x2);
    return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

Triangulation Triangulation::build(int tetrahedra, const std::vector<FaceGluing>& gluings)
{
    if (tetrahedra < 0) throw Error(ErrorCode::InvalidArgument, "negative tetrahedron count");
    Triangulation tri;
    tri.adj_.assign(tetrahedra, {});

    auto set_slot = [&](int t, int f, int t2, const Perm4& map) {
        auto& slot = tri.adj_[t][f];
        if (slot) {
            if (slot->tet != t2 || !(slot->map == map))
                throw Error(ErrorCode::NonInvolutiveGluing,
                            "face " + slot_name(t, f) + " is glued inconsistently");
            return;
        }
        slot = FacePartner{t2, map};
    };

    for (const auto& g : gluings) {
        if (g.source_tet < 0 || g.source_tet >= tetrahedra || g.target_tet < 0 || g.target_tet >= tetrahedra ||
            g.source_face < 0 || g.source_face > 3 || g.target_face < 0 || g.target_face > 3)
            throw Error(ErrorCode::InvalidGluing, "face gluing index out of range");
        if (g.map[g.source_face] != g.target_face)
            throw Error(ErrorCode::InvalidGluing,
                        "gluing map of face " + slot_name(g.source_tet, g.source_face) +
                            " does not send it to face " + slot_name(g.target_tet, g.target_face));
        if (g.source_tet == g.target_tet && g.source_face == g.target_face)
            throw Error(ErrorCode::SelfGluedFace, "face " + slot_name(g.source_tet, g.source_face) + " glued to itself");
        set_slot(g.source_tet, g.source_face, g.target_tet, g.map);
        set_slot(g.target_tet, g.target_face, g.source_tet, g.map.inverse());
    }
    tri.compute_skeleton();
    return tri;
}

void Triangulation::compute_skeleton()
{
    const int n = size();
    UnionFind verts(4 * n);
    ParityUnionFind edges(6 * n);
    UnionFind comps(n);

    face_class_.assign(n, {-1, -1, -1, -1});
    face_sign_.assign(n, {1, 1, 1, 1});
    face_count_ = 0;
    boundary_faces_ = 0;

    for (int t = 0; t < n; ++t) {
        for (int f = 0; f < 4; ++f) {
            const auto& p = adj_[t][f];
            if (!p) {
                face_class_[t][f] = face_count_++;
                ++boundary_faces_;
                continue;
            }
            comps.unite(t, p->tet);
            for (int v = 0; v < 4; ++v)
                if (v != f) verts.unite(4 * t + v, 4 * p->tet + p->map[v]);
            for (int e = 0; e < 6; ++e) {
                int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                if (a == f || b == f) continue;
                int pa = p->map[a], pb = p->map[b];
                int rel = pa < pb ? 0 : 1;
                if (!edges.unite(6 * t + e, 6 * p->tet + edge_index(pa, pb), rel))
                    throw Error(ErrorCode::BadEdgeIdentification,
                                "edge " + std::to_string(a) + std::to_string(b) + " of tetrahedron " +
                                    std::to_string(t) + " is identified with itself in reverse");
            }
            if (face_class_[t][f] < 0) {
                int g = p->map[f];
                face_class_[t][f] = face_count_;
                face_class_[p->tet][g] = face_count_;
                face_sign_[t][f] = 1;
                std::array<int, 3> img{};
                int k = 0;
                for (int v = 0; v < 4; ++v)
                    if (v != f) img[k++] = p->map[v];
                face_sign_[p->tet][g] = arrangement_sign(img[0], img[1], img[2]);
                ++face_count_;
            }
        }
    }

    std::vector<int> labels;
    vertex_count_ = verts.labels(labels);
    vertex_class_.assign(n, {});
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) vertex_class_[t][v] = labels[4 * t + v];

    edge_class_.assign(n, {});
    edge_sign_.assign(n, {});
    std::vector<int> root_label(6 * n, -1);
    edge_count_ = 0;
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            int parity = 0;
            int r = edges.find(6 * t + e, parity);
            if (root_label[r] < 0) root_label[r] = edge_count_++;
            edge_class_[t][e] = root_label[r];
            edge_sign_[t][e] = parity == 0 ? 1 : -1;
        }
    edge_degree_.assign(edge_count_, 0);
    edge_boundary_.assign(edge_count_, false);
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            ++edge_degree_[edge_class_[t][e]];
            for (int f = 0; f < 4; ++f)
                if (f != kEdgeVertices[e][0] && f != kEdgeVertices[e][1] && !adj_[t][f])
                    edge_boundary_[edge_class_[t][e]] = true;
        }
    component_count_ = comps.labels(component_);
}

std::vector<std::array<int, 2>> Triangulation::corners(int vclass) const
{
    std::vector<std::array<int, 2>> out;
    for (int t = 0; t < size(); ++t)
        for (int v = 0; v < 4; ++v)
            if (vertex_class_[t][v] == vclass) out.push_back({t, v});
    return out;
}

std::vector<FaceGluing> Triangulation::gluings() const
{
    std::vector<FaceGluing> out;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (const auto& p = adj_[t][f]) {
                int g = p->map[f];
                if (p->tet > t || (p->tet == t && g > f)) out.push_back({t, f, p->tet, g, p->map});
            }
    return out;
}

SurfaceTriangulation vertex_link(const Triangulation& tri, int vclass)
{
    if (vclass < 0 || vclass >= tri.vertex_count())
        throw Error(ErrorCode::InvalidArgument, "vertex class out of range");
    auto corners = tri.corners(vclass);
    // index of corner (tet, v) in the link
    std::vector<std::array<int, 4>> index(tri.size(), {-1, -1, -1, -1});
    for (int i = 0; i < static_cast<int>(corners.size()); ++i) index[corners[i][0]][corners[i][1]] = i;

    auto others = [](int v) {
        std::array<int, 3> o{};
        int k = 0;
        for (int x = 0; x < 4; ++x)
            if (x != v) o[k++] = x;
        return o;
    };
    auto local_of = [&](int v, int x) {
        auto o = others(v);
        for (int k = 0; k < 3; ++k)
            if (o[k] == x) return k;
        return -1;
    };

    std::vector<EdgeGluing> gl;
    for (int i = 0; i < static_cast<int>(corners.size()); ++i) {
        auto [t, v] = corners[i];
        auto o = others(v);
        for (int k = 0; k < 3; ++k) {
            int f = o[k];
            const auto& p = tri.partner(t, f);
            if (!p) continue;
            int t2 = p->tet;
            int v2 = p->map[v];
            std::array<int, 3> img{};
            for (int m = 0; m < 3; ++m) img[m] = local_of(v2, p->map[o[m]]);
            gl.push_back({i, k, index[t2][v2], img[k], *Perm3::from_images(img)});
        }
    }
    return SurfaceTriangulation::build(static_cast<int>(corners.size()), gl);
}

const char* reason_name(ManifoldCheck::Reason r)
{
    switch (r) {
    case ManifoldCheck::Reason::Ok: return "Ok";
    case ManifoldCheck::Reason::BoundaryFace: return "BoundaryFace";
    case ManifoldCheck::Reason::BadEdge: return "BadEdge";
    case ManifoldCheck::Reason::BadVertexLink: return "BadVertexLink";
    }
    return "Unknown";
}

ManifoldCheck is_closed_3_manifold(const Triangulation& tri)
{
    ManifoldCheck out;
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tri.partner(t, f)) {
                out.reason = ManifoldCheck::Reason::BoundaryFace;
                out.witness = {t, f};
                return out;
            }
    // Reversed edge identifications are rejected by build(); an interior edge
    // still needs at least one wedge per gluing cycle, which holds trivially.
    for (int e = 0; e < tri.edge_count(); ++e)
        if (tri.edge_degree(e) < 1) {
            out.reason = ManifoldCheck::Reason::BadEdge;
            out.witness = {e};
            return out;
        }
    for (int v = 0; v < tri.vertex_count(); ++v) {
        auto link = vertex_link(tri, v);
        if (!link.is_sphere()) {
            out.reason = ManifoldCheck::Reason::BadVertexLink;
            out.witness = {v, link.euler_characteristic(), link.component_count()};
            return out;
        }
    }
    return out;
}

bool is_orientable(const Triangulation& tri)
{
    ParityUnionFind uf(tri.size());
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (const auto& p = tri.partner(t, f)) {
                int rel = p->map.sign() < 0 ? 0 : 1;
                if (!uf.unite(t, p->tet, rel)) return false;
            }
    return true;
}

Triangulation relabel(const Triangulation& tri, const std::vector<int>& order)
{
    if (static_cast<int>(order.size()) != tri.size())
        throw Error(ErrorCode::InvalidArgument, "relabel order has wrong length");
    std::vector<FaceGluing> gl;
    for (const auto& g : tri.gluings())
        gl.push_back({order[g.source_tet], g.source_face, order[g.target_tet], g.target_face, g.map});
    return Triangulation::build(tri.size(), gl);
}

Triangulation disjoint_union(const Triangulation& a, const Triangulation& b)
{
    auto gl = a.gluings();
    for (auto g : b.gluings()) {
        g.source_tet += a.size();
        g.target_tet += a.size();
        gl.push_back(g);
    }
    return Triangulation::build(a.size() + b.size(), gl);
}

}  // namespace s3rec
