#include "s3rec/surface.hpp"

#include "s3rec/error.hpp"
#include "s3rec/union_find.hpp"

#include <deque>
#include <string>

namespace s3rec {

SurfaceTriangulation SurfaceTriangulation::build(int triangles, const std::vector<EdgeGluing>& gluings)
{
    if (triangles < 0) throw Error(ErrorCode::InvalidArgument, "negative triangle count");
    SurfaceTriangulation s;
    s.adj_.assign(triangles, {});

    auto set_slot = [&](int t, int e, int t2, const Perm3& map) {
        auto& slot = s.adj_[t][e];
        if (slot) {
            if (slot->triangle != t2 || !(slot->map == map))
                throw Error(ErrorCode::NonInvolutiveGluing,
                            "edge (" + std::to_string(t) + "," + std::to_string(e) + ") glued twice");
            return;
        }
        slot = EdgePartner{t2, map};
    };

    for (const auto& g : gluings) {
        if (g.source_triangle < 0 || g.source_triangle >= triangles || g.target_triangle < 0 ||
            g.target_triangle >= triangles || g.source_edge < 0 || g.source_edge > 2 || g.target_edge < 0 ||
            g.target_edge > 2)
            throw Error(ErrorCode::InvalidGluing, "edge gluing index out of range");
        if (g.map[g.source_edge] != g.target_edge)
            throw Error(ErrorCode::InvalidGluing, "edge gluing map does not send source edge to target edge");
        if (g.source_triangle == g.target_triangle && g.source_edge == g.target_edge)
            throw Error(ErrorCode::SelfGluedFace, "edge glued to itself");
        set_slot(g.source_triangle, g.source_edge, g.target_triangle, g.map);
        set_slot(g.target_triangle, g.target_edge, g.source_triangle, g.map.inverse());
    }
    s.compute_skeleton();
    return s;
}

void SurfaceTriangulation::compute_skeleton()
{
    const int n = size();
    UnionFind verts(3 * n);
    UnionFind comps(n);
    edge_class_.assign(n, {-1, -1, -1});
    edge_count_ = 0;
    boundary_edges_ = 0;
    for (int t = 0; t < n; ++t) {
        for (int e = 0; e < 3; ++e) {
            const auto& p = adj_[t][e];
            if (!p) {
                edge_class_[t][e] = edge_count_++;
                ++boundary_edges_;
                continue;
            }
            comps.unite(t, p->triangle);
            for (int v = 0; v < 3; ++v)
                if (v != e) verts.unite(3 * t + v, 3 * p->triangle + p->map[v]);
            if (edge_class_[t][e] < 0) {
                edge_class_[t][e] = edge_count_;
                edge_class_[p->triangle][p->map[e]] = edge_count_;
                ++edge_count_;
            }
        }
    }
    std::vector<int> labels;
    vertex_count_ = verts.labels(labels);
    vertex_class_.assign(n, {});
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 3; ++v) vertex_class_[t][v] = labels[3 * t + v];
    component_count_ = comps.labels(component_);
}

bool SurfaceTriangulation::is_orientable() const
{
    ParityUnionFind uf(size());
    for (int t = 0; t < size(); ++t)
        for (int e = 0; e < 3; ++e)
            if (const auto& p = adj_[t][e]) {
                // Consistent orientations need an odd gluing map.
                int rel = p->map.sign() < 0 ? 0 : 1;
                if (!uf.unite(t, p->triangle, rel)) return false;
            }
    return true;
}

std::vector<EdgeGluing> SurfaceTriangulation::gluings() const
{
    std::vector<EdgeGluing> out;
    for (int t = 0; t < size(); ++t)
        for (int e = 0; e < 3; ++e)
            if (const auto& p = adj_[t][e]) {
                int e2 = p->map[e];
                if (p->triangle > t || (p->triangle == t && e2 > e))
                    out.push_back({t, e, p->triangle, e2, p->map});
            }
    return out;
}

std::vector<SurfaceTriangulation> SurfaceTriangulation::split_components() const
{
    std::vector<std::vector<int>> members(component_count_);
    std::vector<int> local(size());
    for (int t = 0; t < size(); ++t) {
        local[t] = static_cast<int>(members[component_[t]].size());
        members[component_[t]].push_back(t);
    }
    std::vector<SurfaceTriangulation> out;
    for (const auto& tris : members) {
        std::vector<EdgeGluing> gl;
        for (int t : tris)
            for (int e = 0; e < 3; ++e)
                if (const auto& p = adj_[t][e]) gl.push_back({local[t], e, local[p->triangle], p->map[e], p->map});
        out.push_back(build(static_cast<int>(tris.size()), gl));
    }
    return out;
}

SurfaceTriangulation::Umbrella SurfaceTriangulation::umbrella(int vclass) const
{
    Umbrella u;
    int start_t = -1, start_v = -1;
    for (int t = 0; t < size() && start_t < 0; ++t)
        for (int v = 0; v < 3; ++v)
            if (vertex_class_[t][v] == vclass) {
                start_t = t;
                start_v = v;
                break;
            }
    if (start_t < 0) throw Error(ErrorCode::InvalidArgument, "no such vertex class");

    int t = start_t, v = start_v;
    // Edges at corner v are the two local edges != v; leave via the larger first.
    int entry = (v + 1) % 3;
    int exit = (v + 2) % 3;
    const int limit = 3 * size() + 1;
    for (int steps = 0; steps < limit; ++steps) {
        u.corners.push_back({t, v});
        u.entry_edges.push_back(entry);
        u.exit_edges.push_back(exit);
        const auto& p = adj_[t][exit];
        if (!p) throw Error(ErrorCode::NotClosed, "umbrella requires a closed surface");
        int nt = p->triangle;
        int nv = p->map[v];
        int nentry = p->map[exit];
        int nexit = 3 - nv - nentry;
        t = nt;
        v = nv;
        entry = nentry;
        exit = nexit;
        if (t == start_t && v == start_v) {
            if (entry != u.entry_edges.front())
                throw Error(ErrorCode::InvalidArgument, "vertex link is not a circle");
            return u;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "umbrella walk did not close");
}

}  // namespace s3rec
