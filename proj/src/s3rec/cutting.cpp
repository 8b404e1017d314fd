#include "s3rec/cutting.hpp"

#include "s3rec/disk_layout.hpp"
#include "s3rec/error.hpp"
#include "s3rec/surface_builder.hpp"
#include "s3rec/union_find.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace s3rec {

const char* tag_name(ComponentTag::Kind k) { return k == ComponentTag::Kind::VertexStar ? "VertexStar" : "Generic"; }

// ---- boundary surfaces --------------------------------------------------

std::vector<SurfaceTriangulation> boundary_surfaces(const Triangulation& tri,
                                                    std::vector<std::vector<std::array<int, 2>>>& faces)
{
    std::vector<std::array<int, 2>> all;
    std::vector<std::array<int, 4>> index(tri.size(), {-1, -1, -1, -1});
    for (int t = 0; t < tri.size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!tri.partner(t, f)) {
                index[t][f] = static_cast<int>(all.size());
                all.push_back({t, f});
            }
    auto local_of = [](int face, int vertex) {
        int k = 0;
        for (int x = 0; x < vertex; ++x)
            if (x != face) ++k;
        return k;
    };
    std::vector<EdgeGluing> gl;
    const int max_steps = 4 * tri.size() + 4;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) {
        const auto [t0, f0] = all[i];
        std::array<int, 3> fv{};
        for (int x = 0, k = 0; x < 4; ++x)
            if (x != f0) fv[k++] = x;
        for (int k = 0; k < 3; ++k) {
            int x = fv[(k + 1) % 3], y = fv[(k + 2) % 3];
            int t = t0, c = f0;
            int steps = 0;
            for (;;) {
                if (++steps > max_steps) throw Error(ErrorCode::InvalidArgument, "boundary edge walk did not terminate");
                int c2 = 6 - x - y - c;
                const auto& p = tri.partner(t, c2);
                if (!p) {
                    c = c2;
                    break;
                }
                x = p->map[x];
                y = p->map[y];
                c = p->map[c2];
                t = p->tet;
            }
            // Arrived on boundary face (t, c); its vertex off the edge is the
            // previous face index, i.e. 6 - x - y - c.
            int z = 6 - x - y - c;
            int j = index[t][c];
            std::array<int, 3> images{};
            images[local_of(f0, fv[(k + 1) % 3])] = local_of(c, x);
            images[local_of(f0, fv[(k + 2) % 3])] = local_of(c, y);
            images[k] = local_of(c, z);
            auto map = Perm3::from_images(images);
            gl.push_back({i, k, j, images[k], *map});
        }
    }
    auto surf = SurfaceTriangulation::build(static_cast<int>(all.size()), gl);
    faces.assign(surf.component_count(), {});
    for (int i = 0; i < surf.size(); ++i) faces[surf.component_of_triangle()[i]].push_back(all[i]);
    return surf.split_components();
}

std::vector<SurfaceTriangulation> boundary_surfaces(const Triangulation& tri)
{
    std::vector<std::vector<std::array<int, 2>>> faces;
    return boundary_surfaces(tri, faces);
}

// ---- cell decomposition -------------------------------------------------

namespace {

using detail::TetDisks;

// Segment on a cell boundary: an edge segment (type 0: edge, index from the
// lower vertex) or a normal arc (type 1: face, cut-off vertex, position).
using SegKey = std::array<long, 4>;

struct Seg {
    SegKey key;
    int p = 0, q = 0;  // tetrahedron-local point ids
};

// Region of a tetrahedron face: kind 0 corner at u, 1 strip (u, pos) between
// arcs pos and pos + 1, 2 the central region.
using RegionKey = std::array<long, 4>;

struct TetLayout {
    TetDisks d;
    long first_disk = 0;
    std::array<long, 6> point_base{};
    std::vector<std::array<long, 2>> point_edge;  // per edge point: edge, index from lower
    std::vector<RegionKey> region_keys;
    std::map<RegionKey, int> region_index;
    std::vector<std::vector<Seg>> region_segs;
    std::vector<int> region_cell;
    int cells = 0;

    int edge_point(int e, long s) const { return 4 + static_cast<int>(point_base[e] + s); }
    int point_from(int u, int w, long k) const
    {
        int e = edge_index(u, w);
        long n = d.points(e);
        return edge_point(e, u < w ? k : n - 1 - k);
    }
    // Edge segment t counted from u on edge {u, w}.
    Seg edge_seg(int u, int w, long t) const
    {
        int e = edge_index(u, w);
        long n = d.points(e);
        long s = u < w ? t : n - t;
        int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
        return {{0, e, 0, s}, s == 0 ? a : edge_point(e, s - 1), s == n ? b : edge_point(e, s)};
    }
    Seg arc_seg(int f, int u, long pos) const
    {
        std::array<int, 2> w{};
        for (int x = 0, k = 0; x < 4; ++x)
            if (x != f && x != u) w[k++] = x;
        return {{1, f, u, pos}, point_from(u, w[0], pos), point_from(u, w[1], pos)};
    }
    int region(long f, long kind, long u, long pos) const { return region_index.at({f, kind, u, pos}); }
};

TetLayout make_layout(const NormalVector& v, int t, long first_disk)
{
    TetLayout L;
    L.d = TetDisks::of(v, t);
    L.first_disk = first_disk;
    long base = 0;
    for (int e = 0; e < 6; ++e) {
        L.point_base[e] = base;
        for (long s = 0; s < L.d.points(e); ++s) L.point_edge.push_back({e, s});
        base += L.d.points(e);
    }
    auto add = [&](RegionKey key, std::vector<Seg> segs) {
        L.region_index[key] = static_cast<int>(L.region_keys.size());
        L.region_keys.push_back(key);
        L.region_segs.push_back(std::move(segs));
    };
    for (int f = 0; f < 4; ++f) {
        std::array<int, 3> fv{};
        for (int x = 0, k = 0; x < 4; ++x)
            if (x != f) fv[k++] = x;
        std::vector<Seg> central;
        for (int i = 0; i < 3; ++i) {
            const int u = fv[i];
            const int w1 = fv[(i + 1) % 3], w2 = fv[(i + 2) % 3];
            const long n = L.d.arcs(f, u);
            if (n > 0) {
                add({f, 0, u, 0}, {L.edge_seg(u, w1, 0), L.edge_seg(u, w2, 0), L.arc_seg(f, u, 0)});
                central.push_back(L.arc_seg(f, u, n - 1));
            }
            for (long pos = 0; pos + 1 < n; ++pos)
                add({f, 1, u, pos}, {L.edge_seg(u, w1, pos + 1), L.edge_seg(u, w2, pos + 1), L.arc_seg(f, u, pos),
                                     L.arc_seg(f, u, pos + 1)});
            if (u < w1) central.push_back(L.edge_seg(u, w1, n));
            if (u < w2) central.push_back(L.edge_seg(u, w2, n));
        }
        add({f, 2, 0, 0}, std::move(central));
    }
    // Regions sharing an edge segment lie in the same cell.
    UnionFind uf(static_cast<int>(L.region_keys.size()));
    std::map<SegKey, int> owner;
    for (int r = 0; r < static_cast<int>(L.region_segs.size()); ++r)
        for (const auto& s : L.region_segs[r]) {
            if (s.key[0] != 0) continue;
            auto [it, fresh] = owner.emplace(s.key, r);
            if (!fresh) uf.unite(it->second, r);
        }
    L.cells = uf.labels(L.region_cell);
    return L;
}

// Orders segments into a cycle p0 -> p1 -> ... with consistent direction.
std::vector<Seg> chain(std::vector<Seg> segs)
{
    std::vector<Seg> out;
    out.push_back(segs[0]);
    std::vector<bool> used(segs.size(), false);
    used[0] = true;
    for (std::size_t n = 1; n < segs.size(); ++n) {
        const int at = out.back().q;
        bool found = false;
        for (std::size_t i = 0; i < segs.size() && !found; ++i) {
            if (used[i]) continue;
            if (segs[i].p == at || segs[i].q == at) {
                Seg s = segs[i];
                if (s.p != at) std::swap(s.p, s.q);
                out.push_back(s);
                used[i] = true;
                found = true;
            }
        }
        if (!found) throw Error(ErrorCode::InvalidArgument, "cell boundary polygon is not a cycle");
    }
    if (out.back().q != out.front().p) throw Error(ErrorCode::InvalidArgument, "cell boundary polygon is not closed");
    return out;
}

const Perm4 kSwap23 = *Perm4::from_images({0, 1, 3, 2});

Perm4 orient(int p, int q, int p2, int q2)
{
    if (p == p2 && q == q2) return Perm4();
    if (p == q2 && q == p2) return kSwap23;
    throw Error(ErrorCode::InvalidArgument, "segment endpoints do not correspond");
}

struct Use {
    int tet = 0;
    int cell = 0;  // global cell id
    int region = -1;
    long disk = -1;
    int side = 0;
    std::vector<Seg> cycle;
    int first = 0;  // first new tetrahedron
};

class Cutter {
public:
    Cutter(const Triangulation& tri, const NormalVector& v) : tri_(tri), v_(v) {}

    CutResult run()
    {
        surface_ = instantiate(tri_, v_);
        layout();
        make_uses();
        glue();
        return assemble();
    }

private:
    void layout()
    {
        long first = 0;
        int cell_base = 0;
        for (int t = 0; t < tri_.size(); ++t) {
            layouts_.push_back(make_layout(v_, t, first));
            first += layouts_.back().d.disk_count();
            cell_base_.push_back(cell_base);
            cell_base += layouts_.back().cells;
        }
        cell_count_ = cell_base;
    }

    void add_use(Use u)
    {
        u.cycle = chain(std::move(u.cycle));
        u.first = new_tets_;
        new_tets_ += static_cast<int>(u.cycle.size());
        uses_.push_back(std::move(u));
    }

    void make_uses()
    {
        for (int t = 0; t < tri_.size(); ++t) {
            const auto& L = layouts_[t];
            region_use_.emplace_back(L.region_keys.size(), -1);
            for (int r = 0; r < static_cast<int>(L.region_keys.size()); ++r) {
                region_use_[t][r] = static_cast<int>(uses_.size());
                add_use({t, cell_base_[t] + L.region_cell[r], r, -1, 0, L.region_segs[r], 0});
            }
            long disk = L.first_disk;
            auto add_disk = [&](int local, long copy) {
                auto arcs = L.d.disk_arcs(local, copy);
                std::vector<Seg> segs;
                for (const auto& a : arcs) segs.push_back(L.arc_seg(a.face, a.u, a.pos));
                const auto& a = arcs[0];
                const long n = L.d.arcs(a.face, a.u);
                int near = a.pos == 0 ? L.region(a.face, 0, a.u, 0) : L.region(a.face, 1, a.u, a.pos - 1);
                int far = a.pos + 1 < n ? L.region(a.face, 1, a.u, a.pos) : L.region(a.face, 2, 0, 0);
                int positive = a.toward_u ? near : far;
                int negative = a.toward_u ? far : near;
                add_use({t, cell_base_[t] + L.region_cell[positive], -1, disk, 0, segs, 0});
                add_use({t, cell_base_[t] + L.region_cell[negative], -1, disk, 1, segs, 0});
                ++disk;
            };
            for (int c = 0; c < 4; ++c)
                for (long m = 0; m < L.d.tri[c]; ++m) add_disk(c, m);
            for (long j = 0; j < L.d.quads; ++j) add_disk(4 + L.d.quad, j);
            if (L.d.oct >= 0) add_disk(7 + L.d.oct, 0);
        }
    }

    void glue()
    {
        // Around each polygon centre.
        for (const auto& u : uses_) {
            const int n = static_cast<int>(u.cycle.size());
            for (int j = 0; j < n; ++j) gluings_.push_back({u.first + j, 3, u.first + (j + n - 1) % n, 2, kSwap23});
        }
        // Between the two polygons of a cell sharing a segment.
        std::map<std::pair<int, SegKey>, std::vector<std::array<int, 3>>> by_cell;
        for (const auto& u : uses_)
            for (int j = 0; j < static_cast<int>(u.cycle.size()); ++j)
                by_cell[{u.cell, u.cycle[j].key}].push_back({u.first + j, u.cycle[j].p, u.cycle[j].q});
        for (const auto& [key, v] : by_cell) {
            if (v.size() != 2) throw Error(ErrorCode::InvalidArgument, "cell edge not shared by exactly two polygons");
            gluings_.push_back({v[0][0], 1, v[1][0], 1, orient(v[0][1], v[0][2], v[1][1], v[1][2])});
        }
        // Across original face gluings.
        for (const auto& g : tri_.gluings()) {
            const auto& A = layouts_[g.source_tet];
            const auto& B = layouts_[g.target_tet];
            for (int r = 0; r < static_cast<int>(A.region_keys.size()); ++r) {
                const auto& key = A.region_keys[r];
                if (key[0] != g.source_face) continue;
                RegionKey mapped = key[1] == 2 ? RegionKey{g.target_face, 2, 0, 0}
                                                : RegionKey{g.target_face, key[1], g.map[key[2]], key[3]};
                const auto& ua = uses_[region_use_[g.source_tet][r]];
                const auto& ub = uses_[region_use_[g.target_tet][B.region_index.at(mapped)]];
                for (int j = 0; j < static_cast<int>(ua.cycle.size()); ++j) {
                    const auto& s = ua.cycle[j];
                    SegKey k2 = map_seg(A, g, s.key);
                    int p2 = map_point(A, B, g, s.p), q2 = map_point(A, B, g, s.q);
                    int jb = -1;
                    for (int i = 0; i < static_cast<int>(ub.cycle.size()); ++i)
                        if (ub.cycle[i].key == k2) jb = i;
                    if (jb < 0) throw Error(ErrorCode::InvalidArgument, "face regions do not correspond");
                    const auto& sb = ub.cycle[jb];
                    gluings_.push_back({ua.first + j, 0, ub.first + jb, 0, orient(p2, q2, sb.p, sb.q)});
                }
            }
        }
    }

    SegKey map_seg(const TetLayout& A, const FaceGluing& g, const SegKey& k) const
    {
        if (k[0] == 1) return {1, g.target_face, g.map[static_cast<int>(k[2])], k[3]};
        const int e = static_cast<int>(k[1]);
        const int a = g.map[kEdgeVertices[e][0]], b = g.map[kEdgeVertices[e][1]];
        const long n = A.d.points(e);
        return {0, edge_index(a, b), 0, a < b ? k[3] : n - k[3]};
    }

    int map_point(const TetLayout& A, const TetLayout& B, const FaceGluing& g, int p) const
    {
        if (p < 4) return g.map[p];
        const auto [e, s] = A.point_edge[p - 4];
        const int a = g.map[kEdgeVertices[e][0]], b = g.map[kEdgeVertices[e][1]];
        const long n = A.d.points(static_cast<int>(e));
        return B.edge_point(edge_index(a, b), a < b ? s : n - 1 - s);
    }

    CutResult assemble()
    {
        CutResult out;
        auto whole = Triangulation::build(new_tets_, gluings_);
        const int C = whole.component_count();
        std::vector<int> local(new_tets_);
        std::vector<int> sizes(C, 0);
        for (int t = 0; t < new_tets_; ++t) local[t] = sizes[whole.component_of(t)]++;
        std::vector<std::vector<FaceGluing>> comp_gl(C);
        for (const auto& g : whole.gluings()) {
            int c = whole.component_of(g.source_tet);
            comp_gl[c].push_back({local[g.source_tet], g.source_face, local[g.target_tet], g.target_face, g.map});
        }
        for (int c = 0; c < C; ++c) out.components.push_back(Triangulation::build(sizes[c], comp_gl[c]));

        for (const auto& s : surface_.components) out.surfaces.push_back(s.vector);
        std::vector<long> first_disk_of(out.surfaces.size(), -1);
        for (long d = static_cast<long>(surface_.disks.size()) - 1; d >= 0; --d)
            first_disk_of[surface_.disk_component[d]] = d;

        // Boundary faces carrying disk sides, and reglue pairs.
        std::map<std::pair<int, int>, std::pair<long, int>> face_side;  // (comp, local tet) -> (disk, side)
        std::map<std::pair<long, SegKey>, std::array<std::array<int, 3>, 2>> sides;
        for (const auto& u : uses_) {
            if (u.disk < 0) continue;
            for (int j = 0; j < static_cast<int>(u.cycle.size()); ++j) {
                const int t = u.first + j;
                face_side[{whole.component_of(t), local[t]}] = {u.disk, u.side};
                sides[{u.disk, u.cycle[j].key}][u.side] = {t, u.cycle[j].p, u.cycle[j].q};
            }
        }
        for (const auto& [key, s] : sides) {
            const int a = s[0][0], b = s[1][0];
            out.reglue_pairs.push_back({whole.component_of(a), local[a], 0, whole.component_of(b), local[b], 0,
                                        orient(s[0][1], s[0][2], s[1][1], s[1][2])});
        }

        out.boundary.resize(C);
        for (int c = 0; c < C; ++c) {
            std::vector<std::vector<std::array<int, 2>>> faces;
            boundary_surfaces(out.components[c], faces);
            for (const auto& group : faces) {
                SurfaceSide side{-1, -1};
                for (const auto& [t, f] : group) {
                    auto it = face_side.find({c, t});
                    if (f != 0 || it == face_side.end()) continue;
                    auto [disk, s] = it->second;
                    side.surface = surface_.disk_component[disk];
                    if (disk == first_disk_of[side.surface]) {
                        side.side = s;
                        break;
                    }
                }
                if (side.surface >= 0 && side.side < 0) {
                    // Group without the first disk: the opposite side of the one that has it.
                    side.side = -2;
                }
                out.boundary[c].push_back(side);
            }
        }
        // Resolve sides that did not meet the surface's first disk.
        for (int c = 0; c < C; ++c)
            for (auto& s : out.boundary[c])
                if (s.side == -2) {
                    int other = -1;
                    for (int c2 = 0; c2 < C; ++c2)
                        for (const auto& s2 : out.boundary[c2])
                            if (s2.surface == s.surface && s2.side >= 0) other = s2.side;
                    s.side = other < 0 ? 0 : 1 - other;
                }
        for (auto& b : out.boundary) std::sort(b.begin(), b.end());

        // Original vertices and central cells.
        out.vertices.resize(C);
        std::vector<std::set<int>> verts(C);
        out.central_component.assign(tri_.size(), -1);
        for (const auto& u : uses_) {
            if (u.region < 0) continue;
            const int c = whole.component_of(u.first);
            for (const auto& s : u.cycle)
                if (s.p < 4) verts[c].insert(tri_.vertex_class(u.tet, s.p));
            const auto& key = layouts_[u.tet].region_keys[u.region];
            if (key[0] == 0 && key[1] == 2) out.central_component[u.tet] = c;
        }
        for (int c = 0; c < C; ++c) out.vertices[c].assign(verts[c].begin(), verts[c].end());

        out.tags.resize(C);
        for (int c = 0; c < C; ++c) {
            if (out.boundary[c].size() != 1 || out.vertices[c].size() != 1) continue;
            const int s = out.boundary[c][0].surface;
            const int x = out.vertices[c][0];
            if (s >= 0 && out.surfaces[s] == vertex_linking_vector(tri_, x, v_.mode()))
                out.tags[c] = {ComponentTag::Kind::VertexStar, x};
        }
        return out;
    }

    const Triangulation& tri_;
    const NormalVector& v_;
    EmbeddedSurface surface_;
    std::vector<TetLayout> layouts_;
    std::vector<int> cell_base_;
    int cell_count_ = 0;
    std::vector<Use> uses_;
    std::vector<std::vector<int>> region_use_;
    int new_tets_ = 0;
    std::vector<FaceGluing> gluings_;
};

}  // namespace

CutResult cut_along_surface(const Triangulation& tri, const NormalVector& v) { return Cutter(tri, v).run(); }

CutResult cut_along(const Triangulation& tri, const NormalVector& v)
{
    if (!tri.is_closed()) throw Error(ErrorCode::NotClosed, "cutting requires a closed triangulation");
    if (v.is_zero()) throw Error(ErrorCode::NotASphere, "the zero vector is not a sphere");
    if (!is_embeddable(v) || v.octagon_total() != 0) throw Error(ErrorCode::NotASphere, "vector is not a normal surface");
    if (!satisfies_matching(tri, v)) throw Error(ErrorCode::NotASphere, "vector violates the matching equations");
    auto s = instantiate(tri, v);
    if (s.components.size() != 1) throw Error(ErrorCode::NotConnectedSurface, "surface is not connected");
    if (!s.components[0].is_sphere()) throw Error(ErrorCode::NotASphere, "surface is not a 2-sphere");
    return cut_along_surface(tri, v);
}

CutResult cut_along_family(const Triangulation& tri, const std::vector<NormalVector>& spheres)
{
    if (spheres.empty()) throw Error(ErrorCode::NotASphere, "empty sphere family");
    NormalVector sum = NormalVector::zero(spheres[0].mode(), tri.size());
    for (const auto& s : spheres) {
        if (!is_normal_two_sphere(tri, s)) throw Error(ErrorCode::NotASphere, "family member is not a normal 2-sphere");
        sum += s;
    }
    if (!is_embeddable(sum)) throw Error(ErrorCode::NotAdmissible, "family members are not disjoint");
    auto parts = components(tri, sum);
    auto expect = spheres;
    std::sort(expect.begin(), expect.end());
    if (parts != expect) throw Error(ErrorCode::NotAdmissible, "family members are not disjoint");
    return cut_along_surface(tri, sum);
}

Triangulation reglue(const CutResult& cut)
{
    std::vector<int> base;
    int total = 0;
    std::vector<FaceGluing> gl;
    for (const auto& c : cut.components) {
        base.push_back(total);
        for (auto g : c.gluings()) {
            g.source_tet += total;
            g.target_tet += total;
            gl.push_back(g);
        }
        total += c.size();
    }
    for (const auto& p : cut.reglue_pairs)
        gl.push_back({base[p.component_a] + p.tet_a, p.face_a, base[p.component_b] + p.tet_b, p.face_b, p.map});
    return Triangulation::build(total, gl);
}

}  // namespace s3rec
