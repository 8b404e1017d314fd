#include "s3rec/surface_builder.hpp"

#include "s3rec/disk_layout.hpp"
#include "s3rec/error.hpp"
#include "s3rec/union_find.hpp"

#include <algorithm>

namespace s3rec {

long EmbeddedSurface::euler_characteristic() const
{
    long chi = 0;
    for (const auto& c : components) chi += c.euler_characteristic();
    return chi;
}

NormalVector EmbeddedSurface::recovered_vector(CoordMode mode, int tetrahedra) const
{
    auto v = NormalVector::zero(mode, tetrahedra);
    for (const auto& c : components) v += c.vector;
    return v;
}

namespace {

using detail::TetDisks;

class Builder {
public:
    Builder(const Triangulation& tri, const NormalVector& v) : tri_(tri), v_(v) {}

    EmbeddedSurface run()
    {
        const int T = tri_.size();
        const int per = coords_per_tet(v_.mode());
        if (static_cast<int>(v_.size()) != per * T)
            throw Error(ErrorCode::LengthMismatch, "vector length does not match triangulation");
        if (!is_embeddable(v_)) throw Error(ErrorCode::NotAdmissible, "vector is not embeddable");
        if (!satisfies_matching(tri_, v_)) throw Error(ErrorCode::InvalidArgument, "vector violates the matching equations");
        if (v_.total_disks() > kMaxInstantiatedDisks)
            throw Error(ErrorCode::ResourceBudgetExceeded, "too many disks to instantiate");

        count_disks();
        place_disks();
        glue();
        return collect();
    }

private:
    long arc_slot(int t, int f, int u, long pos) const { return arc_base_[(t * 4 + f) * 4 + u] + pos; }
    long point_slot(int t, int e, long pos) const { return point_base_[t * 6 + e] + pos; }

    void count_disks()
    {
        const int T = tri_.size();
        tets_.resize(T);
        first_disk_.resize(T);
        long disks = 0, arcs = 0, points = 0;
        arc_base_.assign(static_cast<std::size_t>(T) * 16, 0);
        point_base_.assign(static_cast<std::size_t>(T) * 6, 0);
        for (int t = 0; t < T; ++t) {
            auto& d = tets_[t];
            d = TetDisks::of(v_, t);
            first_disk_[t] = disks;
            disks += d.disk_count();
            for (int f = 0; f < 4; ++f)
                for (int u = 0; u < 4; ++u) {
                    if (u == f) continue;
                    arc_base_[(t * 4 + f) * 4 + u] = arcs;
                    arcs += d.arcs(f, u);
                }
            for (int e = 0; e < 6; ++e) {
                point_base_[t * 6 + e] = points;
                points += d.points(e);
            }
        }
        disks_.resize(disks);
        arc_disk_.assign(arcs, -1);
        arc_toward_.assign(arcs, 0);
        point_disk_.assign(points, -1);
    }

    void set_arc(int t, int f, int u, long pos, long disk, bool toward_u)
    {
        long s = arc_slot(t, f, u, pos);
        arc_disk_[s] = disk;
        arc_toward_[s] = toward_u;
    }
    void set_point(int t, int e, long pos_from_lower, long disk) { point_disk_[point_slot(t, e, pos_from_lower)] = disk; }

    void place_disks()
    {
        for (int t = 0; t < tri_.size(); ++t) {
            const auto& d = tets_[t];
            long id = first_disk_[t];
            for (int c = 0; c < 4; ++c)
                for (long m = 0; m < d.tri[c]; ++m, ++id) {
                    disks_[id] = {t, c, m};
                    for (int f = 0; f < 4; ++f)
                        if (f != c) set_arc(t, f, c, m, id, true);
                    for (int x = 0; x < 4; ++x) {
                        if (x == c) continue;
                        int e = edge_index(c, x);
                        set_point(t, e, c < x ? m : d.points(e) - 1 - m, id);
                    }
                }
            for (long j = 0; j < d.quads; ++j, ++id) {
                const int k = d.quad;
                disks_[id] = {t, 4 + k, j};
                for (int f = 0; f < 4; ++f) {
                    int u = pairing_partner(k, f);
                    set_arc(t, f, u, d.quad_position(u, j), id, in_first_block(k, u));
                }
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                    if (in_first_block(k, a) == in_first_block(k, b)) continue;
                    set_point(t, e, d.quad_position(a, j), id);
                }
            }
            if (d.oct >= 0) {
                const int k = d.oct;
                disks_[id] = {t, 7 + k, 0};
                for (int f = 0; f < 4; ++f)
                    for (int u = 0; u < 4; ++u)
                        if (u != f && u != pairing_partner(k, f)) set_arc(t, f, u, d.tri[u], id, in_first_block(k, u));
                for (int e = 0; e < 6; ++e) {
                    int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
                    set_point(t, e, d.tri[a], id);
                    if (in_first_block(k, a) == in_first_block(k, b)) set_point(t, e, d.tri[a] + 1, id);
                }
                ++id;
            }
        }
    }

    void glue()
    {
        const long n_disks = static_cast<long>(disks_.size());
        disk_uf_ = ParityUnionFind(static_cast<int>(n_disks));
        arc_uf_ = UnionFind(static_cast<int>(arc_disk_.size()));
        point_uf_ = UnionFind(static_cast<int>(point_disk_.size()));
        for (const auto& g : tri_.gluings()) {
            const int i = g.source_tet, j = g.target_tet;
            for (int u = 0; u < 4; ++u) {
                if (u == g.source_face) continue;
                const long n = tets_[i].arcs(g.source_face, u);
                for (long pos = 0; pos < n; ++pos) {
                    long a = arc_slot(i, g.source_face, u, pos);
                    long b = arc_slot(j, g.target_face, g.map[u], pos);
                    arc_uf_.unite(static_cast<int>(a), static_cast<int>(b));
                    int rel = arc_toward_[a] == arc_toward_[b] ? 0 : 1;
                    if (!disk_uf_.unite(static_cast<int>(arc_disk_[a]), static_cast<int>(arc_disk_[b]), rel))
                        one_sided_.push_back(arc_disk_[a]);
                }
            }
            for (int x = 0; x < 4; ++x)
                for (int y = x + 1; y < 4; ++y) {
                    if (x == g.source_face || y == g.source_face) continue;
                    const int e = edge_index(x, y);
                    const int px = g.map[x], py = g.map[y];
                    const int e2 = edge_index(px, py);
                    const long n = tets_[i].points(e);
                    for (long s = 0; s < n; ++s) {
                        long s2 = px < py ? s : n - 1 - s;
                        point_uf_.unite(static_cast<int>(point_slot(i, e, s)), static_cast<int>(point_slot(j, e2, s2)));
                    }
                }
        }
    }

    EmbeddedSurface collect()
    {
        EmbeddedSurface out;
        out.disks = disks_;
        const int n = static_cast<int>(disks_.size());
        UnionFind comp(n);
        for (int d = 0; d < n; ++d) {
            int p = 0;
            comp.unite(d, disk_uf_.find(d, p));
        }
        const int count = comp.labels(out.disk_component);
        out.components.resize(count);
        for (auto& c : out.components) c.vector = NormalVector::zero(v_.mode(), tri_.size());
        for (int d = 0; d < n; ++d) {
            auto& c = out.components[out.disk_component[d]];
            c.vector.at(disks_[d].tet, disks_[d].local) += 1;
            c.faces += 1;
        }
        for (long d : one_sided_) out.components[out.disk_component[d]].two_sided = false;

        std::vector<char> seen(arc_disk_.size(), 0);
        std::vector<long> class_size(arc_disk_.size(), 0);
        for (std::size_t s = 0; s < arc_disk_.size(); ++s) ++class_size[arc_uf_.find(static_cast<int>(s))];
        for (std::size_t s = 0; s < arc_disk_.size(); ++s) {
            int r = arc_uf_.find(static_cast<int>(s));
            if (seen[r]) continue;
            seen[r] = 1;
            auto& c = out.components[out.disk_component[arc_disk_[s]]];
            c.edges += 1;
            if (class_size[r] == 1) c.boundary_arcs += 1;
        }
        std::vector<char> pseen(point_disk_.size(), 0);
        for (std::size_t s = 0; s < point_disk_.size(); ++s) {
            int r = point_uf_.find(static_cast<int>(s));
            if (pseen[r]) continue;
            pseen[r] = 1;
            out.components[out.disk_component[point_disk_[s]]].vertices += 1;
        }
        return out;
    }

    const Triangulation& tri_;
    const NormalVector& v_;
    std::vector<TetDisks> tets_;
    std::vector<long> first_disk_;
    std::vector<DiskRef> disks_;
    std::vector<long> arc_base_, point_base_;
    std::vector<long> arc_disk_;
    std::vector<char> arc_toward_;
    std::vector<long> point_disk_;
    ParityUnionFind disk_uf_;
    UnionFind arc_uf_, point_uf_;
    std::vector<long> one_sided_;
};

}  // namespace

EmbeddedSurface instantiate(const Triangulation& tri, const NormalVector& v) { return Builder(tri, v).run(); }

std::vector<NormalVector> components(const Triangulation& tri, const NormalVector& v)
{
    auto s = instantiate(tri, v);
    std::vector<NormalVector> out;
    for (auto& c : s.components) out.push_back(std::move(c.vector));
    std::sort(out.begin(), out.end());
    return out;
}

bool is_two_sphere(const Triangulation& tri, const NormalVector& v)
{
    if (v.is_zero() || !is_embeddable(v) || !satisfies_matching(tri, v)) return false;
    auto s = instantiate(tri, v);
    return s.components.size() == 1 && s.components[0].is_sphere();
}

bool is_normal_two_sphere(const Triangulation& tri, const NormalVector& v)
{
    return v.octagon_total() == 0 && is_two_sphere(tri, v);
}

bool is_octagonal_almost_normal_sphere(const Triangulation& tri, const NormalVector& v)
{
    return v.octagon_total() == 1 && is_two_sphere(tri, v);
}

bool is_vertex_linking(const Triangulation& tri, const NormalVector& v)
{
    for (int c = 0; c < tri.vertex_count(); ++c)
        if (v == vertex_linking_vector(tri, c, v.mode())) return true;
    return false;
}

bool are_disjoint(const Triangulation& tri, const NormalVector& a, const NormalVector& b)
{
    if (a.mode() != b.mode() || a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "vectors of different shapes");
    auto sum = a + b;
    if (!is_embeddable(sum)) return false;
    auto joint = components(tri, sum);
    auto parts = components(tri, a);
    auto pb = components(tri, b);
    parts.insert(parts.end(), pb.begin(), pb.end());
    std::sort(parts.begin(), parts.end());
    return joint == parts;
}

}  // namespace s3rec
