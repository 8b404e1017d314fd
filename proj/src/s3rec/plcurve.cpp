#include "s3rec/plcurve.hpp"

#include "s3rec/error.hpp"
#include "s3rec/union_find.hpp"

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <map>
#include <set>
#include <sstream>

namespace s3rec {

NormalCurveVector NormalCurveVector::from_counts(std::vector<long> counts)
{
    if (counts.size() % 3 != 0) throw Error(ErrorCode::NotNormal, "curve vector length is not a multiple of 3");
    for (long x : counts)
        if (x < 0) throw Error(ErrorCode::NotNormal, "negative arc count");
    NormalCurveVector c;
    c.counts_ = std::move(counts);
    return c;
}

NormalCurveVector NormalCurveVector::from_arcs(int triangles, const std::vector<Arc>& arcs)
{
    NormalCurveVector c;
    c.counts_.assign(static_cast<std::size_t>(triangles) * 3, 0);
    for (const auto& a : arcs) {
        if (a.triangle < 0 || a.triangle >= triangles || a.edge_a < 0 || a.edge_a > 2 || a.edge_b < 0 || a.edge_b > 2)
            throw Error(ErrorCode::InvalidArgument, "arc out of range");
        if (a.edge_a == a.edge_b) throw Error(ErrorCode::NotNormal, "arc has both endpoints on the same edge");
        c.at(a.triangle, 3 - a.edge_a - a.edge_b) += 1;
    }
    return c;
}

bool NormalCurveVector::is_zero() const
{
    return std::all_of(counts_.begin(), counts_.end(), [](long x) { return x == 0; });
}

std::string NormalCurveVector::to_string() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < counts_.size(); ++i) out << (i ? " " : "") << counts_[i];
    return out.str();
}

const char* curve_status_name(CurveStatus s)
{
    switch (s) {
    case CurveStatus::StablePLGeodesic: return "StablePLGeodesic";
    case CurveStatus::UnstablePLGeodesic: return "UnstablePLGeodesic";
    case CurveStatus::NormalNotGeodesic: return "NormalNotGeodesic";
    case CurveStatus::NotNormal: return "NotNormal";
    case CurveStatus::Undetermined: return "Undetermined";
    }
    return "?";
}

namespace {

void check_shape(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    if (c.triangles() != f.size()) throw Error(ErrorCode::LengthMismatch, "curve vector does not match the surface");
}

// Lower and higher vertex of triangle edge k.
std::array<int, 2> edge_ends(int k) { return {k == 0 ? 1 : 0, k == 2 ? 1 : 2}; }

// Arc through the point `s` counted from vertex u on edge k: (corner, copy).
std::array<long, 2> arc_at(const NormalCurveVector& c, int t, int k, int u, long s)
{
    const int w = 3 - k - u;
    if (s < c.at(t, u)) return {u, s};
    return {w, c.edge_points(t, k) - 1 - s};
}

}  // namespace

bool curve_matches(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    check_shape(f, c);
    for (const auto& g : f.gluings())
        if (c.edge_points(g.source_triangle, g.source_edge) != c.edge_points(g.target_triangle, g.target_edge)) return false;
    return true;
}

long curve_weight(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    check_shape(f, c);
    std::vector<bool> done(f.edge_count(), false);
    long w = 0;
    for (int t = 0; t < f.size(); ++t)
        for (int k = 0; k < 3; ++k) {
            int e = f.edge_class(t, k);
            if (done[e]) continue;
            done[e] = true;
            w += c.edge_points(t, k);
        }
    return w;
}

int curve_component_count(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    check_shape(f, c);
    std::vector<long> base(static_cast<std::size_t>(f.size()) * 3 + 1, 0);
    for (std::size_t i = 0; i < c.counts().size(); ++i) base[i + 1] = base[i] + c.counts()[i];
    auto id = [&](int t, long corner, long copy) { return static_cast<int>(base[t * 3 + corner] + copy); };
    UnionFind uf(static_cast<int>(base.back()));
    for (const auto& g : f.gluings()) {
        const int k = g.source_edge;
        const int u = edge_ends(k)[0];
        const long n = c.edge_points(g.source_triangle, k);
        for (long s = 0; s < n; ++s) {
            auto a = arc_at(c, g.source_triangle, k, u, s);
            auto b = arc_at(c, g.target_triangle, g.target_edge, g.map[u], s);
            uf.unite(id(g.source_triangle, a[0], a[1]), id(g.target_triangle, b[0], b[1]));
        }
    }
    std::vector<int> labels;
    return uf.labels(labels);
}

NormalCurveVector vertex_linking_curve(const SurfaceTriangulation& f, int vclass)
{
    std::vector<long> counts(static_cast<std::size_t>(f.size()) * 3, 0);
    for (int t = 0; t < f.size(); ++t)
        for (int v = 0; v < 3; ++v)
            if (f.vertex_class(t, v) == vclass) counts[t * 3 + v] += 1;
    return NormalCurveVector::from_counts(std::move(counts));
}

bool is_vertex_linking_curve(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    for (int v = 0; v < f.vertex_count(); ++v)
        if (c == vertex_linking_curve(f, v)) return true;
    return false;
}

std::vector<NormalCurveVector> enumerate_normal_curves(const SurfaceTriangulation& f, long max_weight)
{
    if (!f.is_closed()) throw Error(ErrorCode::NotClosed, "curve enumeration requires a closed surface");
    std::vector<NormalCurveVector> out;
    if (max_weight <= 0) return out;
    const int E = f.edge_count();
    std::vector<long> n(E, 0);
    // Triangles whose three edge classes are all assigned once class i is.
    std::vector<std::vector<int>> ready(E);
    for (int t = 0; t < f.size(); ++t) {
        int last = 0;
        for (int k = 0; k < 3; ++k) last = std::max(last, f.edge_class(t, k));
        ready[last].push_back(t);
    }
    auto corner = [&](int t, int c) {
        long s = 0;
        for (int k = 0; k < 3; ++k) s += (k == c ? -1 : 1) * n[f.edge_class(t, k)];
        return s;
    };
    auto rec = [&](auto& self, int i, long budget) -> void {
        if (i == E) {
            std::vector<long> counts(static_cast<std::size_t>(f.size()) * 3);
            for (int t = 0; t < f.size(); ++t)
                for (int c = 0; c < 3; ++c) counts[t * 3 + c] = corner(t, c) / 2;
            auto cv = NormalCurveVector::from_counts(std::move(counts));
            if (!cv.is_zero() && curve_component_count(f, cv) == 1) out.push_back(std::move(cv));
            return;
        }
        for (long x = 0; x <= budget; ++x) {
            n[i] = x;
            bool ok = true;
            for (int t : ready[i])
                for (int c = 0; c < 3 && ok; ++c) {
                    long s = corner(t, c);
                    if (s < 0 || s % 2 != 0) ok = false;
                }
            if (ok) self(self, i + 1, budget - x);
        }
        n[i] = 0;
    };
    rec(rec, 0, max_weight);
    std::sort(out.begin(), out.end(), [&](const NormalCurveVector& a, const NormalCurveVector& b) {
        long wa = curve_weight(f, a), wb = curve_weight(f, b);
        return wa != wb ? wa < wb : a < b;
    });
    return out;
}

std::vector<std::vector<int>> complementary_regions(const SurfaceTriangulation& f, const NormalCurveVector& c)
{
    check_shape(f, c);
    // Pieces of each triangle: corner (c), strip (c, m), central.
    std::map<std::array<long, 4>, int> piece;
    auto id = [&](int t, long kind, long corner, long m) {
        auto [it, fresh] = piece.emplace(std::array<long, 4>{t, kind, corner, m}, static_cast<int>(piece.size()));
        return it->second;
    };
    // Piece next to segment s (counted from vertex u) of edge k.
    auto piece_at = [&](int t, int k, int u, long s) {
        const int w = 3 - k - u;
        const long n = c.edge_points(t, k);
        int v = u;
        if (s > c.at(t, u)) {
            v = w;
            s = n - s;
        }
        if (s == c.at(t, v)) return id(t, 2, 0, 0);
        if (s == 0) return id(t, 0, v, 0);
        return id(t, 1, v, s - 1);
    };
    std::vector<std::array<int, 2>> unions;
    for (const auto& g : f.gluings()) {
        const int k = g.source_edge;
        const int u = edge_ends(k)[0];
        const long n = c.edge_points(g.source_triangle, k);
        for (long s = 0; s <= n; ++s)
            unions.push_back({piece_at(g.source_triangle, k, u, s), piece_at(g.target_triangle, g.target_edge, g.map[u], s)});
    }
    std::vector<std::array<int, 2>> vertex_piece;
    for (int t = 0; t < f.size(); ++t)
        for (int v = 0; v < 3; ++v)
            vertex_piece.push_back({f.vertex_class(t, v), c.at(t, v) > 0 ? id(t, 0, v, 0) : id(t, 2, 0, 0)});
    // Every piece touches an edge segment, so all are registered by now.
    UnionFind uf(static_cast<int>(piece.size()));
    for (auto [a, b] : unions) uf.unite(a, b);
    std::vector<int> labels;
    const int regions = uf.labels(labels);
    std::vector<std::set<int>> verts(regions);
    for (auto [v, p] : vertex_piece) verts[labels[p]].insert(v);
    std::vector<std::vector<int>> out;
    for (const auto& s : verts) out.emplace_back(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

struct Run {
    int start = 0;
    int length = 0;
    bool loop = false;
};

std::vector<Run> runs_at(const SurfaceTriangulation::Umbrella& u, const NormalCurveVector& c)
{
    const int d = static_cast<int>(u.corners.size());
    auto x = [&](int i) { return c.at(u.corners[i][0], u.corners[i][1]); };
    auto crossed = [&](int i) { return c.edge_points(u.corners[i][0], u.entry_edges[i]) > 0; };
    std::vector<Run> out;
    bool all = true;
    for (int i = 0; i < d; ++i) all = all && x(i) > 0;
    if (all) return {{0, d, true}};
    for (int a = 0; a < d; ++a) {
        if (!crossed(a) || x((a + d - 1) % d) > 0) continue;
        int r = 0;
        while (x((a + r) % d) > 0) ++r;
        out.push_back({a, r, false});
    }
    return out;
}

}  // namespace

namespace {

// Explicit picture of a curve: points on each triangle edge, numbered from
// the edge's lower vertex, and arcs joining them.
class Diagram {
public:
    struct End {
        int edge = -1;  // negative: loose end awaiting reconnection
        long pos = 0;
    };
    struct Arc {
        End a, b;
    };

    Diagram(const SurfaceTriangulation& f, const NormalCurveVector& c) : f_(f), n_(f.size()), arcs_(f.size())
    {
        for (int t = 0; t < f.size(); ++t) {
            for (int k = 0; k < 3; ++k) n_[t][k] = c.edge_points(t, k);
            for (int v = 0; v < 3; ++v)
                for (long m = 0; m < c.at(t, v); ++m) {
                    const int k1 = (v + 1) % 3, k2 = (v + 2) % 3;
                    arcs_[t].push_back({{k1, from(t, k1, v, m)}, {k2, from(t, k2, v, m)}});
                }
        }
    }

    // Lower-vertex position of the point `s` counted from vertex u on edge k.
    long from(int t, int k, int u, long s) const { return u == edge_ends(k)[0] ? s : n_[t][k] - 1 - s; }

    // Arc of t ending at (k, p).
    Arc* arc_at(int t, int k, long p)
    {
        for (auto& a : arcs_[t])
            if ((a.a.edge == k && a.a.pos == p) || (a.b.edge == k && a.b.pos == p)) return &a;
        throw Error(ErrorCode::InvalidArgument, "no arc at that point");
    }
    static End& end_at(Arc& a, int k, long p) { return a.a.edge == k && a.a.pos == p ? a.a : a.b; }
    static End& other_end(Arc& a, int k, long p) { return a.a.edge == k && a.a.pos == p ? a.b : a.a; }

    void erase(int t, const Arc* a)
    {
        auto& v = arcs_[t];
        v.erase(v.begin() + (a - v.data()));
    }
    void add(int t, Arc a) { arcs_[t].push_back(a); }

    End* loose(int t, int tag)
    {
        for (auto& a : arcs_[t])
            for (End* e : {&a.a, &a.b})
                if (e->edge == tag) return e;
        throw Error(ErrorCode::InvalidArgument, "missing loose end");
    }
    // Joins the two loose ends in t into a single arc.
    void join_loose(int t)
    {
        Arc* x = nullptr;
        Arc* y = nullptr;
        for (auto& a : arcs_[t]) {
            if (a.a.edge == -1 || a.b.edge == -1) x = &a;
            if (a.a.edge == -2 || a.b.edge == -2) y = &a;
        }
        if (!x || !y || x == y) throw Error(ErrorCode::InvalidArgument, "missing loose end");
        const Arc merged{x->a.edge == -1 ? x->b : x->a, y->a.edge == -2 ? y->b : y->a};
        erase(t, std::max(x, y));
        erase(t, std::min(x, y));
        add(t, merged);
    }

    // Gap next to vertex u on edge k of t, as a lower-vertex insertion index.
    long gap_at(int t, int k, int u) const { return u == edge_ends(k)[0] ? 0 : n_[t][k]; }

    // Inserts a point before lower-position p on edge k of t, on both sides.
    void insert_point(int t, int k, long p)
    {
        auto [t2, k2, p2] = across(t, k, p, true);
        shift(t, k, p, +1);
        shift(t2, k2, p2, +1);
    }
    void erase_point(int t, int k, long p)
    {
        auto [t2, k2, p2] = across(t, k, p, false);
        shift(t, k, p + 1, -1);
        shift(t2, k2, p2 + 1, -1);
    }

    // Same point (or gap, for insertion) seen from the glued triangle.
    std::tuple<int, int, long> across(int t, int k, long p, bool gap) const
    {
        const auto& nb = f_.partner(t, k);
        if (!nb) throw Error(ErrorCode::NotClosed, "curve reaches a boundary edge");
        const int k2 = nb->map[k];
        const bool same = nb->map[edge_ends(k)[0]] == edge_ends(k2)[0];
        const long n = n_[t][k];
        return {nb->triangle, k2, same ? p : (gap ? n - p : n - 1 - p)};
    }

    // Cancels arcs with both ends on one edge until the curve is normal.
    void normalize()
    {
        for (;;) {
            int t = -1;
            long p = 0;
            int k = 0;
            for (int s = 0; s < f_.size() && t < 0; ++s)
                for (auto& a : arcs_[s])
                    if (a.a.edge == a.b.edge && std::abs(a.a.pos - a.b.pos) == 1) {
                        t = s, k = a.a.edge, p = std::min(a.a.pos, a.b.pos);
                        break;
                    }
            if (t < 0) return;
            erase(t, arc_at(t, k, p));
            auto [t2, k2, q1] = across(t, k, p, false);
            auto [t3, k3, q2] = across(t, k, p + 1, false);
            Arc* x = arc_at(t2, k2, q1);
            Arc* y = arc_at(t2, k2, q2);
            if (x == y) {
                erase(t2, x);
                erase_point(t, k, p + 1);
                erase_point(t, k, p);
                continue;
            }
            const End ox = other_end(*x, k2, q1), oy = other_end(*y, k2, q2);
            const Arc* hi = std::max(x, y);
            erase(t2, hi);
            erase(t2, std::min(x, y));
            add(t2, {ox, oy});
            erase_point(t, k, p + 1);
            erase_point(t, k, p);
        }
    }

    std::vector<long> counts() const
    {
        std::vector<long> out(static_cast<std::size_t>(f_.size()) * 3, 0);
        for (int t = 0; t < f_.size(); ++t)
            for (const auto& a : arcs_[t]) {
                if (a.a.edge < 0 || a.b.edge < 0 || a.a.edge == a.b.edge)
                    throw Error(ErrorCode::InvalidArgument, "curve is not normal after the move");
                out[t * 3 + (3 - a.a.edge - a.b.edge)] += 1;
            }
        return out;
    }

private:
    void shift(int t, int k, long from_pos, long delta)
    {
        n_[t][k] += delta;
        for (auto& a : arcs_[t])
            for (End* e : {&a.a, &a.b})
                if (e->edge == k && e->pos >= from_pos) e->pos += delta;
    }

    const SurfaceTriangulation& f_;
    std::vector<std::array<long, 3>> n_;
    std::vector<std::vector<Arc>> arcs_;
};

NormalCurveVector checked(const SurfaceTriangulation& f, std::vector<long> counts)
{
    auto out = NormalCurveVector::from_counts(std::move(counts));
    if (!curve_matches(f, out) || (!out.is_zero() && curve_component_count(f, out) != 1))
        throw Error(ErrorCode::InvalidArgument, "move does not produce a connected normal curve");
    return out;
}

}  // namespace

NormalCurveVector apply_move(const SurfaceTriangulation& f, const NormalCurveVector& c, const CurveMove& m)
{
    check_shape(f, c);
    if (m.vertex < 0 || m.vertex >= f.vertex_count()) throw Error(ErrorCode::InvalidArgument, "no such vertex");
    const auto u = f.umbrella(m.vertex);
    const int d = static_cast<int>(u.corners.size());
    if (m.vanish) {
        if (!(c == vertex_linking_curve(f, m.vertex))) throw Error(ErrorCode::InvalidArgument, "curve is not this vertex link");
        return NormalCurveVector::from_counts(std::vector<long>(c.counts().size(), 0));
    }
    bool found = false;
    for (const auto& r : runs_at(u, c))
        if (!r.loop && r.start == m.run_start && r.length == m.run_length) found = true;
    if (!found) throw Error(ErrorCode::InvalidArgument, "no such run of arcs at the vertex");

    const int a = m.run_start, r = m.run_length;
    auto tri = [&](int i) { return u.corners[(i % d + d) % d][0]; };
    auto vl = [&](int i) { return u.corners[(i % d + d) % d][1]; };
    auto entry = [&](int i) { return u.entry_edges[(i % d + d) % d]; };
    auto exit = [&](int i) { return u.exit_edges[(i % d + d) % d]; };

    Diagram g(f, c);
    // The run enters at edge a (from corner a - 1) and leaves at edge a + r
    // into corner b = a + r; both outer arcs get loose ends.
    const int b = a + r;
    auto loosen = [&](int i, int k, int tag) {
        const long p = g.from(tri(i), k, vl(i), 0);
        Diagram::end_at(*g.arc_at(tri(i), k, p), k, p).edge = tag;
    };
    loosen(b, entry(b), -1);
    loosen(a - 1, exit(a - 1), -2);
    for (int i = a; i < b; ++i) {
        const long p = g.from(tri(i), entry(i), vl(i), 0);
        g.erase(tri(i), g.arc_at(tri(i), entry(i), p));
    }
    for (int i = a; i <= b; ++i) g.erase_point(tri(i), entry(i), g.from(tri(i), entry(i), vl(i), 0));

    if (d - r >= 2) {
        // New path around the far side of the vertex, hugging it.
        for (int i = b + 1; i <= a - 1 + d; ++i) g.insert_point(tri(i), entry(i), g.gap_at(tri(i), entry(i), vl(i)));
        auto near = [&](int i, int k) { return Diagram::End{k, g.from(tri(i), k, vl(i), 0)}; };
        for (int i = b + 1; i < a - 1 + d; ++i) g.add(tri(i), {near(i, entry(i)), near(i, exit(i))});
        *g.loose(tri(b), -1) = near(b, exit(b));
        *g.loose(tri(a - 1), -2) = near(a - 1, entry(a - 1));
    } else {
        g.join_loose(tri(b));
    }
    g.normalize();
    return checked(f, g.counts());
}

std::vector<CurveMove> available_moves(const SurfaceTriangulation& f, const NormalCurveVector& c,
                                       const std::vector<int>& side_vertices)
{
    std::vector<CurveMove> out;
    const long w = curve_weight(f, c);
    for (int v = 0; v < f.vertex_count(); ++v) {
        if (!side_vertices.empty() && !std::binary_search(side_vertices.begin(), side_vertices.end(), v)) continue;
        const auto u = f.umbrella(v);
        for (const auto& r : runs_at(u, c)) {
            CurveMove m{v, r.start, r.length, r.loop, w, 0};
            if (r.loop) {
                if (!(c == vertex_linking_curve(f, v))) continue;
                m.weight_after = 0;
            } else {
                try {
                    m.weight_after = curve_weight(f, apply_move(f, c, m));
                } catch (const Error&) {
                    continue;
                }
            }
            out.push_back(m);
        }
    }
    return out;
}

namespace {

// The region of `c` matching `side` after the curve moved across vertices:
// the side keeps every vertex not yet crossed.
std::vector<int> side_after(const std::vector<int>& side, int crossed)
{
    std::vector<int> out;
    for (int v : side)
        if (v != crossed) out.push_back(v);
    return out;
}

struct SearchResult {
    bool decreased = false;
    bool exhausted_depth = false;
    std::vector<CurveMove> path;
};

SearchResult search_side(const SurfaceTriangulation& f, const NormalCurveVector& c, const std::vector<int>& side, int depth)
{
    const long w0 = curve_weight(f, c);
    struct Node {
        NormalCurveVector curve;
        std::vector<int> side;
        std::vector<CurveMove> path;
    };
    std::vector<Node> frontier{{c, side, {}}};
    std::set<std::pair<NormalCurveVector, std::vector<int>>> seen{{c, side}};
    SearchResult res;
    for (int level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<Node> next;
        for (const auto& node : frontier)
            for (const auto& m : available_moves(f, node.curve, node.side)) {
                if (m.weight_after > w0) continue;
                if (m.weight_after > m.weight_before) continue;
                auto moved = apply_move(f, node.curve, m);
                auto path = node.path;
                path.push_back(m);
                if (m.weight_after < w0) {
                    res.decreased = true;
                    res.path = std::move(path);
                    return res;
                }
                auto s = side_after(node.side, m.vertex);
                if (!seen.insert({moved, s}).second) continue;
                next.push_back({std::move(moved), std::move(s), std::move(path)});
            }
        frontier = std::move(next);
    }
    res.exhausted_depth = !frontier.empty();
    return res;
}

}  // namespace

CurveClassification classify(const SurfaceTriangulation& f, const NormalCurveVector& c, int depth)
{
    check_shape(f, c);
    if (!f.is_closed()) throw Error(ErrorCode::InvalidArgument, "classification requires a closed surface");
    for (long x : c.counts())
        if (x < 0) throw Error(ErrorCode::NotNormal, "negative arc count");
    if (!curve_matches(f, c)) throw Error(ErrorCode::NotNormal, "arc counts do not match across an edge");
    if (c.is_zero() || curve_component_count(f, c) != 1) throw Error(ErrorCode::InvalidArgument, "curve is not connected");

    CurveClassification out;
    out.weight = curve_weight(f, c);
    out.depth_limit = depth < 0 ? static_cast<int>(out.weight) : depth;
    for (const auto& m : available_moves(f, c)) out.one_step_changes.push_back(m.weight_after - m.weight_before);

    const auto regions = complementary_regions(f, c);
    if (regions.size() != 2) {
        out.status = CurveStatus::Undetermined;
        out.note = "non-separating curve: sides are not distinguished by the move search";
        return out;
    }
    int decreasing_sides = 0;
    bool exhausted = false;
    for (const auto& side : regions) {
        auto r = search_side(f, c, side, out.depth_limit);
        if (r.decreased) {
            ++decreasing_sides;
            out.witnesses.push_back({side, std::move(r.path)});
        }
        exhausted = exhausted || r.exhausted_depth;
    }
    const bool all_increase = std::all_of(out.one_step_changes.begin(), out.one_step_changes.end(), [](long d) { return d > 0; });
    if (decreasing_sides == 2) {
        out.status = CurveStatus::UnstablePLGeodesic;
    } else if (decreasing_sides == 1) {
        out.status = CurveStatus::NormalNotGeodesic;
        out.note = "weight decreases towards one side only";
    } else if (all_increase) {
        out.status = CurveStatus::StablePLGeodesic;
    } else if (exhausted) {
        out.status = CurveStatus::Undetermined;
        out.note = "weight-preserving moves remain beyond the depth limit";
    } else {
        out.status = CurveStatus::NormalNotGeodesic;
        out.note = "weight-preserving deformation exists";
    }
    return out;
}

bool replay(const SurfaceTriangulation& f, const NormalCurveVector& c, const SideWitness& w)
{
    const long w0 = curve_weight(f, c);
    NormalCurveVector cur = c;
    auto side = w.side_vertices;
    try {
        for (const auto& m : w.moves) {
            if (!std::binary_search(side.begin(), side.end(), m.vertex)) return false;
            if (curve_weight(f, cur) != m.weight_before) return false;
            if (m.weight_after > m.weight_before) return false;
            cur = apply_move(f, cur, m);
            if (curve_weight(f, cur) != m.weight_after) return false;
            side = side_after(side, m.vertex);
        }
    } catch (const Error&) {
        return false;
    }
    return !w.moves.empty() && curve_weight(f, cur) < w0;
}

}  // namespace s3rec
