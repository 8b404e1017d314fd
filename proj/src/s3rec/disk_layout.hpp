#pragma once

// Internal: positions of disks, arcs and edge points inside one tetrahedron
// for an embeddable vector. Shared by the surface builder and the cutter.

#include "s3rec/normal_coords.hpp"

#include <array>
#include <vector>

namespace s3rec::detail {

struct ArcRef {
    int face = 0;
    int u = 0;      // the vertex of `face` the arc cuts off
    long pos = 0;   // counted from u
    bool toward_u;  // the disk's positive side faces u at this arc
};

struct TetDisks {
    std::array<long, 4> tri{};
    int quad = -1;  // pairing of the quads present, if any
    long quads = 0;
    int oct = -1;

    static TetDisks of(const NormalVector& v, int t)
    {
        TetDisks d;
        for (int c = 0; c < 4; ++c) d.tri[c] = v.at(t, c).convert_to<long>();
        for (int k = 0; k < 3; ++k)
            if (v.at(t, 4 + k) != 0) {
                d.quad = k;
                d.quads = v.at(t, 4 + k).convert_to<long>();
            }
        if (v.mode() == CoordMode::AlmostNormal)
            for (int k = 0; k < 3; ++k)
                if (v.at(t, 7 + k) != 0) d.oct = k;
        return d;
    }

    long disk_count() const { return tri[0] + tri[1] + tri[2] + tri[3] + quads + (oct >= 0 ? 1 : 0); }

    // Arcs of type u on face f.
    long arcs(int f, int u) const
    {
        long n = tri[u];
        if (quad >= 0 && pairing_partner(quad, f) == u) n += quads;
        if (oct >= 0 && pairing_partner(oct, f) != u) n += 1;
        return n;
    }
    // Points on edge e.
    long points(int e) const
    {
        int a = kEdgeVertices[e][0], b = kEdgeVertices[e][1];
        long n = tri[a] + tri[b];
        if (quad >= 0 && in_first_block(quad, a) != in_first_block(quad, b)) n += quads;
        if (oct >= 0) n += in_first_block(oct, a) == in_first_block(oct, b) ? 2 : 1;
        return n;
    }
    // Position of quad copy j counted from vertex u.
    long quad_position(int u, long j) const { return tri[u] + (in_first_block(quad, u) ? j : quads - 1 - j); }

    // The arcs of one disk. The arc (f, u, pos) meets edge {u, w} at the
    // point `pos` counted from u.
    std::vector<ArcRef> disk_arcs(int local, long copy) const
    {
        std::vector<ArcRef> out;
        if (local < 4) {
            for (int f = 0; f < 4; ++f)
                if (f != local) out.push_back({f, local, copy, true});
        } else if (local < 7) {
            const int k = local - 4;
            for (int f = 0; f < 4; ++f) {
                int u = pairing_partner(k, f);
                out.push_back({f, u, quad_position(u, copy), in_first_block(k, u)});
            }
        } else {
            const int k = local - 7;
            for (int f = 0; f < 4; ++f)
                for (int u = 0; u < 4; ++u)
                    if (u != f && u != pairing_partner(k, f)) out.push_back({f, u, tri[u], in_first_block(k, u)});
        }
        return out;
    }
};

}  // namespace s3rec::detail
