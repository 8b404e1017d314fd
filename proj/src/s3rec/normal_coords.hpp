#pragma once

#include "s3rec/homology.hpp"
#include "s3rec/integer.hpp"
#include "s3rec/triangulation.hpp"

#include <array>
#include <string>
#include <vector>

namespace s3rec {

// Coordinates per tetrahedron: triangles cutting off corners 0..3, quads
// 0..2, then (almost normal only) octagons 0..2. Quad and octagon k use the
// vertex pairing {0,k+1} | {the other two}: a quad of type k separates the
// two blocks, an octagon of type k meets the two block edges twice each.
enum class CoordMode { Normal, AlmostNormal };

constexpr int coords_per_tet(CoordMode mode) { return mode == CoordMode::Normal ? 7 : 10; }

enum class DiskKind { Triangle, Quad, Octagon };

struct DiskType {
    int tet = 0;
    DiskKind kind = DiskKind::Triangle;
    int index = 0;  // corner for triangles, pairing for quads/octagons

    int local_coordinate() const
    {
        return kind == DiskKind::Triangle ? index : kind == DiskKind::Quad ? 4 + index : 7 + index;
    }
    static DiskType from_local(int tet, int local);
};

// The vertex paired with v under pairing k.
constexpr int pairing_partner(int k, int v)
{
    constexpr int table[3][4] = {{1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    return table[k][v];
}

constexpr bool in_first_block(int k, int v) { return v == 0 || v == k + 1; }

// Number of normal arcs of type u (cutting off vertex u) that a disk of the
// given local coordinate leaves on face f. u must differ from f.
int arc_count(int local, int face, int u);

// Number of points where a disk meets edge e of its tetrahedron.
int edge_point_count(int local, int edge);

// Number of sides of the disk (3, 4 or 8).
int disk_sides(int local);

class NormalVector {
public:
    NormalVector() = default;
    NormalVector(CoordMode mode, IntVector coords) : mode_(mode), coords_(std::move(coords)) {}
    static NormalVector zero(CoordMode mode, int tetrahedra)
    {
        return NormalVector(mode, IntVector(static_cast<std::size_t>(coords_per_tet(mode)) * tetrahedra));
    }

    CoordMode mode() const { return mode_; }
    int tetrahedra() const { return static_cast<int>(coords_.size()) / coords_per_tet(mode_); }
    const IntVector& coords() const { return coords_; }
    IntVector& coords() { return coords_; }
    std::size_t size() const { return coords_.size(); }

    const Integer& at(int tet, int local) const { return coords_[static_cast<std::size_t>(tet) * coords_per_tet(mode_) + local]; }
    Integer& at(int tet, int local) { return coords_[static_cast<std::size_t>(tet) * coords_per_tet(mode_) + local]; }

    bool is_zero() const;
    Integer total_disks() const;
    Integer octagon_total() const;

    // 10t copy with zero octagons (from normal) or 7t copy (requires no octagons).
    NormalVector as_mode(CoordMode mode) const;

    NormalVector& operator+=(const NormalVector& o);
    friend NormalVector operator+(NormalVector a, const NormalVector& b) { return a += b; }
    friend bool operator==(const NormalVector& a, const NormalVector& b) = default;
    friend bool operator<(const NormalVector& a, const NormalVector& b) { return a.coords_ < b.coords_; }

    std::string to_string() const;

private:
    CoordMode mode_ = CoordMode::Normal;
    IntVector coords_;
};

// Matching equations: one row per interior face gluing and arc type.
struct MatchingSystem {
    enum class Kind { Plain, Normal, AlmostNormal };

    IntegerMatrix matrix;
    Kind kind = Kind::Plain;
    int tetrahedra = 0;

    struct RowOrigin {
        int tet = 0;
        int face = 0;
        int arc = 0;  // vertex of `face` cut off by the arc
    };
    std::vector<RowOrigin> origins;

    int variables() const { return matrix.cols(); }

    // An unstructured system A x = 0, x >= 0.
    static MatchingSystem plain(IntegerMatrix a)
    {
        MatchingSystem s;
        s.matrix = std::move(a);
        return s;
    }
};

MatchingSystem matching_matrix(const Triangulation& tri, CoordMode mode);

// True iff every matching equation holds exactly.
bool satisfies_matching(const Triangulation& tri, const NormalVector& v);

NormalVector vertex_linking_vector(const Triangulation& tri, int vertex_class, CoordMode mode = CoordMode::Normal);

// Quad condition; in almost normal mode additionally exactly one octagon
// coordinate equal to 1, in a tetrahedron without quads. Throws
// LengthMismatch when the vector does not have the mode's length.
bool is_admissible(const NormalVector& v, CoordMode mode, int tetrahedra);

// At most one quad or octagon kind per tetrahedron and at most one octagon
// in total: the vectors that instantiate as embedded surfaces.
bool is_embeddable(const NormalVector& v);

// Number of points where the surface meets the edges of the triangulation.
Integer weight(const Triangulation& tri, const NormalVector& v);

// V - E + F from the coordinates alone.
Integer euler_characteristic(const Triangulation& tri, const NormalVector& v);

}  // namespace s3rec
