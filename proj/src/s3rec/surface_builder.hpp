#pragma once

#include "s3rec/normal_coords.hpp"
#include "s3rec/triangulation.hpp"

#include <vector>

namespace s3rec {

// Copy-ordering convention: triangle copies at corner c are numbered from c
// outwards; quad and octagon copies of pairing k are numbered from the block
// containing vertex 0 towards the other block. Arcs of one type on a face
// are numbered from the vertex they cut off, and the k-th arc on one side of
// a glued face meets the k-th arc on the other side.
struct DiskRef {
    int tet = 0;
    int local = 0;
    long copy = 0;
};

struct SurfaceComponent {
    NormalVector vector;
    long vertices = 0;
    long edges = 0;
    long faces = 0;
    long boundary_arcs = 0;
    bool two_sided = true;

    long euler_characteristic() const { return vertices - edges + faces; }
    bool is_closed() const { return boundary_arcs == 0; }
    bool is_sphere() const { return is_closed() && euler_characteristic() == 2; }
};

struct EmbeddedSurface {
    std::vector<DiskRef> disks;
    std::vector<int> disk_component;
    std::vector<SurfaceComponent> components;

    long euler_characteristic() const;
    // Sum of the component vectors; equals the instantiated vector.
    NormalVector recovered_vector(CoordMode mode, int tetrahedra) const;
};

// Upper bound on the number of disks instantiate() will place.
inline constexpr long kMaxInstantiatedDisks = 4'000'000;

// Throws NotAdmissible unless the vector is embeddable, and InvalidArgument
// when it violates the matching equations.
EmbeddedSurface instantiate(const Triangulation& tri, const NormalVector& v);

// Vectors of the connected components, sorted.
std::vector<NormalVector> components(const Triangulation& tri, const NormalVector& v);

// Connected closed surface with Euler characteristic 2. Accepts normal and
// almost normal vectors; the zero vector is not a sphere.
bool is_two_sphere(const Triangulation& tri, const NormalVector& v);

// Normal-mode sphere (no octagons).
bool is_normal_two_sphere(const Triangulation& tri, const NormalVector& v);

// Almost normal sphere with exactly one octagon.
bool is_octagonal_almost_normal_sphere(const Triangulation& tri, const NormalVector& v);

// Equal to the link of some vertex class.
bool is_vertex_linking(const Triangulation& tri, const NormalVector& v);

// Disjointness test for two embeddable surfaces: the sum is embeddable and
// instantiates as the union of the components of both.
bool are_disjoint(const Triangulation& tri, const NormalVector& a, const NormalVector& b);

}  // namespace s3rec
