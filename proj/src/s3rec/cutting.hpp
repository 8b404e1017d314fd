#pragma once

#include "s3rec/normal_coords.hpp"
#include "s3rec/surface.hpp"
#include "s3rec/triangulation.hpp"

#include <vector>

namespace s3rec {

struct ComponentTag {
    enum class Kind { Generic, VertexStar };
    Kind kind = Kind::Generic;
    int vertex_class = -1;  // VertexStar only

    friend bool operator==(const ComponentTag&, const ComponentTag&) = default;
};

const char* tag_name(ComponentTag::Kind k);

// One side of one cut surface; side 0 is the side holding the positive
// normal of the surface's first disk.
struct SurfaceSide {
    int surface = 0;
    int side = 0;

    friend bool operator==(const SurfaceSide&, const SurfaceSide&) = default;
    friend auto operator<=>(const SurfaceSide&, const SurfaceSide&) = default;
};

// Pair of boundary faces identified when the cut is undone.
struct RegluePair {
    int component_a = 0, tet_a = 0, face_a = 0;
    int component_b = 0, tet_b = 0, face_b = 0;
    Perm4 map;  // vertices of tet_a to vertices of tet_b
};

struct CutResult {
    std::vector<Triangulation> components;
    std::vector<ComponentTag> tags;
    // Per component, the surface sides on its boundary (sorted).
    std::vector<std::vector<SurfaceSide>> boundary;
    // Connected components of the cut surface.
    std::vector<NormalVector> surfaces;
    std::vector<RegluePair> reglue_pairs;
    // Per original tetrahedron, the component holding the part of it that
    // meets the centres of all four faces. Meaningful for tetrahedra the cut
    // surface crosses without quadrilaterals.
    std::vector<int> central_component;
    // Original vertex classes contained in each component.
    std::vector<std::vector<int>> vertices;
};

// Cuts along the normal surface v (all of its disks). Each tetrahedron is
// split into cells by the disks, every polygon on a cell boundary is coned
// from its centre and every cell from its centre. Throws NotAdmissible for
// non-embeddable input and InvalidArgument when matching fails.
CutResult cut_along_surface(const Triangulation& tri, const NormalVector& v);

// Requires a connected normal 2-sphere: NotConnectedSurface for
// disconnected input, NotASphere otherwise (including the zero vector).
CutResult cut_along(const Triangulation& tri, const NormalVector& v);

// Cuts along several pairwise disjoint spheres at once.
CutResult cut_along_family(const Triangulation& tri, const std::vector<NormalVector>& spheres);

// Boundary components of a triangulation, each as a closed surface made of
// boundary faces; `faces` receives the (tet, face) of each triangle.
std::vector<SurfaceTriangulation> boundary_surfaces(const Triangulation& tri);
std::vector<SurfaceTriangulation> boundary_surfaces(const Triangulation& tri,
                                                    std::vector<std::vector<std::array<int, 2>>>& faces);

// Glues the components back along the cut surfaces.
Triangulation reglue(const CutResult& cut);

}  // namespace s3rec
