#pragma once

#include "s3rec/perm.hpp"
#include "s3rec/surface.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace s3rec {

// Faces are indexed by the opposite vertex; edges 0..5 are the vertex pairs
// 01, 02, 03, 12, 13, 23.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int edge_index(int a, int b)
{
    if (a > b) std::swap(a, b);
    constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[a][b];
}

struct FaceGluing {
    int source_tet = 0;
    int source_face = 0;
    int target_tet = 0;
    int target_face = 0;
    Perm4 map;  // vertex map; map[source_face] == target_face
};

struct FacePartner {
    int tet = 0;
    Perm4 map;
};

// Generalized (semi-simplicial) triangulation of a 3-manifold, possibly with
// boundary. The skeleton is computed at construction; instances are immutable.
class Triangulation {
public:
    Triangulation() = default;

    // Each gluing may be listed once or in both directions. Throws Error with
    // NonInvolutiveGluing, SelfGluedFace, BadEdgeIdentification or InvalidGluing.
    static Triangulation build(int tetrahedra, const std::vector<FaceGluing>& gluings);

    int size() const { return static_cast<int>(adj_.size()); }
    const std::optional<FacePartner>& partner(int tet, int face) const { return adj_[tet][face]; }

    int vertex_class(int tet, int vertex) const { return vertex_class_[tet][vertex]; }
    int edge_class(int tet, int edge) const { return edge_class_[tet][edge]; }
    // +1 if the tetrahedron's edge (lower vertex -> higher vertex) agrees with
    // the class orientation, -1 otherwise.
    int edge_orientation(int tet, int edge) const { return edge_sign_[tet][edge]; }
    int face_class(int tet, int face) const { return face_class_[tet][face]; }
    // Orientation of the face (ascending vertex order) relative to its class.
    int face_orientation(int tet, int face) const { return face_sign_[tet][face]; }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return edge_count_; }
    int face_count() const { return face_count_; }
    int boundary_face_count() const { return boundary_faces_; }
    bool is_closed() const { return boundary_faces_ == 0; }

    // Number of (tetrahedron, edge) wedges in each edge class.
    int edge_degree(int edge_class) const { return edge_degree_[edge_class]; }
    bool edge_on_boundary(int edge_class) const { return edge_boundary_[edge_class]; }

    // Corners (tet, vertex) belonging to a vertex class.
    std::vector<std::array<int, 2>> corners(int vertex_class) const;

    std::vector<FaceGluing> gluings() const;

    // Connected components (by tetrahedron), and their count.
    int component_count() const { return component_count_; }
    int component_of(int tet) const { return component_[tet]; }

private:
    void compute_skeleton();

    std::vector<std::array<std::optional<FacePartner>, 4>> adj_;
    std::vector<std::array<int, 4>> vertex_class_;
    std::vector<std::array<int, 6>> edge_class_;
    std::vector<std::array<int, 6>> edge_sign_;
    std::vector<std::array<int, 4>> face_class_;
    std::vector<std::array<int, 4>> face_sign_;
    std::vector<int> edge_degree_;
    std::vector<bool> edge_boundary_;
    std::vector<int> component_;
    int vertex_count_ = 0;
    int edge_count_ = 0;
    int face_count_ = 0;
    int boundary_faces_ = 0;
    int component_count_ = 0;
};

// Triangles cutting off every corner in the class, glued across faces.
// Triangle edge k corresponds to the tetrahedron face opposite the k-th
// remaining vertex in ascending order.
SurfaceTriangulation vertex_link(const Triangulation& tri, int vertex_class);

struct ManifoldCheck {
    enum class Reason { Ok, BoundaryFace, BadEdge, BadVertexLink };
    Reason reason = Reason::Ok;
    // BoundaryFace: {tet, face}; BadEdge: {edge class}; BadVertexLink:
    // {vertex class, link Euler characteristic, link component count}.
    std::vector<long> witness;

    bool ok() const { return reason == Reason::Ok; }
};

const char* reason_name(ManifoldCheck::Reason r);

ManifoldCheck is_closed_3_manifold(const Triangulation& tri);

// True iff tetrahedra can be oriented so that every gluing reverses
// orientation on the shared face.
bool is_orientable(const Triangulation& tri);

// Relabels tetrahedra: tetrahedron i becomes order[i].
Triangulation relabel(const Triangulation& tri, const std::vector<int>& order);

// Disjoint union, tetrahedra of `b` numbered after those of `a`.
Triangulation disjoint_union(const Triangulation& a, const Triangulation& b);

}  // namespace s3rec
