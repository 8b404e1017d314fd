#pragma once

#include "s3rec/perm.hpp"

#include <array>
#include <optional>
#include <vector>

namespace s3rec {

// A triangle edge is indexed by the triangle vertex opposite to it.
struct EdgeGluing {
    int source_triangle = 0;
    int source_edge = 0;
    int target_triangle = 0;
    int target_edge = 0;
    Perm3 map;  // vertex map; map[source_edge] == target_edge
};

struct EdgePartner {
    int triangle = 0;
    Perm3 map;
};

// Generalized triangulated surface: triangles with edges glued in pairs.
// Immutable after construction; vertex and edge classes are computed eagerly.
class SurfaceTriangulation {
public:
    SurfaceTriangulation() = default;

    // Accepts each gluing in one or both directions. Throws Error with
    // NonInvolutiveGluing, SelfGluedFace or InvalidGluing.
    static SurfaceTriangulation build(int triangles, const std::vector<EdgeGluing>& gluings);

    int size() const { return static_cast<int>(adj_.size()); }
    const std::optional<EdgePartner>& partner(int tri, int edge) const { return adj_[tri][edge]; }

    int vertex_class(int tri, int vertex) const { return vertex_class_[tri][vertex]; }
    int edge_class(int tri, int edge) const { return edge_class_[tri][edge]; }
    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return edge_count_; }
    int boundary_edge_count() const { return boundary_edges_; }

    bool is_closed() const { return boundary_edges_ == 0; }
    long euler_characteristic() const
    {
        return static_cast<long>(vertex_count_) - edge_count_ + size();
    }

    // Component index per triangle, and the number of components.
    const std::vector<int>& component_of_triangle() const { return component_; }
    int component_count() const { return component_count_; }
    bool is_connected() const { return component_count_ == 1; }
    bool is_orientable() const;

    // Closed connected surface with Euler characteristic 2.
    bool is_sphere() const { return is_closed() && is_connected() && euler_characteristic() == 2; }

    // Splits into connected components, each renumbered from zero.
    std::vector<SurfaceTriangulation> split_components() const;

    std::vector<EdgeGluing> gluings() const;

    // Corners around a vertex class of a closed surface, in cyclic order.
    // Entry i is (triangle, local vertex); edges()[i] is the local edge of
    // corner i through which the walk leaves towards corner i + 1.
    struct Umbrella {
        std::vector<std::array<int, 2>> corners;
        std::vector<int> exit_edges;
        std::vector<int> entry_edges;
    };
    Umbrella umbrella(int vertex_class) const;

private:
    void compute_skeleton();

    std::vector<std::array<std::optional<EdgePartner>, 3>> adj_;
    std::vector<std::array<int, 3>> vertex_class_;
    std::vector<std::array<int, 3>> edge_class_;
    std::vector<int> component_;
    int vertex_count_ = 0;
    int edge_count_ = 0;
    int boundary_edges_ = 0;
    int component_count_ = 0;
};

}  // namespace s3rec
