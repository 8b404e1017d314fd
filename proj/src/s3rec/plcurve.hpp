#pragma once

#include "s3rec/surface.hpp"

#include <string>
#include <vector>

namespace s3rec {

// Normal curve on a triangulated surface: per triangle, the number of arcs
// cutting off each corner (the arc at corner c joins the two edges meeting
// at c). Triangle edge k is opposite vertex k.
class NormalCurveVector {
public:
    NormalCurveVector() = default;

    // Throws NotNormal for negative counts or a length that is not 3n.
    static NormalCurveVector from_counts(std::vector<long> counts);

    // Arc given by the two edges it joins. An arc with both ends on the same
    // edge doubles back and is rejected with NotNormal.
    struct Arc {
        int triangle = 0;
        int edge_a = 0;
        int edge_b = 0;
    };
    static NormalCurveVector from_arcs(int triangles, const std::vector<Arc>& arcs);

    int triangles() const { return static_cast<int>(counts_.size() / 3); }
    long at(int tri, int corner) const { return counts_[static_cast<std::size_t>(tri) * 3 + corner]; }
    long& at(int tri, int corner) { return counts_[static_cast<std::size_t>(tri) * 3 + corner]; }
    const std::vector<long>& counts() const { return counts_; }
    bool is_zero() const;

    // Points on triangle edge k.
    long edge_points(int tri, int edge) const { return at(tri, (edge + 1) % 3) + at(tri, (edge + 2) % 3); }

    std::string to_string() const;

    friend bool operator==(const NormalCurveVector&, const NormalCurveVector&) = default;
    friend auto operator<=>(const NormalCurveVector&, const NormalCurveVector&) = default;

private:
    std::vector<long> counts_;
};

// Edge point counts agree across every glued edge.
bool curve_matches(const SurfaceTriangulation& f, const NormalCurveVector& c);

// Number of crossings with the edges of the triangulation.
long curve_weight(const SurfaceTriangulation& f, const NormalCurveVector& c);

// Connected components of the instantiated curve.
int curve_component_count(const SurfaceTriangulation& f, const NormalCurveVector& c);

NormalCurveVector vertex_linking_curve(const SurfaceTriangulation& f, int vertex_class);
bool is_vertex_linking_curve(const SurfaceTriangulation& f, const NormalCurveVector& c);

// Connected nonzero normal curves of weight <= max_weight on a closed
// surface, sorted by weight then coordinates.
std::vector<NormalCurveVector> enumerate_normal_curves(const SurfaceTriangulation& f, long max_weight);

// Vertex slide: the run of innermost arcs around a vertex, starting at the
// umbrella edge `run_start` and made of `run_length` corner arcs, is pushed
// across the vertex, then any bigon this creates against an edge is cancelled
// so the result is normal again. A vanishing move removes a curve that is a
// vertex link.
struct CurveMove {
    int vertex = 0;
    int run_start = 0;
    int run_length = 0;
    bool vanish = false;
    long weight_before = 0;
    long weight_after = 0;

    friend bool operator==(const CurveMove&, const CurveMove&) = default;
};

// One side of a separating curve, named by the vertex classes it contains.
struct SideWitness {
    std::vector<int> side_vertices;
    std::vector<CurveMove> moves;  // weight never increases; ends below the start
};

enum class CurveStatus { StablePLGeodesic, UnstablePLGeodesic, NormalNotGeodesic, NotNormal, Undetermined };

const char* curve_status_name(CurveStatus s);

struct CurveClassification {
    CurveStatus status = CurveStatus::Undetermined;
    long weight = 0;
    int depth_limit = 0;
    std::vector<SideWitness> witnesses;  // one per side with a weight-decreasing deformation
    std::vector<long> one_step_changes;  // weight change of every single move, both sides
    std::string note;
};

// All moves applicable to c that push it into the side containing
// `side_vertices` (every side if the list is empty).
std::vector<CurveMove> available_moves(const SurfaceTriangulation& f, const NormalCurveVector& c,
                                       const std::vector<int>& side_vertices = {});

// Throws InvalidArgument when the move does not apply to c.
NormalCurveVector apply_move(const SurfaceTriangulation& f, const NormalCurveVector& c, const CurveMove& m);

// Vertex classes in each complementary region of the curve.
std::vector<std::vector<int>> complementary_regions(const SurfaceTriangulation& f, const NormalCurveVector& c);

// Explores weight-non-increasing move sequences into each side, up to
// `depth` moves (default: the curve's weight). Throws NotNormal when c is
// negative or violates the matching equations, InvalidArgument when it is
// disconnected or the surface has boundary.
CurveClassification classify(const SurfaceTriangulation& f, const NormalCurveVector& c, int depth = -1);

// Applies the witness moves in order and checks each recorded weight and
// that the final weight is below the start.
bool replay(const SurfaceTriangulation& f, const NormalCurveVector& c, const SideWitness& w);

}  // namespace s3rec
