#pragma once

#include "s3rec/normal_coords.hpp"
#include "s3rec/triangulation.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace s3rec {

struct EnumerationOptions {
    // Cap on the number of intermediate vectors held for one cell.
    long budget = 1'000'000;
    int threads = 1;
};

struct SolutionSet {
    enum class Kind { VertexSolutions, HilbertBasis };

    Kind kind = Kind::HilbertBasis;
    MatchingSystem::Kind system_kind = MatchingSystem::Kind::Plain;
    std::vector<IntVector> members;  // sorted lexicographically
    std::string provenance;          // hash of the system, see system_hash()
    long cells = 0;
    long peak_intermediate = 0;

    // Members as coordinate vectors; throws InvalidArgument for plain systems.
    std::vector<NormalVector> vectors() const;
};

const char* kind_name(SolutionSet::Kind k);

// FNV-1a over the system's kind, shape and entries, as 16 hex digits.
std::string system_hash(const MatchingSystem& sys);

// Admissibility cells. Normal systems: one quad kind fixed per tetrahedron.
// Almost normal: one tetrahedron carries a fixed octagon kind, the others a
// fixed quad kind. Plain systems: a single cell of all variables. Every
// admissible vector is supported in at least one cell.
std::vector<std::vector<int>> admissibility_cells(const MatchingSystem& sys);

// Extremal rays of every cell cone, scaled to coprime integers; almost
// normal output keeps rays whose octagon coordinate is exactly 1.
SolutionSet vertex_solutions(const MatchingSystem& sys, const EnumerationOptions& opt = {});

// Minimal nonzero solutions of each cell monoid (equation-by-equation
// completion); almost normal output keeps members with exactly one octagon.
// Throws ResourceBudgetExceeded past opt.budget.
SolutionSet hilbert_basis(const MatchingSystem& sys, const EnumerationOptions& opt = {});

enum class SphereKind { Normal, OctagonalAlmostNormal };

// Members, and connected components of members, that are 2-spheres of the
// requested kind. Sorted and deduplicated.
std::vector<NormalVector> find_spheres(const Triangulation& tri, const SolutionSet& basis, SphereKind kind);

}  // namespace s3rec
