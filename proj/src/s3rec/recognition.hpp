#pragma once

#include "s3rec/cutting.hpp"
#include "s3rec/enumeration.hpp"
#include "s3rec/homology.hpp"
#include "s3rec/triangulation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace s3rec {

enum class Verdict { YesSphere, NoSphere, Inconclusive };

const char* verdict_name(Verdict v);

struct RecognitionOptions {
    long budget = 1'000'000;  // enumeration intermediate-vector cap
    int threads = 1;
};

// How a component of the cut manifold was shown to be a (punctured) ball.
enum class Certificate { VertexStar, PuncturedBall, AlmostNormalSphere, Uncertified };

const char* certificate_name(Certificate c);

struct ComponentReport {
    int tetrahedra = 0;
    ComponentTag tag;
    std::vector<SurfaceSide> boundary;
    std::vector<int> vertices;
    Certificate certificate = Certificate::Uncertified;
    std::optional<NormalVector> witness;  // almost normal sphere, if used
};

struct TraceStep {
    std::string step;
    std::string outcome;
};

struct RecognitionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;  // NoSphere obstruction or Inconclusive cause

    ManifoldCheck manifold;
    std::optional<bool> orientable;
    std::optional<HomologyGroups> homology;

    std::string provenance;  // hash of the normal matching system
    long normal_basis_size = -1;
    long almost_basis_size = -1;
    std::vector<NormalVector> normal_spheres;
    std::vector<NormalVector> family;  // spheres cut along
    std::vector<ComponentReport> components;

    std::vector<TraceStep> trace;
    // Places where a theorem is invoked rather than checked.
    std::vector<std::string> trust_points;
};

RecognitionReport recognize(const Triangulation& tri, const RecognitionOptions& opt = {});

struct VerifyResult {
    bool ok = true;
    std::string failed_step;
};

// Re-derives every step of the report from the triangulation and checks
// each recorded witness independently.
VerifyResult verify_certificate(const Triangulation& tri, const RecognitionReport& report);

}  // namespace s3rec
