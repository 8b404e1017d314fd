#pragma once

#include "s3rec/enumeration.hpp"
#include "s3rec/homology.hpp"
#include "s3rec/plcurve.hpp"
#include "s3rec/recognition.hpp"
#include "s3rec/surface.hpp"
#include "s3rec/triangulation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

// Versioned JSON reports; docs/report-schema.md describes every field.
namespace s3rec::report {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "s3rec-report/1";

// Integers fitting in 64 bits are JSON numbers, larger ones decimal strings.
json integer(const Integer& x);
Integer to_integer(const json& j);

json vector_json(const NormalVector& v);
NormalVector vector_from_json(const json& j);

json homology_json(const HomologyGroups& h);
HomologyGroups homology_from_json(const json& j);

json check_report(const Triangulation& tri);
json check_report(const SurfaceTriangulation& f);
// Closed triangulations use homology(); bounded ones the cellular groups.
json homology_report(const Triangulation& tri);
json homology_report(const SurfaceTriangulation& f);
json enumerate_report(const SolutionSet& s);
json recognize_report(const RecognitionReport& r);
RecognitionReport recognition_from_json(const json& j);

struct ClassifiedCurve {
    NormalCurveVector curve;
    bool vertex_linking = false;
    CurveClassification classification;
};
json plcurve_report(const SurfaceTriangulation& f, long max_weight, const std::vector<ClassifiedCurve>& curves);

json verify_report(const std::string& checked_command, const VerifyResult& r);

// Throws InvalidArgument when the schema tag or command is missing/unknown.
void require_schema(const json& j);

// Short human-readable summary of any report above.
std::string render_text(const json& j);

}  // namespace s3rec::report
