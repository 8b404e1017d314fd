#pragma once

#include "s3rec/surface.hpp"
#include "s3rec/triangulation.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace s3rec {

// Gluing-table text format:
//
//   # comment
//   dim 3
//   count 2
//   simplex 0: f0=(1,0132) f1=(1,3201) f2=- f3=(0,...)
//
// `fk=(j,p)` glues face k of the simplex to simplex j by the vertex
// permutation word p (the image of 0, 1, ...); the target face is p[k].
// `-` marks a boundary face. `dim 2` tables use three faces f0..f2 and
// three-letter permutation words.
using GluingTable = std::variant<Triangulation, SurfaceTriangulation>;

// Throws ParseError with 1-based line/column on malformed text, and Error
// from the triangulation builders on inconsistent gluings.
GluingTable parse_gluing_table(std::string_view text);
GluingTable load_gluing_table(const std::string& path);

std::string serialize(const Triangulation& tri);
std::string serialize(const SurfaceTriangulation& surface);

}  // namespace s3rec
