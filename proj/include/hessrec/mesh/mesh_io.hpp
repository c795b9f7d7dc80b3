#pragma once

#include "hessrec/mesh/triangulation.hpp"

#include <string>
#include <string_view>

namespace hessrec {

// Triangle/EasyMesh-style interchange.
//
//   node file:    N 2 0 1            then N lines  "index x y marker"
//   element file: T 3 0              then T lines  "index v1 v2 v3"
//
// Indices are 1-based, marker 1 flags a boundary node. Tokens are separated by
// whitespace; '#' starts a comment that runs to the end of the line.

/// Throws ParseError (with the offending line) or InvalidInput.
Triangulation import_mesh(std::string_view node_text, std::string_view element_text);

/// Reads <prefix>.node and <prefix>.ele.
Triangulation read_mesh_files(const std::string& prefix);

std::string node_text(const Triangulation& mesh);
std::string element_text(const Triangulation& mesh);

/// Writes <prefix>.node and <prefix>.ele.
void write_mesh_files(const Triangulation& mesh, const std::string& prefix);

} // namespace hessrec
