// mesh_io.hpp — OBJ and PLY (ascii / binary little-endian) readers and writers.
#pragma once

#include <iosfwd>
#include <string>

#include "holefill/mesh.hpp"

namespace holefill {

enum class MeshFileFormat { Obj, PlyAscii, PlyBinaryLE };

// Chooses by extension; for .ply the header decides ascii vs binary.
MeshFileFormat detect_format(const std::string& path);

// OBJ: v/f records, '#' comments, 1-based indices (negative = relative),
// polygons fan-triangulated, normals/texcoords/groups/materials skipped.
// PLY: vertex x/y/z (float or double) and face vertex_indices; extra
// properties are skipped with a warning on stderr; elements other than
// vertex and face are rejected.
TriangleMesh read_mesh(std::istream& in, MeshFileFormat format, const BuildOptions& opts = {});
TriangleMesh read_mesh(const std::string& path, const BuildOptions& opts = {});

// ASCII floats carry 17 significant digits; binary PLY stores doubles, so a
// round trip reproduces coordinates bit for bit.
void write_mesh(const TriangleMesh& mesh, std::ostream& out, MeshFileFormat format);
void write_mesh(const TriangleMesh& mesh, const std::string& path, MeshFileFormat format);

}  // namespace holefill
