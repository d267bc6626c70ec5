// Copyright 2026 The Planecode Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "planecode/convex_codec.hpp"
#include "planecode/mesh.hpp"
#include "planecode/polygonize.hpp"

namespace planecode {

enum class MeshFormat { Obj, StlAscii, StlBinary };

/// Parses a mesh held in memory. Polygons are fan-triangulated; STL corners
/// are shared by exact coordinate equality in order of first appearance.
/// Throws Errc::ParseError (with line or byte offset) and
/// Errc::UnsupportedFeature.
TriangleMesh load_mesh(std::string_view bytes, MeshFormat format);

/// ASCII when the bytes start with "solid" and do not have the exact length
/// of a binary file.
MeshFormat detect_stl_format(std::string_view bytes);

/// Obj for ".obj", StlBinary for ".stl"; nullopt otherwise.
std::optional<MeshFormat> format_from_extension(const std::filesystem::path& path);

std::string write_obj(const TriangleMesh& mesh);
std::string write_stl_ascii(const TriangleMesh& mesh);
std::string write_stl_binary(const TriangleMesh& mesh);
std::string write_mesh(const TriangleMesh& mesh, MeshFormat format);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Reads a mesh, choosing the format from the extension (and the content
/// for STL).
TriangleMesh load_mesh_file(const std::filesystem::path& path);

/// How the indexed representation is charged: 12 bytes per triangle, or
/// 48 bytes per planar polygon of the mesh.
enum class AccountingMode { Triangles, Quads };

/// Storage for a code against indexed storage of its mesh, 4 bytes per
/// number.
struct StorageReport {
  std::uint64_t faces = 0;
  std::uint64_t boundary_planes = 0;
  std::uint64_t planes = 0;
  std::uint64_t vertices = 0;
  std::uint64_t triangles = 0;
  std::uint64_t polygons = 0;
  std::uint64_t plane_bytes = 0;
  std::uint64_t vertex_bytes = 0;
  std::uint64_t index_bytes = 0;
  std::uint64_t indexed_bytes = 0;
  double ratio = 0.0;
  AccountingMode mode = AccountingMode::Triangles;
};

/// Number of maximal edge-connected coplanar patches of the mesh.
std::size_t planar_polygon_count(const TriangleMesh& mesh, double eps);

StorageReport storage_report(const TriangleMesh& mesh, const PlaneSet& code,
                             AccountingMode mode = AccountingMode::Triangles);
StorageReport storage_report(const TriangleMesh& mesh, const SegmentedCode& code,
                             AccountingMode mode = AccountingMode::Triangles);

}  // namespace planecode
