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
#include <vector>

#include "planecode/mesh.hpp"

namespace planecode {

enum class MutualOrientation { Positive, Negative, Mixed };

enum class PartKind : std::uint8_t { PseudoConvex = 0, PseudoConcave = 1 };

const char* to_string(MutualOrientation o);
const char* to_string(PartKind k);

/// A set of mesh triangles (ascending indices) of one kind.
struct MeshPart {
  PartKind kind = PartKind::PseudoConvex;
  std::vector<int> triangles;

  friend bool operator==(const MeshPart&, const MeshPart&) = default;
};

/// Each triangle lies in the other's closed negative half-space.
bool positively_oriented(const TriangleMesh& mesh, int t1, int t2, double eps);
/// Each triangle lies in the other's closed positive half-space
/// (omega . p - h >= -eps).
bool negatively_oriented(const TriangleMesh& mesh, int t1, int t2, double eps);

/// Positive wins when both predicates hold (coplanar triangles).
MutualOrientation mutual_orientation(const TriangleMesh& mesh, int t1, int t2, double eps);

struct SegmentOptions {
  /// Grow parts only while their surface stays recoverable from planes:
  /// coplanar triangles join as convex polygons, and no part vertex may sit
  /// in a part polygon's plane outside that polygon. With this off, growth
  /// admits single triangles on orientation alone.
  bool reconstructible = true;
};

/// Greedy region growing: pseudo-convex parts first, then pseudo-concave,
/// then leftovers as pseudo-convex parts. Deterministic in triangle order.
/// Throws NonManifold, InconsistentOrientation or DegenerateTriangle.
std::vector<MeshPart> segment_mesh(const TriangleMesh& mesh, double eps, const SegmentOptions& options = {});
std::vector<MeshPart> segment_mesh(const TriangleMesh& mesh);

}  // namespace planecode
