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

#include <vector>

#include "planecode/convex_codec.hpp"
#include "planecode/polygonize.hpp"

namespace planecode {

struct SimplifyParams {
  /// Faces with smaller area lose their plane. Squared mesh units, >= 0.
  double delta = 0.0;
  /// Adjacent planes closer than this angle merge. Radians, in [0, pi/2).
  double tau = 0.0;
};

/// Throws std::invalid_argument when a parameter is out of range.
void validate(const SimplifyParams& params);

/// Which planes of a code have decoded faces sharing an edge, plus the face
/// data the merge needs. Indexed by plane; planes without a face have zero
/// area, no vertices and are adjacent only to identical planes.
struct FaceAdjacency {
  std::vector<std::vector<int>> neighbors;
  std::vector<double> areas;
  std::vector<std::vector<Vec3>> face_vertices;
};

FaceAdjacency face_adjacency(const PlaneSet& code, const ConvexPolyhedron& poly);

/// Keeps the planes whose face in the decode of `code` has area >= delta.
/// Areas come from a single decode; nothing cascades.
PlaneSet drop_small_faces(const PlaneSet& code, const SimplifyParams& params, double eps);
PlaneSet drop_small_faces(const PlaneSet& code, const SimplifyParams& params);

/// Clusters adjacent planes whose pairwise angles are all below tau and
/// replaces each cluster by one plane through the centroid of its faces.
PlaneSet merge_near_parallel(const PlaneSet& code, const FaceAdjacency& adjacency,
                             const SimplifyParams& params);
PlaneSet merge_near_parallel(const PlaneSet& code, const SimplifyParams& params);

/// drop_small_faces when delta > 0, then merge_near_parallel when tau > 0.
PlaneSet simplify(const PlaneSet& code, const SimplifyParams& params);

/// Per-part simplification of face planes; boundary planes are kept.
SegmentedCode simplify(const SegmentedCode& code, const SimplifyParams& params);

}  // namespace planecode
