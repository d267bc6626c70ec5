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
#include "planecode/segmentation.hpp"

namespace planecode {

/// A maximal coplanar patch of a part: its plane and its outer vertex ring
/// (mesh vertex indices, counterclockwise seen from the positive side).
struct PolygonFace {
  OrientedPlaned plane;
  std::vector<int> boundary;
  std::vector<int> triangles;
};

/// Plane groups of one part: its polygon planes and the cutting planes that
/// close its open rim.
struct PartCode {
  PartKind kind = PartKind::PseudoConvex;
  PlaneSet face_planes;
  PlaneSet boundary_planes;
};

struct SegmentedCode {
  std::vector<PartCode> parts;
};

/// Total face plus boundary planes over all parts.
std::size_t plane_count(const SegmentedCode& code);

/// Merges edge-adjacent coplanar triangles of the part. Throws
/// NonSimpleBoundary when a merged patch has a hole or a pinch vertex.
std::vector<PolygonFace> polygonize_part(const TriangleMesh& mesh, const MeshPart& part, double eps);

/// One cutting plane per straight run of the part's open boundary. Each
/// plane contains its run and keeps every part vertex on its closed negative
/// side (positive side for pseudo-concave parts). Empty for closed parts.
/// Throws BoundaryNotCuttable when a run admits no such plane.
PlaneSet boundary_planes_for_part(const TriangleMesh& mesh, const MeshPart& part, double eps);

/// Planes of a part as decoded: face planes first, then boundary planes,
/// all negated for pseudo-concave parts.
PlaneSet decoding_planes(const PartCode& part);

/// segment_mesh, then polygonize_part and boundary_planes_for_part per part.
/// Every part is checked to decode back to its own polygons.
SegmentedCode encode_segmented(const TriangleMesh& mesh, double eps);
SegmentedCode encode_segmented(const TriangleMesh& mesh);

/// Decodes every part by half-space intersection, keeps the faces lying in
/// face planes, and welds the parts' shared rims. Throws PartUndecodable or
/// WeldMismatch. The weld check assumes the encoded surface was closed.
TriangleMesh decode_segmented(const SegmentedCode& code, double eps);
TriangleMesh decode_segmented(const SegmentedCode& code);

}  // namespace planecode
