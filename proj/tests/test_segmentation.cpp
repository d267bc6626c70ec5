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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "planecode/error.hpp"
#include "planecode/segmentation.hpp"

namespace planecode {
namespace {

// Every triangle lands in exactly one part.
void expect_partition(const TriangleMesh& mesh, const std::vector<MeshPart>& parts) {
  std::vector<int> seen(mesh.num_triangles(), 0);
  for (const MeshPart& p : parts) {
    for (int t : p.triangles) ++seen[static_cast<std::size_t>(t)];
  }
  EXPECT_TRUE(std::all_of(seen.begin(), seen.end(), [](int n) { return n == 1; }));
}

TEST(Orientation, PairsOnAConvexAndAConcaveCorner) {
  const TriangleMesh cube = testing::unit_cube();
  // Triangles 0 and 2 lie on adjacent cube faces.
  EXPECT_TRUE(positively_oriented(cube, 0, 2, 1e-9));
  EXPECT_FALSE(negatively_oriented(cube, 0, 2, 1e-9));
  EXPECT_EQ(mutual_orientation(cube, 0, 2, 1e-9), MutualOrientation::Positive);
  // Coplanar triangles of one face satisfy both; Positive wins.
  EXPECT_TRUE(negatively_oriented(cube, 0, 1, 1e-9));
  EXPECT_EQ(mutual_orientation(cube, 0, 1, 1e-9), MutualOrientation::Positive);

  const TriangleMesh stairs = testing::notched_staircase();
  // Pocket wall (quad 10) against pocket floor (quad 13).
  EXPECT_EQ(mutual_orientation(stairs, 20, 26, 1e-9), MutualOrientation::Negative);
  // Outer side (quad 1) against pocket wall: mixed.
  EXPECT_EQ(mutual_orientation(stairs, 2, 20, 1e-9), MutualOrientation::Mixed);
}

TEST(Segment, ConvexInputsGiveOnePart) {
  std::mt19937_64 rng(1);
  std::vector<TriangleMesh> meshes{testing::unit_cube(), testing::tetrahedron(),
                                   testing::regular_prism(12, 1, 1)};
  for (int i = 0; i < 5; ++i) meshes.push_back(testing::random_hull(rng, 10 + 5 * i));
  for (const TriangleMesh& m : meshes) {
    const auto parts = segment_mesh(m);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].kind, PartKind::PseudoConvex);
    EXPECT_EQ(parts[0].triangles.size(), m.num_triangles());
  }
}

TEST(Segment, StaircaseSplitsIntoCollarAndPocket) {
  const TriangleMesh stairs = testing::notched_staircase();
  const auto parts = segment_mesh(stairs);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].kind, PartKind::PseudoConvex);
  EXPECT_EQ(parts[0].triangles.size(), 18u);
  EXPECT_EQ(parts[1].kind, PartKind::PseudoConcave);
  EXPECT_EQ(parts[1].triangles.size(), 10u);
  expect_partition(stairs, parts);
}

TEST(Segment, CorpusPartsSatisfyDefinitions) {
  for (const auto& [name, mesh] : testing::segmentation_corpus()) {
    SCOPED_TRACE(name);
    for (bool reconstructible : {true, false}) {
      const double eps = default_tolerance(mesh);
      const auto parts = segment_mesh(mesh, eps, SegmentOptions{reconstructible});
      expect_partition(mesh, parts);
      for (const MeshPart& p : parts) EXPECT_TRUE(testing::satisfies_definition(mesh, p, eps));
    }
  }
}

TEST(Segment, Deterministic) {
  const TriangleMesh mesh = testing::two_notch_solid();
  EXPECT_EQ(segment_mesh(mesh), segment_mesh(mesh));
}

TEST(Segment, Errors) {
  const TriangleMesh fin({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, -1, 0), Vec3(0, 0, 1)},
                         {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}});
  try {
    segment_mesh(fin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NonManifold);
  }
  const TriangleMesh twisted({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)},
                             {{0, 1, 2}, {1, 2, 3}});
  try {
    segment_mesh(twisted);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InconsistentOrientation);
  }
  EXPECT_TRUE(segment_mesh(TriangleMesh{}).empty());
}

TEST(Segment, OpenSurfaceIsAllowed) {
  const TriangleMesh box = testing::open_box();
  const auto parts = segment_mesh(box);
  ASSERT_EQ(parts.size(), 1u);
  EXPECT_EQ(parts[0].triangles.size(), 10u);
}

}  // namespace
}  // namespace planecode
