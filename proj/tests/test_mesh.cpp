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

#include <map>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "planecode/error.hpp"
#include "planecode/mesh.hpp"

namespace planecode {
namespace {

// Counts how many triangles use each undirected edge.
std::map<std::pair<int, int>, int> edge_uses(const TriangleMesh& mesh) {
  std::map<std::pair<int, int>, int> uses;
  for (const Triangle& t : mesh.triangles()) {
    for (int k = 0; k < 3; ++k) {
      const int a = t[static_cast<std::size_t>(k)], b = t[static_cast<std::size_t>((k + 1) % 3)];
      ++uses[{std::min(a, b), std::max(a, b)}];
    }
  }
  return uses;
}

TEST(Mesh, CubeAdjacency) {
  const TriangleMesh cube = testing::unit_cube();
  ASSERT_EQ(cube.num_triangles(), 12u);
  for (int t = 0; t < 12; ++t) {
    for (int k = 0; k < 3; ++k) {
      const int s = cube.neighbor(t, k);
      ASSERT_GE(s, 0);
      // Symmetric: s has an edge pointing back at t.
      bool back = false;
      for (int j = 0; j < 3; ++j) back |= cube.neighbor(s, j) == t;
      EXPECT_TRUE(back);
    }
  }
  for (const auto& [edge, n] : edge_uses(cube)) EXPECT_EQ(n, 2);
  EXPECT_TRUE(cube.closed());
  EXPECT_TRUE(cube.edge_manifold());
  EXPECT_TRUE(cube.consistently_oriented());
  EXPECT_DOUBLE_EQ(surface_area(cube), 6.0);
  EXPECT_NEAR(enclosed_volume(cube), 1.0, 1e-15);
  EXPECT_NEAR(cube.bounding_box_diagonal(), std::sqrt(3.0), 1e-15);
}

TEST(Mesh, FixturesAreClosedAndOutward) {
  for (const auto& [name, mesh] : testing::segmentation_corpus()) {
    SCOPED_TRACE(name);
    EXPECT_TRUE(mesh.closed());
    EXPECT_TRUE(mesh.consistently_oriented());
    EXPECT_GT(testing::volume_of(mesh), 0.0);
    EXPECT_NEAR(enclosed_volume(mesh), testing::volume_of(mesh), 1e-12);
    EXPECT_NEAR(surface_area(mesh), testing::area_of(mesh), 1e-12);
  }
  const TriangleMesh stairs = testing::notched_staircase();
  EXPECT_EQ(stairs.num_vertices(), 16u);
  EXPECT_EQ(stairs.num_triangles(), 2u * testing::kStaircaseQuads);
  // 4x4x2 block plus the collar frustum, minus the 2x2x2 pocket.
  EXPECT_NEAR(enclosed_volume(stairs), 32.0 + (16.0 + 4.0 + 8.0) / 3.0 - 8.0, 1e-12);
}

TEST(Mesh, OpenBoxHasBoundary) {
  const TriangleMesh box = testing::open_box();
  EXPECT_FALSE(box.closed());
  EXPECT_TRUE(box.edge_manifold());
  int open = 0;
  for (int t = 0; t < static_cast<int>(box.num_triangles()); ++t) {
    for (int k = 0; k < 3; ++k) open += box.neighbor(t, k) == TriangleMesh::kBoundary;
  }
  EXPECT_EQ(open, 4);
}

TEST(Mesh, NonManifoldEdge) {
  const TriangleMesh fin({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, -1, 0), Vec3(0, 0, 1)},
                         {{0, 1, 2}, {1, 0, 3}, {0, 1, 4}});
  EXPECT_FALSE(fin.edge_manifold());
  EXPECT_FALSE(fin.closed());
}

TEST(Mesh, InconsistentOrientation) {
  const TriangleMesh flipped({Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(1, 1, 0)},
                             {{0, 1, 2}, {1, 2, 3}});
  EXPECT_FALSE(flipped.consistently_oriented());
}

TEST(Mesh, RejectsBadTriangles) {
  EXPECT_THROW(TriangleMesh({Vec3(0, 0, 0)}, {{0, 0, 1}}), std::invalid_argument);
  try {
    TriangleMesh({Vec3(0, 0, 0), Vec3(1, 0, 0)}, {{0, 1, 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DegenerateTriangle);
  }
}

TEST(Mesh, TolerancesScaleWithModel) {
  const TriangleMesh big = testing::box(Vec3(0, 0, 0), Vec3(3000, 4000, 0));
  EXPECT_NEAR(default_tolerance(big), 1e-7 * 5000, 1e-12);
  EXPECT_GT(default_tolerance(TriangleMesh{}), 0.0);
}

}  // namespace
}  // namespace planecode
