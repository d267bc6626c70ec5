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

#include "planecode/segmentation.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "surface_patch.hpp"

namespace planecode {

const char* to_string(MutualOrientation o) {
  switch (o) {
    case MutualOrientation::Positive:
      return "positive";
    case MutualOrientation::Negative:
      return "negative";
    case MutualOrientation::Mixed:
      return "mixed";
  }
  return "?";
}

const char* to_string(PartKind k) { return k == PartKind::PseudoConvex ? "pseudo-convex" : "pseudo-concave"; }

namespace {

using detail::TrianglePlanes;

// sign = +1 tests the closed negative side, -1 the closed positive side.
bool on_side(const TriangleMesh& mesh, const TrianglePlanes& tp, int of, int plane, double sign, double eps) {
  const auto pi = static_cast<std::size_t>(plane);
  for (int v : mesh.triangle(of)) {
    if (sign * (tp.normals[pi].dot(mesh.vertex(v)) - tp.planes[pi].h) > eps) return false;
  }
  return true;
}

bool oriented(const TriangleMesh& mesh, const TrianglePlanes& tp, int a, int b, double sign, double eps) {
  return on_side(mesh, tp, a, b, sign, eps) && on_side(mesh, tp, b, a, sign, eps);
}

constexpr double kConvexSign = 1.0;
constexpr double kConcaveSign = -1.0;

class Segmenter {
 public:
  Segmenter(const TriangleMesh& mesh, double eps, const SegmentOptions& options)
      : mesh_(mesh), tp_(mesh), eps_(eps), options_(options) {
    build_units();
  }

  std::vector<MeshPart> run() {
    assigned_.assign(units_.size(), false);
    std::vector<MeshPart> parts;
    for (double sign : {kConvexSign, kConcaveSign}) {
      for (;;) {
        const int seed = find_seed(sign);
        if (seed < 0) break;
        parts.push_back(grow(seed, sign));
      }
    }
    for (int u = 0; u < static_cast<int>(units_.size()); ++u) {
      if (!assigned_[static_cast<std::size_t>(u)]) parts.push_back(grow(u, kConvexSign));
    }
    return parts;
  }

 private:
  void build_units() {
    std::vector<int> all(mesh_.num_triangles());
    std::iota(all.begin(), all.end(), 0);
    std::vector<std::vector<int>> units;
    if (!options_.reconstructible) {
      for (int t : all) units.push_back({t});
    } else {
      for (const auto& cls : detail::coplanar_classes(mesh_, tp_, all, eps_)) split_convex(cls, units);
    }
    std::sort(units.begin(), units.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    units_ = std::move(units);

    unit_of_.assign(mesh_.num_triangles(), -1);
    for (int u = 0; u < static_cast<int>(units_.size()); ++u) {
      for (int t : units_[static_cast<std::size_t>(u)]) unit_of_[static_cast<std::size_t>(t)] = u;
    }
    adjacent_.assign(units_.size(), {});
    for (int t = 0; t < static_cast<int>(mesh_.num_triangles()); ++t) {
      for (int s : mesh_.neighbors(t)) {
        if (s < 0) continue;
        const int a = unit_of_[static_cast<std::size_t>(t)];
        const int b = unit_of_[static_cast<std::size_t>(s)];
        if (a != b) adjacent_[static_cast<std::size_t>(a)].push_back(b);
      }
    }
    for (auto& adj : adjacent_) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
  }

  // Splits a coplanar class into edge-connected convex polygons.
  void split_convex(const std::vector<int>& cls, std::vector<std::vector<int>>& out) const {
    const Vec3 n = tp_.normals[static_cast<std::size_t>(detail::largest_triangle(tp_, cls))];
    std::vector<char> taken(cls.size(), 0);
    for (std::size_t seed = 0; seed < cls.size(); ++seed) {
      if (taken[seed]) continue;
      std::vector<int> piece{cls[seed]};
      taken[seed] = 1;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t i = 0; i < cls.size(); ++i) {
          if (taken[i] || !touches(cls[i], piece)) continue;
          piece.push_back(cls[i]);
          auto ring = detail::boundary_ring(mesh_, piece);
          if (ring && detail::ring_is_convex(mesh_, *ring, n, eps_)) {
            taken[i] = 1;
            grew = true;
          } else {
            piece.pop_back();
          }
        }
      }
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
  }

  bool touches(int t, const std::vector<int>& tris) const {
    for (int s : mesh_.neighbors(t)) {
      if (s >= 0 && std::find(tris.begin(), tris.end(), s) != tris.end()) return true;
    }
    return false;
  }

  bool all_oriented(const std::vector<int>& a, const std::vector<int>& b, double sign) const {
    for (int t : a) {
      for (int s : b) {
        if (!oriented(mesh_, tp_, t, s, sign, eps_)) return false;
      }
    }
    return true;
  }

  bool admissible_shape(const std::vector<int>& tris) const {
    return !options_.reconstructible || detail::reconstructible(mesh_, tp_, tris, eps_);
  }

  // Lowest unassigned unit that, with some unassigned neighbor, forms a pair
  // of the requested orientation that is not merely coplanar.
  int find_seed(double sign) const {
    for (int u = 0; u < static_cast<int>(units_.size()); ++u) {
      if (assigned_[static_cast<std::size_t>(u)]) continue;
      const auto& tu = units_[static_cast<std::size_t>(u)];
      for (int v : adjacent_[static_cast<std::size_t>(u)]) {
        if (assigned_[static_cast<std::size_t>(v)]) continue;
        const auto& tv = units_[static_cast<std::size_t>(v)];
        if (!all_oriented(tu, tv, sign) || all_oriented(tu, tv, -sign)) continue;
        std::vector<int> both = tu;
        both.insert(both.end(), tv.begin(), tv.end());
        if (admissible_shape(both)) return u;
      }
    }
    return -1;
  }

  MeshPart grow(int seed, double sign) {
    std::vector<int> members = units_[static_cast<std::size_t>(seed)];
    assigned_[static_cast<std::size_t>(seed)] = true;
    std::vector<char> queued(units_.size(), 0);
    std::vector<char> rejected(units_.size(), 0);
    std::deque<int> queue;
    std::vector<int> deferred;
    auto enqueue_neighbors = [&](int u) {
      for (int v : adjacent_[static_cast<std::size_t>(u)]) {
        const auto vi = static_cast<std::size_t>(v);
        if (assigned_[vi] || queued[vi] || rejected[vi]) continue;
        queued[vi] = 1;
        queue.push_back(v);
      }
    };
    enqueue_neighbors(seed);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      const auto ui = static_cast<std::size_t>(u);
      queued[ui] = 0;
      if (assigned_[ui] || rejected[ui]) continue;
      const auto& tu = units_[ui];
      // Orientation failures are final: members only accumulate.
      if (!all_oriented(tu, members, sign)) {
        rejected[ui] = 1;
        continue;
      }
      std::vector<int> trial = members;
      trial.insert(trial.end(), tu.begin(), tu.end());
      if (!admissible_shape(trial)) {
        deferred.push_back(u);
        continue;
      }
      members = std::move(trial);
      assigned_[ui] = true;
      enqueue_neighbors(u);
      for (int d : deferred) {
        const auto di = static_cast<std::size_t>(d);
        if (!queued[di] && !assigned_[di]) {
          queued[di] = 1;
          queue.push_back(d);
        }
      }
      deferred.clear();
    }
    std::sort(members.begin(), members.end());
    return {sign > 0 ? PartKind::PseudoConvex : PartKind::PseudoConcave, std::move(members)};
  }

  const TriangleMesh& mesh_;
  TrianglePlanes tp_;
  double eps_;
  SegmentOptions options_;
  std::vector<std::vector<int>> units_;
  std::vector<int> unit_of_;
  std::vector<std::vector<int>> adjacent_;
  std::vector<bool> assigned_;
};

void check_segmentable(const TriangleMesh& mesh) {
  if (!mesh.edge_manifold()) throw Error(Errc::NonManifold, "an edge is shared by more than two triangles");
  if (!mesh.consistently_oriented()) {
    throw Error(Errc::InconsistentOrientation,
                "adjacent triangles traverse a shared edge in the same direction");
  }
}

}  // namespace

bool positively_oriented(const TriangleMesh& mesh, int t1, int t2, double eps) {
  const OrientedPlaned a = triangle_plane(mesh, t1);
  const OrientedPlaned b = triangle_plane(mesh, t2);
  for (int v : mesh.triangle(t1)) {
    if (b.signed_distance(mesh.vertex(v)) > eps) return false;
  }
  for (int v : mesh.triangle(t2)) {
    if (a.signed_distance(mesh.vertex(v)) > eps) return false;
  }
  return true;
}

bool negatively_oriented(const TriangleMesh& mesh, int t1, int t2, double eps) {
  const OrientedPlaned a = triangle_plane(mesh, t1);
  const OrientedPlaned b = triangle_plane(mesh, t2);
  for (int v : mesh.triangle(t1)) {
    if (b.signed_distance(mesh.vertex(v)) < -eps) return false;
  }
  for (int v : mesh.triangle(t2)) {
    if (a.signed_distance(mesh.vertex(v)) < -eps) return false;
  }
  return true;
}

MutualOrientation mutual_orientation(const TriangleMesh& mesh, int t1, int t2, double eps) {
  if (positively_oriented(mesh, t1, t2, eps)) return MutualOrientation::Positive;
  if (negatively_oriented(mesh, t1, t2, eps)) return MutualOrientation::Negative;
  return MutualOrientation::Mixed;
}

std::vector<MeshPart> segment_mesh(const TriangleMesh& mesh) {
  return segment_mesh(mesh, default_tolerance(mesh));
}

std::vector<MeshPart> segment_mesh(const TriangleMesh& mesh, double eps, const SegmentOptions& options) {
  check_segmentable(mesh);
  if (mesh.empty()) return {};
  return Segmenter(mesh, eps, options).run();
}

}  // namespace planecode
