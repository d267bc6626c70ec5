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

#include "planecode/simplify.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

#include "planecode/error.hpp"

namespace planecode {

namespace {

PlaneSet checked(PlaneSet kept, const char* what) {
  if (kept.size() < 4) {
    throw Error(Errc::OverSimplified,
                std::string(what) + " leaves " + std::to_string(kept.size()) + " planes");
  }
  try {
    decode_convex(kept);
  } catch (const Error& e) {
    throw Error(Errc::OverSimplified, std::string(what) + " leaves an undecodable code: " + e.what());
  }
  return kept;
}

FaceAdjacency first_planes(const FaceAdjacency& adj, std::size_t n) {
  FaceAdjacency out;
  out.areas.assign(adj.areas.begin(), adj.areas.begin() + static_cast<std::ptrdiff_t>(n));
  out.face_vertices.assign(adj.face_vertices.begin(),
                           adj.face_vertices.begin() + static_cast<std::ptrdiff_t>(n));
  out.neighbors.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j : adj.neighbors[i]) {
      if (static_cast<std::size_t>(j) < n) out.neighbors[i].push_back(j);
    }
  }
  return out;
}

OrientedPlaned merged_plane(const PlaneSet& code, const FaceAdjacency& adj, const std::vector<int>& cluster) {
  const OrientedPlaned& first = code[static_cast<std::size_t>(cluster.front())];
  const bool all_same = std::all_of(cluster.begin(), cluster.end(), [&](int i) {
    return same_plane(first, code[static_cast<std::size_t>(i)]);
  });
  if (all_same) return first;

  Vec3 dir = Vec3::Zero();
  std::vector<Vec3> corners;  // distinct; shared corners come from the same decode
  for (int i : cluster) {
    const auto k = static_cast<std::size_t>(i);
    dir += adj.areas[k] * code[k].normal();
    for (const Vec3& v : adj.face_vertices[k]) {
      if (std::find(corners.begin(), corners.end(), v) == corners.end()) corners.push_back(v);
    }
  }
  if (dir.norm() <= 1e-300 || corners.empty()) return first;
  dir.normalize();
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& v : corners) centroid += v;
  centroid /= static_cast<double>(corners.size());
  return OrientedPlaned::from_normal(dir, dir.dot(centroid));
}

PartCode simplify_part(PartCode part, const SimplifyParams& params, std::size_t index) {
  const bool concave = part.kind == PartKind::PseudoConcave;
  auto decode_part = [&](const PlaneSet& planes) {
    try {
      return decode_convex(planes);
    } catch (const Error& e) {
      throw Error(Errc::PartUndecodable, "part " + std::to_string(index) + ": " + e.what());
    }
  };

  if (params.delta > 0.0) {
    const ConvexPolyhedron poly = decode_part(decoding_planes(part));
    PlaneSet kept;
    for (std::size_t i = 0; i < part.face_planes.size(); ++i) {
      const int face = poly.plane_face[i];
      if (face >= 0 && face_area(poly, static_cast<std::size_t>(face)) >= params.delta) {
        kept.planes.push_back(part.face_planes[i]);
      }
    }
    if (kept.empty()) {
      throw Error(Errc::OverSimplified, "part " + std::to_string(index) + " loses every face");
    }
    part.face_planes = std::move(kept);
  }

  if (params.tau > 0.0) {
    const PlaneSet frame = decoding_planes(part);
    const ConvexPolyhedron poly = decode_part(frame);
    const std::size_t n = part.face_planes.size();
    PlaneSet faces;
    faces.planes.assign(frame.begin(), frame.begin() + static_cast<std::ptrdiff_t>(n));
    PlaneSet merged = merge_near_parallel(faces, first_planes(face_adjacency(frame, poly), n), params);
    if (concave) {
      for (OrientedPlaned& p : merged.planes) p = p.flipped();
    }
    part.face_planes = canonical_order(std::move(merged));
  }
  return part;
}

}  // namespace

void validate(const SimplifyParams& params) {
  if (!(params.delta >= 0.0) || !std::isfinite(params.delta)) {
    throw std::invalid_argument("delta must be a finite value >= 0");
  }
  if (!(params.tau >= 0.0 && params.tau < std::numbers::pi / 2)) {
    throw std::invalid_argument("tau must lie in [0, pi/2)");
  }
}

FaceAdjacency face_adjacency(const PlaneSet& code, const ConvexPolyhedron& poly) {
  const std::size_t n = code.size();
  FaceAdjacency adj;
  adj.neighbors.resize(n);
  adj.areas.assign(n, 0.0);
  adj.face_vertices.resize(n);

  std::map<std::pair<int, int>, std::vector<int>> edge_planes;
  for (std::size_t i = 0; i < n && i < poly.plane_face.size(); ++i) {
    const int face = poly.plane_face[i];
    if (face < 0) continue;
    const auto& ring = poly.faces[static_cast<std::size_t>(face)];
    adj.areas[i] = face_area(poly, static_cast<std::size_t>(face));
    for (std::size_t k = 0; k < ring.size(); ++k) {
      const int a = ring[k];
      const int b = ring[(k + 1) % ring.size()];
      adj.face_vertices[i].push_back(poly.vertices[static_cast<std::size_t>(a)]);
      edge_planes[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(i));
    }
  }
  auto link = [&](std::size_t i, std::size_t j) {
    auto& ni = adj.neighbors[i];
    if (std::find(ni.begin(), ni.end(), static_cast<int>(j)) == ni.end()) {
      ni.push_back(static_cast<int>(j));
      adj.neighbors[j].push_back(static_cast<int>(i));
    }
  };
  for (const auto& [edge, planes] : edge_planes) {
    for (std::size_t x = 0; x < planes.size(); ++x) {
      for (std::size_t y = x + 1; y < planes.size(); ++y) {
        link(static_cast<std::size_t>(planes[x]), static_cast<std::size_t>(planes[y]));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (same_plane(code[i], code[j])) link(i, j);
    }
  }
  for (auto& ni : adj.neighbors) std::sort(ni.begin(), ni.end());
  return adj;
}

PlaneSet drop_small_faces(const PlaneSet& code, const SimplifyParams& params) {
  return drop_small_faces(code, params, default_decode_tolerance(code));
}

PlaneSet drop_small_faces(const PlaneSet& code, const SimplifyParams& params, double eps) {
  validate(params);
  const ConvexPolyhedron poly = decode_convex(code, eps);
  PlaneSet kept;
  for (std::size_t i = 0; i < code.size(); ++i) {
    const int face = poly.plane_face[i];
    const double area = face < 0 ? 0.0 : face_area(poly, static_cast<std::size_t>(face));
    if (area >= params.delta) kept.planes.push_back(code[i]);
  }
  return checked(std::move(kept), "area threshold");
}

PlaneSet merge_near_parallel(const PlaneSet& code, const SimplifyParams& params) {
  return merge_near_parallel(code, face_adjacency(code, decode_convex(code)), params);
}

PlaneSet merge_near_parallel(const PlaneSet& code, const FaceAdjacency& adjacency,
                             const SimplifyParams& params) {
  validate(params);
  const std::size_t n = code.size();
  std::vector<char> taken(n, 0);
  PlaneSet out;
  for (std::size_t seed = 0; seed < n; ++seed) {
    if (taken[seed]) continue;
    taken[seed] = 1;
    std::vector<int> cluster{static_cast<int>(seed)};
    std::deque<int> queue(adjacency.neighbors[seed].begin(), adjacency.neighbors[seed].end());
    while (!queue.empty()) {
      const auto j = static_cast<std::size_t>(queue.front());
      queue.pop_front();
      if (taken[j]) continue;
      const bool close = std::all_of(cluster.begin(), cluster.end(), [&](int m) {
        return angle_between(code[j], code[static_cast<std::size_t>(m)]) < params.tau;
      });
      if (!close) continue;
      taken[j] = 1;
      cluster.push_back(static_cast<int>(j));
      for (int k : adjacency.neighbors[j]) {
        if (!taken[static_cast<std::size_t>(k)]) queue.push_back(k);
      }
    }
    out.planes.push_back(cluster.size() == 1 ? code[seed] : merged_plane(code, adjacency, cluster));
  }
  return out.size() == n ? code : canonical_order(std::move(out));
}

PlaneSet simplify(const PlaneSet& code, const SimplifyParams& params) {
  validate(params);
  PlaneSet out = params.delta > 0.0 ? drop_small_faces(code, params) : code;
  if (params.tau > 0.0) out = merge_near_parallel(out, params);
  return out;
}

SegmentedCode simplify(const SegmentedCode& code, const SimplifyParams& params) {
  validate(params);
  SegmentedCode out;
  for (std::size_t k = 0; k < code.parts.size(); ++k) {
    out.parts.push_back(simplify_part(code.parts[k], params, k));
  }
  return out;
}

}  // namespace planecode
