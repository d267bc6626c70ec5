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

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <type_traits>

#include "planecode/error.hpp"

namespace planecode {

template <typename Scalar>
using Vector3 = Eigen::Matrix<Scalar, 3, 1>;

/// A unit direction in spherical form: `nu` is the polar angle from +z in
/// [0, pi], `phi` the azimuth from +x in [0, 2 pi). Radians throughout.
template <typename Scalar>
struct SphericalDirection {
  Scalar nu{0};
  Scalar phi{0};

  template <typename NewScalar>
  SphericalDirection<NewScalar> cast() const {
    return {static_cast<NewScalar>(nu), static_cast<NewScalar>(phi)};
  }
};

template <typename Scalar>
Vector3<Scalar> unit_vector_from_spherical(const SphericalDirection<Scalar>& d) {
  using std::cos;
  using std::sin;
  const Scalar s = sin(d.nu);
  return {s * cos(d.phi), s * sin(d.phi), cos(d.nu)};
}

template <typename Scalar>
constexpr Scalar default_unit_tolerance() {
  return std::max(Scalar(1e-9), Scalar(16) * std::numeric_limits<Scalar>::epsilon());
}

/// Inverse of unit_vector_from_spherical. At the poles the azimuth is
/// meaningless and is pinned to 0.
template <typename Scalar>
SphericalDirection<Scalar> spherical_from_unit_vector(const Vector3<Scalar>& w,
                                                      Scalar tol = default_unit_tolerance<Scalar>()) {
  using std::abs;
  using std::atan2;
  using std::hypot;
  const Scalar len = w.norm();
  if (!(abs(len - Scalar(1)) <= tol)) {
    throw Error(Errc::NotUnitVector, "|w| = " + std::to_string(static_cast<double>(len)));
  }
  const Scalar planar = hypot(w.x(), w.y());
  SphericalDirection<Scalar> d;
  // atan2 form equals arccos(w_z) for unit w and stays accurate near the poles.
  d.nu = atan2(planar, w.z());
  if (planar <= Scalar(1e-12) * len) {
    d.phi = Scalar(0);
    return d;
  }
  Scalar phi = atan2(w.y(), w.x());
  if (phi < Scalar(0)) phi += Scalar(2) * std::numbers::pi_v<Scalar>;
  if (phi >= Scalar(2) * std::numbers::pi_v<Scalar>) phi = Scalar(0);
  d.phi = phi;
  return d;
}

enum class Side { NegativeClosed, Positive };

/// An oriented plane {x : omega . x = h}. The closed half-space behind the
/// normal is the negative side; h >= 0 exactly when the origin lies on it.
template <typename Scalar>
struct OrientedPlane {
  SphericalDirection<Scalar> direction;
  Scalar h{0};

  /// `n` need not be normalized; it must be non-zero.
  static OrientedPlane from_normal(const Vector3<Scalar>& n, Scalar h) {
    return {spherical_from_unit_vector<Scalar>(n.normalized()), h};
  }

  Vector3<Scalar> normal() const { return unit_vector_from_spherical(direction); }

  Scalar signed_distance(const Vector3<Scalar>& p) const { return normal().dot(p) - h; }

  OrientedPlane flipped() const { return from_normal(-normal(), -h); }

  template <typename NewScalar>
  OrientedPlane<NewScalar> cast() const {
    return {direction.template cast<NewScalar>(), static_cast<NewScalar>(h)};
  }
};

template <typename Scalar>
Side classify_side(const OrientedPlane<Scalar>& plane, const std::type_identity_t<Vector3<Scalar>>& p,
                   std::type_identity_t<Scalar> eps) {
  return plane.signed_distance(p) <= eps ? Side::NegativeClosed : Side::Positive;
}

/// Plane through a counterclockwise triangle; the normal is the normalized
/// cross product (p2 - p1) x (p3 - p2) and h = omega . p1.
template <typename Scalar>
OrientedPlane<Scalar> plane_from_triangle(const Vector3<Scalar>& p1, const Vector3<Scalar>& p2,
                                          const Vector3<Scalar>& p3, Scalar eps_area = Scalar(1e-12)) {
  const Vector3<Scalar> c = (p2 - p1).cross(p3 - p2);
  const Scalar len = c.norm();
  if (!(len > eps_area)) {
    throw Error(Errc::DegenerateTriangle, "cross product length " + std::to_string(static_cast<double>(len)));
  }
  const Vector3<Scalar> w = c / len;
  return {spherical_from_unit_vector<Scalar>(w), w.dot(p1)};
}

/// Smallest angle between two plane normals.
template <typename Scalar>
Scalar angle_between(const OrientedPlane<Scalar>& a, const OrientedPlane<Scalar>& b) {
  using std::atan2;
  const Vector3<Scalar> na = a.normal();
  const Vector3<Scalar> nb = b.normal();
  return atan2(na.cross(nb).norm(), na.dot(nb));
}

template <typename Scalar>
Scalar radians_to_degrees(Scalar r) {
  return r * Scalar(180) / std::numbers::pi_v<Scalar>;
}

template <typename Scalar>
Scalar degrees_to_radians(Scalar deg) {
  return deg * std::numbers::pi_v<Scalar> / Scalar(180);
}

using SphericalDirectiond = SphericalDirection<double>;
using SphericalDirectionf = SphericalDirection<float>;
using OrientedPlaned = OrientedPlane<double>;
using OrientedPlanef = OrientedPlane<float>;
using Vec3 = Eigen::Vector3d;

}  // namespace planecode
