// Copyright 2026 The symlu Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symlu/core.hpp"
#include "symlu/majorana.hpp"
#include "symlu/qubit.hpp"

namespace symlu {

class Rotation {
 public:
  Rotation() : m_(Mat3::Identity()) {}
  /// Throws DomainError unless m is orthogonal with det +1 within tol.
  explicit Rotation(const Mat3& m, double tol = 1e-12);
  static Rotation axis_angle(const Vec3& axis, double angle);
  /// Smallest-angle rotation carrying unit vector `from` onto `to`. For
  /// antipodal inputs the axis is the component of e_x (or e_y) orthogonal
  /// to `from`.
  static Rotation aligning(const Vec3& from, const Vec3& to);

  const Mat3& matrix() const { return m_; }
  /// In [0, pi].
  double angle() const;
  /// Unit axis; for angle pi the sign is chosen so the first significant
  /// component is positive. Identity returns e_z.
  Vec3 axis() const;

  Vec3 operator*(const Vec3& v) const { return m_ * v; }
  Rotation operator*(const Rotation& o) const { return {m_ * o.m_, Unchecked{}}; }
  Rotation inverse() const { return {m_.transpose(), Unchecked{}}; }
  double distance(const Rotation& o) const { return (m_ - o.m_).norm(); }

 private:
  struct Unchecked {};
  Rotation(const Mat3& m, Unchecked) : m_(m) {}
  Mat3 m_;
};

Rotation su2_to_so3(const SingleQubitUnitary& g);
/// One of the two SU(2) preimages: trace real and positive; when the trace
/// vanishes the phase makes the first nonzero entry real positive.
SingleQubitUnitary so3_to_su2(const Rotation& r);

MajoranaConfiguration rotate(const Rotation& r, const MajoranaConfiguration& c,
                             double cluster_tol = 1e-6);

/// Bottleneck matching distance: min over bijections of the max chordal
/// distance between paired points. Sizes must agree.
double matching_distance(std::span<const Vec3> a, std::span<const Vec3> b);

/// Every rotation (deduplicated, sorted by angle then axis) carrying A onto B
/// within `tol` matching distance. For configurations lying on a single axis
/// the matching set is continuous; then only the canonical smallest-angle
/// representatives are returned.
std::vector<Rotation> matching_rotations(const MajoranaConfiguration& a,
                                         const MajoranaConfiguration& b,
                                         double tol = 1e-6);
/// Canonical element of matching_rotations, if any.
std::optional<Rotation> match_rotation(const MajoranaConfiguration& a,
                                       const MajoranaConfiguration& b,
                                       double tol = 1e-6);

enum class GroupTag {
  Trivial,
  Cyclic,
  Dihedral,
  Tetrahedral,
  Octahedral,
  Icosahedral,
  AxialContinuous,
  AxialContinuousFlip,
};

std::string to_string(GroupTag tag);

struct PointGroup {
  GroupTag tag = GroupTag::Trivial;
  /// Order of the principal axis for Cyclic/Dihedral, else 0.
  int m = 0;
  /// Group order; 0 for the continuous axial groups.
  int order = 1;
  /// Principal axis where one exists.
  Vec3 axis = Vec3::UnitZ();
  std::vector<Rotation> generators;
  /// Every element, for finite tags.
  std::vector<Rotation> elements;

  bool finite() const {
    return tag != GroupTag::AxialContinuous &&
           tag != GroupTag::AxialContinuousFlip;
  }
};

PointGroup symmetry_group(const MajoranaConfiguration& a, double tol = 1e-6);

/// Closure of `generators` under composition (identity included), up to
/// `cap` elements.
std::vector<Rotation> group_closure(std::span<const Rotation> generators,
                                    double tol = 1e-8, std::size_t cap = 1000);

/// Angle rounded to p/q * pi (q <= 60) when within 1e-9; for reporting.
double snap_angle(double angle);

}  // namespace symlu
