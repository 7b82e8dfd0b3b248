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

#include <span>
#include <vector>

#include "symlu/core.hpp"
#include "symlu/qubit.hpp"
#include "symlu/states.hpp"

namespace symlu {

/// A point on the unit Bloch sphere. The qubit cos(t/2)|0> + e^{ip} sin(t/2)|1>
/// sits at (sin t cos p, sin t sin p, cos t); |0> is the north pole.
class BlochPoint {
 public:
  BlochPoint() : v_(Vec3::UnitZ()) {}
  /// Normalizes; throws DomainError for the zero vector.
  explicit BlochPoint(const Vec3& v);

  static BlochPoint north() { return BlochPoint(); }
  static BlochPoint south() { return BlochPoint(-Vec3::UnitZ()); }
  static BlochPoint from_angles(double theta, double phi);
  /// Image of the qubit (|0> + z|1>)/sqrt(1+|z|^2).
  static BlochPoint from_stereographic(cplx z);
  static BlochPoint from_qubit(const Vec2& q);

  const Vec3& vec() const { return v_; }
  double theta() const;
  /// In [0, 2 pi); 0 at the poles.
  double phi() const;
  /// Representative with real nonnegative |0> component (|1> at the south pole).
  Vec2 qubit() const;

  double chordal_distance(const BlochPoint& o) const { return (v_ - o.v_).norm(); }

 private:
  Vec3 v_;
};

struct MajoranaCluster {
  BlochPoint point;
  int multiplicity = 1;
};

/// Multiset of n Bloch points, stored as clusters with multiplicities.
class MajoranaConfiguration {
 public:
  /// Single-linkage clustering of `points` at chordal distance `cluster_tol`.
  static MajoranaConfiguration from_points(std::span<const BlochPoint> points,
                                           double cluster_tol = 1e-6);
  /// Re-clusters the given clusters (merging any within `cluster_tol`).
  static MajoranaConfiguration from_clusters(std::vector<MajoranaCluster> clusters,
                                             double cluster_tol = 1e-6);

  int n() const { return n_; }
  const std::vector<MajoranaCluster>& clusters() const { return clusters_; }
  /// Expanded multiset, one entry per unit of multiplicity.
  std::vector<BlochPoint> points() const;
  std::vector<Vec3> vectors() const;

 private:
  MajoranaConfiguration() = default;
  int n_ = 0;
  std::vector<MajoranaCluster> clusters_;
};

/// Roots of sum_i coeffs[i] z^i (ascending powers), polished by Newton steps.
/// Multiple roots come back as nearby copies. A polynomial of degree 0
/// returns no roots; all-zero input throws DomainError.
std::vector<cplx> find_roots(std::span<const cplx> coeffs);

/// A root of multiplicity `multiplicity`; `infinite` marks the point at
/// infinity (a degree deficit), whose `value` is meaningless.
struct RootCluster {
  cplx value;
  int multiplicity = 1;
  bool infinite = false;
};

/// Groups roots of `coeffs` (ascending) by multiplicity. Roots within
/// `cluster_tol` chordal distance always merge; wider groups merge only when
/// the Taylor expansion of the polynomial at their centroid is consistent
/// with a multiple root at working precision. `n_infinite` roots at
/// infinity are prepended as one cluster.
std::vector<RootCluster> cluster_roots(std::span<const cplx> coeffs,
                                       std::span<const cplx> roots,
                                       int n_infinite, double cluster_tol);

/// Ascending coefficients of sum_k (-1)^k sqrt(C(n,k)) c_k z^{n-k}.
std::vector<cplx> majorana_polynomial(const SymmetricPureState& psi);

MajoranaConfiguration majorana_points(const SymmetricPureState& psi,
                                      double cluster_tol = 1e-6);
SymmetricPureState points_to_state(const MajoranaConfiguration& config);
/// Rotates every point by the SO(3) image of g.
MajoranaConfiguration mobius_apply(const SingleQubitUnitary& g,
                                   const MajoranaConfiguration& config,
                                   double cluster_tol = 1e-6);

}  // namespace symlu
