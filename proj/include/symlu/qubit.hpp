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

#include <random>
#include <vector>

#include "symlu/core.hpp"

namespace symlu {

/// A 2x2 unitary. Equality up to a global phase is projective_equal().
class SingleQubitUnitary {
 public:
  SingleQubitUnitary() : u_(Mat2::Identity()) {}
  /// Throws DomainError unless u u^dagger = Id within tol.
  explicit SingleQubitUnitary(const Mat2& u, double tol = 1e-12);

  /// exp(-i angle/2 axis.sigma): rotation of the Bloch sphere by `angle`
  /// radians about `axis`.
  static SingleQubitUnitary rotation(const Vec3& axis, double angle);
  static SingleQubitUnitary rz(double t) { return rotation(Vec3::UnitZ(), t); }
  static SingleQubitUnitary ry(double t) { return rotation(Vec3::UnitY(), t); }
  static SingleQubitUnitary rx(double t) { return rotation(Vec3::UnitX(), t); }
  /// diag(1, e^{i phi})
  static SingleQubitUnitary phase(double phi);
  /// rz(alpha) ry(beta) rz(gamma)
  static SingleQubitUnitary euler_zyz(double alpha, double beta, double gamma);
  static SingleQubitUnitary pauli_x();
  static SingleQubitUnitary pauli_y();
  static SingleQubitUnitary pauli_z();
  /// Haar-random element.
  static SingleQubitUnitary random(std::mt19937_64& rng);

  const Mat2& matrix() const { return u_; }
  cplx operator()(int r, int c) const { return u_(r, c); }

  SingleQubitUnitary adjoint() const;
  SingleQubitUnitary operator*(const SingleQubitUnitary& o) const;

  bool projectively_equal(const SingleQubitUnitary& o, double tol = 1e-8) const;
  /// Representative whose first nonzero entry (row-major) is real positive.
  SingleQubitUnitary phase_normalized() const;

  bool is_diagonal(double tol) const;
  bool is_antidiagonal(double tol) const;

 private:
  struct Unchecked {};
  SingleQubitUnitary(const Mat2& u, Unchecked) : u_(u) {}
  Mat2 u_;
};

/// (g_1, ..., g_n) acting as g_1 (x) ... (x) g_n. Qubit 0 is the most
/// significant bit of a computational-basis index.
class LocalUnitary {
 public:
  explicit LocalUnitary(std::vector<SingleQubitUnitary> factors);
  static LocalUnitary identity(int n);
  static LocalUnitary identical(const SingleQubitUnitary& g, int n);

  int n() const { return static_cast<int>(factors_.size()); }
  const SingleQubitUnitary& operator[](int k) const { return factors_[k]; }
  const std::vector<SingleQubitUnitary>& factors() const { return factors_; }

  LocalUnitary operator*(const LocalUnitary& o) const;
  LocalUnitary adjoint() const;

  /// U == V in PU(2)^n: every factor agrees up to its own phase.
  bool projectively_equal(const LocalUnitary& o, double tol = 1e-8) const;
  /// Dense 2^n x 2^n Kronecker product.
  CMat dense() const;

 private:
  std::vector<SingleQubitUnitary> factors_;
};

}  // namespace symlu
