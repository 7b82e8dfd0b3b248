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
#include "symlu/qubit.hpp"

#include <cmath>

namespace symlu {

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

SingleQubitUnitary::SingleQubitUnitary(const Mat2& u, double tol) : u_(u) {
  double err = (u * u.adjoint() - Mat2::Identity()).norm();
  if (!(err <= tol))
    throw DomainError("matrix is not unitary (|u u^dagger - Id| = " +
                      std::to_string(err) + ")");
}

SingleQubitUnitary SingleQubitUnitary::rotation(const Vec3& axis,
                                                double angle) {
  double len = axis.norm();
  if (len == 0.0) return {};
  Vec3 v = axis / len;
  double c = std::cos(angle / 2), s = std::sin(angle / 2);
  Mat2 u;
  u(0, 0) = cplx(c, -s * v.z());
  u(0, 1) = cplx(-s * v.y(), -s * v.x());
  u(1, 0) = cplx(s * v.y(), -s * v.x());
  u(1, 1) = cplx(c, s * v.z());
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::phase(double phi) {
  Mat2 u = Mat2::Identity();
  u(1, 1) = std::polar(1.0, phi);
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::euler_zyz(double alpha, double beta,
                                                 double gamma) {
  return rz(alpha) * ry(beta) * rz(gamma);
}

SingleQubitUnitary SingleQubitUnitary::pauli_x() {
  Mat2 u;
  u << 0, 1, 1, 0;
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::pauli_y() {
  Mat2 u;
  u << 0, -kI, kI, 0;
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::pauli_z() {
  Mat2 u;
  u << 1, 0, 0, -1;
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::random(std::mt19937_64& rng) {
  // Uniform unit quaternion.
  std::normal_distribution<double> gauss;
  Eigen::Vector4d q;
  do {
    for (int i = 0; i < 4; ++i) q(i) = gauss(rng);
  } while (q.norm() < 1e-8);
  q.normalize();
  Mat2 u;
  u(0, 0) = cplx(q(0), -q(3));
  u(0, 1) = cplx(-q(2), -q(1));
  u(1, 0) = cplx(q(2), -q(1));
  u(1, 1) = cplx(q(0), q(3));
  return {u, Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::adjoint() const {
  return {u_.adjoint(), Unchecked{}};
}

SingleQubitUnitary SingleQubitUnitary::operator*(
    const SingleQubitUnitary& o) const {
  return {u_ * o.u_, Unchecked{}};
}

bool SingleQubitUnitary::projectively_equal(const SingleQubitUnitary& o,
                                            double tol) const {
  cplx overlap = (o.u_.adjoint() * u_).trace() / 2.0;
  double mag = std::abs(overlap);
  if (mag < 0.5) return false;
  return (u_ - (overlap / mag) * o.u_).norm() <= tol;
}

SingleQubitUnitary SingleQubitUnitary::phase_normalized() const {
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (std::abs(u_(r, c)) > 1e-12) {
        cplx ph = std::conj(u_(r, c)) / std::abs(u_(r, c));
        return {u_ * ph, Unchecked{}};
      }
  return *this;
}

bool SingleQubitUnitary::is_diagonal(double tol) const {
  return std::abs(u_(0, 1)) <= tol && std::abs(u_(1, 0)) <= tol;
}

bool SingleQubitUnitary::is_antidiagonal(double tol) const {
  return std::abs(u_(0, 0)) <= tol && std::abs(u_(1, 1)) <= tol;
}

LocalUnitary::LocalUnitary(std::vector<SingleQubitUnitary> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("local unitary needs n >= 1 factors");
}

LocalUnitary LocalUnitary::identity(int n) {
  return LocalUnitary(std::vector<SingleQubitUnitary>(n));
}

LocalUnitary LocalUnitary::identical(const SingleQubitUnitary& g, int n) {
  return LocalUnitary(std::vector<SingleQubitUnitary>(n, g));
}

LocalUnitary LocalUnitary::operator*(const LocalUnitary& o) const {
  if (o.n() != n()) throw DomainError("local unitary arity mismatch");
  std::vector<SingleQubitUnitary> f;
  f.reserve(factors_.size());
  for (int k = 0; k < n(); ++k) f.push_back(factors_[k] * o.factors_[k]);
  return LocalUnitary(std::move(f));
}

LocalUnitary LocalUnitary::adjoint() const {
  std::vector<SingleQubitUnitary> f;
  f.reserve(factors_.size());
  for (const auto& g : factors_) f.push_back(g.adjoint());
  return LocalUnitary(std::move(f));
}

bool LocalUnitary::projectively_equal(const LocalUnitary& o,
                                      double tol) const {
  if (o.n() != n()) return false;
  for (int k = 0; k < n(); ++k)
    if (!factors_[k].projectively_equal(o.factors_[k], tol)) return false;
  return true;
}

CMat LocalUnitary::dense() const {
  CMat out = CMat::Identity(1, 1);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const auto& g = *it;
    CMat next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) =
            g(r, c) * out;
    out = std::move(next);
  }
  return out;
}

}  // namespace symlu
