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
#include "symlu/states.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>

namespace symlu {

namespace {

std::size_t dim_of(int n) { return std::size_t{1} << n; }

void check_dense_cap(int n, const Tolerances& tol) {
  if (n > tol.max_dense_qubits)
    throw DomainError("dense 2^n representation capped at n = " +
                      std::to_string(tol.max_dense_qubits) + " (got " +
                      std::to_string(n) + ")");
}

}  // namespace

BitString::BitString(int n, std::uint64_t index) : n_(n), index_(index) {
  if (n < 1 || n > 63) throw DomainError("bit string length out of range");
  if (index >> n) throw DomainError("bit string index out of range");
}

BitString BitString::ones(int n) { return {n, (std::uint64_t{1} << n) - 1}; }

int BitString::weight() const { return std::popcount(index_); }

BitString BitString::complement() const {
  return {n_, index_ ^ ((std::uint64_t{1} << n_) - 1)};
}

std::string BitString::str() const {
  std::string s(n_, '0');
  for (int q = 0; q < n_; ++q)
    if (bit(q)) s[q] = '1';
  return s;
}

SymmetricPureState::SymmetricPureState(int n, CVec coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1) throw DomainError("symmetric state needs n >= 1");
  if (coeffs_.size() != n + 1)
    throw DomainError("symmetric state of " + std::to_string(n) +
                      " qubits needs " + std::to_string(n + 1) +
                      " Dicke coefficients");
  double norm = coeffs_.norm();
  if (!(norm > 0.0) || !std::isfinite(norm))
    throw NormalizationError("cannot normalize a zero or non-finite state");
  coeffs_ /= norm;
}

SymmetricPureState SymmetricPureState::phase_normalized() const {
  for (int k = 0; k <= n_; ++k) {
    if (std::abs(coeffs_(k)) > 1e-12) {
      cplx ph = std::conj(coeffs_(k)) / std::abs(coeffs_(k));
      return {n_, coeffs_ * ph};
    }
  }
  return *this;
}

SymmetricPureState SymmetricPureState::random(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  CVec c(n + 1);
  for (int k = 0; k <= n; ++k) c(k) = cplx(gauss(rng), gauss(rng));
  return {n, c};
}

double distance_up_to_phase(const CVec& a, const CVec& b) {
  cplx overlap = b.dot(a);  // <b|a>
  double mag = std::abs(overlap);
  cplx ph = mag > 0 ? overlap / mag : cplx(1.0);
  return (a - ph * b).norm();
}

double distance_up_to_phase(const SymmetricPureState& a,
                            const SymmetricPureState& b) {
  if (a.n() != b.n()) throw DomainError("qubit count mismatch");
  return distance_up_to_phase(a.coeffs(), b.coeffs());
}

PureState::PureState(int n, CVec amps) : n_(n), amps_(std::move(amps)) {
  if (n < 1 || static_cast<std::size_t>(amps_.size()) != dim_of(n))
    throw DomainError("pure state needs 2^n amplitudes");
  double norm = amps_.norm();
  if (std::abs(norm - 1.0) > 1e-12)
    throw NormalizationError("pure state is not unit norm");
}

DensityMatrix::DensityMatrix(int n, CMat mat, const Tolerances& tol)
    : n_(n), mat_(std::move(mat)) {
  if (n < 1 || static_cast<std::size_t>(mat_.rows()) != dim_of(n) ||
      mat_.rows() != mat_.cols())
    throw DomainError("density matrix must be 2^n x 2^n");
  check_dense_cap(n, tol);
  double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol.hermiticity)
    throw DomainError("density matrix is not Hermitian");
  cplx tr = mat_.trace();
  if (std::abs(tr - 1.0) > tol.hermiticity)
    throw DomainError("density matrix trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMat> es(mat_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol.hermiticity)
    throw DomainError("density matrix has a negative eigenvalue");
}

DensityMatrix DensityMatrix::trusted(int n, CMat mat) {
  return {n, std::move(mat), Unchecked{}};
}

SymmetricPureState dicke(int n, int k) {
  if (n < 1) throw DomainError("dicke: n must be >= 1");
  if (k < 0 || k > n)
    throw DomainError("dicke: excitation count " + std::to_string(k) +
                      " outside [0, " + std::to_string(n) + "]");
  CVec c = CVec::Zero(n + 1);
  c(k) = 1.0;
  return {n, c};
}

SymmetricPureState ghz(int n, cplx a, cplx b) {
  if (n < 2) throw DomainError("ghz: n must be >= 2");
  double norm2 = std::norm(a) + std::norm(b);
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw NormalizationError("ghz: |a|^2 + |b|^2 must equal 1");
  CVec c = CVec::Zero(n + 1);
  c(0) = a;
  c(n) = b;
  return {n, c};
}

SymmetricPureState ghz(int n) {
  return ghz(n, std::sqrt(0.5), std::sqrt(0.5));
}

SymmetricPureState symmetrize(std::span<const Vec2> qubits) {
  if (qubits.empty()) throw DomainError("symmetrize: need at least one qubit");
  std::vector<Vec2> v;
  v.reserve(qubits.size());
  for (const auto& q : qubits) {
    double norm = q.norm();
    if (!(norm > 0.0)) throw DomainError("symmetrize: zero input vector");
    v.push_back(q / norm);
  }
  // A fixed multiplication order makes the result independent of input order.
  auto key = [](const Vec2& q) {
    return std::array<double, 4>{q(0).real(), q(0).imag(), q(1).real(),
                                 q(1).imag()};
  };
  std::sort(v.begin(), v.end(),
            [&](const Vec2& a, const Vec2& b) { return key(a) < key(b); });

  // prod_j (alpha_j x + beta_j y) = sum_k p_k x^{n-k} y^k, and
  // |D_k> corresponds to sqrt(C(n,k)) x^{n-k} y^k.
  const int n = static_cast<int>(v.size());
  CVec p = CVec::Zero(n + 1);
  p(0) = 1.0;
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k >= 1; --k) p(k) = v[j](0) * p(k) + v[j](1) * p(k - 1);
    p(0) = v[j](0) * p(0);
  }
  for (int k = 0; k <= n; ++k) p(k) /= std::sqrt(binomial(n, k));
  if (!(p.norm() > 1e-300))
    throw DomainError("symmetrize: symmetrization vanished");
  return {n, p};
}

PureState expand(const SymmetricPureState& psi, const Tolerances& tol) {
  const int n = psi.n();
  check_dense_cap(n, tol);
  std::vector<double> scale(n + 1);
  for (int k = 0; k <= n; ++k) scale[k] = 1.0 / std::sqrt(binomial(n, k));
  CVec amps(dim_of(n));
  for (std::size_t i = 0; i < dim_of(n); ++i) {
    int w = std::popcount(i);
    amps(i) = psi[w] * scale[w];
  }
  amps /= amps.norm();
  return {n, amps};
}

CVec project_symmetric(const PureState& psi) {
  const int n = psi.n();
  CVec c = CVec::Zero(n + 1);
  for (std::size_t i = 0; i < dim_of(n); ++i) c(std::popcount(i)) += psi.amps()(i);
  for (int k = 0; k <= n; ++k) c(k) /= std::sqrt(binomial(n, k));
  return c;
}

DensityMatrix to_density(const PureState& psi) {
  return DensityMatrix::trusted(psi.n(), psi.amps() * psi.amps().adjoint());
}

DensityMatrix to_density(const SymmetricPureState& psi, const Tolerances& tol) {
  return to_density(expand(psi, tol));
}

void apply_on_rows(CMat& m, const Mat2& g, int qubit, int n) {
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  const auto dim = static_cast<std::size_t>(m.rows());
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & mask) continue;
    const std::size_t j = i | mask;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      cplx r0 = m(i, c), r1 = m(j, c);
      m(i, c) = g(0, 0) * r0 + g(0, 1) * r1;
      m(j, c) = g(1, 0) * r0 + g(1, 1) * r1;
    }
  }
}

CMat conjugate(const LocalUnitary& u, const CMat& m) {
  const int n = u.n();
  if (static_cast<std::size_t>(m.rows()) != dim_of(n))
    throw DomainError("local unitary arity does not match matrix size");
  CMat a = m;
  for (int q = 0; q < n; ++q) apply_on_rows(a, u[q].matrix(), q, n);
  CMat b = a.adjoint();
  for (int q = 0; q < n; ++q) apply_on_rows(b, u[q].matrix(), q, n);
  return b.adjoint();
}

DensityMatrix apply_lu(const LocalUnitary& u, const DensityMatrix& rho) {
  if (u.n() != rho.n())
    throw DomainError("apply_lu: " + std::to_string(u.n()) +
                      " factors for a " + std::to_string(rho.n()) +
                      "-qubit state");
  return DensityMatrix::trusted(rho.n(), conjugate(u, rho.matrix()));
}

CVec apply_local(const LocalUnitary& u, const CVec& amps) {
  const int n = u.n();
  if (static_cast<std::size_t>(amps.size()) != dim_of(n))
    throw DomainError("local unitary arity does not match vector size");
  CMat v = amps;
  for (int q = 0; q < n; ++q) apply_on_rows(v, u[q].matrix(), q, n);
  return v.col(0);
}

CMat symmetric_power(const Mat2& g, int n) {
  // g^{(x)n} |D_k> ~ sqrt(C(n,k)) (a x + c y)^{n-k} (b x + d y)^k, read off in
  // the monomial basis x^{n-j} y^j and rescaled by 1/sqrt(C(n,j)).
  const cplx a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  CMat s = CMat::Zero(n + 1, n + 1);
  std::vector<cplx> poly, next;
  for (int k = 0; k <= n; ++k) {
    poly.assign(1, 1.0);
    auto mul = [&](cplx lo, cplx hi) {
      next.assign(poly.size() + 1, 0.0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += lo * poly[i];
        next[i + 1] += hi * poly[i];
      }
      poly.swap(next);
    };
    for (int i = 0; i < n - k; ++i) mul(a, c);
    for (int i = 0; i < k; ++i) mul(b, d);
    for (int j = 0; j <= n; ++j)
      s(j, k) = poly[j] * std::sqrt(binomial(n, k) / binomial(n, j));
  }
  return s;
}

SymmetricPureState apply_diag_symmetric(const SingleQubitUnitary& g,
                                        const SymmetricPureState& psi) {
  return {psi.n(), symmetric_power(g.matrix(), psi.n()) * psi.coeffs()};
}

DensityMatrix permute_qubits(const DensityMatrix& rho,
                             std::span<const int> perm) {
  const int n = rho.n();
  if (static_cast<int>(perm.size()) != n)
    throw DomainError("permutation length does not match qubit count");
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]++)
      throw DomainError("invalid qubit permutation");
  }
  const std::size_t dim = dim_of(n);
  std::vector<std::size_t> map(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::size_t out = 0;
    for (int j = 0; j < n; ++j)
      if ((i >> (n - 1 - j)) & 1U) out |= std::size_t{1} << (n - 1 - perm[j]);
    map[i] = out;
  }
  CMat m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(map[i], map[j]) = rho.matrix()(i, j);
  return DensityMatrix::trusted(n, std::move(m));
}

std::optional<std::pair<int, int>> first_noninvariant_transposition(
    const DensityMatrix& rho, double tol) {
  const int n = rho.n();
  std::vector<int> perm(n);
  for (int j = 0; j + 1 < n; ++j) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[j], perm[j + 1]);
    auto swapped = permute_qubits(rho, perm);
    if ((swapped.matrix() - rho.matrix()).cwiseAbs().maxCoeff() > tol)
      return std::make_pair(j, j + 1);
  }
  return std::nullopt;
}

bool is_permutation_invariant(const DensityMatrix& rho, double tol) {
  return !first_noninvariant_transposition(rho, tol).has_value();
}

Mat2 reduced_1qubit(const DensityMatrix& rho, int k) {
  const int n = rho.n();
  if (k < 0 || k >= n)
    throw DomainError("reduced_1qubit: qubit index out of range");
  const std::size_t mask = std::size_t{1} << (n - 1 - k);
  Mat2 r = Mat2::Zero();
  for (std::size_t i = 0; i < dim_of(n); ++i) {
    if (i & mask) continue;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        r(a, b) += rho.matrix()(i | (a ? mask : 0), i | (b ? mask : 0));
  }
  return r;
}

DensityMatrix singlet_density() {
  CVec v = CVec::Zero(4);
  v(1) = std::sqrt(0.5);
  v(2) = -std::sqrt(0.5);
  return to_density(PureState(2, v));
}

}  // namespace symlu
