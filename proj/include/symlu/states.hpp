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

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "symlu/core.hpp"
#include "symlu/qubit.hpp"

namespace symlu {

/// A computational-basis label |b_0 b_1 ... b_{n-1}>, b_0 most significant.
class BitString {
 public:
  BitString(int n, std::uint64_t index);
  static BitString zeros(int n) { return {n, 0}; }
  static BitString ones(int n);

  int n() const { return n_; }
  std::uint64_t index() const { return index_; }
  int bit(int qubit) const {
    return static_cast<int>((index_ >> (n_ - 1 - qubit)) & 1U);
  }
  int weight() const;
  BitString complement() const;
  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  int n_;
  std::uint64_t index_;
};

/// Pure symmetric state stored by its n+1 Dicke-basis amplitudes.
class SymmetricPureState {
 public:
  /// Normalizes `coeffs`; throws NormalizationError on a zero vector.
  SymmetricPureState(int n, CVec coeffs);

  int n() const { return n_; }
  const CVec& coeffs() const { return coeffs_; }
  cplx operator[](int k) const { return coeffs_(k); }

  /// Global phase fixed so the first nonzero coefficient is real positive.
  SymmetricPureState phase_normalized() const;

  static SymmetricPureState random(int n, std::mt19937_64& rng);

 private:
  int n_;
  CVec coeffs_;
};

/// min over alpha of |a - e^{i alpha} b|.
double distance_up_to_phase(const CVec& a, const CVec& b);
double distance_up_to_phase(const SymmetricPureState& a,
                            const SymmetricPureState& b);

class PureState {
 public:
  PureState(int n, CVec amps);

  int n() const { return n_; }
  const CVec& amps() const { return amps_; }

 private:
  int n_;
  CVec amps_;
};

/// Hermitian, positive semidefinite, trace-one 2^n x 2^n matrix.
class DensityMatrix {
 public:
  /// Validates hermiticity, trace and spectrum against `tol.hermiticity`.
  DensityMatrix(int n, CMat mat, const Tolerances& tol = {});

  int n() const { return n_; }
  const CMat& matrix() const { return mat_; }
  std::size_t dim() const { return static_cast<std::size_t>(mat_.rows()); }

  /// Bypasses validation for matrices produced by trusted operations.
  static DensityMatrix trusted(int n, CMat mat);

 private:
  struct Unchecked {};
  DensityMatrix(int n, CMat mat, Unchecked) : n_(n), mat_(std::move(mat)) {}
  int n_;
  CMat mat_;
};

SymmetricPureState dicke(int n, int k);
/// a|0...0> + b|1...1>; |a|^2 + |b|^2 must be 1 within 1e-12.
SymmetricPureState ghz(int n, cplx a, cplx b);
/// The balanced GHZ state (|0...0> + |1...1>)/sqrt(2).
SymmetricPureState ghz(int n);

/// Normalized sum over all orderings of the tensor product of `qubits`,
/// computed as a product of linear forms (no n! expansion).
SymmetricPureState symmetrize(std::span<const Vec2> qubits);

/// Embeds a Dicke-basis state in the 2^n computational basis.
PureState expand(const SymmetricPureState& psi, const Tolerances& tol = {});
/// Dicke-basis components <D_k|psi> (not renormalized).
CVec project_symmetric(const PureState& psi);

DensityMatrix to_density(const PureState& psi);
DensityMatrix to_density(const SymmetricPureState& psi,
                         const Tolerances& tol = {});

/// U rho U^dagger, applied factor by factor.
DensityMatrix apply_lu(const LocalUnitary& u, const DensityMatrix& rho);
/// U M U^dagger for an arbitrary square matrix M over n qubits.
CMat conjugate(const LocalUnitary& u, const CMat& m);
/// Applies a single-qubit matrix to the row index of `m` on `qubit`.
void apply_on_rows(CMat& m, const Mat2& g, int qubit, int n);
CVec apply_local(const LocalUnitary& u, const CVec& amps);

/// The (n+1)x(n+1) matrix of g^{(x)n} restricted to the symmetric subspace.
CMat symmetric_power(const Mat2& g, int n);
SymmetricPureState apply_diag_symmetric(const SingleQubitUnitary& g,
                                        const SymmetricPureState& psi);

/// perm[j] is the position that qubit j is moved to.
DensityMatrix permute_qubits(const DensityMatrix& rho,
                             std::span<const int> perm);
/// First adjacent transposition (j, j+1) that changes rho by more than tol.
std::optional<std::pair<int, int>> first_noninvariant_transposition(
    const DensityMatrix& rho, double tol = 1e-10);
bool is_permutation_invariant(const DensityMatrix& rho, double tol = 1e-10);

/// Partial trace onto qubit k.
Mat2 reduced_1qubit(const DensityMatrix& rho, int k);

/// (|01> - |10>)/sqrt(2) projector.
DensityMatrix singlet_density();

}  // namespace symlu
