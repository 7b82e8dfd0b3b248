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
#include <string>
#include <utility>
#include <vector>

#include "symlu/core.hpp"
#include "symlu/qubit.hpp"
#include "symlu/states.hpp"

namespace symlu {

struct EquivalenceSearchConfig {
  int grid_alpha = 12;
  int grid_beta = 12;
  int grid_gamma = 12;
  /// Lattice points refined by local descent.
  int refine_top = 4;
  int restarts = 8;
  /// Round cap for each local refinement.
  int max_rounds = 200;
  /// Frobenius acceptance threshold; 1e-7 * 2^{n/2} when unset.
  std::optional<double> threshold;
  double prefilter_tol = 1e-8;
  std::uint64_t seed = 20260516;

  /// Throws DomainError for non-positive thresholds or lattices below 4.
  void validate() const;
  double threshold_for(int n) const;
};

enum class MixedVerdict {
  Equivalent,
  /// Spectral invariants differ.
  Inequivalent,
  /// Invariants agree but the search did not reach the threshold.
  Undecided,
};

std::string to_string(MixedVerdict v);

struct MixedEquivalence {
  MixedVerdict verdict = MixedVerdict::Undecided;
  /// Identical factor g for lu_equivalent_mixed.
  std::optional<SingleQubitUnitary> g;
  /// Per-qubit factors for the two-qubit fallback.
  std::optional<LocalUnitary> local;
  /// Best Frobenius distance reached (0 when rejected by the prefilter).
  double distance = 0.0;
  double threshold = 0.0;
  std::string reason;
  /// Set by the two-qubit fallback, which carries no completeness guarantee.
  bool no_completeness_guarantee = false;
};

/// Frobenius distance between g^{(x)n} rho g^{(x)n dagger} and target.
double conjugation_distance(const SingleQubitUnitary& g, const DensityMatrix& rho,
                            const DensityMatrix& target);

/// Searches for a single g with rho' = g^{(x)n} rho g^{(x)n dagger}.
/// Requires permutation-invariant inputs (DomainError naming the violated
/// transposition otherwise) with n >= 3 (UnsupportedError otherwise).
MixedEquivalence lu_equivalent_mixed(const DensityMatrix& a,
                                     const DensityMatrix& b,
                                     const EquivalenceSearchConfig& cfg = {});

/// Brute-force search over independent (g1, g2) for two qubits. A negative
/// answer is not conclusive.
MixedEquivalence two_qubit_equivalent(const DensityMatrix& a,
                                      const DensityMatrix& b,
                                      const EquivalenceSearchConfig& cfg = {});

/// tau = a|I><I| + b|I><I^c| + conj(b)|I^c><I| + (1-a)|I^c><I^c|.
struct GhzForm {
  int n = 3;
  BitString I = BitString::zeros(3);
  double a = 1.0;
  cplx b = 0.0;

  /// Throws DomainError when |b|^2 > a(1-a) + 1e-10 or a is outside [0,1].
  DensityMatrix density() const;
};

class NotGhzForm : public DomainError {
 public:
  NotGhzForm(const std::string& what,
             std::vector<std::pair<std::uint64_t, std::uint64_t>> entries)
      : DomainError(what), entries_(std::move(entries)) {}
  /// Offending (row, column) indices.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& entries() const {
    return entries_;
  }

 private:
  std::vector<std::pair<std::uint64_t, std::uint64_t>> entries_;
};

struct CanonicalizationStep {
  std::string name;
  LocalUnitary u;
};

struct GhzCanonicalization {
  /// I = 0...0, a >= 1/2, b real and nonnegative.
  GhzForm form;
  /// Applied in order; each is an identical tuple.
  std::vector<CanonicalizationStep> steps;
  /// Product of the steps: form.density() = total tau total^dagger.
  LocalUnitary total = LocalUnitary::identity(1);
};

/// Brings a two-term GHZ-like density matrix to canonical form with a
/// phase layer diag(1, e^{i phi})^{(x)n} and, when a < 1/2, an X layer.
/// Throws NotGhzForm listing entries outside the allowed support, and
/// DomainError when the support string is not 0...0 / 1...1.
GhzCanonicalization canonical_ghz_form(const DensityMatrix& tau,
                                       double tol = 1e-10);

enum class SupportStatus { Holds, Violated, NotApplicable };

std::string to_string(SupportStatus s);

struct SupportCheck {
  SupportStatus status = SupportStatus::NotApplicable;
  /// First entry c_IJ != 0 with J outside {I, I^c}.
  std::optional<std::pair<BitString, BitString>> witness;
  /// Frobenius residual of the stabilization precondition.
  double stabilizer_residual = 0.0;
  std::string reason;
};

/// With d = diag(e^{it}, e^{-it}) acting as d on qubit k and d^dagger on
/// qubit l: if this stabilizes tau (and t is not a multiple of pi), every
/// nonzero c_IJ must have J = I or J = I^c. When `check_precondition` is
/// false the stabilization is taken as given.
SupportCheck two_qubit_support_check(const DensityMatrix& tau, int k, int l,
                                     double t, double tol = 1e-9,
                                     bool check_precondition = true);

}  // namespace symlu
