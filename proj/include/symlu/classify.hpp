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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "symlu/core.hpp"
#include "symlu/majorana.hpp"
#include "symlu/qubit.hpp"
#include "symlu/rotmatch.hpp"
#include "symlu/states.hpp"

namespace symlu {

/// Local unitary stabilizer types of symmetric pure states. The infinite
/// cases carry the conventional labels i, iia, iib, iii, iva and ivb.
enum class StabilizerTag {
  ProductU1n,     // i:   |0...0>, independent Z phases
  GhzBalanced,    // iia: (|0...0> + |1...1>)/sqrt(2)
  GhzGeneral,     // iib: a|0...0> + b|1...1>, a > b > 0
  Singlet,        // iii: two-qubit singlet, (g, g)
  DickeBalanced,  // iva: D_n^(n/2)
  DickeGeneral,   // ivb: D_n^(k), 0 < k < n/2
  Finite,
};

std::string label(StabilizerTag tag);

struct StabilizerClass {
  StabilizerTag tag = StabilizerTag::ProductU1n;
  int n = 1;
  /// a = cos(pi t / 4), b = sin(pi t / 4); iib only.
  double t = 0.0;
  /// Dicke index, iva/ivb only.
  int k = 0;
  std::optional<PointGroup> group;

  /// "i", "iia", ..., or "finite:<group tag>".
  std::string label() const;
};

struct ClassificationResult {
  StabilizerClass cls;
  /// Canonical representative; absent for the singlet, which is not symmetric.
  std::optional<SymmetricPureState> canonical;
  /// g with g^{(x)n} psi equal to the canonical state up to phase.
  std::optional<SingleQubitUnitary> transform;
  /// Per-qubit transform; used for the singlet, where the factors differ.
  std::optional<LocalUnitary> local_transform;
  /// Generators of the stabilizer of the canonical state.
  std::vector<LocalUnitary> generators;

  DensityMatrix canonical_density() const;
  /// Whether `u`, acting on the classified input, lies in the stabilizer
  /// described by this result (tested in the canonical frame).
  bool stabilizer_contains(const LocalUnitary& u, double tol = 1e-6) const;
};

/// Throws AmbiguousClassification when the state sits within 100 tol of a
/// branch boundary without being inside tol of either branch.
ClassificationResult classify_state(const SymmetricPureState& psi,
                                    const Tolerances& tol = {});

/// Entry point for density matrices: rank-one symmetric states go through
/// classify_state; the two-qubit singlet is recognised directly. Mixed
/// states throw UnsupportedError, rank-one non-symmetric states DomainError.
ClassificationResult classify_density(const DensityMatrix& rho,
                                      const Tolerances& tol = {});

/// The stabilizer of the canonical state of a class as a parametrized
/// family: continuous angles plus an optional discrete index (the X layer
/// for iia/iva, the group element for finite classes).
class StabilizerFamily {
 public:
  explicit StabilizerFamily(StabilizerClass cls);

  const StabilizerClass& cls() const { return cls_; }
  int continuous_arity() const;
  int discrete_size() const;

  /// Throws DomainError on arity or index mismatch.
  LocalUnitary element(std::span<const double> params, int discrete = 0) const;
  LocalUnitary sample(std::mt19937_64& rng) const;
  std::vector<LocalUnitary> generators() const;

  /// Projective membership test.
  bool contains(const LocalUnitary& u, double tol = 1e-6) const;

 private:
  StabilizerClass cls_;
};

std::vector<LocalUnitary> stabilizer_generators(const StabilizerClass& cls);

/// g with g^{(x)n} a equal to b up to phase within `tol`, if one exists.
std::optional<SingleQubitUnitary> lu_equivalent_pure(
    const SymmetricPureState& a, const SymmetricPureState& b,
    double tol = 1e-8, double match_tol = 1e-6);

struct CensusEntry {
  std::string label;
  std::string description;
  /// Dicke index for ivb entries.
  int k = 0;
};

struct ClassCensus {
  int n = 0;
  std::vector<CensusEntry> entries;
  /// Canonical ivb indices: 1 <= k < n/2.
  std::vector<int> ivb_k;
  /// floor(n/2), the count stated alongside the ivb list in the literature.
  int stated_count = 0;
  /// Length of the stated list D^(1) ... D^(floor(n/2) - 1).
  int stated_list_length = 0;
  bool discrepancy = false;
};

/// Infinite-stabilizer classes available at n (n >= 3).
ClassCensus class_census(int n);

}  // namespace symlu
