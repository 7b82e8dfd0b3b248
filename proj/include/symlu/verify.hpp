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

#include <array>
#include <string>
#include <vector>

#include "symlu/classify.hpp"
#include "symlu/core.hpp"
#include "symlu/qubit.hpp"
#include "symlu/states.hpp"

namespace symlu {

struct StabilizerWitness {
  LocalUnitary U;
  /// Frobenius norm of U rho U^dagger - rho.
  double residual = 0.0;
  bool accepted = false;
  /// Search family that produced the witness: "identical", "diagonal" or
  /// "diagonal+X"; empty for direct checks.
  std::string family;
};

/// Dense conjugation check. Throws DomainError on arity mismatch.
StabilizerWitness check_stabilizes(const LocalUnitary& u,
                                   const DensityMatrix& rho, double tol = 1e-9);

struct StabilizerSearchConfig {
  /// Euler-lattice points per angle for identical tuples g^{(x)n}.
  int grid = 12;
  /// Lattice evaluations allowed for the per-qubit diagonal families.
  int diagonal_budget = 60000;
  /// Local descents started from the best lattice points, per family.
  int max_descents = 64;
  double accept_tol = 1e-9;
  /// Projective distance under which two witnesses are merged.
  double dedupe_tol = 1e-6;
  int max_qubits = 10;
};

/// Numerical search for stabilizer elements in two families: identical
/// tuples g^{(x)n}, and independent per-qubit Z phases with and without an
/// X layer. Returns the accepted witnesses, deduplicated projectively and
/// sorted canonically.
std::vector<StabilizerWitness> sample_stabilizer(
    const DensityMatrix& rho, const StabilizerSearchConfig& cfg = {});

struct SpectraReport {
  /// Ascending.
  std::vector<double> eigenvalues;
  /// Ascending eigenvalues of each one-qubit marginal.
  std::vector<std::array<double, 2>> reduced;
};

SpectraReport spectra_report(const DensityMatrix& rho);

struct CrossCheckReport {
  ClassificationResult classification;
  /// Each emitted generator checked on the canonical projector.
  std::vector<StabilizerWitness> generator_checks;
  std::vector<StabilizerWitness> witnesses;
  /// Witnesses outside the classified stabilizer.
  std::vector<StabilizerWitness> anomalies;
  int identical_count = 0;
  /// Finite classes: identical-tuple witness count differs from the order.
  bool order_mismatch = false;

  bool ok() const;
};

/// Classifies psi, checks every generator by dense conjugation and
/// searches for stabilizer elements outside the classified group.
CrossCheckReport cross_check(const SymmetricPureState& psi,
                             const StabilizerSearchConfig& cfg = {},
                             const Tolerances& tol = {});

}  // namespace symlu
