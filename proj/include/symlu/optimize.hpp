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
#include <functional>
#include <span>
#include <vector>

#include "symlu/qubit.hpp"

namespace symlu {

struct DescentOptions {
  double initial_step = 0.5;
  double min_step = 1e-12;
  int max_sweeps = 200;
  /// Stop as soon as the objective drops to this value.
  double target = 0.0;
};

struct DescentResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
};

using Objective = std::function<double(std::span<const double>)>;

/// Coordinate-wise golden-section descent with a per-coordinate bracket
/// that adapts to the last accepted move, plus a pattern step along the
/// net displacement of each sweep.
DescentResult coordinate_descent(const Objective& f, std::vector<double> x0,
                                 const DescentOptions& opts = {});

/// Golden-section minimum of a scalar function on [lo, hi].
double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double xtol, int max_iter = 200);

struct Su2Minimum {
  SingleQubitUnitary g;
  double value = 0.0;
  int evaluations = 0;
};

/// Local minimization over SU(2) in exponential coordinates
/// g = exp(-i d.sigma/2) g0, recentred on g0 after every round.
Su2Minimum refine_su2(const std::function<double(const SingleQubitUnitary&)>& f,
                      const SingleQubitUnitary& g0,
                      const DescentOptions& opts = {});

/// ZYZ Euler-angle lattice: alpha, gamma on [0, 2 pi) and beta on [0, pi].
std::vector<std::array<double, 3>> euler_lattice(int n_alpha, int n_beta,
                                                 int n_gamma);

}  // namespace symlu
