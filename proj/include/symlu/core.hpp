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

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace symlu {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Comparison thresholds shared by every operation that decides equality.
struct Tolerances {
  double hermiticity = 1e-10;
  double norm = 1e-12;
  double equality = 1e-8;
  /// Chordal distance under which Majorana roots are merged.
  double cluster = 1e-6;
  /// Chordal distance for configuration matching.
  double match = 1e-6;
  /// Largest qubit count for which full 2^n vectors/matrices are built.
  int max_dense_qubits = 12;
};

/// Precondition or input-validity violation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NormalizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The operation is well-defined but outside what the library supports
/// (e.g. mixed-state equivalence for fewer than three qubits).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two classification branches both fall inside the tolerance band.
class AmbiguousClassification : public std::runtime_error {
 public:
  AmbiguousClassification(std::string first, std::string second,
                          double defect)
      : std::runtime_error("ambiguous classification between " + first +
                           " and " + second + " (defect " +
                           std::to_string(defect) + ")"),
        first_(std::move(first)),
        second_(std::move(second)),
        defect_(defect) {}

  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }
  double defect() const { return defect_; }

 private:
  std::string first_;
  std::string second_;
  double defect_;
};

double binomial(int n, int k);

}  // namespace symlu
