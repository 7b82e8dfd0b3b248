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

#include <istream>
#include <string>

#include <json.hpp>

#include "symlu/majorana.hpp"
#include "symlu/qubit.hpp"
#include "symlu/rotmatch.hpp"
#include "symlu/states.hpp"

namespace symlu::io {

using Json = nlohmann::ordered_json;

/// Compact JSON with every floating-point number at 17 significant digits.
std::string dump(const Json& j);

Json complex_to_json(cplx z);
Json matrix_to_json(const Mat2& m);
Json local_to_json(const LocalUnitary& u);
Json vec3_to_json(const Vec3& v);

/// {"n": n, "basis": "dicke", "coeffs": [[re, im], ...]}
Json state_to_json(const SymmetricPureState& psi);
/// {"n": n, "basis": "majorana", "points": [[theta, phi, multiplicity], ...],
///  "vectors": [[x, y, z], ...]}
Json config_to_json(const MajoranaConfiguration& c);
/// {"n": n, "matrix": [[[re, im], ...], ...]}
Json density_to_json(const DensityMatrix& rho);

/// Accepts Dicke-basis and Majorana-point states, bare point lists
/// ({"points": ...} or {"vectors": ...}), and any report carrying a state
/// under "state" or "canonical". Throws DomainError on malformed input.
SymmetricPureState state_from_json(const Json& j,
                                   double cluster_tol = 1e-6);
/// Density matrices, or any state accepted by state_from_json.
DensityMatrix density_from_json(const Json& j);

/// Parses `path`, with "-" meaning `in`.
Json read_json(const std::string& path, std::istream& in);

}  // namespace symlu::io
