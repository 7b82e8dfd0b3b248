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
#include "io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace symlu::io {

namespace {

void write(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(k).dump();
        out += ':';
        write(v, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        write(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        break;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw DomainError(std::string("expected a number for ") + what);
  return j.get<double>();
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2)
    throw DomainError("complex numbers are written [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

int integer(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw DomainError(std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  write(j, out);
  return out;
}

Json complex_to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

Json matrix_to_json(const Mat2& m) {
  Json rows = Json::array();
  for (int r = 0; r < 2; ++r)
    rows.push_back(Json::array({complex_to_json(m(r, 0)), complex_to_json(m(r, 1))}));
  return rows;
}

Json local_to_json(const LocalUnitary& u) {
  Json f = Json::array();
  for (const auto& g : u.factors()) f.push_back(matrix_to_json(g.matrix()));
  return f;
}

Json vec3_to_json(const Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json state_to_json(const SymmetricPureState& psi) {
  Json c = Json::array();
  for (int k = 0; k <= psi.n(); ++k) c.push_back(complex_to_json(psi[k]));
  return Json{{"n", psi.n()}, {"basis", "dicke"}, {"coeffs", c}};
}

Json config_to_json(const MajoranaConfiguration& c) {
  Json pts = Json::array(), vecs = Json::array();
  for (const auto& cl : c.clusters()) {
    pts.push_back(Json::array({cl.point.theta(), cl.point.phi(), cl.multiplicity}));
    vecs.push_back(vec3_to_json(cl.point.vec()));
  }
  return Json{{"n", c.n()}, {"basis", "majorana"}, {"points", pts}, {"vectors", vecs}};
}

Json density_to_json(const DensityMatrix& rho) {
  Json rows = Json::array();
  const CMat& m = rho.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(row);
  }
  return Json{{"n", rho.n()}, {"matrix", rows}};
}

SymmetricPureState state_from_json(const Json& j, double cluster_tol) {
  if (!j.is_object()) throw DomainError("state JSON must be an object");
  const std::string basis = j.value("basis", "");
  if (basis == "dicke") {
    const int n = integer(j, "n");
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw DomainError("dicke state needs a \"coeffs\" array");
    const auto& c = j["coeffs"];
    if (static_cast<int>(c.size()) != n + 1)
      throw DomainError("dicke state with n = " + std::to_string(n) + " needs " +
                        std::to_string(n + 1) + " coefficients");
    CVec v(n + 1);
    for (int k = 0; k <= n; ++k) v(k) = complex_from_json(c[k]);
    return SymmetricPureState(n, v);
  }
  if (basis == "majorana" || (basis.empty() && (j.contains("points") || j.contains("vectors")))) {
    std::vector<MajoranaCluster> clusters;
    if (j.contains("points")) {
      for (const auto& p : j["points"]) {
        if (!p.is_array() || p.size() < 2 || p.size() > 3)
          throw DomainError("points are written [theta, phi] or [theta, phi, multiplicity]");
        int mult = p.size() == 3 ? p[2].get<int>() : 1;
        if (mult < 1) throw DomainError("point multiplicity must be positive");
        clusters.push_back({BlochPoint::from_angles(number(p[0], "theta"),
                                                    number(p[1], "phi")), mult});
      }
    } else {
      for (const auto& p : j["vectors"]) {
        if (!p.is_array() || p.size() != 3)
          throw DomainError("vectors are written [x, y, z]");
        clusters.push_back({BlochPoint(Vec3(number(p[0], "x"), number(p[1], "y"),
                                            number(p[2], "z"))), 1});
      }
    }
    if (clusters.empty()) throw DomainError("point list is empty");
    auto config = MajoranaConfiguration::from_clusters(std::move(clusters), cluster_tol);
    if (j.contains("n") && j["n"].get<int>() != config.n())
      throw DomainError("point multiplicities do not add up to n");
    return points_to_state(config);
  }
  if (!basis.empty()) throw DomainError("unknown basis \"" + basis + "\"");
  if (j.contains("state")) return state_from_json(j["state"], cluster_tol);
  if (j.contains("canonical") && j["canonical"].is_object())
    return state_from_json(j["canonical"], cluster_tol);
  throw DomainError("no state found in JSON input");
}

DensityMatrix density_from_json(const Json& j) {
  if (j.is_object() && j.contains("matrix")) {
    const int n = integer(j, "n");
    const auto& rows = j["matrix"];
    const std::size_t dim = std::size_t{1} << n;
    if (!rows.is_array() || rows.size() != dim)
      throw DomainError("density matrix for n = " + std::to_string(n) +
                        " needs " + std::to_string(dim) + " rows");
    CMat m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      if (!rows[r].is_array() || rows[r].size() != dim)
        throw DomainError("density matrix row " + std::to_string(r) + " has wrong length");
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = complex_from_json(rows[r][c]);
    }
    return DensityMatrix(n, std::move(m));
  }
  if (j.is_object() && j.contains("density")) return density_from_json(j["density"]);
  return to_density(state_from_json(j));
}

Json read_json(const std::string& path, std::istream& in) {
  try {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open " + path);
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw DomainError("invalid JSON in " + (path == "-" ? std::string("stdin") : path) +
                      ": " + e.what());
  }
}

}  // namespace symlu::io
