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
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "symlu/classify.hpp"
#include "symlu/mixed.hpp"
#include "symlu/verify.hpp"

namespace py = pybind11;
using namespace symlu;

namespace {

// States cross the boundary as Dicke-basis coefficient vectors.
SymmetricPureState from_coeffs(const CVec& c) {
  if (c.size() < 2) throw DomainError("need at least two Dicke coefficients");
  return SymmetricPureState(static_cast<int>(c.size()) - 1, c);
}

DensityMatrix from_matrix(const CMat& m) {
  const auto dim = m.rows();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || m.cols() != dim)
    throw DomainError("density matrix must be square with dimension 2^n");
  return DensityMatrix(n, m);
}

py::dict group_dict(const PointGroup& g) {
  py::dict d;
  d["group"] = to_string(g.tag);
  d["m"] = g.m;
  d["order"] = g.order;
  d["axis"] = Vec3(g.axis);
  py::list gens;
  for (const auto& r : g.generators) gens.append(Mat3(r.matrix()));
  d["generators"] = gens;
  return d;
}

py::list factors(const LocalUnitary& u) {
  py::list out;
  for (const auto& g : u.factors()) out.append(Mat2(g.matrix()));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Local unitary classification of symmetric multiqubit states";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedError>(m, "UnsupportedError",
                                           PyExc_NotImplementedError);
  py::register_exception<AmbiguousClassification>(m, "AmbiguousClassification",
                                                  PyExc_RuntimeError);

  m.def("dicke", [](int n, int k) { return CVec(dicke(n, k).coeffs()); },
        py::arg("n"), py::arg("k"), "Dicke-basis coefficients of D_n^(k).");
  m.def(
      "ghz",
      [](int n, cplx a, cplx b) { return CVec(ghz(n, a, b).coeffs()); },
      py::arg("n"), py::arg("a") = cplx(1 / std::sqrt(2.0)),
      py::arg("b") = cplx(1 / std::sqrt(2.0)),
      "Dicke-basis coefficients of a|0...0> + b|1...1>.");
  m.def(
      "random_state",
      [](int n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return CVec(SymmetricPureState::random(n, rng).coeffs());
      },
      py::arg("n"), py::arg("seed") = 20260516);

  m.def(
      "majorana_points",
      [](const CVec& c, double cluster_tol) {
        auto config = majorana_points(from_coeffs(c), cluster_tol);
        py::list out;
        for (const auto& cl : config.clusters())
          out.append(py::make_tuple(cl.point.theta(), cl.point.phi(),
                                    cl.multiplicity));
        return out;
      },
      py::arg("coeffs"), py::arg("cluster_tol") = 1e-6,
      "List of (theta, phi, multiplicity) Majorana points.");
  m.def(
      "points_to_state",
      [](const std::vector<Vec3>& vectors) {
        std::vector<BlochPoint> pts;
        for (const auto& v : vectors) pts.emplace_back(v);
        return CVec(points_to_state(MajoranaConfiguration::from_points(pts)).coeffs());
      },
      py::arg("vectors"), "Symmetric state whose Majorana points are `vectors`.");
  m.def(
      "symmetry_group",
      [](const std::vector<Vec3>& vectors, double tol) {
        std::vector<BlochPoint> pts;
        for (const auto& v : vectors) pts.emplace_back(v);
        return group_dict(symmetry_group(MajoranaConfiguration::from_points(pts), tol));
      },
      py::arg("vectors"), py::arg("tol") = 1e-6);

  m.def(
      "su2_to_so3",
      [](const Mat2& g) { return Mat3(su2_to_so3(SingleQubitUnitary(g, 1e-10)).matrix()); },
      py::arg("g"));
  m.def(
      "so3_to_su2",
      [](const Mat3& r) { return Mat2(so3_to_su2(Rotation(r, 1e-10)).matrix()); },
      py::arg("r"));

  m.def(
      "classify_state",
      [](const CVec& c, double tol) {
        Tolerances t;
        t.equality = tol;
        auto res = classify_state(from_coeffs(c), t);
        py::dict d;
        d["class"] = res.cls.label();
        d["n"] = res.cls.n;
        d["t"] = res.cls.t;
        d["k"] = res.cls.k;
        d["group"] = res.cls.group ? py::object(group_dict(*res.cls.group))
                                   : py::object(py::none());
        d["canonical"] = res.canonical ? py::cast(CVec(res.canonical->coeffs()))
                                       : py::object(py::none());
        d["g"] = res.transform ? py::cast(Mat2(res.transform->matrix()))
                               : py::object(py::none());
        py::list gens;
        for (const auto& g : res.generators) gens.append(factors(g));
        d["generators"] = gens;
        return d;
      },
      py::arg("coeffs"), py::arg("tol") = 1e-8);

  m.def(
      "lu_equivalent_pure",
      [](const CVec& a, const CVec& b, double tol) -> py::object {
        auto g = lu_equivalent_pure(from_coeffs(a), from_coeffs(b), tol);
        if (!g) return py::none();
        return py::cast(Mat2(g->matrix()));
      },
      py::arg("a"), py::arg("b"), py::arg("tol") = 1e-8,
      "g with g^(x)n a = b up to phase, or None.");

  m.def(
      "lu_equivalent_mixed",
      [](const CMat& a, const CMat& b, int grid, int restarts,
         std::optional<double> threshold, std::uint64_t seed) {
        EquivalenceSearchConfig cfg;
        cfg.grid_alpha = cfg.grid_beta = cfg.grid_gamma = grid;
        cfg.restarts = restarts;
        cfg.threshold = threshold;
        cfg.seed = seed;
        auto r = lu_equivalent_mixed(from_matrix(a), from_matrix(b), cfg);
        py::dict d;
        d["verdict"] = to_string(r.verdict);
        d["distance"] = r.distance;
        d["threshold"] = r.threshold;
        d["reason"] = r.reason;
        d["g"] = r.g ? py::cast(Mat2(r.g->matrix())) : py::object(py::none());
        return d;
      },
      py::arg("a"), py::arg("b"), py::arg("grid") = 12, py::arg("restarts") = 8,
      py::arg("threshold") = py::none(), py::arg("seed") = 20260516);

  m.def(
      "canonical_ghz_form",
      [](const CMat& tau, double tol) {
        auto r = canonical_ghz_form(from_matrix(tau), tol);
        py::dict d;
        d["a"] = r.form.a;
        d["b"] = r.form.b;
        d["I"] = r.form.I.str();
        py::list steps;
        for (const auto& s : r.steps) steps.append(s.name);
        d["steps"] = steps;
        d["total"] = factors(r.total);
        return d;
      },
      py::arg("tau"), py::arg("tol") = 1e-10);

  m.def(
      "check_stabilizes",
      [](const std::vector<Mat2>& fs, const CMat& rho, double tol) {
        std::vector<SingleQubitUnitary> us;
        for (const auto& f : fs) us.emplace_back(f, 1e-10);
        auto w = check_stabilizes(LocalUnitary(std::move(us)), from_matrix(rho), tol);
        return py::make_tuple(w.residual, w.accepted);
      },
      py::arg("factors"), py::arg("rho"), py::arg("tol") = 1e-9,
      "(residual, accepted) for the tuple of single-qubit factors.");

  m.def(
      "class_census",
      [](int n) {
        auto c = class_census(n);
        py::dict d;
        py::list labels;
        for (const auto& e : c.entries) labels.append(e.label);
        d["labels"] = labels;
        d["ivb_k"] = c.ivb_k;
        d["stated_count"] = c.stated_count;
        d["stated_list_length"] = c.stated_list_length;
        d["discrepancy"] = c.discrepancy;
        return d;
      },
      py::arg("n"));
}
