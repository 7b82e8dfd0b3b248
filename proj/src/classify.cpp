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
#include "symlu/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace symlu {

namespace {

double wrap_angle(double x) {
  x = std::remainder(x, 2 * kPi);
  return x;
}

// Z-rotation angle of a unitary that is diagonal up to phase.
double z_angle(const SingleQubitUnitary& d) {
  return std::arg(d(1, 1) / d(0, 0));
}

LocalUnitary with_x_layer(const LocalUnitary& u) {
  std::vector<SingleQubitUnitary> f;
  const auto x = SingleQubitUnitary::pauli_x();
  for (const auto& g : u.factors()) f.push_back(g * x);
  return LocalUnitary(std::move(f));
}

// Per-factor Z angles when every factor is diagonal, after stripping an
// X layer if `strip_x`.
std::optional<std::vector<double>> diagonal_angles(const LocalUnitary& u,
                                                   bool strip_x, double tol) {
  const LocalUnitary v = strip_x ? with_x_layer(u) : u;
  std::vector<double> t;
  for (const auto& g : v.factors()) {
    if (!g.is_diagonal(tol)) return std::nullopt;
    t.push_back(z_angle(g));
  }
  return t;
}

bool sums_to_zero(const std::vector<double>& t, double tol) {
  double s = std::accumulate(t.begin(), t.end(), 0.0);
  return std::abs(wrap_angle(s)) <= tol;
}

bool all_equal_mod(const std::vector<double>& t, double tol) {
  for (double x : t)
    if (std::abs(wrap_angle(x - t.front())) > tol) return false;
  return true;
}

void check_canonical(const SingleQubitUnitary& g, const SymmetricPureState& psi,
                     const SymmetricPureState& canonical) {
  double d = distance_up_to_phase(apply_diag_symmetric(g, psi), canonical);
  if (d > 1e-6)
    throw std::logic_error("classify_state: canonical transform check failed (" +
                           std::to_string(d) + ")");
}

// Prefer the cluster with larger multiplicity, then larger z, then
// lexicographically larger vector.
const MajoranaCluster& heavier(const MajoranaCluster& p,
                               const MajoranaCluster& q) {
  if (p.multiplicity != q.multiplicity)
    return p.multiplicity > q.multiplicity ? p : q;
  const Vec3& a = p.point.vec();
  const Vec3& b = q.point.vec();
  if (std::abs(a.z() - b.z()) > 1e-12) return a.z() > b.z() ? p : q;
  for (int i = 0; i < 3; ++i)
    if (a(i) != b(i)) return a(i) > b(i) ? p : q;
  return p;
}

}  // namespace

std::string label(StabilizerTag tag) {
  switch (tag) {
    case StabilizerTag::ProductU1n: return "i";
    case StabilizerTag::GhzBalanced: return "iia";
    case StabilizerTag::GhzGeneral: return "iib";
    case StabilizerTag::Singlet: return "iii";
    case StabilizerTag::DickeBalanced: return "iva";
    case StabilizerTag::DickeGeneral: return "ivb";
    case StabilizerTag::Finite: return "finite";
  }
  return "?";
}

std::string StabilizerClass::label() const {
  if (tag == StabilizerTag::Finite)
    return "finite:" + (group ? to_string(group->tag) : std::string("?"));
  return symlu::label(tag);
}

DensityMatrix ClassificationResult::canonical_density() const {
  if (cls.tag == StabilizerTag::Singlet) return singlet_density();
  return to_density(*canonical);
}

bool ClassificationResult::stabilizer_contains(const LocalUnitary& u,
                                               double tol) const {
  if (u.n() != cls.n)
    throw DomainError("stabilizer_contains: arity mismatch");
  LocalUnitary v = u;
  if (local_transform) {
    v = *local_transform * u * local_transform->adjoint();
  } else if (transform) {
    auto g = LocalUnitary::identical(*transform, cls.n);
    v = g * u * g.adjoint();
  }
  return StabilizerFamily(cls).contains(v, tol);
}

ClassificationResult classify_state(const SymmetricPureState& psi,
                                    const Tolerances& tol) {
  const int n = psi.n();
  const auto config = majorana_points(psi, tol.cluster);
  const auto& cl = config.clusters();
  ClassificationResult res;
  res.cls.n = n;

  auto finish = [&]() {
    res.generators = stabilizer_generators(res.cls);
    return res;
  };

  if (cl.size() == 1) {
    auto g = so3_to_su2(Rotation::aligning(cl[0].point.vec(), Vec3::UnitZ()));
    res.cls.tag = StabilizerTag::ProductU1n;
    res.canonical = dicke(n, 0);
    res.transform = g;
    check_canonical(g, psi, *res.canonical);
    return finish();
  }

  if (cl.size() == 2) {
    const double anti = (cl[0].point.vec() + cl[1].point.vec()).norm();
    if (anti <= tol.match) {
      const auto& big = heavier(cl[0], cl[1]);
      auto g = so3_to_su2(Rotation::aligning(big.point.vec(), Vec3::UnitZ()));
      if (n == 2) {
        res.cls.tag = StabilizerTag::Singlet;
        res.local_transform =
            LocalUnitary({g, SingleQubitUnitary::pauli_z() * g});
        check_canonical(g, psi, dicke(2, 1));
        return finish();
      }
      const int k = std::min(cl[0].multiplicity, cl[1].multiplicity);
      res.cls.tag = 2 * k == n ? StabilizerTag::DickeBalanced
                               : StabilizerTag::DickeGeneral;
      res.cls.k = k;
      res.canonical = dicke(n, k);
      res.transform = g;
      check_canonical(g, psi, *res.canonical);
      return finish();
    }
    if (anti <= 100 * tol.match)
      throw AmbiguousClassification(n == 2 ? "iii" : "iva/ivb",
                                    n == 2 ? "iib" : "finite", anti);
  }

  const bool simple = static_cast<int>(cl.size()) == n;
  double defect = 0;
  if (simple && n >= 2) {
    Vec3 axis;
    if (n == 2) {
      axis = (cl[0].point.vec() + cl[1].point.vec()).normalized();
    } else {
      Vec3 mean = Vec3::Zero();
      for (const auto& c : cl) mean += c.point.vec();
      mean /= n;
      Mat3 cov = Mat3::Zero();
      for (const auto& c : cl) {
        Vec3 d = c.point.vec() - mean;
        cov += d * d.transpose();
      }
      Eigen::SelfAdjointEigenSolver<Mat3> es(cov);
      axis = es.eigenvectors().col(0);
      if (axis.dot(mean) < 0) axis = -axis;
    }
    auto g = so3_to_su2(Rotation::aligning(axis, Vec3::UnitZ()));
    const auto phi = apply_diag_symmetric(g, psi);
    defect = phi.coeffs().segment(1, n - 1).norm();
    if (defect <= tol.equality) {
      cplx c0 = phi[0], cn = phi[n];
      if (std::abs(c0) < std::abs(cn)) {
        g = SingleQubitUnitary::pauli_x() * g;
        std::swap(c0, cn);
      }
      g = SingleQubitUnitary::phase((std::arg(c0) - std::arg(cn)) / n) * g;
      const double a = std::abs(c0), b = std::abs(cn);
      if (std::abs(a - b) <= tol.equality) {
        res.cls.tag = StabilizerTag::GhzBalanced;
        res.cls.t = 1.0;
        res.canonical = ghz(n);
      } else if (std::abs(a - b) <= 100 * tol.equality) {
        throw AmbiguousClassification("iia", "iib", std::abs(a - b));
      } else {
        const double t = 4.0 / kPi * std::atan2(b, a);
        res.cls.tag = StabilizerTag::GhzGeneral;
        res.cls.t = t;
        res.canonical = ghz(n, std::cos(kPi * t / 4), std::sin(kPi * t / 4));
      }
      res.transform = g;
      check_canonical(g, psi, *res.canonical);
      return finish();
    }
  }

  PointGroup group = symmetry_group(config, tol.match);
  if (simple && n >= 2 && defect <= 100 * tol.equality)
    throw AmbiguousClassification("iia/iib", "finite:" + to_string(group.tag),
                                  defect);
  res.cls.tag = StabilizerTag::Finite;
  res.cls.group = std::move(group);
  res.canonical = psi.phase_normalized();
  res.transform = SingleQubitUnitary();
  return finish();
}

ClassificationResult classify_density(const DensityMatrix& rho,
                                      const Tolerances& tol) {
  const int n = rho.n();
  Eigen::SelfAdjointEigenSolver<CMat> es(rho.matrix());
  const double top = es.eigenvalues()(es.eigenvalues().size() - 1);
  if (top < 1.0 - tol.equality)
    throw UnsupportedError(
        "classify_density: mixed states are not classified (largest "
        "eigenvalue " + std::to_string(top) + ")");
  const CVec v = es.eigenvectors().col(es.eigenvalues().size() - 1);
  const CVec c = project_symmetric(PureState(n, v));
  if (c.norm() >= 1.0 - tol.equality)
    return classify_state(SymmetricPureState(n, c), tol);
  if (n == 2) {
    const double s = std::abs(v(1) - v(2)) / std::sqrt(2.0);
    if (s >= 1.0 - tol.equality) {
      ClassificationResult res;
      res.cls.tag = StabilizerTag::Singlet;
      res.cls.n = 2;
      res.local_transform = LocalUnitary::identity(2);
      res.generators = stabilizer_generators(res.cls);
      return res;
    }
  }
  throw DomainError("classify_density: state is not permutation symmetric");
}

StabilizerFamily::StabilizerFamily(StabilizerClass cls) : cls_(std::move(cls)) {
  if (cls_.tag == StabilizerTag::Finite && !cls_.group)
    throw DomainError("StabilizerFamily: finite class without group data");
  if (cls_.tag == StabilizerTag::Singlet && cls_.n != 2)
    throw DomainError("StabilizerFamily: singlet class requires n = 2");
}

int StabilizerFamily::continuous_arity() const {
  switch (cls_.tag) {
    case StabilizerTag::ProductU1n: return cls_.n;
    case StabilizerTag::GhzBalanced:
    case StabilizerTag::GhzGeneral: return cls_.n - 1;
    case StabilizerTag::Singlet: return 3;
    case StabilizerTag::DickeBalanced:
    case StabilizerTag::DickeGeneral: return 1;
    case StabilizerTag::Finite: return 0;
  }
  return 0;
}

int StabilizerFamily::discrete_size() const {
  switch (cls_.tag) {
    case StabilizerTag::GhzBalanced:
    case StabilizerTag::DickeBalanced: return 2;
    case StabilizerTag::Finite:
      return static_cast<int>(cls_.group->elements.size());
    default: return 1;
  }
}

LocalUnitary StabilizerFamily::element(std::span<const double> params,
                                       int discrete) const {
  if (static_cast<int>(params.size()) != continuous_arity())
    throw DomainError("stabilizer element: expected " +
                      std::to_string(continuous_arity()) + " parameters, got " +
                      std::to_string(params.size()));
  if (discrete < 0 || discrete >= discrete_size())
    throw DomainError("stabilizer element: discrete index out of range");
  const int n = cls_.n;
  std::vector<SingleQubitUnitary> f;
  switch (cls_.tag) {
    case StabilizerTag::ProductU1n:
      for (double t : params) f.push_back(SingleQubitUnitary::rz(t));
      break;
    case StabilizerTag::GhzBalanced:
    case StabilizerTag::GhzGeneral: {
      double sum = 0;
      for (double t : params) {
        f.push_back(SingleQubitUnitary::rz(t));
        sum += t;
      }
      f.push_back(SingleQubitUnitary::rz(-sum));
      break;
    }
    case StabilizerTag::Singlet: {
      auto g = SingleQubitUnitary::euler_zyz(params[0], params[1], params[2]);
      f = {g, g};
      break;
    }
    case StabilizerTag::DickeBalanced:
    case StabilizerTag::DickeGeneral:
      f.assign(n, SingleQubitUnitary::rz(params[0]));
      break;
    case StabilizerTag::Finite:
      f.assign(n, so3_to_su2(cls_.group->elements[discrete]));
      break;
  }
  LocalUnitary u(std::move(f));
  if (discrete == 1 && (cls_.tag == StabilizerTag::GhzBalanced ||
                        cls_.tag == StabilizerTag::DickeBalanced))
    u = with_x_layer(u);
  return u;
}

LocalUnitary StabilizerFamily::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  std::vector<double> p(continuous_arity());
  for (auto& x : p) x = angle(rng);
  if (cls_.tag == StabilizerTag::Singlet) {
    // Haar measure in Euler coordinates: cos(beta) uniform.
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    p[1] = std::acos(u(rng));
  }
  std::uniform_int_distribution<int> d(0, discrete_size() - 1);
  return element(p, d(rng));
}

std::vector<LocalUnitary> StabilizerFamily::generators() const {
  const int n = cls_.n;
  std::vector<LocalUnitary> out;
  const int arity = continuous_arity();
  switch (cls_.tag) {
    case StabilizerTag::ProductU1n:
    case StabilizerTag::GhzBalanced:
    case StabilizerTag::GhzGeneral:
    case StabilizerTag::DickeBalanced:
    case StabilizerTag::DickeGeneral:
      for (int j = 0; j < arity; ++j) {
        std::vector<double> p(arity, 0.0);
        p[j] = 1.0;
        out.push_back(element(p));
      }
      break;
    case StabilizerTag::Singlet:
      for (const Vec3& ax : {Vec3::UnitX().eval(), Vec3::UnitY().eval(),
                             Vec3::UnitZ().eval()})
        out.push_back(
            LocalUnitary::identical(SingleQubitUnitary::rotation(ax, 1.0), 2));
      break;
    case StabilizerTag::Finite:
      for (const auto& r : cls_.group->generators)
        out.push_back(LocalUnitary::identical(so3_to_su2(r), n));
      break;
  }
  if (discrete_size() == 2) {
    std::vector<double> p(arity, 0.0);
    out.push_back(element(p, 1));
  }
  return out;
}

bool StabilizerFamily::contains(const LocalUnitary& u, double tol) const {
  if (u.n() != cls_.n) return false;
  switch (cls_.tag) {
    case StabilizerTag::ProductU1n:
      return diagonal_angles(u, false, tol).has_value();
    case StabilizerTag::GhzBalanced:
    case StabilizerTag::GhzGeneral: {
      for (bool strip : {false, true}) {
        if (strip && cls_.tag == StabilizerTag::GhzGeneral) break;
        auto t = diagonal_angles(u, strip, tol);
        if (t && sums_to_zero(*t, tol * cls_.n)) return true;
      }
      return false;
    }
    case StabilizerTag::Singlet:
      return u[0].projectively_equal(u[1], tol);
    case StabilizerTag::DickeBalanced:
    case StabilizerTag::DickeGeneral: {
      for (bool strip : {false, true}) {
        if (strip && cls_.tag == StabilizerTag::DickeGeneral) break;
        auto t = diagonal_angles(u, strip, tol);
        if (t && all_equal_mod(*t, tol)) return true;
      }
      return false;
    }
    case StabilizerTag::Finite: {
      for (int k = 1; k < u.n(); ++k)
        if (!u[k].projectively_equal(u[0], tol)) return false;
      const Rotation r = su2_to_so3(u[0]);
      for (const auto& e : cls_.group->elements)
        if (e.distance(r) <= tol) return true;
      return false;
    }
  }
  return false;
}

std::vector<LocalUnitary> stabilizer_generators(const StabilizerClass& cls) {
  return StabilizerFamily(cls).generators();
}

std::optional<SingleQubitUnitary> lu_equivalent_pure(
    const SymmetricPureState& a, const SymmetricPureState& b, double tol,
    double match_tol) {
  if (a.n() != b.n())
    throw DomainError("lu_equivalent_pure: states have different n");
  const auto ca = majorana_points(a, match_tol);
  const auto cb = majorana_points(b, match_tol);
  for (const auto& r : matching_rotations(ca, cb, match_tol)) {
    auto g = so3_to_su2(r);
    if (distance_up_to_phase(apply_diag_symmetric(g, a), b) <= tol) return g;
  }
  return std::nullopt;
}

ClassCensus class_census(int n) {
  if (n < 3) throw DomainError("class_census: requires n >= 3");
  ClassCensus c;
  c.n = n;
  c.entries.push_back({"i", "product state |0...0>, stabilizer U(1)^n", 0});
  c.entries.push_back(
      {"iia", "GHZ state, stabilizer U(1)^(n-1) x| Z2", 0});
  c.entries.push_back(
      {"iib", "a|0...0> + b|1...1>, a = cos(pi t/4), 0 < t < 1, stabilizer "
              "U(1)^(n-1)", 0});
  if (n % 2 == 0)
    c.entries.push_back(
        {"iva", "Dicke state D^(n/2), stabilizer U(1) x| Z2", n / 2});
  for (int k = 1; 2 * k < n; ++k) {
    c.ivb_k.push_back(k);
    c.entries.push_back(
        {"ivb", "Dicke state D^(" + std::to_string(k) + "), stabilizer U(1)", k});
  }
  c.stated_count = n / 2;
  c.stated_list_length = n / 2 - 1;
  const int canonical = static_cast<int>(c.ivb_k.size());
  c.discrepancy =
      c.stated_count != canonical || c.stated_list_length != canonical;
  return c;
}

}  // namespace symlu
