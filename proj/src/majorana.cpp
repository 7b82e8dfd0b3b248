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
#include "symlu/majorana.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace symlu {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kNewtonSteps = 5;

double zero_threshold(std::span<const cplx> a) {
  double s = 0;
  for (auto c : a) s += std::norm(c);
  return 1e-12 * std::sqrt(s);
}

cplx horner(std::span<const cplx> a, cplx z) {
  cplx acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

std::vector<cplx> derivative(std::span<const cplx> a) {
  std::vector<cplx> d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * double(i));
  return d;
}

std::vector<cplx> reversed(std::span<const cplx> a) {
  return {a.rbegin(), a.rend()};
}

// Newton iteration that only accepts steps reducing |p|.
cplx polish(std::span<const cplx> p, std::span<const cplx> dp, cplx z,
            int steps) {
  cplx fz = horner(p, z);
  for (int it = 0; it < steps && std::abs(fz) > 0; ++it) {
    cplx d = horner(dp, z);
    if (std::abs(d) == 0) break;
    cplx next = z - fz / d;
    cplx fn = horner(p, next);
    if (!(std::abs(fn) < std::abs(fz))) break;
    z = next;
    fz = fn;
  }
  return z;
}

// Coefficients of p(c + h) in powers of h.
std::vector<cplx> taylor_shift(std::span<const cplx> a, cplx c) {
  std::vector<cplx> q(a.begin(), a.end());
  const std::size_t d = q.size();
  for (std::size_t j = 0; j + 1 < d; ++j)
    for (std::size_t i = d - 1; i > j; --i) q[i - 1] += c * q[i];
  return q;
}

Vec3 sphere_of(cplx z, bool infinite) {
  if (infinite) return -Vec3::UnitZ();
  return BlochPoint::from_stereographic(z).vec();
}

struct Item {
  cplx z;
  bool infinite;
  Vec3 v;
};

class RootGrouper {
 public:
  RootGrouper(std::span<const cplx> coeffs, std::vector<Item> items,
              double cluster_tol)
      : a_(coeffs.begin(), coeffs.end()),
        rev_(reversed(coeffs)),
        items_(std::move(items)),
        tol_(cluster_tol) {}

  std::vector<RootCluster> run() {
    std::vector<int> all(items_.size());
    std::iota(all.begin(), all.end(), 0);
    if (!all.empty()) split(all);
    return std::move(out_);
  }

 private:
  // Largest minimum-spanning-tree edge of S and the partition it induces.
  double mst_split(const std::vector<int>& s, std::vector<int>& left,
                   std::vector<int>& right) const {
    const std::size_t m = s.size();
    std::vector<double> best(m, std::numeric_limits<double>::infinity());
    std::vector<int> parent(m, -1);
    std::vector<bool> in(m, false);
    best[0] = 0;
    std::vector<std::pair<int, int>> edges;
    double worst = -1;
    int worst_child = -1;
    for (std::size_t it = 0; it < m; ++it) {
      int u = -1;
      for (std::size_t i = 0; i < m; ++i)
        if (!in[i] && (u < 0 || best[i] < best[u])) u = static_cast<int>(i);
      in[u] = true;
      if (parent[u] >= 0 && best[u] > worst) {
        worst = best[u];
        worst_child = u;
      }
      for (std::size_t i = 0; i < m; ++i) {
        if (in[i]) continue;
        double d = (items_[s[u]].v - items_[s[i]].v).norm();
        if (d < best[i]) {
          best[i] = d;
          parent[i] = u;
        }
      }
    }
    if (worst_child < 0) return 0.0;
    // Components after cutting the edge (parent[worst_child], worst_child).
    std::vector<int> side(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      int x = static_cast<int>(i);
      while (x >= 0 && x != worst_child) x = parent[x];
      side[i] = (x == worst_child) ? 1 : 0;
    }
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < m; ++i) (side[i] ? right : left).push_back(s[i]);
    return worst;
  }

  double diameter(const std::vector<int>& s) const {
    double d = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j)
        d = std::max(d, (items_[s[i]].v - items_[s[j]].v).norm());
    return d;
  }

  // Centroid of the group in the chart where it lives (z for the northern
  // hemisphere, w = 1/z for the southern), refined as the simple root of the
  // (m-1)-th derivative.
  struct Chart {
    bool inverted;
    cplx u;
  };

  Chart centroid(const std::vector<int>& s) const {
    Vec3 mean = Vec3::Zero();
    for (int i : s) mean += items_[i].v;
    Chart c{mean.z() < 0, 0.0};
    for (int i : s) {
      const auto& it = items_[i];
      if (c.inverted)
        c.u += it.infinite ? cplx(0) : (it.z == cplx(0) ? cplx(1e300) : 1.0 / it.z);
      else
        c.u += it.z;
    }
    c.u /= double(s.size());
    const int m = static_cast<int>(s.size());
    if (m > 1) {
      std::vector<cplx> p = c.inverted ? rev_ : a_;
      for (int k = 0; k < m - 1 && p.size() > 1; ++k) p = derivative(p);
      if (p.size() > 1) {
        auto dp = derivative(p);
        cplx refined = polish(p, dp, c.u, 8);
        if (std::abs(refined - c.u) <= std::max(1e-3, 2 * diameter(s)))
          c.u = refined;
      }
    }
    return c;
  }

  bool consistent_multiple_root(const std::vector<int>& s,
                                const Chart& c) const {
    const int m = static_cast<int>(s.size());
    const auto& p = c.inverted ? rev_ : a_;
    const int d = static_cast<int>(p.size()) - 1;
    if (m > d) return false;
    auto q = taylor_shift(p, c.u);
    const double kappa = 100.0 * (d + 1);
    const double au = std::abs(c.u);
    auto noise = [&](int j) {
      double acc = 0;
      for (int i = j; i <= d; ++i)
        acc += std::abs(p[i]) * binomial(i, j) * std::pow(au, i - j);
      return kappa * kEps * acc;
    };
    if (std::abs(q[m]) <= noise(m)) return false;
    for (int j = 0; j < m; ++j) {
      double allowed =
          std::max(noise(j), std::abs(q[m]) * std::pow(tol_, m - j));
      if (std::abs(q[j]) > allowed) return false;
    }
    return true;
  }

  void emit(const std::vector<int>& s) {
    RootCluster rc;
    rc.multiplicity = static_cast<int>(s.size());
    bool has_inf = false, has_zero = false;
    for (int i : s) {
      has_inf |= items_[i].infinite;
      has_zero |= (!items_[i].infinite && items_[i].z == cplx(0));
    }
    if (has_inf) {
      rc.infinite = true;
      rc.value = 0;
    } else if (has_zero) {
      rc.value = 0;
    } else if (s.size() == 1) {
      rc.value = items_[s[0]].z;
    } else {
      Chart c = centroid(s);
      if (c.inverted) {
        if (c.u == cplx(0)) {
          rc.infinite = true;
          rc.value = 0;
        } else {
          rc.value = 1.0 / c.u;
        }
      } else {
        rc.value = c.u;
      }
    }
    out_.push_back(rc);
  }

  void split(const std::vector<int>& s) {
    if (s.size() == 1) {
      emit(s);
      return;
    }
    std::vector<int> left, right;
    double worst = mst_split(s, left, right);
    if (worst <= tol_) {
      emit(s);
      return;
    }
    const double m = static_cast<double>(s.size());
    const double radius = std::max(tol_, 100.0 * std::pow(kEps, 1.0 / m));
    if (diameter(s) <= radius) {
      bool exact_pole = false;
      for (int i : s)
        exact_pole |= items_[i].infinite || items_[i].z == cplx(0);
      if (!exact_pole && consistent_multiple_root(s, centroid(s))) {
        emit(s);
        return;
      }
    }
    split(left);
    split(right);
  }

  std::vector<cplx> a_;
  std::vector<cplx> rev_;
  std::vector<Item> items_;
  double tol_;
  std::vector<RootCluster> out_;
};

}  // namespace

BlochPoint::BlochPoint(const Vec3& v) {
  double len = v.norm();
  if (!(len > 0.0)) throw DomainError("Bloch point needs a nonzero vector");
  v_ = v / len;
}

BlochPoint BlochPoint::from_angles(double theta, double phi) {
  return BlochPoint(Vec3(std::sin(theta) * std::cos(phi),
                         std::sin(theta) * std::sin(phi), std::cos(theta)));
}

BlochPoint BlochPoint::from_stereographic(cplx z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return south();
  double r2 = std::norm(z);
  if (r2 > 1.0) {
    // Same formula in terms of w = 1/z to keep precision for large |z|.
    cplx w = 1.0 / z;
    double w2 = std::norm(w);
    cplx wc = std::conj(w);
    return BlochPoint(Vec3(2 * wc.real(), 2 * wc.imag(), w2 - 1.0) /
                      (1.0 + w2));
  }
  return BlochPoint(Vec3(2 * z.real(), 2 * z.imag(), 1.0 - r2) / (1.0 + r2));
}

BlochPoint BlochPoint::from_qubit(const Vec2& q) {
  double norm = q.norm();
  if (!(norm > 0.0)) throw DomainError("Bloch point of the zero vector");
  cplx a = q(0) / norm, b = q(1) / norm;
  cplx ab = std::conj(a) * b;
  return BlochPoint(
      Vec3(2 * ab.real(), 2 * ab.imag(), std::norm(a) - std::norm(b)));
}

double BlochPoint::theta() const {
  return std::atan2(std::hypot(v_.x(), v_.y()), v_.z());
}

double BlochPoint::phi() const {
  if (v_.x() == 0.0 && v_.y() == 0.0) return 0.0;
  double p = std::atan2(v_.y(), v_.x());
  if (p < 0) p += 2 * kPi;
  if (p >= 2 * kPi) p = 0.0;
  return p;
}

Vec2 BlochPoint::qubit() const {
  double rho = std::hypot(v_.x(), v_.y());
  double t = std::atan2(rho, v_.z());
  cplx ph = rho > 0 ? cplx(v_.x(), v_.y()) / rho : cplx(1.0);
  Vec2 q;
  if (rho == 0.0 && v_.z() < 0) {
    q << 0.0, 1.0;
  } else {
    q << std::cos(t / 2), ph * std::sin(t / 2);
  }
  return q;
}

namespace {

bool exact_pole(const Vec3& v) {
  return v.x() == 0.0 && v.y() == 0.0 && std::abs(v.z()) == 1.0;
}

std::vector<MajoranaCluster> single_linkage(
    const std::vector<MajoranaCluster>& in, double tol) {
  const std::size_t m = in.size();
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (in[i].point.chordal_distance(in[j].point) <= tol)
        root[find(static_cast<int>(i))] = find(static_cast<int>(j));

  std::vector<MajoranaCluster> out;
  std::vector<int> slot(m, -1);
  std::vector<Vec3> sums;
  std::vector<int> pole;
  for (std::size_t i = 0; i < m; ++i) {
    int r = find(static_cast<int>(i));
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back({in[i].point, 0});
      sums.push_back(Vec3::Zero());
      pole.push_back(-1);
    }
    int s = slot[r];
    out[s].multiplicity += in[i].multiplicity;
    sums[s] += in[i].multiplicity * in[i].point.vec();
    if (exact_pole(in[i].point.vec())) pole[s] = static_cast<int>(i);
  }
  for (std::size_t s = 0; s < out.size(); ++s) {
    if (pole[s] >= 0)
      out[s].point = in[pole[s]].point;
    else if (sums[s].norm() > 0)
      out[s].point = BlochPoint(sums[s]);
  }
  std::sort(out.begin(), out.end(),
            [](const MajoranaCluster& a, const MajoranaCluster& b) {
              // Latitudes equal to 1e-9 sort by longitude.
              double ta = std::round(a.point.theta() * 1e9);
              double tb = std::round(b.point.theta() * 1e9);
              if (ta != tb) return ta < tb;
              return a.point.phi() < b.point.phi();
            });
  return out;
}

}  // namespace

MajoranaConfiguration MajoranaConfiguration::from_points(
    std::span<const BlochPoint> points, double cluster_tol) {
  std::vector<MajoranaCluster> c;
  c.reserve(points.size());
  for (const auto& p : points) c.push_back({p, 1});
  return from_clusters(std::move(c), cluster_tol);
}

MajoranaConfiguration MajoranaConfiguration::from_clusters(
    std::vector<MajoranaCluster> clusters, double cluster_tol) {
  MajoranaConfiguration cfg;
  for (const auto& c : clusters) {
    if (c.multiplicity < 1) throw DomainError("cluster multiplicity must be >= 1");
    cfg.n_ += c.multiplicity;
  }
  if (cfg.n_ < 1) throw DomainError("configuration needs at least one point");
  cfg.clusters_ = single_linkage(clusters, cluster_tol);
  return cfg;
}

std::vector<BlochPoint> MajoranaConfiguration::points() const {
  std::vector<BlochPoint> out;
  out.reserve(n_);
  for (const auto& c : clusters_)
    for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.point);
  return out;
}

std::vector<Vec3> MajoranaConfiguration::vectors() const {
  std::vector<Vec3> out;
  out.reserve(n_);
  for (const auto& c : clusters_)
    for (int i = 0; i < c.multiplicity; ++i) out.push_back(c.point.vec());
  return out;
}

std::vector<cplx> find_roots(std::span<const cplx> coeffs) {
  const double thr = zero_threshold(coeffs);
  if (!(thr > 0)) throw DomainError("find_roots: zero polynomial");
  int hi = static_cast<int>(coeffs.size()) - 1;
  while (hi > 0 && std::abs(coeffs[hi]) <= thr) --hi;
  int lo = 0;
  while (lo < hi && std::abs(coeffs[lo]) <= thr) ++lo;

  std::vector<cplx> roots(lo, cplx(0));
  const int m = hi - lo;
  if (m == 0) return roots;

  std::span<const cplx> core = coeffs.subspan(lo, m + 1);
  // Companion matrix of the monic core polynomial.
  CMat comp = CMat::Zero(m, m);
  for (int i = 1; i < m; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < m; ++i) comp(i, m - 1) = -core[i] / core[m];
  Eigen::ComplexEigenSolver<CMat> es(comp, false);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("find_roots: eigenvalue iteration failed");

  const auto dcore = derivative(core);
  const auto rcore = reversed(core);
  const auto drcore = derivative(rcore);
  for (int i = 0; i < m; ++i) {
    cplx z = es.eigenvalues()(i);
    if (std::abs(z) <= 1.0) {
      z = polish(core, dcore, z, kNewtonSteps);
    } else {
      cplx w = polish(rcore, drcore, 1.0 / z, kNewtonSteps);
      z = (w == cplx(0)) ? z : 1.0 / w;
    }
    roots.push_back(z);
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const cplx> coeffs,
                                       std::span<const cplx> roots,
                                       int n_infinite, double cluster_tol) {
  std::vector<Item> items;
  for (int i = 0; i < n_infinite; ++i)
    items.push_back({0.0, true, sphere_of(0.0, true)});
  for (auto z : roots) items.push_back({z, false, sphere_of(z, false)});
  return RootGrouper(coeffs, std::move(items), cluster_tol).run();
}

std::vector<cplx> majorana_polynomial(const SymmetricPureState& psi) {
  const int n = psi.n();
  std::vector<cplx> a(n + 1);
  for (int k = 0; k <= n; ++k) {
    double sign = (k % 2) ? -1.0 : 1.0;
    a[n - k] = sign * std::sqrt(binomial(n, k)) * psi[k];
  }
  return a;
}

MajoranaConfiguration majorana_points(const SymmetricPureState& psi,
                                      double cluster_tol) {
  const auto a = majorana_polynomial(psi);
  const double thr = zero_threshold(a);
  if (!(thr > 0)) throw std::logic_error("majorana_points: zero polynomial");
  int n_inf = 0;
  for (int i = psi.n(); i > 0 && std::abs(a[i]) <= thr; --i) ++n_inf;

  const auto roots = find_roots(a);
  const auto groups = cluster_roots(a, roots, n_inf, cluster_tol);

  std::vector<MajoranaCluster> clusters;
  clusters.reserve(groups.size());
  for (const auto& g : groups) {
    BlochPoint p = g.infinite            ? BlochPoint::south()
                   : g.value == cplx(0) ? BlochPoint::north()
                                        : BlochPoint::from_stereographic(g.value);
    clusters.push_back({p, g.multiplicity});
  }
  return MajoranaConfiguration::from_clusters(std::move(clusters), cluster_tol);
}

SymmetricPureState points_to_state(const MajoranaConfiguration& config) {
  std::vector<Vec2> qubits;
  qubits.reserve(config.n());
  for (const auto& p : config.points()) qubits.push_back(p.qubit());
  return symmetrize(qubits);
}

MajoranaConfiguration mobius_apply(const SingleQubitUnitary& g,
                                   const MajoranaConfiguration& config,
                                   double cluster_tol) {
  std::vector<MajoranaCluster> moved;
  moved.reserve(config.clusters().size());
  for (const auto& c : config.clusters())
    moved.push_back(
        {BlochPoint::from_qubit(g.matrix() * c.point.qubit()), c.multiplicity});
  return MajoranaConfiguration::from_clusters(std::move(moved), cluster_tol);
}

}  // namespace symlu
