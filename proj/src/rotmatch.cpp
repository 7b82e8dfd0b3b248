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
#include "symlu/rotmatch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Geometry>
#include <Eigen/SVD>

namespace symlu {

namespace {

bool lex_less(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

Vec3 canonical_axis_sign(Vec3 v) {
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v(i)) > 1e-9) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  return v;
}

// Kuhn's augmenting-path matching on the bipartite graph of pairs within
// `tol`; fills assign[i] = matched index in b.
bool perfect_matching(std::span<const Vec3> a, std::span<const Vec3> b,
                      double tol, std::vector<int>& assign) {
  const std::size_t n = a.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((a[i] - b[j]).norm() <= tol) adj[i].push_back(static_cast<int>(j));
  std::vector<int> owner(n, -1);
  std::vector<char> seen;
  auto augment = [&](auto&& self, int u) -> bool {
    for (int v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (owner[v] < 0 || self(self, owner[v])) {
        owner[v] = u;
        return true;
      }
    }
    return false;
  };
  for (std::size_t u = 0; u < n; ++u) {
    seen.assign(n, 0);
    if (!augment(augment, static_cast<int>(u))) return false;
  }
  assign.assign(n, -1);
  for (std::size_t v = 0; v < n; ++v) assign[owner[v]] = static_cast<int>(v);
  return true;
}

// Greedy nearest neighbour first; exact matching when greedy fails.
bool assignment_within(std::span<const Vec3> a, std::span<const Vec3> b,
                       double tol, std::vector<int>& assign) {
  const std::size_t n = a.size();
  std::vector<char> used(n, 0);
  assign.assign(n, -1);
  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    int best = -1;
    double bd = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      double d = (a[i] - b[j]).norm();
      if (best < 0 || d < bd) {
        best = static_cast<int>(j);
        bd = d;
      }
    }
    if (best < 0 || bd > tol) {
      ok = false;
    } else {
      used[best] = 1;
      assign[i] = best;
    }
  }
  if (ok) return true;
  return perfect_matching(a, b, tol, assign);
}

Mat3 frame(const Vec3& a, const Vec3& b) {
  Vec3 e1 = a.normalized();
  Vec3 e2 = (b - e1.dot(b) * e1).normalized();
  Mat3 f;
  f.col(0) = e1;
  f.col(1) = e2;
  f.col(2) = e1.cross(e2);
  return f;
}

Mat3 kabsch(std::span<const Vec3> a, std::span<const Vec3> b,
            const std::vector<int>& assign) {
  Mat3 h = Mat3::Zero();
  for (std::size_t i = 0; i < a.size(); ++i) h += b[assign[i]] * a[i].transpose();
  Eigen::JacobiSVD<Mat3> svd(h, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 d = Mat3::Identity();
  d(2, 2) = (svd.matrixU() * svd.matrixV().transpose()).determinant() < 0 ? -1 : 1;
  return svd.matrixU() * d * svd.matrixV().transpose();
}

std::vector<Vec3> rotated(const Mat3& r, std::span<const Vec3> pts) {
  std::vector<Vec3> out;
  out.reserve(pts.size());
  for (const auto& p : pts) out.push_back(r * p);
  return out;
}

double max_pair_distance(std::span<const Vec3> a, std::span<const Vec3> b,
                         const std::vector<int>& assign) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    d = std::max(d, (a[i] - b[assign[i]]).norm());
  return d;
}

std::vector<int> multiplicity_signature(const MajoranaConfiguration& c) {
  std::vector<int> s;
  for (const auto& cl : c.clusters()) s.push_back(cl.multiplicity);
  std::sort(s.begin(), s.end());
  return s;
}

bool is_axial(const MajoranaConfiguration& c, double tol) {
  const auto& cl = c.clusters();
  if (cl.size() == 1) return true;
  if (cl.size() == 2)
    return (cl[0].point.vec() + cl[1].point.vec()).norm() <= tol;
  return false;
}

bool rotation_less(const Rotation& a, const Rotation& b) {
  double ta = a.angle(), tb = b.angle();
  if (std::abs(ta - tb) > 1e-9) return ta < tb;
  return lex_less(a.axis(), b.axis());
}

void dedupe_sorted(std::vector<Rotation>& rs) {
  std::vector<Rotation> out;
  for (const auto& r : rs) {
    bool dup = false;
    for (const auto& o : out)
      if (r.distance(o) <= 1e-6) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), rotation_less);
  rs = std::move(out);
}

}  // namespace

Rotation::Rotation(const Mat3& m, double tol) : m_(m) {
  double orth = (m.transpose() * m - Mat3::Identity()).norm();
  double det = m.determinant();
  if (!(orth <= tol) || !(std::abs(det - 1.0) <= tol))
    throw DomainError("matrix is not a proper rotation");
}

Rotation Rotation::axis_angle(const Vec3& axis, double angle) {
  return {Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix(),
          Unchecked{}};
}

Rotation Rotation::aligning(const Vec3& from, const Vec3& to) {
  Vec3 f = from.normalized(), t = to.normalized();
  Vec3 ax = f.cross(t);
  double s = ax.norm(), c = f.dot(t);
  if (s > 1e-12) return axis_angle(ax / s, std::atan2(s, c));
  if (c > 0) return {};
  Vec3 e = Vec3::UnitX() - f.x() * f;
  if (e.norm() < 1e-6) e = Vec3::UnitY() - f.y() * f;
  return axis_angle(e.normalized(), kPi);
}

double Rotation::angle() const {
  Eigen::Quaterniond q(m_);
  return 2.0 * std::atan2(q.vec().norm(), std::abs(q.w()));
}

Vec3 Rotation::axis() const {
  Eigen::Quaterniond q(m_);
  double s = q.vec().norm();
  if (s < 1e-15) return Vec3::UnitZ();
  Vec3 v = q.vec() / s;
  if (q.w() < 0) v = -v;
  if (std::abs(q.w()) < 1e-9) v = canonical_axis_sign(v);
  return v;
}

Rotation su2_to_so3(const SingleQubitUnitary& g) {
  static const Mat2 sigma[3] = {
      (Mat2() << 0, 1, 1, 0).finished(),
      (Mat2() << 0, -kI, kI, 0).finished(),
      (Mat2() << 1, 0, 0, -1).finished(),
  };
  const Mat2& u = g.matrix();
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      r(i, j) = 0.5 * (sigma[i] * u * sigma[j] * u.adjoint()).trace().real();
  return Rotation(r, 1e-10);
}

SingleQubitUnitary so3_to_su2(const Rotation& r) {
  Eigen::Quaterniond q(r.matrix());
  q.normalize();
  if (q.w() < 0) q.coeffs() = -q.coeffs();
  Mat2 u;
  u(0, 0) = cplx(q.w(), -q.z());
  u(0, 1) = cplx(-q.y(), -q.x());
  u(1, 0) = cplx(q.y(), -q.x());
  u(1, 1) = cplx(q.w(), q.z());
  SingleQubitUnitary g(u, 1e-10);
  if (std::abs(q.w()) <= 1e-12) return g.phase_normalized();
  return g;
}

MajoranaConfiguration rotate(const Rotation& r, const MajoranaConfiguration& c,
                             double cluster_tol) {
  std::vector<MajoranaCluster> moved;
  for (const auto& cl : c.clusters())
    moved.push_back({BlochPoint(r * cl.point.vec()), cl.multiplicity});
  return MajoranaConfiguration::from_clusters(std::move(moved), cluster_tol);
}

double matching_distance(std::span<const Vec3> a, std::span<const Vec3> b) {
  if (a.size() != b.size())
    throw DomainError("matching_distance: point counts differ");
  if (a.empty()) return 0.0;
  std::vector<double> cands;
  double lower = 0;
  for (const auto& p : a) {
    double best = 1e300;
    for (const auto& q : b) {
      double d = (p - q).norm();
      cands.push_back(d);
      best = std::min(best, d);
    }
    lower = std::max(lower, best);
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  auto lo = std::lower_bound(cands.begin(), cands.end(), lower);
  std::size_t l = lo - cands.begin(), h = cands.size() - 1;
  std::vector<int> assign;
  while (l < h) {
    std::size_t mid = (l + h) / 2;
    if (perfect_matching(a, b, cands[mid], assign))
      h = mid;
    else
      l = mid + 1;
  }
  return cands[l];
}

std::vector<Rotation> matching_rotations(const MajoranaConfiguration& a,
                                         const MajoranaConfiguration& b,
                                         double tol) {
  if (a.n() != b.n())
    throw DomainError("match_rotation: configurations have different n");
  std::vector<Rotation> found;
  if (multiplicity_signature(a) != multiplicity_signature(b)) return found;

  const auto pa = a.vectors();
  const auto pb = b.vectors();
  std::vector<int> assign;
  auto accept = [&](const Rotation& r) {
    auto ra = rotated(r.matrix(), pa);
    if (assignment_within(ra, pb, tol, assign)) found.push_back(r);
  };

  const auto& ca = a.clusters();
  const auto& cb = b.clusters();
  if (is_axial(a, tol)) {
    if (!is_axial(b, tol)) return found;
    if (ca.size() == 1) {
      accept(Rotation::aligning(ca[0].point.vec(), cb[0].point.vec()));
    } else {
      for (const auto& x : cb)
        if (x.multiplicity == ca[0].multiplicity)
          accept(Rotation::aligning(ca[0].point.vec(), x.point.vec()));
    }
    dedupe_sorted(found);
    return found;
  }

  // Anchor a1: smallest multiplicity, ties lexicographic.
  int i1 = 0;
  for (std::size_t i = 1; i < ca.size(); ++i) {
    const auto& c = ca[i];
    if (c.multiplicity < ca[i1].multiplicity ||
        (c.multiplicity == ca[i1].multiplicity &&
         lex_less(c.point.vec(), ca[i1].point.vec())))
      i1 = static_cast<int>(i);
  }
  const Vec3 a1 = ca[i1].point.vec();
  // Second anchor: closest to perpendicular among non-collinear clusters.
  int i2 = -1;
  double best = 2;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (static_cast<int>(i) == i1) continue;
    double d = std::abs(a1.dot(ca[i].point.vec()));
    if (d > 1 - 1e-9) continue;
    if (i2 < 0 || d < best - 1e-12 ||
        (std::abs(d - best) <= 1e-12 &&
         lex_less(ca[i].point.vec(), ca[i2].point.vec()))) {
      i2 = static_cast<int>(i);
      best = std::min(best, d);
    }
  }
  const Vec3 a2 = ca[i2].point.vec();
  const double dot12 = a1.dot(a2);
  const Mat3 fa = frame(a1, a2);

  for (const auto& b1 : cb) {
    if (b1.multiplicity != ca[i1].multiplicity) continue;
    for (const auto& b2 : cb) {
      if (&b2 == &b1 || b2.multiplicity != ca[i2].multiplicity) continue;
      const Vec3 v1 = b1.point.vec(), v2 = b2.point.vec();
      if (std::abs(v1.dot(v2) - dot12) > 4 * tol + 1e-12) continue;
      if (std::abs(v1.dot(v2)) > 1 - 1e-12) continue;
      Mat3 r = frame(v1, v2) * fa.transpose();
      auto ra = rotated(r, pa);
      if (!assignment_within(ra, pb, tol, assign)) continue;
      // Least-squares refinement over the full matched multiset.
      Mat3 refined = kabsch(pa, pb, assign);
      auto rr = rotated(refined, pa);
      if (max_pair_distance(rr, pb, assign) <= max_pair_distance(ra, pb, assign))
        r = refined;
      found.emplace_back(r, 1e-9);
    }
  }
  dedupe_sorted(found);
  return found;
}

std::optional<Rotation> match_rotation(const MajoranaConfiguration& a,
                                       const MajoranaConfiguration& b,
                                       double tol) {
  auto all = matching_rotations(a, b, tol);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::string to_string(GroupTag tag) {
  switch (tag) {
    case GroupTag::Trivial: return "Trivial";
    case GroupTag::Cyclic: return "Cyclic";
    case GroupTag::Dihedral: return "Dihedral";
    case GroupTag::Tetrahedral: return "Tetrahedral";
    case GroupTag::Octahedral: return "Octahedral";
    case GroupTag::Icosahedral: return "Icosahedral";
    case GroupTag::AxialContinuous: return "AxialContinuous";
    case GroupTag::AxialContinuousFlip: return "AxialContinuousFlip";
  }
  return "?";
}

namespace {

struct AxisLine {
  Vec3 axis;
  int fold = 1;
};

const Rotation* first_with_angle(const std::vector<Rotation>& rs, double angle,
                                 const Vec3* perpendicular_to = nullptr) {
  for (const auto& r : rs) {
    if (std::abs(r.angle() - angle) > 1e-6) continue;
    if (perpendicular_to && std::abs(r.axis().dot(*perpendicular_to)) > 1e-6)
      continue;
    return &r;
  }
  return nullptr;
}

}  // namespace

PointGroup symmetry_group(const MajoranaConfiguration& a, double tol) {
  PointGroup g;
  const auto& cl = a.clusters();
  if (is_axial(a, tol)) {
    g.order = 0;
    if (cl.size() == 1) {
      g.tag = GroupTag::AxialContinuous;
      g.axis = cl[0].point.vec();
    } else if (cl[0].multiplicity != cl[1].multiplicity) {
      g.tag = GroupTag::AxialContinuous;
      g.axis = (cl[0].multiplicity > cl[1].multiplicity ? cl[0] : cl[1])
                   .point.vec();
    } else {
      g.tag = GroupTag::AxialContinuousFlip;
      Vec3 p = cl[0].point.vec(), q = cl[1].point.vec();
      bool take_p = std::abs(p.z() - q.z()) > 1e-12 ? p.z() > q.z()
                                                     : lex_less(q, p);
      g.axis = take_p ? p : q;
    }
    return g;
  }

  g.elements = matching_rotations(a, a, tol);
  const int order = static_cast<int>(g.elements.size());
  g.order = order;

  std::vector<AxisLine> lines;
  for (const auto& r : g.elements) {
    if (r.angle() < 1e-6) continue;
    Vec3 ax = canonical_axis_sign(r.axis());
    bool placed = false;
    for (auto& l : lines)
      if (std::abs(l.axis.dot(ax)) > 1 - 1e-6) {
        ++l.fold;
        placed = true;
        break;
      }
    if (!placed) lines.push_back({ax, 2});
  }
  auto count_fold = [&](int f) {
    return std::count_if(lines.begin(), lines.end(),
                         [f](const AxisLine& l) { return l.fold == f; });
  };

  if (order == 1) {
    g.tag = GroupTag::Trivial;
    return g;
  }
  if (lines.size() == 1) {
    g.tag = GroupTag::Cyclic;
    g.m = order;
    g.axis = lines[0].axis;
    g.generators.push_back(Rotation::axis_angle(g.axis, 2 * kPi / order));
    return g;
  }
  if (order == 12 && count_fold(3) == 4) {
    g.tag = GroupTag::Tetrahedral;
    g.generators = {*first_with_angle(g.elements, 2 * kPi / 3),
                    *first_with_angle(g.elements, kPi)};
    return g;
  }
  if (order == 24 && count_fold(4) == 3) {
    g.tag = GroupTag::Octahedral;
    g.generators = {*first_with_angle(g.elements, kPi / 2),
                    *first_with_angle(g.elements, 2 * kPi / 3)};
    return g;
  }
  if (order == 60 && count_fold(5) == 6) {
    g.tag = GroupTag::Icosahedral;
    g.generators = {*first_with_angle(g.elements, 2 * kPi / 5),
                    *first_with_angle(g.elements, 2 * kPi / 3)};
    return g;
  }
  if (order % 2 == 0) {
    const int m = order / 2;
    const AxisLine* principal = nullptr;
    if (m > 2) {
      for (const auto& l : lines)
        if (l.fold == m) principal = &l;
    } else if (count_fold(2) == 3) {
      for (const auto& l : lines)
        if (!principal || std::abs(l.axis.z()) > std::abs(principal->axis.z()) + 1e-9)
          principal = &l;
    }
    if (principal &&
        static_cast<int>(lines.size()) == m + 1) {
      g.tag = GroupTag::Dihedral;
      g.m = m;
      g.axis = principal->axis;
      g.generators.push_back(Rotation::axis_angle(g.axis, 2 * kPi / m));
      const Rotation* flip = first_with_angle(g.elements, kPi, &g.axis);
      if (flip) g.generators.push_back(*flip);
      if (flip) return g;
    }
  }
  throw std::logic_error("symmetry_group: unrecognized rotation group of order " +
                         std::to_string(order));
}

std::vector<Rotation> group_closure(std::span<const Rotation> generators,
                                    double tol, std::size_t cap) {
  std::vector<Rotation> elems{Rotation()};
  for (std::size_t head = 0; head < elems.size() && elems.size() < cap; ++head) {
    for (const auto& gen : generators) {
      Rotation p = gen * elems[head];
      bool known = false;
      for (const auto& e : elems)
        if (e.distance(p) <= tol) {
          known = true;
          break;
        }
      if (!known) elems.push_back(p);
      if (elems.size() >= cap) break;
    }
  }
  return elems;
}

double snap_angle(double angle) {
  for (int q = 1; q <= 60; ++q) {
    double p = std::round(angle * q / kPi);
    if (std::abs(angle - p * kPi / q) <= 1e-9) return p * kPi / q;
  }
  return angle;
}

}  // namespace symlu
