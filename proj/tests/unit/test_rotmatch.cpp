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
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "symlu/rotmatch.hpp"

using namespace symlu;

namespace {

MajoranaConfiguration config(const std::vector<Vec3>& vs) {
  std::vector<BlochPoint> pts;
  for (const auto& v : vs) pts.emplace_back(v);
  return MajoranaConfiguration::from_points(pts);
}

std::vector<Vec3> rotated(const Mat3& r, std::vector<Vec3> vs) {
  for (auto& v : vs) v = r * v;
  return vs;
}

double brute_bottleneck(const std::vector<Vec3>& a, const std::vector<Vec3>& b) {
  std::vector<int> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  double best = 1e300;
  do {
    double worst = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      worst = std::max(worst, (a[i] - b[p[i]]).norm());
    best = std::min(best, worst);
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

// Every closure element must map the (distinct) points onto themselves.
void check_preserves(const PointGroup& g, const std::vector<Vec3>& vs) {
  for (const auto& r : g.elements)
    for (const auto& v : vs) {
      double best = 1e300;
      for (const auto& w : vs) best = std::min(best, (r * v - w).norm());
      CHECK(best < 1e-8);
    }
}

}  // namespace

TEST_CASE("rotations are validated and expose axis and angle") {
  Mat3 m = Mat3::Identity();
  m(0, 0) = -1;
  CHECK_THROWS_AS(Rotation{m}, DomainError);
  CHECK_THROWS_AS(Rotation(2.0 * Mat3::Identity()), DomainError);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ang(0.01, kPi - 0.01);
  for (int i = 0; i < 50; ++i) {
    const Vec3 axis = oracle::random_unit(rng);
    const double a = ang(rng);
    auto r = Rotation::axis_angle(axis, a);
    CHECK((r.matrix() - oracle::rotation_matrix(axis, a)).norm() < 1e-13);
    CHECK(std::abs(r.angle() - a) < 1e-10);
    CHECK((r.axis() - axis).norm() < 1e-9);
  }
  auto half = Rotation::axis_angle(Vec3(0, -1, 0), kPi);
  CHECK(std::abs(half.angle() - kPi) < 1e-12);
  CHECK((half.axis() - Vec3::UnitY()).norm() < 1e-12);
  CHECK((Rotation().axis() - Vec3::UnitZ()).norm() == 0.0);
}

TEST_CASE("aligning rotations carry one direction onto another") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 50; ++i) {
    const Vec3 a = oracle::random_unit(rng), b = oracle::random_unit(rng);
    CHECK((Rotation::aligning(a, b) * a - b).norm() < 1e-12);
    CHECK((Rotation::aligning(a, -a) * a + a).norm() < 1e-12);
  }
  CHECK(Rotation::aligning(Vec3::UnitZ(), Vec3::UnitZ()).angle() < 1e-15);
}

TEST_CASE("su2_to_so3 matches the action on Bloch vectors") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 100; ++i) {
    const Mat2 g = oracle::random_unitary(rng);
    const Mat3 want = oracle::so3_from_action(g);
    CHECK((su2_to_so3(SingleQubitUnitary(g)).matrix() - want).norm() < 1e-12);
    // Double cover: g and -g, and any phase multiple, give the same rotation.
    CHECK((su2_to_so3(SingleQubitUnitary(Mat2(-g))).matrix() - want).norm() < 1e-12);
    CHECK((su2_to_so3(SingleQubitUnitary(Mat2(std::polar(1.0, 0.9) * g))).matrix() - want)
              .norm() < 1e-12);
  }
  auto r = su2_to_so3(SingleQubitUnitary::rotation(Vec3::UnitX(), 0.7));
  CHECK((r.matrix() - oracle::rotation_matrix(Vec3::UnitX(), 0.7)).norm() < 1e-13);
}

TEST_CASE("so3_to_su2 inverts su2_to_so3 projectively") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    Rotation r(oracle::random_rotation(rng));
    auto g = so3_to_su2(r);
    CHECK((su2_to_so3(g).matrix() - r.matrix()).norm() < 1e-12);
    CHECK(g.matrix().trace().real() >= -1e-15);
    SingleQubitUnitary h(oracle::random_unitary(rng));
    CHECK(so3_to_su2(su2_to_so3(h)).projectively_equal(h, 1e-10));
  }
  auto x = so3_to_su2(Rotation::axis_angle(Vec3::UnitX(), kPi));
  CHECK(x.projectively_equal(SingleQubitUnitary::pauli_x()));
}

TEST_CASE("matching_distance is the exact bottleneck distance") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 6;
    std::vector<Vec3> a, b;
    for (int i = 0; i < n; ++i) {
      a.push_back(oracle::random_unit(rng));
      b.push_back(oracle::random_unit(rng));
    }
    CHECK(std::abs(matching_distance(a, b) - brute_bottleneck(a, b)) < 1e-14);
  }
  std::vector<Vec3> one{Vec3::UnitX()}, two{Vec3::UnitX(), Vec3::UnitY()};
  CHECK_THROWS_AS(matching_distance(one, two), DomainError);
}

TEST_CASE("matching_rotations recovers the rotation relating two configurations") {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 5;
    std::vector<Vec3> vs;
    for (int i = 0; i < n; ++i) vs.push_back(oracle::random_unit(rng));
    const Mat3 r = oracle::random_rotation(rng);
    auto found = matching_rotations(config(vs), config(rotated(r, vs)));
    // Generic configurations have trivial symmetry, so the match is unique.
    REQUIRE(found.size() == 1);
    CHECK((found[0].matrix() - r).norm() < 1e-8);
  }
}

TEST_CASE("matching_rotations reports every symmetric alignment") {
  const auto t = oracle::tetrahedron();
  const Mat3 r = oracle::rotation_matrix(Vec3(1, 2, 3).normalized(), 0.4);
  auto found = matching_rotations(config(t), config(rotated(r, t)));
  CHECK(found.size() == 12);
  for (std::size_t i = 1; i < found.size(); ++i)
    CHECK(found[i - 1].angle() <= found[i].angle() + 1e-12);
  for (const auto& f : found)
    CHECK(brute_bottleneck(rotated(f.matrix(), t), rotated(r, t)) < 1e-8);
}

TEST_CASE("configurations that cannot be matched return nothing") {
  std::mt19937_64 rng(37);
  std::vector<Vec3> a, b;
  for (int i = 0; i < 5; ++i) {
    a.push_back(oracle::random_unit(rng));
    b.push_back(oracle::random_unit(rng));
  }
  CHECK(matching_rotations(config(a), config(b)).empty());
  CHECK_FALSE(match_rotation(config(a), config(b)).has_value());
  std::vector<Vec3> three{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()};
  CHECK_THROWS_AS(matching_rotations(config(a), config(three)), DomainError);
}

TEST_CASE("axial configurations match by aligning the axis") {
  std::vector<Vec3> a{Vec3::UnitZ(), Vec3::UnitZ(), -Vec3::UnitZ()};
  const Mat3 r = oracle::rotation_matrix(Vec3(1, 1, 0).normalized(), 1.1);
  auto found = match_rotation(config(a), config(rotated(r, a)));
  REQUIRE(found.has_value());
  CHECK(brute_bottleneck(rotated(found->matrix(), a), rotated(r, a)) < 1e-10);
}

TEST_CASE("regular polyhedra have the expected rotation groups") {
  struct Case {
    std::vector<Vec3> points;
    GroupTag tag;
    int order;
  };
  const Case cases[] = {
      {oracle::tetrahedron(), GroupTag::Tetrahedral, 12},
      {oracle::octahedron(), GroupTag::Octahedral, 24},
      {oracle::cube(), GroupTag::Octahedral, 24},
      {oracle::icosahedron(), GroupTag::Icosahedral, 60},
  };
  std::mt19937_64 rng(38);
  for (const auto& c : cases) {
    const auto pts = rotated(oracle::random_rotation(rng), c.points);
    auto g = symmetry_group(config(pts));
    CHECK(g.tag == c.tag);
    CHECK(g.order == c.order);
    CHECK(static_cast<int>(g.elements.size()) == c.order);
    check_preserves(g, pts);
    std::vector<Mat3> gens;
    for (const auto& r : g.generators) gens.push_back(r.matrix());
    CHECK(static_cast<int>(oracle::closure(gens).size()) == c.order);
  }
}

TEST_CASE("equatorial polygons have dihedral symmetry") {
  for (int n = 3; n <= 9; ++n) {
    auto g = symmetry_group(config(oracle::ngon(n)));
    CHECK(g.tag == GroupTag::Dihedral);
    CHECK(g.m == n);
    CHECK(g.order == 2 * n);
    CHECK(static_cast<int>(g.elements.size()) == 2 * n);
    CHECK(std::abs(std::abs(g.axis.z()) - 1) < 1e-9);
    check_preserves(g, oracle::ngon(n));
  }
}

TEST_CASE("a tilted polygon has cyclic symmetry") {
  auto pts = oracle::ngon(5, 1.0);
  auto g = symmetry_group(config(pts));
  CHECK(g.tag == GroupTag::Cyclic);
  CHECK(g.m == 5);
  CHECK(g.order == 5);
  check_preserves(g, pts);
}

TEST_CASE("generic configurations are trivial") {
  std::mt19937_64 rng(39);
  for (int i = 0; i < 100; ++i) {
    std::vector<Vec3> vs;
    for (int k = 0; k < 5; ++k) vs.push_back(oracle::random_unit(rng));
    auto g = symmetry_group(config(vs));
    CHECK(g.tag == GroupTag::Trivial);
    CHECK(g.order == 1);
  }
}

TEST_CASE("axial configurations have continuous groups") {
  std::vector<Vec3> lop{Vec3::UnitZ(), Vec3::UnitZ(), -Vec3::UnitZ()};
  CHECK(symmetry_group(config(lop)).tag == GroupTag::AxialContinuous);
  std::vector<Vec3> bal{Vec3::UnitX(), -Vec3::UnitX()};
  auto g = symmetry_group(config(bal));
  CHECK(g.tag == GroupTag::AxialContinuousFlip);
  CHECK(g.order == 0);
  CHECK_FALSE(g.finite());
  CHECK(std::abs(std::abs(g.axis.x()) - 1) < 1e-12);
}

TEST_CASE("group_closure is closed and duplicate-free") {
  std::vector<Rotation> gens{Rotation::axis_angle(Vec3::UnitZ(), kPi / 2),
                             Rotation::axis_angle(Vec3::UnitX(), kPi)};
  auto els = group_closure(gens);
  CHECK(els.size() == 8);
  for (const auto& a : els)
    for (const auto& b : els) {
      const Rotation ab = a * b;
      CHECK(std::any_of(els.begin(), els.end(),
                        [&](const Rotation& c) { return c.distance(ab) < 1e-8; }));
    }
}

TEST_CASE("snap_angle rounds to rational multiples of pi") {
  CHECK(snap_angle(2 * kPi / 3 + 1e-12) == doctest::Approx(2 * kPi / 3).epsilon(1e-16));
  CHECK(snap_angle(1.0) == 1.0);
}

TEST_CASE("rotate moves every cluster") {
  auto c = config(oracle::tetrahedron());
  const Mat3 r = oracle::rotation_matrix(Vec3::UnitY(), 0.3);
  CHECK(brute_bottleneck(rotate(Rotation(r), c).vectors(), rotated(r, oracle::tetrahedron())) <
        1e-14);
}

TEST_CASE("worked examples of su2_to_so3") {
  CHECK((su2_to_so3(SingleQubitUnitary()).matrix() - Mat3::Identity()).norm() < 1e-15);
  auto r = su2_to_so3(SingleQubitUnitary::rz(kPi / 2));
  CHECK(std::abs(r.angle() - kPi / 2) < 1e-12);
  CHECK((r.axis() - Vec3::UnitZ()).norm() < 1e-12);
  auto x = su2_to_so3(SingleQubitUnitary::pauli_x());
  CHECK(std::abs(x.angle() - kPi) < 1e-12);
  CHECK((x.axis() - Vec3::UnitX()).norm() < 1e-12);
}

TEST_CASE("su2_to_so3 is a homomorphism") {
  std::mt19937_64 rng(301);
  for (int i = 0; i < 100; ++i) {
    SingleQubitUnitary g(oracle::random_unitary(rng)), h(oracle::random_unitary(rng));
    CHECK((su2_to_so3(g * h).matrix() - su2_to_so3(g).matrix() * su2_to_so3(h).matrix())
              .norm() <= 1e-10);
  }
}

TEST_CASE("worked examples of match_rotation") {
  std::mt19937_64 rng(302);
  std::vector<Vec3> vs;
  for (int i = 0; i < 6; ++i) vs.push_back(oracle::random_unit(rng));
  auto self = match_rotation(config(vs), config(vs));
  REQUIRE(self.has_value());
  CHECK(self->angle() < 1e-10);

  for (int n = 3; n <= 7; ++n) {
    const double alpha = 0.3 + 0.1 * n;
    const auto b = rotated(oracle::rotation_matrix(Vec3::UnitZ(), alpha), oracle::ngon(n));
    auto found = matching_rotations(config(oracle::ngon(n)), config(b));
    // Dihedral symmetry: 2n matches, among them rotations about z by
    // alpha mod 2 pi / n.
    CHECK(static_cast<int>(found.size()) == 2 * n);
    bool about_z = false;
    for (const auto& f : found) {
      const double step = 2 * kPi / n;
      const Mat3 want = oracle::rotation_matrix(
          Vec3::UnitZ(), std::fmod(alpha, step));
      about_z = about_z || (f.matrix() - want).norm() < 1e-8;
      CHECK(brute_bottleneck(rotated(f.matrix(), oracle::ngon(n)), b) < 1e-8);
    }
    CHECK(about_z);
  }

  const auto t = oracle::tetrahedron();
  const Mat3 diag = oracle::rotation_matrix(Vec3(1, 1, 1).normalized(), 0.77);
  auto tm = match_rotation(config(t), config(rotated(diag, t)));
  REQUIRE(tm.has_value());
  CHECK(brute_bottleneck(rotated(tm->matrix(), t), rotated(diag, t)) < 1e-8);
}

TEST_CASE("mirror images of chiral configurations do not match") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vec3> vs, mirror;
    for (int i = 0; i < 5; ++i) {
      vs.push_back(oracle::random_unit(rng));
      mirror.push_back(Vec3(-vs.back().x(), vs.back().y(), vs.back().z()));
    }
    CHECK_FALSE(match_rotation(config(vs), config(mirror)).has_value());
  }
}

TEST_CASE("matches are symmetric under inversion") {
  std::mt19937_64 rng(304);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Vec3> vs;
    for (int i = 0; i < 4 + trial % 4; ++i) vs.push_back(oracle::random_unit(rng));
    const auto b = rotated(oracle::random_rotation(rng), vs);
    for (const auto& r : matching_rotations(config(vs), config(b)))
      CHECK(brute_bottleneck(rotated(r.inverse().matrix(), b), vs) < 1e-8);
    auto back = match_rotation(config(b), config(vs));
    CHECK(back.has_value());
  }
}

TEST_CASE("worked examples of axial symmetry") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Vec3> same(n, Vec3(0, 1, 0));
    auto g = symmetry_group(config(same));
    CHECK(g.tag == GroupTag::AxialContinuous);
    CHECK(std::abs(std::abs(g.axis.y()) - 1) < 1e-12);
  }
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      std::vector<Vec3> vs(k, Vec3::UnitZ());
      vs.insert(vs.end(), n - k, -Vec3::UnitZ());
      CHECK(symmetry_group(config(vs)).tag ==
            (2 * k == n ? GroupTag::AxialContinuousFlip : GroupTag::AxialContinuous));
    }
}

TEST_CASE("finite symmetry groups contain the identity and are closed") {
  std::mt19937_64 rng(305);
  std::vector<std::vector<Vec3>> sets{oracle::tetrahedron(), oracle::cube(),
                                      oracle::ngon(5), oracle::ngon(4, 1.2)};
  std::vector<Vec3> generic;
  for (int i = 0; i < 5; ++i) generic.push_back(oracle::random_unit(rng));
  sets.push_back(generic);
  for (const auto& s : sets) {
    auto g = symmetry_group(config(s));
    REQUIRE(g.finite());
    CHECK(std::any_of(g.elements.begin(), g.elements.end(),
                      [](const Rotation& r) { return r.angle() < 1e-10; }));
    for (const auto& a : g.elements)
      for (const auto& b : g.elements) {
        const Rotation ab = a * b;
        CHECK(std::any_of(g.elements.begin(), g.elements.end(),
                          [&](const Rotation& c) { return c.distance(ab) < 1e-8; }));
      }
  }
}
