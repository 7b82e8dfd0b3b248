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

#include <random>

#include "oracles.hpp"
#include "symlu/mixed.hpp"

using namespace symlu;

namespace {

DensityMatrix conjugated(const SingleQubitUnitary& g, const DensityMatrix& rho) {
  const CMat k = oracle::kron(std::vector<Mat2>(rho.n(), g.matrix()));
  return DensityMatrix(rho.n(), k * rho.matrix() * k.adjoint());
}

GhzForm random_form(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0), ph(0, 2 * kPi);
  GhzForm f;
  f.n = n;
  f.I = u(rng) < 0.5 ? BitString::zeros(n) : BitString::ones(n);
  f.a = u(rng);
  f.b = std::polar(std::sqrt(f.a * (1 - f.a)) * u(rng), ph(rng));
  return f;
}

}  // namespace

TEST_CASE("search configuration validation") {
  EquivalenceSearchConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.threshold_for(4) == doctest::Approx(4e-7));
  cfg.threshold = 1e-5;
  CHECK(cfg.threshold_for(4) == 1e-5);
  cfg.threshold = -1.0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  EquivalenceSearchConfig small;
  small.grid_beta = 3;
  CHECK_THROWS_AS(small.validate(), DomainError);
}

TEST_CASE("conjugation_distance vanishes exactly on the relating unitary") {
  std::mt19937_64 rng(51);
  DensityMatrix rho(3, oracle::random_invariant_mixed(3, rng));
  SingleQubitUnitary g(oracle::random_unitary(rng));
  const auto target = conjugated(g, rho);
  CHECK(conjugation_distance(g, rho, target) < 1e-13);
  CHECK(conjugation_distance(SingleQubitUnitary(), rho, target) > 1e-4);
}

TEST_CASE("constructed equivalent mixed pairs are solved") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 3 + trial % 2;
    DensityMatrix rho(n, oracle::random_invariant_mixed(n, rng));
    SingleQubitUnitary g(oracle::random_unitary(rng));
    const auto target = conjugated(g, rho);
    auto r = lu_equivalent_mixed(rho, target);
    REQUIRE(r.verdict == MixedVerdict::Equivalent);
    REQUIRE(r.g.has_value());
    CHECK(r.distance <= 1e-7 * std::pow(2.0, n / 2.0));
    CHECK(conjugation_distance(*r.g, rho, target) == doctest::Approx(r.distance).epsilon(1e-6));
    CHECK_FALSE(r.no_completeness_guarantee);
  }
}

TEST_CASE("spectrum changes are rejected by the prefilter") {
  std::mt19937_64 rng(53);
  for (int n = 3; n <= 4; ++n) {
    DensityMatrix rho(n, oracle::random_invariant_mixed(n, rng));
    SingleQubitUnitary g(oracle::random_unitary(rng));
    const CMat mixed = CMat::Identity(1 << n, 1 << n) / double(1 << n);
    DensityMatrix target(n, 0.999 * conjugated(g, rho).matrix() + 0.001 * mixed);
    auto r = lu_equivalent_mixed(rho, target);
    CHECK(r.verdict == MixedVerdict::Inequivalent);
    CHECK_FALSE(r.g.has_value());
    CHECK(r.distance == 0.0);
    CHECK_FALSE(r.reason.empty());
  }
}

TEST_CASE("complex conjugation preserves invariants but not the orbit") {
  std::mt19937_64 rng(54);
  DensityMatrix rho(3, oracle::random_invariant_mixed(3, rng));
  DensityMatrix conj(3, rho.matrix().conjugate());
  EquivalenceSearchConfig cfg;
  cfg.restarts = 2;
  auto r = lu_equivalent_mixed(rho, conj, cfg);
  CHECK(r.verdict != MixedVerdict::Equivalent);
  CHECK(r.distance > r.threshold);
}

TEST_CASE("mixed equivalence preconditions") {
  std::mt19937_64 rng(55);
  DensityMatrix rho(3, oracle::random_invariant_mixed(3, rng));
  DensityMatrix four(4, oracle::random_invariant_mixed(4, rng));
  CHECK_THROWS_AS(lu_equivalent_mixed(rho, four), DomainError);
  DensityMatrix two(2, oracle::random_invariant_mixed(2, rng));
  CHECK_THROWS_AS(lu_equivalent_mixed(two, two), UnsupportedError);
  CMat m = CMat::Zero(8, 8);
  m(1, 1) = 1;
  try {
    lu_equivalent_mixed(rho, DensityMatrix(3, m));
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("qubits 1 and 2") != std::string::npos);
  }
}

TEST_CASE("the two-qubit fallback handles independent factors") {
  std::mt19937_64 rng(56);
  const CVec v = oracle::random_vector(4, rng);
  DensityMatrix rho(2, 0.8 * v * v.adjoint() + 0.05 * CMat::Identity(4, 4));
  std::vector<Mat2> f{oracle::random_unitary(rng), oracle::random_unitary(rng)};
  const CMat k = oracle::kron(f);
  DensityMatrix target(2, k * rho.matrix() * k.adjoint());
  auto r = two_qubit_equivalent(rho, target);
  CHECK(r.verdict == MixedVerdict::Equivalent);
  CHECK(r.no_completeness_guarantee);
  REQUIRE(r.local.has_value());
  const CMat kk = r.local->dense();
  CHECK((kk * rho.matrix() * kk.adjoint() - target.matrix()).norm() <= r.threshold);
}

TEST_CASE("GhzForm densities are validated") {
  GhzForm f;
  f.n = 3;
  f.a = 0.5;
  f.b = 0.6;
  CHECK_THROWS_AS(f.density(), DomainError);
  f.b = 0.5;
  auto rho = f.density();
  CHECK(std::abs(rho.matrix()(0, 7) - cplx(0.5)) < 1e-15);
  CHECK(std::abs(rho.matrix()(7, 7) - cplx(0.5)) < 1e-15);
}

TEST_CASE("canonical_ghz_form makes b real and nonnegative") {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const GhzForm f = random_form(n, rng);
    const auto tau = f.density();
    auto c = canonical_ghz_form(tau);
    CHECK(c.form.I == BitString::zeros(n));
    CHECK(c.form.a >= 0.5 - 1e-12);
    CHECK(std::abs(c.form.b.imag()) <= 1e-12);
    CHECK(c.form.b.real() >= 0);
    const CMat k = c.total.dense();
    CHECK((k * tau.matrix() * k.adjoint() - c.form.density().matrix()).norm() < 1e-10);
    for (const auto& s : c.steps) CHECK(s.u.n() == n);
  }
}

TEST_CASE("LU-equivalent GhzForm inputs share one canonical form") {
  std::mt19937_64 rng(58);
  std::uniform_real_distribution<double> ph(0, 2 * kPi);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + trial % 3;
    const GhzForm f = random_form(n, rng);
    // Diagonal phases and an X layer keep the two-term support.
    auto g = SingleQubitUnitary::phase(ph(rng));
    if (trial % 2) g = SingleQubitUnitary::pauli_x() * g;
    const auto other = conjugated(g, f.density());
    auto c1 = canonical_ghz_form(f.density());
    auto c2 = canonical_ghz_form(other);
    CHECK(std::abs(c1.form.a - c2.form.a) <= 1e-9);
    CHECK(std::abs(c1.form.b - c2.form.b) <= 1e-9);
  }
}

TEST_CASE("canonical_ghz_form rejects other supports") {
  CMat w = CMat::Zero(8, 8);
  w(1, 1) = 0.5;
  w(2, 2) = 0.5;
  w(1, 2) = w(2, 1) = 0.5;
  try {
    canonical_ghz_form(DensityMatrix(3, w));
    FAIL("expected NotGhzForm");
  } catch (const NotGhzForm& e) {
    CHECK_FALSE(e.entries().empty());
  }
  // Two-term support on |001>, |110> is not the uniform string pair.
  CMat m = CMat::Zero(8, 8);
  m(1, 1) = 0.5;
  m(6, 6) = 0.5;
  m(1, 6) = m(6, 1) = 0.5;
  CHECK_THROWS_AS(canonical_ghz_form(DensityMatrix(3, m)), DomainError);
}

TEST_CASE("support check on GHZ-like states") {
  std::mt19937_64 rng(59);
  const GhzForm f = random_form(4, rng);
  auto ok = two_qubit_support_check(f.density(), 0, 2, 0.7);
  CHECK(ok.status == SupportStatus::Holds);
  CHECK(ok.stabilizer_residual < 1e-12);

  CMat w = CMat::Zero(8, 8);
  for (int i : {1, 2, 4})
    for (int j : {1, 2, 4}) w(i, j) = 1.0 / 3;
  DensityMatrix wstate(3, w);
  auto pre = two_qubit_support_check(wstate, 0, 1, 0.7);
  CHECK(pre.status == SupportStatus::NotApplicable);
  CHECK(pre.stabilizer_residual > 1e-3);
  auto forced = two_qubit_support_check(wstate, 0, 1, 0.7, 1e-9, false);
  CHECK(forced.status == SupportStatus::Violated);
  REQUIRE(forced.witness.has_value());
  CHECK(forced.witness->first.str() == "001");
  CHECK(forced.witness->second.str() == "010");
  CHECK(two_qubit_support_check(f.density(), 0, 1, kPi).status ==
        SupportStatus::NotApplicable);
  CHECK_THROWS_AS(two_qubit_support_check(wstate, 1, 1, 0.3), DomainError);
  CHECK(to_string(SupportStatus::Holds) != to_string(SupportStatus::Violated));
}

TEST_CASE("worked examples of lu_equivalent_mixed") {
  std::mt19937_64 rng(501);
  DensityMatrix rho(3, oracle::random_invariant_mixed(3, rng));
  SingleQubitUnitary g(oracle::random_unitary(rng));
  auto r = lu_equivalent_mixed(rho, conjugated(g, rho));
  REQUIRE(r.verdict == MixedVerdict::Equivalent);
  CHECK(r.distance <= 1e-9);

  auto self = lu_equivalent_mixed(rho, rho);
  REQUIRE(self.verdict == MixedVerdict::Equivalent);
  CHECK(conjugation_distance(*self.g, rho, rho) <= self.threshold);

  // A non-identical diagonal tuple fixes GHZ-diagonal states, so the pair is
  // trivially equivalent.
  GhzForm f;
  f.a = 0.6;
  f.b = cplx(0.2, 0.3);
  const auto tau = f.density();
  const double t = 0.8;
  std::vector<SingleQubitUnitary> d{SingleQubitUnitary::rz(-t), SingleQubitUnitary::rz(t),
                                    SingleQubitUnitary()};
  DensityMatrix moved(3, conjugate(LocalUnitary(d), tau.matrix()));
  CHECK((moved.matrix() - tau.matrix()).norm() < 1e-15);
  CHECK(lu_equivalent_mixed(tau, moved).verdict == MixedVerdict::Equivalent);
}

TEST_CASE("worked examples of canonical_ghz_form") {
  auto ghz3 = canonical_ghz_form(to_density(expand(ghz(3))));
  CHECK(ghz3.form.I.str() == "000");
  CHECK(std::abs(ghz3.form.a - 0.5) < 1e-12);
  CHECK(std::abs(ghz3.form.b - cplx(0.5)) < 1e-12);

  GhzForm f;
  f.a = 0.5;
  f.b = std::polar(0.25, kPi / 3);
  auto c = canonical_ghz_form(f.density());
  CHECK(std::abs(c.form.b - cplx(0.25)) < 1e-12);
  REQUIRE_FALSE(c.steps.empty());
  // The phase layer diag(1, e^{i pi/9}) absorbs arg(b) = pi/3 over three qubits.
  const auto& layer = c.steps.front().u[0];
  CHECK(std::abs(std::arg(layer(1, 1) / layer(0, 0)) - kPi / 9) < 1e-12);

  GhzForm pure;
  pure.a = 1.0;
  pure.b = 0.0;
  auto p = canonical_ghz_form(pure.density());
  CHECK(p.form.a == doctest::Approx(1.0));
  CHECK(std::abs(p.form.b) < 1e-15);
}

TEST_CASE("a phase layer multiplies b by exp(-+ i n phi)") {
  std::mt19937_64 rng(502);
  std::uniform_real_distribution<double> ph(0, 2 * kPi);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      GhzForm f = random_form(n, rng);
      const double phi = ph(rng);
      auto out = conjugated(SingleQubitUnitary::phase(phi), f.density());
      const std::uint64_t i = f.I.index(), ic = f.I.complement().index();
      const double sign = f.I == BitString::zeros(n) ? -1.0 : 1.0;
      CHECK(std::abs(out.matrix()(i, ic) - std::polar(1.0, sign * n * phi) * f.b) < 1e-14);
    }
}

TEST_CASE("worked examples of the support check") {
  GhzForm f;
  f.a = 0.7;
  f.b = 0.3;
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      if (k != l) CHECK(two_qubit_support_check(f.density(), k, l, kPi / 4).status ==
                        SupportStatus::Holds);
  auto d31 = two_qubit_support_check(to_density(expand(dicke(3, 1))), 0, 1, kPi / 4);
  CHECK(d31.status == SupportStatus::NotApplicable);
  CHECK_FALSE(d31.reason.empty());
  CMat m = 0.9 * f.density().matrix() + 0.1 * CMat::Identity(8, 8) / 8;
  m(0, 3) = m(3, 0) = 0.01;
  auto injected =
      two_qubit_support_check(DensityMatrix(3, m), 0, 1, kPi / 4, 1e-9, false);
  CHECK(injected.status == SupportStatus::Violated);
  REQUIRE(injected.witness.has_value());
  CHECK(injected.witness->first.str() == "000");
  CHECK(injected.witness->second.str() == "011");
}
