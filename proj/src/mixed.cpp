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
#include "symlu/mixed.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "symlu/optimize.hpp"
#include "symlu/verify.hpp"

namespace symlu {

namespace {

void require_invariant(const DensityMatrix& rho, const char* which) {
  if (auto tr = first_noninvariant_transposition(rho)) {
    std::ostringstream os;
    os << "input " << which
       << " is not permutation invariant: transposition of qubits "
       << tr->first << " and " << tr->second << " changes it";
    throw DomainError(os.str());
  }
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Compares global spectra and every one-qubit marginal spectrum.
std::optional<std::string> spectral_mismatch(const DensityMatrix& a,
                                             const DensityMatrix& b, double tol) {
  const auto sa = spectra_report(a), sb = spectra_report(b);
  const double dg = max_abs_diff(sa.eigenvalues, sb.eigenvalues);
  if (dg > tol)
    return "global spectra differ by " + std::to_string(dg);
  for (std::size_t q = 0; q < sa.reduced.size(); ++q) {
    for (int j = 0; j < 2; ++j) {
      double d = std::abs(sa.reduced[q][j] - sb.reduced[q][j]);
      if (d > tol)
        return "one-qubit spectra of qubit " + std::to_string(q) +
               " differ by " + std::to_string(d);
    }
  }
  return std::nullopt;
}

struct LatticeHit {
  double value;
  std::array<double, 3> angles;
};

}  // namespace

void EquivalenceSearchConfig::validate() const {
  if (grid_alpha < 4 || grid_beta < 4 || grid_gamma < 4)
    throw DomainError("search lattice needs at least 4 points per angle");
  if (threshold && !(*threshold > 0))
    throw DomainError("search threshold must be positive");
  if (refine_top < 0 || restarts < 0 || max_rounds < 1)
    throw DomainError("search counts must be nonnegative");
}

double EquivalenceSearchConfig::threshold_for(int n) const {
  return threshold.value_or(1e-7 * std::pow(2.0, n / 2.0));
}

std::string to_string(MixedVerdict v) {
  switch (v) {
    case MixedVerdict::Equivalent: return "equivalent";
    case MixedVerdict::Inequivalent: return "inequivalent";
    case MixedVerdict::Undecided: return "undecided";
  }
  return "?";
}

double conjugation_distance(const SingleQubitUnitary& g, const DensityMatrix& rho,
                            const DensityMatrix& target) {
  CMat m = conjugate(LocalUnitary::identical(g, rho.n()), rho.matrix());
  return (m - target.matrix()).norm();
}

MixedEquivalence lu_equivalent_mixed(const DensityMatrix& a,
                                     const DensityMatrix& b,
                                     const EquivalenceSearchConfig& cfg) {
  cfg.validate();
  if (a.n() != b.n())
    throw DomainError("lu_equivalent_mixed: inputs have different n");
  const int n = a.n();
  if (n < 3)
    throw UnsupportedError(
        "mixed-state equivalence via a single g requires n >= 3");
  require_invariant(a, "A");
  require_invariant(b, "B");

  MixedEquivalence out;
  out.threshold = cfg.threshold_for(n);
  if (auto why = spectral_mismatch(a, b, cfg.prefilter_tol)) {
    out.verdict = MixedVerdict::Inequivalent;
    out.reason = *why;
    return out;
  }

  auto dist = [&](const SingleQubitUnitary& g) {
    return conjugation_distance(g, a, b);
  };
  auto dist2 = [&](const SingleQubitUnitary& g) {
    double d = dist(g);
    return d * d;
  };

  std::vector<LatticeHit> hits;
  for (const auto& e : euler_lattice(cfg.grid_alpha, cfg.grid_beta, cfg.grid_gamma))
    hits.push_back({dist(SingleQubitUnitary::euler_zyz(e[0], e[1], e[2])), e});
  std::sort(hits.begin(), hits.end(), [](const LatticeHit& x, const LatticeHit& y) {
    if (x.value != y.value) return x.value < y.value;
    return x.angles < y.angles;
  });

  DescentOptions opts;
  opts.max_sweeps = cfg.max_rounds;
  opts.initial_step = 0.3;
  opts.target = std::pow(1e-3 * out.threshold, 2);

  SingleQubitUnitary best_g;
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const SingleQubitUnitary& start) {
    auto m = refine_su2(dist2, start, opts);
    double d = dist(m.g);
    if (d < best) {
      best = d;
      best_g = m.g;
    }
  };
  const int top = std::min<int>(cfg.refine_top, static_cast<int>(hits.size()));
  for (int i = 0; i < top && best > std::sqrt(opts.target); ++i) {
    const auto& e = hits[i].angles;
    consider(SingleQubitUnitary::euler_zyz(e[0], e[1], e[2]));
  }
  std::mt19937_64 rng(cfg.seed);
  for (int r = 0; r < cfg.restarts && best > out.threshold; ++r)
    consider(SingleQubitUnitary::random(rng));

  out.distance = best;
  if (best <= out.threshold) {
    if (!(dist(best_g) <= out.threshold))
      throw std::logic_error("lu_equivalent_mixed: accepted g fails recheck");
    out.verdict = MixedVerdict::Equivalent;
    out.g = best_g.phase_normalized();
    out.reason = "search reached the threshold";
  } else {
    out.verdict = MixedVerdict::Undecided;
    out.reason = "invariants agree but the search stopped at distance " +
                 std::to_string(best);
  }
  return out;
}

MixedEquivalence two_qubit_equivalent(const DensityMatrix& a,
                                      const DensityMatrix& b,
                                      const EquivalenceSearchConfig& cfg) {
  cfg.validate();
  if (a.n() != 2 || b.n() != 2)
    throw DomainError("two_qubit_equivalent: inputs must have two qubits");
  MixedEquivalence out;
  out.no_completeness_guarantee = true;
  out.threshold = cfg.threshold_for(2);
  if (auto why = spectral_mismatch(a, b, cfg.prefilter_tol)) {
    out.verdict = MixedVerdict::Inequivalent;
    out.reason = *why;
    return out;
  }
  auto build = [](const SingleQubitUnitary& g1, const SingleQubitUnitary& g2,
                  std::span<const double> d) {
    Vec3 v1(d[0], d[1], d[2]), v2(d[3], d[4], d[5]);
    return LocalUnitary({SingleQubitUnitary::rotation(v1, v1.norm()) * g1,
                         SingleQubitUnitary::rotation(v2, v2.norm()) * g2});
  };
  auto dist = [&](const LocalUnitary& u) {
    return (conjugate(u, a.matrix()) - b.matrix()).norm();
  };
  std::mt19937_64 rng(cfg.seed);
  double best = std::numeric_limits<double>::infinity();
  std::optional<LocalUnitary> best_u;
  const int starts = std::max(16, 4 * (cfg.restarts + cfg.refine_top));
  DescentOptions opts;
  opts.max_sweeps = 4;
  opts.initial_step = 0.3;
  const double target = std::pow(1e-3 * out.threshold, 2);
  for (int s = 0; s < starts && best > out.threshold; ++s) {
    SingleQubitUnitary g1 = SingleQubitUnitary::random(rng);
    SingleQubitUnitary g2 = SingleQubitUnitary::random(rng);
    double step = 0.3, value = std::pow(dist(LocalUnitary({g1, g2})), 2);
    for (int round = 0; round < cfg.max_rounds && value > target; ++round) {
      opts.initial_step = step;
      auto r = coordinate_descent(
          [&](std::span<const double> d) { return std::pow(dist(build(g1, g2, d)), 2); },
          std::vector<double>(6, 0.0), opts);
      double moved = 0;
      for (double x : r.x) moved = std::max(moved, std::abs(x));
      if (r.value < value) {
        auto u = build(g1, g2, r.x);
        g1 = u[0];
        g2 = u[1];
        value = r.value;
      }
      step = std::max(2 * moved, step / 8);
      if (step < 1e-12) break;
    }
    LocalUnitary u({g1, g2});
    double d = dist(u);
    if (d < best) {
      best = d;
      best_u = u;
    }
  }
  out.distance = best;
  if (best <= out.threshold) {
    out.verdict = MixedVerdict::Equivalent;
    out.local = best_u;
    out.reason = "two-qubit brute-force search reached the threshold";
  } else {
    out.verdict = MixedVerdict::Undecided;
    out.reason = "two-qubit brute-force search stopped at distance " +
                 std::to_string(best);
  }
  return out;
}

DensityMatrix GhzForm::density() const {
  if (I.n() != n) throw DomainError("GhzForm: bit string length differs from n");
  if (!(a >= 0.0 && a <= 1.0)) throw DomainError("GhzForm: a outside [0, 1]");
  if (std::norm(b) > a * (1 - a) + 1e-10)
    throw DomainError("GhzForm: |b|^2 > a(1-a), not positive semidefinite");
  const std::uint64_t i = I.index(), ic = I.complement().index();
  const std::size_t dim = std::size_t{1} << n;
  CMat m = CMat::Zero(dim, dim);
  m(i, i) += a;
  m(ic, ic) += 1 - a;
  m(i, ic) += b;
  m(ic, i) += std::conj(b);
  return DensityMatrix::trusted(n, std::move(m));
}

GhzCanonicalization canonical_ghz_form(const DensityMatrix& tau, double tol) {
  const int n = tau.n();
  const CMat& m = tau.matrix();
  const std::uint64_t dim = tau.dim();
  std::vector<std::uint64_t> support;
  for (std::uint64_t i = 0; i < dim; ++i)
    if (std::abs(m(i, i)) > tol) support.push_back(i);
  const std::uint64_t mask = dim - 1;
  const std::uint64_t i0 = support.empty() ? 0 : support.front();
  const std::uint64_t i1 = i0 ^ mask;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;
  for (std::uint64_t r = 0; r < dim; ++r)
    for (std::uint64_t c = 0; c < dim; ++c) {
      const bool allowed = (r == i0 || r == i1) && (c == i0 || c == i1);
      if (!allowed && std::abs(m(r, c)) > tol) bad.emplace_back(r, c);
    }
  if (!bad.empty()) {
    std::ostringstream os;
    os << "state is not of the form a|I><I| + b|I><I^c| + h.c. + (1-a)|I^c><I^c|;"
       << " offending entries:";
    for (std::size_t j = 0; j < std::min<std::size_t>(bad.size(), 8); ++j)
      os << " (" << BitString(n, bad[j].first).str() << ","
         << BitString(n, bad[j].second).str() << ")";
    if (bad.size() > 8) os << " and " << bad.size() - 8 << " more";
    throw NotGhzForm(os.str(), std::move(bad));
  }
  if (i0 != 0 && i0 != mask)
    throw DomainError("support string " + BitString(n, i0).str() +
                      " is neither 0...0 nor 1...1; a permutation-invariant "
                      "state with n >= 3 cannot have it");

  // Written with I = 0...0 throughout; I = 1...1 is the same matrix with
  // a -> 1-a and b -> conj(b).
  double a = m(0, 0).real();
  cplx b = m(0, mask);

  GhzCanonicalization out;
  out.total = LocalUnitary::identity(n);
  if (std::abs(b) > tol && std::abs(std::arg(b)) > 0.0) {
    const double phi = std::arg(b) / n;
    auto u = LocalUnitary::identical(SingleQubitUnitary::phase(phi), n);
    std::ostringstream name;
    name.precision(17);
    name << "phase layer diag(1, e^{i phi}), phi = " << phi;
    out.steps.push_back({name.str(), u});
    out.total = u * out.total;
    b = std::abs(b);
  } else {
    b = std::abs(b);
  }
  if (a < 0.5) {
    auto x = LocalUnitary::identical(SingleQubitUnitary::pauli_x(), n);
    out.steps.push_back({"X layer", x});
    out.total = x * out.total;
    a = 1 - a;
  }
  out.form.n = n;
  out.form.I = BitString::zeros(n);
  out.form.a = a;
  out.form.b = b.real();
  return out;
}

std::string to_string(SupportStatus s) {
  switch (s) {
    case SupportStatus::Holds: return "holds";
    case SupportStatus::Violated: return "violated";
    case SupportStatus::NotApplicable: return "not-applicable";
  }
  return "?";
}

SupportCheck two_qubit_support_check(const DensityMatrix& tau, int k, int l,
                                     double t, double tol,
                                     bool check_precondition) {
  const int n = tau.n();
  if (k < 0 || l < 0 || k >= n || l >= n || k == l)
    throw DomainError("two_qubit_support_check: invalid qubit pair");
  SupportCheck out;
  std::vector<SingleQubitUnitary> f(n);
  Mat2 d = Mat2::Zero();
  d(0, 0) = std::polar(1.0, t);
  d(1, 1) = std::polar(1.0, -t);
  f[k] = SingleQubitUnitary(d);
  f[l] = SingleQubitUnitary(d.adjoint());
  const LocalUnitary u(std::move(f));
  out.stabilizer_residual = (conjugate(u, tau.matrix()) - tau.matrix()).norm();
  if (check_precondition) {
    if (std::abs(std::sin(t)) < 1e-12) {
      out.reason = "t is a multiple of pi";
      return out;
    }
    if (out.stabilizer_residual > tol) {
      out.reason = "d^(k) d^dagger^(l) does not stabilize the input (residual " +
                   std::to_string(out.stabilizer_residual) + ")";
      return out;
    }
  }
  const CMat& m = tau.matrix();
  const std::uint64_t mask = tau.dim() - 1;
  for (std::uint64_t i = 0; i < tau.dim(); ++i)
    for (std::uint64_t j = 0; j < tau.dim(); ++j) {
      if (j == i || j == (i ^ mask)) continue;
      if (std::abs(m(i, j)) > tol) {
        out.status = SupportStatus::Violated;
        out.witness = std::make_pair(BitString(n, i), BitString(n, j));
        out.reason = "nonzero coefficient outside {I, I^c}";
        return out;
      }
    }
  out.status = SupportStatus::Holds;
  return out;
}

}  // namespace symlu
