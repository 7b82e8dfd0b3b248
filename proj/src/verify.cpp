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
#include "symlu/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "symlu/optimize.hpp"

namespace symlu {

namespace {

struct Entry {
  std::uint64_t i, j;
  cplx target;   // rho_IJ
  cplx source;   // entry conjugated by the diagonal phases
};

// Residual of diagonal-phase tuples rz(t_1) x ... x rz(t_n), optionally
// after an X layer, evaluated on the sparse support of rho.
class DiagonalResidual {
 public:
  DiagonalResidual(const DensityMatrix& rho, bool x_layer) : n_(rho.n()) {
    const CMat& m = rho.matrix();
    const std::uint64_t dim = rho.dim(), mask = dim - 1;
    for (std::uint64_t i = 0; i < dim; ++i)
      for (std::uint64_t j = 0; j < dim; ++j) {
        cplx target = m(i, j);
        cplx source = x_layer ? m(i ^ mask, j ^ mask) : target;
        if (std::abs(target) > 1e-15 || std::abs(source) > 1e-15)
          entries_.push_back({i, j, target, source});
      }
  }

  double squared(std::span<const double> t) const {
    double s = 0;
    for (const auto& e : entries_) {
      double th = phase(e.i, t) - phase(e.j, t);
      cplx v = e.source * std::polar(1.0, th) - e.target;
      s += std::norm(v);
    }
    return s;
  }

 private:
  double phase(std::uint64_t idx, std::span<const double> t) const {
    double p = 0;
    for (int k = 0; k < n_; ++k)
      p += ((idx >> (n_ - 1 - k)) & 1U) ? t[k] / 2 : -t[k] / 2;
    return p;
  }

  int n_;
  std::vector<Entry> entries_;
};

std::vector<double> sort_key(const LocalUnitary& u) {
  std::vector<double> key;
  for (const auto& g : u.factors()) {
    auto p = g.phase_normalized();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        // Round so that numerically equal witnesses sort stably.
        key.push_back(std::round(p(r, c).real() * 1e6) / 1e6);
        key.push_back(std::round(p(r, c).imag() * 1e6) / 1e6);
      }
  }
  return key;
}

bool all_identical(const LocalUnitary& u, double tol) {
  for (int k = 1; k < u.n(); ++k)
    if (!u[k].projectively_equal(u[0], tol)) return false;
  return true;
}

}  // namespace

StabilizerWitness check_stabilizes(const LocalUnitary& u,
                                   const DensityMatrix& rho, double tol) {
  if (u.n() != rho.n())
    throw DomainError("check_stabilizes: local unitary has " +
                      std::to_string(u.n()) + " factors for " +
                      std::to_string(rho.n()) + " qubits");
  StabilizerWitness w{u, 0.0, false, ""};
  w.residual = (conjugate(u, rho.matrix()) - rho.matrix()).norm();
  w.accepted = w.residual <= tol;
  return w;
}

std::vector<StabilizerWitness> sample_stabilizer(
    const DensityMatrix& rho, const StabilizerSearchConfig& cfg) {
  const int n = rho.n();
  if (n > cfg.max_qubits)
    throw UnsupportedError("sample_stabilizer: n = " + std::to_string(n) +
                           " exceeds the dense cap of " +
                           std::to_string(cfg.max_qubits));
  std::vector<StabilizerWitness> found;
  auto add = [&](const LocalUnitary& u, const std::string& family) {
    auto w = check_stabilizes(u, rho, cfg.accept_tol);
    if (!w.accepted) return;
    for (const auto& f : found)
      if (f.U.projectively_equal(u, cfg.dedupe_tol)) return;
    w.family = family;
    found.push_back(std::move(w));
  };
  const double target = std::pow(1e-2 * cfg.accept_tol, 2);

  // Identical tuples over the Euler lattice.
  {
    const int m = std::max(4, cfg.grid);
    auto lattice = euler_lattice(m, m, m);
    std::vector<double> val(lattice.size());
    auto res2 = [&](const SingleQubitUnitary& g) {
      double r = (conjugate(LocalUnitary::identical(g, n), rho.matrix()) -
                  rho.matrix()).norm();
      return r * r;
    };
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const auto& e = lattice[i];
      val[i] = res2(SingleQubitUnitary::euler_zyz(e[0], e[1], e[2]));
    }
    auto at = [&](int a, int b, int c) {
      a = (a + m) % m;
      c = (c + m) % m;
      b = std::clamp(b, 0, m - 1);
      return val[(static_cast<std::size_t>(a) * m + b) * m + c];
    };
    std::vector<std::size_t> minima;
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) {
          double v = at(a, b, c);
          bool is_min = v <= at(a + 1, b, c) && v <= at(a - 1, b, c) &&
                        v <= at(a, b + 1, c) && v <= at(a, b - 1, c) &&
                        v <= at(a, b, c + 1) && v <= at(a, b, c - 1);
          if (is_min) minima.push_back((static_cast<std::size_t>(a) * m + b) * m + c);
        }
    auto by_value = [&](std::size_t x, std::size_t y) {
      return val[x] != val[y] ? val[x] < val[y] : x < y;
    };
    std::sort(minima.begin(), minima.end(), by_value);
    if (static_cast<int>(minima.size()) > cfg.max_descents)
      minima.resize(cfg.max_descents);
    DescentOptions opts;
    opts.initial_step = 0.2;
    opts.target = target;
    for (std::size_t idx : minima) {
      const auto& e = lattice[idx];
      auto r = refine_su2(res2, SingleQubitUnitary::euler_zyz(e[0], e[1], e[2]),
                          opts);
      add(LocalUnitary::identical(r.g, n), "identical");
    }
  }

  // Independent diagonal phases, with and without an X layer.
  const int per = std::clamp(
      static_cast<int>(std::floor(std::pow(cfg.diagonal_budget, 1.0 / n) + 1e-9)),
      3, 12);
  for (bool x_layer : {false, true}) {
    DiagonalResidual dr(rho, x_layer);
    std::size_t total = 1;
    for (int k = 0; k < n; ++k) total *= per;
    std::vector<std::pair<double, std::size_t>> vals;
    vals.reserve(total);
    std::vector<double> t(n);
    auto decode = [&](std::size_t idx) {
      for (int k = n - 1; k >= 0; --k) {
        t[k] = 2 * kPi * static_cast<double>(idx % per) / per;
        idx /= per;
      }
    };
    for (std::size_t idx = 0; idx < total; ++idx) {
      decode(idx);
      vals.emplace_back(dr.squared(t), idx);
    }
    const std::size_t keep =
        std::min<std::size_t>(vals.size(), std::max(1, cfg.max_descents / 2));
    std::partial_sort(vals.begin(), vals.begin() + keep, vals.end());
    DescentOptions opts;
    opts.initial_step = kPi / per;
    opts.target = target;
    for (std::size_t j = 0; j < keep; ++j) {
      decode(vals[j].second);
      auto r = coordinate_descent(
          [&](std::span<const double> p) { return dr.squared(p); }, t, opts);
      std::vector<SingleQubitUnitary> f;
      for (int k = 0; k < n; ++k) {
        auto g = SingleQubitUnitary::rz(r.x[k]);
        f.push_back(x_layer ? g * SingleQubitUnitary::pauli_x() : g);
      }
      add(LocalUnitary(std::move(f)), x_layer ? "diagonal+X" : "diagonal");
    }
  }

  std::sort(found.begin(), found.end(),
            [](const StabilizerWitness& a, const StabilizerWitness& b) {
              return sort_key(a.U) < sort_key(b.U);
            });
  return found;
}

SpectraReport spectra_report(const DensityMatrix& rho) {
  SpectraReport r;
  Eigen::SelfAdjointEigenSolver<CMat> es(rho.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  r.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  for (int k = 0; k < rho.n(); ++k) {
    Eigen::SelfAdjointEigenSolver<Mat2> e2(reduced_1qubit(rho, k),
                                           Eigen::EigenvaluesOnly);
    r.reduced.push_back({e2.eigenvalues()(0), e2.eigenvalues()(1)});
  }
  return r;
}

bool CrossCheckReport::ok() const {
  for (const auto& g : generator_checks)
    if (!g.accepted) return false;
  return anomalies.empty() && !order_mismatch;
}

CrossCheckReport cross_check(const SymmetricPureState& psi,
                             const StabilizerSearchConfig& cfg,
                             const Tolerances& tol) {
  CrossCheckReport rep;
  rep.classification = classify_state(psi, tol);
  const auto canon = rep.classification.canonical_density();
  for (const auto& g : rep.classification.generators)
    rep.generator_checks.push_back(check_stabilizes(g, canon, 1e-9));
  rep.witnesses = sample_stabilizer(to_density(psi, tol), cfg);
  for (const auto& w : rep.witnesses) {
    if (all_identical(w.U, cfg.dedupe_tol)) ++rep.identical_count;
    if (!rep.classification.stabilizer_contains(w.U, 1e-6))
      rep.anomalies.push_back(w);
  }
  const auto& cls = rep.classification.cls;
  if (cls.tag == StabilizerTag::Finite && cls.group)
    rep.order_mismatch = rep.identical_count != cls.group->order;
  return rep;
}

}  // namespace symlu
