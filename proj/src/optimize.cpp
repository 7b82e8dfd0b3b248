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
#include "symlu/optimize.hpp"

#include <algorithm>
#include <cmath>

namespace symlu {

double golden_section(const std::function<double(double)>& f, double lo,
                      double hi, double xtol, int max_iter) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = lo, b = hi;
  double c = b - r * (b - a), d = a + r * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - r * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + r * (b - a);
      fd = f(d);
    }
  }
  return fc < fd ? c : d;
}

DescentResult coordinate_descent(const Objective& f, std::vector<double> x0,
                                 const DescentOptions& opts) {
  DescentResult res;
  const std::size_t dim = x0.size();
  std::vector<double> x = std::move(x0);
  std::vector<double> h(dim, opts.initial_step);
  auto eval = [&](std::span<const double> p) {
    ++res.evaluations;
    return f(p);
  };
  double fx = eval(x);

  for (int sweep = 0; sweep < opts.max_sweeps && fx > opts.target; ++sweep) {
    const std::vector<double> start = x;
    const double f_start = fx;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<double> trial = x;
      auto line = [&](double v) {
        trial[i] = v;
        return eval(trial);
      };
      const double xi = x[i];
      double best = golden_section(line, xi - h[i], xi + h[i], h[i] * 1e-3, 60);
      double fb = line(best);
      if (fb < fx) {
        x[i] = best;
        fx = fb;
      }
      const double moved = std::abs(x[i] - xi);
      // Grow the bracket when the minimum sat on its edge, shrink otherwise.
      if (moved > 0.9 * h[i])
        h[i] *= 2;
      else
        h[i] = std::max(4 * moved, h[i] / 4);
    }
    // Pattern step along the sweep's displacement.
    std::vector<double> dir(dim);
    double len = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      dir[i] = x[i] - start[i];
      len += dir[i] * dir[i];
    }
    if (len > 0) {
      std::vector<double> trial(dim);
      auto line = [&](double s) {
        for (std::size_t i = 0; i < dim; ++i) trial[i] = x[i] + s * dir[i];
        return eval(trial);
      };
      double s = golden_section(line, -0.5, 2.0, 1e-4, 40);
      double fs = line(s);
      if (fs < fx) {
        for (std::size_t i = 0; i < dim; ++i) x[i] += s * dir[i];
        fx = fs;
      }
    }
    if (*std::max_element(h.begin(), h.end()) < opts.min_step) break;
    if (fx >= f_start && len == 0 &&
        *std::max_element(h.begin(), h.end()) < opts.min_step * 1e3)
      break;
  }
  res.x = std::move(x);
  res.value = fx;
  return res;
}

Su2Minimum refine_su2(const std::function<double(const SingleQubitUnitary&)>& f,
                      const SingleQubitUnitary& g0, const DescentOptions& opts) {
  Su2Minimum out{g0, f(g0), 1};
  double step = opts.initial_step;
  for (int round = 0; round < opts.max_sweeps && out.value > opts.target;
       ++round) {
    const SingleQubitUnitary centre = out.g;
    auto local = [&](std::span<const double> d) {
      Vec3 v(d[0], d[1], d[2]);
      return f(SingleQubitUnitary::rotation(v, v.norm()) * centre);
    };
    DescentOptions inner = opts;
    inner.initial_step = step;
    inner.max_sweeps = 4;
    auto r = coordinate_descent(local, {0.0, 0.0, 0.0}, inner);
    out.evaluations += r.evaluations;
    Vec3 v(r.x[0], r.x[1], r.x[2]);
    if (r.value < out.value) {
      out.g = SingleQubitUnitary::rotation(v, v.norm()) * centre;
      out.value = r.value;
    }
    const double moved = v.norm();
    step = std::max(2 * moved, step / 8);
    if (step < opts.min_step) break;
  }
  return out;
}

std::vector<std::array<double, 3>> euler_lattice(int n_alpha, int n_beta,
                                                 int n_gamma) {
  std::vector<std::array<double, 3>> pts;
  pts.reserve(static_cast<std::size_t>(n_alpha) * n_beta * n_gamma);
  for (int i = 0; i < n_alpha; ++i)
    for (int j = 0; j < n_beta; ++j)
      for (int k = 0; k < n_gamma; ++k)
        pts.push_back({2 * kPi * i / n_alpha,
                       n_beta > 1 ? kPi * j / (n_beta - 1) : 0.0,
                       2 * kPi * k / n_gamma});
  return pts;
}

}  // namespace symlu
