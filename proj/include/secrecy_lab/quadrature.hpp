// SPDX-License-Identifier: Apache-2.0
//
// secrecy-lab: secrecy outage analysis for multi-user wiretap uplinks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace secrecy_lab {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

struct SimpsonOptions {
  double tolerance = 1e-10;  // absolute, over the whole range
  int max_depth = 50;
};

namespace detail {

template <typename F>
class SimpsonIntegrator {
 public:
  SimpsonIntegrator(const F& f, int max_depth) : f_{f}, max_depth_{max_depth} {}

  auto integrate(double a, double b, double tol) -> QuadratureResult {
    const double fa = eval(a);
    const double fb = eval(b);
    const double m = 0.5 * (a + b);
    const double fm = eval(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    double err = 0.0;
    const double value = recurse(a, b, fa, fm, fb, whole, tol, 0, err);
    return {value, err, evaluations_};
  }

 private:
  auto eval(double x) -> double {
    ++evaluations_;
    return f_(x);
  }

  auto recurse(double a, double b, double fa, double fm, double fb, double whole, double tol,
               int depth, double& err) -> double {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
      err += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth_) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "adaptive Simpson did not converge on [" << a << ", " << b << "] within "
          << max_depth_ << " subdivisions";
      throw std::runtime_error(msg.str());
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, err) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, err);
  }

  const F& f_;
  int max_depth_;
  int evaluations_ = 0;
};

}  // namespace detail

/// Adaptive Simpson with Richardson correction. Throws std::runtime_error if a
/// subinterval is still unresolved at the depth limit.
template <typename F>
auto adaptive_simpson(const F& f, double a, double b, SimpsonOptions opts = {}) -> QuadratureResult {
  if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: need a <= b");
  if (a == b) return {};
  return detail::SimpsonIntegrator<F>(f, opts.max_depth).integrate(a, b, opts.tolerance);
}

/*!
  Integrates over [a, b] split at the given interior breakpoints, sharing the
  tolerance evenly between panels. Breakpoints outside (a, b) are ignored.

  Placing breakpoints at the integrand's characteristic length scales keeps a
  narrow feature near an endpoint from forcing the whole range to full depth.
*/
template <typename F>
auto integrate_panels(const F& f, double a, double b, std::vector<double> breakpoints,
                      SimpsonOptions opts = {}) -> QuadratureResult {
  if (!(b >= a)) throw std::invalid_argument("integrate_panels: need a <= b");
  if (a == b) return {};
  std::erase_if(breakpoints, [&](double x) { return !(x > a && x < b); });
  breakpoints.push_back(a);
  breakpoints.push_back(b);
  std::ranges::sort(breakpoints);
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()), breakpoints.end());

  const auto panels = breakpoints.size() - 1;
  SimpsonOptions panel_opts = opts;
  panel_opts.tolerance = opts.tolerance / static_cast<double>(panels);

  QuadratureResult total;
  for (std::size_t p = 0; p < panels; ++p) {
    const auto part = adaptive_simpson(f, breakpoints[p], breakpoints[p + 1], panel_opts);
    total.value += part.value;
    total.error_estimate += part.error_estimate;
    total.evaluations += part.evaluations;
  }
  return total;
}

}  // namespace secrecy_lab
