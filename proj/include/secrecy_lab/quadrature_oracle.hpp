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

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "outage_result.hpp"
#include "quadrature.hpp"

// Numerical oracle: integrates the outage probabilities directly from the
// exponential CDFs and densities, without the subset expansion used by the
// closed forms.

namespace secrecy_lab {

struct OracleQuadratureOptions {
  double tolerance = 1e-10;
  /// The main-gain integral is truncated this many mean gains past its start;
  /// the neglected tail is at most exp(-tail_lifetimes).
  double tail_lifetimes = 50.0;
  int max_depth = 50;
};

namespace detail {

// offset + scale * 4^k, k = -2..3: the integrand changes character within a
// few multiples of each scale and is flat (to ~e^-64) beyond the last point.
inline void add_scale_breakpoints(std::vector<double>& out, double offset, double scale) {
  for (double f : {1.0 / 16.0, 0.25, 1.0, 4.0, 16.0, 64.0}) out.push_back(offset + f * scale);
}

/// prod_j (1 - exp(-(x - theta) / s_j)): probability every eavesdropper stays below (x - theta) / 2^Rs.
/// Tolerance left for the integrator once the truncated tail is charged.
inline auto panel_budget(double tolerance, double tail) -> double {
  if (!(tail < tolerance)) {
    throw std::invalid_argument("tail_lifetimes: truncated tail " + std::to_string(tail) +
                                " exceeds the tolerance " + std::to_string(tolerance));
  }
  return tolerance - tail;
}

inline auto eves_below(std::span<const double> eve_scales, double excess) -> double {
  double p = 1.0;
  for (const double s : eve_scales) p *= -std::expm1(-excess / s);
  return p;
}

inline auto eve_scales(const SystemConfig& config, std::size_t user) -> std::vector<double> {
  const double rate_scale = std::exp2(config.secrecy_rate);
  std::vector<double> s;
  for (const double v : config.sigma2_eve.row(user)) s.push_back(rate_scale * v);
  return s;
}

}  // namespace detail

/*!
  Round-robin outage for one user by quadrature:

      1 - int_theta^inf prod_j (1 - exp(-(x - theta) / (2^Rs s_ie_j))) exp(-x / s_ib) / s_ib dx
*/
inline auto quadrature_roundrobin_user(const SystemConfig& config, std::size_t user,
                                       OracleQuadratureOptions opts = {}) -> OutageResult {
  config.validate();
  config.check_user(user);
  const double s_ib = config.sigma2_main[user];
  const double th = theta(config, user);
  const auto scales = detail::eve_scales(config, user);

  const auto integrand = [&](double x) {
    return detail::eves_below(scales, x - th) * std::exp(-x / s_ib) / s_ib;
  };

  std::vector<double> breaks;
  detail::add_scale_breakpoints(breaks, th, s_ib);
  for (const double s : scales) detail::add_scale_breakpoints(breaks, th, s);

  const double upper = th + opts.tail_lifetimes * s_ib;
  const double tail = std::exp(-upper / s_ib);  // bound on the dropped integral
  const auto q = integrate_panels(integrand, th, upper, std::move(breaks),
                                  {detail::panel_budget(opts.tolerance, tail), opts.max_depth});
  return make_probability_result(1.0 - q.value, Method::Quadrature);
}

/*!
  Max-gain scheduling outage by quadrature. For each user i, with
  F_i(x) = prod_{k != i} (1 - exp(-x / s_kb)) the probability that user i wins
  the scheduling at main gain x and f_i the density of its main gain:

      int_0^theta_i F_i f_i dx
    + int_theta_i^inf (1 - prod_j (1 - exp(-(x - theta_i) / (2^Rs s_ie_j)))) F_i f_i dx
*/
inline auto quadrature_proposed(const SystemConfig& config, OracleQuadratureOptions opts = {})
    -> OutageResult {
  config.validate();
  const std::size_t m = config.num_users;
  const double piece_tolerance = opts.tolerance / static_cast<double>(2 * m);

  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double s_ib = config.sigma2_main[i];
    const double th = theta(config, i);
    const auto scales = detail::eve_scales(config, i);

    const auto wins = [&](double x) {
      double p = 1.0;
      for (std::size_t k = 0; k < m; ++k) {
        if (k != i) p *= -std::expm1(-x / config.sigma2_main[k]);
      }
      return p;
    };
    const auto density = [&](double x) { return std::exp(-x / s_ib) / s_ib; };

    std::vector<double> user_breaks;
    detail::add_scale_breakpoints(user_breaks, 0.0, s_ib);
    for (std::size_t k = 0; k < m; ++k) {
      if (k != i) detail::add_scale_breakpoints(user_breaks, 0.0, config.sigma2_main[k]);
    }

    const auto connection = [&](double x) { return wins(x) * density(x); };
    total += integrate_panels(connection, 0.0, th, user_breaks, {piece_tolerance, opts.max_depth}).value;

    const auto intercepted = [&](double x) {
      return (1.0 - detail::eves_below(scales, x - th)) * wins(x) * density(x);
    };
    auto breaks = user_breaks;
    detail::add_scale_breakpoints(breaks, th, s_ib);
    for (const double s : scales) detail::add_scale_breakpoints(breaks, th, s);
    const double upper = th + opts.tail_lifetimes * s_ib;
    const double tail = std::exp(-upper / s_ib);
    total += integrate_panels(intercepted, th, upper, std::move(breaks),
                              {detail::panel_budget(piece_tolerance, tail), opts.max_depth})
                 .value;
  }
  return make_probability_result(total, Method::Quadrature);
}

}  // namespace secrecy_lab
