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
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace secrecy_lab {

enum class Method { ClosedForm, MonteCarlo, Quadrature };

inline auto to_string(Method m) -> std::string_view {
  switch (m) {
    case Method::ClosedForm: return "closed_form";
    case Method::MonteCarlo: return "monte_carlo";
    case Method::Quadrature: return "quadrature";
  }
  return "unknown";
}

/// A secrecy outage probability together with how it was obtained.
struct OutageResult {
  double probability = 0.0;
  Method method = Method::ClosedForm;
  std::optional<std::uint64_t> trials;  // Monte Carlo only
  std::optional<double> std_error;      // Monte Carlo only
  bool clamped = false;
};

/// Largest excursion outside [0, 1] that is attributed to rounding.
inline constexpr double probability_slack = 1e-9;

/*!
  Wraps a raw analytic or numeric probability. Values within
  `probability_slack` of [0, 1] are clamped and flagged; anything further out
  throws std::range_error.
*/
inline auto make_probability_result(double raw, Method method) -> OutageResult {
  if (!std::isfinite(raw) || raw < -probability_slack || raw > 1.0 + probability_slack) {
    std::ostringstream msg;
    msg.precision(17);
    msg << to_string(method) << " probability " << raw << " lies outside [0, 1]";
    throw std::range_error(msg.str());
  }
  OutageResult r;
  r.method = method;
  r.probability = raw;
  if (raw < 0.0) {
    r.probability = 0.0;
    r.clamped = true;
  } else if (raw > 1.0) {
    r.probability = 1.0;
    r.clamped = true;
  }
  return r;
}

/// Monte Carlo estimate from an outage count with std error sqrt(p(1-p)/T).
inline auto make_estimate_result(std::uint64_t outages, std::uint64_t trials) -> OutageResult {
  if (trials == 0) throw std::invalid_argument("trials: must be >= 1");
  const double p = static_cast<double>(outages) / static_cast<double>(trials);
  OutageResult r;
  r.method = Method::MonteCarlo;
  r.probability = p;
  r.trials = trials;
  r.std_error = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  return r;
}

}  // namespace secrecy_lab
