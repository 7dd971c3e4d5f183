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

#include <bit>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "model.hpp"
#include "outage_result.hpp"
#include "subset_terms.hpp"
#include "summation.hpp"

// Exact secrecy outage probabilities over independent Rayleigh fading.
//
// Both schemes reduce to integrals of products of exponential CDFs against an
// exponential density. The products are expanded over subsets (signed
// inclusion-exclusion terms) and each term integrates in closed form, so the
// cost is exponential in the number of eavesdroppers (and, for max-gain
// scheduling, in the number of users).

namespace secrecy_lab {

inline constexpr std::size_t max_roundrobin_eves = 20;
inline constexpr std::size_t max_proposed_users = 16;
inline constexpr std::size_t max_proposed_eves = 16;
inline constexpr std::size_t max_proposed_work_log2 = 28;

/// Working precision for the expansions. The signed terms are O(1) while the
/// result can be ~1e-6, so double alone loses about six digits to cancellation.
using WideReal = long double;

namespace detail {

/// 1 / (2^Rs sigma2_ie_j) for each eavesdropper overhearing `user`.
inline auto eve_weights(const SystemConfig& config, std::size_t user) -> std::vector<double> {
  const double scale = std::exp2(config.secrecy_rate);
  std::vector<double> w;
  w.reserve(config.num_eves);
  for (const double s : config.sigma2_eve.row(user)) w.push_back(1.0 / (scale * s));
  return w;
}

inline auto parity_sign(std::size_t mask) -> WideReal {
  return (std::popcount(mask) % 2 == 0) ? WideReal{1} : WideReal{-1};
}

}  // namespace detail

/*!
  Outage probability of user `user` when it is the one transmitting:

      P_out,i = 1 - exp(-theta_i / s_ib) * sum_{E_n} (-1)^{|E_n|} / (1 + sum_{j in E_n} s_ib / (2^Rs s_ie_j))

  where the sum covers every subset of the eavesdroppers, the empty one included.
*/
inline auto roundrobin_user_outage(const SystemConfig& config, std::size_t user) -> OutageResult {
  config.validate();
  config.check_user(user);
  if (config.num_eves > max_roundrobin_eves) {
    throw std::length_error("roundrobin_user_outage: N=" + std::to_string(config.num_eves) +
                            " exceeds the enumeration cap of " + std::to_string(max_roundrobin_eves));
  }
  const WideReal s_ib = config.sigma2_main[user];
  const auto sums = subset_sums_as<WideReal>(detail::eve_weights(config, user));
  const WideReal decay = std::exp(-static_cast<WideReal>(theta(config, user)) / s_ib);

  NeumaierSum<WideReal> acc(1);
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    acc -= decay * detail::parity_sign(mask) / (1 + s_ib * sums[mask]);
  }
  return make_probability_result(static_cast<double>(acc.value()), Method::ClosedForm);
}

/// Round-robin outage: the average of the per-user outage probabilities.
inline auto roundrobin_outage(const SystemConfig& config) -> OutageResult {
  config.validate();
  NeumaierSum<> acc;
  for (std::size_t i = 0; i < config.num_users; ++i) {
    acc += roundrobin_user_outage(config, i).probability;
  }
  return make_probability_result(acc.value() / static_cast<double>(config.num_users),
                                 Method::ClosedForm);
}

/// Throws std::length_error when max-gain scheduling is too large to enumerate.
inline void check_proposed_budget(const SystemConfig& config) {
  const auto m = config.num_users;
  const auto n = config.num_eves;
  const auto where = "proposed_outage (M=" + std::to_string(m) + ", N=" + std::to_string(n) + "): ";
  if (m > max_proposed_users) {
    throw std::length_error(where + "M exceeds the cap of " + std::to_string(max_proposed_users));
  }
  if (n > max_proposed_eves) {
    throw std::length_error(where + "N exceeds the cap of " + std::to_string(max_proposed_eves));
  }
  // M * 2^(M-1) * 2^N <= 2^28
  const auto work = static_cast<unsigned long long>(m) << (m - 1 + n);
  if (work > (1ULL << max_proposed_work_log2)) {
    throw std::length_error(where + "M*2^(M-1)*2^N = " + std::to_string(work) +
                            " exceeds the work budget of 2^" +
                            std::to_string(max_proposed_work_log2));
  }
}

/*!
  Outage probability under max-gain scheduling, where the user with the
  strongest instantaneous main channel transmits.

  For each user i the outage event splits into the scheduled user's main gain
  falling below theta_i (connection outage) and the strongest eavesdropper
  beating the main channel above it. With U_m ranging over subsets of the
  other users, S_m = sum_{k in U_m} 1/s_kb and A_n = sum_{j in E_n} 1/(2^Rs s_ie_j):

      sum_i sum_m (-1)^{|U_m|} / (1 + s_ib S_m) * (1 - exp(-theta_i S_m - theta_i / s_ib))
    + sum_i sum_m sum_{E_n != {}} (-1)^{|U_m|+|E_n|+1} / (1 + s_ib A_n + s_ib S_m)
                                  * exp(-theta_i S_m - theta_i / s_ib)

  Per-user powers enter only through theta_i.
*/
inline auto proposed_outage(const SystemConfig& config) -> OutageResult {
  config.validate();
  check_proposed_budget(config);

  NeumaierSum<WideReal> acc;
  std::vector<double> other_weights;
  other_weights.reserve(config.num_users);
  for (std::size_t i = 0; i < config.num_users; ++i) {
    other_weights.clear();
    for (std::size_t k = 0; k < config.num_users; ++k) {
      if (k != i) other_weights.push_back(1.0 / config.sigma2_main[k]);
    }
    const auto user_sums = subset_sums_as<WideReal>(other_weights);
    const auto eve_sums = subset_sums_as<WideReal>(detail::eve_weights(config, i));
    const WideReal s_ib = config.sigma2_main[i];
    const WideReal th = theta(config, i);

    for (std::size_t m = 0; m < user_sums.size(); ++m) {
      const WideReal sm = user_sums[m];
      const WideReal sign_m = detail::parity_sign(m);
      const WideReal exponent = -th * sm - th / s_ib;
      acc += sign_m / (1 + s_ib * sm) * -std::expm1(exponent);

      const WideReal decay = std::exp(exponent);
      for (std::size_t n = 1; n < eve_sums.size(); ++n) {
        // (-1)^{|U_m| + |E_n| + 1}
        const WideReal sign = -sign_m * detail::parity_sign(n);
        acc += sign * decay / (1 + s_ib * eve_sums[n] + s_ib * sm);
      }
    }
  }
  return make_probability_result(static_cast<double>(acc.value()), Method::ClosedForm);
}

}  // namespace secrecy_lab
