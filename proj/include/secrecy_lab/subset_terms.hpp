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
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secrecy_lab {

inline constexpr std::size_t max_subset_ground_set = 20;

/*!
  One signed term of the expansion

      prod_k (1 - exp(-x w_k)) = sum_{S} (-1)^{|S|} exp(-x sum_{k in S} w_k)

  over all subsets S of the ground set {0, ..., n-1}.
*/
struct SubsetTerm {
  std::uint32_t mask = 0;
  int cardinality = 0;
  int sign = 1;
  double inv_gain_sum = 0.0;

  friend auto operator==(const SubsetTerm&, const SubsetTerm&) -> bool = default;
};

namespace detail {

inline void check_ground_set(std::size_t n) {
  if (n > max_subset_ground_set) {
    throw std::length_error("subset enumeration over " + std::to_string(n) +
                            " elements exceeds the cap of " +
                            std::to_string(max_subset_ground_set));
  }
}

}  // namespace detail

/*!
  Weight sums for every mask in ascending order; entry m holds the sum of
  weights[k] over the set bits k of m. Built incrementally from the mask with
  its lowest bit cleared.
*/
template <typename Real>
auto subset_sums_as(std::span<const double> weights) -> std::vector<Real> {
  detail::check_ground_set(weights.size());
  const std::size_t count = std::size_t{1} << weights.size();
  std::vector<Real> sums(count, Real{0});
  for (std::size_t mask = 1; mask < count; ++mask) {
    const auto low = static_cast<std::size_t>(std::countr_zero(mask));
    sums[mask] = sums[mask & (mask - 1)] + static_cast<Real>(weights[low]);
  }
  return sums;
}

inline auto subset_sums(std::span<const double> weights) -> std::vector<double> {
  return subset_sums_as<double>(weights);
}

/// All 2^n terms in ascending mask order, including the empty subset.
inline auto enumerate_subset_terms(std::span<const double> weights) -> std::vector<SubsetTerm> {
  const auto sums = subset_sums(weights);
  std::vector<SubsetTerm> terms;
  terms.reserve(sums.size());
  for (std::size_t mask = 0; mask < sums.size(); ++mask) {
    const int card = std::popcount(mask);
    terms.push_back(SubsetTerm{static_cast<std::uint32_t>(mask), card, (card % 2 == 0) ? 1 : -1,
                               sums[mask]});
  }
  return terms;
}

}  // namespace secrecy_lab
