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

namespace secrecy_lab {

/*!
  Neumaier's variant of Kahan summation.

  Unlike plain Kahan, the compensation stays correct when the incoming term is
  larger in magnitude than the running sum, which is the common case in the
  alternating inclusion-exclusion series evaluated by this library.
*/
template <typename Value = double>
class NeumaierSum {
 public:
  constexpr NeumaierSum() = default;
  constexpr explicit NeumaierSum(Value initial) : sum_{initial} {}

  constexpr auto operator+=(Value value) -> NeumaierSum& {
    const Value t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr auto operator-=(Value value) -> NeumaierSum& { return *this += -value; }

  [[nodiscard]] constexpr auto value() const -> Value { return sum_ + compensation_; }

 private:
  Value sum_{0};
  Value compensation_{0};
};

}  // namespace secrecy_lab
