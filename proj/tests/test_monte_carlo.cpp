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


#include <catch_amalgamated.hpp>

#include <cmath>

#include "secrecy_lab/closed_form.hpp"
#include "secrecy_lab/monte_carlo.hpp"

using namespace secrecy_lab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

auto within_3se(const OutageResult& mc, double exact) -> bool {
  return std::abs(mc.probability - exact) <= 3.0 * mc.std_error.value();
}

}  // namespace

TEST_CASE("no outage when eavesdroppers see nothing and Rs = 0", "[monte_carlo]") {
  auto c = SystemConfig::homogeneous(3, 2, 0, 10, 0);
  for (auto& v : c.sigma2_eve.values()) v = 1e-12;
  for (const auto policy : {Policy::RoundRobin, Policy::MaxGain}) {
    const auto r = simulate_outage(c, {100'000, 42, policy});
    // Trials where the main gain is smaller than ~1e-12 are vanishingly rare.
    CHECK(r.probability == 0.0);
    CHECK(r.std_error == 0.0);
  }
}

TEST_CASE("max-gain symmetry: Pr(Y > max(X1, X2)) = 1/3", "[monte_carlo]") {
  const auto c = SystemConfig::homogeneous(2, 1, 0, 10, 0);
  const auto r = simulate_outage(c, {1'000'000, 42, Policy::MaxGain});
  CHECK(r.method == Method::MonteCarlo);
  CHECK(r.trials == 1'000'000u);
  CHECK(within_3se(r, 1.0 / 3.0));
}

TEST_CASE("simulation matches the closed forms", "[monte_carlo][oracle]") {
  const auto c = SystemConfig::homogeneous(4, 8, 10, 10, 0.5);
  const auto rr = simulate_outage(c, {1'000'000, 42, Policy::RoundRobin});
  const auto pr = simulate_outage(c, {1'000'000, 42, Policy::MaxGain});
  CHECK(within_3se(rr, roundrobin_outage(c).probability));
  CHECK(within_3se(pr, proposed_outage(c).probability));
}

TEST_CASE("heterogeneous round-robin cycles through every user", "[monte_carlo][oracle]") {
  SystemConfig c = SystemConfig::homogeneous(3, 2, 6, 12, 0.8);
  c.sigma2_main = {0.5, 1.0, 3.0};
  c.power = {2.0, 20.0, 8.0};
  c.sigma2_eve(2, 1) = 0.9;
  const auto rep = simulate_detailed(c, {300'001, 9, Policy::RoundRobin, 1000});
  CHECK(rep.scheduled == std::vector<std::uint64_t>{100'001, 100'000, 100'000});
  const auto rr = make_estimate_result(rep.outages, rep.trials);
  CHECK(within_3se(rr, roundrobin_outage(c).probability));
  const auto pr = simulate_outage(c, {300'000, 9, Policy::MaxGain});
  CHECK(within_3se(pr, proposed_outage(c).probability));
}

TEST_CASE("results do not depend on the thread count", "[monte_carlo][property]") {
  const auto c = SystemConfig::homogeneous(4, 3, 5, 10, 1.0);
  const SimulationSpec spec{200'000, 1234, Policy::MaxGain, 4096};
  const auto one = simulate_detailed(c, spec, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    const auto many = simulate_detailed(c, spec, threads);
    CHECK(many.outages == one.outages);
    CHECK(many.scheduled == one.scheduled);
  }
  const auto a = simulate_outage(c, spec, 1);
  const auto b = simulate_outage(c, spec, 8);
  CHECK(a.probability == b.probability);
  CHECK(a.std_error == b.std_error);

  SimulationSpec other = spec;
  other.seed = 1235;
  CHECK(simulate_detailed(c, other, 1).outages != one.outages);
}

TEST_CASE("max-gain scheduling fractions", "[monte_carlo][property]") {
  const std::size_t m = 5;
  const auto c = SystemConfig::homogeneous(m, 2, 10, 10, 0.5);
  const std::uint64_t trials = 500'000;
  const auto rep = simulate_detailed(c, {trials, 77, Policy::MaxGain});
  std::uint64_t total = 0;
  const double p = 1.0 / static_cast<double>(m);
  const double se = std::sqrt(p * (1 - p) / static_cast<double>(trials));
  for (const auto n : rep.scheduled) {
    total += n;
    CHECK(std::abs(static_cast<double>(n) / trials - p) <= 3 * se);
  }
  CHECK(total == trials);
}

TEST_CASE("max_gain_user breaks ties toward the lowest index", "[monte_carlo]") {
  ChannelRealization r(4, 1);
  r.gain_main = {0.5, 2.0, 2.0, 1.0};
  CHECK(max_gain_user(r) == 1);
  r.gain_main = {0.0, 0.0, 0.0, 0.0};
  CHECK(max_gain_user(r) == 0);
}

TEST_CASE("standard error scales as 1/sqrt(T)", "[monte_carlo]") {
  const auto c = SystemConfig::homogeneous(2, 2, 5, 10, 0.5);
  double prev = 1.0;
  for (std::uint64_t t : {10'000u, 40'000u, 160'000u}) {
    const auto r = simulate_outage(c, {t, 5, Policy::RoundRobin});
    CHECK(*r.std_error < prev);
    prev = *r.std_error;
  }
  // On the estimator's formula: same p, doubled T.
  const auto a = make_estimate_result(300, 1000);
  const auto b = make_estimate_result(600, 2000);
  CHECK_THAT(*a.std_error / *b.std_error, WithinRel(std::sqrt(2.0), 1e-12));
}

TEST_CASE("simulation argument errors", "[monte_carlo]") {
  const auto c = SystemConfig::homogeneous(2, 2, 5, 10, 0.5);
  CHECK_THROWS_AS(simulate_outage(c, {0, 1, Policy::RoundRobin}), std::invalid_argument);
  CHECK_THROWS_AS(simulate_outage(c, {10, 1, Policy::RoundRobin, 0}), std::invalid_argument);
  auto bad = c;
  bad.noise = 0;
  CHECK_THROWS_AS(simulate_outage(bad, {10, 1, Policy::RoundRobin}), std::invalid_argument);
}

TEST_CASE("block streams depend only on seed and block", "[monte_carlo]") {
  auto a = block_generator(42, 3);
  auto b = block_generator(42, 3);
  auto c = block_generator(42, 4);
  auto d = block_generator(43, 3);
  const auto x = a();
  CHECK(x == b());
  CHECK(x != c());
  CHECK(x != d());
}
