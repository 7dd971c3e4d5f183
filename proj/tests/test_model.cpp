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
#include <random>

#include "secrecy_lab/model.hpp"

using namespace secrecy_lab;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

auto single_pair(double main_gain, std::vector<double> eve_gains) {
  SystemConfig c;
  c.num_users = 1;
  c.num_eves = eve_gains.size();
  c.sigma2_main = {1.0};
  c.sigma2_eve = GainMatrix(1, eve_gains.size(), 1.0);
  c.power = {1.0};
  c.noise = 1.0;
  ChannelRealization r(c);
  r.gain_main[0] = main_gain;
  for (std::size_t j = 0; j < eve_gains.size(); ++j) r.gain_eve(0, j) = eve_gains[j];
  return std::pair{c, r};
}

}  // namespace

TEST_CASE("channel_capacity", "[model]") {
  CHECK(channel_capacity(0, 1, 1) == 0.0);
  CHECK(channel_capacity(1, 1, 1) == 1.0);
  CHECK(channel_capacity(3, 1, 1) == 2.0);
  CHECK_THROWS_AS(channel_capacity(-1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(channel_capacity(1, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(channel_capacity(1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(channel_capacity(NAN, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(channel_capacity(1, INFINITY, 1), std::invalid_argument);
}

TEST_CASE("wiretap_capacity takes the strongest eavesdropper", "[model]") {
  {
    auto [c, r] = single_pair(1.0, {0.0, 0.0});
    CHECK(wiretap_capacity(r, c, 0) == 0.0);
  }
  {
    auto [c, r] = single_pair(1.0, {1.0, 3.0});
    CHECK(wiretap_capacity(r, c, 0) == 2.0);
  }
  {
    auto [c, r] = single_pair(1.0, {0.7});
    CHECK(wiretap_capacity(r, c, 0) == channel_capacity(0.7, 1, 1));
    CHECK_THROWS_AS(wiretap_capacity(r, c, 1), std::out_of_range);
  }
}

TEST_CASE("secrecy_capacity", "[model]") {
  {
    auto [c, r] = single_pair(0.4, {0.4});
    CHECK(secrecy_capacity(r, c, 0) == 0.0);
  }
  {
    auto [c, r] = single_pair(3.0, {1.0});
    CHECK(secrecy_capacity(r, c, 0) == 1.0);
  }
  {
    auto [c, r] = single_pair(0.0, {0.2});
    CHECK(secrecy_capacity(r, c, 0) < 0.0);
    CHECK_THROWS_AS(secrecy_capacity(r, c, 3), std::out_of_range);
  }
}

TEST_CASE("theta", "[model]") {
  auto c = SystemConfig::homogeneous(1, 1, 10.0, 10.0, 0.0);
  CHECK(theta(c, 0) == 0.0);

  c.secrecy_rate = 1.0;
  c.power = {2.5};
  c.noise = 2.5;
  CHECK(theta(c, 0) == 1.0);

  c = SystemConfig::homogeneous(1, 1, 10.0, 10.0, 0.5);
  CHECK_THAT(theta(c, 0), WithinRel((std::sqrt(2.0) - 1.0) / 10.0, 1e-14));
  CHECK_THAT(theta(c, 0), WithinAbs(0.041421356237309504, 1e-16));
  CHECK_THROWS_AS(theta(c, 1), std::out_of_range);
}

TEST_CASE("homogeneous config honours the dB ratios", "[model]") {
  for (double mer : {-5.0, 0.0, 7.5, 30.0}) {
    for (double gamma : {0.0, 10.0, 23.0}) {
      const auto c = SystemConfig::homogeneous(3, 2, mer, gamma, 1.0);
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          CHECK_THAT(c.sigma2_main[i] / c.sigma2_eve(i, j), WithinRel(std::pow(10.0, mer / 10), 1e-13));
        }
        CHECK_THAT(c.power[i] / c.noise, WithinRel(std::pow(10.0, gamma / 10), 1e-13));
      }
    }
  }
  CHECK_THAT(linear_to_db(db_to_linear(13.0)), WithinAbs(13.0, 1e-12));
}

TEST_CASE("config validation names the field", "[model]") {
  auto good = SystemConfig::homogeneous(2, 2, 10, 10, 0.5);
  REQUIRE_NOTHROW(good.validate());

  auto bad = good;
  bad.noise = -1;
  CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("noise"));
  bad = good;
  bad.sigma2_eve = GainMatrix(3, 2, 1.0);
  CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("2x2"));
  bad = good;
  bad.power = {1.0};
  CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("power"));
  bad = good;
  bad.secrecy_rate = -0.1;
  CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("secrecy_rate"));
  bad = good;
  bad.sigma2_main[1] = 0.0;
  CHECK_THROWS_WITH(bad.validate(), Catch::Matchers::ContainsSubstring("sigma2_main"));
}

TEST_CASE("secrecy capacity identity and wiretap monotonicity on random draws", "[model][property]") {
  std::mt19937_64 gen(7);
  SystemConfig c = SystemConfig::homogeneous(3, 4, 3.0, 12.0, 0.5);
  c.power = {1.0, 4.0, 0.3};
  c.sigma2_eve(1, 2) = 2.0;
  for (int k = 0; k < 2000; ++k) {
    auto r = sample_realization(c, gen);
    for (std::size_t i = 0; i < c.num_users; ++i) {
      const double expected =
          channel_capacity(r.gain_main[i], c.power[i], c.noise) - wiretap_capacity(r, c, i);
      CHECK(secrecy_capacity(r, c, i) == expected);

      const double before = wiretap_capacity(r, c, i);
      const auto j = static_cast<std::size_t>(k) % c.num_eves;
      r.gain_eve(i, j) += uniform_unit(gen);
      CHECK(wiretap_capacity(r, c, i) >= before);
    }
  }
}

TEST_CASE("sampled gains are exponential with the configured means", "[model][statistics]") {
  SystemConfig c;
  c.num_users = 2;
  c.num_eves = 2;
  c.sigma2_main = {1.0, 3.0};
  c.sigma2_eve = GainMatrix(2, 2);
  c.sigma2_eve(0, 0) = 0.1;
  c.sigma2_eve(0, 1) = 0.5;
  c.sigma2_eve(1, 0) = 2.0;
  c.sigma2_eve(1, 1) = 0.01;
  c.power = {1.0, 1.0};

  std::mt19937_64 gen(2024);
  ChannelRealization r(c);
  constexpr int draws = 1'000'000;
  std::vector<double> main_sum(2, 0.0);
  GainMatrix eve_sum(2, 2, 0.0);
  int below_mean = 0;
  for (int t = 0; t < draws; ++t) {
    sample_realization(c, gen, r);
    for (std::size_t i = 0; i < 2; ++i) {
      REQUIRE(r.gain_main[i] >= 0.0);
      main_sum[i] += r.gain_main[i];
      for (std::size_t j = 0; j < 2; ++j) eve_sum(i, j) += r.gain_eve(i, j);
    }
    below_mean += r.gain_main[0] < 1.0;
  }
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK_THAT(main_sum[i] / draws, WithinRel(c.sigma2_main[i], 0.01));
    for (std::size_t j = 0; j < 2; ++j) {
      CHECK_THAT(eve_sum(i, j) / draws, WithinRel(c.sigma2_eve(i, j), 0.01));
    }
  }
  // Exponential CDF at the mean is 1 - 1/e.
  CHECK_THAT(static_cast<double>(below_mean) / draws, WithinAbs(1.0 - std::exp(-1.0), 0.002));
}

TEST_CASE("uniform_unit stays in [0, 1)", "[model]") {
  struct Extremes {
    using result_type = std::uint64_t;
    static constexpr auto min() -> result_type { return 0; }
    static constexpr auto max() -> result_type { return UINT64_MAX; }
    result_type next = UINT64_MAX;
    auto operator()() -> result_type {
      const auto v = next;
      next = 0;
      return v;
    }
  } gen;
  const double top = uniform_unit(gen);
  CHECK(top < 1.0);
  CHECK(top > 0.999999);
  CHECK(uniform_unit(gen) == 0.0);
  CHECK(std::isfinite(sample_exponential(1.0, gen)));
}
