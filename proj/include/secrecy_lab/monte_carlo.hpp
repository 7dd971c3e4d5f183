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

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "model.hpp"
#include "outage_result.hpp"
#include "parallel.hpp"

namespace secrecy_lab {

enum class Policy { RoundRobin, MaxGain };

inline auto to_string(Policy p) -> std::string_view {
  return p == Policy::RoundRobin ? "round_robin" : "max_gain";
}

struct SimulationSpec {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  Policy policy = Policy::RoundRobin;
  std::uint64_t block_size = 65536;
};

struct SimulationReport {
  std::uint64_t trials = 0;
  std::uint64_t outages = 0;
  std::vector<std::uint64_t> scheduled;  // trials in which each user transmitted
};

/*!
  Generator for block `block` of a simulation seeded with `seed`. The stream
  depends only on (seed, block), never on which worker runs the block.
*/
inline auto block_generator(std::uint64_t seed, std::uint64_t block) -> std::mt19937_64 {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
  return std::mt19937_64(seq);
}

/// Index of the strongest main channel; ties go to the lowest index.
inline auto max_gain_user(const ChannelRealization& realization) -> std::size_t {
  std::size_t best = 0;
  for (std::size_t i = 1; i < realization.gain_main.size(); ++i) {
    if (realization.gain_main[i] > realization.gain_main[best]) best = i;
  }
  return best;
}

/*!
  Direct event simulation. Trial t draws a full realization and schedules
  user t mod M (round-robin) or the strongest main channel (max-gain); it is
  an outage when that user's secrecy capacity falls below the target rate.

  Trials are cut into blocks of `block_size`, each with its own generator, and
  block tallies are reduced in block order, so the report is identical for
  any thread count.
*/
inline auto simulate_detailed(const SystemConfig& config, const SimulationSpec& spec,
                              unsigned threads = 0) -> SimulationReport {
  config.validate();
  if (spec.trials == 0) throw std::invalid_argument("trials: must be >= 1");
  if (spec.block_size == 0) throw std::invalid_argument("block_size: must be >= 1");

  const std::uint64_t blocks = (spec.trials + spec.block_size - 1) / spec.block_size;
  const std::size_t users = config.num_users;
  std::vector<SimulationReport> tallies(blocks);

  parallel_for(blocks, threads, [&](std::size_t b) {
    auto gen = block_generator(spec.seed, b);
    ChannelRealization draw(config);
    SimulationReport& tally = tallies[b];
    tally.scheduled.assign(users, 0);
    const std::uint64_t first = b * spec.block_size;
    const std::uint64_t last = std::min(spec.trials, first + spec.block_size);
    for (std::uint64_t t = first; t < last; ++t) {
      sample_realization(config, gen, draw);
      const std::size_t s = spec.policy == Policy::RoundRobin
                                ? static_cast<std::size_t>(t % users)
                                : max_gain_user(draw);
      ++tally.scheduled[s];
      if (secrecy_capacity(draw, config, s) < config.secrecy_rate) ++tally.outages;
    }
    tally.trials = last - first;
  });

  SimulationReport total;
  total.scheduled.assign(users, 0);
  for (const auto& tally : tallies) {
    total.trials += tally.trials;
    total.outages += tally.outages;
    for (std::size_t i = 0; i < users; ++i) total.scheduled[i] += tally.scheduled[i];
  }
  return total;
}

inline auto simulate_outage(const SystemConfig& config, const SimulationSpec& spec,
                            unsigned threads = 0) -> OutageResult {
  const auto report = simulate_detailed(config, spec, threads);
  return make_estimate_result(report.outages, report.trials);
}

}  // namespace secrecy_lab
