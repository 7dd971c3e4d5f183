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
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace secrecy_lab {

inline auto db_to_linear(double db) -> double { return std::pow(10.0, db / 10.0); }
inline auto linear_to_db(double linear) -> double { return 10.0 * std::log10(linear); }

/// Dense row-major matrix, one row per user and one column per eavesdropper.
class GainMatrix {
 public:
  GainMatrix() = default;
  GainMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_{rows}, cols_{cols}, data_(rows * cols, fill) {}

  [[nodiscard]] auto rows() const -> std::size_t { return rows_; }
  [[nodiscard]] auto cols() const -> std::size_t { return cols_; }

  auto operator()(std::size_t r, std::size_t c) -> double& { return data_[r * cols_ + c]; }
  auto operator()(std::size_t r, std::size_t c) const -> double { return data_[r * cols_ + c]; }

  [[nodiscard]] auto row(std::size_t r) const -> std::span<const double> {
    return {data_.data() + r * cols_, cols_};
  }
  auto row(std::size_t r) -> std::span<double> { return {data_.data() + r * cols_, cols_}; }

  [[nodiscard]] auto values() const -> std::span<const double> { return data_; }
  auto values() -> std::span<double> { return data_; }

  friend auto operator==(const GainMatrix&, const GainMatrix&) -> bool = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/*!
  Full parameterization of the uplink: M users transmitting to a base station
  while N uncoordinated eavesdroppers listen.

  Gains are averages of the squared fading amplitude (the mean of the
  exponential distribution under Rayleigh fading). Powers and noise share one
  arbitrary unit; only ratios matter.
*/
struct SystemConfig {
  std::size_t num_users = 1;
  std::size_t num_eves = 1;
  std::vector<double> sigma2_main;  // per user, user -> BS
  GainMatrix sigma2_eve;            // users x eavesdroppers
  std::vector<double> power;        // per user
  double noise = 1.0;
  double secrecy_rate = 0.0;  // bits/s/Hz

  /// Throws std::invalid_argument naming the first offending field.
  void validate() const {
    if (num_users < 1) throw std::invalid_argument("num_users: must be >= 1");
    if (num_eves < 1) throw std::invalid_argument("num_eves: must be >= 1");
    if (sigma2_main.size() != num_users) {
      throw std::invalid_argument("sigma2_main: expected " + std::to_string(num_users) +
                                  " entries, got " + std::to_string(sigma2_main.size()));
    }
    if (power.size() != num_users) {
      throw std::invalid_argument("power: expected " + std::to_string(num_users) +
                                  " entries, got " + std::to_string(power.size()));
    }
    if (sigma2_eve.rows() != num_users || sigma2_eve.cols() != num_eves) {
      throw std::invalid_argument("sigma2_eve: expected " + std::to_string(num_users) + "x" +
                                  std::to_string(num_eves) + " matrix, got " +
                                  std::to_string(sigma2_eve.rows()) + "x" +
                                  std::to_string(sigma2_eve.cols()));
    }
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!std::ranges::all_of(sigma2_main, positive))
      throw std::invalid_argument("sigma2_main: entries must be finite and > 0");
    if (!std::ranges::all_of(sigma2_eve.values(), positive))
      throw std::invalid_argument("sigma2_eve: entries must be finite and > 0");
    if (!std::ranges::all_of(power, positive))
      throw std::invalid_argument("power: entries must be finite and > 0");
    if (!positive(noise)) throw std::invalid_argument("noise: must be finite and > 0");
    if (!std::isfinite(secrecy_rate) || secrecy_rate < 0.0)
      throw std::invalid_argument("secrecy_rate: must be finite and >= 0");
  }

  void check_user(std::size_t user) const {
    if (user >= num_users) {
      throw std::out_of_range("user index " + std::to_string(user) + " out of range [0, " +
                              std::to_string(num_users) + ")");
    }
  }

  /*!
    Homogeneous system: unit main gain and unit noise, eavesdropper gain set by
    the main-to-eavesdropper ratio and transmit power by the transmit SNR.
    Both ratios are given in dB (x_dB = 10 log10 x).
  */
  static auto homogeneous(std::size_t users, std::size_t eves, double mer_db, double gamma_db,
                          double rate) -> SystemConfig {
    SystemConfig c;
    c.num_users = users;
    c.num_eves = eves;
    c.sigma2_main.assign(users, 1.0);
    c.sigma2_eve = GainMatrix(users, eves, 1.0 / db_to_linear(mer_db));
    c.power.assign(users, db_to_linear(gamma_db));
    c.noise = 1.0;
    c.secrecy_rate = rate;
    c.validate();
    return c;
  }
};

/// One draw of every instantaneous squared channel gain.
struct ChannelRealization {
  std::vector<double> gain_main;  // |h_ib|^2
  GainMatrix gain_eve;            // |h_ie_j|^2

  ChannelRealization() = default;
  ChannelRealization(std::size_t users, std::size_t eves)
      : gain_main(users, 0.0), gain_eve(users, eves, 0.0) {}
  explicit ChannelRealization(const SystemConfig& config)
      : ChannelRealization(config.num_users, config.num_eves) {}
};

/// log2(1 + gain * power / noise).
inline auto channel_capacity(double gain, double power, double noise) -> double {
  if (!std::isfinite(gain) || gain < 0.0)
    throw std::invalid_argument("channel_capacity: gain must be finite and >= 0");
  if (!std::isfinite(power) || power <= 0.0)
    throw std::invalid_argument("channel_capacity: power must be finite and > 0");
  if (!std::isfinite(noise) || noise <= 0.0)
    throw std::invalid_argument("channel_capacity: noise must be finite and > 0");
  return std::log2(1.0 + gain * power / noise);
}

/// Capacity of the strongest eavesdropper overhearing `user`.
inline auto wiretap_capacity(const ChannelRealization& realization, const SystemConfig& config,
                             std::size_t user) -> double {
  config.check_user(user);
  double best = 0.0;
  for (const double g : realization.gain_eve.row(user)) {
    best = std::max(best, channel_capacity(g, config.power[user], config.noise));
  }
  return best;
}

/// Main-channel capacity minus wiretap capacity; negative when an eavesdropper
/// sees a stronger channel than the base station.
inline auto secrecy_capacity(const ChannelRealization& realization, const SystemConfig& config,
                             std::size_t user) -> double {
  config.check_user(user);
  return channel_capacity(realization.gain_main[user], config.power[user], config.noise) -
         wiretap_capacity(realization, config, user);
}

/// Main-gain threshold (2^Rs - 1) N0 / P_i below which user i is in outage
/// regardless of the eavesdroppers.
inline auto theta(const SystemConfig& config, std::size_t user) -> double {
  config.check_user(user);
  return std::expm1(config.secrecy_rate * std::numbers::ln2) * config.noise / config.power[user];
}

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit generator.
template <typename Generator>
auto uniform_unit(Generator& gen) -> double {
  static_assert(Generator::max() - Generator::min() == UINT64_MAX,
                "uniform_unit needs a full 64-bit generator");
  return static_cast<double>((gen() - Generator::min()) >> 11) * 0x1.0p-53;
}

/// Exponential draw with the given mean by inverse transform: -mean * ln(1 - u).
template <typename Generator>
auto sample_exponential(double mean, Generator& gen) -> double {
  return -mean * std::log1p(-uniform_unit(gen));
}

/*!
  Fills `out` with one Rayleigh-fading realization. Draw order is fixed: the M
  main gains, then the eavesdropper gains row by row.
*/
template <typename Generator>
void sample_realization(const SystemConfig& config, Generator& gen, ChannelRealization& out) {
  if (out.gain_main.size() != config.num_users || out.gain_eve.rows() != config.num_users ||
      out.gain_eve.cols() != config.num_eves) {
    out = ChannelRealization(config);
  }
  for (std::size_t i = 0; i < config.num_users; ++i) {
    out.gain_main[i] = sample_exponential(config.sigma2_main[i], gen);
  }
  for (std::size_t i = 0; i < config.num_users; ++i) {
    for (std::size_t j = 0; j < config.num_eves; ++j) {
      out.gain_eve(i, j) = sample_exponential(config.sigma2_eve(i, j), gen);
    }
  }
}

template <typename Generator>
auto sample_realization(const SystemConfig& config, Generator& gen) -> ChannelRealization {
  ChannelRealization out(config);
  sample_realization(config, gen, out);
  return out;
}

}  // namespace secrecy_lab
