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

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "closed_form.hpp"
#include "config_io.hpp"
#include "model.hpp"
#include "monte_carlo.hpp"
#include "parallel.hpp"
#include "quadrature_oracle.hpp"

namespace secrecy_lab {

enum class Scheme { RoundRobin, Proposed };
enum class SweepAxis { MerDb, NumUsers };
enum class Figure { Fig2, Fig3, Fig4 };

inline auto to_string(Scheme s) -> std::string_view {
  return s == Scheme::RoundRobin ? "round_robin" : "proposed";
}

inline auto to_string(SweepAxis a) -> std::string_view {
  return a == SweepAxis::MerDb ? "mer_db" : "num_users";
}

inline auto parse_scheme(std::string_view text) -> Scheme {
  if (text == "round_robin") return Scheme::RoundRobin;
  if (text == "proposed") return Scheme::Proposed;
  throw ParseError("unknown scheme '" + std::string(text) + "' (expected round_robin or proposed)");
}

inline auto policy_for(Scheme s) -> Policy {
  return s == Scheme::RoundRobin ? Policy::RoundRobin : Policy::MaxGain;
}

/// Homogeneous parameters held fixed along a sweep. The swept one is ignored.
struct FixedParams {
  std::size_t num_users = 4;
  double mer_db = 10.0;
  std::size_t num_eves = 4;
  double secrecy_rate = 0.5;  // bits/s/Hz
  double gamma_db = 10.0;
};

struct SweepSpec {
  std::vector<Scheme> schemes{Scheme::RoundRobin, Scheme::Proposed};
  SweepAxis axis = SweepAxis::MerDb;
  std::vector<double> axis_values;
  FixedParams fixed;
  bool with_monte_carlo = false;
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;

  void validate() const {
    if (schemes.empty()) throw std::invalid_argument("schemes: must not be empty");
    if (axis_values.empty()) throw std::invalid_argument("values: must not be empty");
    for (std::size_t k = 1; k < axis_values.size(); ++k) {
      if (!(axis_values[k] > axis_values[k - 1]))
        throw std::invalid_argument("values: must be strictly increasing");
    }
    for (const double v : axis_values) {
      if (!std::isfinite(v)) throw std::invalid_argument("values: must be finite");
      if (axis == SweepAxis::NumUsers && (v < 1.0 || v != std::floor(v)))
        throw std::invalid_argument("values: user counts must be integers >= 1");
    }
    if (with_monte_carlo && trials == 0) throw std::invalid_argument("trials: must be >= 1");
    for (const double v : axis_values) config_at(v).validate();
  }

  /// Homogeneous system at one point of the axis.
  [[nodiscard]] auto config_at(double axis_value) const -> SystemConfig {
    const bool users_axis = axis == SweepAxis::NumUsers;
    const auto users = users_axis ? static_cast<std::size_t>(axis_value) : fixed.num_users;
    const double mer = users_axis ? fixed.mer_db : axis_value;
    return SystemConfig::homogeneous(users, fixed.num_eves, mer, fixed.gamma_db, fixed.secrecy_rate);
  }
};

struct SweepRow {
  Scheme scheme = Scheme::RoundRobin;
  std::size_t num_users = 0;
  std::size_t num_eves = 0;
  double rs_bits = 0.0;
  double gamma_db = 0.0;
  double mer_db = 0.0;
  double p_out_closed = 0.0;
  std::optional<double> p_out_mc;
  std::optional<double> mc_stderr;
  std::optional<std::uint64_t> trials;

  friend auto operator==(const SweepRow&, const SweepRow&) -> bool = default;
};

/// A closed-form value disagreed with the quadrature oracle under --verify.
class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepOptions {
  unsigned threads = 0;  // 0: default_thread_count()
  /// Re-check every closed-form value against the quadrature oracle.
  bool verify = false;
  double verify_tolerance = 1e-8;
};

inline auto closed_form_outage(Scheme scheme, const SystemConfig& config) -> OutageResult {
  return scheme == Scheme::RoundRobin ? roundrobin_outage(config) : proposed_outage(config);
}

inline auto quadrature_outage(Scheme scheme, const SystemConfig& config) -> OutageResult {
  if (scheme == Scheme::Proposed) return quadrature_proposed(config);
  double sum = 0.0;
  for (std::size_t i = 0; i < config.num_users; ++i) {
    sum += quadrature_roundrobin_user(config, i).probability;
  }
  return make_probability_result(sum / static_cast<double>(config.num_users), Method::Quadrature);
}

/*!
  Evaluates every (scheme, axis value) pair, schemes outermost. Monte Carlo
  points reuse the spec's seed, so every point sees the same random stream.
*/
inline auto run_sweep(const SweepSpec& spec, const SweepOptions& opts = {}) -> std::vector<SweepRow> {
  spec.validate();
  std::vector<SweepRow> rows;
  for (const Scheme scheme : spec.schemes) {
    for (const double v : spec.axis_values) {
      const auto config = spec.config_at(v);
      SweepRow row;
      row.scheme = scheme;
      row.num_users = config.num_users;
      row.num_eves = config.num_eves;
      row.rs_bits = spec.fixed.secrecy_rate;
      row.gamma_db = spec.fixed.gamma_db;
      row.mer_db = spec.axis == SweepAxis::MerDb ? v : spec.fixed.mer_db;

      const auto point = [&] {
        std::ostringstream s;
        s << "scheme=" << to_string(scheme) << " M=" << row.num_users << " N=" << row.num_eves
          << " rs_bits=" << row.rs_bits << " gamma_db=" << row.gamma_db << " mer_db=" << row.mer_db;
        return s.str();
      };
      try {
        row.p_out_closed = closed_form_outage(scheme, config).probability;
      } catch (const std::length_error& e) {
        throw std::length_error(point() + ": " + e.what());
      }
      if (opts.verify) {
        const double q = quadrature_outage(scheme, config).probability;
        if (!(std::abs(q - row.p_out_closed) <= opts.verify_tolerance)) {
          std::ostringstream msg;
          msg.precision(17);
          msg << point() << ": closed form " << row.p_out_closed << " disagrees with quadrature "
              << q;
          throw VerifyError(msg.str());
        }
      }
      if (spec.with_monte_carlo) {
        const auto mc = simulate_outage(
            config, SimulationSpec{spec.trials, spec.seed, policy_for(scheme)}, opts.threads);
        row.p_out_mc = mc.probability;
        row.mc_stderr = mc.std_error;
        row.trials = mc.trials;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view csv_header =
    "scheme,M,N,rs_bits,gamma_db,mer_db,p_out_closed,p_out_mc,mc_stderr,trials";

/// Shortest decimal that parses back to the same double.
inline auto format_real(double v) -> std::string {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return {buf, ptr};
}

/// Renders rows; each comment line is emitted before the header as "# <text>".
inline auto format_csv(const std::vector<SweepRow>& rows, const std::vector<std::string>& comments = {})
    -> std::string {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += csv_header;
  out += '\n';
  for (const auto& r : rows) {
    out += to_string(r.scheme);
    out += ',' + std::to_string(r.num_users) + ',' + std::to_string(r.num_eves);
    out += ',' + format_real(r.rs_bits) + ',' + format_real(r.gamma_db) + ',' + format_real(r.mer_db);
    out += ',' + format_real(r.p_out_closed);
    out += ',' + (r.p_out_mc ? format_real(*r.p_out_mc) : std::string{});
    out += ',' + (r.mc_stderr ? format_real(*r.mc_stderr) : std::string{});
    out += ',' + (r.trials ? std::to_string(*r.trials) : std::string{});
    out += '\n';
  }
  return out;
}

/// Inverse of format_csv. Comment lines are skipped.
inline auto parse_csv(std::string_view text) -> std::vector<SweepRow> {
  std::vector<SweepRow> rows;
  bool seen_header = false;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = text.find('\n', pos);
    const auto line = text.substr(pos, eol == text.npos ? text.npos : eol - pos);
    pos = eol == text.npos ? text.size() : eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto where = "csv line " + std::to_string(line_no) + ": ";
    if (!seen_header) {
      if (line != csv_header) throw ParseError(where + "unexpected header");
      seen_header = true;
      continue;
    }
    const auto cells = KeyValueFile::split(line, ',');
    if (cells.size() != 10) throw ParseError(where + "expected 10 cells");
    const auto integer = [&](const std::string& s) {
      std::uint64_t v = 0;
      const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
        throw ParseError(where + "expected an integer, got '" + s + "'");
      return v;
    };
    SweepRow r;
    r.scheme = parse_scheme(cells[0]);
    r.num_users = integer(cells[1]);
    r.num_eves = integer(cells[2]);
    r.rs_bits = KeyValueFile::parse_real(cells[3], where);
    r.gamma_db = KeyValueFile::parse_real(cells[4], where);
    r.mer_db = KeyValueFile::parse_real(cells[5], where);
    r.p_out_closed = KeyValueFile::parse_real(cells[6], where);
    const int present = !cells[7].empty() + !cells[8].empty() + !cells[9].empty();
    if (present != 0 && present != 3) throw ParseError(where + "Monte Carlo cells must be all present or all empty");
    if (present == 3) {
      r.p_out_mc = KeyValueFile::parse_real(cells[7], where);
      r.mc_stderr = KeyValueFile::parse_real(cells[8], where);
      r.trials = integer(cells[9]);
    }
    rows.push_back(r);
  }
  if (!seen_header) throw ParseError("csv: missing header");
  return rows;
}

inline void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write to '" + path + "' failed");
}

// ---------------------------------------------------------------------------
// Sweep spec files
//
//   schemes      = round_robin, proposed
//   axis         = mer_db              # or num_users
//   values       = 0, 5, 10, 15
//   num_users    = 4                   # when axis = mer_db
//   mer_db       = 10                  # when axis = num_users
//   num_eves     = 4
//   secrecy_rate = 0.5
//   gamma_db     = 10
//   monte_carlo  = true                # optional, default false
//   trials       = 1000000             # optional
//   seed         = 42                  # optional

inline auto parse_sweep_spec(std::string_view text) -> SweepSpec {
  const auto kv = KeyValueFile::parse(text);
  kv.require_known({"schemes", "axis", "values", "num_users", "mer_db", "num_eves", "secrecy_rate",
                    "gamma_db", "monte_carlo", "trials", "seed"});
  SweepSpec spec;
  spec.schemes.clear();
  for (const auto& s : kv.list("schemes")) {
    try {
      spec.schemes.push_back(parse_scheme(s));
    } catch (const ParseError& e) {
      throw ParseError(kv.where("schemes") + e.what());
    }
  }
  const auto& axis = kv.get("axis").value;
  if (axis == "mer_db") {
    spec.axis = SweepAxis::MerDb;
    spec.fixed.num_users = kv.count("num_users");
  } else if (axis == "num_users") {
    spec.axis = SweepAxis::NumUsers;
    spec.fixed.mer_db = kv.real("mer_db");
  } else {
    throw ParseError(kv.where("axis") + "expected mer_db or num_users, got '" + axis + "'");
  }
  spec.axis_values = kv.reals("values");
  spec.fixed.num_eves = kv.count("num_eves");
  spec.fixed.secrecy_rate = kv.real("secrecy_rate");
  spec.fixed.gamma_db = kv.real("gamma_db");
  if (kv.has("monte_carlo")) {
    const auto& mc = kv.get("monte_carlo").value;
    if (mc != "true" && mc != "false") throw ParseError(kv.where("monte_carlo") + "expected true or false");
    spec.with_monte_carlo = mc == "true";
  }
  if (kv.has("trials")) spec.trials = kv.count("trials");
  if (kv.has("seed")) spec.seed = kv.count("seed");
  spec.validate();
  return spec;
}

inline auto load_sweep_spec(const std::string& path) -> SweepSpec {
  return parse_sweep_spec(read_text_file(path));
}

// ---------------------------------------------------------------------------
// Figure presets

struct FigurePreset {
  std::string description;
  std::vector<SweepSpec> series;
};

struct ReproduceOptions {
  std::uint64_t trials = 1'000'000;
  std::uint64_t seed = 42;
  bool with_monte_carlo = true;
  bool verify = false;
  unsigned threads = 0;  // 0: default_thread_count()
};

inline auto mer_axis_0_to_30() -> std::vector<double> {
  std::vector<double> v;
  for (int db = 0; db <= 30; db += 2) v.push_back(db);
  return v;
}

/*!
  Fig2: MER sweep, M=4, N in {2, 8}. Fig3: MER sweep, N=4, M in {4, 8}.
  Fig4: user sweep M=1..8, N=4, MER=10 dB, Rs in {1, 2}. gamma is 10 dB and,
  for the MER sweeps, Rs is 0.5 bits/s/Hz throughout.
*/
inline auto figure_preset(Figure fig, const ReproduceOptions& opts = {}) -> FigurePreset {
  FigurePreset preset;
  SweepSpec base;
  base.with_monte_carlo = opts.with_monte_carlo;
  base.trials = opts.trials;
  base.seed = opts.seed;
  base.fixed.gamma_db = 10.0;

  switch (fig) {
    case Figure::Fig2:
      preset.description = "figure 2: mer_db=0:2:30, M=4, N in {2,8}, rs_bits=0.5, gamma_db=10";
      for (const std::size_t n : {2, 8}) {
        SweepSpec s = base;
        s.axis = SweepAxis::MerDb;
        s.axis_values = mer_axis_0_to_30();
        s.fixed.num_users = 4;
        s.fixed.num_eves = n;
        s.fixed.secrecy_rate = 0.5;
        preset.series.push_back(s);
      }
      break;
    case Figure::Fig3:
      preset.description = "figure 3: mer_db=0:2:30, M in {4,8}, N=4, rs_bits=0.5, gamma_db=10";
      for (const std::size_t m : {4, 8}) {
        SweepSpec s = base;
        s.axis = SweepAxis::MerDb;
        s.axis_values = mer_axis_0_to_30();
        s.fixed.num_users = m;
        s.fixed.num_eves = 4;
        s.fixed.secrecy_rate = 0.5;
        preset.series.push_back(s);
      }
      break;
    case Figure::Fig4:
      preset.description = "figure 4: M=1:1:8, N=4, rs_bits in {1,2}, mer_db=10, gamma_db=10";
      for (const double rs : {1.0, 2.0}) {
        SweepSpec s = base;
        s.axis = SweepAxis::NumUsers;
        s.axis_values = {1, 2, 3, 4, 5, 6, 7, 8};
        s.fixed.mer_db = 10.0;
        s.fixed.num_eves = 4;
        s.fixed.secrecy_rate = rs;
        preset.series.push_back(s);
      }
      break;
  }
  return preset;
}

inline auto parse_figure(int number) -> Figure {
  switch (number) {
    case 2: return Figure::Fig2;
    case 3: return Figure::Fig3;
    case 4: return Figure::Fig4;
    default: throw std::invalid_argument("figure: expected 2, 3 or 4, got " + std::to_string(number));
  }
}

/// Rows of every series of the preset, series by series.
inline auto figure_rows(Figure fig, const ReproduceOptions& opts = {}) -> std::vector<SweepRow> {
  std::vector<SweepRow> rows;
  for (const auto& series : figure_preset(fig, opts).series) {
    auto part = run_sweep(series, SweepOptions{opts.threads, opts.verify});
    rows.insert(rows.end(), part.begin(), part.end());
  }
  return rows;
}

inline auto render_figure_csv(Figure fig, const ReproduceOptions& opts = {}) -> std::string {
  std::vector<std::string> comments{"secrecy-lab preset " + figure_preset(fig, opts).description};
  if (opts.with_monte_carlo) {
    comments.push_back("monte_carlo: trials=" + std::to_string(opts.trials) +
                       " seed=" + std::to_string(opts.seed));
  }
  return format_csv(figure_rows(fig, opts), comments);
}

inline void reproduce_figure(Figure fig, const std::string& output_path,
                             const ReproduceOptions& opts = {}) {
  write_text_file(output_path, render_figure_csv(fig, opts));
}

}  // namespace secrecy_lab
