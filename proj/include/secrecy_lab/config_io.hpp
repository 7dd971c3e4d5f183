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
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "model.hpp"

// Flat `key = value` text files. `#` starts a comment, vectors are
// comma-separated and matrices are semicolon-separated rows of comma lists:
//
//   num_users    = 2
//   num_eves     = 3
//   sigma2_main  = 1.0            # scalar broadcasts to every user
//   sigma2_eve   = 0.1, 0.2, 0.1; 0.3, 0.1, 0.1
//   power        = 10
//   noise        = 1
//   secrecy_rate = 0.5

namespace secrecy_lab {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeyValueEntry {
  std::string value;
  int line = 0;
};

class KeyValueFile {
 public:
  static auto parse(std::string_view text) -> KeyValueFile {
    KeyValueFile file;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto eol = text.find('\n', pos);
      std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
      pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
      ++line_no;
      if (const auto hash = line.find('#'); hash != line.npos) line = line.substr(0, hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == line.npos) {
        throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'");
      }
      const std::string key{trim(line.substr(0, eq))};
      const std::string value{trim(line.substr(eq + 1))};
      if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty key");
      if (value.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": field '" + key + "': empty value");
      }
      if (!file.entries_.emplace(key, KeyValueEntry{value, line_no}).second) {
        throw ParseError("line " + std::to_string(line_no) + ": field '" + key + "': duplicate key");
      }
    }
    return file;
  }

  [[nodiscard]] auto has(const std::string& key) const -> bool { return entries_.contains(key); }

  [[nodiscard]] auto get(const std::string& key) const -> const KeyValueEntry& {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ParseError("field '" + key + "': missing");
    return it->second;
  }

  /// Rejects keys outside `known`, naming the first one found.
  void require_known(std::initializer_list<std::string_view> known) const {
    for (const auto& [key, entry] : entries_) {
      bool ok = false;
      for (const auto k : known) ok = ok || key == k;
      if (!ok) throw ParseError(where(key) + "unknown field");
    }
  }

  [[nodiscard]] auto where(const std::string& key) const -> std::string {
    const auto it = entries_.find(key);
    const std::string line = it == entries_.end() ? "" : "line " + std::to_string(it->second.line) + ": ";
    return line + "field '" + key + "': ";
  }

  [[nodiscard]] auto real(const std::string& key) const -> double {
    return parse_real(get(key).value, where(key));
  }

  [[nodiscard]] auto count(const std::string& key) const -> std::uint64_t {
    const auto& text = get(key).value;
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError(where(key) + "expected a nonnegative integer, got '" + text + "'");
    }
    return v;
  }

  [[nodiscard]] auto list(const std::string& key, char sep = ',') const -> std::vector<std::string> {
    return split(get(key).value, sep);
  }

  [[nodiscard]] auto reals(const std::string& key) const -> std::vector<double> {
    std::vector<double> out;
    for (const auto& item : list(key)) out.push_back(parse_real(item, where(key)));
    return out;
  }

  static auto trim(std::string_view s) -> std::string_view {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == s.npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
  }

  static auto split(std::string_view s, char sep) -> std::vector<std::string> {
    std::vector<std::string> out;
    std::size_t pos = 0;
    for (;;) {
      const auto next = s.find(sep, pos);
      out.emplace_back(trim(s.substr(pos, next == s.npos ? s.npos : next - pos)));
      if (next == s.npos) break;
      pos = next + 1;
    }
    return out;
  }

  static auto parse_real(std::string_view text, const std::string& where) -> double {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
      throw ParseError(where + "expected a number, got '" + std::string(text) + "'");
    }
    return v;
  }

 private:
  std::map<std::string, KeyValueEntry, std::less<>> entries_;
};

inline auto read_text_file(const std::string& path) -> std::string {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Parses a system configuration, broadcasting scalar gains/powers to every
/// user (and every eavesdropper for sigma2_eve).
inline auto parse_config(std::string_view text) -> SystemConfig {
  const auto kv = KeyValueFile::parse(text);
  kv.require_known({"num_users", "num_eves", "sigma2_main", "sigma2_eve", "power", "noise",
                    "secrecy_rate"});

  SystemConfig c;
  c.num_users = kv.count("num_users");
  c.num_eves = kv.count("num_eves");
  if (c.num_users < 1) throw ParseError(kv.where("num_users") + "must be >= 1");
  if (c.num_eves < 1) throw ParseError(kv.where("num_eves") + "must be >= 1");
  const auto m = c.num_users;
  const auto n = c.num_eves;

  const auto per_user = [&](const std::string& key) {
    auto v = kv.reals(key);
    if (v.size() == 1) v.assign(m, v.front());
    if (v.size() != m) {
      throw ParseError(kv.where(key) + "expected 1 or " + std::to_string(m) + " entries, got " +
                       std::to_string(v.size()));
    }
    for (const double x : v) {
      if (!(x > 0.0) || !std::isfinite(x)) throw ParseError(kv.where(key) + "entries must be > 0");
    }
    return v;
  };
  c.sigma2_main = per_user("sigma2_main");
  c.power = per_user("power");

  const auto rows = kv.list("sigma2_eve", ';');
  const auto expected = "expected a scalar or a " + std::to_string(m) + "x" + std::to_string(n) + " matrix";
  if (rows.size() == 1 && KeyValueFile::split(rows.front(), ',').size() == 1) {
    c.sigma2_eve = GainMatrix(m, n, KeyValueFile::parse_real(rows.front(), kv.where("sigma2_eve")));
  } else {
    if (rows.size() != m) {
      throw ParseError(kv.where("sigma2_eve") + expected + ", got " + std::to_string(rows.size()) + " rows");
    }
    c.sigma2_eve = GainMatrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      const auto cells = KeyValueFile::split(rows[i], ',');
      if (cells.size() != n) {
        throw ParseError(kv.where("sigma2_eve") + expected + ", row " + std::to_string(i + 1) +
                         " has " + std::to_string(cells.size()) + " entries");
      }
      for (std::size_t j = 0; j < n; ++j) {
        c.sigma2_eve(i, j) = KeyValueFile::parse_real(cells[j], kv.where("sigma2_eve"));
      }
    }
  }
  for (const double x : c.sigma2_eve.values()) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ParseError(kv.where("sigma2_eve") + "entries must be > 0");
  }

  c.noise = kv.real("noise");
  if (!(c.noise > 0.0) || !std::isfinite(c.noise)) throw ParseError(kv.where("noise") + "must be > 0");
  c.secrecy_rate = kv.real("secrecy_rate");
  if (!(c.secrecy_rate >= 0.0) || !std::isfinite(c.secrecy_rate)) {
    throw ParseError(kv.where("secrecy_rate") + "must be >= 0");
  }
  c.validate();
  return c;
}

inline auto load_config(const std::string& path) -> SystemConfig {
  return parse_config(read_text_file(path));
}

}  // namespace secrecy_lab
