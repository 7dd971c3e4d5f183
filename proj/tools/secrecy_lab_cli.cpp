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


// secrecy-lab command line: closed-form evaluation, Monte Carlo simulation,
// parameter sweeps and figure presets. Errors are reported as a single line
// "error: <kind>: <message>" on stderr with a nonzero exit status.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "secrecy_lab/secrecy_lab.hpp"

namespace sl = secrecy_lab;

namespace {

struct ConfigArgs {
  std::string config_path;
  std::size_t users = 4;
  std::size_t eves = 4;
  double mer_db = 10.0;
  double gamma_db = 10.0;
  double rate = 0.5;

  void attach(CLI::App& cmd) {
    auto* file = cmd.add_option("--config", config_path, "System config file (key = value)")
                     ->check(CLI::ExistingFile);
    cmd.add_option("--users", users, "Number of users M (homogeneous)")->excludes(file);
    cmd.add_option("--eves", eves, "Number of eavesdroppers N (homogeneous)")->excludes(file);
    cmd.add_option("--mer_db", mer_db, "Main-to-eavesdropper ratio in dB")->excludes(file);
    cmd.add_option("--gamma_db", gamma_db, "Transmit SNR P/N0 in dB")->excludes(file);
    cmd.add_option("--rs", rate, "Target secrecy rate in bits/s/Hz")->excludes(file);
  }

  [[nodiscard]] auto build() const -> sl::SystemConfig {
    if (!config_path.empty()) return sl::load_config(config_path);
    return sl::SystemConfig::homogeneous(users, eves, mer_db, gamma_db, rate);
  }
};

auto one_line(std::string text) -> std::string {
  for (auto& ch : text) {
    if (ch == '\n' || ch == '\r') ch = ' ';
  }
  return text;
}

auto fail(std::string_view kind, const std::string& message, int code = 1) -> int {
  std::cerr << "error: " << kind << ": " << one_line(message) << '\n';
  return code;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    sl::write_text_file(out_path, text);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy outage of multi-user uplinks with eavesdroppers", "secrecy-lab"};
  app.require_subcommand(1);

  // closed-form
  ConfigArgs cf_args;
  bool cf_verify = false;
  auto* closed = app.add_subcommand("closed-form", "Evaluate both scheduling schemes exactly");
  cf_args.attach(*closed);
  closed->add_flag("--verify", cf_verify, "Cross-check against numerical quadrature");

  // simulate
  ConfigArgs sim_args;
  std::string policy_name = "both";
  sl::SimulationSpec sim_spec;
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the outage probability");
  sim_args.attach(*simulate);
  simulate->add_option("--policy", policy_name, "round_robin, max_gain or both")
      ->check(CLI::IsMember({"round_robin", "max_gain", "both"}));
  simulate->add_option("--trials", sim_spec.trials, "Number of trials")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim_spec.seed, "RNG seed");

  // sweep
  std::string sweep_spec_path;
  std::string sweep_out;
  bool sweep_verify = false;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep described by a spec file");
  sweep->add_option("--spec", sweep_spec_path, "Sweep spec file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", sweep_out, "Output CSV path (default stdout)");
  sweep->add_flag("--verify", sweep_verify, "Cross-check every closed-form value by quadrature");

  // reproduce
  int figure = 0;
  std::string repro_out;
  sl::ReproduceOptions repro;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a figure preset as CSV");
  reproduce->add_option("--figure", figure, "Figure preset: 2, 3 or 4")->required()->check(CLI::IsMember({2, 3, 4}));
  reproduce->add_option("--out", repro_out, "Output CSV path (default stdout)");
  reproduce->add_option("--trials", repro.trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
  reproduce->add_option("--seed", repro.seed, "RNG seed");
  reproduce->add_flag("--verify", repro.verify, "Cross-check every closed-form value by quadrature");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    const unsigned threads = sl::default_thread_count();

    if (*closed) {
      const auto config = cf_args.build();
      const double rr = sl::roundrobin_outage(config).probability;
      const double pr = sl::proposed_outage(config).probability;
      if (cf_verify) {
        for (const auto scheme : {sl::Scheme::RoundRobin, sl::Scheme::Proposed}) {
          const double exact = scheme == sl::Scheme::RoundRobin ? rr : pr;
          const double q = sl::quadrature_outage(scheme, config).probability;
          if (!(std::abs(q - exact) <= 1e-8)) {
            return fail("verify", std::string(sl::to_string(scheme)) + " closed form " +
                                      sl::format_real(exact) + " vs quadrature " + sl::format_real(q));
          }
        }
      }
      std::cout << "scheme,p_out_closed\n"
                << "round_robin," << sl::format_real(rr) << '\n'
                << "proposed," << sl::format_real(pr) << '\n';
    } else if (*simulate) {
      const auto config = sim_args.build();
      std::cout << "policy,p_out_mc,mc_stderr,trials,p_out_closed\n";
      for (const auto policy : {sl::Policy::RoundRobin, sl::Policy::MaxGain}) {
        if (policy_name != "both" && policy_name != sl::to_string(policy)) continue;
        auto spec = sim_spec;
        spec.policy = policy;
        const auto mc = sl::simulate_outage(config, spec, threads);
        const double exact = policy == sl::Policy::RoundRobin ? sl::roundrobin_outage(config).probability
                                                              : sl::proposed_outage(config).probability;
        std::cout << sl::to_string(policy) << ',' << sl::format_real(mc.probability) << ','
                  << sl::format_real(*mc.std_error) << ',' << *mc.trials << ','
                  << sl::format_real(exact) << '\n';
      }
    } else if (*sweep) {
      const auto spec = sl::load_sweep_spec(sweep_spec_path);
      const auto rows = sl::run_sweep(spec, {threads, sweep_verify});
      emit(sl::format_csv(rows), sweep_out);
    } else if (*reproduce) {
      repro.threads = threads;
      emit(sl::render_figure_csv(sl::parse_figure(figure), repro), repro_out);
    }
  } catch (const sl::ParseError& e) {
    return fail("invalid_input", e.what());
  } catch (const sl::IoError& e) {
    return fail("io", e.what());
  } catch (const sl::VerifyError& e) {
    return fail("verify", e.what());
  } catch (const std::length_error& e) {
    return fail("budget", e.what());
  } catch (const std::invalid_argument& e) {
    return fail("invalid_input", e.what());
  } catch (const std::out_of_range& e) {
    return fail("invalid_input", e.what());
  } catch (const std::exception& e) {
    return fail("numeric", e.what());
  }
  return 0;
}
