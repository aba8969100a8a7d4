// Copyright 2026 The charfourier Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Command-line front end: `analyze` and `generate`.
//
//   charid analyze --input PATH --mode MODE [--tau-exact X] [--floor X]
//                  [--trials N] [--seed N] [--format json|text]
//                  [--endpoint RE,IM]
//   charid generate --mode MODE --freq LIST --grid LIST [--noise X]
//                   [--seed N] --output PATH
//
// Exit codes: 0 success (any verdict), 1 usage, 2 missing file,
// 3 malformed input or shape mismatch, 4 unit-modulus violation.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "charfourier/char_id.hpp"
#include "charfourier/finite_oracle.hpp"
#include "charfourier/fourier.hpp"
#include "charfourier/io.hpp"
#include "charfourier/samples.hpp"

namespace charfourier::cli {

using io::CliError;
using io::ExitCode;

enum class OutputFormat { Json, Text };

struct AnalysisRequest {
  Mode mode = Mode::Torus;
  std::filesystem::path input;
  IdentifyConfig config;
  OutputFormat format = OutputFormat::Json;
  std::optional<UnitCircleValue> csv_endpoint;
};

struct GenerateRequest {
  Mode mode = Mode::Torus;
  RealVec freq;  // integral for torus and finite
  std::vector<std::size_t> grid;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::filesystem::path output;
};

struct Outcome {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Report for a finite-group table: exhaustive homomorphism check plus DFT
/// identification. Frequencies are canonical labels in prod [0, N_j).
inline CharacterReport analyze_finite(const CharacterTable& t,
                                      const IdentifyConfig& cfg) {
  cfg.check();
  CharacterReport r;
  r.mode = Mode::Finite;
  const std::vector<std::complex<double>> sp = finite_spectrum(t);
  std::vector<SpectralPeak> peaks;
  peaks.reserve(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const Index idx = t.shape().unflatten(i);
    peaks.push_back({IntVec(idx.begin(), idx.end()), std::abs(sp[i])});
  }
  const std::size_t keep = std::min(kReportedPeaks, peaks.size());
  std::partial_sort(peaks.begin(), peaks.begin() + static_cast<std::ptrdiff_t>(keep),
                    peaks.end(), charfourier::detail::peak_before);
  peaks.resize(keep);
  r.peaks = std::move(peaks);
  r.spectral_peak = r.peaks.front().magnitude;
  r.hom_residual = is_homomorphism_exhaustive(t, cfg.seed).worst_defect;
  r.verdict = charfourier::detail::decide(r.spectral_peak, r.hom_residual, cfg);
  if (r.verdict != Verdict::NotCharacter) {
    if (auto k = identify_finite(t, cfg.floor)) {
      r.k = std::move(*k);
    } else {
      r.verdict = Verdict::NotCharacter;
    }
  }
  return r;
}

inline CharacterReport analyze(const io::ParsedInput& input,
                               const IdentifyConfig& cfg) {
  return std::visit(
      [&](const auto& x) -> CharacterReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CharacterTable>) {
          return analyze_finite(x, cfg);
        } else {
          return classify(AnySamples(x), cfg);
        }
      },
      input);
}

namespace detail {

inline std::string describe(const Violation& v) {
  return std::string(v.where == Violation::Where::Sample ? "sample " : "endpoint ") +
         std::to_string(v.index) + ": |modulus - 1| = " + io::format_real(v.deviation);
}

inline Outcome failure(const CliError& e) {
  Outcome o;
  o.exit_code = e.exit_code();
  o.err = std::string("error: ") + e.what() + "\n";
  for (const auto& v : e.violations()) o.err += "  " + describe(v) + "\n";
  return o;
}

}  // namespace detail

inline Outcome run(const AnalysisRequest& req) {
  try {
    try {
      req.config.check();
    } catch (const ParameterError& e) {
      throw CliError(ExitCode::Usage, e.what());
    }
    io::InputOptions opts;
    opts.mode = req.mode;
    opts.csv_endpoint = req.csv_endpoint;
    const io::ParsedInput input = io::parse_input(req.input, opts);
    const CharacterReport report = analyze(input, req.config);
    Outcome o;
    o.out = req.format == OutputFormat::Json ? io::report_json(report, req.config)
                                             : io::report_text(report, req.config);
    return o;
  } catch (const CliError& e) {
    return detail::failure(e);
  }
}

/// Builds the fixture described by `req` without writing it.
inline io::ParsedInput make_fixture(const GenerateRequest& req) {
  try {
    if (req.freq.size() != req.grid.size()) {
      throw ParameterError("--freq and --grid must have the same length");
    }
    IntVec k;
    if (req.mode != Mode::Line) {
      for (double f : req.freq) {
        if (f != std::floor(f) || std::abs(f) > 9.0e15) {
          throw ParameterError("frequencies must be integers in this mode");
        }
        k.push_back(static_cast<std::int64_t>(f));
      }
    }
    switch (req.mode) {
      case Mode::Torus:
        return add_phase_noise(sample_character_torus(k, req.grid), req.noise,
                               req.seed);
      case Mode::Line:
        return add_phase_noise(sample_character_line(req.freq, req.grid),
                               req.noise, req.seed);
      case Mode::Finite: {
        for (std::size_t a = 0; a < k.size(); ++a) {
          if (k[a] < 0 || static_cast<std::size_t>(k[a]) >= req.grid[a]) {
            throw ParameterError("finite frequencies must lie in [0, N)");
          }
        }
        if (!(req.noise >= 0.0) || !std::isfinite(req.noise)) {
          throw ParameterError("noise amplitude must be finite and non-negative");
        }
        const FiniteGroupSpec g{req.grid};
        CharacterTable t = character_table(g, k);
        std::vector<UnitCircleValue> values = t.values();
        std::mt19937_64 rng(req.seed);
        for (auto& v : values) {
          const double u =
              (2.0 * charfourier::detail::unit_uniform(rng) - 1.0) * req.noise;
          v = mul(v, from_angle(u));
        }
        return CharacterTable(g, std::move(values));
      }
    }
    throw ParameterError("unknown mode");
  } catch (const ParameterError& e) {
    throw CliError(ExitCode::Usage, e.what());
  } catch (const DomainError& e) {
    throw CliError(ExitCode::Usage, e.what());
  }
}

inline Outcome generate(const GenerateRequest& req) {
  try {
    const std::string text = io::fixture_json(make_fixture(req));
    std::ofstream out(req.output, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw CliError(ExitCode::MissingFile, "cannot write " + req.output.string());
    }
    out << text;
    out.close();
    if (!out) throw CliError(ExitCode::MissingFile, "write failed: " + req.output.string());
    Outcome o;
    o.err = "wrote " + req.output.string() + "\n";
    return o;
  } catch (const CliError& e) {
    return detail::failure(e);
  }
}

namespace detail {

inline RealVec parse_real_list(const std::string& s) {
  RealVec out;
  for (std::string_view part : io::detail::split(s, ',')) {
    const auto v = io::detail::to_double(part);
    if (!v || !std::isfinite(*v)) {
      throw CliError(ExitCode::Usage, "cannot parse number '" + std::string(part) + "'");
    }
    out.push_back(*v);
  }
  return out;
}

inline std::vector<std::size_t> parse_count_list(const std::string& s) {
  std::vector<std::size_t> out;
  for (std::string_view part : io::detail::split(s, ',')) {
    const auto v = io::detail::to_index(part);
    if (!v) throw CliError(ExitCode::Usage, "cannot parse count '" + std::string(part) + "'");
    out.push_back(*v);
  }
  return out;
}

inline Mode require_mode(const std::string& s) {
  const auto m = io::parse_mode(s);
  if (!m) throw CliError(ExitCode::Usage, "unknown mode '" + s + "'");
  return *m;
}

}  // namespace detail

/// Full command-line entry point; returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Identify characters of the torus and the line from samples"};
  app.require_subcommand(1);

  std::string mode_s, input_s, format_s = "json", endpoint_s;
  IdentifyConfig cfg;
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a sampled function");
  analyze_cmd->add_option("--input", input_s, "Input file (.json or .csv)")->required();
  analyze_cmd->add_option("--mode", mode_s, "torus | line | finite")->required();
  analyze_cmd->add_option("--tau-exact", cfg.tau_exact, "Exactness tolerance");
  analyze_cmd->add_option("--floor", cfg.floor, "Dominance floor");
  analyze_cmd->add_option("--trials", cfg.hom_trials, "Homomorphism test pairs");
  analyze_cmd->add_option("--seed", cfg.seed, "Pair sampling seed");
  analyze_cmd->add_option("--format", format_s, "json | text");
  analyze_cmd->add_option("--endpoint", endpoint_s, "RE,IM endpoint for line-mode CSV");

  std::string gen_mode_s, freq_s, grid_s, output_s;
  double noise = 0.0;
  std::uint64_t gen_seed = 0;
  auto* generate_cmd = app.add_subcommand("generate", "Write a character fixture");
  generate_cmd->add_option("--mode", gen_mode_s, "torus | line | finite")->required();
  generate_cmd->add_option("--freq", freq_s, "Comma-separated frequency")->required();
  generate_cmd->add_option("--grid", grid_s, "Comma-separated grid counts")->required();
  generate_cmd->add_option("--noise", noise, "Uniform phase jitter amplitude (rad)");
  generate_cmd->add_option("--seed", gen_seed, "Noise seed");
  generate_cmd->add_option("--output", output_s, "Fixture path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return static_cast<int>(ExitCode::Usage);
  }

  Outcome o;
  try {
    if (*analyze_cmd) {
      AnalysisRequest req;
      req.mode = detail::require_mode(mode_s);
      req.input = input_s;
      req.config = cfg;
      if (format_s == "json") {
        req.format = OutputFormat::Json;
      } else if (format_s == "text") {
        req.format = OutputFormat::Text;
      } else {
        throw CliError(ExitCode::Usage, "unknown format '" + format_s + "'");
      }
      if (!endpoint_s.empty()) {
        const RealVec e = detail::parse_real_list(endpoint_s);
        if (e.size() != 2) throw CliError(ExitCode::Usage, "--endpoint takes RE,IM");
        req.csv_endpoint = UnitCircleValue{e[0], e[1]};
      }
      o = run(req);
    } else {
      GenerateRequest req;
      req.mode = detail::require_mode(gen_mode_s);
      req.freq = detail::parse_real_list(freq_s);
      req.grid = detail::parse_count_list(grid_s);
      req.noise = noise;
      req.seed = gen_seed;
      req.output = output_s;
      o = generate(req);
    }
  } catch (const CliError& e) {
    o = detail::failure(e);
  }
  out << o.out;
  err << o.err;
  return o.exit_code;
}

}  // namespace charfourier::cli
