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

// File formats.
//
// Input (JSON):
//   {"mode": "torus" | "line" | "finite", "dim": n, "grid": [N1, ..., Nn],
//    "values": [[re, im], ...],            // row-major, axis 1 slowest
//    "endpoint_values": [[re, im], ...]}   // line mode only, n entries
// Input (CSV, one axis only): rows "index,re,im", optional header line; for
// line mode the endpoint value comes from the caller.
//
// Reports and fixtures are written with 17 significant digits.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "json.hpp"

#include "charfourier/char_id.hpp"
#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/finite_oracle.hpp"
#include "charfourier/samples.hpp"

namespace charfourier::io {

enum class ExitCode : int {
  Ok = 0,
  Usage = 1,
  MissingFile = 2,
  Malformed = 3,
  Invariant = 4,
};

class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what,
           std::vector<Violation> violations = {})
      : std::runtime_error(what), code_(code),
        violations_(std::move(violations)) {}

  ExitCode code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  ExitCode code_;
  std::vector<Violation> violations_;
};

enum class InputFormat { Json, Csv };

struct InputOptions {
  Mode mode = Mode::Torus;
  std::optional<UnitCircleValue> csv_endpoint;
  double unit_tolerance = kUnitTolerance;
};

using ParsedInput = std::variant<TorusSamples, LineSamples, CharacterTable>;

inline std::optional<Mode> parse_mode(std::string_view s) {
  if (s == "torus") return Mode::Torus;
  if (s == "line") return Mode::Line;
  if (s == "finite") return Mode::Finite;
  return std::nullopt;
}

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) {
  throw CliError(ExitCode::Malformed, what);
}

inline UnitCircleValue json_pair(const nlohmann::json& j, const char* what,
                                 std::size_t i) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    malformed(std::string(what) + "[" + std::to_string(i) +
              "] must be a [re, im] pair of numbers");
  }
  const double re = j[0].get<double>();
  const double im = j[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im)) {
    malformed(std::string(what) + "[" + std::to_string(i) + "] is not finite");
  }
  return {re, im};
}

inline std::vector<UnitCircleValue> json_pairs(const nlohmann::json& j,
                                               const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<UnitCircleValue> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(json_pair(j[i], what, i));
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

inline std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

inline std::optional<std::size_t> to_index(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return v;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

inline ParsedInput assemble(Mode mode, std::vector<std::size_t> grid,
                            std::vector<UnitCircleValue> values,
                            std::optional<std::vector<UnitCircleValue>> endpoints,
                            double tolerance) {
  const std::size_t min_count = mode == Mode::Finite ? 1 : 2;
  std::optional<GridShape> shape;
  try {
    shape.emplace(grid, min_count);
  } catch (const ParameterError& e) {
    malformed(e.what());
  }
  if (values.size() != shape->size()) {
    malformed("values has " + std::to_string(values.size()) +
              " entries, grid requires " + std::to_string(shape->size()));
  }
  if (mode == Mode::Line) {
    if (!endpoints) malformed("line input requires endpoint_values");
    if (endpoints->size() != shape->dim()) {
      malformed("endpoint_values has " + std::to_string(endpoints->size()) +
                " entries, expected " + std::to_string(shape->dim()));
    }
  } else if (endpoints) {
    malformed("endpoint_values is only valid in line mode");
  }

  std::vector<Violation> bad;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double d = values[i].unit_defect();
    if (!(d <= tolerance)) bad.push_back({Violation::Where::Sample, i, d});
  }
  if (endpoints) {
    for (std::size_t j = 0; j < endpoints->size(); ++j) {
      const double d = (*endpoints)[j].unit_defect();
      if (!(d <= tolerance)) bad.push_back({Violation::Where::Endpoint, j, d});
    }
  }
  if (!bad.empty()) {
    std::string what =
        std::to_string(bad.size()) + " value(s) violate the unit-modulus invariant";
    throw CliError(ExitCode::Invariant, what, std::move(bad));
  }

  switch (mode) {
    case Mode::Torus:
      return TorusSamples(std::move(*shape), std::move(values));
    case Mode::Line:
      return LineSamples(TorusSamples(std::move(*shape), std::move(values)),
                         std::move(*endpoints));
    case Mode::Finite:
      return CharacterTable(FiniteGroupSpec{std::move(grid)}, std::move(values));
  }
  malformed("unknown mode");
}

inline ParsedInput parse_json(std::string_view text, const InputOptions& opts) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("top level must be a JSON object");

  const auto mode_it = doc.find("mode");
  if (mode_it == doc.end() || !mode_it->is_string()) {
    malformed("missing string field 'mode'");
  }
  const std::optional<Mode> mode = parse_mode(mode_it->get<std::string>());
  if (!mode) malformed("unknown mode '" + mode_it->get<std::string>() + "'");
  if (*mode != opts.mode) {
    malformed(std::string("file declares mode '") + to_string(*mode) +
              "' but '" + to_string(opts.mode) + "' was requested");
  }

  const auto grid_it = doc.find("grid");
  if (grid_it == doc.end() || !grid_it->is_array() || grid_it->empty()) {
    malformed("missing non-empty array field 'grid'");
  }
  std::vector<std::size_t> grid;
  for (const auto& n : *grid_it) {
    if (!n.is_number_unsigned()) malformed("grid entries must be non-negative integers");
    grid.push_back(n.get<std::size_t>());
  }

  const auto dim_it = doc.find("dim");
  if (dim_it == doc.end() || !dim_it->is_number_unsigned()) {
    malformed("missing integer field 'dim'");
  }
  if (dim_it->get<std::size_t>() != grid.size()) {
    malformed("dim does not match the number of grid axes");
  }

  const auto values_it = doc.find("values");
  if (values_it == doc.end()) malformed("missing field 'values'");
  std::vector<UnitCircleValue> values = json_pairs(*values_it, "values");

  std::optional<std::vector<UnitCircleValue>> endpoints;
  if (const auto it = doc.find("endpoint_values"); it != doc.end()) {
    endpoints = json_pairs(*it, "endpoint_values");
  }
  return assemble(*mode, std::move(grid), std::move(values), std::move(endpoints),
                  opts.unit_tolerance);
}

inline ParsedInput parse_csv(std::string_view text, const InputOptions& opts) {
  std::vector<std::optional<UnitCircleValue>> slots;
  std::vector<std::pair<std::size_t, UnitCircleValue>> rows;
  bool first = true;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (first && std::isalpha(static_cast<unsigned char>(line.front()))) {
      first = false;
      continue;  // header
    }
    first = false;
    const auto fields = split(line, ',');
    if (fields.size() != 3) {
      malformed("line " + std::to_string(line_no) + ": expected index,re,im");
    }
    const auto index = to_index(fields[0]);
    const auto re = to_double(fields[1]);
    const auto im = to_double(fields[2]);
    if (!index || !re || !im || !std::isfinite(*re) || !std::isfinite(*im)) {
      malformed("line " + std::to_string(line_no) + ": unparsable row");
    }
    rows.emplace_back(*index, UnitCircleValue{*re, *im});
  }
  if (rows.empty()) malformed("CSV input has no rows");
  slots.assign(rows.size(), std::nullopt);
  for (const auto& [index, v] : rows) {
    if (index >= slots.size() || slots[index]) {
      malformed("CSV indices must be 0..N-1, each exactly once");
    }
    slots[index] = v;
  }
  std::vector<UnitCircleValue> values;
  values.reserve(slots.size());
  for (const auto& s : slots) values.push_back(*s);

  std::optional<std::vector<UnitCircleValue>> endpoints;
  if (opts.mode == Mode::Line) {
    if (!opts.csv_endpoint) malformed("line mode CSV input needs an endpoint value");
    endpoints = std::vector<UnitCircleValue>{*opts.csv_endpoint};
  }
  const std::size_t n = values.size();
  return assemble(opts.mode, {n}, std::move(values), std::move(endpoints),
                  opts.unit_tolerance);
}

}  // namespace detail

/// Parses and validates in-memory input. Throws CliError carrying the exit
/// code: Malformed for syntax and shape problems, Invariant (with the
/// offending indices) for off-circle values.
inline ParsedInput parse_input_text(std::string_view text, InputFormat format,
                                    const InputOptions& opts) {
  return format == InputFormat::Json ? detail::parse_json(text, opts)
                                     : detail::parse_csv(text, opts);
}

inline InputFormat format_for(const std::filesystem::path& path) {
  std::string ext = path.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".csv" ? InputFormat::Csv : InputFormat::Json;
}

inline ParsedInput parse_input(const std::filesystem::path& path,
                               const InputOptions& opts) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw CliError(ExitCode::MissingFile, "no such file: " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError(ExitCode::MissingFile, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_input_text(buf.str(), format_for(path), opts);
}

// ---------------------------------------------------------------------------
// Writers

inline std::string format_real(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline std::string int_list(const IntVec& k) {
  std::string s = "[";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(k[i]);
  }
  return s + "]";
}

inline std::string real_list(const RealVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_real(v[i]);
  }
  return s + "]";
}

inline std::string pair_list(const std::vector<UnitCircleValue>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += "[" + format_real(values[i].re) + "," + format_real(values[i].im) + "]";
  }
  return s + "]";
}

inline std::string frequency_json(const CharacterReport& r) {
  if (!r.k) return "null";
  if (r.alpha) return real_list(*r.alpha);
  return int_list(*r.k);
}

}  // namespace detail

inline std::string report_json(const CharacterReport& r,
                               const IdentifyConfig& cfg) {
  std::string s = "{\n";
  s += "  \"mode\": \"" + std::string(to_string(r.mode)) + "\",\n";
  s += "  \"verdict\": \"" + std::string(to_string(r.verdict)) + "\",\n";
  s += "  \"frequency\": " + detail::frequency_json(r) + ",\n";
  if (r.mode == Mode::Line) {
    s += "  \"beta\": " + detail::real_list(r.beta) + ",\n";
  }
  s += "  \"hom_residual\": " + format_real(r.hom_residual) + ",\n";
  s += "  \"spectral_peak\": " + format_real(r.spectral_peak) + ",\n";
  s += "  \"peaks\": [";
  for (std::size_t i = 0; i < r.peaks.size(); ++i) {
    if (i) s += ", ";
    s += "[" + detail::int_list(r.peaks[i].k) + ", " +
         format_real(r.peaks[i].magnitude) + "]";
  }
  s += "],\n";
  if (r.mode == Mode::Line) {
    s += "  \"admissible_alpha\": [";
    for (std::size_t i = 0; i < r.admissible_alpha.size(); ++i) {
      if (i) s += ", ";
      s += "[" + format_real(r.admissible_alpha[i].first) + ", " +
           format_real(r.admissible_alpha[i].second) + "]";
    }
    s += "],\n";
  }
  s += "  \"config\": {\"tau_exact\": " + format_real(cfg.tau_exact) +
       ", \"floor\": " + format_real(cfg.floor) +
       ", \"hom_trials\": " + std::to_string(cfg.hom_trials) +
       ", \"seed\": " + std::to_string(cfg.seed) + "}\n";
  s += "}\n";
  return s;
}

inline std::string report_text(const CharacterReport& r,
                               const IdentifyConfig& cfg) {
  std::string s;
  s += "mode:          " + std::string(to_string(r.mode)) + "\n";
  s += "verdict:       " + std::string(to_string(r.verdict)) + "\n";
  s += "frequency:     " + detail::frequency_json(r) + "\n";
  if (r.mode == Mode::Line) s += "beta:          " + detail::real_list(r.beta) + "\n";
  s += "hom_residual:  " + format_real(r.hom_residual) + "\n";
  s += "spectral_peak: " + format_real(r.spectral_peak) + "\n";
  s += "peaks:\n";
  for (const auto& p : r.peaks) {
    s += "  " + detail::int_list(p.k) + "  " + format_real(p.magnitude) + "\n";
  }
  s += "config:        tau_exact=" + format_real(cfg.tau_exact) +
       " floor=" + format_real(cfg.floor) +
       " hom_trials=" + std::to_string(cfg.hom_trials) +
       " seed=" + std::to_string(cfg.seed) + "\n";
  return s;
}

inline std::string fixture_json(Mode mode, const std::vector<std::size_t>& grid,
                                const std::vector<UnitCircleValue>& values,
                                const std::vector<UnitCircleValue>* endpoints) {
  std::string s = "{\"mode\": \"" + std::string(to_string(mode)) + "\", ";
  s += "\"dim\": " + std::to_string(grid.size()) + ", \"grid\": [";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(grid[i]);
  }
  s += "],\n \"values\": " + detail::pair_list(values);
  if (endpoints) s += ",\n \"endpoint_values\": " + detail::pair_list(*endpoints);
  s += "}\n";
  return s;
}

inline std::string fixture_json(const ParsedInput& input) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TorusSamples>) {
          return fixture_json(Mode::Torus, x.grid().counts(), x.values(), nullptr);
        } else if constexpr (std::is_same_v<T, LineSamples>) {
          return fixture_json(Mode::Line, x.base().grid().counts(),
                              x.base().values(), &x.endpoint_values());
        } else {
          return fixture_json(Mode::Finite, x.group().orders, x.values(), nullptr);
        }
      },
      input);
}

}  // namespace charfourier::io
