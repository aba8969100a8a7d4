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

// Character identification on the torus and on the line.
//
// Torus: a multiplicative f on the grid has exactly one non-vanishing
// Fourier coefficient, of modulus one, at its frequency k. The identifier
// computes the spectrum, takes the dominant coefficient and independently
// checks the homomorphism law on sampled pairs of grid points.
//
// Line: beta in [0, 1)^n is read off the endpoint values f(2pi e_j), the
// quotient h = f / e^{i beta.x} is periodic and goes through the torus
// identifier, and the frequency is reported as alpha = k + beta.

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/fourier.hpp"
#include "charfourier/grid.hpp"
#include "charfourier/samples.hpp"

namespace charfourier {

enum class Verdict { ExactCharacter, ApproxCharacter, NotCharacter };
enum class Mode { Torus, Line, Finite };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::ExactCharacter: return "ExactCharacter";
    case Verdict::ApproxCharacter: return "ApproxCharacter";
    case Verdict::NotCharacter: return "NotCharacter";
  }
  return "?";
}

inline const char* to_string(Mode m) {
  switch (m) {
    case Mode::Torus: return "torus";
    case Mode::Line: return "line";
    case Mode::Finite: return "finite";
  }
  return "?";
}

struct IdentifyConfig {
  double tau_exact = 1e-9;
  double floor = 0.9;
  std::uint32_t hom_trials = 256;
  std::uint64_t seed = 0;

  // Largest homomorphism defect tolerated for ApproxCharacter. A function
  // within eps of a character everywhere has its peak at least 1 - eps and a
  // pair defect at most 3 eps; the floor fixes eps = 1 - floor.
  double approx_hom_bound() const { return 3.0 * (1.0 - floor); }

  void check() const {
    if (!(tau_exact > 0.0 && tau_exact < floor && floor <= 1.0)) {
      throw ParameterError(
          "configuration requires 0 < tau_exact < floor <= 1");
    }
    if (hom_trials < 1) throw ParameterError("hom_trials must be at least 1");
  }
};

struct CharacterReport {
  Mode mode = Mode::Torus;
  Verdict verdict = Verdict::NotCharacter;
  // Integer frequency on the torus; integer part of alpha on the line.
  // Absent for NotCharacter.
  std::optional<IntVec> k;
  // Line mode: alpha = k + beta (absent for NotCharacter) and beta itself.
  std::optional<RealVec> alpha;
  RealVec beta;
  double hom_residual = 0.0;
  double spectral_peak = 0.0;
  std::vector<SpectralPeak> peaks;
  // Line mode: per-axis half-open range [lo, hi) of recoverable alpha.
  std::vector<std::pair<double, double>> admissible_alpha;

  bool has_frequency() const { return k.has_value(); }

  RealVec frequency() const {
    if (alpha) return *alpha;
    RealVec out;
    if (k) {
      for (auto v : *k) out.push_back(static_cast<double>(v));
    }
    return out;
  }

  friend bool operator==(const CharacterReport& x, const CharacterReport& y) {
    auto same_peaks = [&] {
      if (x.peaks.size() != y.peaks.size()) return false;
      for (std::size_t i = 0; i < x.peaks.size(); ++i) {
        if (x.peaks[i].k != y.peaks[i].k ||
            x.peaks[i].magnitude != y.peaks[i].magnitude) {
          return false;
        }
      }
      return true;
    };
    return x.mode == y.mode && x.verdict == y.verdict && x.k == y.k &&
           x.alpha == y.alpha && x.beta == y.beta &&
           x.hom_residual == y.hom_residual &&
           x.spectral_peak == y.spectral_peak && same_peaks() &&
           x.admissible_alpha == y.admissible_alpha;
  }
};

inline constexpr std::size_t kReportedPeaks = 5;

/// max |f(a + b) - f(a) f(b)| over sampled pairs of grid indices, with
/// index addition mod the grid. The first pair is always (0, 0), the rest
/// are drawn from a generator seeded with `seed`; `trials` counts all pairs.
inline double homomorphism_residual(const TorusSamples& s, std::uint32_t trials,
                                    std::uint64_t seed) {
  if (trials < 1) throw ParameterError("trials must be at least 1");
  const GridShape& grid = s.grid();
  const std::size_t m = s.size();
  auto defect = [&](std::size_t a, std::size_t b) {
    const std::complex<double> lhs = s[grid.add(a, b)].to_complex();
    const std::complex<double> rhs = s[a].to_complex() * s[b].to_complex();
    return std::abs(lhs - rhs);
  };
  double worst = defect(0, 0);
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 1; t < trials; ++t) {
    const std::size_t a = static_cast<std::size_t>(rng() % m);
    const std::size_t b = static_cast<std::size_t>(rng() % m);
    const double d = defect(a, b);
    if (!(d <= worst)) worst = d;  // NaN propagates
  }
  return worst;
}

namespace detail {

inline Verdict decide(double peak, double hom_residual,
                      const IdentifyConfig& cfg) {
  if (peak >= 1.0 - cfg.tau_exact && hom_residual <= cfg.tau_exact) {
    return Verdict::ExactCharacter;
  }
  if (peak >= cfg.floor && hom_residual <= cfg.approx_hom_bound()) {
    return Verdict::ApproxCharacter;
  }
  return Verdict::NotCharacter;
}

}  // namespace detail

inline CharacterReport identify_torus(const TorusSamples& s,
                                      const IdentifyConfig& cfg = {}) {
  cfg.check();
  CharacterReport report;
  report.mode = Mode::Torus;

  const FourierSpectrum sp = spectrum(s);
  report.peaks = top_peaks(sp, kReportedPeaks);
  report.spectral_peak = report.peaks.empty() ? 0.0 : report.peaks.front().magnitude;
  const std::optional<SpectralPeak> dominant = dominant_frequency(sp, cfg.floor);
  report.hom_residual = homomorphism_residual(s, cfg.hom_trials, cfg.seed);

  report.verdict = detail::decide(report.spectral_peak, report.hom_residual, cfg);
  if (report.verdict != Verdict::NotCharacter && dominant) {
    report.k = dominant->k;
  } else {
    report.verdict = Verdict::NotCharacter;
  }
  return report;
}

/// Per-axis range of alpha whose integer part satisfies the Nyquist bound.
inline std::vector<std::pair<double, double>> admissible_alpha(
    const GridShape& grid) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    const auto kmax = static_cast<double>((grid.count(a) - 1) / 2);
    out.emplace_back(-kmax, kmax + 1.0);
  }
  return out;
}

/// beta = arg(f(2pi e_j)) / 2pi in [0, 1) per axis.
inline RealVec extract_beta(const LineSamples& ls) {
  RealVec beta;
  beta.reserve(ls.dim());
  for (const auto& e : ls.endpoint_values()) {
    double b = 0.0;
    const double r = e.modulus();
    if (std::isfinite(r) && r > 0.0) {
      double theta = std::atan2(e.im, e.re);
      if (theta < 0.0) theta += kTwoPi;
      b = theta / kTwoPi;
      if (b >= 1.0) b = 0.0;
    }
    beta.push_back(b + 0.0);
  }
  return beta;
}

/// h = f / g with g(x) = e^{i beta.x}: the periodic factor left after
/// removing the fractional frequency.
inline TorusSamples periodic_quotient(const LineSamples& ls,
                                      const RealVec& beta) {
  const LineSamples g = sample_character_line(beta, ls.base().grid().counts());
  return pointwise_div(ls.base(), g.base());
}

inline CharacterReport identify_line(const LineSamples& ls,
                                     const IdentifyConfig& cfg = {}) {
  cfg.check();
  const RealVec beta = extract_beta(ls);
  CharacterReport report = identify_torus(periodic_quotient(ls, beta), cfg);
  report.mode = Mode::Line;
  report.beta = beta;
  report.admissible_alpha = admissible_alpha(ls.base().grid());

  // |f(2pi e_j)| = 1 is part of being a character of the line.
  double endpoint_defect = 0.0;
  for (const auto& e : ls.endpoint_values()) {
    const double d = e.unit_defect();
    if (!(d <= endpoint_defect)) endpoint_defect = d;
  }
  if (!(endpoint_defect <= report.hom_residual)) {
    report.hom_residual = endpoint_defect;
    report.verdict =
        detail::decide(report.spectral_peak, report.hom_residual, cfg);
    if (report.verdict == Verdict::NotCharacter) report.k.reset();
  }

  if (report.k) {
    RealVec alpha(ls.dim());
    for (std::size_t j = 0; j < ls.dim(); ++j) {
      alpha[j] = static_cast<double>((*report.k)[j]) + beta[j];
    }
    report.alpha = std::move(alpha);
  }
  return report;
}

using AnySamples = std::variant<TorusSamples, LineSamples>;

inline CharacterReport classify(const AnySamples& input,
                                const IdentifyConfig& cfg = {}) {
  return std::visit(
      [&](const auto& s) -> CharacterReport {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TorusSamples>) {
          return identify_torus(s, cfg);
        } else {
          return identify_line(s, cfg);
        }
      },
      input);
}

}  // namespace charfourier
