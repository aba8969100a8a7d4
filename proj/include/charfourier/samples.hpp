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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/grid.hpp"

namespace charfourier {

// Grid coordinate x_m = 2pi m / N of a flat index.
inline RealVec grid_point(const GridShape& grid, std::size_t flat) {
  const Index idx = grid.unflatten(flat);
  RealVec x(grid.dim());
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    x[a] = kTwoPi * static_cast<double>(idx[a]) /
           static_cast<double>(grid.count(a));
  }
  return x;
}

/// Samples of f on the regular grid of [0, 2pi)^n. Index (m_1, ..., m_n)
/// holds f(2pi m_1 / N_1, ..., 2pi m_n / N_n), row-major with axis 0 slowest.
///
/// The shape is enforced on construction; unit modulus is not (see
/// validate()).
class TorusSamples {
 public:
  TorusSamples(GridShape grid, std::vector<UnitCircleValue> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    for (std::size_t a = 0; a < grid_.dim(); ++a) {
      if (grid_.count(a) < 2) {
        throw ParameterError("torus grid needs at least 2 samples per axis");
      }
    }
    if (values_.size() != grid_.size()) {
      throw ParameterError("expected " + std::to_string(grid_.size()) +
                           " samples, got " + std::to_string(values_.size()));
    }
  }

  TorusSamples(std::vector<std::size_t> counts,
               std::vector<UnitCircleValue> values)
      : TorusSamples(GridShape(std::move(counts), 2), std::move(values)) {}

  std::size_t dim() const { return grid_.dim(); }
  const GridShape& grid() const { return grid_; }
  const std::vector<UnitCircleValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const UnitCircleValue& operator[](std::size_t flat) const {
    return values_[flat];
  }
  const UnitCircleValue& at(const Index& idx) const {
    return values_[grid_.flatten(idx)];
  }

  std::vector<std::complex<double>> to_complex() const {
    std::vector<std::complex<double>> out;
    out.reserve(values_.size());
    for (const auto& v : values_) out.push_back(v.to_complex());
    return out;
  }

  RealVec point(std::size_t flat) const { return grid_point(grid_, flat); }

 private:
  GridShape grid_;
  std::vector<UnitCircleValue> values_;
};

/// Torus samples of f: R^n -> S^1 together with the n values f(2pi e_j),
/// the data needed to split off the fractional part of the frequency.
class LineSamples {
 public:
  LineSamples(TorusSamples base, std::vector<UnitCircleValue> endpoint_values)
      : base_(std::move(base)), endpoints_(std::move(endpoint_values)) {
    if (endpoints_.size() != base_.dim()) {
      throw ParameterError("expected " + std::to_string(base_.dim()) +
                           " endpoint values, got " +
                           std::to_string(endpoints_.size()));
    }
  }

  std::size_t dim() const { return base_.dim(); }
  const TorusSamples& base() const { return base_; }
  const std::vector<UnitCircleValue>& endpoint_values() const {
    return endpoints_;
  }

 private:
  TorusSamples base_;
  std::vector<UnitCircleValue> endpoints_;
};

namespace detail {

inline void check_rank(std::size_t got, const GridShape& grid,
                       const char* what) {
  if (got != grid.dim()) {
    throw ParameterError(std::string(what) + " has " + std::to_string(got) +
                         " components, grid has " + std::to_string(grid.dim()) +
                         " axes");
  }
}

// Nyquist bound |k| < N/2, i.e. 2|k| < N.
inline bool representable(std::int64_t k, std::size_t n) {
  const std::int64_t mag = k < 0 ? -k : k;
  return 2 * static_cast<std::uint64_t>(mag) < n;
}

// Uniform double in [0, 1) from the top 53 bits; portable across libraries.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1p-53;
}

}  // namespace detail

/// Samples an arbitrary function on the grid. `fn` receives the point
/// x_m (a RealVec) and returns anything convertible to std::complex<double>.
template <typename Fn>
TorusSamples sample_function(const GridShape& grid, Fn&& fn) {
  std::vector<UnitCircleValue> values;
  values.reserve(grid.size());
  for (std::size_t flat = 0; flat < grid.size(); ++flat) {
    const std::complex<double> z = fn(grid_point(grid, flat));
    values.push_back(UnitCircleValue::from_complex(z));
  }
  return TorusSamples(grid, std::move(values));
}

/// Samples of the torus character x -> e^{i k.x}. Requires |k_j| < N_j / 2.
inline TorusSamples sample_character_torus(const IntVec& k,
                                           const std::vector<std::size_t>& counts) {
  GridShape grid(counts, 2);
  detail::check_rank(k.size(), grid, "frequency");
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    if (!detail::representable(k[a], grid.count(a))) {
      throw ParameterError("frequency " + std::to_string(k[a]) + " on axis " +
                           std::to_string(a) + " aliases on a grid of " +
                           std::to_string(grid.count(a)));
    }
  }
  const Index kw = grid.wrap(k);
  std::vector<UnitCircleValue> values;
  values.reserve(grid.size());
  Index m(grid.dim(), 0);
  do {
    // Phase in turns, reduced exactly per axis: sum_j (k_j m_j mod N_j) / N_j.
    double turns = 0.0;
    for (std::size_t a = 0; a < grid.dim(); ++a) {
      const std::size_t n = grid.count(a);
      turns += static_cast<double>((kw[a] * m[a]) % n) / static_cast<double>(n);
    }
    values.push_back(from_turns(turns));
  } while (next_index(m, grid.counts()));
  return TorusSamples(std::move(grid), std::move(values));
}

/// Samples of x -> e^{i alpha.x} on [0, 2pi)^n plus the endpoint values
/// e^{i 2pi alpha_j}. The integer part floor(alpha_j) must satisfy the
/// Nyquist bound of its axis.
inline LineSamples sample_character_line(const RealVec& alpha,
                                         const std::vector<std::size_t>& counts) {
  GridShape grid(counts, 2);
  detail::check_rank(alpha.size(), grid, "frequency");
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    if (!std::isfinite(alpha[a])) throw DomainError("non-finite frequency");
    const double whole = std::floor(alpha[a]);
    if (std::abs(whole) >= static_cast<double>(grid.count(a)) / 2.0) {
      throw ParameterError("frequency " + std::to_string(alpha[a]) +
                           " on axis " + std::to_string(a) +
                           " aliases on a grid of " +
                           std::to_string(grid.count(a)));
    }
  }
  std::vector<UnitCircleValue> values;
  values.reserve(grid.size());
  Index m(grid.dim(), 0);
  do {
    double turns = 0.0;
    for (std::size_t a = 0; a < grid.dim(); ++a) {
      const double t = alpha[a] * static_cast<double>(m[a]) /
                       static_cast<double>(grid.count(a));
      turns += t - std::floor(t);
    }
    values.push_back(from_turns(turns));
  } while (next_index(m, grid.counts()));

  std::vector<UnitCircleValue> endpoints;
  endpoints.reserve(grid.dim());
  for (double a : alpha) endpoints.push_back(from_turns(a));
  return LineSamples(TorusSamples(std::move(grid), std::move(values)),
                     std::move(endpoints));
}

/// Cyclic translation: output index m holds the input value at
/// (m + offset) mod grid. Exact; realises x -> f(x + y) for grid-aligned y.
inline TorusSamples shift_samples(const TorusSamples& s, const IntVec& offset) {
  const GridShape& grid = s.grid();
  const std::size_t shift = grid.flatten(grid.wrap(offset));
  std::vector<UnitCircleValue> out(s.size());
  for (std::size_t flat = 0; flat < s.size(); ++flat) {
    out[flat] = s[grid.add(flat, shift)];
  }
  return TorusSamples(grid, std::move(out));
}

inline TorusSamples pointwise_div(const TorusSamples& f, const TorusSamples& g) {
  if (!(f.grid() == g.grid())) {
    throw ParameterError("pointwise_div: grids differ");
  }
  std::vector<UnitCircleValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = div(f[i], g[i]);
  return TorusSamples(f.grid(), std::move(out));
}

inline TorusSamples pointwise_mul(const TorusSamples& f, const TorusSamples& g) {
  if (!(f.grid() == g.grid())) {
    throw ParameterError("pointwise_mul: grids differ");
  }
  std::vector<UnitCircleValue> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = mul(f[i], g[i]);
  return TorusSamples(f.grid(), std::move(out));
}

struct Violation {
  enum class Where { Sample, Endpoint };
  Where where = Where::Sample;
  std::size_t index = 0;  // flat sample index or endpoint axis
  double deviation = 0.0;  // |modulus - 1|, +inf for non-finite values
};

inline std::vector<Violation> validate(const TorusSamples& s,
                                       double tolerance = kUnitTolerance) {
  std::vector<Violation> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double d = s[i].unit_defect();
    if (!(d <= tolerance)) out.push_back({Violation::Where::Sample, i, d});
  }
  return out;
}

inline std::vector<Violation> validate(const LineSamples& s,
                                       double tolerance = kUnitTolerance) {
  std::vector<Violation> out = validate(s.base(), tolerance);
  for (std::size_t j = 0; j < s.endpoint_values().size(); ++j) {
    const double d = s.endpoint_values()[j].unit_defect();
    if (!(d <= tolerance)) out.push_back({Violation::Where::Endpoint, j, d});
  }
  return out;
}

/// Multiplies every sample by e^{i u}, u uniform in [-amplitude, amplitude].
inline TorusSamples add_phase_noise(const TorusSamples& s, double amplitude,
                                    std::uint64_t seed) {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw ParameterError("noise amplitude must be finite and non-negative");
  }
  std::mt19937_64 rng(seed);
  std::vector<UnitCircleValue> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double u = (2.0 * detail::unit_uniform(rng) - 1.0) * amplitude;
    out[i] = mul(s[i], from_angle(u));
  }
  return TorusSamples(s.grid(), std::move(out));
}

inline LineSamples add_phase_noise(const LineSamples& s, double amplitude,
                                   std::uint64_t seed) {
  TorusSamples base = add_phase_noise(s.base(), amplitude, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<UnitCircleValue> ends(s.dim());
  for (std::size_t j = 0; j < s.dim(); ++j) {
    const double u = (2.0 * detail::unit_uniform(rng) - 1.0) * amplitude;
    ends[j] = mul(s.endpoint_values()[j], from_angle(u));
  }
  return LineSamples(std::move(base), std::move(ends));
}

/// Independent uniform phases in [0, 2pi): unit-modulus white noise.
inline TorusSamples sample_random_phase(const std::vector<std::size_t>& counts,
                                        std::uint64_t seed) {
  GridShape grid(counts, 2);
  std::mt19937_64 rng(seed);
  std::vector<UnitCircleValue> values(grid.size());
  for (auto& v : values) v = from_turns(detail::unit_uniform(rng));
  return TorusSamples(std::move(grid), std::move(values));
}

}  // namespace charfourier
