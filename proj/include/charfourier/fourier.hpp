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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/fft.hpp"
#include "charfourier/grid.hpp"
#include "charfourier/samples.hpp"

namespace charfourier {

/// Label of DFT bin b on an axis of N points, in the box [-N/2, N/2).
inline std::int64_t bin_to_frequency(std::size_t bin, std::size_t n) {
  return 2 * bin < n ? static_cast<std::int64_t>(bin)
                     : static_cast<std::int64_t>(bin) -
                           static_cast<std::int64_t>(n);
}

inline bool in_frequency_box(std::int64_t k, std::size_t n) {
  const auto nn = static_cast<std::int64_t>(n);
  return -nn <= 2 * k && 2 * k < nn;
}

/// Normalized Fourier coefficients f^(k) = mean_m f(x_m) e^{-i k.x_m} for
/// every k in the box prod_j [-N_j/2, N_j/2). Stored in DFT bin order.
class FourierSpectrum {
 public:
  using Complex = std::complex<double>;

  FourierSpectrum(GridShape grid, std::vector<Complex> bins)
      : grid_(std::move(grid)), bins_(std::move(bins)) {
    if (bins_.size() != grid_.size()) {
      throw ParameterError("spectrum size does not match grid");
    }
  }

  std::size_t dim() const { return grid_.dim(); }
  const GridShape& grid() const { return grid_; }
  std::size_t size() const { return bins_.size(); }
  const std::vector<Complex>& bins() const { return bins_; }

  bool contains(const IntVec& k) const {
    if (k.size() != dim()) return false;
    for (std::size_t a = 0; a < dim(); ++a) {
      if (!in_frequency_box(k[a], grid_.count(a))) return false;
    }
    return true;
  }

  Complex at(const IntVec& k) const {
    if (!contains(k)) throw ParameterError("frequency outside the spectrum box");
    return bins_[grid_.flatten(grid_.wrap(k))];
  }

  IntVec frequency_of(std::size_t flat) const {
    const Index idx = grid_.unflatten(flat);
    IntVec k(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      k[a] = bin_to_frequency(idx[a], grid_.count(a));
    }
    return k;
  }

 private:
  GridShape grid_;
  std::vector<Complex> bins_;
};

struct SpectralPeak {
  IntVec k;
  double magnitude = 0.0;
};

namespace detail {

inline void check_frequency(const TorusSamples& s, const IntVec& k) {
  if (k.size() != s.dim()) {
    throw ParameterError("frequency rank does not match samples");
  }
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (!in_frequency_box(k[a], s.grid().count(a))) {
      throw ParameterError("frequency " + std::to_string(k[a]) + " on axis " +
                           std::to_string(a) + " is outside [-N/2, N/2)");
    }
  }
}

// Larger magnitude first; equal magnitudes in lexicographic k order.
inline bool peak_before(const SpectralPeak& x, const SpectralPeak& y) {
  if (x.magnitude != y.magnitude) return x.magnitude > y.magnitude;
  return x.k < y.k;
}

}  // namespace detail

/// Riemann sum (1/M) sum_m f(x_m) e^{-i k.x_m}, evaluated directly in O(M).
inline std::complex<double> coefficient(const TorusSamples& s, const IntVec& k) {
  detail::check_frequency(s, k);
  const GridShape& grid = s.grid();
  const Index kw = grid.wrap(k);
  std::complex<double> acc = 0.0;
  Index m(grid.dim(), 0);
  std::size_t flat = 0;
  do {
    double turns = 0.0;
    for (std::size_t a = 0; a < grid.dim(); ++a) {
      const std::size_t n = grid.count(a);
      turns += static_cast<double>((kw[a] * m[a]) % n) / static_cast<double>(n);
    }
    const UnitCircleValue w = from_turns(turns);
    acc += s[flat].to_complex() * std::complex<double>(w.re, -w.im);
    ++flat;
  } while (next_index(m, grid.counts()));
  return acc / static_cast<double>(grid.size());
}

/// All coefficients in O(M log M) via the FFT.
inline FourierSpectrum spectrum(const TorusSamples& s) {
  std::vector<std::complex<double>> data = s.to_complex();
  fft_nd(s.grid(), data, FftDirection::Forward);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& z : data) z *= scale;
  return FourierSpectrum(s.grid(), std::move(data));
}

/// |sum_k |f^(k)|^2 - 1|; zero for unit-modulus samples.
inline double parseval_residual(const FourierSpectrum& sp) {
  double energy = 0.0;
  for (const auto& z : sp.bins()) energy += std::norm(z);
  return std::abs(energy - 1.0);
}

/// The `count` largest coefficients by modulus.
inline std::vector<SpectralPeak> top_peaks(const FourierSpectrum& sp,
                                           std::size_t count) {
  std::vector<SpectralPeak> all;
  all.reserve(sp.size());
  for (std::size_t i = 0; i < sp.size(); ++i) {
    all.push_back({sp.frequency_of(i), std::abs(sp.bins()[i])});
  }
  count = std::min(count, all.size());
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count),
                    all.end(), detail::peak_before);
  all.resize(count);
  return all;
}

/// The k maximizing |f^(k)| when that maximum reaches `floor`; ties go to the
/// lexicographically smallest k.
inline std::optional<SpectralPeak> dominant_frequency(const FourierSpectrum& sp,
                                                      double floor) {
  if (!(floor > 0.0 && floor <= 1.0)) {
    throw ParameterError("dominance floor must lie in (0, 1]");
  }
  std::optional<SpectralPeak> best;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    SpectralPeak cand{sp.frequency_of(i), std::abs(sp.bins()[i])};
    if (!best || detail::peak_before(cand, *best)) best = std::move(cand);
  }
  if (!best || !(best->magnitude >= floor)) return std::nullopt;
  return best;
}

/// Defect in the translation identity for the grid translation y given by
/// `offset`:
///   |c_y(k) e^{-ik.y} - f^(k) f(y) e^{-ik.y}|,
/// where c_y is the coefficient of the shifted samples x -> f(x + y). The
/// first term equals f^(k) for any input (translation invariance of the
/// mean); the two agree for every y exactly when f is multiplicative.
inline double translation_identity_residual(const TorusSamples& s,
                                            const IntVec& k,
                                            const IntVec& offset) {
  detail::check_frequency(s, k);
  const GridShape& grid = s.grid();
  const Index y = grid.wrap(offset);
  const std::complex<double> shifted = coefficient(shift_samples(s, offset), k);
  const std::complex<double> base = coefficient(s, k);
  const std::complex<double> f_y = s.at(y).to_complex();

  double turns = 0.0;
  const Index kw = grid.wrap(k);
  for (std::size_t a = 0; a < grid.dim(); ++a) {
    const std::size_t n = grid.count(a);
    turns += static_cast<double>((kw[a] * y[a]) % n) / static_cast<double>(n);
  }
  const UnitCircleValue w = from_turns(turns);
  const std::complex<double> rot(w.re, -w.im);  // e^{-i k.y}
  return std::abs(shifted * rot - base * f_y * rot);
}

}  // namespace charfourier
