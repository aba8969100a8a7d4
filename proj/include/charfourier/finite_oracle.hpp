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

// Exact ground truth on finite abelian groups Z_{N1} x ... x Z_{Nm}.
//
// The characters of such a group are chi_k(m) = e^{2pi i sum_j k_j m_j / N_j}
// for k in prod_j [0, N_j), and here the homomorphism law can be checked on
// every pair of elements. The sample lattice of an N-point torus grid is the
// group Z_N, which ties this module to the continuum identifiers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/fft.hpp"
#include "charfourier/fourier.hpp"
#include "charfourier/grid.hpp"

namespace charfourier {

inline constexpr std::size_t kEnumerationCap = std::size_t{1} << 20;
inline constexpr std::size_t kAllPairsCap = std::size_t{1} << 16;
inline constexpr std::size_t kSampledPairs = std::size_t{1} << 22;
inline constexpr double kExactDefect = 1e-12;
inline constexpr double kFiniteFloor = 0.9;

struct FiniteGroupSpec {
  std::vector<std::size_t> orders;

  GridShape shape() const { return GridShape(orders, 1); }
  std::size_t size() const { return shape().size(); }

  friend bool operator==(const FiniteGroupSpec&, const FiniteGroupSpec&) = default;
};

class CharacterTable {
 public:
  CharacterTable(FiniteGroupSpec group, std::vector<UnitCircleValue> values)
      : group_(std::move(group)), shape_(group_.shape()),
        values_(std::move(values)) {
    if (values_.size() != shape_.size()) {
      throw ParameterError("character table has " +
                           std::to_string(values_.size()) + " entries, group has " +
                           std::to_string(shape_.size()) + " elements");
    }
  }

  const FiniteGroupSpec& group() const { return group_; }
  const GridShape& shape() const { return shape_; }
  const std::vector<UnitCircleValue>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const UnitCircleValue& operator[](std::size_t i) const { return values_[i]; }

 private:
  FiniteGroupSpec group_;
  GridShape shape_;
  std::vector<UnitCircleValue> values_;
};

/// Canonical label k in prod [0, N_j) -> symmetric label in prod [-N_j/2, N_j/2).
inline IntVec to_symmetric(const IntVec& canonical,
                           const std::vector<std::size_t>& orders) {
  const Index idx = GridShape(orders, 1).wrap(canonical);
  IntVec out(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    out[a] = bin_to_frequency(idx[a], orders[a]);
  }
  return out;
}

/// Any integer label -> canonical label in prod [0, N_j).
inline IntVec to_canonical(const IntVec& k, const std::vector<std::size_t>& orders) {
  const Index idx = GridShape(orders, 1).wrap(k);
  return IntVec(idx.begin(), idx.end());
}

/// chi_k for a canonical (or any, reduced mod N) label k.
inline CharacterTable character_table(const FiniteGroupSpec& g, const IntVec& k) {
  const GridShape shape = g.shape();
  const Index kw = shape.wrap(k);
  std::vector<UnitCircleValue> values;
  values.reserve(shape.size());
  Index m(shape.dim(), 0);
  do {
    double turns = 0.0;
    for (std::size_t a = 0; a < shape.dim(); ++a) {
      const std::size_t n = shape.count(a);
      turns += static_cast<double>((kw[a] * m[a]) % n) / static_cast<double>(n);
    }
    values.push_back(from_turns(turns));
  } while (next_index(m, shape.counts()));
  return CharacterTable(g, std::move(values));
}

/// Every character of g, in row-major order of canonical k. Materializes
/// |G|^2 values.
inline std::vector<CharacterTable> enumerate_characters(
    const FiniteGroupSpec& g, std::size_t cap = kEnumerationCap) {
  const GridShape shape = g.shape();
  if (shape.size() > cap) {
    throw ParameterError("group of size " + std::to_string(shape.size()) +
                         " exceeds the enumeration cap " + std::to_string(cap));
  }
  std::vector<CharacterTable> out;
  out.reserve(shape.size());
  Index k(shape.dim(), 0);
  do {
    out.push_back(character_table(g, IntVec(k.begin(), k.end())));
  } while (next_index(k, shape.counts()));
  return out;
}

struct HomomorphismCheck {
  bool holds = false;
  double worst_defect = 0.0;
  bool exhaustive = true;  // false when pairs were sampled
};

/// max |t(a + b) - t(a) t(b)| over all pairs (groups up to kAllPairsCap
/// elements) or over kSampledPairs seeded random pairs above that.
namespace detail {

// max over b in [from, n) of |v[sum[b]] - v[a] v[b]|^2, where sum[b] is the
// flat index of a + b. `nan` is set when any term is NaN.
inline double pair_defect(const double* re, const double* im, const std::size_t* sum,
                          std::size_t a, std::size_t from, std::size_t n, bool& nan) {
  const double ar = re[a];
  const double ai = im[a];
  // Four independent lanes; a single running max serializes on latency.
  double m[4] = {0.0, 0.0, 0.0, 0.0};
  int bad = 0;
  auto term = [&](std::size_t b) {
    const std::size_t s = sum[b];
    const double dr = re[s] - (ar * re[b] - ai * im[b]);
    const double di = im[s] - (ar * im[b] + ai * re[b]);
    return dr * dr + di * di;
  };
  std::size_t b = from;
  for (; b + 4 <= n; b += 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      const double x = term(b + j);
      m[j] = std::max(m[j], x);
      bad |= (x != x);
    }
  }
  for (; b < n; ++b) {
    const double x = term(b);
    m[0] = std::max(m[0], x);
    bad |= (x != x);
  }
  nan = nan || bad != 0;
  return std::max(std::max(m[0], m[1]), std::max(m[2], m[3]));
}

}  // namespace detail

inline HomomorphismCheck is_homomorphism_exhaustive(const CharacterTable& t,
                                                    std::uint64_t seed = 0) {
  const GridShape& shape = t.shape();
  const std::size_t n = t.size();

  std::vector<double> re(n), im(n);
  for (std::size_t i = 0; i < n; ++i) {
    re[i] = t[i].re;
    im[i] = t[i].im;
  }

  HomomorphismCheck out;
  double worst_sq = 0.0;
  bool nan = false;
  // |f(s) - f(a) f(b)|^2; NaN sticks once seen.
  auto update = [&](std::size_t s, std::size_t a, std::size_t b) {
    const double pr = re[a] * re[b] - im[a] * im[b];
    const double pi = re[a] * im[b] + im[a] * re[b];
    const double dr = re[s] - pr;
    const double di = im[s] - pi;
    const double d = dr * dr + di * di;
    if (!(d <= worst_sq)) worst_sq = d;
  };

  if (n <= kAllPairsCap) {
    // b = (row, d) with d on the last axis. For fixed a, row + a's row is a
    // single lookup and d + a's last digit wraps once.
    // Order-1 axes leave the flat layout unchanged; drop them.
    std::vector<std::size_t> counts;
    for (std::size_t c : shape.counts()) {
      if (c > 1) counts.push_back(c);
    }
    if (counts.empty()) counts.push_back(1);
    const std::size_t last = counts.back();
    const std::size_t rows = n / last;
    counts.pop_back();
    const bool multi = !counts.empty();
    const GridShape prefix = multi ? GridShape(counts) : GridShape();
    std::vector<std::size_t> sum(n);
    for (std::size_t a = 0; a < n; ++a) {
      const std::size_t a_row = a / last;
      const std::size_t a_last = a % last;
      const std::size_t split = last - a_last;
      // The defect is symmetric in (a, b) bit for bit, so b >= a suffices.
      for (std::size_t r = a_row; r < rows; ++r) {
        const std::size_t s0 = multi ? prefix.add(a_row, r) * last : 0;
        std::size_t* out_row = sum.data() + r * last;
        for (std::size_t d = 0; d < split; ++d) out_row[d] = s0 + a_last + d;
        for (std::size_t d = split; d < last; ++d) out_row[d] = s0 + d - split;
      }
      worst_sq = std::max(worst_sq,
                          detail::pair_defect(re.data(), im.data(), sum.data(), a, a, n, nan));
    }
  } else {
    out.exhaustive = false;
    auto visit = [&](std::size_t a, std::size_t b) { update(shape.add(a, b), a, b); };
    visit(0, 0);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < kSampledPairs; ++i) {
      visit(static_cast<std::size_t>(rng() % n), static_cast<std::size_t>(rng() % n));
    }
  }
  if (nan) worst_sq = std::numeric_limits<double>::quiet_NaN();
  out.worst_defect = std::sqrt(worst_sq);
  out.holds = out.worst_defect <= kExactDefect;
  return out;
}

/// Normalized DFT of the table: entry k is (1/|G|) sum_m t(m) conj(chi_k(m)).
inline std::vector<std::complex<double>> finite_spectrum(const CharacterTable& t) {
  std::vector<std::complex<double>> data(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) data[i] = t[i].to_complex();
  fft_nd(t.shape(), data, FftDirection::Forward);
  const double scale = 1.0 / static_cast<double>(t.size());
  for (auto& z : data) z *= scale;
  return data;
}

/// Canonical k of the dominant DFT coefficient when its modulus reaches
/// `floor` (first in row-major order on ties), else nothing.
inline std::optional<IntVec> identify_finite(const CharacterTable& t,
                                             double floor = kFiniteFloor) {
  const std::vector<std::complex<double>> sp = finite_spectrum(t);
  // Squared magnitudes order the same way; one square root at the end.
  std::size_t best = 0;
  double best_sq = -1.0;
  for (std::size_t i = 0; i < sp.size(); ++i) {
    const double sq = std::norm(sp[i]);
    if (sq > best_sq) {
      best = i;
      best_sq = sq;
    }
  }
  if (!(std::sqrt(best_sq) >= floor)) return std::nullopt;
  const Index idx = t.shape().unflatten(best);
  return IntVec(idx.begin(), idx.end());
}

}  // namespace charfourier
