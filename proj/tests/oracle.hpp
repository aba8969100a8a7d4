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

// Test-only reference computations. Nothing here calls into the FFT, the
// coefficient routine or the identifiers; each oracle is the textbook
// definition evaluated in long double.

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using LComplex = std::complex<long double>;
inline constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// Row-major digits of `flat` for the given counts.
inline std::vector<std::size_t> digits(std::size_t flat,
                                       const std::vector<std::size_t>& counts) {
  std::vector<std::size_t> d(counts.size());
  for (std::size_t a = counts.size(); a-- > 0;) {
    d[a] = flat % counts[a];
    flat /= counts[a];
  }
  return d;
}

inline std::size_t total(const std::vector<std::size_t>& counts) {
  std::size_t n = 1;
  for (auto c : counts) n *= c;
  return n;
}

/// (1/M) sum_m f(x_m) exp(-i k.x_m), summed directly in long double.
inline std::complex<double> direct_coefficient(
    const std::vector<std::complex<double>>& f,
    const std::vector<std::size_t>& counts, const std::vector<std::int64_t>& k) {
  const std::size_t m_total = total(counts);
  LComplex acc = 0.0L;
  for (std::size_t flat = 0; flat < m_total; ++flat) {
    const auto m = digits(flat, counts);
    long double phase = 0.0L;
    for (std::size_t a = 0; a < counts.size(); ++a) {
      phase += kTwoPiL * static_cast<long double>(k[a]) *
               static_cast<long double>(m[a]) / static_cast<long double>(counts[a]);
    }
    acc += LComplex(f[flat].real(), f[flat].imag()) *
           LComplex(std::cos(phase), -std::sin(phase));
  }
  acc /= static_cast<long double>(m_total);
  return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

/// Unnormalized 1-D DFT by definition.
inline std::vector<std::complex<double>> direct_dft(
    const std::vector<std::complex<double>>& x, int sign = -1) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    LComplex acc = 0.0L;
    for (std::size_t m = 0; m < n; ++m) {
      const long double phase = sign * kTwoPiL *
                                static_cast<long double>((k * m) % n) /
                                static_cast<long double>(n);
      acc += LComplex(x[m].real(), x[m].imag()) *
             LComplex(std::cos(phase), std::sin(phase));
    }
    out[k] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  }
  return out;
}

/// max over all pairs |f(a + b) - f(a) f(b)| with index addition mod counts.
inline double exhaustive_hom_defect(const std::vector<std::complex<double>>& f,
                                    const std::vector<std::size_t>& counts) {
  const std::size_t n = total(counts);
  double worst = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    const auto da = digits(a, counts);
    for (std::size_t b = 0; b < n; ++b) {
      const auto db = digits(b, counts);
      std::size_t s = 0;
      for (std::size_t ax = 0; ax < counts.size(); ++ax) {
        s = s * counts[ax] + (da[ax] + db[ax]) % counts[ax];
      }
      worst = std::max(worst, std::abs(f[s] - f[a] * f[b]));
    }
  }
  return worst;
}

/// Least-squares slope of the unwrapped phase of 1-D samples against
/// x_m = 2pi m / N; recovers alpha for e^{i alpha x} when consecutive phase
/// steps stay below pi.
inline double phase_slope_fit(const std::vector<std::complex<double>>& f) {
  const std::size_t n = f.size();
  std::vector<long double> phase(n);
  phase[0] = std::arg(f[0]);
  for (std::size_t m = 1; m < n; ++m) {
    long double step = std::arg(f[m] / f[m - 1]);
    phase[m] = phase[m - 1] + step;
  }
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t m = 0; m < n; ++m) {
    const long double x = kTwoPiL * m / n;
    sx += x;
    sy += phase[m];
    sxx += x * x;
    sxy += x * phase[m];
  }
  const long double nn = static_cast<long double>(n);
  return static_cast<double>((nn * sxy - sx * sy) / (nn * sxx - sx * sx));
}

/// chi_k(m) = exp(2pi i sum_j k_j m_j / N_j) for canonical k.
inline std::vector<std::complex<double>> finite_character(
    const std::vector<std::size_t>& orders, const std::vector<std::size_t>& k) {
  const std::size_t n = total(orders);
  std::vector<std::complex<double>> out(n);
  for (std::size_t flat = 0; flat < n; ++flat) {
    const auto m = digits(flat, orders);
    long double phase = 0.0L;
    for (std::size_t a = 0; a < orders.size(); ++a) {
      phase += kTwoPiL * static_cast<long double>((k[a] * m[a]) % orders[a]) /
               static_cast<long double>(orders[a]);
    }
    out[flat] = {static_cast<double>(std::cos(phase)),
                 static_cast<double>(std::sin(phase))};
  }
  return out;
}

/// argmax_k |<t, chi_k>| / |G| over every character, by brute force.
/// Returns the canonical k as a flat row-major label and the magnitude.
inline std::pair<std::size_t, double> inner_product_argmax(
    const std::vector<std::complex<double>>& t,
    const std::vector<std::size_t>& orders) {
  const std::size_t n = total(orders);
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t kf = 0; kf < n; ++kf) {
    const auto chi = finite_character(orders, digits(kf, orders));
    LComplex acc = 0.0L;
    for (std::size_t m = 0; m < n; ++m) {
      acc += LComplex(t[m].real(), t[m].imag()) *
             LComplex(chi[m].real(), -chi[m].imag());
    }
    const double mag = static_cast<double>(std::abs(acc) / n);
    if (mag > best_mag + 1e-12) {
      best = kf;
      best_mag = mag;
    }
  }
  return {best, best_mag};
}

/// All characters of one group as a dense |G| x |G| matrix, for repeated
/// brute-force inner-product identification in O(|G|^2) per table.
class CharacterMatrix {
 public:
  explicit CharacterMatrix(std::vector<std::size_t> orders)
      : orders_(std::move(orders)), n_(total(orders_)), re_(n_ * n_), im_(n_ * n_) {
    // chi_k(m) depends only on the residues k_a m_a mod N_a, which form an
    // element of G; tabulate those n values once, then index.
    const auto value = finite_character(orders_, std::vector<std::size_t>(orders_.size(), 1));
    for (std::size_t kf = 0; kf < n_; ++kf) {
      const auto k = digits(kf, orders_);
      for (std::size_t mf = 0; mf < n_; ++mf) {
        const auto m = digits(mf, orders_);
        std::size_t r = 0;
        for (std::size_t a = 0; a < orders_.size(); ++a) {
          r = r * orders_[a] + (k[a] * m[a]) % orders_[a];
        }
        re_[kf * n_ + mf] = value[r].real();
        im_[kf * n_ + mf] = value[r].imag();
      }
    }
  }

  std::size_t size() const { return n_; }

  std::vector<std::complex<double>> row(std::size_t kf) const {
    std::vector<std::complex<double>> out(n_);
    for (std::size_t m = 0; m < n_; ++m) out[m] = {re_[kf * n_ + m], im_[kf * n_ + m]};
    return out;
  }

  // (flat canonical k, |<t, chi_k>| / |G|) of the largest inner product.
  std::pair<std::size_t, double> argmax(const std::vector<std::complex<double>>& t) const {
    std::vector<double> tr(n_), ti(n_);
    for (std::size_t m = 0; m < n_; ++m) {
      tr[m] = t[m].real();
      ti[m] = t[m].imag();
    }
    std::size_t best = 0;
    double best_mag = -1.0;
    for (std::size_t kf = 0; kf < n_; ++kf) {
      const double* cr = re_.data() + kf * n_;
      const double* ci = im_.data() + kf * n_;
      // t * conj(chi), two lanes each
      double re[2] = {0.0, 0.0}, im[2] = {0.0, 0.0};
      std::size_t m = 0;
      for (; m + 2 <= n_; m += 2) {
        for (std::size_t j = 0; j < 2; ++j) {
          re[j] += tr[m + j] * cr[m + j] + ti[m + j] * ci[m + j];
          im[j] += ti[m + j] * cr[m + j] - tr[m + j] * ci[m + j];
        }
      }
      for (; m < n_; ++m) {
        re[0] += tr[m] * cr[m] + ti[m] * ci[m];
        im[0] += ti[m] * cr[m] - tr[m] * ci[m];
      }
      const double mag = std::hypot(re[0] + re[1], im[0] + im[1]) / static_cast<double>(n_);
      if (mag > best_mag + 1e-12) {
        best = kf;
        best_mag = mag;
      }
    }
    return {best, best_mag};
  }

 private:
  std::vector<std::size_t> orders_;
  std::size_t n_;
  std::vector<double> re_, im_;
};

}  // namespace oracle
