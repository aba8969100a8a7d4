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

// Mixed-radix Cooley-Tukey FFT for arbitrary lengths.
//
// A length N = p_1 p_2 ... p_r is split by its prime factors (smallest first);
// each stage performs p-point DFT butterflies with twiddles read from a single
// table of N roots of unity. Prime factors below 64 are handled by a direct
// p-point DFT, so the cost is O(N * sum p_i). Lengths with a prime factor of
// 64 or more go through Bluestein's chirp-z transform on a power-of-two plan.

#include <cmath>
#include <complex>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "charfourier/circle.hpp"
#include "charfourier/errors.hpp"
#include "charfourier/grid.hpp"

namespace charfourier {

enum class FftDirection { Forward, Inverse };

/// Prime factors at or above this use the chirp-z path.
inline constexpr std::size_t kDirectPrimeLimit = 64;

class FftPlan;
std::shared_ptr<const FftPlan> cached_plan(std::size_t n, FftDirection dir);

class FftPlan {
 public:
  using Complex = std::complex<double>;

  explicit FftPlan(std::size_t n, FftDirection dir = FftDirection::Forward)
      : n_(n), dir_(dir) {
    if (n == 0) throw ParameterError("FFT length must be positive");
    std::size_t rest = n;
    for (std::size_t p = 2; p * p <= rest; ++p) {
      while (rest % p == 0) {
        factors_.push_back(p);
        rest /= p;
      }
    }
    if (rest > 1) factors_.push_back(rest);

    // twiddles_[t] = exp(-+ 2pi i t / N), each evaluated independently.
    twiddles_.resize(n);
    const double sign = dir == FftDirection::Forward ? -1.0 : 1.0;
    for (std::size_t t = 0; t < n; ++t) {
      const UnitCircleValue w = from_turns(static_cast<double>(t) /
                                           static_cast<double>(n));
      twiddles_[t] = Complex(w.re, sign * w.im);
    }
    if (largest_factor() >= kDirectPrimeLimit) init_chirp(sign);
  }

  std::size_t size() const { return n_; }
  FftDirection direction() const { return dir_; }
  const std::vector<std::size_t>& factors() const { return factors_; }

  /// Unnormalized transform of `in` (read with `in_stride`) into `out`.
  void execute(const Complex* in, std::size_t in_stride, Complex* out) const {
    if (chirp_forward_) {
      execute_chirp(in, in_stride, out);
      return;
    }
    std::vector<Complex> scratch(largest_factor());
    stage(in, in_stride, out, n_, 0, scratch);
  }

  void execute(std::span<const Complex> in, std::span<Complex> out) const {
    if (in.size() != n_ || out.size() != n_) {
      throw ParameterError("FFT buffer size does not match plan");
    }
    execute(in.data(), 1, out.data());
  }

  std::vector<Complex> operator()(std::span<const Complex> in) const {
    std::vector<Complex> out(n_);
    execute(in, out);
    return out;
  }

 private:
  std::size_t largest_factor() const {
    std::size_t p = 1;
    for (std::size_t f : factors_) p = f > p ? f : p;
    return p;
  }

  // Transform of length n, the subsequence in[0], in[stride], ...
  void stage(const Complex* in, std::size_t stride, Complex* out, std::size_t n,
             std::size_t level, std::vector<Complex>& scratch) const {
    if (n == 1) {
      out[0] = in[0];
      return;
    }
    const std::size_t p = factors_[level];
    const std::size_t m = n / p;
    // Decimation in time: sub-transform r takes in[r], in[r + p], ...
    for (std::size_t r = 0; r < p; ++r) {
      stage(in + r * stride, stride * p, out + r * m, m, level + 1, scratch);
    }
    // Twiddle step for length n is (N / n) in the length-N table. Inputs are
    // pre-twiddled by w_n^{rk} (rk < n), then a p-point DFT over w_p.
    const std::size_t step = n_ / n;
    if (p == 2) {
      for (std::size_t k = 0; k < m; ++k) {
        const Complex a = out[k];
        const Complex b = mul(out[k + m], twiddles_[k * step]);
        out[k] = Complex(a.real() + b.real(), a.imag() + b.imag());
        out[k + m] = Complex(a.real() - b.real(), a.imag() - b.imag());
      }
      return;
    }
    const std::size_t root_step = n_ / p;
    for (std::size_t k = 0; k < m; ++k) {
      scratch[0] = out[k];
      for (std::size_t r = 1; r < p; ++r) {
        scratch[r] = mul(out[r * m + k], twiddles_[r * k * step]);
      }
      for (std::size_t q = 0; q < p; ++q) {
        double re = scratch[0].real();
        double im = scratch[0].imag();
        std::size_t e = 0;  // r q mod p
        for (std::size_t r = 1; r < p; ++r) {
          e += q;
          if (e >= p) e -= p;
          const Complex& x = scratch[r];
          const Complex& w = twiddles_[e * root_step];
          re += x.real() * w.real() - x.imag() * w.imag();
          im += x.real() * w.imag() + x.imag() * w.real();
        }
        out[k + q * m] = Complex(re, im);
      }
    }
  }

  // X_k = d_k sum_j (x_j d_j) conj(d_{k-j}) with d_t = exp(+-i pi t^2 / N);
  // the sum is a cyclic convolution of length m >= 2N - 1.
  void init_chirp(double sign) {
    std::size_t m = 1;
    while (m < 2 * n_ - 1) m *= 2;
    chirp_.resize(n_);
    for (std::size_t t = 0; t < n_; ++t) {
      // t^2 mod 2N keeps the angle exact before rounding.
      const std::size_t q = (t * t) % (2 * n_);
      const UnitCircleValue w =
          from_turns(static_cast<double>(q) / static_cast<double>(2 * n_));
      chirp_[t] = Complex(w.re, sign * w.im);
    }
    chirp_forward_ = cached_plan(m, FftDirection::Forward);
    chirp_inverse_ = cached_plan(m, FftDirection::Inverse);
    std::vector<Complex> b(m);
    b[0] = std::conj(chirp_[0]);
    for (std::size_t t = 1; t < n_; ++t) b[t] = b[m - t] = std::conj(chirp_[t]);
    kernel_.resize(m);
    chirp_forward_->execute(b.data(), 1, kernel_.data());
    const double scale = 1.0 / static_cast<double>(m);
    for (auto& z : kernel_) z *= scale;
  }

  void execute_chirp(const Complex* in, std::size_t in_stride, Complex* out) const {
    const std::size_t m = kernel_.size();
    std::vector<Complex> a(m), freq(m);
    for (std::size_t j = 0; j < n_; ++j) a[j] = mul(in[j * in_stride], chirp_[j]);
    chirp_forward_->execute(a.data(), 1, freq.data());
    for (std::size_t t = 0; t < m; ++t) freq[t] = mul(freq[t], kernel_[t]);
    chirp_inverse_->execute(freq.data(), 1, a.data());
    for (std::size_t k = 0; k < n_; ++k) out[k] = mul(a[k], chirp_[k]);
  }

  static Complex mul(const Complex& x, const Complex& y) {
    return Complex(x.real() * y.real() - x.imag() * y.imag(),
                   x.real() * y.imag() + x.imag() * y.real());
  }

  std::size_t n_;
  FftDirection dir_;
  std::vector<std::size_t> factors_;
  std::vector<Complex> twiddles_;
  std::vector<Complex> chirp_, kernel_;
  std::shared_ptr<const FftPlan> chirp_forward_, chirp_inverse_;
};

/// Process-wide plan for (n, dir). Plans are immutable, so sharing is safe;
/// the cache is dropped wholesale once it holds too many sizes.
inline std::shared_ptr<const FftPlan> cached_plan(std::size_t n, FftDirection dir) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, FftDirection>, std::shared_ptr<const FftPlan>> cache;
  constexpr std::size_t kMaxPlans = 256;
  const auto key = std::make_pair(n, dir);
  {
    const std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  // Built unlocked: a chirp plan fetches its inner plans from here.
  auto plan = std::make_shared<const FftPlan>(n, dir);
  const std::lock_guard<std::mutex> lock(mu);
  if (cache.size() >= kMaxPlans) cache.clear();
  return cache.emplace(key, std::move(plan)).first->second;
}

/// In-place unnormalized multi-dimensional transform of row-major data,
/// one axis at a time.
inline void fft_nd(const GridShape& grid, std::span<std::complex<double>> data,
                   FftDirection dir = FftDirection::Forward) {
  if (data.size() != grid.size()) {
    throw ParameterError("fft_nd: data size does not match grid");
  }
  using Complex = std::complex<double>;
  for (std::size_t axis = 0; axis < grid.dim(); ++axis) {
    const std::size_t n = grid.count(axis);
    if (n == 1) continue;
    const std::size_t stride = grid.stride(axis);
    const auto plan = cached_plan(n, dir);
    std::vector<Complex> line(n);
    // Lines along `axis` start at every index whose axis digit is zero.
    const std::size_t block = stride * n;
    for (std::size_t outer = 0; outer < grid.size(); outer += block) {
      for (std::size_t inner = 0; inner < stride; ++inner) {
        Complex* base = data.data() + outer + inner;
        plan->execute(base, stride, line.data());
        for (std::size_t i = 0; i < n; ++i) base[i * stride] = line[i];
      }
    }
  }
}

}  // namespace charfourier
