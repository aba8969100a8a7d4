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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "charfourier/errors.hpp"

namespace charfourier {

using IntVec = std::vector<std::int64_t>;
using RealVec = std::vector<double>;
using Index = std::vector<std::size_t>;

/// Per-axis counts of a regular grid (equivalently the orders of a finite
/// group Z_{N1} x ... x Z_{Nn}). Row-major: axis 0 varies slowest.
class GridShape {
 public:
  GridShape() = default;

  explicit GridShape(std::vector<std::size_t> counts, std::size_t min_count = 1)
      : counts_(std::move(counts)) {
    if (counts_.empty()) throw ParameterError("grid must have at least one axis");
    strides_.assign(counts_.size(), 1);
    std::size_t total = 1;
    for (std::size_t axis = counts_.size(); axis-- > 0;) {
      if (counts_[axis] < min_count) {
        throw ParameterError("grid axis " + std::to_string(axis) + " has count " +
                             std::to_string(counts_[axis]) + ", need at least " +
                             std::to_string(min_count));
      }
      strides_[axis] = total;
      if (total > std::numeric_limits<std::size_t>::max() / counts_[axis]) {
        throw ParameterError("grid size overflows the index range");
      }
      total *= counts_[axis];
    }
    size_ = total;
  }

  std::size_t dim() const { return counts_.size(); }
  std::size_t size() const { return size_; }
  std::size_t count(std::size_t axis) const { return counts_[axis]; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }
  const std::vector<std::size_t>& counts() const { return counts_; }

  std::size_t flatten(const Index& idx) const {
    std::size_t flat = 0;
    for (std::size_t a = 0; a < dim(); ++a) flat += idx[a] * strides_[a];
    return flat;
  }

  Index unflatten(std::size_t flat) const {
    Index idx(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      idx[a] = flat / strides_[a];
      flat %= strides_[a];
    }
    return idx;
  }

  // Reduce an arbitrary signed integer vector onto the grid (mod counts).
  Index wrap(const IntVec& v) const {
    if (v.size() != dim()) {
      throw ParameterError("vector has " + std::to_string(v.size()) +
                           " components, grid has " + std::to_string(dim()) +
                           " axes");
    }
    Index idx(dim());
    for (std::size_t a = 0; a < dim(); ++a) {
      const auto n = static_cast<std::int64_t>(counts_[a]);
      std::int64_t r = v[a] % n;
      if (r < 0) r += n;
      idx[a] = static_cast<std::size_t>(r);
    }
    return idx;
  }

  // Flat index of (a + b) mod counts; the group law of Z_{N1} x ... x Z_{Nn}.
  std::size_t add(std::size_t a, std::size_t b) const {
    std::size_t flat = 0;
    for (std::size_t axis = 0; axis < dim(); ++axis) {
      const std::size_t da = a / strides_[axis];
      const std::size_t db = b / strides_[axis];
      a %= strides_[axis];
      b %= strides_[axis];
      std::size_t s = da + db;
      if (s >= counts_[axis]) s -= counts_[axis];
      flat += s * strides_[axis];
    }
    return flat;
  }

  friend bool operator==(const GridShape& x, const GridShape& y) {
    return x.counts_ == y.counts_;
  }

 private:
  std::vector<std::size_t> counts_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

// Advance a multi-index in row-major order; false after the last element.
inline bool next_index(Index& idx, const std::vector<std::size_t>& counts) {
  for (std::size_t a = idx.size(); a-- > 0;) {
    if (++idx[a] < counts[a]) return true;
    idx[a] = 0;
  }
  return false;
}

}  // namespace charfourier
