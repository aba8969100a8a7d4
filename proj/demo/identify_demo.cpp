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

// Samples a few functions on a 64-point grid and prints what the identifiers
// make of them.

#include <cmath>
#include <complex>
#include <cstdio>

#include "charfourier.hpp"

namespace cf = charfourier;

static void show(const char* label, const cf::CharacterReport& r) {
  std::printf("%-28s %-16s", label, cf::to_string(r.verdict));
  if (r.has_frequency()) {
    std::printf(" freq=");
    for (double f : r.frequency()) std::printf("%g ", f);
  }
  std::printf(" peak=%.6f hom=%.3g\n", r.spectral_peak, r.hom_residual);
}

int main() {
  const std::vector<std::size_t> grid{64};

  show("e^{-7ix}", cf::identify_torus(cf::sample_character_torus({-7}, grid)));
  show("e^{3.75ix} on the line",
       cf::identify_line(cf::sample_character_line({3.75}, grid)));
  show("e^{-2.5ix} on the line",
       cf::identify_line(cf::sample_character_line({-2.5}, grid)));
  show("e^{4ix} with 0.01 rad jitter",
       cf::identify_torus(cf::add_phase_noise(
           cf::sample_character_torus({4}, grid), 0.01, 1)));
  show("e^{i sin x}",
       cf::identify_torus(cf::sample_function(
           cf::GridShape(grid), [](const cf::RealVec& x) {
             return std::polar(1.0, std::sin(x[0]));
           })));
  show("random phases", cf::identify_torus(cf::sample_random_phase(grid, 7)));
  return 0;
}
