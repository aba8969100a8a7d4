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

#include "charfourier/char_id.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace charfourier {
namespace {

using Complex = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TorusSamples SinPhase(std::size_t n) {
  return sample_function(GridShape({n}), [](const RealVec& x) {
    return std::polar(1.0, std::sin(x[0]));
  });
}

TEST(IdentifyConfig, Invariants) {
  EXPECT_NO_THROW(IdentifyConfig{}.check());
  EXPECT_THROW((IdentifyConfig{0.0, 0.9, 256, 0}.check()), ParameterError);
  EXPECT_THROW((IdentifyConfig{0.95, 0.9, 256, 0}.check()), ParameterError);
  EXPECT_THROW((IdentifyConfig{1e-9, 1.1, 256, 0}.check()), ParameterError);
  EXPECT_THROW((IdentifyConfig{1e-9, 0.9, 0, 0}.check()), ParameterError);
  EXPECT_NO_THROW((IdentifyConfig{1e-9, 1.0, 1, 0}.check()));
}

TEST(HomomorphismResidual, ExactCharacter) {
  EXPECT_LT(homomorphism_residual(sample_character_torus({-7, 2}, {16, 8}), 256, 0),
            1e-12);
}

TEST(HomomorphismResidual, SinPhaseAgainstExhaustive) {
  const TorusSamples f = SinPhase(64);
  const double sampled = homomorphism_residual(f, 256, 0);
  const double exhaustive = oracle::exhaustive_hom_defect(f.to_complex(), {64});
  // Exhaustive maximum: 1.9258570813996241975... (40-digit evaluation).
  EXPECT_NEAR(exhaustive, 1.9258570813996242, 1e-12);
  EXPECT_GT(sampled, 0.5);
  EXPECT_LE(sampled, exhaustive + 1e-15);
}

TEST(HomomorphismResidual, ForcedIdentityPair) {
  // A character times a constant c != 1 has f(0) = c.
  std::vector<UnitCircleValue> v = sample_character_torus({3}, {32}).values();
  const UnitCircleValue c = from_angle(0.3);
  for (auto& x : v) x = mul(x, c);
  const TorusSamples s({32}, v);
  const double f0 = std::abs(v[0].to_complex() - v[0].to_complex() * v[0].to_complex());
  EXPECT_GT(f0, 0.0);
  EXPECT_GE(homomorphism_residual(s, 1, 123), f0 - 1e-15);
  EXPECT_THROW(homomorphism_residual(s, 0, 0), ParameterError);
}

TEST(HomomorphismResidual, Deterministic) {
  const TorusSamples s = sample_random_phase({64}, 9);
  EXPECT_EQ(homomorphism_residual(s, 100, 5), homomorphism_residual(s, 100, 5));
}

TEST(IdentifyTorus, Examples) {
  const CharacterReport r = identify_torus(sample_character_torus({-7}, {64}));
  EXPECT_EQ(r.verdict, Verdict::ExactCharacter);
  ASSERT_TRUE(r.k);
  EXPECT_EQ(*r.k, IntVec{-7});
  EXPECT_LT(r.hom_residual, 1e-12);
  EXPECT_GT(r.spectral_peak, 1.0 - 1e-12);
  EXPECT_FALSE(r.alpha);
  EXPECT_EQ(r.frequency(), RealVec{-7.0});

  const CharacterReport c = identify_torus(sample_character_torus({0}, {10}));
  EXPECT_EQ(c.verdict, Verdict::ExactCharacter);
  EXPECT_EQ(*c.k, IntVec{0});
}

TEST(IdentifyTorus, PhaseNoiseIsApproximate) {
  const TorusSamples s = add_phase_noise(sample_character_torus({4}, {64}), 0.01, 1);
  const CharacterReport r = identify_torus(s);
  EXPECT_EQ(r.verdict, Verdict::ApproxCharacter);
  EXPECT_EQ(*r.k, IntVec{4});
  // Mean of e^{iu}, u ~ U[-0.01, 0.01], is sin(0.01)/0.01 = 0.99998333...
  EXPECT_NEAR(std::abs(oracle::direct_coefficient(s.to_complex(), {64}, {4})),
              r.spectral_peak, 1e-12);
  EXPECT_NEAR(r.spectral_peak, 0.99998, 1e-4);
  EXPECT_LT(r.spectral_peak, 1.0 - 1e-9);
}

TEST(IdentifyTorus, NonCharacters) {
  const CharacterReport s = identify_torus(SinPhase(64));
  EXPECT_EQ(s.verdict, Verdict::NotCharacter);
  EXPECT_FALSE(s.k);
  EXPECT_NEAR(s.spectral_peak, 0.7651976865579666, 1e-12);

  // A unit spike scaled by -1 has a perfect spectrum but f(0) = -1.
  std::vector<UnitCircleValue> v = sample_character_torus({2}, {16}).values();
  for (auto& x : v) x = {-x.re, -x.im};
  const CharacterReport neg = identify_torus(TorusSamples({16}, v));
  EXPECT_GT(neg.spectral_peak, 1.0 - 1e-12);
  EXPECT_NEAR(neg.hom_residual, 2.0, 1e-12);
  EXPECT_EQ(neg.verdict, Verdict::NotCharacter);
}

TEST(IdentifyTorus, ReportsTopPeaks) {
  const CharacterReport r = identify_torus(sample_character_torus({3}, {8}));
  ASSERT_EQ(r.peaks.size(), kReportedPeaks);
  EXPECT_EQ(r.peaks[0].k, IntVec{3});
  const CharacterReport tiny = identify_torus(sample_character_torus({0, 0}, {2, 2}));
  EXPECT_EQ(tiny.peaks.size(), 4u);
}

TEST(IdentifyLine, PureFractional) {
  const CharacterReport r = identify_line(sample_character_line({0.5}, {64}));
  EXPECT_EQ(r.verdict, Verdict::ExactCharacter);
  EXPECT_EQ(r.mode, Mode::Line);
  EXPECT_EQ(r.beta, RealVec{0.5});
  EXPECT_EQ(*r.k, IntVec{0});
  EXPECT_NEAR((*r.alpha)[0], 0.5, 1e-15);
}

TEST(IdentifyLine, AgreesWithPhaseSlopeFit) {
  for (double alpha : {3.75, -2.5}) {
    const LineSamples ls = sample_character_line({alpha}, {64});
    const double fit = oracle::phase_slope_fit(ls.base().to_complex());
    EXPECT_NEAR(fit, alpha, 1e-9);
    const CharacterReport r = identify_line(ls);
    EXPECT_EQ(r.verdict, Verdict::ExactCharacter);
    EXPECT_NEAR((*r.alpha)[0], fit, 1e-9);
  }
  const CharacterReport a = identify_line(sample_character_line({3.75}, {64}));
  EXPECT_NEAR(a.beta[0], 0.75, 1e-15);
  EXPECT_EQ(*a.k, IntVec{3});
  const CharacterReport b = identify_line(sample_character_line({-2.5}, {64}));
  EXPECT_NEAR(b.beta[0], 0.5, 1e-15);
  EXPECT_EQ(*b.k, IntVec{-3});
}

TEST(IdentifyLine, QuotientMatchesExplicitConstruction) {
  for (double alpha : {0.25, 7.125, -11.6, 30.99}) {
    const LineSamples ls = sample_character_line({alpha}, {64});
    const RealVec beta = extract_beta(ls);
    const double frac = alpha - std::floor(alpha);
    EXPECT_NEAR(beta[0], frac, 1e-14);
    // h = f / e^{i beta x} built by hand is 2pi-periodic: h(0) = h(2pi) = 1.
    const LineSamples g = sample_character_line({frac}, {64});
    const TorusSamples h = pointwise_div(ls.base(), g.base());
    const Complex h_end = ls.endpoint_values()[0].to_complex() /
                          g.endpoint_values()[0].to_complex();
    EXPECT_LT(std::abs(h_end - h[0].to_complex()), 1e-12);
    const CharacterReport explicit_h = identify_torus(h);
    const CharacterReport r = identify_line(ls);
    EXPECT_EQ(r.k, explicit_h.k);
    EXPECT_EQ(*r.k, IntVec{static_cast<std::int64_t>(std::floor(alpha))});
  }
}

TEST(IdentifyLine, MultiDimensional) {
  const CharacterReport r = identify_line(sample_character_line({1.25, -2.5, 0.0}, {8, 8, 8}));
  EXPECT_EQ(r.verdict, Verdict::ExactCharacter);
  ASSERT_TRUE(r.alpha);
  EXPECT_NEAR((*r.alpha)[0], 1.25, 1e-12);
  EXPECT_NEAR((*r.alpha)[1], -2.5, 1e-12);
  EXPECT_NEAR((*r.alpha)[2], 0.0, 1e-12);
  ASSERT_EQ(r.admissible_alpha.size(), 3u);
  EXPECT_EQ(r.admissible_alpha[0], std::make_pair(-3.0, 4.0));
}

TEST(IdentifyLine, AliasedFrequencyWraps) {
  // Beyond the admissible range the integer part wraps; documented behaviour.
  const std::size_t n = 16;
  std::vector<UnitCircleValue> v(n);
  for (std::size_t m = 0; m < n; ++m) v[m] = from_angle(9.25 * kTwoPi * m / n);
  const LineSamples ls(TorusSamples({n}, v), {from_angle(9.25 * kTwoPi)});
  const CharacterReport r = identify_line(ls);
  EXPECT_EQ(r.admissible_alpha[0], std::make_pair(-7.0, 8.0));
  EXPECT_NEAR((*r.alpha)[0], 9.25 - 16.0, 1e-9);
}

TEST(IdentifyLine, BadEndpointIsNotACharacter) {
  const LineSamples good = sample_character_line({2.5}, {32});
  const LineSamples bad(good.base(), {UnitCircleValue{0.0, 0.0}});
  const CharacterReport r = identify_line(bad);
  EXPECT_EQ(r.verdict, Verdict::NotCharacter);
  EXPECT_FALSE(r.alpha);
  EXPECT_GE(r.hom_residual, 1.0);
}

TEST(Classify, Dispatch) {
  const TorusSamples t = sample_character_torus({5}, {32});
  const LineSamples l = sample_character_line({5.5}, {32});
  EXPECT_EQ(classify(t), identify_torus(t));
  EXPECT_EQ(classify(l), identify_line(l));
}

TEST(Classify, RandomNoise) {
  const TorusSamples s = sample_random_phase({64}, 7);
  const CharacterReport r = classify(s);
  EXPECT_EQ(r.verdict, Verdict::NotCharacter);
  const std::vector<Complex> raw = s.to_complex();
  double max_coeff = 0.0;
  for (std::int64_t k = -32; k < 32; ++k) {
    max_coeff = std::max(max_coeff, std::abs(oracle::direct_coefficient(raw, {64}, {k})));
  }
  EXPECT_NEAR(r.spectral_peak, max_coeff, 1e-12);
  EXPECT_LT(r.spectral_peak, 0.5);
}

TEST(Identify, ExactImpliesSpikeAndHomomorphism) {
  for (std::int64_t k = -15; k <= 15; ++k) {
    const TorusSamples s = sample_character_torus({k}, {32});
    const CharacterReport r = identify_torus(s);
    ASSERT_EQ(r.verdict, Verdict::ExactCharacter);
    EXPECT_LE(homomorphism_residual(s, 256, 0), 1e-9);
    const FourierSpectrum sp = spectrum(s);
    for (std::size_t i = 0; i < sp.size(); ++i) {
      if (sp.frequency_of(i) != IntVec{k}) {
        ASSERT_LT(std::abs(sp.bins()[i]), 1e-9);
      }
    }
  }
}

TEST(Identify, Deterministic) {
  const TorusSamples s = add_phase_noise(sample_character_torus({1, 2}, {8, 8}), 0.05, 3);
  IdentifyConfig cfg;
  cfg.seed = 17;
  EXPECT_EQ(identify_torus(s, cfg), identify_torus(s, cfg));
  const LineSamples l = sample_character_line({-1.75, 2.5}, {8, 16});
  EXPECT_EQ(identify_line(l, cfg), identify_line(l, cfg));
}

}  // namespace
}  // namespace charfourier
