// Copyright 2026 The polydrive Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "polydrive/drive.hpp"
#include "polydrive/error.hpp"

namespace polydrive {
namespace {

constexpr double kPi = std::numbers::pi;

DriveParams params(int pairs, Rational r, int m = 1) {
  DriveParams p;
  p.pairs = pairs;
  p.ratio = r;
  p.scale_root = m;
  return p;
}

TEST(Rational, NormalizesToLowestTerms) {
  const Rational r(6, -9);
  EXPECT_EQ(r.num(), -2);
  EXPECT_EQ(r.den(), 3);
  EXPECT_EQ(Rational(9, 3), Rational(3, 1));
  EXPECT_EQ(Rational(3, 1).str(), "3");
  EXPECT_EQ(Rational(2, 3).str(), "2/3");
}

TEST(Rational, ZeroDenominatorIsAnError) {
  try {
    Rational(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  EXPECT_THROW(Rational::parse("1/0"), Error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/3"), Rational(1, 3));
  EXPECT_EQ(Rational::parse("4"), Rational(4, 1));
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_THROW(Rational::parse("x/3"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
  EXPECT_THROW(Rational::parse("1/"), Error);
}

TEST(DriveParams, SpacingFromRatio) {
  EXPECT_DOUBLE_EQ(params(2, Rational(1, 1)).spacing(), 2.0);
  EXPECT_DOUBLE_EQ(params(2, Rational(3, 1)).spacing(), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(params(2, Rational(1, 3)).spacing(), 6.0);
  EXPECT_DOUBLE_EQ(params(10, Rational(1, 1), 2).spacing(), 2.0 * std::sqrt(2.0));
}

TEST(DriveParams, Validation) {
  DriveParams p;
  p.omega = 0.0;
  EXPECT_THROW(p.validate(), Error);
  p = params(-1, Rational(1, 1));
  EXPECT_THROW(p.validate(), Error);
  p = params(1, Rational(0, 1));
  EXPECT_THROW(p.validate(), Error);
  p = params(1, Rational(1, 1), 0);
  EXPECT_THROW(p.validate(), Error);
  EXPECT_NO_THROW(params(3, Rational(1, 3)).validate());
}

TEST(Envelope, MatchesDirichletKernel) {
  // 10^4 samples per (N, Delta), skipping the removable singularities.
  for (int n : {0, 1, 2, 10, 50}) {
    for (const Rational& r : {Rational(1, 1), Rational(3, 1), Rational(1, 3)}) {
      const DriveParams p = params(n, r);
      for (int i = 0; i < 10000; ++i) {
        const double t = 0.0037 + 30.0 * i / 10000.0;
        const double direct = envelope(t, p);
        double kernel = 0.0;
        try {
          kernel = envelope_dirichlet(t, p);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::kNearSingular);
          continue;
        }
        EXPECT_NEAR(direct, kernel, 1e-9 * (2 * n + 1)) << "N=" << n << " t=" << t;
      }
    }
  }
}

TEST(Envelope, DirichletSingularityIsReported) {
  try {
    envelope_dirichlet(0.0, params(2, Rational(1, 1)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNearSingular);
  }
  // The direct sum is smooth there: A_N(0) = (2N + 1) Omega.
  EXPECT_DOUBLE_EQ(envelope(0.0, params(2, Rational(1, 1))), 5.0);
}

TEST(PhaseIntegral, MatchesAdaptiveQuadrature) {
  for (int n : {0, 1, 2, 10}) {
    for (const Rational& r : {Rational(1, 1), Rational(3, 1), Rational(1, 3)}) {
      const DriveParams p = params(n, r);
      for (double t : {0.0, 0.3, 1.7, 5.0, 12.25, 30.0}) {
        const double quad = t == 0.0 ? 0.0
                                     : oracle::simpson([&](double s) { return envelope(s, p); },
                                                       0.0, t, 1e-13);
        EXPECT_NEAR(phase_integral(t, p), quad, 1e-9) << "N=" << n << " t=" << t;
      }
    }
  }
}

TEST(PhaseIntegral, DerivativeIsEnvelope) {
  const DriveParams p = params(10, Rational(1, 1), 2);
  const double h = 1e-5;
  for (double t = 0.05; t < 15.0; t += 0.37) {
    const double fd = (phase_integral(t + h, p) - phase_integral(t - h, p)) / (2.0 * h);
    EXPECT_NEAR(fd, envelope(t, p), 1e-6 * (2 * p.pairs + 1));
  }
}

TEST(PhaseIntegral, PropertyGrowsOnAverage) {
  // The oscillating part is bounded by 2 Omega H_N / Delta.
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  const DriveParams p = params(10, Rational(1, 3));
  double harmonic = 0.0;
  for (int n = 1; n <= p.pairs; ++n) harmonic += 1.0 / n;
  for (int i = 0; i < 1000; ++i) {
    const double t = u(rng);
    EXPECT_LE(std::abs(phase_integral(t, p) - t), 2.0 * harmonic / p.spacing() + 1e-12);
  }
}

TEST(BranchIndex, FloorOfTurns) {
  EXPECT_EQ(branch_index(0.0), 0);
  EXPECT_EQ(branch_index(2.0 * kPi - 1e-9), 0);
  EXPECT_EQ(branch_index(2.0 * kPi + 1e-9), 1);
  EXPECT_EQ(branch_index(13.0 * kPi), 6);
  EXPECT_THROW(branch_index(-1.0), Error);
}

struct ClassifyCase {
  Rational ratio;
  RatioClass::Kind kind;
  std::int64_t j;
  std::int64_t k;
  const char* text;
};

class ClassifyTable : public ::testing::TestWithParam<ClassifyCase> {};

TEST_P(ClassifyTable, Matches) {
  const ClassifyCase& c = GetParam();
  const RatioClass got = classify(c.ratio);
  EXPECT_EQ(got.kind, c.kind);
  EXPECT_EQ(got.j, c.j);
  EXPECT_EQ(got.k, c.k);
  EXPECT_EQ(got.str(), c.text);
}

using K = RatioClass::Kind;
INSTANTIATE_TEST_SUITE_P(
    Ratios, ClassifyTable,
    ::testing::Values(ClassifyCase{Rational(1, 1), K::kConclusionI, 0, 0, "ConclusionI(j=0,k=0)"},
                      ClassifyCase{Rational(3, 1), K::kConclusionI, 1, 0, "ConclusionI(j=1,k=0)"},
                      ClassifyCase{Rational(9, 3), K::kConclusionI, 1, 0, "ConclusionI(j=1,k=0)"},
                      ClassifyCase{Rational(1, 3), K::kConclusionII, 0, 1, "ConclusionII(j=0,k=1)"},
                      ClassifyCase{Rational(3, 5), K::kConclusionII, 1, 2, "ConclusionII(j=1,k=2)"},
                      ClassifyCase{Rational(5, 3), K::kConclusionII, 2, 1, "ConclusionII(j=2,k=1)"},
                      ClassifyCase{Rational(2, 1), K::kGeneric, 0, 0, "Generic"},
                      ClassifyCase{Rational(2, 3), K::kGeneric, 0, 0, "Generic"},
                      ClassifyCase{Rational(1, 4), K::kGeneric, 0, 0, "Generic"}));

TEST(StabilizationWindows, FormulaForFirstWindows) {
  // k = 1: start (2 k' k + k' - 1) pi = (3 k' - 1) pi for k' = 1, 3, 5.
  const auto w = stabilization_windows(1, 3);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w[0].start, 2.0 * kPi);
  EXPECT_DOUBLE_EQ(w[0].end, 4.0 * kPi);
  EXPECT_DOUBLE_EQ(w[1].start, 8.0 * kPi);
  EXPECT_DOUBLE_EQ(w[2].start, 14.0 * kPi);
  EXPECT_TRUE(w[0].contains(2.0 * kPi));
  EXPECT_FALSE(w[0].contains(4.0 * kPi));
  EXPECT_THROW(stabilization_windows(-1, 2), Error);
}

TEST(StabilizationWindows, WindowsAreTwoPiWide) {
  for (std::int64_t k = 0; k < 6; ++k) {
    for (const auto& w : stabilization_windows(k, 8)) EXPECT_NEAR(w.end - w.start, 2.0 * kPi, 1e-15 * w.end);
  }
}

}  // namespace
}  // namespace polydrive
