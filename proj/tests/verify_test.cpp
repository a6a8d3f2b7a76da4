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

#include "polydrive/error.hpp"
#include "polydrive/verify.hpp"

namespace polydrive {
namespace {

TEST(Verify, TwoLevelSuitePassesWithSmallDeviation) {
  const VerifyReport r = run_verify("two-level");
  EXPECT_EQ(r.checks.size(), 9u);
  EXPECT_TRUE(r.passed());
  for (const CheckResult& c : r.checks) {
    EXPECT_LE(c.value, 1e-6) << c.name;
    EXPECT_TRUE(c.error.empty());
  }
}

TEST(Verify, LambdaIdentityHolds) {
  const VerifyReport r = run_verify("lambda");
  EXPECT_TRUE(r.passed());
  bool saw_identity = false;
  for (const CheckResult& c : r.checks) {
    if (c.name.find("closed-form population sum") != std::string::npos) {
      saw_identity = true;
      EXPECT_LE(c.value, 1e-12);
    }
  }
  EXPECT_TRUE(saw_identity);
}

TEST(Verify, BellFailsOutsideBlockadeRegime) {
  VerifyOverrides o;
  o.interaction = 5.0;
  const VerifyReport weak = run_verify("bell", o);
  EXPECT_FALSE(weak.passed());
  EXPECT_TRUE(run_verify("bell").passed());
}

TEST(Verify, UnknownSuiteAndBadOverrides) {
  EXPECT_THROW(run_verify("everything"), Error);
  VerifyOverrides o;
  o.interaction = -1.0;
  EXPECT_THROW(run_verify("bell", o), Error);
  o = {};
  o.rel_tol = 2.0;
  EXPECT_THROW(run_verify("bell", o), Error);
  EXPECT_EQ(verify_suites().size(), 5u);
}

TEST(Verify, IntegrationFailureBecomesFailedCheck) {
  VerifyOverrides o;
  o.rel_tol = 1e-3;
  o.interaction = 1e18;  // first step far below the underflow floor
  const VerifyReport r = run_verify("bell", o);
  EXPECT_FALSE(r.passed());
  bool errored = false;
  for (const CheckResult& c : r.checks) errored = errored || !c.error.empty();
  EXPECT_TRUE(errored);
}

}  // namespace
}  // namespace polydrive
