#include <gtest/gtest.h>

#include "support/properties.hpp"

using namespace polar::testing;

namespace {

void expect_suite(const SuiteResult& r, int min_cases) {
  EXPECT_GE(r.cases, min_cases) << r.name;
  for (const auto& f : r.failures) ADD_FAILURE() << r.name << ": " << f;
}

}  // namespace

TEST(Properties, Gradient) { expect_suite(gradient_suite(100, 7), 100); }

TEST(Properties, AcceptedSolves) {
  SolveSuites s = solve_suites(100, 8);
  for (const auto* r : s.all()) expect_suite(*r, 100);
  EXPECT_LE(s.rejected, 100);
}
