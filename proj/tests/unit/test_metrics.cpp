#include "mfpt/metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "mfpt/egth.hpp"
#include "test_util.hpp"

namespace mfpt {
namespace {

TEST(Metrics, ExactSolutionHasZeroResidual) {
  MfptMatrix<double> m{Mat<double>{{2, 1}, {1, 2}}};
  auto r = residual(test::two_cycle(), m);
  auto acc = accuracy_report(r);
  EXPECT_EQ(acc.pze, 100.0);
  EXPECT_EQ(acc.ore, 0.0);
  EXPECT_EQ(acc.maxare, 0.0);
}

TEST(Metrics, ResidualProbe) {
  // ε_ij = m_ij − Σ_{k≠j} p_ik m_kj − 1 on the 2-cycle.
  MfptMatrix<double> m{Mat<double>{{1, 2}, {3, 4}}};
  auto r = residual(test::two_cycle(), m);
  EXPECT_EQ(r.eps, (Mat<double>{{-3, 1}, {2, 1}}));
  auto acc = accuracy_report(r);
  EXPECT_EQ(acc.ore, 7.0);
  EXPECT_EQ(acc.pze, 0.0);
  EXPECT_EQ(acc.minare, 1.0);
  EXPECT_EQ(acc.maxare, 3.0);
}

TEST(Metrics, NanPropagates) {
  ResidualMatrix<double> r{Mat<double>{{std::nan(""), 0}, {0, 0}}};
  auto acc = accuracy_report(r);
  EXPECT_TRUE(std::isnan(acc.ore));
  EXPECT_TRUE(std::isnan(acc.maxare));
}

TEST(Metrics, AnedSevenDigits) {
  const double md = 1.0 / (1.0 - 1e-7);
  MfptMatrix<double> d{Mat<double>{{md, 2}}};
  MfptMatrix<float> s{Mat<float>{{1.0f, 2.0f}}};
  auto c = precision_compare(d, s);
  EXPECT_EQ(c.status, PrecisionComparison::Status::Value);
  EXPECT_NEAR(c.aned, 7.0, 1e-8);
  EXPECT_EQ(c.excluded_count, 1u);
  EXPECT_NEAR(c.maxae, md - 1.0, 1e-20);
  EXPECT_EQ(c.minae, 0.0);
}

TEST(Metrics, AnedExactAndNotComputed) {
  MfptMatrix<double> d{Mat<double>{{2, 1}, {1, 2}}};
  MfptMatrix<float> s{Mat<float>{{2, 1}, {1, 2}}};
  EXPECT_EQ(precision_compare(d, s).status, PrecisionComparison::Status::Exact);
  s.mfpt(0, 0) = std::nanf("");
  auto c = precision_compare(d, s);
  EXPECT_EQ(c.status, PrecisionComparison::Status::NotComputed);
  EXPECT_TRUE(std::isnan(c.aned));
}

TEST(Metrics, EgthResidualIsTiny) {
  auto p = builtin(ProblemId::Tp1);
  auto acc = accuracy_report(residual(p, proc9(p).m));
  EXPECT_LT(acc.ore, 3e-11);
  EXPECT_GT(acc.pze, 0.0);
}

}  // namespace
}  // namespace mfpt
