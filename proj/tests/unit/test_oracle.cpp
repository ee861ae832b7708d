#include "mfpt/oracle.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace mfpt {
namespace {

TEST(Oracle, AsymmetricChain) {
  auto m = mfpt_oracle(test::asymmetric()).mfpt;
  EXPECT_LE(test::max_rel_diff(m, Mat<double>{{3, 2}, {4, 1.5}}), 1e-15);
}

TEST(Oracle, KnownPassageTimesOnTp1) {
  auto m = mfpt_oracle(builtin(ProblemId::Tp1)).mfpt;
  EXPECT_NEAR(m(1, 0), 2.0, 1e-12);
  EXPECT_NEAR(m(3, 2), 160.5, 1e-10);
  EXPECT_NEAR(m(4, 2), 26.3, 1e-11);
}

TEST(Oracle, RecurrenceTimesInvertStationary) {
  auto p = builtin(ProblemId::Tp2);
  auto m = mfpt_oracle(p).mfpt;
  // π_j m_jj = 1 and π^T P = π^T for π_j = 1/m_jj.
  Vec<double> pi(p.states());
  for (std::size_t j = 0; j < pi.size(); ++j) pi[j] = 1.0 / m(j, j);
  auto next = vecmat<double>(pi, p.matrix());
  for (std::size_t j = 0; j < pi.size(); ++j) EXPECT_NEAR(next[j], pi[j], 1e-12);
}

TEST(Oracle, ColumnOutOfRange) {
  EXPECT_THROW(mfpt_column_solve(test::two_cycle(), 2), DimensionMismatch);
}

TEST(Oracle, MonteCarloCoversExactValue) {
  auto p = builtin(ProblemId::Tp1);
  auto est = monte_carlo_mfpt(p, 4, 2, 20000, 17);
  EXPECT_EQ(est.samples, 20000u);
  EXPECT_EQ(est.seed, 17u);
  // 4 half-widths leaves a negligible false-failure rate.
  EXPECT_NEAR(est.mean, 26.3, 4 * est.half_width);
  auto again = monte_carlo_mfpt(p, 4, 2, 20000, 17);
  EXPECT_EQ(again.mean, est.mean);
}

TEST(Oracle, MonteCarloRecurrence) {
  auto est = monte_carlo_mfpt(test::two_cycle(), 0, 0, 100, 1);
  EXPECT_EQ(est.mean, 2.0);
  EXPECT_EQ(est.half_width, 0.0);
}

TEST(Oracle, MonteCarloStepCap) {
  TransitionMatrix<double> slow(Mat<double>{{1 - 1e-9, 1e-9}, {1, 0}});
  EXPECT_THROW(monte_carlo_mfpt(slow, 0, 1, 2, 0, 1000), Error);
}

}  // namespace
}  // namespace mfpt
