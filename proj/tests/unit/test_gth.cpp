#include "mfpt/gth.hpp"

#include <gtest/gtest.h>

#include "mfpt/oracle.hpp"
#include "test_util.hpp"

namespace mfpt {
namespace {

template <Real T>
void expect_nonnegative(const HoldingReduction<T>& h) {
  for (T v : h.record.pbar.data()) EXPECT_GE(v, T(0));
  for (T v : h.record.s) EXPECT_GT(v, T(0));
  for (T v : h.record.r) EXPECT_GE(v, T(0));
  for (T v : h.holding.mu) EXPECT_GE(v, T(0));
}

TEST(Gth, AsymmetricChain) {
  auto pi = gth_stationary(test::asymmetric());
  EXPECT_NEAR(pi[0], 1.0 / 3, 1e-16);
  EXPECT_NEAR(pi[1], 2.0 / 3, 1e-16);
}

TEST(Gth, StationaryEquationOnBuiltins) {
  for (auto id : builtin_ids()) {
    auto p = builtin(id);
    auto pi = gth_stationary(p);
    auto pit = vecmat<double>(pi.pi, p.matrix());
    double sum = 0;
    for (std::size_t j = 0; j < pi.size(); ++j) {
      EXPECT_NEAR(pit[j], pi[j], 1e-15) << test::name_of(id);
      EXPECT_GT(pi[j], 0.0);
      sum += pi[j];
    }
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
}

TEST(Gth, SubtractionFreeAtBothPrecisions) {
  for (auto id : builtin_ids()) {
    expect_nonnegative(reduce_holding_times(builtin(id)));
    expect_nonnegative(reduce_holding_times(builtin(id).cast<float>()));
  }
}

// μ_0 is the mean recurrence time of state 0, i.e. 1/π_0.
TEST(Gth, HoldingTimeOfFirstStateIsRecurrence) {
  for (auto id : builtin_ids()) {
    auto p = builtin(id);
    auto h = reduce_holding_times(p);
    auto pi = stationary_from_record(h.record);
    EXPECT_NEAR(h.holding.mu[0] * pi[0], 1.0, 1e-12) << test::name_of(id);
  }
}

TEST(Gth, RecordLayout) {
  auto rec = gth_reduce(test::asymmetric());
  EXPECT_EQ(rec.s[0], 1.0);
  EXPECT_EQ(rec.r[0], 1.0);
  EXPECT_EQ(rec.s[1], 0.25);  // S(1) = p_10
}

TEST(Gth, ReducibleChainRaises) {
  TransitionMatrix<double> p(Mat<double>{{1, 0, 0}, {0, .5, .5}, {0, .5, .5}});
  try {
    gth_reduce(p);
    FAIL() << "expected ReductionError";
  } catch (const ReductionError& e) {
    EXPECT_GE(e.level(), 1u);
  }
  TransitionMatrix<double> neg(Mat<double>{{1.5, -.5}, {.5, .5}});
  EXPECT_THROW(gth_reduce(neg), ReductionError);
}

TEST(Gth, BinaryThirtyTwoAgreesWithDouble) {
  auto p = builtin(ProblemId::Tp44);
  auto d = gth_stationary(p);
  auto s = gth_stationary(p.cast<float>());
  for (std::size_t j = 0; j < d.size(); ++j) {
    EXPECT_NEAR(s[j] / d[j], 1.0, 1e-5);
  }
}

}  // namespace
}  // namespace mfpt
