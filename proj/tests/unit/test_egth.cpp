#include "mfpt/egth.hpp"

#include <gtest/gtest.h>

#include "mfpt/oracle.hpp"
#include "test_util.hpp"

namespace mfpt {
namespace {

TEST(Egth, RotationRelabels) {
  auto p = builtin(ProblemId::Tp1);
  const std::size_t m = p.states();
  EXPECT_EQ(rotate_transition(p, 0), p);
  auto q = rotate_transition(p, 2);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      EXPECT_EQ(q(r, c), p((r + 2) % m, (c + 2) % m));
    }
  }
}

TEST(Egth, FirstColumnMatchesColumnSolve) {
  for (auto id : builtin_ids()) {
    auto p = builtin(id);
    auto col = first_column_mfpt(p);
    auto ref = mfpt_column_solve(p, 0);
    for (std::size_t i = 0; i < col.size(); ++i) {
      EXPECT_GE(col[i], 0.0);
      EXPECT_NEAR(col[i] / ref[i], 1.0, 1e-6) << test::name_of(id);
    }
  }
}

TEST(Egth, TwoCycle) {
  auto sol = proc9(test::two_cycle());
  EXPECT_EQ(sol.m.mfpt, (Mat<double>{{2, 1}, {1, 2}}));
  EXPECT_EQ(sol.pi[0], 0.5);
}

TEST(Egth, AllPositiveAtSinglePrecision) {
  for (auto id : builtin_ids()) {
    auto sol = proc9(builtin(id).cast<float>());
    for (float v : sol.m.mfpt.data()) EXPECT_GT(v, 0.0f) << test::name_of(id);
  }
}

TEST(Egth, ThreadCountDoesNotChangeResult) {
  auto p = generate_sparse(40, 0.6, 3);
  auto serial = proc9(p, 1).m.mfpt;
  EXPECT_EQ(proc9(p, 3).m.mfpt, serial);
  EXPECT_EQ(proc9(p, 8).m.mfpt, serial);
}

TEST(Egth, ReducibleRaises) {
  TransitionMatrix<double> p(Mat<double>{{1, 0}, {.5, .5}});
  EXPECT_THROW(proc9(p), ReductionError);
}

}  // namespace
}  // namespace mfpt
