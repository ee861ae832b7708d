#include "mfpt/fund.hpp"

#include <gtest/gtest.h>

#include "mfpt/oracle.hpp"
#include "test_util.hpp"

namespace mfpt {
namespace {

TEST(Fund, UlFactorShape) {
  for (auto id : builtin_ids()) {
    auto p = builtin(id);
    const std::size_t m = p.states();
    auto f = ul_factorize(p);
    for (std::size_t i = 0; i < m; ++i) EXPECT_EQ(f.u(i, i), -1.0);
    for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(f.l(0, j), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(f.u(i, j), 0.0);
      for (std::size_t j = i + 1; j < m; ++j) EXPECT_EQ(f.l(i, j), 0.0);
    }
    auto defect = matmul(f.u, f.l) - (Mat<double>::identity(m) - p.matrix());
    EXPECT_LE(norm_inf(defect), 1e-12 * m) << test::name_of(id);
  }
}

TEST(Fund, XContracts) {
  for (auto id : {ProblemId::Tp1, ProblemId::Tp2, ProblemId::Tp41}) {
    auto p = builtin(id);
    const std::size_t m = p.states();
    auto pi = gth_stationary(p);
    auto sol = solve_x(ul_factorize(p), pi);
    Mat<double> a = Mat<double>::identity(m) - p.matrix();
    EXPECT_LE(test::max_abs_diff(matmul(matmul(a, sol.x), a), a), 1e-9 * m);
    auto xe = matvec<double>(sol.x, Vec<double>(m, 1.0));
    EXPECT_LE(max_abs<double>(xe), 1e-10 * m);
    for (std::size_t j = 0; j < m; ++j) EXPECT_EQ(sol.x(0, j), 0.0);
  }
}

TEST(Fund, ZAndGroupInverseOfAsymmetricChain) {
  // Proc 10 and 11 go through Z and A#; both must give the same M.
  auto p = test::asymmetric();
  Mat<double> want{{3, 2}, {4, 1.5}};
  EXPECT_LE(test::max_rel_diff(proc10(p).m.mfpt, want), 1e-15);
  EXPECT_LE(test::max_rel_diff(proc11(p).m.mfpt, want), 1e-15);
  EXPECT_LE(test::max_rel_diff(proc12(p).m.mfpt, want), 1e-15);
}

TEST(Fund, AllMatchOracle) {
  for (auto id : builtin_ids()) {
    auto p = builtin(id);
    auto ref = mfpt_oracle(p).mfpt;
    const double tol = id == ProblemId::Tp3 ? 1e-2 : 1e-3;
    EXPECT_LE(test::max_rel_diff(proc10(p).m.mfpt, ref), tol) << test::name_of(id);
    EXPECT_LE(test::max_rel_diff(proc11(p).m.mfpt, ref), tol) << test::name_of(id);
    EXPECT_LE(test::max_rel_diff(proc12(p).m.mfpt, ref), tol) << test::name_of(id);
  }
}

TEST(Fund, SinglePrecisionRuns) {
  auto p = builtin(ProblemId::Tp1).cast<float>();
  auto d = proc12(builtin(ProblemId::Tp1)).m.mfpt;
  EXPECT_LE(test::max_rel_diff(proc12(p).m.mfpt, d), 1e-5);
}

}  // namespace
}  // namespace mfpt
