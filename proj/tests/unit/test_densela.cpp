#include "mfpt/densela.hpp"

#include <gtest/gtest.h>

namespace mfpt {
namespace {

TEST(Densela, MatmulAndVectorProducts) {
  Mat<double> a{{1, 2}, {3, 4}};
  Mat<double> b{{0, 1}, {1, 0}};
  EXPECT_EQ(matmul(a, b), (Mat<double>{{2, 1}, {4, 3}}));
  Vec<double> x{1, -1};
  EXPECT_EQ(matvec<double>(a, x), (Vec<double>{-1, -1}));
  EXPECT_EQ(vecmat<double>(x, a), (Vec<double>{-2, -2}));
}

TEST(Densela, ShapeChecks) {
  Mat<double> a(2, 3);
  EXPECT_THROW(matmul(a, a), DimensionMismatch);
  EXPECT_THROW(a - Mat<double>(3, 2), DimensionMismatch);
  EXPECT_THROW((Mat<double>{{1, 2}, {3}}), DimensionMismatch);
  EXPECT_THROW(Mat<double>(2, 2, std::vector<double>{1, 2, 3}),
               DimensionMismatch);
}

TEST(Densela, Norms) {
  Mat<double> a{{1, -4}, {2, 2}};
  EXPECT_EQ(norm_inf(a), 5.0);
  EXPECT_EQ(max_abs(a), 4.0);
  EXPECT_TRUE(all_finite(a));
  a(0, 0) = std::nan("");
  EXPECT_FALSE(all_finite(a));
}

TEST(Densela, SolveGeneralNeedsPivoting) {
  Mat<double> a{{0, 2, 1}, {1, 1, 0}, {3, 0, 1}};
  auto r = solve_general(a, Mat<double>::identity(3));
  auto back = matmul(a, r.x);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_NEAR(back(i, j), i == j ? 1.0 : 0.0, 1e-14);
    }
  }
  EXPECT_LE(r.residual_inf, 1e-14);
}

TEST(Densela, SolveGeneralSingular) {
  Mat<double> a{{1, 2}, {2, 4}};
  EXPECT_THROW(solve_general(a, Mat<double>::identity(2)), SingularMatrixError);
  Mat<float> f{{1, 1}, {1, 1}};
  EXPECT_THROW(solve_general(f, Mat<float>::identity(2)), SingularMatrixError);
}

TEST(Densela, TriangularSolvesReadOneTriangle) {
  // The ignored triangle holds garbage that must not leak into the result.
  Mat<double> u{{2, 1}, {99, 4}};
  auto x = solve_upper(u, Mat<double>{{4}, {8}});
  EXPECT_EQ(x(1, 0), 2.0);
  EXPECT_EQ(x(0, 0), 1.0);
  Mat<double> l{{2, 99}, {1, 4}};
  auto y = solve_lower(l, Mat<double>{{4}, {6}});
  EXPECT_EQ(y(0, 0), 2.0);
  EXPECT_EQ(y(1, 0), 1.0);
  EXPECT_THROW(solve_upper(Mat<double>{{0}}, Mat<double>{{1}}),
               SingularMatrixError);
  EXPECT_THROW(solve_lower(Mat<double>{{0}}, Mat<double>{{1}}),
               SingularMatrixError);
}

TEST(Densela, CastRoundsOnce) {
  Mat<double> a{{0.1}};
  EXPECT_EQ(a.cast<float>()(0, 0), 0.1f);
}

}  // namespace
}  // namespace mfpt
