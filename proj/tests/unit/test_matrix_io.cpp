#include "mfpt/matrix_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <limits>
#include <sstream>

#include "test_util.hpp"

namespace mfpt {
namespace {

Mat<double> awkward() {
  return Mat<double>{{0.1, 1.0 / 3, 0, 5e-324},
                     {std::numeric_limits<double>::max(), -0.0, 2.5, 1e-7},
                     {0, 0, 0, 1},
                     {0.7, 0.2, 0.05, 0.05}};
}

class RoundTrip : public ::testing::TestWithParam<MatrixFormat> {};

TEST_P(RoundTrip, BitExact) {
  const auto a = awkward();
  std::stringstream ss;
  write_matrix(ss, a, GetParam());
  const auto b = read_matrix(ss);
  ASSERT_EQ(b.rows(), a.rows());
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    EXPECT_EQ(std::bit_cast<std::uint64_t>(b.data()[k]),
              std::bit_cast<std::uint64_t>(a.data()[k]))
        << k;
  }
}

INSTANTIATE_TEST_SUITE_P(Formats, RoundTrip,
                         ::testing::Values(MatrixFormat::MarketArray,
                                           MatrixFormat::Csv));

TEST(MatrixIo, CoordinateKeepsNonzeros) {
  auto a = awkward();
  std::stringstream ss;
  write_matrix(ss, a, MatrixFormat::MarketCoordinate);
  auto b = read_matrix(ss);
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    EXPECT_EQ(b.data()[k], a.data()[k]);
  }
}

TEST(MatrixIo, ShortestForm) {
  EXPECT_EQ(format_real(0.1), "0.1");
  EXPECT_EQ(format_real(1), "1");
  EXPECT_EQ(format_real(1e-7), "1e-07");
}

TEST(MatrixIo, ArrayIsColumnMajor) {
  std::stringstream ss(
      "%%MatrixMarket matrix array real general\n% comment\n2 2\n1\n2\n3\n4\n");
  auto a = read_matrix(ss);
  EXPECT_EQ(a, (Mat<double>{{1, 3}, {2, 4}}));
}

TEST(MatrixIo, CsvWithComments) {
  std::stringstream ss("# header\n0.5, 0.5\n\n1,0\n");
  EXPECT_EQ(read_matrix(ss), (Mat<double>{{.5, .5}, {1, 0}}));
}

TEST(MatrixIo, ErrorsCarryPosition) {
  std::stringstream ss("0.25,0.75\n0.25,0.7x5\n");
  try {
    read_matrix(ss);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
  }
  std::stringstream ragged("1,0\n1\n");
  EXPECT_THROW(read_matrix(ragged), ParseError);
  std::stringstream outside(
      "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
  EXPECT_THROW(read_matrix(outside), ParseError);
  std::stringstream duplicate(
      "%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n1 1 0\n");
  EXPECT_THROW(read_matrix(duplicate), ParseError);
  std::stringstream complex_field(
      "%%MatrixMarket matrix coordinate complex general\n1 1 1\n1 1 1 0\n");
  EXPECT_THROW(read_matrix(complex_field), ParseError);
}

TEST(MatrixIo, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path();
  auto p = builtin(ProblemId::Tp2);
  for (const char* name : {"mfpt_io_test.mtx", "mfpt_io_test.csv"}) {
    const auto path = (dir / name).string();
    save_matrix(p, path);
    EXPECT_EQ(load_matrix(path), p) << name;
    std::filesystem::remove(path);
  }
  EXPECT_THROW(load_matrix((dir / "mfpt_absent.mtx").string()), Error);
}

TEST(MatrixIo, CheckedInFixture) {
  auto p = load_matrix(MFPT_TEST_DATA_DIR "/tp2.mtx");
  EXPECT_EQ(p, builtin(ProblemId::Tp2));
  EXPECT_THROW(load_matrix(MFPT_TEST_DATA_DIR "/malformed.csv"), ParseError);
}

TEST(MatrixIo, CanonicalInstancesRegenerate) {
  EXPECT_EQ(load_matrix(MFPT_DATA_DIR "/sparse100.mtx"),
            generate_sparse(100, 0.6, 5));
  EXPECT_EQ(load_matrix(MFPT_DATA_DIR "/sparse500.mtx"),
            generate_sparse(500, 0.6, 6));
}

}  // namespace
}  // namespace mfpt
