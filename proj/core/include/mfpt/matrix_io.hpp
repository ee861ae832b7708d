#pragma once

#include <iosfwd>
#include <string>

#include "mfpt/chain.hpp"

namespace mfpt {

enum class MatrixFormat {
  Auto,            // pick from the file extension (.mtx or .csv)
  MarketArray,     // Matrix Market, dense column-major
  MarketCoordinate,  // Matrix Market, nonzeros only
  Csv,             // one row per line, comma separated
};

/// Shortest decimal string that parses back to exactly `v`.
std::string format_real(double v);

/// Readers accept either Matrix Market form or CSV, regardless of name,
/// by sniffing the banner. Errors carry line and column.
Mat<double> read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Mat<double>& a, MatrixFormat fmt);

/// The loader only checks shape; stochasticity is validate()'s job.
TransitionMatrix<double> load_matrix(const std::string& path);
void save_matrix(const TransitionMatrix<double>& p, const std::string& path,
                 MatrixFormat fmt = MatrixFormat::Auto);

}  // namespace mfpt
