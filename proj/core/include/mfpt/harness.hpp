#pragma once

// Sweeps over (problem × procedure × precision) cells and report emission.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mfpt/metrics.hpp"
#include "mfpt/problems.hpp"
#include "mfpt/procedures.hpp"

namespace mfpt {

enum class Precision { Single, Double };
enum class ReportFormat { Csv, Json, Markdown };

std::string_view precision_name(Precision p) noexcept;
std::string_view format_extension(ReportFormat f) noexcept;

struct RunConfig {
  std::vector<ProblemSpec> problems;
  std::vector<Procedure> procedures;
  std::vector<Precision> precisions{Precision::Double};
  int reps = 10;
  ReportFormat format = ReportFormat::Csv;
  std::uint64_t seed = 0;
  /// Compare binary64 results against the column-solve oracle. O(m⁴).
  bool oracle = false;

  /// Throws ContractViolation for empty sets or reps < 1.
  void check() const;
};

/// One (problem, procedure, precision) cell of an accuracy sweep.
struct AccuracyRow {
  std::string problem;
  std::size_t m = 0;
  int procedure = 0;
  Precision precision = Precision::Double;
  bool ok = true;
  std::string error;  // exception message for failed cells
  AccuracyReport acc;
  std::size_t negative_entries = 0;
  std::size_t zero_entries = 0;
  /// max_ij |m_ij − oracle_ij| / oracle_ij, binary64 rows with oracle on.
  std::optional<double> oracle_max_rel;
  /// Single rows only: comparison against the same procedure at binary64.
  std::optional<PrecisionComparison> compare;
};

struct TimingRecord {
  std::string problem;
  std::size_t m = 0;
  int procedure = 0;
  Precision precision = Precision::Double;
  bool ok = true;
  std::string error;
  double mean_seconds = 0;
  int reps = 0;
};

/// A failed cell never aborts the sweep; it becomes a row with ok = false
/// and NaN metrics.
std::vector<AccuracyRow> run_accuracy(const RunConfig& cfg);

/// Serial timing: one untimed warmup, then `reps` timed runs per cell.
/// Problem loading happens before any clock starts.
std::vector<TimingRecord> run_bench(const RunConfig& cfg);

void write_accuracy(std::ostream& out, const std::vector<AccuracyRow>& rows,
                    ReportFormat fmt);
void write_timing(std::ostream& out, const std::vector<TimingRecord>& rows,
                  ReportFormat fmt);

/// Column order of the accuracy CSV. Bump the version when it changes.
inline constexpr int kAccuracySchemaVersion = 1;
const std::vector<std::string>& accuracy_columns();

}  // namespace mfpt
