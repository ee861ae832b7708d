#pragma once

#include <cstddef>

#include "mfpt/chain.hpp"

namespace mfpt {

/// ε_ij = m_ij − Σ_{k≠j} p_ik m_kj − 1
template <Real T>
struct ResidualMatrix {
  Mat<T> eps;
};

/// Evaluated in matrix form as ((M − P·M) − E) + P·M_d, at T.
template <Real T>
ResidualMatrix<T> residual(const TransitionMatrix<T>& p, const MfptMatrix<T>& m);

struct AccuracyReport {
  double pze = 0;     // percentage of exactly-zero residuals
  double ore = 0;     // Σ|ε|
  double minare = 0;  // min |ε|
  double maxare = 0;  // max |ε|
};

template <Real T>
AccuracyReport accuracy_report(const ResidualMatrix<T>& r);

struct PrecisionComparison {
  /// Exact: every single-precision entry equals its double counterpart, so
  /// the digit average is undefined. NotComputed: single result not finite.
  enum class Status { Value, Exact, NotComputed };
  Status status = Status::Value;
  double aned = 0;
  std::size_t excluded_count = 0;  // pairs with m_ij(D) == m_ij(S)
  double minae = 0;
  double maxae = 0;
  double rel = 0;
};

/// Widens `ms` to binary64 before differencing. ANED averages
/// −log10|(m_D − m_S)/m_D| over the pairs that differ.
PrecisionComparison precision_compare(const MfptMatrix<double>& md,
                                      const MfptMatrix<float>& ms);

}  // namespace mfpt
