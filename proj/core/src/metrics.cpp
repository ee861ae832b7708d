#include "mfpt/metrics.hpp"

#include <cmath>
#include <limits>

namespace mfpt {

template <Real T>
ResidualMatrix<T> residual(const TransitionMatrix<T>& p,
                           const MfptMatrix<T>& m) {
  const std::size_t n = p.states();
  if (m.states() != n) throw DimensionMismatch("residual: shape mismatch");
  const Mat<T> pm = matmul(p.matrix(), m.mfpt);
  ResidualMatrix<T> out{Mat<T>(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.eps(i, j) = ((m(i, j) - pm(i, j)) - T(1)) + p(i, j) * m(j, j);
    }
  }
  return out;
}

template <Real T>
AccuracyReport accuracy_report(const ResidualMatrix<T>& r) {
  const auto& data = r.eps.data();
  AccuracyReport rep;
  if (data.empty()) return rep;
  std::size_t zeros = 0;
  double ore = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  bool nan = false;
  for (T v : data) {
    if (v == T(0)) ++zeros;
    const double a = std::abs(static_cast<double>(v));
    if (std::isnan(a)) nan = true;
    ore += a;
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  const double nan_v = std::numeric_limits<double>::quiet_NaN();
  rep.pze = 100.0 * static_cast<double>(zeros) / static_cast<double>(data.size());
  rep.ore = nan ? nan_v : ore;
  rep.minare = nan ? nan_v : lo;
  rep.maxare = nan ? nan_v : hi;
  return rep;
}

PrecisionComparison precision_compare(const MfptMatrix<double>& md,
                                      const MfptMatrix<float>& ms) {
  if (md.states() != ms.states()) {
    throw DimensionMismatch("precision_compare: shape mismatch");
  }
  PrecisionComparison out;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (!all_finite(ms.mfpt) || !all_finite(md.mfpt)) {
    out.status = PrecisionComparison::Status::NotComputed;
    out.aned = out.minae = out.maxae = out.rel = nan;
    return out;
  }
  const auto& d = md.mfpt.data();
  const auto& s = ms.mfpt.data();
  double sum_digits = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0;
  double rel = 0;
  for (std::size_t k = 0; k < d.size(); ++k) {
    const double diff = std::abs(d[k] - static_cast<double>(s[k]));
    rel += diff;
    lo = std::min(lo, diff);
    hi = std::max(hi, diff);
    if (diff == 0) {
      ++out.excluded_count;
    } else {
      sum_digits += -std::log10(diff / std::abs(d[k]));
    }
  }
  out.rel = rel;
  out.minae = d.empty() ? 0 : lo;
  out.maxae = hi;
  const std::size_t terms = d.size() - out.excluded_count;
  if (terms == 0) {
    out.status = PrecisionComparison::Status::Exact;
    out.aned = std::numeric_limits<double>::infinity();
  } else {
    out.aned = sum_digits / static_cast<double>(terms);
  }
  return out;
}

#define MFPT_INSTANTIATE(T)                                               \
  template ResidualMatrix<T> residual(const TransitionMatrix<T>&,        \
                                      const MfptMatrix<T>&);             \
  template AccuracyReport accuracy_report(const ResidualMatrix<T>&);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
