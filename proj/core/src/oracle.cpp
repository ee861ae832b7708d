#include "mfpt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mfpt/problems.hpp"

namespace mfpt {

template <Real T>
Vec<T> mfpt_column_solve(const TransitionMatrix<T>& p, std::size_t j) {
  const std::size_t m = p.states();
  if (j >= m) throw DimensionMismatch("mfpt_column_solve: state out of range");
  Mat<T> a = Mat<T>::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (k != j) a(i, k) -= p(i, k);
    }
  }
  const Mat<T> x = solve_general(a, Mat<T>::ones(m, 1)).x;
  return Vec<T>(x.data().begin(), x.data().end());
}

template <Real T>
MfptMatrix<T> mfpt_oracle(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  Mat<T> out(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Vec<T> col = mfpt_column_solve(p, j);
    for (std::size_t i = 0; i < m; ++i) out(i, j) = col[i];
  }
  return {std::move(out)};
}

McEstimate monte_carlo_mfpt(const TransitionMatrix<double>& p, std::size_t i,
                            std::size_t j, std::size_t samples,
                            std::uint64_t seed, std::uint64_t step_cap) {
  const std::size_t m = p.states();
  if (i >= m || j >= m) {
    throw DimensionMismatch("monte_carlo_mfpt: state out of range");
  }
  if (samples < 2) throw ContractViolation("monte_carlo_mfpt: need >= 2 samples");

  // Cumulative rows; the last entry is pinned to 1 so rounding in the row
  // sum cannot leave a gap at the top of [0,1).
  Mat<double> cdf(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    double acc = 0;
    for (std::size_t c = 0; c < m; ++c) {
      acc += p(r, c);
      cdf(r, c) = acc;
    }
    std::size_t last = m;
    while (last > 0 && !(p(r, last - 1) > 0)) --last;
    for (std::size_t c = last == 0 ? 0 : last - 1; c < m; ++c) cdf(r, c) = 1.0;
  }

  SplitMix64 rng(seed);
  double mean = 0;
  double m2 = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    std::size_t state = i;
    std::uint64_t steps = 0;
    do {
      if (++steps > step_cap) {
        throw Error("monte_carlo_mfpt: trajectory exceeded " +
                    std::to_string(step_cap) + " steps");
      }
      const double u = rng.uniform();
      const auto row = cdf.row(state);
      state = static_cast<std::size_t>(
          std::upper_bound(row.begin(), row.end(), u) - row.begin());
      if (state >= m) state = m - 1;
    } while (state != j);
    // Welford running mean and variance.
    const double x = static_cast<double>(steps);
    const double delta = x - mean;
    mean += delta / static_cast<double>(s + 1);
    m2 += delta * (x - mean);
  }
  const double var = m2 / static_cast<double>(samples - 1);
  return {mean, 1.96 * std::sqrt(var / static_cast<double>(samples)), samples,
          seed};
}

#define MFPT_INSTANTIATE(T)                                                \
  template Vec<T> mfpt_column_solve(const TransitionMatrix<T>&, std::size_t); \
  template MfptMatrix<T> mfpt_oracle(const TransitionMatrix<T>&);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
