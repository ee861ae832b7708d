#include "mfpt/gth.hpp"

#include <cmath>
#include <string>

namespace mfpt {

namespace {

template <Real T>
inline void require_nonnegative(T v, std::size_t level, const char* what) {
  if (!(v >= T(0))) {
    throw ReductionError(std::string("negative or NaN ") + what +
                             " during state reduction at level " +
                             std::to_string(level + 1),
                         level);
  }
}

// Shared elimination kernel. When mu is non-null the holding-time recursion
// runs alongside and mu_level[n] receives μ_n^(n).
template <Real T>
ReductionRecord<T> reduce(const TransitionMatrix<T>& p, Vec<T>* mu_level) {
  const std::size_t m = p.states();
  if (m == 0) throw DimensionMismatch("gth_reduce: empty matrix");
  ReductionRecord<T> rec{p.matrix(), Vec<T>(m, T(1)), Vec<T>(m, T(0))};
  Mat<T>& a = rec.pbar;
  for (T v : a.data()) require_nonnegative(v, m - 1, "input entry");

  Vec<T> mu;
  if (mu_level != nullptr) {
    mu.assign(m, T(1));
    mu_level->assign(m, T(1));
  }

  for (std::size_t n = m - 1; n >= 1; --n) {
    T s = T(0);
    for (std::size_t j = 0; j < n; ++j) s += a(n, j);
    if (!(s > T(0))) {
      throw ReductionError("censoring denominator S(" + std::to_string(n + 1) +
                               ") is not positive; chain is not irreducible",
                           n);
    }
    rec.s[n] = s;
    if (mu_level != nullptr) (*mu_level)[n] = mu[n];
    for (std::size_t i = 0; i < n; ++i) {
      const T ain = a(i, n);
      if (ain != T(0)) {
        auto arow = a.row(i);
        auto nrow = a.row(n);
        for (std::size_t j = 0; j < n; ++j) {
          const T add = ain * nrow[j] / s;
          require_nonnegative(add, n, "fill-in");
          arow[j] += add;
        }
      }
      if (mu_level != nullptr) {
        mu[i] += mu[n] * ain / s;
        require_nonnegative(mu[i], n, "holding time");
      }
    }
    if (n == 1) break;
  }
  if (mu_level != nullptr) (*mu_level)[0] = mu[0];

  // Expansion pass: r_n = Σ_{i<n} r_i p_in^(n) / S(n).
  rec.r[0] = T(1);
  for (std::size_t n = 1; n < m; ++n) {
    T acc = T(0);
    for (std::size_t i = 0; i < n; ++i) acc += rec.r[i] * a(i, n) / rec.s[n];
    require_nonnegative(acc, n, "stationary weight");
    rec.r[n] = acc;
  }
  return rec;
}

}  // namespace

template <Real T>
ReductionRecord<T> gth_reduce(const TransitionMatrix<T>& p) {
  return reduce(p, static_cast<Vec<T>*>(nullptr));
}

template <Real T>
StationaryDist<T> stationary_from_record(const ReductionRecord<T>& rec) {
  T total = T(0);
  for (T v : rec.r) total += v;
  StationaryDist<T> out{Vec<T>(rec.r.size())};
  for (std::size_t i = 0; i < rec.r.size(); ++i) out.pi[i] = rec.r[i] / total;
  return out;
}

template <Real T>
StationaryDist<T> gth_stationary(const TransitionMatrix<T>& p) {
  return stationary_from_record(gth_reduce(p));
}

template <Real T>
HoldingReduction<T> reduce_holding_times(const TransitionMatrix<T>& p) {
  HoldingReduction<T> out;
  out.record = reduce(p, &out.holding.mu);
  return out;
}

#define MFPT_INSTANTIATE(T)                                                  \
  template ReductionRecord<T> gth_reduce(const TransitionMatrix<T>&);       \
  template StationaryDist<T> gth_stationary(const TransitionMatrix<T>&);    \
  template StationaryDist<T> stationary_from_record(                        \
      const ReductionRecord<T>&);                                           \
  template HoldingReduction<T> reduce_holding_times(const TransitionMatrix<T>&);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
