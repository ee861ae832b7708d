#include "mfpt/egth.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "mfpt/gth.hpp"

namespace mfpt {

template <Real T>
TransitionMatrix<T> rotate_transition(const TransitionMatrix<T>& p,
                                      std::size_t k) {
  const std::size_t m = p.states();
  if (m == 0) return p;
  k %= m;
  Mat<T> out(m, m);
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t src = (r + k) % m;
    for (std::size_t c = 0; c < m; ++c) out(r, c) = p(src, (c + k) % m);
  }
  return TransitionMatrix<T>(std::move(out));
}

template <Real T>
Vec<T> first_column_mfpt(const TransitionMatrix<T>& p) {
  const auto hr = reduce_holding_times(p);
  const Mat<T>& pbar = hr.record.pbar;
  const Vec<T>& s = hr.record.s;
  const Vec<T>& mu = hr.holding.mu;
  const std::size_t m = p.states();
  Vec<T> col(m);
  col[0] = mu[0];
  for (std::size_t i = 1; i < m; ++i) {
    T acc = mu[i];
    for (std::size_t k = 1; k < i; ++k) acc += pbar(i, k) * col[k];
    col[i] = acc / s[i];
    if (!(col[i] >= T(0))) {
      throw ReductionError("negative or NaN passage time at level " +
                               std::to_string(i + 1),
                           i);
    }
  }
  return col;
}

template <Real T>
MfptSolution<T> proc9(const TransitionMatrix<T>& p, unsigned threads) {
  const std::size_t m = p.states();
  Mat<T> mm(m, m);
  // Column k only writes entries (·, k), so workers never share output.
  auto do_column = [&](std::size_t k) {
    const Vec<T> col = first_column_mfpt(rotate_transition(p, k));
    for (std::size_t r = 0; r < m; ++r) mm((r + k) % m, k) = col[r];
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(m, 1));
  if (workers <= 1) {
    for (std::size_t k = 0; k < m; ++k) do_column(k);
  } else {
    std::exception_ptr failure;
    std::size_t failed_at = m;
    std::mutex guard;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t k = w; k < m; k += workers) {
          try {
            do_column(k);
          } catch (...) {
            std::lock_guard lock(guard);
            // Keep the lowest failing column so errors are reproducible.
            if (k < failed_at) {
              failed_at = k;
              failure = std::current_exception();
            }
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  StationaryDist<T> pi{Vec<T>(m)};
  for (std::size_t j = 0; j < m; ++j) pi.pi[j] = T(1) / mm(j, j);
  return {std::move(pi), MfptMatrix<T>{std::move(mm)}};
}

#define MFPT_INSTANTIATE(T)                                                   \
  template TransitionMatrix<T> rotate_transition(const TransitionMatrix<T>&, \
                                                 std::size_t);               \
  template Vec<T> first_column_mfpt(const TransitionMatrix<T>&);             \
  template MfptSolution<T> proc9(const TransitionMatrix<T>&, unsigned);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
