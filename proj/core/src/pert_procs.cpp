#include "mfpt/pert_procs.hpp"

#include <cmath>
#include <string>

namespace mfpt {

namespace {

// Only a zero or non-finite denominator is a breakdown. Small values at
// binary32 still carry a digit or two, and the degraded result is what the
// accuracy metrics are meant to expose.
template <Real T>
void check_denominator(T den, std::size_t step, const char* who) {
  if (den == T(0) || !std::isfinite(den)) {
    throw PerturbationBreakdown(std::string(who) +
                                    ": update denominator vanished at step " +
                                    std::to_string(step + 1),
                                step);
  }
}

template <Real T>
Vec<T> perturbation_row(const TransitionMatrix<T>& p, std::size_t i) {
  const std::size_t m = p.states();
  const T inv_m = T(1) / static_cast<T>(m);
  Vec<T> b(m);
  for (std::size_t j = 0; j < m; ++j) b[j] = p(i, j) - inv_m;
  return b;
}

// a += (c w^T) / den
template <Real T>
void rank_one_update(Mat<T>& a, std::span<const T> c, std::span<const T> w,
                     T den) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const T cr = c[r];
    if (cr == T(0)) continue;
    auto row = a.row(r);
    for (std::size_t j = 0; j < a.cols(); ++j) row[j] += cr * w[j] / den;
  }
}

template <Real T>
Vec<T> column(const Mat<T>& a, std::size_t j) {
  Vec<T> out(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) out[r] = a(r, j);
  return out;
}

template <Real T>
Vec<T> column_sums(const Mat<T>& a) {
  Vec<T> out(a.cols(), T(0));
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += row[j];
  }
  return out;
}

}  // namespace

// The recursion for procedure 3 is usually written
//   G_i = G_{i-1} + G_{i-1}(e_{i-1} − e_i)(u_{i-1}^T G_{i-1} / u_{i-1}^T G_{i-1} e_i).
// Here "e_{i-1}" is read as the previous rank-one column t_{i-1}:
// t_0 = e and t_{i-1} = e_{i-1} afterwards. With that reading the step is exactly Sherman–Morrison for
//   G_i^{-1} = G_{i-1}^{-1} + (e_i − t_{i-1}) u_{i-1}^T,
// using u_{i-1}^T G_{i-1} t_{i-1} = 1.
template <Real T>
GUpdateResult<T> pert_g_update(const TransitionMatrix<T>& p,
                               const StepObserver<T>& observe) {
  const std::size_t m = p.states();
  const T inv_m = T(1) / static_cast<T>(m);
  Mat<T> g = Mat<T>::identity(m);
  Vec<T> u(m, inv_m);
  Vec<T> gt;  // G_{i-1} t_{i-1}
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<T> w = vecmat<T>(u, g);  // u_{i-1}^T G_{i-1}
    const T den = w[i];
    check_denominator(den, i, "proc3");
    if (i == 0) {
      gt = matvec<T>(g, Vec<T>(m, T(1)));
    } else {
      gt = column(g, i - 1);
    }
    Vec<T> c(m);
    for (std::size_t r = 0; r < m; ++r) c[r] = gt[r] - g(r, i);
    rank_one_update<T>(g, c, w, den);
    for (std::size_t j = 0; j < m; ++j) u[j] += p(i, j) - inv_m;
    if (observe) observe(i, g);
  }
  return {std::move(g), std::move(u)};
}

template <Real T>
MfptSolution<T> proc3(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  auto [g, u] = pert_g_update(p);
  Vec<T> w = vecmat<T>(u, g);
  T total = T(0);
  for (T v : w) total += v;
  StationaryDist<T> pi{Vec<T>(m)};
  for (std::size_t j = 0; j < m; ++j) pi.pi[j] = w[j] / total;

  // H = G(I − eπ^T) = G − (Ge)π^T
  const Vec<T> ge = matvec<T>(g, Vec<T>(m, T(1)));
  Mat<T> h = g;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t j = 0; j < m; ++j) h(r, j) -= ge[r] * pi[j];
  }
  auto mm = mfpt_from_h(h, pi, Precondition::Skip);
  return {std::move(pi), std::move(mm)};
}

template <Real T>
Mat<T> pert_r_update(const TransitionMatrix<T>& p,
                     const StepObserver<T>& observe) {
  const std::size_t m = p.states();
  const T inv_m = T(1) / static_cast<T>(m);
  Mat<T> r = Mat<T>::identity(m);
  for (T& v : r.data()) v -= inv_m;
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<T> b = perturbation_row(p, i);
    const Vec<T> w = vecmat<T>(b, r);  // b_i^T R_{i-1}
    const T k = T(1) - w[i];
    check_denominator(k, i, "proc4");
    const Vec<T> c = column(r, i);  // R_{i-1} e_i
    rank_one_update<T>(r, c, w, k);
    if (observe) observe(i, r);
  }
  return r;
}

template <Real T>
MfptSolution<T> proc4(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  Mat<T> r = pert_r_update(p);
  // π^T = e_1^T − e_1^T (I − P) R_m
  Vec<T> first(m);
  for (std::size_t k = 0; k < m; ++k) {
    first[k] = (k == 0 ? T(1) : T(0)) - p(0, k);
  }
  const Vec<T> proj = vecmat<T>(first, r);
  StationaryDist<T> pi{Vec<T>(m)};
  for (std::size_t j = 0; j < m; ++j) {
    pi.pi[j] = (j == 0 ? T(1) : T(0)) - proj[j];
  }
  auto mm = mfpt_from_ge(r, pi, Precondition::Skip);
  return {std::move(pi), std::move(mm)};
}

template <Real T>
GroupInverseUpdate<T> pert_group_inverse(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  const T inv_m = T(1) / static_cast<T>(m);
  Mat<T> pi_mat(m, m, inv_m);
  Mat<T> a = Mat<T>::identity(m);
  for (T& v : a.data()) v -= inv_m;
  const Mat<T> eye = Mat<T>::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<T> b = perturbation_row(p, i);
    const Vec<T> w = vecmat<T>(b, a);  // b_i^T A_{i-1}#
    const T f = T(1) - w[i];
    check_denominator(f, i, "proc5");
    // S_i = I + e_i w^T / f, so X S_i = X + (X e_i) w^T / f.
    rank_one_update<T>(pi_mat, column(pi_mat, i), w, f);
    rank_one_update<T>(a, column(a, i), w, f);
    a = matmul(eye - pi_mat, a);
  }
  return {std::move(a), std::move(pi_mat)};
}

template <Real T>
MfptSolution<T> proc5(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  auto [a, pi_mat] = pert_group_inverse(p);
  StationaryDist<T> pi{Vec<T>(m)};
  for (std::size_t j = 0; j < m; ++j) pi.pi[j] = pi_mat(j, j);
  auto mm = mfpt_from_ge(a, pi, Precondition::Skip);
  return {std::move(pi), std::move(mm)};
}

template <Real T>
Mat<T> pert_k_update(const TransitionMatrix<T>& p, KStart start) {
  const std::size_t m = p.states();
  const T mt = static_cast<T>(m);
  Mat<T> k = Mat<T>::identity(m);
  switch (start) {
    case KStart::Ge:
      break;
    case KStart::Ge1:
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < m; ++j) {
          k(r, j) += T(1) / mt - (j == 0 ? T(1) : T(0));
        }
      }
      break;
    case KStart::Gee: {
      const T shift = (mt - T(1)) / (mt * mt);
      for (T& v : k.data()) v -= shift;
      break;
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const Vec<T> b = perturbation_row(p, i);
    const Vec<T> w = vecmat<T>(b, k);  // b_i^T K_{i-1}
    const T ki = T(1) - w[i];
    check_denominator(ki, i, "proc6-8");
    rank_one_update<T>(k, column(k, i), w, ki);
  }
  return k;
}

namespace {

template <Real T>
MfptSolution<T> k_procedure(const TransitionMatrix<T>& p, KStart start) {
  const std::size_t m = p.states();
  Mat<T> k = pert_k_update(p, start);
  StationaryDist<T> pi;
  switch (start) {
    case KStart::Ge: {
      pi.pi = column_sums(k);
      for (T& v : pi.pi) v /= static_cast<T>(m);
      break;
    }
    case KStart::Ge1:
      pi.pi.assign(k.row(0).begin(), k.row(0).end());
      break;
    case KStart::Gee:
      pi.pi = column_sums(k);
      break;
  }
  auto mm = mfpt_from_ge(k, pi, Precondition::Skip);
  return {std::move(pi), std::move(mm)};
}

}  // namespace

template <Real T>
MfptSolution<T> proc6(const TransitionMatrix<T>& p) {
  return k_procedure(p, KStart::Ge);
}
template <Real T>
MfptSolution<T> proc7(const TransitionMatrix<T>& p) {
  return k_procedure(p, KStart::Ge1);
}
template <Real T>
MfptSolution<T> proc8(const TransitionMatrix<T>& p) {
  return k_procedure(p, KStart::Gee);
}

#define MFPT_INSTANTIATE(T)                                                 \
  template GUpdateResult<T> pert_g_update(const TransitionMatrix<T>&,      \
                                          const StepObserver<T>&);         \
  template Mat<T> pert_r_update(const TransitionMatrix<T>&,                \
                                const StepObserver<T>&);                   \
  template GroupInverseUpdate<T> pert_group_inverse(                       \
      const TransitionMatrix<T>&);                                         \
  template Mat<T> pert_k_update(const TransitionMatrix<T>&, KStart);       \
  template MfptSolution<T> proc3(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc4(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc5(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc6(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc7(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc8(const TransitionMatrix<T>&);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
