#include "mfpt/ginv_procs.hpp"

#include "mfpt/gth.hpp"

namespace mfpt {

template <Real T>
GInverseContext<T> fundamental_matrix(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  auto pi = gth_stationary(p);
  Mat<T> a = Mat<T>::identity(m) - p.matrix();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) += pi[j];
  }
  auto z = solve_general(a, Mat<T>::identity(m)).x;
  return {std::move(z), std::move(pi), GInverseContext<T>::Kind::Fundamental};
}

template <Real T>
GInverseContext<T> simple_ginverse(const TransitionMatrix<T>& p,
                                   std::size_t b) {
  const std::size_t m = p.states();
  if (b >= m) throw DimensionMismatch("simple_ginverse: b out of range");
  Mat<T> a = Mat<T>::identity(m) - p.matrix();
  for (std::size_t i = 0; i < m; ++i) a(i, b) += T(1);
  auto g = solve_general(a, Mat<T>::identity(m)).x;
  StationaryDist<T> pi{Vec<T>(g.row(b).begin(), g.row(b).end())};
  return {std::move(g), std::move(pi), GInverseContext<T>::Kind::Simple};
}

template <Real T>
MfptSolution<T> proc1(const TransitionMatrix<T>& p) {
  auto ctx = fundamental_matrix(p);
  auto m = mfpt_from_ge(ctx.g, ctx.pi, Precondition::Skip);
  return {std::move(ctx.pi), std::move(m)};
}

template <Real T>
MfptSolution<T> proc2(const TransitionMatrix<T>& p, std::size_t b) {
  auto ctx = simple_ginverse(p, b);
  const std::size_t m = p.states();
  const Mat<T>& g = ctx.g;
  // Zero or non-finite row-b entries make the diagonal scaling singular.
  (void)recurrence_diag(ctx.pi);
  Mat<T> out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      out(i, j) = (g(j, j) - g(i, j)) / g(b, j);
    }
    out(i, i) = T(1) / g(b, i);
  }
  return {std::move(ctx.pi), MfptMatrix<T>{std::move(out)}};
}

#define MFPT_INSTANTIATE(T)                                                    \
  template GInverseContext<T> fundamental_matrix(const TransitionMatrix<T>&); \
  template GInverseContext<T> simple_ginverse(const TransitionMatrix<T>&,     \
                                              std::size_t);                   \
  template MfptSolution<T> proc1(const TransitionMatrix<T>&);                 \
  template MfptSolution<T> proc2(const TransitionMatrix<T>&, std::size_t);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
