#include "mfpt/fund.hpp"

namespace mfpt {

template <Real T>
UlFactors<T> ul_factorize(const ReductionRecord<T>& rec) {
  const std::size_t m = rec.pbar.rows();
  UlFactors<T> f{Mat<T>(m, m), Mat<T>(m, m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i < j) {
        f.u(i, j) = rec.pbar(i, j) / rec.s[j];
      } else if (i > j) {
        f.l(i, j) = rec.pbar(i, j);
      }
    }
    f.u(i, i) = T(-1);
    // q_11 = 1 makes the first diagonal entry of L vanish.
    if (i > 0) f.l(i, i) = -rec.s[i];
  }
  return f;
}

template <Real T>
UlFactors<T> ul_factorize(const TransitionMatrix<T>& p) {
  return ul_factorize(gth_reduce(p));
}

template <Real T>
XSolution<T> solve_x(const UlFactors<T>& f, const StationaryDist<T>& pi) {
  const std::size_t m = f.u.rows();
  if (pi.size() != m) throw DimensionMismatch("solve_x: shape mismatch");
  Mat<T> rhs = Mat<T>::identity(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rhs(i, j) -= pi[j];
  }
  XSolution<T> out{Mat<T>(m, m), solve_upper(f.u, rhs)};
  if (m == 1) return out;

  Mat<T> l1(m - 1, m - 1);
  Mat<T> y1(m - 1, m);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 1; j < m; ++j) l1(i - 1, j - 1) = f.l(i, j);
    for (std::size_t j = 0; j < m; ++j) y1(i - 1, j) = out.y(i, j);
  }
  const Mat<T> x1 = solve_lower(l1, y1);
  for (std::size_t i = 1; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.x(i, j) = x1(i - 1, j);
  }
  return out;
}

namespace {

template <Real T>
struct FundState {
  StationaryDist<T> pi;
  Mat<T> x;
};

template <Real T>
FundState<T> fund_common(const TransitionMatrix<T>& p) {
  const auto rec = gth_reduce(p);
  auto pi = stationary_from_record(rec);
  auto xs = solve_x(ul_factorize(rec), pi);
  return {std::move(pi), std::move(xs.x)};
}

// (I − Π)X = X − e(π^T X)
template <Real T>
Mat<T> project(const Mat<T>& x, const StationaryDist<T>& pi) {
  const Vec<T> pix = vecmat<T>(pi.pi, x);
  Mat<T> out = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) -= pix[j];
  }
  return out;
}

}  // namespace

template <Real T>
MfptSolution<T> proc10(const TransitionMatrix<T>& p) {
  auto st = fund_common(p);
  Mat<T> z = project(st.x, st.pi);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    for (std::size_t j = 0; j < z.cols(); ++j) z(i, j) += st.pi[j];
  }
  auto mm = mfpt_from_ge(z, st.pi, Precondition::Skip);
  return {std::move(st.pi), std::move(mm)};
}

template <Real T>
MfptSolution<T> proc11(const TransitionMatrix<T>& p) {
  auto st = fund_common(p);
  const Mat<T> a = project(st.x, st.pi);
  auto mm = mfpt_from_ge(a, st.pi, Precondition::Skip);
  return {std::move(st.pi), std::move(mm)};
}

template <Real T>
MfptSolution<T> proc12(const TransitionMatrix<T>& p) {
  auto st = fund_common(p);
  auto mm = mfpt_from_h(st.x, st.pi, Precondition::Skip);
  return {std::move(st.pi), std::move(mm)};
}

#define MFPT_INSTANTIATE(T)                                                  \
  template UlFactors<T> ul_factorize(const ReductionRecord<T>&);            \
  template UlFactors<T> ul_factorize(const TransitionMatrix<T>&);           \
  template XSolution<T> solve_x(const UlFactors<T>&,                        \
                                const StationaryDist<T>&);                  \
  template MfptSolution<T> proc10(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc11(const TransitionMatrix<T>&);              \
  template MfptSolution<T> proc12(const TransitionMatrix<T>&);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
