#include "mfpt/chain.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace mfpt {

template <Real T>
std::optional<Violation> validate(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  const T tol = T(16) * static_cast<T>(m) * std::numeric_limits<T>::epsilon();
  for (std::size_t i = 0; i < m; ++i) {
    T sum = T(0);
    for (std::size_t j = 0; j < m; ++j) {
      const T v = p(i, j);
      if (!std::isfinite(v)) {
        return Violation{Violation::Kind::NonFinite, i, j,
                         "entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") is not finite"};
      }
      if (v < T(0) || v > T(1)) {
        return Violation{Violation::Kind::EntryOutOfRange, i, j,
                         "entry (" + std::to_string(i + 1) + "," +
                             std::to_string(j + 1) + ") outside [0,1]"};
      }
      sum += v;
    }
    if (std::abs(sum - T(1)) > tol) {
      return Violation{Violation::Kind::RowSum, i, 0,
                       "row " + std::to_string(i + 1) +
                           " does not sum to 1 (sum = " +
                           std::to_string(static_cast<double>(sum)) + ")"};
    }
  }
  return std::nullopt;
}

namespace {

template <Real T>
bool square_is_positive(const Mat<T>& p) {
  const std::size_t m = p.rows();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      bool hit = false;
      for (std::size_t k = 0; k < m && !hit; ++k) {
        hit = p(i, k) > T(0) && p(k, j) > T(0);
      }
      if (!hit) return false;
    }
  }
  return true;
}

template <Real T>
std::vector<bool> reachable_from(const Mat<T>& p, std::size_t start,
                                 bool transpose) {
  const std::size_t m = p.rows();
  std::vector<bool> seen(m, false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < m; ++v) {
      const T w = transpose ? p(v, u) : p(u, v);
      if (w > T(0) && !seen[v]) {
        seen[v] = true;
        queue.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

template <Real T>
bool is_irreducible(const TransitionMatrix<T>& p) {
  const std::size_t m = p.states();
  if (m == 0) return false;
  if (m == 1) return true;
  if (square_is_positive(p.matrix())) return true;
  // Strongly connected iff state 0 reaches all and all reach state 0.
  const auto fwd = reachable_from(p.matrix(), 0, false);
  const auto bwd = reachable_from(p.matrix(), 0, true);
  for (std::size_t i = 0; i < m; ++i) {
    if (!fwd[i] || !bwd[i]) return false;
  }
  return true;
}

template <Real T>
RecurrenceDiag<T> recurrence_diag(const StationaryDist<T>& pi) {
  RecurrenceDiag<T> out{Vec<T>(pi.size())};
  for (std::size_t j = 0; j < pi.size(); ++j) {
    if (!(pi[j] != T(0)) || !std::isfinite(pi[j])) {
      throw SingularMatrixError(
          "stationary probability " + std::to_string(j + 1) +
          " is zero or not finite: Pi_d is singular to working precision");
    }
    out.d[j] = T(1) / pi[j];
  }
  return out;
}

template <Real T>
T assembly_tolerance(const Mat<T>& g) {
  return T(1000) * static_cast<T>(g.rows()) *
         std::numeric_limits<T>::epsilon() * std::max(T(1), norm_inf(g));
}

namespace {

// [I − G + EG_d]·D, evaluated entrywise as (δ_ij − g_ij + g_jj)·d_j.
template <Real T>
MfptMatrix<T> assemble_ge(const Mat<T>& g, const RecurrenceDiag<T>& d) {
  const std::size_t m = g.rows();
  Mat<T> out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const T delta = i == j ? T(1) : T(0);
      out(i, j) = (delta - g(i, j) + g(j, j)) * d.d[j];
    }
  }
  return {std::move(out)};
}

template <Real T>
void check_square(const Mat<T>& g, const StationaryDist<T>& pi,
                  const char* who) {
  if (!g.square() || g.rows() != pi.size()) {
    throw DimensionMismatch(std::string(who) + ": shape mismatch");
  }
}

}  // namespace

template <Real T>
MfptMatrix<T> mfpt_from_general_ginverse(const Mat<T>& g,
                                         const StationaryDist<T>& pi) {
  check_square(g, pi, "mfpt_from_general_ginverse");
  const std::size_t m = g.rows();
  const auto d = recurrence_diag(pi);
  // GΠ = (G e) π^T
  const Vec<T> ge = matvec(g, std::span<const T>(Vec<T>(m, T(1))));
  Mat<T> out(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const T gpi_ij = ge[i] * pi[j];
      const T gpi_jj = ge[j] * pi[j];
      const T delta = i == j ? T(1) : T(0);
      out(i, j) = (gpi_ij - gpi_jj + delta - g(i, j) + g(j, j)) * d.d[j];
    }
  }
  return {std::move(out)};
}

template <Real T>
MfptMatrix<T> mfpt_from_h(const Mat<T>& h, const StationaryDist<T>& pi,
                          Precondition check) {
  check_square(h, pi, "mfpt_from_h");
  if (check == Precondition::Skip) return assemble_ge(h, recurrence_diag(pi));
  const Vec<T> he = matvec(h, std::span<const T>(Vec<T>(h.rows(), T(1))));
  if (max_abs(std::span<const T>(he)) > assembly_tolerance(h)) {
    throw ContractViolation("mfpt_from_h: H·e is not zero within tolerance");
  }
  return assemble_ge(h, recurrence_diag(pi));
}

template <Real T>
MfptMatrix<T> mfpt_from_ge(const Mat<T>& g, const StationaryDist<T>& pi,
                           Precondition check) {
  check_square(g, pi, "mfpt_from_ge");
  if (check == Precondition::Skip) return assemble_ge(g, recurrence_diag(pi));
  const Vec<T> ge = matvec(g, std::span<const T>(Vec<T>(g.rows(), T(1))));
  const auto [lo, hi] = std::minmax_element(ge.begin(), ge.end());
  if (!(*hi - *lo <= assembly_tolerance(g))) {
    throw ContractViolation("mfpt_from_ge: G·e is not a constant vector");
  }
  return assemble_ge(g, recurrence_diag(pi));
}

#define MFPT_INSTANTIATE(T)                                                   \
  template std::optional<Violation> validate(const TransitionMatrix<T>&);    \
  template bool is_irreducible(const TransitionMatrix<T>&);                  \
  template RecurrenceDiag<T> recurrence_diag(const StationaryDist<T>&);      \
  template T assembly_tolerance(const Mat<T>&);                              \
  template MfptMatrix<T> mfpt_from_general_ginverse(const Mat<T>&,           \
                                                    const StationaryDist<T>&); \
  template MfptMatrix<T> mfpt_from_h(const Mat<T>&, const StationaryDist<T>&, \
                                     Precondition);                         \
  template MfptMatrix<T> mfpt_from_ge(const Mat<T>&, const StationaryDist<T>&, \
                                      Precondition);

MFPT_INSTANTIATE(float)
MFPT_INSTANTIATE(double)
#undef MFPT_INSTANTIATE

}  // namespace mfpt
