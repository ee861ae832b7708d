#pragma once

// Small dense row-major kernel. Everything here is a template over the
// scalar type so the whole pipeline can run at binary32 or binary64.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mfpt/errors.hpp"

namespace mfpt {

template <typename T>
concept Real = std::same_as<T, float> || std::same_as<T, double>;

template <Real T>
using Vec = std::vector<T>;

template <Real T>
class Mat {
 public:
  using value_type = T;

  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Mat(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw DimensionMismatch("Mat: data length does not equal rows*cols");
    }
  }
  Mat(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("Mat: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Mat identity(std::size_t n) {
    Mat out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }
  static Mat ones(std::size_t rows, std::size_t cols) {
    return Mat(rows, cols, T(1));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  template <Real U>
  Mat<U> cast() const {
    std::vector<U> out(data_.size());
    std::transform(data_.begin(), data_.end(), out.begin(),
                   [](T v) { return static_cast<U>(v); });
    return Mat<U>(rows_, cols_, std::move(out));
  }

  friend bool operator==(const Mat&, const Mat&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <Real T>
Mat<T> matmul(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matmul: inner dimensions differ");
  }
  Mat<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto orow = out.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T(0)) continue;
      auto brow = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) orow[j] += aik * brow[j];
    }
  }
  return out;
}

template <Real T>
Vec<T> matvec(const Mat<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matvec: size mismatch");
  Vec<T> out(a.rows(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T acc = T(0);
    auto r = a.row(i);
    for (std::size_t j = 0; j < x.size(); ++j) acc += r[j] * x[j];
    out[i] = acc;
  }
  return out;
}

/// x^T a
template <Real T>
Vec<T> vecmat(std::span<const T> x, const Mat<T>& a) {
  if (a.rows() != x.size()) throw DimensionMismatch("vecmat: size mismatch");
  Vec<T> out(a.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const T xi = x[i];
    auto r = a.row(i);
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += xi * r[j];
  }
  return out;
}

template <Real T>
Mat<T> operator-(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("subtract: shape mismatch");
  }
  Mat<T> out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] -= bd[k];
  return out;
}

template <Real T>
Mat<T> operator+(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("add: shape mismatch");
  }
  Mat<T> out = a;
  auto o = out.data();
  auto bd = b.data();
  for (std::size_t k = 0; k < o.size(); ++k) o[k] += bd[k];
  return out;
}

/// Outer product u v^T.
template <Real T>
Mat<T> outer(std::span<const T> u, std::span<const T> v) {
  Mat<T> out(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out(i, j) = u[i] * v[j];
  }
  return out;
}

/// Max row sum of absolute values.
template <Real T>
T norm_inf(const Mat<T>& a) {
  T best = T(0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    T s = T(0);
    for (T v : a.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

template <Real T>
T max_abs(const Mat<T>& a) {
  T best = T(0);
  for (T v : a.data()) best = std::max(best, std::abs(v));
  return best;
}

template <Real T>
T max_abs(std::span<const T> v) {
  T best = T(0);
  for (T x : v) best = std::max(best, std::abs(x));
  return best;
}

template <Real T>
bool all_finite(const Mat<T>& a) {
  return std::all_of(a.data().begin(), a.data().end(),
                     [](T v) { return std::isfinite(v); });
}

template <Real T>
struct SolveResult {
  Mat<T> x;
  /// ‖a·x − b‖∞ evaluated at the working precision.
  T residual_inf;
};

/// Solves a·X = B by LU factorization with partial pivoting. A pivot whose
/// magnitude does not exceed eps·max|a| is treated as zero.
template <Real T>
SolveResult<T> solve_general(const Mat<T>& a, const Mat<T>& b) {
  if (!a.square()) throw DimensionMismatch("solve_general: matrix not square");
  if (b.rows() != a.rows()) {
    throw DimensionMismatch("solve_general: right-hand side rows differ");
  }
  const std::size_t n = a.rows();
  Mat<T> lu = a;
  Mat<T> x = b;
  const T tiny = std::numeric_limits<T>::epsilon() * max_abs(a);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    T best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        piv = i;
      }
    }
    if (!(best > tiny)) {
      throw SingularMatrixError(
          "solve_general: matrix is singular to working precision (pivot " +
          std::to_string(k) + ")");
    }
    if (piv != k) {
      std::swap_ranges(lu.row(k).begin(), lu.row(k).end(), lu.row(piv).begin());
      std::swap_ranges(x.row(k).begin(), x.row(k).end(), x.row(piv).begin());
    }
    const T pivot = lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const T f = lu(i, k) / pivot;
      if (f == T(0)) continue;
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      auto xi = x.row(i);
      auto xk = x.row(k);
      for (std::size_t j = 0; j < x.cols(); ++j) xi[j] -= f * xk[j];
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    auto xk = x.row(kk);
    for (std::size_t j = kk + 1; j < n; ++j) {
      const T u = lu(kk, j);
      if (u == T(0)) continue;
      auto xj = x.row(j);
      for (std::size_t c = 0; c < x.cols(); ++c) xk[c] -= u * xj[c];
    }
    const T d = lu(kk, kk);
    for (std::size_t c = 0; c < x.cols(); ++c) xk[c] /= d;
  }

  const T resid = max_abs(matmul(a, x) - b);
  return {std::move(x), resid};
}

/// Back substitution for upper-triangular u. Only the upper triangle is read.
template <Real T>
Mat<T> solve_upper(const Mat<T>& u, const Mat<T>& b) {
  if (!u.square()) throw DimensionMismatch("solve_upper: matrix not square");
  if (b.rows() != u.rows()) throw DimensionMismatch("solve_upper: rows differ");
  const std::size_t n = u.rows();
  Mat<T> x = b;
  for (std::size_t i = n; i-- > 0;) {
    const T d = u(i, i);
    if (d == T(0)) {
      throw SingularMatrixError("solve_upper: zero diagonal at row " +
                                std::to_string(i));
    }
    auto xi = x.row(i);
    for (std::size_t k = i + 1; k < n; ++k) {
      const T uik = u(i, k);
      if (uik == T(0)) continue;
      auto xk = x.row(k);
      for (std::size_t c = 0; c < x.cols(); ++c) xi[c] -= uik * xk[c];
    }
    for (std::size_t c = 0; c < x.cols(); ++c) xi[c] /= d;
  }
  return x;
}

/// Forward substitution for lower-triangular l. Only the lower triangle is
/// read.
template <Real T>
Mat<T> solve_lower(const Mat<T>& l, const Mat<T>& b) {
  if (!l.square()) throw DimensionMismatch("solve_lower: matrix not square");
  if (b.rows() != l.rows()) throw DimensionMismatch("solve_lower: rows differ");
  const std::size_t n = l.rows();
  Mat<T> x = b;
  for (std::size_t i = 0; i < n; ++i) {
    const T d = l(i, i);
    if (d == T(0)) {
      throw SingularMatrixError("solve_lower: zero diagonal at row " +
                                std::to_string(i));
    }
    auto xi = x.row(i);
    for (std::size_t k = 0; k < i; ++k) {
      const T lik = l(i, k);
      if (lik == T(0)) continue;
      auto xk = x.row(k);
      for (std::size_t c = 0; c < x.cols(); ++c) xi[c] -= lik * xk[c];
    }
    for (std::size_t c = 0; c < x.cols(); ++c) xi[c] /= d;
  }
  return x;
}

}  // namespace mfpt
