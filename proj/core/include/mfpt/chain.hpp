#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "mfpt/densela.hpp"

namespace mfpt {

/// Row-stochastic transition matrix of a finite chain. Construction does not
/// validate; call validate() and is_irreducible() where it matters.
template <Real T>
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(Mat<T> p) : p_(std::move(p)) {
    if (!p_.square()) {
      throw DimensionMismatch("TransitionMatrix: matrix must be square");
    }
  }

  std::size_t states() const noexcept { return p_.rows(); }
  const Mat<T>& matrix() const noexcept { return p_; }
  T operator()(std::size_t i, std::size_t j) const { return p_(i, j); }

  /// Rounds every entry to U once.
  template <Real U>
  TransitionMatrix<U> cast() const {
    return TransitionMatrix<U>(p_.template cast<U>());
  }

  friend bool operator==(const TransitionMatrix&,
                         const TransitionMatrix&) = default;

 private:
  Mat<T> p_;
};

template <Real T>
struct StationaryDist {
  Vec<T> pi;

  std::size_t size() const noexcept { return pi.size(); }
  T operator[](std::size_t j) const { return pi[j]; }
};

/// Matrix of mean first passage times; diagonal holds mean recurrence times.
template <Real T>
struct MfptMatrix {
  Mat<T> mfpt;

  std::size_t states() const noexcept { return mfpt.rows(); }
  T operator()(std::size_t i, std::size_t j) const { return mfpt(i, j); }
};

/// Diagonal of D = (Π_d)^{-1}: d_j = 1/π_j.
template <Real T>
struct RecurrenceDiag {
  Vec<T> d;
};

/// What every procedure returns.
template <Real T>
struct MfptSolution {
  StationaryDist<T> pi;
  MfptMatrix<T> m;
};

struct Violation {
  enum class Kind { NotSquare, EntryOutOfRange, NonFinite, RowSum };
  Kind kind;
  std::size_t row;
  std::size_t col;  // meaningful for entry-level violations
  std::string message;
};

/// First violation of row-stochasticity, or nullopt if the matrix is valid.
/// Row sums may differ from 1 by at most 16·m·ulp.
template <Real T>
std::optional<Violation> validate(const TransitionMatrix<T>& p);

/// True iff every state reaches every other state. Tries the P² positivity
/// shortcut first and falls back to a boolean reachability closure.
template <Real T>
bool is_irreducible(const TransitionMatrix<T>& p);

/// Recurrence diagonal d_j = 1/π_j. Throws SingularMatrixError when some π_j
/// is zero or not finite, the analogue of inverting a singular Π_d.
template <Real T>
RecurrenceDiag<T> recurrence_diag(const StationaryDist<T>& pi);

/// M = [GΠ − E(GΠ)_d + I − G + EG_d]D for an arbitrary g-inverse G of I − P.
template <Real T>
MfptMatrix<T> mfpt_from_general_ginverse(const Mat<T>& g,
                                         const StationaryDist<T>& pi);

/// Whether an assembly formula verifies its algebraic precondition. The
/// procedures that satisfy it by construction pass Skip so that rounding at
/// binary32 degrades the output instead of aborting it.
enum class Precondition { Enforce, Skip };

/// M = [I − H + EH_d]D, requires H·e ≈ 0.
template <Real T>
MfptMatrix<T> mfpt_from_h(const Mat<T>& h, const StationaryDist<T>& pi,
                          Precondition check = Precondition::Enforce);

/// M = [I − G + EG_d]D, requires G·e to be a constant vector.
template <Real T>
MfptMatrix<T> mfpt_from_ge(const Mat<T>& g, const StationaryDist<T>& pi,
                           Precondition check = Precondition::Enforce);

/// Tolerance used by the assembly preconditions: 1e3·m·eps·max(1, ‖g‖∞).
template <Real T>
T assembly_tolerance(const Mat<T>& g);

}  // namespace mfpt
