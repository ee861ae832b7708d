#pragma once

// UL factorization of I − P read off the GTH overwrite record, and the
// FUND family of procedures (10 to 12) built on it.

#include "mfpt/chain.hpp"
#include "mfpt/gth.hpp"

namespace mfpt {

/// I − P = U·L. U is unit upper triangular up to sign (diagonal −1);
/// L is lower triangular with an all-zero first row.
template <Real T>
struct UlFactors {
  Mat<T> u;
  Mat<T> l;
};

template <Real T>
struct XSolution {
  Mat<T> x;  // g-inverse of I − P with zero first row and X e = 0
  Mat<T> y;  // U Y = I − Π
};

/// u_ij = p̄_ij / S(j) above the diagonal, l_ij = p̄_ij below it and
/// l_nn = −S(n) for n ≥ 1. The scaling by S is a diagonal division.
template <Real T>
UlFactors<T> ul_factorize(const ReductionRecord<T>& rec);

template <Real T>
UlFactors<T> ul_factorize(const TransitionMatrix<T>& p);

/// Back substitution for Y, then forward substitution on the trailing
/// (m−1)×(m−1) block of L for rows 1.. of X.
template <Real T>
XSolution<T> solve_x(const UlFactors<T>& f, const StationaryDist<T>& pi);

/// Z = Π + (I − Π)X
template <Real T>
MfptSolution<T> proc10(const TransitionMatrix<T>& p);
/// A# = (I − Π)X
template <Real T>
MfptSolution<T> proc11(const TransitionMatrix<T>& p);
/// M = [I − X + E X_d] D, no Z or A# formed.
template <Real T>
MfptSolution<T> proc12(const TransitionMatrix<T>& p);

}  // namespace mfpt
