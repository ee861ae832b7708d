#pragma once

// MFPTs from one explicit matrix inverse: the Kemeny–Snell fundamental
// matrix (procedure 1) and the simple g-inverse [I − P + e e_b^T]^{-1}
// (procedure 2).

#include "mfpt/chain.hpp"

namespace mfpt {

template <Real T>
struct GInverseContext {
  enum class Kind { Fundamental, Simple };
  Mat<T> g;
  StationaryDist<T> pi;
  Kind kind;
};

/// Z = [I − P + eπ^T]^{-1} with π taken from GTH.
template <Real T>
GInverseContext<T> fundamental_matrix(const TransitionMatrix<T>& p);

/// G_b = [I − P + e e_b^T]^{-1}; π is read off row b. `b` is zero-based.
template <Real T>
GInverseContext<T> simple_ginverse(const TransitionMatrix<T>& p,
                                   std::size_t b);

template <Real T>
MfptSolution<T> proc1(const TransitionMatrix<T>& p);

/// Off-diagonal m_ij = (g_jj − g_ij)/g_bj and m_ii = 1/g_bi.
template <Real T>
MfptSolution<T> proc2(const TransitionMatrix<T>& p, std::size_t b = 0);

}  // namespace mfpt
