#pragma once

// Extended GTH: each column of M comes from a subtraction-free reduction of
// the chain relabeled so that the target state is first.

#include "mfpt/chain.hpp"

namespace mfpt {

/// Cyclic relabeling with zero-based k: new state r is old state (r + k) mod m,
/// so old state k becomes new state 0. k = 0 is the identity.
template <Real T>
TransitionMatrix<T> rotate_transition(const TransitionMatrix<T>& p,
                                      std::size_t k);

/// (m_00, m_10, ..., m_{m-1,0}): mean passage times into state 0, computed
/// from the per-level holding times and the reduction record.
template <Real T>
Vec<T> first_column_mfpt(const TransitionMatrix<T>& p);

/// Procedure 9. Rotations are independent; `threads` > 1 spreads them over
/// worker threads. The result does not depend on the thread count.
/// π is read off the diagonal as π_j = 1/m_jj.
template <Real T>
MfptSolution<T> proc9(const TransitionMatrix<T>& p, unsigned threads = 1);

}  // namespace mfpt
