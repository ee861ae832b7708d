#pragma once

// Row-by-row perturbation builds (procedures 3 to 8). Each starts from the
// chain P_0 = e e^T/m and replaces row i of P_{i-1} with row i of P, so
// P_i = P_{i-1} + e_i b_i^T with b_i^T = p_i^T − e^T/m. The matching
// g-inverse is carried along by Sherman–Morrison rank-one updates.

#include <functional>

#include "mfpt/chain.hpp"

namespace mfpt {

/// Called after every update with the zero-based row index and the current
/// matrix. Used by tests to inspect intermediate states.
template <Real T>
using StepObserver = std::function<void(std::size_t, const Mat<T>&)>;

template <Real T>
struct GUpdateResult {
  Mat<T> g;  // G_m = [I − P + e_m u_m^T]^{-1}
  Vec<T> u;  // u_m
};

/// Procedure 3 core: G_i = [I − P_i + t_i u_i^T]^{-1} from G_0 = I,
/// t_0 = e, u_0 = e/m, t_i = e_i, u_i = u_{i-1} + b_i.
template <Real T>
GUpdateResult<T> pert_g_update(const TransitionMatrix<T>& p,
                               const StepObserver<T>& observe = {});

/// Procedure 4 core: R_m with R_m e = 0, from R_0 = I − e e^T/m.
template <Real T>
Mat<T> pert_r_update(const TransitionMatrix<T>& p,
                     const StepObserver<T>& observe = {});

template <Real T>
struct GroupInverseUpdate {
  Mat<T> a_sharp;  // A#
  Mat<T> pi_mat;   // Π = e π^T, carried as a full matrix
};

/// Procedure 5 core: joint update of Π_i and A_i#.
template <Real T>
GroupInverseUpdate<T> pert_group_inverse(const TransitionMatrix<T>& p);

/// Starting point of the K_i = [I − P_i + e β^T]^{-1} recursion.
enum class KStart {
  Ge,   // β = e/m,  K_0 = I
  Ge1,  // β = e_1,  K_0 = I + e(e^T/m − e_1^T)
  Gee,  // β = e,    K_0 = I − ((m−1)/m²) e e^T
};

/// Procedures 6–8 core: K_m = [I − P + e β^T]^{-1}.
template <Real T>
Mat<T> pert_k_update(const TransitionMatrix<T>& p, KStart start);

template <Real T>
MfptSolution<T> proc3(const TransitionMatrix<T>& p);
template <Real T>
MfptSolution<T> proc4(const TransitionMatrix<T>& p);
template <Real T>
MfptSolution<T> proc5(const TransitionMatrix<T>& p);
template <Real T>
MfptSolution<T> proc6(const TransitionMatrix<T>& p);
template <Real T>
MfptSolution<T> proc7(const TransitionMatrix<T>& p);
template <Real T>
MfptSolution<T> proc8(const TransitionMatrix<T>& p);

}  // namespace mfpt
