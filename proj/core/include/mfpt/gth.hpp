#pragma once

// GTH state reduction. States are eliminated from the last index down to
// the second; every update is an addition of products and quotients of
// non-negative numbers, so no cancellation can occur.

#include "mfpt/chain.hpp"

namespace mfpt {

/// Overwrite record left behind by the reduction.
///
/// pbar(i,j) holds p_ij^(j) above the diagonal, p_ii^(i) on it and p_ij^(i)
/// below it. s[n] = S(n) = Σ_{j<n} p_nj^(n) is the censoring denominator of
/// level n (zero-based), with s[0] fixed to 1. r holds the unnormalized
/// stationary weights with r[0] = 1.
template <Real T>
struct ReductionRecord {
  Mat<T> pbar;
  Vec<T> s;
  Vec<T> r;
};

/// Per-level holding times: mu[n] = μ_n^(n), the expected holding time of
/// state n in the chain censored to states 0..n. mu[0] is the mean
/// recurrence time of state 0.
template <Real T>
struct HoldingTimes {
  Vec<T> mu;
};

/// Throws ReductionError if some S(n) is not strictly positive or a negative
/// intermediate appears (both impossible for a valid irreducible input).
template <Real T>
ReductionRecord<T> gth_reduce(const TransitionMatrix<T>& p);

template <Real T>
StationaryDist<T> gth_stationary(const TransitionMatrix<T>& p);

/// Normalizes the weights of a finished record.
template <Real T>
StationaryDist<T> stationary_from_record(const ReductionRecord<T>& rec);

template <Real T>
struct HoldingReduction {
  ReductionRecord<T> record;
  HoldingTimes<T> holding;
};

/// gth_reduce plus the holding-time recursion started from μ^(m) = e.
template <Real T>
HoldingReduction<T> reduce_holding_times(const TransitionMatrix<T>& p);

}  // namespace mfpt
