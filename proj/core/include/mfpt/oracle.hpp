#pragma once

// Reference answers that share nothing with the twelve procedures beyond
// the dense kernel.

#include <cstdint>

#include "mfpt/chain.hpp"

namespace mfpt {

/// Column j of M from (I − P with column j zeroed)·m = e.
template <Real T>
Vec<T> mfpt_column_solve(const TransitionMatrix<T>& p, std::size_t j);

template <Real T>
MfptMatrix<T> mfpt_oracle(const TransitionMatrix<T>& p);

struct McEstimate {
  double mean = 0;
  double half_width = 0;  // 95% normal-approximation interval
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Simulates `samples` trajectories from i until the first visit to j at a
/// step n >= 1. A trajectory longer than `step_cap` aborts with an Error.
McEstimate monte_carlo_mfpt(const TransitionMatrix<double>& p, std::size_t i,
                            std::size_t j, std::size_t samples,
                            std::uint64_t seed,
                            std::uint64_t step_cap = 1'000'000'000ULL);

}  // namespace mfpt
