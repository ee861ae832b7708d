#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <string>

#include "mfpt/chain.hpp"
#include "mfpt/problems.hpp"

namespace mfpt::test {

inline TransitionMatrix<double> two_cycle() {
  return TransitionMatrix<double>(Mat<double>{{0, 1}, {1, 0}});
}

// π = (1/3, 2/3)
inline TransitionMatrix<double> asymmetric() {
  return TransitionMatrix<double>(Mat<double>{{.5, .5}, {.25, .75}});
}

inline std::string name_of(ProblemId id) {
  ProblemSpec s;
  s.id = id;
  return s.name();
}

template <Real T>
double max_rel_diff(const Mat<T>& a, const Mat<double>& ref) {
  double worst = 0;
  for (std::size_t i = 0; i < ref.rows(); ++i) {
    for (std::size_t j = 0; j < ref.cols(); ++j) {
      const double r = ref(i, j);
      const double d = std::abs(static_cast<double>(a(i, j)) - r);
      worst = std::max(worst, r == 0 ? d : d / std::abs(r));
    }
  }
  return worst;
}

template <Real T>
double max_abs_diff(const Mat<T>& a, const Mat<T>& b) {
  double worst = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k) {
    worst = std::max(worst, std::abs(static_cast<double>(a.data()[k]) -
                                     static_cast<double>(b.data()[k])));
  }
  return worst;
}

}  // namespace mfpt::test
