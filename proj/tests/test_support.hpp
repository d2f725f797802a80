#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace testing {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
  const double d = std::abs(got - want);
  const double s = std::abs(want);
  return s > 0.0 ? d / s : d;
}

}  // namespace testing
