// oracles.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Independent numerical oracles for the tests: plain trapezoidal quadrature
// of rapidly decaying integrands, which converges geometrically for smooth
// Gaussian integrands.

#ifndef MPSEMI_TESTS_ORACLES_H_
#define MPSEMI_TESTS_ORACLES_H_

#include <complex>
#include <functional>

namespace oracle {

using cplx = std::complex<double>;

inline cplx trapezoid(const std::function<cplx(double)> &f, double lo, double hi,
                      int n) {
  const double h = (hi - lo) / n;
  cplx s = 0.5 * (f(lo) + f(hi));
  for (int k = 1; k < n; ++k) s += f(lo + k * h);
  return s * h;
}

inline cplx trapezoid2(const std::function<cplx(double, double)> &f, double lo,
                       double hi, int n) {
  const double h = (hi - lo) / n;
  cplx s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double wi = (i == 0 || i == n) ? 0.5 : 1.0;
    for (int j = 0; j <= n; ++j) {
      const double wj = (j == 0 || j == n) ? 0.5 : 1.0;
      s += wi * wj * f(lo + i * h, lo + j * h);
    }
  }
  return s * h * h;
}

}  // namespace oracle

#endif  // MPSEMI_TESTS_ORACLES_H_
