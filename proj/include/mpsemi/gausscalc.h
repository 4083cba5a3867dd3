// mpsemi/gausscalc.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Closed-form calculus of Gaussian states c exp(i pi Q y.y + 2 pi i b.y).

#ifndef MPSEMI_GAUSSCALC_H_
#define MPSEMI_GAUSSCALC_H_

#include <vector>

#include "mpsemi/sympcore.h"
#include "mpsemi/words.h"

namespace mpsemi {

struct GaussianState {
  int d = 0;
  cplx c{1.0, 0.0};
  CMat q;
  CVec b;
};

using GaussianSum = std::vector<GaussianState>;

// Validates symmetry of Q and the dimensions.  Im Q is not required to be
// definite here so that symbols with degenerate quadratic part can be held.
GaussianState make_state(cplx c, CMat q, CVec b);
// exp(-pi |x|^2): c = 1, Q = iI, b = 0.
GaussianState standard_gaussian(int d);
// exp(-pi a |x|^2) for a > 0.
GaussianState isotropic_gaussian(int d, double a);

// True when Im Q is positive definite.
bool in_siegel(const GaussianState &f);
// Throws NumericalError("SiegelViolation") otherwise.
void require_siegel(const GaussianState &f);

// det(M)^{-1/2} exp(-pi M^{-1} z.z), the integral of exp(-pi M x.x + 2 pi i z.x).
// The square root is the product of per-eigenvalue principal roots.
cplx gaussian_integral(const CMat &m, const CVec &z);
// Product of per-eigenvalue principal roots of det(M)^{-1/2}.
cplx det_inv_sqrt(const CMat &m);

cplx eval(const GaussianState &f, const RVec &x);
cplx eval(const GaussianSum &f, const RVec &x);

// rho(x, xi; tau) f(y) = e^{2 pi i tau} e^{-i pi x.xi} e^{2 pi i xi.y} f(y - x).
// z = (x, xi) and tau may be complex.
GaussianState shift(const GaussianState &f, const CVec &z, cplx tau);
GaussianState scaled(const GaussianState &f, cplx s);
GaussianState conj_state(const GaussianState &f);
// (f tensor g)(x, y) = f(x) g(y).
GaussianState tensor(const GaussianState &f, const GaussianState &g);

GaussianState apply_token(const GeneratorToken &t, const GaussianState &f);
GaussianState apply_word(const GeneratorWord &w, const GaussianState &f);
GaussianSum apply_word(const GeneratorWord &w, const GaussianSum &f);
// Action through the projection: Q' = (C + D Q)(A + B Q)^{-1}.  The square
// root of det(A + B Q)^{-1} is continued along Q(s) = (1 - s) iI + s Q.
GaussianState apply_matrix(const BlockSymplectic &s, const GaussianState &f);

// <f, g> = integral f conj(g).
cplx inner_product(const GaussianState &f, const GaussianState &g);
cplx inner_product(const GaussianSum &f, const GaussianSum &g);
double l2_norm(const GaussianState &f);
double l2_norm(const GaussianSum &f);

// W(f, g)(x, xi) = integral f(x + y/2) conj(g(x - y/2)) e^{-2 pi i y.xi} dy.
GaussianState wigner_gaussian(const GaussianState &f, const GaussianState &g);

// Maximal relative distance between the parameters of two states.
double state_distance(const GaussianState &f, const GaussianState &g);
// Ignores the amplitude: max of the relative Q and b distances.
double projective_distance(const GaussianState &f, const GaussianState &g);

struct IntertwiningResult {
  double parameter_residual = 0.0;
  double sample_residual = 0.0;
  double residual() const { return std::max(parameter_residual, sample_residual); }
};

// Compares W rho(z; tau) f with rho(S z; tau) W f term by term.
IntertwiningResult check_intertwining(const GeneratorWord &w, const RVec &z,
                                      double tau, const GaussianSum &f);

}  // namespace mpsemi

#endif  // MPSEMI_GAUSSCALC_H_
