// mpsemi/evoprop.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Propagators exp(-t Op^w(a)) for complex quadratic Hamiltonians a(z) = Q z.z.
// The projection is S_t = exp(-2 i t F) with Hamilton map F = J Q, which
// fixes Q in the normalization where the Weyl symbol of -i d/dx is xi.

#ifndef MPSEMI_EVOPROP_H_
#define MPSEMI_EVOPROP_H_

#include <limits>
#include <vector>

#include "mpsemi/gausscalc.h"
#include "mpsemi/gridlab.h"
#include "mpsemi/sympcore.h"

namespace mpsemi {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadraticHamiltonian {
  int d = 0;
  CMat qmat;  // complex symmetric 2d x 2d, Re >= 0
};

// Throws ValidationError for a non-symmetric Q or an indefinite real part.
QuadraticHamiltonian make_hamiltonian(CMat qmat, double tol = kDefaultTol);

CMat hamilton_map(const QuadraticHamiltonian &h);

// exp(-2 i t F) by scaling and squaring.  Throws NumericalError("ModelError")
// when the result is not positive, which signals Re Q >= 0 is violated.
BlockSymplectic propagator_matrix(const QuadraticHamiltonian &h, double t);

PolarPair polar_in_time(const QuadraticHamiltonian &h, double t);

// exp(-t Op^w(a)) applied to a Gaussian.  The square root of
// det(A_s + B_s Q)^{-1} is continued in s from 0 to t, which selects the
// semigroup element connected to the identity.
GaussianState propagate_state(const QuadraticHamiltonian &h, double t,
                              const GaussianState &f);

// Weyl symbol of a positive polar factor Z = V^{-1} Xi V:
// a(z) = prod cosh(theta_j / 2)^{-1} exp(-pi Sigma V z . V z).
struct WeylSymbol {
  GaussianState a;   // 2d-dimensional, Q = i V^T Sigma V, b = 0
  bool degenerate = false;  // Sigma singular; a is constant along a subspace
  RMat sigma;        // diagonal 2d x 2d
  RMat v;            // from atomic_decompose
  RVec theta;
  RVec delta;
  double amplitude = 1.0;
};

WeylSymbol weyl_symbol_Z(const BlockSymplectic &z);

// <a, W(g, f)>, the integral of a against conj W(g, f), in closed form.
cplx weyl_pairing(const WeylSymbol &a, const GaussianState &f,
                  const GaussianState &g);

// prod_j (sigma_j / (1 + sigma_j^2))^{1/2} over the symplectic singular
// values of a real U, which equals |<U-hat g, g>| for g = exp(-pi |x|^2).
double gaussian_pairing_constant(const BlockSymplectic &u);

// The factor |det A|^{1/p - 1/q} sigma_max^{2s} prod (sigma_j/(1+sigma_j^2))^{-1/2}
// without the unspecified constant.  p, q may be kInf; 1/kInf = 0.
// Throws UnsupportedError("UnsupportedShape") for p != q unless C = 0.
double mod_norm_bound_U(const BlockSymplectic &u, double p, double q, double s);

// c(s) = integral over R^{dim} of exp(-pi |x|^2) (1 + |x|^2)^{s/2}.
double weight_integral(int dim, double s);

// c(s) prod cosh(theta_j/2)^{-1} (1 + sigma_max(Sigma^{1/2} V)^2)^{s/2}.
double mod_norm_bound_Z(const BlockSymplectic &z, double s);

struct CombinedBound {
  double u_bound = 0.0;
  double z_bound = 0.0;
  double total = 0.0;
  double sigma_max_u = 1.0;
};

CombinedBound combined_bound(const QuadraticHamiltonian &h, double t, double p,
                             double q, double s);

// Ratio of discrete modulation norms ||S_t f|| / ||f|| on a d = 1 grid with
// the window exp(-pi x^2).
double measured_ratio(const QuadraticHamiltonian &h, double t,
                      const GaussianState &probe, double p, double q, double s,
                      const GridSpec &spec);

// Riemann sum of <z>^{2s} |W(z)|^2 over the grid points of a 2-dimensional
// field whose angle to z0 is at most aperture.  The apex counts only for the
// full plane, aperture >= pi.
double cone_profile(const GridFn &w, const RVec &z0, double aperture, double s);

// Worked examples.
// Complex heat equation i u_t = (alpha + i beta) Delta u, beta >= 0:
// S_t = (I, -4 pi (alpha + i beta) t I; 0, I).
QuadraticHamiltonian heat_hamiltonian(int d, double alpha, double beta);
// Complex Hermite semigroup with polar factors U(t) = exp(mu t J), the
// fractional Fourier transform of angle mu t, and Z(t) = R_{theta t}.
QuadraticHamiltonian hermite_hamiltonian(int d, double theta, double mu);
// Dissipative oscillator on the first d1 coordinates and Schroedinger
// oscillator on the last d2.
QuadraticHamiltonian harmonic_hamiltonian(int d1, int d2);
CMat harmonic_closed_form(int d1, int d2, double t);
// Projection of the fractional Fourier transform of angle a: exp(a J).
CMat fractional_fourier_matrix(int d, double angle);
// sigma_max of (I, c I; 0, I): sqrt(1 + c^2 / 4) + |c| / 2.
double shear_sigma_max(double c);

struct TrajectoryRow {
  double t = 0.0;
  double imag_norm = 0.0;       // ||Im S_t||_F
  double min_eigenvalue = 0.0;  // of M_{S_t}
  std::string positivity;
  double polar_residual = 0.0;
  double sigma_max_u = 1.0;
  double u_bound = 0.0;
  double z_bound = 0.0;
  double total_bound = 0.0;
  double l2_ratio = 0.0;        // ||S_t f||_2 / ||f||_2, closed form
  double grid_ratio = 0.0;      // measured modulation-norm ratio, d = 1 only
  bool bound_available = true;
  CMat s;
};

std::vector<TrajectoryRow> trajectory(const QuadraticHamiltonian &h,
                                      const std::vector<double> &times,
                                      const GaussianState &probe, double p,
                                      double q, double s,
                                      const GridSpec *grid = nullptr);

}  // namespace mpsemi

#endif  // MPSEMI_EVOPROP_H_
