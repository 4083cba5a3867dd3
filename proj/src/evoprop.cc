// evoprop.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/evoprop.h"

#include <cmath>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace mpsemi {

namespace {

double inv_exponent(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t))
    throw ValidationError("ValidationError", "time must be finite and >= 0");
}

CMat expm_generator(const QuadraticHamiltonian &h, double t) {
  const CMat g = (-2.0 * kI * t) * hamilton_map(h);
  return g.exp();
}

}  // namespace

QuadraticHamiltonian make_hamiltonian(CMat qmat, double tol) {
  if (qmat.rows() != qmat.cols() || qmat.rows() == 0 || qmat.rows() % 2 != 0)
    throw ValidationError("DimensionError", "Q must be 2d x 2d");
  const double scale = std::max(1.0, qmat.norm());
  if ((qmat - qmat.transpose()).norm() > tol * scale)
    throw ValidationError("NotSymmetric", "Q must be symmetric");
  const RMat re = qmat.real();
  if (min_sym_eigenvalue(re) < -kPositivityMargin * scale)
    throw ValidationError("RePositive", "Re Q must be positive semidefinite");
  QuadraticHamiltonian h;
  h.d = static_cast<int>(qmat.rows() / 2);
  h.qmat = 0.5 * (qmat + qmat.transpose());
  return h;
}

CMat hamilton_map(const QuadraticHamiltonian &h) {
  return standard_j(h.d) * h.qmat;
}

BlockSymplectic propagator_matrix(const QuadraticHamiltonian &h, double t) {
  check_time(t);
  BlockSymplectic s(expm_generator(h, t), 1e-8);
  if (!s.is_positive())
    throw NumericalError("ModelError",
                         "propagator is not positive; Re Q >= 0 is violated");
  return s;
}

PolarPair polar_in_time(const QuadraticHamiltonian &h, double t) {
  return matrix_polar(propagator_matrix(h, t));
}

GaussianState propagate_state(const QuadraticHamiltonian &h, double t,
                              const GaussianState &f) {
  check_time(t);
  require_siegel(f);
  const int d = h.d;
  auto det_at = [&](double tau) {
    const CMat m = expm_generator(h, tau);
    return (m.topLeftCorner(d, d) + m.topRightCorner(d, d) * f.q).determinant();
  };
  double arg = 0.0;
  for (int steps = 32;; steps *= 2) {
    if (steps > (1 << 14))
      throw NumericalError("DecompositionError", "branch continuation in time failed");
    cplx prev = det_at(0.0);
    double acc = std::arg(prev);
    bool ok = true;
    for (int k = 1; k <= steps && ok; ++k) {
      const cplx cur = det_at(t * k / steps);
      const double step = std::arg(cur / prev);
      if (std::abs(step) > kPi / 8 || cur == 0.0) ok = false;
      acc += step;
      prev = cur;
    }
    if (ok) {
      arg = acc;
      break;
    }
  }
  const BlockSymplectic s = propagator_matrix(h, t);
  GaussianState out = apply_matrix(s, f);
  // apply_matrix picks its own branch; align it with the time continuation.
  const GaussianState bare = apply_matrix(s, make_state(1.0, f.q, CVec::Zero(d)));
  const cplx det = det_at(t);
  const cplx root = std::polar(1.0 / std::sqrt(std::abs(det)), -0.5 * arg);
  if ((root / bare.c).real() < 0) out.c = -out.c;
  return out;
}

WeylSymbol weyl_symbol_Z(const BlockSymplectic &z) {
  const AtomicDecomposition ad = atomic_decompose(z);
  const int d = z.d();
  WeylSymbol w;
  w.v = ad.v;
  w.theta = ad.theta;
  w.delta = ad.delta;
  w.sigma = RMat::Zero(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    if (ad.theta(j) > 0.0) {
      const double th = 2.0 * std::tanh(0.5 * ad.theta(j));
      w.sigma(j, j) = th;
      w.sigma(j + d, j + d) = th;
      w.amplitude /= std::cosh(0.5 * ad.theta(j));
    } else {
      w.sigma(j, j) = ad.delta(j);
    }
  }
  for (int k = 0; k < 2 * d; ++k)
    if (w.sigma(k, k) <= 0.0) w.degenerate = true;
  const RMat m = ad.v.transpose() * w.sigma * ad.v;
  w.a = make_state(w.amplitude, kI * (0.5 * (m + m.transpose())).cast<cplx>(),
                   CVec::Zero(2 * d));
  return w;
}

cplx weyl_pairing(const WeylSymbol &a, const GaussianState &f,
                  const GaussianState &g) {
  return inner_product(a.a, wigner_gaussian(g, f));
}

double gaussian_pairing_constant(const BlockSymplectic &u) {
  const SymplecticSvd svd = symplectic_svd(u);
  double out = 1.0;
  for (Eigen::Index j = 0; j < svd.sigma.size(); ++j) {
    const double s = svd.sigma(j);
    out *= std::sqrt(s / (1.0 + s * s));
  }
  return out;
}

double mod_norm_bound_U(const BlockSymplectic &u, double p, double q, double s) {
  if (!(p >= 1.0) || !(q >= 1.0) || !(s >= 0.0))
    throw ValidationError("ValidationError", "need p, q >= 1 and s >= 0");
  const SymplecticSvd svd = symplectic_svd(u);
  double det_factor = 1.0;
  if (p != q) {
    const double scale = std::max(1.0, u.matrix().norm());
    if (u.c().norm() > 1e-10 * scale)
      throw UnsupportedError("UnsupportedShape",
                             "p != q needs an upper block-triangular U");
    const double det_a = std::abs(u.a().real().determinant());
    det_factor = std::pow(det_a, inv_exponent(p) - inv_exponent(q));
  }
  double out = det_factor * std::pow(svd.sigma(0), 2.0 * s);
  for (Eigen::Index j = 0; j < svd.sigma.size(); ++j) {
    const double sj = svd.sigma(j);
    out *= std::sqrt((1.0 + sj * sj) / sj);
  }
  return out;
}

double weight_integral(int dim, double s) {
  if (dim <= 0 || !(s >= 0.0))
    throw ValidationError("ValidationError", "need dim > 0 and s >= 0");
  boost::math::quadrature::exp_sinh<double> integrator;
  auto radial = [&](double r) {
    const double g = std::exp(-kPi * r * r);
    if (g == 0.0) return 0.0;
    return std::pow(r, dim - 1) * g * std::pow(1.0 + r * r, 0.5 * s);
  };
  const double sphere = 2.0 * std::pow(kPi, 0.5 * dim) / std::tgamma(0.5 * dim);
  return sphere * integrator.integrate(radial, 0.0, kInf);
}

double mod_norm_bound_Z(const BlockSymplectic &z, double s) {
  const WeylSymbol w = weyl_symbol_Z(z);
  const RMat m = w.sigma.cwiseSqrt() * w.v;
  Eigen::JacobiSVD<RMat> svd(m);
  const double smax = svd.singularValues()(0);
  return weight_integral(2 * z.d(), s) * w.amplitude *
         std::pow(1.0 + smax * smax, 0.5 * s);
}

CombinedBound combined_bound(const QuadraticHamiltonian &h, double t, double p,
                             double q, double s) {
  const PolarPair pp = polar_in_time(h, t);
  CombinedBound out;
  out.sigma_max_u = symplectic_svd(pp.u).sigma(0);
  out.u_bound = mod_norm_bound_U(pp.u, p, q, s);
  out.z_bound = mod_norm_bound_Z(pp.z, s);
  out.total = out.u_bound * out.z_bound;
  return out;
}

double measured_ratio(const QuadraticHamiltonian &h, double t,
                      const GaussianState &probe, double p, double q, double s,
                      const GridSpec &spec) {
  if (h.d != 1 || spec.d != 1)
    throw ValidationError("DimensionError", "grid ratios are measured in d = 1");
  const GridFn window = sample(standard_gaussian(1), spec);
  const GridFn f = sample(probe, spec);
  const GridFn sf = sample(propagate_state(h, t, probe), spec);
  return discrete_modnorm(sf, window, p, q, s) /
         discrete_modnorm(f, window, p, q, s);
}

double cone_profile(const GridFn &w, const RVec &z0, double aperture, double s) {
  if (w.spec.d != 2 || z0.size() != 2 || z0.norm() == 0.0)
    throw ValidationError("DimensionError",
                          "cone profile needs a 2-d field and a nonzero direction");
  const int n = w.spec.n;
  const RVec dir = z0.normalized();
  const double cos_ap = std::cos(std::min(aperture, kPi));
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double x = w.spec.point(i), xi = w.spec.point(j);
      const double r2 = x * x + xi * xi;
      if (r2 == 0.0 ? aperture < kPi
                    : (x * dir(0) + xi * dir(1)) < cos_ap * std::sqrt(r2))
        continue;
      sum += std::pow(1.0 + r2, s) * std::norm(w.data(static_cast<long>(i) * n + j));
    }
  }
  return sum * w.spec.h * w.spec.h;
}

QuadraticHamiltonian heat_hamiltonian(int d, double alpha, double beta) {
  if (beta < 0.0) throw ValidationError("ValidationError", "heat example needs beta >= 0");
  CMat q = CMat::Zero(2 * d, 2 * d);
  q.bottomRightCorner(d, d) =
      CMat::Identity(d, d) * (2.0 * kPi * cplx(beta, -alpha));
  return make_hamiltonian(q);
}

QuadraticHamiltonian hermite_hamiltonian(int d, double theta, double mu) {
  if (theta < 0.0)
    throw ValidationError("ValidationError", "Hermite example needs theta >= 0");
  return make_hamiltonian(CMat::Identity(2 * d, 2 * d) * cplx(0.5 * theta, 0.5 * mu));
}

QuadraticHamiltonian harmonic_hamiltonian(int d1, int d2) {
  const int d = d1 + d2;
  CVec diag(2 * d);
  for (int k = 0; k < d; ++k) {
    const cplx v = k < d1 ? cplx(1.0) : kI;
    diag(k) = v;
    diag(k + d) = v;
  }
  return make_hamiltonian(diag.asDiagonal().toDenseMatrix());
}

CMat harmonic_closed_form(int d1, int d2, double t) {
  const int d = d1 + d2;
  CMat s = CMat::Zero(2 * d, 2 * d);
  for (int k = 0; k < d; ++k) {
    if (k < d1) {
      s(k, k) = s(k + d, k + d) = std::cosh(2 * t);
      s(k, k + d) = -kI * std::sinh(2 * t);
      s(k + d, k) = kI * std::sinh(2 * t);
    } else {
      s(k, k) = s(k + d, k + d) = std::cos(2 * t);
      s(k, k + d) = std::sin(2 * t);
      s(k + d, k) = -std::sin(2 * t);
    }
  }
  return s;
}

CMat fractional_fourier_matrix(int d, double angle) {
  return std::cos(angle) * CMat::Identity(2 * d, 2 * d) +
         std::sin(angle) * standard_j(d);
}

double shear_sigma_max(double c) {
  return std::sqrt(1.0 + 0.25 * c * c) + 0.5 * std::abs(c);
}

std::vector<TrajectoryRow> trajectory(const QuadraticHamiltonian &h,
                                      const std::vector<double> &times,
                                      const GaussianState &probe, double p,
                                      double q, double s, const GridSpec *grid) {
  std::vector<TrajectoryRow> rows;
  rows.reserve(times.size());
  const double probe_norm = l2_norm(probe);
  for (double t : times) {
    TrajectoryRow row;
    row.t = t;
    const BlockSymplectic st = propagator_matrix(h, t);
    row.s = st.matrix();
    row.imag_norm = st.matrix().imag().norm();
    row.min_eigenvalue = st.positivity().min_eigenvalue;
    row.positivity = to_string(st.positivity().cls);
    row.polar_residual = matrix_polar(st).residual;
    try {
      const CombinedBound cb = combined_bound(h, t, p, q, s);
      row.sigma_max_u = cb.sigma_max_u;
      row.u_bound = cb.u_bound;
      row.z_bound = cb.z_bound;
      row.total_bound = cb.total;
    } catch (const UnsupportedError &) {
      row.bound_available = false;
      row.u_bound = row.z_bound = row.total_bound =
          std::numeric_limits<double>::quiet_NaN();
    }
    row.l2_ratio = l2_norm(propagate_state(h, t, probe)) / probe_norm;
    row.grid_ratio = grid != nullptr && h.d == 1
                         ? measured_ratio(h, t, probe, p, q, s, *grid)
                         : std::numeric_limits<double>::quiet_NaN();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mpsemi
