// gausscalc.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/gausscalc.h"

#include <cmath>

namespace mpsemi {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// i^{k/2} for integer k.
cplx i_pow_half(int k) { return std::polar(1.0, kPi * k / 4.0); }

cplx dotu(const CVec &a, const CVec &b) { return (a.transpose() * b)(0, 0); }

void check_dims(const GaussianState &f, int d) {
  if (f.d != d)
    throw ValidationError("DimensionError", "state dimension mismatch");
}

GaussianState fourier(const GaussianState &f, bool inverse) {
  require_siegel(f);
  const int d = f.d;
  const CMat qinv = f.q.inverse();
  GaussianState g;
  g.d = d;
  g.q = -qinv;
  g.q = 0.5 * (g.q + g.q.transpose());
  g.b = inverse ? CVec(-qinv * f.b) : CVec(qinv * f.b);
  g.c = f.c * i_pow_half(inverse ? d : -d) * det_inv_sqrt(-kI * f.q) *
        std::exp(-kI * kPi * dotu(qinv * f.b, f.b));
  return g;
}

GaussianState chirp(const GaussianState &f, const CMat &q) {
  GaussianState g = f;
  g.q = f.q + q;
  return g;
}

GaussianState rescale(const GaussianState &f, const RMat &e, int maslov) {
  const CMat ec = e.cast<cplx>();
  GaussianState g;
  g.d = f.d;
  g.q = ec.transpose() * f.q * ec;
  g.b = ec.transpose() * f.b;
  const int m = ((maslov % 4) + 4) % 4;
  g.c = f.c * i_pow_half(2 * m) * std::sqrt(std::abs(e.determinant()));
  return g;
}

double rel(const CMat &a, const CMat &b) {
  return (a - b).norm() / std::max(1.0, std::max(a.norm(), b.norm()));
}

}  // namespace

GaussianState make_state(cplx c, CMat q, CVec b) {
  if (q.rows() != q.cols() || q.rows() != b.size() || q.rows() == 0)
    throw ValidationError("DimensionError", "state Q and b dimensions disagree");
  if ((q - q.transpose()).norm() > 1e-10 * std::max(1.0, q.norm()))
    throw ValidationError("ValidationError", "state Q must be symmetric");
  GaussianState f;
  f.d = static_cast<int>(q.rows());
  f.c = c;
  f.q = 0.5 * (q + q.transpose());
  f.b = std::move(b);
  return f;
}

GaussianState standard_gaussian(int d) { return isotropic_gaussian(d, 1.0); }

GaussianState isotropic_gaussian(int d, double a) {
  return make_state(1.0, kI * a * CMat::Identity(d, d), CVec::Zero(d));
}

bool in_siegel(const GaussianState &f) {
  const RMat im = f.q.imag();
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (im + im.transpose()),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() > 1e-12 * std::max(1.0, f.q.norm());
}

void require_siegel(const GaussianState &f) {
  if (!in_siegel(f))
    throw NumericalError("SiegelViolation", "Im Q is not positive definite");
}

cplx det_inv_sqrt(const CMat &m) {
  Eigen::ComplexEigenSolver<CMat> es(m, false);
  cplx out = 1.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    out /= std::sqrt(es.eigenvalues()(k));
  return out;
}

cplx gaussian_integral(const CMat &m, const CVec &z) {
  const RMat re = m.real();
  Eigen::SelfAdjointEigenSolver<RMat> es(0.5 * (re + re.transpose()),
                                         Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() <= 1e-14 * std::max(1.0, m.norm()))
    throw ValidationError("DomainError", "Re M must be positive definite");
  const CVec y = m.partialPivLu().solve(z);
  return det_inv_sqrt(m) * std::exp(-kPi * dotu(y, z));
}

cplx eval(const GaussianState &f, const RVec &x) {
  const CVec xc = x.cast<cplx>();
  return f.c * std::exp(kI * kPi * dotu(f.q * xc, xc) + 2.0 * kPi * kI * dotu(f.b, xc));
}

cplx eval(const GaussianSum &f, const RVec &x) {
  cplx s = 0.0;
  for (const auto &t : f) s += eval(t, x);
  return s;
}

GaussianState shift(const GaussianState &f, const CVec &z, cplx tau) {
  if (z.size() != 2 * f.d)
    throw ValidationError("DimensionError", "shift vector has wrong size");
  const CVec x = z.head(f.d), xi = z.tail(f.d);
  GaussianState g = f;
  g.b = f.b + xi - f.q * x;
  g.c = f.c * std::exp(2.0 * kPi * kI * tau - kI * kPi * dotu(x, xi) +
                       kI * kPi * dotu(f.q * x, x) - 2.0 * kPi * kI * dotu(f.b, x));
  return g;
}

GaussianState scaled(const GaussianState &f, cplx s) {
  GaussianState g = f;
  g.c *= s;
  return g;
}

GaussianState conj_state(const GaussianState &f) {
  GaussianState g;
  g.d = f.d;
  g.c = std::conj(f.c);
  g.q = -f.q.conjugate();
  g.b = -f.b.conjugate();
  return g;
}

GaussianState tensor(const GaussianState &f, const GaussianState &g) {
  const int n = f.d + g.d;
  GaussianState t;
  t.d = n;
  t.c = f.c * g.c;
  t.q = CMat::Zero(n, n);
  t.q.topLeftCorner(f.d, f.d) = f.q;
  t.q.bottomRightCorner(g.d, g.d) = g.q;
  t.b.resize(n);
  t.b << f.b, g.b;
  return t;
}

GaussianState apply_token(const GeneratorToken &t, const GaussianState &f) {
  validate_token(t, f.d);
  require_siegel(f);
  GaussianState g = std::visit(
      overloaded{
          [&](const Fourier &ft) { return fourier(f, ft.inverse); },
          [&](const Rescale &r) { return rescale(f, r.e, r.maslov); },
          [&](const Chirp &c) { return chirp(f, c.q); },
          [&](const Multiplier &m) {
            return fourier(chirp(fourier(f, false), -m.p), true);
          },
          [&](const AtomR &a) { return apply_word(factor_R_theta(a.theta), f); },
          [&](const AtomP &a) {
            return chirp(f, kI * a.delta.cast<cplx>().asDiagonal().toDenseMatrix());
          }},
      t);
  require_siegel(g);
  return g;
}

GaussianState apply_word(const GeneratorWord &w, const GaussianState &f) {
  check_dims(f, w.d());
  GaussianState g = f;
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it)
    g = apply_token(*it, g);
  return g;
}

GaussianSum apply_word(const GeneratorWord &w, const GaussianSum &f) {
  GaussianSum out;
  out.reserve(f.size());
  for (const auto &t : f) out.push_back(apply_word(w, t));
  return out;
}

GaussianState apply_matrix(const BlockSymplectic &s, const GaussianState &f) {
  check_dims(f, s.d());
  require_siegel(f);
  if (!s.is_positive())
    throw ValidationError("ValidationError", "apply_matrix needs a positive matrix");
  const int d = f.d;
  const CMat a = s.a(), b = s.b(), c = s.c(), dd = s.dd();
  const CMat id = CMat::Identity(d, d);
  auto det_at = [&](double t) {
    const CMat qs = (1.0 - t) * kI * id + t * f.q;
    return (a + b * qs).determinant();
  };
  // Continuous argument of det(A + B Q(s)) from s = 0 to s = 1.
  double arg = 0.0;
  for (int steps = 64;; steps *= 2) {
    if (steps > (1 << 16))
      throw NumericalError("DecompositionError", "det(A + BQ) branch continuation failed");
    cplx prev = det_at(0.0);
    double acc = std::arg(prev);
    bool ok = true;
    for (int k = 1; k <= steps; ++k) {
      const cplx cur = det_at(static_cast<double>(k) / steps);
      const double step = std::arg(cur / prev);
      if (std::abs(step) > kPi / 8 || std::abs(cur) == 0.0) {
        ok = false;
        break;
      }
      acc += step;
      prev = cur;
    }
    if (ok) {
      arg = acc;
      break;
    }
  }
  const CMat m = a + b * f.q;
  Eigen::PartialPivLU<CMat> lu(m);
  const cplx det = lu.determinant();
  const Eigen::JacobiSVD<CMat> svd(m);
  if (svd.singularValues()(d - 1) < 1e-13 * svd.singularValues()(0))
    throw NumericalError("DecompositionError", "A + BQ is singular");
  const CMat qn0 = (c + dd * f.q) * lu.inverse();
  const CMat qn = 0.5 * (qn0 + qn0.transpose());
  const cplx root = std::polar(1.0 / std::sqrt(std::abs(det)), -0.5 * arg);
  const CVec xp = b * f.b, xip = dd * f.b;
  GaussianState g;
  g.d = d;
  g.q = qn;
  g.b = xip - qn * xp;
  g.c = f.c * root * std::exp(-kI * kPi * dotu(xp, xip) + kI * kPi * dotu(qn * xp, xp));
  require_siegel(g);
  return g;
}

cplx inner_product(const GaussianState &f, const GaussianState &g) {
  check_dims(g, f.d);
  const CMat m = -kI * (f.q - g.q.conjugate());
  const CVec z = f.b - g.b.conjugate();
  return f.c * std::conj(g.c) * gaussian_integral(m, z);
}

cplx inner_product(const GaussianSum &f, const GaussianSum &g) {
  cplx s = 0.0;
  for (const auto &a : f)
    for (const auto &b : g) s += inner_product(a, b);
  return s;
}

double l2_norm(const GaussianState &f) {
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

double l2_norm(const GaussianSum &f) {
  return std::sqrt(std::max(0.0, inner_product(f, f).real()));
}

GaussianState wigner_gaussian(const GaussianState &f, const GaussianState &g) {
  check_dims(g, f.d);
  const int d = f.d;
  const GaussianState t = tensor(f, conj_state(g));
  RMat ew(2 * d, 2 * d);
  const RMat id = RMat::Identity(d, d);
  ew << id, 0.5 * id, id, -0.5 * id;
  RVec mask(2 * d);
  mask << RVec::Zero(d), RVec::Ones(d);
  GeneratorWord w = concat(partial_fourier_word(mask), GeneratorWord(2 * d, {Rescale{ew, 0}}));
  GaussianState out = apply_word(w, t);
  out.c *= i_pow_half(d);
  return out;
}

double state_distance(const GaussianState &f, const GaussianState &g) {
  const double cs = std::max({std::abs(f.c), std::abs(g.c), 1e-300});
  return std::max(projective_distance(f, g), std::abs(f.c - g.c) / cs);
}

double projective_distance(const GaussianState &f, const GaussianState &g) {
  if (f.d != g.d) return std::numeric_limits<double>::infinity();
  return std::max(rel(f.q, g.q), rel(f.b, g.b));
}

IntertwiningResult check_intertwining(const GeneratorWord &w, const RVec &z,
                                      double tau, const GaussianSum &f) {
  const int d = w.d();
  if (z.size() != 2 * d)
    throw ValidationError("DimensionError", "shift vector has wrong size");
  const CVec zc = z.cast<cplx>();
  const CVec sz = word_matrix(w) * zc;
  IntertwiningResult res;
  GaussianSum lhs, rhs;
  for (const auto &term : f) {
    const GaussianState l = apply_word(w, shift(term, zc, tau));
    const GaussianState r = shift(apply_word(w, term), sz, tau);
    res.parameter_residual = std::max(res.parameter_residual, state_distance(l, r));
    lhs.push_back(l);
    rhs.push_back(r);
  }
  // Pointwise comparison of the sums on a small lattice in [-1.5, 1.5]^d.
  const int per_axis = 7;
  int total = 1;
  for (int k = 0; k < d; ++k) total *= per_axis;
  double diff = 0.0, scale = 0.0;
  for (int idx = 0; idx < total; ++idx) {
    RVec x(d);
    int rem = idx;
    for (int k = 0; k < d; ++k) {
      x(k) = -1.5 + 0.5 * (rem % per_axis);
      rem /= per_axis;
    }
    const cplx a = eval(lhs, x), b = eval(rhs, x);
    diff = std::max(diff, std::abs(a - b));
    scale = std::max(scale, std::abs(a));
  }
  res.sample_residual = scale > 0 ? diff / scale : diff;
  return res;
}

}  // namespace mpsemi
