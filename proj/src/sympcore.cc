// sympcore.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/sympcore.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <unsupported/Eigen/MatrixFunctions>

namespace mpsemi {

namespace {

int half_dim(const CMat &s) {
  if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0)
    throw ValidationError("DimensionError",
                          "matrix must be square with even positive dimension");
  return static_cast<int>(s.rows() / 2);
}

RMat sym(const RMat &m) { return 0.5 * (m + m.transpose()); }

}  // namespace

CMat standard_j(int d) {
  CMat j = CMat::Zero(2 * d, 2 * d);
  j.topRightCorner(d, d).setIdentity();
  j.bottomLeftCorner(d, d) = -CMat::Identity(d, d);
  return j;
}

CMat make_v(const CMat &q) {
  const int d = static_cast<int>(q.rows());
  CMat v = CMat::Identity(2 * d, 2 * d);
  v.bottomLeftCorner(d, d) = q;
  return v;
}

CMat make_v_upper(const CMat &p) {
  const int d = static_cast<int>(p.rows());
  CMat v = CMat::Identity(2 * d, 2 * d);
  v.topRightCorner(d, d) = p;
  return v;
}

CMat make_d(const RMat &e) {
  const int d = static_cast<int>(e.rows());
  Eigen::FullPivLU<RMat> lu(e);
  if (e.rows() != e.cols() || !lu.isInvertible())
    throw ValidationError("ValidationError", "rescale matrix must be invertible");
  CMat out = CMat::Zero(2 * d, 2 * d);
  out.topLeftCorner(d, d) = lu.inverse().cast<cplx>();
  out.bottomRightCorner(d, d) = e.transpose().cast<cplx>();
  return out;
}

CMat make_r(const RVec &theta) {
  const int d = static_cast<int>(theta.size());
  CMat r = CMat::Zero(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    const double ch = std::cosh(theta(j)), sh = std::sinh(theta(j));
    r(j, j) = ch;
    r(j + d, j + d) = ch;
    r(j, j + d) = -kI * sh;
    r(j + d, j) = kI * sh;
  }
  return r;
}

CMat block(const CMat &s, int i, int j) {
  const int d = half_dim(s);
  return s.block(i * d, j * d, d, d);
}

CMat assemble(const CMat &a, const CMat &b, const CMat &c, const CMat &d) {
  const Eigen::Index n = a.rows();
  CMat s(2 * n, 2 * n);
  s << a, b, c, d;
  return s;
}

double symplectic_defect(const CMat &s) {
  const int d = half_dim(s);
  const CMat j = standard_j(d);
  const double scale = s.squaredNorm();
  const double r = (s.transpose() * j * s - j).norm();
  return scale > 0 ? r / scale : std::numeric_limits<double>::infinity();
}

bool is_symplectic(const CMat &s, double tol) {
  return symplectic_defect(s) <= tol;
}

std::string to_string(PositivityClass c) {
  switch (c) {
    case PositivityClass::kNotSymplectic: return "NotSymplectic";
    case PositivityClass::kNotPositive: return "NotPositive";
    case PositivityClass::kPositive: return "Positive";
    case PositivityClass::kStrictlyPositive: return "StrictlyPositive";
    case PositivityClass::kReal: return "Real";
  }
  return "Unknown";
}

bool is_positive_class(PositivityClass c) {
  return c == PositivityClass::kPositive ||
         c == PositivityClass::kStrictlyPositive || c == PositivityClass::kReal;
}

double min_sym_eigenvalue(const RMat &m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<RMat> es(sym(m), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_real_matrix(const CMat &m, double tol) {
  return m.imag().norm() <= tol * std::max(1.0, m.norm());
}

RMat positivity_matrix(const CMat &s) {
  const int d = half_dim(s);
  const RMat jr = standard_j(d).real();
  const RMat sr = s.real(), si = s.imag();
  const RMat x = sr.transpose() * jr * si;
  const RMat y = si.transpose() * jr * si;
  RMat m(4 * d, 4 * d);
  m << x, y, -y, x;
  const double asym = (m - m.transpose()).norm();
  if (asym > 1e-8 * std::max(1.0, m.norm()))
    throw NumericalError("NumericalError", "positivity matrix is not symmetric");
  return sym(m);
}

RMat positivity_matrix(const BlockSymplectic &s) {
  return positivity_matrix(s.matrix());
}

PositivityReport classify_positivity(const CMat &s, double tol) {
  PositivityReport rep;
  if (!is_symplectic(s, tol)) return rep;
  rep.m_s = positivity_matrix(s);
  Eigen::SelfAdjointEigenSolver<RMat> es(rep.m_s, Eigen::EigenvaluesOnly);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  const double norm2 = es.eigenvalues().cwiseAbs().maxCoeff();
  rep.margin = kPositivityMargin * norm2;
  if (s.imag().norm() <= tol * std::max(1.0, s.norm())) {
    rep.cls = PositivityClass::kReal;
    rep.m_s.setZero();
    rep.min_eigenvalue = 0.0;
    rep.margin = 0.0;
  } else if (rep.min_eigenvalue > rep.margin) {
    rep.cls = PositivityClass::kStrictlyPositive;
  } else if (rep.min_eigenvalue >= -rep.margin) {
    rep.cls = PositivityClass::kPositive;
  } else {
    rep.cls = PositivityClass::kNotPositive;
  }
  return rep;
}

BlockSymplectic::BlockSymplectic(CMat s, double tol)
    : d_(half_dim(s)), s_(std::move(s)) {
  if (!is_symplectic(s_, tol))
    throw ValidationError("ValidationError", "matrix is not symplectic");
  report_ = classify_positivity(s_, tol);
}

BlockSymplectic BlockSymplectic::identity(int d) {
  return BlockSymplectic(CMat::Identity(2 * d, 2 * d));
}

bool BlockSymplectic::is_real(double tol) const {
  return is_real_matrix(s_, tol);
}

BlockSymplectic BlockSymplectic::operator*(const BlockSymplectic &o) const {
  if (o.d_ != d_)
    throw ValidationError("DimensionError", "dimension mismatch in product");
  return BlockSymplectic(s_ * o.s_, 1e-8);
}

CMat pseudo_inverse(const CMat &a, double tol) {
  if (a.size() == 0) return a;
  Eigen::JacobiSVD<CMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RVec &sv = svd.singularValues();
  const double cut = tol * (sv.size() ? sv(0) : 0.0);
  RVec inv = RVec::Zero(sv.size());
  for (Eigen::Index k = 0; k < sv.size(); ++k)
    if (sv(k) > cut && sv(k) > 0) inv(k) = 1.0 / sv(k);
  const Eigen::Index r = sv.size();
  return svd.matrixV().leftCols(r) * inv.cast<cplx>().asDiagonal() *
         svd.matrixU().leftCols(r).adjoint();
}

SchurPsdResult schur_psd_test(const RMat &m, double tol) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0 || m.rows() == 0)
    throw ValidationError("DimensionError", "matrix must be 2d x 2d");
  const double scale = std::max(1.0, m.norm());
  if ((m - m.transpose()).norm() > tol * scale)
    throw ValidationError("ValidationError", "matrix is not symmetric");
  const Eigen::Index d = m.rows() / 2;
  const RMat a = m.topLeftCorner(d, d), b = m.topRightCorner(d, d),
             c = m.bottomRightCorner(d, d);
  const double margin = kPositivityMargin * scale;
  SchurPsdResult res;
  res.min_eigenvalue = min_sym_eigenvalue(m);
  res.eigen_psd = res.min_eigenvalue >= -margin;
  const RMat a_plus = pseudo_inverse(a.cast<cplx>(), tol).real();
  const RMat range = (RMat::Identity(d, d) - a * a_plus) * b;
  if (min_sym_eigenvalue(a) < -margin) {
    res.failed_clause = "A>=0";
  } else if (range.norm() > 1e-8 * scale) {
    res.failed_clause = "(I-AA+)B=0";
  } else if (min_sym_eigenvalue(c - b.transpose() * a_plus * b) < -margin) {
    res.failed_clause = "C-B^T A+ B>=0";
  }
  res.psd = res.failed_clause.empty();
  res.agrees = res.psd == res.eigen_psd;
  return res;
}

BlockSymplectic inverse_symplectic(const BlockSymplectic &s) {
  return BlockSymplectic(assemble(s.dd().transpose(), -s.b().transpose(),
                                  -s.c().transpose(), s.a().transpose()),
                         1e-8);
}

BlockSymplectic sharp(const BlockSymplectic &s) {
  return BlockSymplectic(assemble(s.dd().adjoint(), -s.b().adjoint(),
                                  -s.c().adjoint(), s.a().adjoint()),
                         1e-8);
}

BlockSymplectic tilde(const BlockSymplectic &s) {
  return BlockSymplectic(assemble(s.a().conjugate(), -s.b().conjugate(),
                                  -s.c().conjugate(), s.dd().conjugate()),
                         1e-8);
}

CMat tensor_interleave(const CMat &s1, const CMat &s2) {
  const int d1 = half_dim(s1), d2 = half_dim(s2), n = d1 + d2;
  CMat out = CMat::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out.block(i * n, j * n, d1, d1) = block(s1, i, j);
      out.block(i * n + d1, j * n + d1, d2, d2) = block(s2, i, j);
    }
  }
  return out;
}

BlockSymplectic tensor_interleave(const BlockSymplectic &s1,
                                  const BlockSymplectic &s2) {
  return BlockSymplectic(tensor_interleave(s1.matrix(), s2.matrix()), 1e-8);
}

BlockSymplectic atom_matrix(const RVec &theta, const RVec &delta) {
  if (theta.size() != delta.size() || theta.size() == 0)
    throw ValidationError("DimensionError", "atom parameters must have equal size");
  const int d = static_cast<int>(theta.size());
  for (int j = 0; j < d; ++j) {
    if (theta(j) < 0 || delta(j) < 0 || !std::isfinite(theta(j)) ||
        !std::isfinite(delta(j)))
      throw ValidationError("ValidationError", "atom parameters must be nonnegative");
    if (theta(j) * delta(j) != 0)
      throw ValidationError("ValidationError",
                            "atom supports overlap at coordinate " + std::to_string(j));
  }
  return BlockSymplectic(make_r(theta) * make_v(kI * delta.cast<cplx>().asDiagonal().toDenseMatrix()));
}

PolarPair matrix_polar(const BlockSymplectic &s) {
  if (!s.is_positive())
    throw ValidationError("ValidationError", "polar decomposition needs a positive matrix");
  const CMat x = sharp(s).matrix() * s.matrix();
  Eigen::ComplexEigenSolver<CMat> es(x, false);
  const double scale = es.eigenvalues().cwiseAbs().maxCoeff();
  // Defective spectra (parabolic factors) are only resolved to about
  // sqrt(eps ||X||).
  const double slack = 1e-6 * scale + 10.0 * std::sqrt(2.2e-16 * x.norm());
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const cplx l = es.eigenvalues()(k);
    // Eigenvalues pair as (l, 1/l), so tiny positive ones are legitimate.
    if (std::abs(l.imag()) > slack || l.real() <= -slack)
      throw NumericalError("DecompositionError",
                           "spectrum of S#S is not positive real");
  }
  // U = S (S#S)^{-1/2} is the off-diagonal block of sign([0 S; conj(S)^{-1} 0]).
  // The Newton sign iteration keeps the block form and never squares S.
  const CMat j = standard_j(s.d());
  CMat a = s.matrix();
  CMat b = -j * s.matrix().conjugate().transpose() * j;
  for (int it = 0; it < 100; ++it) {
    const CMat a_inv = a.partialPivLu().inverse();
    const CMat b_inv = b.partialPivLu().inverse();
    // Determinantal scaling speeds up the first steps.
    const double mu = std::pow(std::abs(a.determinant() * b.determinant()),
                               -1.0 / (2.0 * a.rows()));
    const double m = std::isfinite(mu) && mu > 0 && it < 6 ? mu : 1.0;
    const CMat a_next = 0.5 * (m * a + b_inv / m);
    b = 0.5 * (m * b + a_inv / m);
    const double change = (a_next - a).norm();
    a = a_next;
    if (change <= 1e-15 * a.norm()) break;
  }
  const CMat u = a;
  const double imag_u = u.imag().norm();
  if (imag_u > 1e-6 * std::max(1.0, u.norm()))
    throw NumericalError("DecompositionError", "polar factor U is not real");
  const CMat ur = u.real().cast<cplx>();
  // Z = U^{-1} S keeps S = U Z exact once U has been projected onto the reals.
  const CMat zf = -j * ur.transpose() * j * s.matrix();
  PolarPair out{BlockSymplectic(ur, 1e-8), BlockSymplectic(zf, 1e-8), 0.0, imag_u};
  out.residual = (s.matrix() - ur * zf).norm();
  return out;
}

namespace {

// Returns V (real symplectic) and omega with P = V^T diag(omega, omega) V.
void williamson(const RMat &p, RMat *v, RVec *omega) {
  const Eigen::Index n = p.rows(), d = n / 2;
  Eigen::SelfAdjointEigenSolver<RMat> pe(p);
  const RMat p_half = pe.operatorSqrt();
  const RMat jr = standard_j(static_cast<int>(d)).real();
  const RMat w = p_half * jr * p_half;
  const CMat h = kI * w.cast<cplx>();
  Eigen::SelfAdjointEigenSolver<CMat> he(0.5 * (h + h.adjoint()));
  // Eigenvalues ascending: the last d are the positive ones.
  RMat o(n, n);
  RVec om(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const Eigen::Index col = n - 1 - k;  // descending omega
    const CVec u = he.eigenvectors().col(col);
    om(k) = he.eigenvalues()(col);
    o.col(k) = std::sqrt(2.0) * u.imag();
    o.col(k + d) = std::sqrt(2.0) * u.real();
  }
  RVec scale(n);
  scale << om.cwiseSqrt().cwiseInverse(), om.cwiseSqrt().cwiseInverse();
  *v = scale.asDiagonal() * o.transpose() * p_half;
  *omega = om;
}


// Williamson form of a positive semidefinite P of the given even rank:
// P = V^T diag(omega, omega) V with omega_k = 0 for k >= rank / 2.  The rows
// for the vanishing pairs form a symplectic basis of the symplectic
// complement of the others.  The caller verifies the reconstruction, which
// fails when the kernel of P is not a symplectic subspace.
void hyperbolic_degenerate(const RMat &p, int rank, RMat *v, RVec *omega) {
  const Eigen::Index n = p.rows(), d = n / 2;
  if (rank % 2 != 0)
    throw UnsupportedError("UnsupportedDegenerate", "degenerate generator mixes atom types");
  const Eigen::Index r = rank / 2;
  Eigen::SelfAdjointEigenSolver<RMat> pe(p);
  const RMat p_half = pe.eigenvectors() *
                      pe.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() *
                      pe.eigenvectors().transpose();
  const RMat jr = standard_j(static_cast<int>(d)).real();
  const CMat h = kI * (p_half * jr * p_half).cast<cplx>();
  Eigen::SelfAdjointEigenSolver<CMat> he(0.5 * (h + h.adjoint()));
  RMat rows(n, n);
  RVec om = RVec::Zero(d);
  for (Eigen::Index k = 0; k < r; ++k) {
    const CVec u = he.eigenvectors().col(n - 1 - k);
    om(k) = he.eigenvalues()(n - 1 - k);
    const double f = std::sqrt(2.0 / om(k));
    rows.row(k) = f * u.imag().transpose() * p_half;
    rows.row(k + d) = f * u.real().transpose() * p_half;
  }
  // Rows y with y J x^T = 0 for every row x found so far.
  RMat known(n, 2 * r);
  for (Eigen::Index k = 0; k < r; ++k) {
    known.col(2 * k) = jr * rows.row(k).transpose();
    known.col(2 * k + 1) = jr * rows.row(k + d).transpose();
  }
  Eigen::JacobiSVD<RMat> svd(known.transpose(), Eigen::ComputeFullV);
  std::vector<RVec> rest;
  for (Eigen::Index k = 2 * r; k < n; ++k) rest.push_back(svd.matrixV().col(k));
  auto omega_form = [&](const RVec &a, const RVec &b) { return a.dot(jr * b); };
  for (Eigen::Index k = r; k < d; ++k) {
    std::size_t ia = 0, ib = 1;
    double best = -1.0;
    for (std::size_t i = 0; i < rest.size(); ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (std::abs(omega_form(rest[i], rest[j])) > best) {
          best = std::abs(omega_form(rest[i], rest[j]));
          ia = i;
          ib = j;
        }
    if (best < 1e-8)
      throw UnsupportedError("UnsupportedDegenerate", "degenerate generator mixes atom types");
    const RVec a = rest[ia];
    const RVec b = rest[ib] / omega_form(a, rest[ib]);
    rows.row(k) = a.transpose();
    rows.row(k + d) = b.transpose();
    std::vector<RVec> next;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (i == ia || i == ib) continue;
      next.push_back(rest[i] + omega_form(rest[i], a) * b - omega_form(rest[i], b) * a);
    }
    rest = std::move(next);
  }
  *v = rows;
  *omega = om;
}
}  // namespace

AtomicDecomposition atomic_decompose(const BlockSymplectic &z) {
  const int d = z.d();
  const int n = 2 * d;
  AtomicDecomposition out;
  const CMat l = z.matrix().log();
  const CMat m = kI * l;
  const double scale = std::max(1.0, m.norm());
  if (m.imag().norm() > 1e-7 * scale)
    throw NumericalError("DecompositionError", "i log Z is not real");
  const RMat jr = standard_j(d).real();
  RMat p = -jr * m.real();
  if ((p - p.transpose()).norm() > 1e-7 * scale)
    throw NumericalError("DecompositionError", "-J i log Z is not symmetric");
  p = sym(p);
  Eigen::SelfAdjointEigenSolver<RMat> pe(p, Eigen::EigenvaluesOnly);
  const double pmax = pe.eigenvalues().cwiseAbs().maxCoeff();
  const double pmin = pe.eigenvalues().minCoeff();
  if (pmin < -1e-8 * std::max(1.0, pmax))
    throw NumericalError("DecompositionError", "-J i log Z is not positive semidefinite");
  out.theta = RVec::Zero(d);
  out.delta = RVec::Zero(d);
  if (pmax <= 1e-12) {
    out.v = RMat::Identity(n, n);
  } else if (pmin > 1e-9 * pmax) {
    williamson(p, &out.v, &out.theta);
  } else {
    Eigen::SelfAdjointEigenSolver<RMat> pv(p);
    int rank = 0;
    while (rank < n && pv.eigenvalues()(n - 1 - rank) > 1e-9 * pmax) ++rank;
    const RMat top = pv.eigenvectors().rightCols(rank).rowwise().reverse();
    if (rank > d || (top.transpose() * jr * top).norm() > 1e-7) {
      // Hyperbolic atoms with some vanishing angles.
      hyperbolic_degenerate(p, rank, &out.v, &out.theta);
      const RVec w = (RVec(n) << out.theta, out.theta).finished();
      if ((out.v.transpose() * w.asDiagonal() * out.v - p).norm() > 1e-7 * std::max(1.0, pmax))
        throw UnsupportedError("UnsupportedDegenerate",
                               "degenerate generator mixes atom types");
      const CMat vc = out.v.cast<cplx>();
      const CMat atom = atom_matrix(out.theta, out.delta).matrix();
      out.residual = (z.matrix() - vc.inverse() * atom * vc).norm();
      return out;
    }
    // Parabolic atoms only: the range of P is isotropic.  Its orthonormal
    // eigenvectors become the x-rows of an orthogonal symplectic V.
    RMat e(n, d);
    int filled = 0;
    for (; filled < rank; ++filled) {
      e.col(filled) = top.col(filled);
      out.delta(filled) = pv.eigenvalues()(n - 1 - filled);
    }
    for (int k = 0; k < n && filled < d; ++k) {
      RVec w = RVec::Unit(n, k);
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < filled; ++c) {
          const RVec ec = e.col(c), jec = jr * ec;
          w -= ec.dot(w) * ec;
          w -= jec.dot(w) * jec;
        }
      }
      if (w.norm() > 0.3) e.col(filled++) = w.normalized();
    }
    out.v.resize(n, n);
    out.v << e.transpose(), (-jr * e).transpose();
  }
  const CMat vc = out.v.cast<cplx>();
  const CMat atom = atom_matrix(out.theta, out.delta).matrix();
  out.residual = (z.matrix() - vc.inverse() * atom * vc).norm();
  return out;
}

SymplecticSvd symplectic_svd(const BlockSymplectic &u) {
  if (!u.is_real(1e-10))
    throw ValidationError("ValidationError", "symplectic SVD needs a real matrix");
  const int d = u.d();
  const int n = 2 * d;
  const RMat ur = u.matrix().real();
  const RMat jr = standard_j(d).real();
  const RMat p = sym(ur.transpose() * ur);
  Eigen::SelfAdjointEigenSolver<RMat> es(p);
  const RVec &lam = es.eigenvalues();
  const RMat &vec = es.eigenvectors();
  RMat e(n, d);
  RVec sigma2(d);
  int filled = 0;
  const double cluster = 1e-7 * lam.maxCoeff();
  for (int k = n - 1; k >= 0 && filled < d; --k) {
    if (lam(k) > 1.0 + cluster) {
      e.col(filled) = vec.col(k);
      sigma2(filled) = lam(k);
      ++filled;
    }
  }
  // Eigenvalue-one cluster: complete to an isotropic orthonormal set.
  std::vector<int> ones;
  for (int k = 0; k < n; ++k)
    if (std::abs(lam(k) - 1.0) <= cluster) ones.push_back(k);
  while (filled < d) {
    RVec best;
    double best_norm = 0.0;
    for (int k : ones) {
      RVec w = vec.col(k);
      for (int pass = 0; pass < 2; ++pass) {
        for (int c = 0; c < filled; ++c) {
          const RVec ec = e.col(c);
          const RVec jec = jr * ec;
          w -= ec.dot(w) * ec;
          w -= jec.dot(w) * jec;
        }
      }
      if (w.norm() > best_norm) {
        best_norm = w.norm();
        best = w;
      }
    }
    if (best_norm < 1e-6)
      throw NumericalError("DecompositionError", "symplectic SVD failed to complete basis");
    e.col(filled) = best / best_norm;
    sigma2(filled) = 1.0;
    ++filled;
  }
  SymplecticSvd out;
  out.v.resize(n, n);
  out.v << e, -jr * e;
  out.sigma = sigma2.cwiseSqrt();
  RVec diag(n);
  diag << out.sigma, out.sigma.cwiseInverse();
  out.delta = diag.asDiagonal();
  out.w = ur * out.v * diag.cwiseInverse().asDiagonal();
  out.residual = (ur - out.w * out.delta * out.v.transpose()).norm();
  return out;
}

namespace {

bool real_invertible(const CMat &a, double tol) {
  if (!is_real_matrix(a, tol)) return false;
  Eigen::JacobiSVD<RMat> svd(a.real());
  const RVec &sv = svd.singularValues();
  return sv(sv.size() - 1) > 1e-12 * std::max(1.0, sv(0));
}

double psd_margin(const RMat &m) {
  return kPositivityMargin * std::max(1.0, m.norm());
}

}  // namespace

TriangularReport classify_block_triangular(const BlockSymplectic &s, double tol) {
  const double scale = std::max(1.0, s.matrix().norm());
  const CMat a = s.a(), b = s.b(), c = s.c(), dd = s.dd();
  TriangularReport rep;
  if (b.norm() <= tol * scale) {
    rep.shape = TriangularShape::kLower;
    rep.a_real_invertible = real_invertible(a, tol);
    const RMat im = sym((a.transpose() * c).imag());
    rep.imag_condition = min_sym_eigenvalue(im) >= -psd_margin(im);
  } else if (c.norm() <= tol * scale) {
    rep.shape = TriangularShape::kUpper;
    rep.a_real_invertible = real_invertible(a, tol);
    const RMat im = sym((dd.transpose() * b).imag());
    rep.imag_condition = min_sym_eigenvalue(-im) >= -psd_margin(im);
  } else {
    throw ValidationError("NotTriangular", "neither B nor C vanishes");
  }
  rep.positive = rep.a_real_invertible && rep.imag_condition;
  rep.eigen_class = s.positivity().cls;
  rep.agrees = rep.positive == is_positive_class(rep.eigen_class);
  return rep;
}

ConjugationReport classify_conjugation_commuting(const BlockSymplectic &s,
                                                 double tol) {
  const double scale = std::max(1.0, s.matrix().norm());
  if ((s.matrix() - tilde(s).matrix()).norm() > tol * scale)
    throw ValidationError("NotConjugationSymmetric", "S differs from its tilde");
  const CMat a = s.a(), b = s.b(), c = s.c();
  ConjugationReport rep;
  rep.re_c_zero = c.real().norm() <= tol * scale;
  rep.re_b_zero = b.real().norm() <= tol * scale;
  rep.a_real_invertible = real_invertible(a, tol);
  const RMat atc = sym((a.transpose() * c).imag());
  const RMat abt = sym((a * b.transpose()).imag());
  rep.atc_condition = min_sym_eigenvalue(atc) >= -psd_margin(atc);
  rep.abt_condition = min_sym_eigenvalue(-abt) >= -psd_margin(abt);
  rep.positive = rep.re_c_zero && rep.re_b_zero && rep.a_real_invertible &&
                 rep.atc_condition && rep.abt_condition;
  rep.eigen_class = s.positivity().cls;
  rep.agrees = rep.positive == is_positive_class(rep.eigen_class);
  if (rep.positive) {
    const RMat ar = a.real();
    const RMat ainv = ar.inverse();
    const CMat ainv_c = ainv.cast<cplx>();
    ConjugationKernel k;
    k.rescale = ainv;
    k.chirp = c * ainv_c;
    k.word_chirp = a.transpose() * c;
    k.multiplier = ainv_c * b;
    k.amplitude = 1.0 / std::sqrt(std::abs(ar.determinant()));
    const CMat rebuilt =
        make_d(ainv) * make_v(k.word_chirp) * make_v_upper(k.multiplier);
    k.factorization_residual = (s.matrix() - rebuilt).norm();
    rep.kernel = k;
  }
  return rep;
}

}  // namespace mpsemi
