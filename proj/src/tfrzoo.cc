// tfrzoo.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/tfrzoo.h"

#include <cmath>

#include <Eigen/LU>

namespace mpsemi {

namespace {

double scale_of(const CMat &m) { return std::max(1.0, m.norm()); }

bool near(const CMat &x, const CMat &y, double tol) {
  return (x - y).norm() <= tol * std::max(scale_of(x), scale_of(y));
}

bool is_sym(const CMat &m, double tol) { return near(m, m.transpose(), tol); }

RMat sym(const RMat &m) { return 0.5 * (m + m.transpose()); }
CMat sym(const CMat &m) { return 0.5 * (m + m.transpose()); }

bool psd(const RMat &m, double tol) {
  return min_sym_eigenvalue(sym(m)) >= -tol * std::max(1.0, m.norm());
}

bool pd(const RMat &m, double tol) {
  return min_sym_eigenvalue(sym(m)) > tol * std::max(1.0, m.norm());
}

bool invertible(const CMat &m, double tol) {
  Eigen::FullPivLU<CMat> lu(m);
  lu.setThreshold(tol);
  return lu.rank() == m.rows();
}

CMat ident(int d) { return CMat::Identity(d, d); }

RVec doubled(const RVec &v) {
  RVec out(2 * v.size());
  out << v, v;
  return out;
}

RVec last_block_mask(int d) {
  RVec mask(2 * d);
  mask << RVec::Zero(d), RVec::Ones(d);
  return mask;
}

void append(std::vector<GeneratorToken> *out, const GeneratorWord &w) {
  out->insert(out->end(), w.tokens().begin(), w.tokens().end());
}

// (F_2 T_{e_left})^{-1} (Xi tensor Xi) (F_2 T_{e_right}) in dimension 2d.
GeneratorWord conjugated_atom(const RMat &e_left, const RVec &theta, const RVec &delta,
                              const RMat &e_right) {
  const int d = static_cast<int>(theta.size());
  const RVec mask = last_block_mask(d);
  std::vector<GeneratorToken> t;
  t.push_back(Rescale{e_left.inverse(), 0});
  append(&t, partial_fourier_word(mask, true));
  if (delta.cwiseAbs().maxCoeff() > 0) t.push_back(AtomP{doubled(delta)});
  if (theta.cwiseAbs().maxCoeff() > 0) t.push_back(AtomR{doubled(theta)});
  append(&t, partial_fourier_word(mask, false));
  t.push_back(Rescale{e_right, 0});
  return GeneratorWord(2 * d, std::move(t));
}

}  // namespace

TfrSpec::TfrSpec(const CMat &a, double tol) : TfrSpec(BlockSymplectic(a, tol)) {}

TfrSpec::TfrSpec(const BlockSymplectic &a) : d_(a.d() / 2), a_(a) {
  if (a.d() % 2 != 0)
    throw ValidationError("DimensionError", "TFR projection must be 4d x 4d");
  if (!a.is_positive())
    throw ValidationError("NotPositive", "TFR projection must lie in the positive semigroup");
}

CMat TfrSpec::blk(int i, int j) const {
  return a_.matrix().block((i - 1) * d_, (j - 1) * d_, d_, d_);
}

CMat wigner_projection(int d) {
  const CMat id = ident(d), z = CMat::Zero(d, d);
  CMat a(4 * d, 4 * d);
  a << 0.5 * id, 0.5 * id, z, z,
       z, z, 0.5 * id, -0.5 * id,
       z, z, id, id,
       -id, id, z, z;
  return a;
}

CMat tensor_fourier_projection(int d) {
  const CMat id = ident(d), z = CMat::Zero(d, d);
  CMat a(4 * d, 4 * d);
  a << id, z, z, z,
       z, z, z, id,
       z, z, id, z,
       z, -id, z, z;
  return a;
}

CMat b_matrix(const CMat &a11, const CMat &a13, const CMat &a21) {
  const int d = static_cast<int>(a11.rows());
  CMat b(2 * d, 2 * d);
  b << a13, 0.5 * ident(d) - a11, 0.5 * ident(d) - a11.transpose(), -a21;
  return b;
}

TfrSpec build_covariant(const CMat &a11, const CMat &a13, const CMat &a21, double tol) {
  const int d = static_cast<int>(a11.rows());
  if (a11.cols() != d || a13.rows() != d || a13.cols() != d || a21.rows() != d ||
      a21.cols() != d)
    throw ValidationError("DimensionError", "covariant blocks must be d x d");
  if (!is_sym(a13, tol)) throw ValidationError("ValidationError", "A13Symmetric");
  if (!is_sym(a21, tol)) throw ValidationError("ValidationError", "A21Symmetric");
  if (!psd(-b_matrix(a11, a13, a21).imag(), tol))
    throw ValidationError("ValidationError", "ImBA<=0");
  const CMat id = ident(d), z = CMat::Zero(d, d);
  CMat a(4 * d, 4 * d);
  a << a11, id - a11, a13, a13,
       a21, -a21, id - a11.transpose(), -a11.transpose(),
       z, z, id, id,
       -id, id, z, z;
  TfrSpec s(a, 1e-8);
  if (!is_positive_class(classify_positivity(s.a().matrix()).cls))
    throw NumericalError("NumericalError", "covariant matrix failed the positivity test");
  return s;
}

TfrSpec wigner_spec(int d) {
  return build_covariant(0.5 * ident(d), CMat::Zero(d, d), CMat::Zero(d, d));
}

TfrSpec husimi_spec(int d) {
  return build_covariant(0.5 * ident(d), -0.5 * kI * ident(d), 0.5 * kI * ident(d));
}

CovarianceReport is_covariant(const TfrSpec &s, double tol) {
  const int d = s.d();
  const CMat id = ident(d), z = CMat::Zero(d, d);
  const CMat a11 = s.blk(1, 1), a13 = s.blk(1, 3), a21 = s.blk(2, 1);
  CovarianceReport rep;
  auto need = [&](bool ok, const char *clause) {
    if (!ok) rep.failed.emplace_back(clause);
  };
  need(near(s.blk(1, 2), id - a11, tol), "A12=I-A11");
  need(near(s.blk(1, 4), a13, tol), "A14=A13");
  need(near(s.blk(2, 2), -a21, tol), "A22=-A21");
  need(near(s.blk(2, 3), id - a11.transpose(), tol), "A23=I-A11^T");
  need(near(s.blk(2, 4), -a11.transpose(), tol), "A24=-A11^T");
  need(near(s.blk(3, 1), z, tol) && near(s.blk(3, 2), z, tol) &&
           near(s.blk(3, 3), id, tol) && near(s.blk(3, 4), id, tol),
       "Row3");
  need(near(s.blk(4, 1), -id, tol) && near(s.blk(4, 2), id, tol) &&
           near(s.blk(4, 3), z, tol) && near(s.blk(4, 4), z, tol),
       "Row4");
  need(is_sym(a13, tol), "A13Symmetric");
  need(is_sym(a21, tol), "A21Symmetric");
  const CMat b = b_matrix(a11, a13, a21);
  need(psd(-b.imag(), tol), "ImBA<=0");
  rep.covariant = rep.failed.empty();
  if (rep.covariant) rep.form = CovariantForm{a11, a13, a21, b};
  return rep;
}

std::string to_string(KernelKind k) {
  switch (k) {
    case KernelKind::kGaussian:
      return "Gaussian";
    case KernelKind::kDelta:
      return "Delta";
    case KernelKind::kChirp:
      return "Chirp";
  }
  return "Chirp";
}

CohenKernel cohen_kernel(const TfrSpec &s, double tol) {
  const CovarianceReport cov = is_covariant(s, tol);
  if (!cov.covariant) throw ValidationError("NotCovariant", "spec is not covariant");
  CohenKernel k;
  k.b_a = cov.form->b_a;
  const int n = static_cast<int>(k.b_a.rows());
  if (k.b_a.norm() <= tol) {
    k.kind = KernelKind::kDelta;
  } else if (pd(-k.b_a.imag(), tol)) {
    k.kind = KernelKind::kGaussian;
    // The normalized inverse transform carries i^{n/2} = i^d; remove it.
    const GaussianState phi = make_state(1.0, -k.b_a, CVec::Zero(n));
    k.gaussian = scaled(apply_token(Fourier{true}, phi), std::pow(kI, -0.5 * n));
  } else {
    k.kind = KernelKind::kChirp;
  }
  return k;
}

SpectrogramReport classify_spectrogram(const TfrSpec &s, double tol) {
  const int d = s.d();
  const CMat a11 = s.blk(1, 1), a13 = s.blk(1, 3), a21 = s.blk(2, 1);
  if (!invertible(a13, 1e-10))
    throw UnsupportedError("UnsupportedSingularBlock", "A13 is singular");
  SpectrogramReport rep;
  const CovarianceReport cov = is_covariant(s, tol);
  if (!cov.covariant) {
    rep.failed.emplace_back("Covariance");
    rep.failed.insert(rep.failed.end(), cov.failed.begin(), cov.failed.end());
  }
  const CMat inv13 = a13.inverse();
  const CMat m_phi = inv13 * (a11 - ident(d));
  const CMat m_psi = a11.transpose() * inv13;
  if (!psd(-a13.imag(), tol)) rep.failed.emplace_back("ImA13<=0");
  if (!near(a21 + a11.transpose() * inv13 * (a11 - ident(d)), CMat::Zero(d, d), tol))
    rep.failed.emplace_back("DTeq1");
  if (!psd(m_psi.imag(), tol)) rep.failed.emplace_back("DTeq2");
  if (!psd(-m_phi.imag(), tol)) rep.failed.emplace_back("DTeq3");
  rep.ok = rep.failed.empty();
  if (rep.ok) {
    rep.constant = det_inv_sqrt(kI * a13);
    const double cpsi = std::sqrt(std::abs(rep.constant));
    // The window built from A11^T A13^{-1} analyses f, the other one g.
    rep.phi = make_state(std::conj(rep.constant) / cpsi, -sym(m_psi).conjugate(), CVec::Zero(d));
    rep.psi = make_state(cpsi, -sym(m_phi), CVec::Zero(d));
  }
  return rep;
}

PureSpectrogramReport classify_pure_spectrogram(const TfrSpec &s, double tol) {
  const int d = s.d();
  const CMat a11 = s.blk(1, 1), a13 = s.blk(1, 3), a21 = s.blk(2, 1);
  if (!invertible(a13, 1e-10))
    throw UnsupportedError("UnsupportedSingularBlock", "A13 is singular");
  PureSpectrogramReport rep;
  const CovarianceReport cov = is_covariant(s, tol);
  if (!cov.covariant) {
    rep.failed.emplace_back("Covariance");
    rep.failed.insert(rep.failed.end(), cov.failed.begin(), cov.failed.end());
  }
  const CMat inv13 = a13.inverse();
  if (!pd(-a13.imag(), tol)) rep.failed.emplace_back("ImA13<0");
  const RMat half = 0.5 * RMat::Identity(d, d);
  if ((a11.real() - half).norm() > tol * scale_of(a11)) rep.failed.emplace_back("GGeq1-1");
  if (a13.real().norm() > tol * scale_of(a13)) rep.failed.emplace_back("GGeq1-2");
  const CMat f = a11.imag().cast<cplx>();
  if (!near(a21, 0.25 * inv13 + f.transpose() * inv13 * f, tol))
    rep.failed.emplace_back("GGeq1-3");
  rep.ok = rep.failed.empty();
  if (rep.ok) {
    const cplx c = std::sqrt(det_inv_sqrt(kI * a13));
    rep.phi = make_state(c, -sym(CMat(inv13 * (a11 - ident(d)))), CVec::Zero(d));
  }
  return rep;
}

ConjugationSymmetryReport conjugation_symmetric(const TfrSpec &s, double tol) {
  ConjugationSymmetryReport rep;
  rep.positive = s.a().is_positive();
  bool ok = true;
  for (int i = 1; i <= 4; ++i) {
    const double sign_even = i <= 2 ? 1.0 : -1.0;
    // Columns 1 and 3 are free; column 2 pairs with 1 and column 4 with 3.
    ok = ok && near(s.blk(i, 2), sign_even * s.blk(i, 1).conjugate(), tol);
    ok = ok && near(s.blk(i, 4), -sign_even * s.blk(i, 3).conjugate(), tol);
  }
  rep.pattern = ok;
  if (!rep.pattern) rep.failed.emplace_back("charAconj");
  if (!rep.positive) rep.failed.emplace_back("Positivity");
  if (rep.pattern) {
    const CMat b = s.a().matrix() * wigner_projection(s.d()).inverse();
    try {
      rep.structure = classify_conjugation_commuting(BlockSymplectic(b, 1e-8), 1e-8);
      if (!rep.structure->a_real_invertible) rep.failed.emplace_back("ReE invertible");
      if (!rep.structure->atc_condition) rep.failed.emplace_back("ReE^T ImF>=0");
      if (!rep.structure->abt_condition) rep.failed.emplace_back("ReE J ImE^T<=0");
    } catch (const Error &e) {
      rep.failed.emplace_back(e.code());
    }
  }
  rep.symmetric = rep.failed.empty();
  return rep;
}

ClassificationReport classify(const TfrSpec &s, double tol) {
  ClassificationReport rep;
  const CovarianceReport cov = is_covariant(s, tol);
  rep.covariant = cov.covariant;
  for (const auto &c : cov.failed) rep.failure_clauses.push_back("Covariance:" + c);
  if (rep.covariant) {
    rep.cohen_kernel = cohen_kernel(s, tol);
    try {
      rep.spectrogram = classify_spectrogram(s, tol);
      for (const auto &c : rep.spectrogram->failed)
        if (c != "Covariance") rep.failure_clauses.push_back("Spectrogram:" + c);
      rep.pure_spectrogram = classify_pure_spectrogram(s, tol);
      for (const auto &c : rep.pure_spectrogram->failed)
        if (c != "Covariance") rep.failure_clauses.push_back("PureSpectrogram:" + c);
    } catch (const UnsupportedError &e) {
      rep.failure_clauses.push_back("Spectrogram:" + e.code());
    }
  }
  const ConjugationSymmetryReport conj = conjugation_symmetric(s, tol);
  rep.conjugation_symmetric = conj.symmetric;
  for (const auto &c : conj.failed) rep.failure_clauses.push_back("Conjugation:" + c);
  return rep;
}

GaussianState tfr_gaussian(const TfrSpec &s, const GaussianState &f,
                           const GaussianState &g) {
  if (f.d != s.d() || g.d != s.d())
    throw ValidationError("DimensionError", "state and spec dimensions differ");
  const CovarianceReport cov = is_covariant(s);
  if (cov.covariant)
    return apply_token(Multiplier{cov.form->b_a}, wigner_gaussian(f, g));
  return apply_matrix(s.a(), tensor(f, conj_state(g)));
}

GridFn grid_tfr(const TfrSpec &s, const GridFn &f, const GridFn &g) {
  if (s.d() != 1) throw ValidationError("DimensionError", "grid TFRs need d = 1");
  const CovarianceReport cov = is_covariant(s);
  if (!cov.covariant)
    throw UnsupportedError("Unsupported", "grid evaluation needs a covariant spec");
  return grid_apply_token(Multiplier{cov.form->b_a}, grid_wigner(f, g));
}

GridFn grid_cohen_convolution(const GridFn &k, const GridFn &w) {
  if (k.spec.d != 2 || w.spec.d != 2 || k.spec.n != w.spec.n ||
      std::abs(k.spec.h - w.spec.h) > 1e-15 || !k.spec.is_symmetric(1e-9))
    throw ValidationError("ValidationError", "convolution needs one symmetric 2-d grid");
  GridFn kk = grid_fourier(k);
  const GridFn ww = grid_fourier(w);
  kk.data = kk.data.cwiseProduct(ww.data);
  GridFn out = grid_fourier(kk, true);
  out.data *= kI;
  return out;
}

double behavioral_covariance_residual(const TfrSpec &s, const GaussianState &f,
                                      const GaussianState &g, const RVec &z) {
  const int d = s.d();
  const CVec zc = z.cast<cplx>();
  const GaussianState lhs = tfr_gaussian(s, shift(f, zc, 0.0), shift(g, zc, 0.0));
  CVec zz = CVec::Zero(4 * d);
  zz.head(2 * d) = zc;
  const GaussianState rhs = shift(tfr_gaussian(s, f, g), zz, 0.0);
  return std::max(projective_distance(lhs, rhs),
                  std::abs(std::abs(lhs.c) / std::abs(rhs.c) - 1.0));
}

void validate(const HormanderSplit &split) {
  const int d = static_cast<int>(split.theta.size());
  if (d == 0 || split.delta.size() != d || split.u1.rows() != 2 * d ||
      split.u1.cols() != 2 * d || split.u2.rows() != 2 * d || split.u2.cols() != 2 * d)
    throw ValidationError("NotSplitForm", "split blocks have inconsistent sizes");
  if (!is_symplectic(split.u1.cast<cplx>(), 1e-8) ||
      !is_symplectic(split.u2.cast<cplx>(), 1e-8))
    throw ValidationError("NotSplitForm", "outer factors must be real symplectic");
  for (int j = 0; j < d; ++j)
    if (split.theta(j) < 0 || split.delta(j) < 0 || split.theta(j) * split.delta(j) != 0)
      throw ValidationError("NotSplitForm", "atom parameters must be disjoint and nonnegative");
}

CMat split_matrix(const HormanderSplit &split) {
  validate(split);
  return split.u1.cast<cplx>() * atom_matrix(split.theta, split.delta).matrix() *
         split.u2.cast<cplx>();
}

HormanderSplit hormander_split(const BlockSymplectic &s) {
  const PolarPair p = matrix_polar(s);
  const AtomicDecomposition ad = atomic_decompose(p.z);
  HormanderSplit split;
  split.u1 = p.u.matrix().real() * ad.v.inverse();
  split.theta = ad.theta;
  split.delta = ad.delta;
  split.u2 = ad.v;
  return split;
}

GeneratorWord wigner_operator(const HormanderSplit &split) {
  validate(split);
  const double r = std::sqrt(0.5);
  return conjugated_atom(r * split.u1, split.theta, split.delta, r * split.u2.inverse());
}

WignerOperatorPolar wigner_operator_polar(const HormanderSplit &split) {
  validate(split);
  const double r = std::sqrt(0.5);
  WignerOperatorPolar out{(split.u1 * split.u2).inverse(),
                          conjugated_atom(r * split.u2.inverse(), split.theta, split.delta,
                                          r * split.u2.inverse())};
  return out;
}

}  // namespace mpsemi
