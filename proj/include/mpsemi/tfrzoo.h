// mpsemi/tfrzoo.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Metaplectic Wigner distributions W_A(f, g) = A(f tensor conj g) for A in
// the positive semigroup of dimension 2d: covariance, Cohen kernels,
// spectrogram windows, conjugation symmetry and Wigner operators.

#ifndef MPSEMI_TFRZOO_H_
#define MPSEMI_TFRZOO_H_

#include <optional>
#include <string>
#include <vector>

#include "mpsemi/gausscalc.h"
#include "mpsemi/gridlab.h"
#include "mpsemi/sympcore.h"
#include "mpsemi/words.h"

namespace mpsemi {

// A is 4d x 4d, split into sixteen d x d blocks A_ij (1-based).
class TfrSpec {
 public:
  explicit TfrSpec(const CMat &a, double tol = 1e-8);
  explicit TfrSpec(const BlockSymplectic &a);

  int d() const { return d_; }
  const BlockSymplectic &a() const { return a_; }
  CMat blk(int i, int j) const;

 private:
  int d_;
  BlockSymplectic a_;
};

// Projection of the classical Wigner distribution.
CMat wigner_projection(int d);
// Projection of the partial Fourier transform in the last d variables.
CMat tensor_fourier_projection(int d);

// The 2d x 2d matrix (A13, I/2 - A11; I/2 - A11^T, -A21).
CMat b_matrix(const CMat &a11, const CMat &a13, const CMat &a21);

struct CovariantForm {
  CMat a11, a13, a21;
  CMat b_a;
};

TfrSpec build_covariant(const CMat &a11, const CMat &a13, const CMat &a21,
                        double tol = kDefaultTol);
TfrSpec wigner_spec(int d);
// A11 = I/2, A13 = -(i/2) I and A21 = (i/2) I.
TfrSpec husimi_spec(int d);

struct CovarianceReport {
  bool covariant = false;
  std::vector<std::string> failed;
  std::optional<CovariantForm> form;
};

CovarianceReport is_covariant(const TfrSpec &s, double tol = kDefaultTol);

enum class KernelKind { kGaussian, kDelta, kChirp };
std::string to_string(KernelKind k);

// k_A is the inverse Fourier transform of exp(-i pi B_A z.z).
struct CohenKernel {
  KernelKind kind = KernelKind::kChirp;
  CMat b_a;
  std::optional<GaussianState> gaussian;  // kind == kGaussian
};

CohenKernel cohen_kernel(const TfrSpec &s, double tol = kDefaultTol);

struct SpectrogramReport {
  bool ok = false;
  std::vector<std::string> failed;
  // W_A(f, g) = V_phi f conj(V_psi g) with conj(c_phi) c_psi = det(i A13)^{-1/2}
  // and |c_phi| = |c_psi|.
  std::optional<GaussianState> phi, psi;
  cplx constant{0.0, 0.0};
};

SpectrogramReport classify_spectrogram(const TfrSpec &s, double tol = kDefaultTol);

struct PureSpectrogramReport {
  bool ok = false;
  std::vector<std::string> failed;
  std::optional<GaussianState> phi;
};

PureSpectrogramReport classify_pure_spectrogram(const TfrSpec &s,
                                                double tol = kDefaultTol);

struct ConjugationSymmetryReport {
  bool symmetric = false;
  bool pattern = false;
  bool positive = false;
  std::vector<std::string> failed;
  // Structural classification of B = A A_{1/2}^{-1}, which commutes with
  // complex conjugation whenever the pattern holds.
  std::optional<ConjugationReport> structure;
};

ConjugationSymmetryReport conjugation_symmetric(const TfrSpec &s,
                                                double tol = kDefaultTol);

struct ClassificationReport {
  bool covariant = false;
  std::optional<CohenKernel> cohen_kernel;
  std::optional<SpectrogramReport> spectrogram;
  std::optional<PureSpectrogramReport> pure_spectrogram;
  bool conjugation_symmetric = false;
  std::vector<std::string> failure_clauses;
};

ClassificationReport classify(const TfrSpec &s, double tol = kDefaultTol);

// Closed form of W_A(f, g).  Covariant specs use the exact word
// Multiplier(B_A) after the Wigner distribution; other specs act through the
// projection, which fixes the result up to a unimodular constant.
GaussianState tfr_gaussian(const TfrSpec &s, const GaussianState &f,
                           const GaussianState &g);

// W_A(f, g) on the phase-space grid for covariant specs in d = 1.
GridFn grid_tfr(const TfrSpec &s, const GridFn &f, const GridFn &g);
// k * w on a symmetric 2-d grid, evaluated through the grid Fourier transform.
GridFn grid_cohen_convolution(const GridFn &k, const GridFn &w);

// Residual of W_A(pi(z) f, pi(z) g) against the translate of W_A(f, g) by z.
double behavioral_covariance_residual(const TfrSpec &s, const GaussianState &f,
                                      const GaussianState &g, const RVec &z);

// S = U1 Xi U2 with U1, U2 real symplectic and Xi = p_{i Delta} R_Theta.
struct HormanderSplit {
  RMat u1;
  RVec theta;
  RVec delta;
  RMat u2;
};

void validate(const HormanderSplit &split);
CMat split_matrix(const HormanderSplit &split);
// Split of a positive matrix from its polar and atomic decompositions.
HormanderSplit hormander_split(const BlockSymplectic &s);

// Word K in dimension 2d with W(Sf, Sg) = K W(f, g) up to a constant.
GeneratorWord wigner_operator(const HormanderSplit &split);

// K = T_{U^{-1}} K_Z with U = U1 U2.
struct WignerOperatorPolar {
  RMat u_inverse;
  GeneratorWord k_z;
};

WignerOperatorPolar wigner_operator_polar(const HormanderSplit &split);

}  // namespace mpsemi

#endif  // MPSEMI_TFRZOO_H_
