// mpsemi/sympcore.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Complex symplectic linear algebra.  Matrices are 2d x 2d in the block
// layout (A B; C D) acting on phase-space vectors (x, xi).

#ifndef MPSEMI_SYMPCORE_H_
#define MPSEMI_SYMPCORE_H_

#include <optional>
#include <string>
#include <vector>

#include "mpsemi/types.h"

namespace mpsemi {

// Elementary matrices.
CMat standard_j(int d);                  // (0 I; -I 0)
CMat make_v(const CMat &q);              // (I 0; Q I)
CMat make_v_upper(const CMat &p);        // (I P; 0 I)
CMat make_d(const RMat &e);              // diag(E^{-1}, E^T)
CMat make_r(const RVec &theta);          // hyperbolic rotation, per coordinate

// Block (i, j), i, j in {0, 1}, of a 2d x 2d matrix.
CMat block(const CMat &s, int i, int j);
CMat assemble(const CMat &a, const CMat &b, const CMat &c, const CMat &d);

// ||S^T J S - J||_F / max(1, ||S||_F^2).
double symplectic_defect(const CMat &s);
// Throws ValidationError on odd dimension.
bool is_symplectic(const CMat &s, double tol = kDefaultTol);

enum class PositivityClass {
  kNotSymplectic,
  kNotPositive,
  kPositive,
  kStrictlyPositive,
  kReal
};

std::string to_string(PositivityClass c);
// True for Positive, StrictlyPositive and Real.
bool is_positive_class(PositivityClass c);

struct PositivityReport {
  PositivityClass cls = PositivityClass::kNotSymplectic;
  double min_eigenvalue = 0.0;
  double margin = 0.0;  // 1e-9 * ||M_S||_2
  RMat m_s;             // empty when not symplectic
};

// A validated complex symplectic matrix with its positivity class computed
// once at construction.  Immutable.
class BlockSymplectic {
 public:
  explicit BlockSymplectic(CMat s, double tol = kDefaultTol);
  static BlockSymplectic identity(int d);

  int d() const { return d_; }
  const CMat &matrix() const { return s_; }
  CMat a() const { return block(s_, 0, 0); }
  CMat b() const { return block(s_, 0, 1); }
  CMat c() const { return block(s_, 1, 0); }
  CMat dd() const { return block(s_, 1, 1); }
  const PositivityReport &positivity() const { return report_; }
  bool is_positive() const { return is_positive_class(report_.cls); }
  bool is_real(double tol = kDefaultTol) const;

  BlockSymplectic operator*(const BlockSymplectic &other) const;

 private:
  int d_;
  CMat s_;
  PositivityReport report_;
};

// The real symmetric 4d x 4d positivity matrix.
RMat positivity_matrix(const BlockSymplectic &s);
RMat positivity_matrix(const CMat &s);

PositivityReport classify_positivity(const CMat &s, double tol = kDefaultTol);

// Moore-Penrose inverse; singular values below tol * sigma_max are dropped.
CMat pseudo_inverse(const CMat &a, double tol = kDefaultTol);

struct SchurPsdResult {
  bool psd = false;          // Schur-complement criterion verdict
  bool eigen_psd = false;    // direct eigenvalue verdict
  bool agrees = false;
  std::string failed_clause;  // empty, "A>=0", "(I-AA+)B=0", "C-B^T A+ B>=0"
  double min_eigenvalue = 0.0;
};

// M real symmetric with even dimension, split into d x d blocks (A B; B^T C).
SchurPsdResult schur_psd_test(const RMat &m, double tol = kDefaultTol);

BlockSymplectic inverse_symplectic(const BlockSymplectic &s);
BlockSymplectic sharp(const BlockSymplectic &s);
BlockSymplectic tilde(const BlockSymplectic &s);
BlockSymplectic tensor_interleave(const BlockSymplectic &s1,
                                  const BlockSymplectic &s2);
CMat tensor_interleave(const CMat &s1, const CMat &s2);

// R_Theta * V_{i Delta}; Theta_j * Delta_j must vanish for every j.
BlockSymplectic atom_matrix(const RVec &theta, const RVec &delta);

struct PolarPair {
  BlockSymplectic u;
  BlockSymplectic z;
  double residual = 0.0;   // ||S - U Z||_F
  double imag_u = 0.0;     // ||Im U||_F before projection onto reals
};

PolarPair matrix_polar(const BlockSymplectic &s);

struct AtomicDecomposition {
  RMat v;            // real symplectic, Z = V^{-1} atom V
  RVec theta;        // sorted descending
  RVec delta;
  double residual = 0.0;
};

AtomicDecomposition atomic_decompose(const BlockSymplectic &z);

struct SymplecticSvd {
  RMat w;          // orthogonal symplectic
  RVec sigma;      // the d singular values >= 1, descending
  RMat delta;      // diag(sigma, 1/sigma)
  RMat v;          // orthogonal symplectic, U = W delta V^T
  double residual = 0.0;
};

SymplecticSvd symplectic_svd(const BlockSymplectic &u);

enum class TriangularShape { kLower, kUpper };  // B = 0, C = 0

struct TriangularReport {
  TriangularShape shape = TriangularShape::kLower;
  bool a_real_invertible = false;
  bool imag_condition = false;  // Im(A^T C) >= 0, resp. Im(D^T B) <= 0
  bool positive = false;
  PositivityClass eigen_class = PositivityClass::kNotSymplectic;
  bool agrees = false;
};

TriangularReport classify_block_triangular(const BlockSymplectic &s,
                                           double tol = kDefaultTol);

// Kernel parameters of S = D_{A^{-1}} V_{A^T C} V^T_{A^{-1}B}.
struct ConjugationKernel {
  RMat rescale;       // A^{-1}
  CMat chirp;         // C A^{-1}, the output chirp of the integral kernel
  CMat word_chirp;    // A^T C
  CMat multiplier;    // A^{-1} B
  double amplitude;   // |det A|^{-1/2}
  double factorization_residual;  // ||S - D_{A^{-1}} V_{A^T C} V^T_{A^{-1}B}||
};

struct ConjugationReport {
  bool re_c_zero = false;
  bool re_b_zero = false;
  bool a_real_invertible = false;
  bool atc_condition = false;   // Im(A^T C) >= 0
  bool abt_condition = false;   // Im(A B^T) <= 0
  bool positive = false;
  PositivityClass eigen_class = PositivityClass::kNotSymplectic;
  bool agrees = false;
  std::optional<ConjugationKernel> kernel;
};

ConjugationReport classify_conjugation_commuting(const BlockSymplectic &s,
                                                 double tol = kDefaultTol);

// Helpers shared across modules.
double min_sym_eigenvalue(const RMat &m);  // of (m + m^T)/2
bool is_real_matrix(const CMat &m, double tol = kDefaultTol);

}  // namespace mpsemi

#endif  // MPSEMI_SYMPCORE_H_
