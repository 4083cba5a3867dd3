// sampling.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/sampling.h"

namespace mpsemi {

double uniform(Rng &rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

RMat random_matrix(Rng &rng, int rows, int cols, double lo, double hi) {
  RMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

RMat random_symmetric(Rng &rng, int d, double scale) {
  const RMat m = random_matrix(rng, d, d, -scale, scale);
  return 0.5 * (m + m.transpose());
}

RMat random_psd(Rng &rng, int d, double scale, double floor) {
  const RMat b = random_matrix(rng, d, d, -scale, scale);
  return b * b.transpose() / d + floor * RMat::Identity(d, d);
}

RMat random_invertible(Rng &rng, int d, double lo, double hi) {
  const RMat a = random_matrix(rng, d, d, -1.0, 1.0);
  Eigen::JacobiSVD<RMat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RVec s(d);
  for (int j = 0; j < d; ++j) s(j) = uniform(rng, lo, hi);
  return svd.matrixU() * s.asDiagonal() * svd.matrixV().transpose();
}

GeneratorToken random_real_token(Rng &rng, int d) {
  switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
    case 0:
      return Fourier{uniform(rng, 0, 1) < 0.5};
    case 1:
      return Rescale{random_invertible(rng, d), 0};
    case 2:
      return Chirp{random_symmetric(rng, d, 1.0).cast<cplx>()};
    default:
      return Multiplier{random_symmetric(rng, d, 1.0).cast<cplx>()};
  }
}

GeneratorToken random_positive_token(Rng &rng, int d) {
  switch (std::uniform_int_distribution<int>(0, 4)(rng)) {
    case 0: {
      const CMat q = random_symmetric(rng, d, 1.0).cast<cplx>() +
                     kI * random_psd(rng, d, 1.0, 0.3).cast<cplx>();
      return Chirp{q};
    }
    case 1: {
      const CMat p = random_symmetric(rng, d, 1.0).cast<cplx>() -
                     kI * random_psd(rng, d, 1.0, 0.3).cast<cplx>();
      return Multiplier{p};
    }
    case 2: {
      RVec th(d);
      for (int j = 0; j < d; ++j) th(j) = uniform(rng, 0.3, 1.2);
      return AtomR{th};
    }
    case 3: {
      RVec de(d);
      for (int j = 0; j < d; ++j) de(j) = uniform(rng, 0.3, 1.2);
      return AtomP{de};
    }
    default:
      return random_real_token(rng, d);
  }
}

GeneratorWord random_real_word(Rng &rng, int d, int length) {
  std::vector<GeneratorToken> t;
  for (int k = 0; k < length; ++k) t.push_back(random_real_token(rng, d));
  return GeneratorWord(d, std::move(t));
}

GeneratorWord random_positive_word(Rng &rng, int d, int length) {
  std::vector<GeneratorToken> t;
  for (int k = 0; k < length; ++k) t.push_back(random_positive_token(rng, d));
  return GeneratorWord(d, std::move(t));
}

RMat random_real_symplectic(Rng &rng, int d, int length) {
  return word_matrix(random_real_word(rng, d, length)).real();
}

GaussianState random_state(Rng &rng, int d, double im_floor) {
  const CMat q = random_symmetric(rng, d, 1.0).cast<cplx>() +
                 kI * random_psd(rng, d, 1.0, im_floor).cast<cplx>();
  CVec b(d);
  for (int j = 0; j < d; ++j)
    b(j) = cplx(uniform(rng, -0.5, 0.5), uniform(rng, -0.2, 0.2));
  const cplx c = std::polar(uniform(rng, 0.5, 1.5), uniform(rng, -kPi, kPi));
  return make_state(c, q, b);
}

GaussianSum random_sum(Rng &rng, int d, int terms) {
  GaussianSum s;
  for (int k = 0; k < terms; ++k) s.push_back(random_state(rng, d));
  return s;
}

}  // namespace mpsemi
