// mpsemi/sampling.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Seeded random generation of matrices, words and Gaussian states for
// property tests and the command line tool.

#ifndef MPSEMI_SAMPLING_H_
#define MPSEMI_SAMPLING_H_

#include <random>

#include "mpsemi/gausscalc.h"
#include "mpsemi/words.h"

namespace mpsemi {

using Rng = std::mt19937_64;

double uniform(Rng &rng, double lo, double hi);
RMat random_matrix(Rng &rng, int rows, int cols, double lo, double hi);
RMat random_symmetric(Rng &rng, int d, double scale);
// B B^T / d with entries of B in [-scale, scale], plus floor * I.
RMat random_psd(Rng &rng, int d, double scale, double floor = 0.0);
// Invertible with singular values kept in a moderate range.
RMat random_invertible(Rng &rng, int d, double lo = 0.7, double hi = 1.4);

GeneratorToken random_real_token(Rng &rng, int d);
GeneratorToken random_positive_token(Rng &rng, int d);
GeneratorWord random_real_word(Rng &rng, int d, int length);
GeneratorWord random_positive_word(Rng &rng, int d, int length);
RMat random_real_symplectic(Rng &rng, int d, int length = 4);

// Gaussian with Im Q >= im_floor I and moderate real parts.
GaussianState random_state(Rng &rng, int d, double im_floor = 0.5);
GaussianSum random_sum(Rng &rng, int d, int terms);

}  // namespace mpsemi

#endif  // MPSEMI_SAMPLING_H_
