// mpsemi/words.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Generator tokens and words.  A word (t1, ..., tN) denotes the operator
// t1 o ... o tN, so the rightmost token acts first.

#ifndef MPSEMI_WORDS_H_
#define MPSEMI_WORDS_H_

#include <string>
#include <variant>
#include <vector>

#include "mpsemi/sympcore.h"

namespace mpsemi {

// Normalized Fourier transform i^{-d/2} F-hat, or its inverse.  Projection J,
// resp. J^{-1}.
struct Fourier {
  bool inverse = false;
};

// f -> i^maslov |det E|^{1/2} f(E x).  Projection diag(E^{-1}, E^T).
struct Rescale {
  RMat e;
  int maslov = 0;
};

// Multiplication by exp(i pi Q x.x), Im Q >= 0.  Projection (I 0; Q I).
struct Chirp {
  CMat q;
};

// Fourier multiplier f-hat -> exp(-i pi P xi.xi) f-hat, Im P <= 0.
// Projection (I P; 0 I).
struct Multiplier {
  CMat p;
};

// Hyperbolic rotation atom, Theta >= 0.
struct AtomR {
  RVec theta;
};

// Parabolic atom, the chirp with Q = i diag(Delta), Delta >= 0.
struct AtomP {
  RVec delta;
};

using GeneratorToken =
    std::variant<Fourier, Rescale, Chirp, Multiplier, AtomR, AtomP>;

std::string token_name(const GeneratorToken &t);

// Throws ValidationError when the token violates its constraints.
void validate_token(const GeneratorToken &t, int d, double tol = kDefaultTol);

// Projection of a single token as a 2d x 2d matrix.
CMat token_matrix(const GeneratorToken &t, int d);

class GeneratorWord {
 public:
  explicit GeneratorWord(int d, std::vector<GeneratorToken> tokens = {});

  int d() const { return d_; }
  const std::vector<GeneratorToken> &tokens() const { return tokens_; }
  std::size_t size() const { return tokens_.size(); }
  bool empty() const { return tokens_.empty(); }

  // Returns this o other (other acts first).
  GeneratorWord then_after(const GeneratorWord &other) const;
  GeneratorWord with_left(const GeneratorToken &t) const;

 private:
  int d_;
  std::vector<GeneratorToken> tokens_;
};

GeneratorWord concat(const GeneratorWord &left, const GeneratorWord &right);

CMat word_matrix(const GeneratorWord &w);
BlockSymplectic word_to_matrix(const GeneratorWord &w);

// Five-token word with projection R_theta:
// Chirp(i tanh), Rescale(1/cosh), Fourier^{-1}, Chirp(i tanh), Fourier.
GeneratorWord factor_R_theta(double theta);
GeneratorWord factor_R_theta(const RVec &theta);

// Word of the conjugated operator f -> conj(T conj f).
GeneratorWord tilde_word(const GeneratorWord &w);

// True when every token is Fourier, Rescale or a real Chirp/Multiplier.
bool is_real_word(const GeneratorWord &w, double tol = kDefaultTol);

// Exact inverse of a real word.
GeneratorWord inverse_word(const GeneratorWord &w);

// Fourier transform (or inverse) acting on the coordinates where mask = 1,
// written as Chirp(-M) Multiplier(M) Chirp(-M) with M = diag(mask).
GeneratorWord partial_fourier_word(const RVec &mask, bool inverse = false);

// Embeds a word in dimension d into dimension 2d acting on block 0 (first d
// coordinates) or block 1 (last d coordinates).
GeneratorWord lift_word(const GeneratorWord &w, int which);

// Word for S = D_{A^{-1}} V_{A^T C} V^T_{A^{-1}B} of a conjugation-commuting
// positive matrix.
GeneratorWord conjugation_kernel_word(const ConjugationKernel &k);

}  // namespace mpsemi

#endif  // MPSEMI_WORDS_H_
