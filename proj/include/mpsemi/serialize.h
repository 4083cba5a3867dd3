// mpsemi/serialize.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// JSON encoding of matrices, states, words, Hamiltonians and reports.
//
// A complex matrix is {"re": [[...]], "im": [[...]]}.  Readers also accept a
// plain array of rows whose entries are numbers or [re, im] pairs.  Complex
// scalars are [re, im] pairs and complex vectors are arrays of such pairs.
// Doubles are written as the shortest decimal that round-trips.

#ifndef MPSEMI_SERIALIZE_H_
#define MPSEMI_SERIALIZE_H_

#include <string>

#include "json.hpp"
#include "mpsemi/evoprop.h"
#include "mpsemi/tfrzoo.h"

namespace mpsemi {

using Json = nlohmann::json;

// Reading throws IoError("FormatError") on malformed input.
Json to_json(cplx z);
cplx complex_from_json(const Json &j);

Json to_json(const CMat &m);
Json to_json(const RMat &m);
CMat cmat_from_json(const Json &j);
RMat rmat_from_json(const Json &j);

Json to_json(const CVec &v);
Json to_json(const RVec &v);
CVec cvec_from_json(const Json &j);
RVec rvec_from_json(const Json &j);

// {"d": int, "c": [re, im], "Q": matrix, "b": vector}
Json to_json(const GaussianState &f);
GaussianState state_from_json(const Json &j);

// {"d": int, "tokens": [{"type": "Fourier", "inverse": bool},
//   {"type": "Rescale", "E": matrix, "maslov": int},
//   {"type": "Chirp", "Q": matrix}, {"type": "Multiplier", "P": matrix},
//   {"type": "AtomR", "theta": vector}, {"type": "AtomP", "delta": vector}]}
Json to_json(const GeneratorToken &t);
Json to_json(const GeneratorWord &w);
GeneratorWord word_from_json(const Json &j);

// {"d": int, "Q": matrix}
Json to_json(const QuadraticHamiltonian &h);
QuadraticHamiltonian hamiltonian_from_json(const Json &j);

// {"A": matrix} or the covariant blocks {"A11", "A13", "A21"}.
TfrSpec tfr_spec_from_json(const Json &j, double tol = kDefaultTol);

Json to_json(const PositivityReport &r);
Json to_json(const TriangularReport &r);
Json to_json(const ConjugationReport &r);
Json to_json(const PolarPair &p);
Json to_json(const AtomicDecomposition &a);
Json to_json(const SymplecticSvd &s);
Json to_json(const CovarianceReport &r);
Json to_json(const CohenKernel &k);
Json to_json(const SpectrogramReport &r);
Json to_json(const PureSpectrogramReport &r);
Json to_json(const ConjugationSymmetryReport &r);
Json to_json(const ClassificationReport &r);
Json to_json(const HormanderSplit &h);
Json to_json(const WeylSymbol &w);
Json to_json(const CombinedBound &b);

// File helpers; "-" means standard input or output.
Json read_json_file(const std::string &path);
void write_text(const std::string &path, const std::string &text);

}  // namespace mpsemi

#endif  // MPSEMI_SERIALIZE_H_
