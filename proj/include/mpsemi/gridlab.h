// mpsemi/gridlab.h

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)
//
// Sampled functions on centered grids x_k = (k - n/2) h in dimension 1 or 2,
// and discrete versions of the metaplectic generators and time-frequency
// transforms.

#ifndef MPSEMI_GRIDLAB_H_
#define MPSEMI_GRIDLAB_H_

#include <iosfwd>
#include <string>

#include "mpsemi/gausscalc.h"
#include "mpsemi/words.h"

namespace mpsemi {

struct GridSpec {
  int d = 1;
  int n = 256;
  double h = 1.0 / 16.0;

  double point(int k) const { return (k - n / 2) * h; }
  double dual_spacing() const { return 1.0 / (n * h); }
  long size() const { return d == 1 ? n : static_cast<long>(n) * n; }
  // Phase-space grids need n h^2 = 1 so that both axes share one spacing.
  bool is_symmetric(double tol = 1e-12) const {
    return std::abs(n * h * h - 1.0) <= tol;
  }
};

void validate(const GridSpec &spec);

// Row-major: for d = 2, sample (i, j) sits at i * n + j, with i indexing the
// first coordinate.
struct GridFn {
  GridSpec spec;
  CVec data;
};

GridFn zeros(const GridSpec &spec);
GridFn sample(const GaussianState &f, const GridSpec &spec);
GridFn sample(const GaussianSum &f, const GridSpec &spec);
// max |f| on the outermost grid points divided by max |f|.
double boundary_ratio(const GridFn &f);

double l2_norm(const GridFn &f);
cplx inner_product(const GridFn &f, const GridFn &g);
// ||a - b|| / ||b||.
double relative_error(const GridFn &a, const GridFn &b);
// min over unimodular c of ||a - c b|| / ||b||.
double projective_error(const GridFn &a, const GridFn &b);

// Centered DFT of even length N with sign s = -1 or +1:
// out_k = sum_j in_j exp(s 2 pi i (j - N/2)(k - N/2) / N).
CVec centered_dft(const CVec &in, int sign);

// Normalized Fourier transform i^{-d/2} h^d DFT (or its inverse), onto the
// dual grid with spacing 1 / (n h).
GridFn grid_fourier(const GridFn &f, bool inverse = false);

// Values of the band-limited interpolant of f at the points scale * x_k,
// zero outside the box.  d = 1.
CVec bandlimited_rescale(const CVec &f, double scale);

GridFn grid_apply_token(const GeneratorToken &t, const GridFn &f);
GridFn grid_apply_word(const GeneratorWord &w, const GridFn &f);

// Phase-space transforms of d = 1 functions onto a symmetric 2-d grid; the
// first output coordinate is x, the second xi.
GridFn grid_wigner(const GridFn &f, const GridFn &g);
GridFn grid_stft(const GridFn &f, const GridFn &g);
GridFn grid_spectrogram(const GridFn &f, const GridFn &g);

// Mixed norm of (1 + |z|^2)^{s/2} |V_g f|: inner p over x, outer q over xi.
// Pass infinity for p or q to take a maximum.
double discrete_modnorm(const GridFn &f, const GridFn &g, double p, double q,
                        double s);

struct ContractionResult {
  double ratio = 1.0;
  bool strict = false;
};

ContractionResult contraction_check(const GeneratorWord &w, const GridFn &f);

// rho(x, xi; 0) applied on a d = 1 grid with x an integer multiple of h.
GridFn grid_shift(const GridFn &f, int x_steps, double xi);
// Translation of a 2-d grid function by whole grid steps, zero fill.
GridFn grid_translate(const GridFn &f, int steps0, int steps1);

// Binary format: "MPGF", version u8, d u8, n u32, h f64 (little endian),
// then interleaved float64 (re, im) samples.
void write_grid_binary(std::ostream &os, const GridFn &f);
GridFn read_grid_binary(std::istream &is);
// CSV with header "index,x,re,im" (d = 1) or "index,x0,x1,re,im" (d = 2).
void write_grid_csv(std::ostream &os, const GridFn &f);

}  // namespace mpsemi

#endif  // MPSEMI_GRIDLAB_H_
