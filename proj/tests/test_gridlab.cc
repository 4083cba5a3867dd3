// test_gridlab.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <sstream>

#include "mpsemi/gridlab.h"
#include "mpsemi/sampling.h"
#include "oracles.h"

using namespace mpsemi;

namespace {

const GridSpec kSpec256{1, 256, 1.0 / 16.0};
const GridSpec kSpec4096{1, 4096, 1.0 / 64.0};

CMat c1(cplx v) { return CMat::Constant(1, 1, v); }

GridFn phi1(const GridSpec &s) { return sample(standard_gaussian(s.d), s); }

// Oracle for a word acting on a state: closed form resampled on the grid
// that the word lands on.
double oracle_error(const GeneratorWord &w, const GaussianState &f, const GridSpec &s) {
  const GridFn g = grid_apply_word(w, sample(f, s));
  return relative_error(g, sample(apply_word(w, f), g.spec));
}

}  // namespace

TEST_CASE("sample examples") {
  const GridFn f = phi1(kSpec256);
  CHECK(boundary_ratio(f) < 1e-12);
  CHECK(sample(GaussianSum{}, kSpec256).data.norm() == 0.0);
  Rng rng(1);
  const GaussianState a = random_state(rng, 1), b = random_state(rng, 1);
  const GridFn sum = sample(GaussianSum{a, b}, kSpec256);
  CHECK((sum.data - sample(a, kSpec256).data - sample(b, kSpec256).data).norm() <
        1e-14 * sum.data.norm());
  CHECK_THROWS_AS(sample(standard_gaussian(2), kSpec256), ValidationError);
  CHECK_THROWS_AS(validate(GridSpec{1, 100, 0.1}), ValidationError);
}

TEST_CASE("grid_fourier examples") {
  const GridFn f = phi1(kSpec256);
  const GridFn ff = grid_fourier(f);
  CHECK(projective_error(ff, f) < 1e-10);
  CHECK(std::abs(l2_norm(ff) - l2_norm(f)) < 1e-12);
  GridFn g = f;
  for (int k = 0; k < 4; ++k) g = grid_fourier(g);
  CHECK(projective_error(g, f) < 1e-10);
  // Parseval on a generic state, and F F = parity up to phase.
  Rng rng(3);
  const GridFn r = sample(random_state(rng, 1), kSpec256);
  const GridFn r2 = grid_fourier(grid_fourier(r));
  CHECK(std::abs(l2_norm(grid_fourier(r)) - l2_norm(r)) < 1e-12 * l2_norm(r));
  GridFn parity = r;
  const int n = r.spec.n;
  for (int k = 1; k < n; ++k) parity.data(k) = r.data(n - k);
  parity.data(0) = r.data(0);
  CHECK(projective_error(r2, parity) < 1e-10);
  // Inverse undoes forward.
  CHECK(relative_error(grid_fourier(grid_fourier(r), true), r) < 1e-12);
}

TEST_CASE("centered_dft matches direct sum") {
  Rng rng(5);
  const int n = 16;
  CVec in(n);
  for (int j = 0; j < n; ++j) in(j) = cplx(uniform(rng, -1, 1), uniform(rng, -1, 1));
  for (int sign : {-1, 1}) {
    const CVec out = centered_dft(in, sign);
    for (int k = 0; k < n; ++k) {
      cplx s = 0.0;
      for (int j = 0; j < n; ++j)
        s += in(j) * std::exp(sign * 2.0 * kPi * kI * double((j - n / 2) * (k - n / 2)) / double(n));
      CHECK(std::abs(out(k) - s) < 1e-12);
    }
  }
}

TEST_CASE("grid_apply_token examples") {
  const GridFn f = phi1(kSpec256);
  // Chirp(i a) on phi_1 has norm (2 + 2a)^{-1/4}.
  const double alpha = 1.0;
  const GeneratorWord chirp(1, {Chirp{c1(kI * alpha)}});
  const GridFn g = grid_apply_word(chirp, f);
  CHECK(relative_error(g, sample(apply_word(chirp, standard_gaussian(1)), kSpec256)) < 1e-8);
  CHECK(std::abs(l2_norm(g) - std::pow(2.0 + 2.0 * alpha, -0.25)) < 1e-8);

  const GaussianState phia = isotropic_gaussian(1, 2.0);
  CHECK(oracle_error(GeneratorWord(1, {AtomR{RVec::Constant(1, 1.0)}}), phia, kSpec4096) < 1e-6);
  const GridFn r0 = grid_apply_token(AtomR{RVec::Constant(1, 0.0)}, f);
  CHECK(relative_error(r0, f) < 1e-12);
}

TEST_CASE("rescale by band-limited interpolation") {
  for (double e : {0.7, 1.0, 1.3, -1.1, 2.0}) {
    RMat m = RMat::Constant(1, 1, e);
    CHECK(oracle_error(GeneratorWord(1, {Rescale{m, 1}}), standard_gaussian(1), kSpec256) <
          1e-10);
  }
}

TEST_CASE("d = 2 transforms") {
  const GridSpec s2{2, 256, 1.0 / 16.0};
  Rng rng(11);
  const GaussianState f = random_state(rng, 2);
  CHECK(oracle_error(GeneratorWord(2, {Fourier{false}}), f, s2) < 1e-8);
  CHECK(oracle_error(GeneratorWord(2, {Multiplier{random_symmetric(rng, 2, 1.0).cast<cplx>()}}), f,
                     s2) < 1e-8);
  RMat swap(2, 2);
  swap << 0, 1.2, -0.8, 0;
  CHECK(oracle_error(GeneratorWord(2, {Rescale{swap, 0}}), f, s2) < 1e-8);
  RMat diag = RMat::Identity(2, 2);
  diag(1, 1) = 0.9;
  CHECK(oracle_error(GeneratorWord(2, {Rescale{diag, 2}}), f, s2) < 1e-8);
  RMat full(2, 2);
  full << 1, 0.5, 0, 1;
  CHECK_THROWS_AS(grid_apply_token(Rescale{full, 0}, sample(f, s2)), UnsupportedError);
  try {
    grid_apply_token(Rescale{full, 0}, sample(f, s2));
  } catch (const Error &e) {
    CHECK(e.code() == "UnsupportedRescale");
  }
}

TEST_CASE("grid_wigner examples") {
  const GridFn f = phi1(kSpec256);
  const GridFn w = grid_wigner(f, f);
  const GaussianState ref = wigner_gaussian(standard_gaussian(1), standard_gaussian(1));
  CHECK(relative_error(w, sample(ref, w.spec)) < 1e-6);
  // Pointwise closed form sqrt(2) e^{-2 pi (x^2 + xi^2)} at the origin.
  const int n = w.spec.n;
  CHECK(std::abs(w.data(static_cast<long>(n / 2) * n + n / 2) - std::sqrt(2.0)) < 1e-10);

  Rng rng(21);
  const GaussianState a = random_state(rng, 1), b = random_state(rng, 1);
  const GridFn fa = sample(a, kSpec256), fb = sample(b, kSpec256);
  const GridFn wab = grid_wigner(fa, fb), wba = grid_wigner(fb, fa);
  CHECK(relative_error(wab, sample(wigner_gaussian(a, b), wab.spec)) < 1e-6);
  GridFn wbac = wba;
  wbac.data = wba.data.conjugate();
  CHECK(relative_error(wbac, wab) < 1e-12);

  // Covariance: W(pi(z) f, pi(z) g) = W(f, g)(. - z) for on-grid z.
  const int sx = 5, sxi = -3;
  const double xi = sxi * kSpec256.h;
  const GridFn ws = grid_wigner(grid_shift(fa, sx, xi), grid_shift(fb, sx, xi));
  CHECK(relative_error(ws, grid_translate(wab, sx, sxi)) < 1e-6);
}

TEST_CASE("grid_stft examples") {
  const GridFn f = phi1(kSpec256);
  const GridFn v = grid_stft(f, f);
  const int n = v.spec.n;
  CHECK(std::abs(v.data(static_cast<long>(n / 2) * n + n / 2) - std::pow(2.0, -0.5)) < 1e-12);
  Rng rng(31);
  const GridFn a = sample(random_state(rng, 1), kSpec256);
  const GridFn g = sample(random_state(rng, 1), kSpec256);
  GridFn ap = a;
  ap.data *= std::polar(1.0, 0.7);
  CHECK((grid_stft(ap, g).data.cwiseAbs() - grid_stft(a, g).data.cwiseAbs()).norm() < 1e-12);
  const GridFn vag = grid_stft(a, g);
  CHECK(std::abs(l2_norm(vag) - l2_norm(a) * l2_norm(g)) < 1e-8 * l2_norm(a) * l2_norm(g));
  const GridFn sp = grid_spectrogram(a, g);
  CHECK((sp.data - vag.data.cwiseAbs2().cast<cplx>()).norm() < 1e-14 * sp.data.norm());
  // Analytic STFT of the standard Gaussian against itself.
  double err = 0.0;
  for (int k = 0; k < n; k += 7)
    for (int j = 0; j < n; j += 5) {
      const double x = v.spec.point(k), w = v.spec.point(j);
      const cplx ref = std::pow(2.0, -0.5) * std::exp(-kPi * (x * x + w * w) / 2.0 - kPi * kI * x * w);
      err = std::max(err, std::abs(v.data(static_cast<long>(k) * n + j) - ref));
    }
  CHECK(err < 1e-12);
}

TEST_CASE("discrete_modnorm examples") {
  Rng rng(41);
  const GridFn a = sample(random_state(rng, 1), kSpec256);
  const GridFn g = phi1(kSpec256);
  const double m2 = discrete_modnorm(a, g, 2, 2, 0);
  CHECK(std::abs(m2 - l2_norm(a) * l2_norm(g)) < 1e-6 * m2);
  double prev = 0.0;
  for (double s : {0.0, 0.5, 1.0, 2.0}) {
    const double m = discrete_modnorm(a, g, 1, 2, s);
    CHECK(m >= prev);
    prev = m;
  }
  // M^1 norm of phi_1 with window phi_1 and weight s = 1 against a 2-d
  // quadrature of the analytic |V| = 2^{-1/2} e^{-pi |z|^2 / 2}.
  const double s = 1.0;
  const double ref =
      oracle::trapezoid2(
          [&](double x, double w) {
            return cplx(std::pow(1 + x * x + w * w, s / 2) * std::pow(2.0, -0.5) *
                        std::exp(-kPi * (x * x + w * w) / 2.0));
          },
          -8, 8, 800)
          .real();
  CHECK(std::abs(discrete_modnorm(g, g, 1, 1, s) - ref) < 1e-4 * ref);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(std::abs(discrete_modnorm(g, g, inf, inf, 0) - std::pow(2.0, -0.5)) < 1e-12);
  CHECK_THROWS_AS(discrete_modnorm(g, g, 0.5, 2, 0), ValidationError);
}

TEST_CASE("contraction_check examples") {
  Rng rng(51);
  const GridFn f = sample(random_state(rng, 1), kSpec256);
  const auto real = contraction_check(random_real_word(rng, 1, 4), f);
  CHECK(std::abs(real.ratio - 1.0) < 1e-10);
  CHECK(!real.strict);
  const GridFn p = phi1(kSpec256);
  const auto chirp = contraction_check(GeneratorWord(1, {Chirp{c1(kI)}}), p);
  // ||p_i phi_1|| / ||phi_1|| = 2^{-1/4} from the Gaussian overlap formula.
  CHECK(std::abs(chirp.ratio - std::pow(2.0, -0.25)) < 1e-8);
  CHECK(chirp.strict);
  CHECK(contraction_check(GeneratorWord(1, {AtomR{RVec::Constant(1, 1.0)}}), p).strict);
}

TEST_CASE("oracle equivalence on random words") {
  Rng rng(61);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int len = 1 + static_cast<int>(uniform(rng, 0, 5));
    const GeneratorWord w = random_positive_word(rng, 1, std::min(len, 5));
    const GaussianState f = random_state(rng, 1);
    worst = std::max(worst, oracle_error(w, f, kSpec4096));
  }
  MESSAGE("worst oracle error " << worst);
  CHECK(worst < 1e-6);
}

TEST_CASE("discrete Moyal for real and contraction words") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const GridFn f = sample(random_state(rng, 1), kSpec256);
    const GridFn g = sample(random_state(rng, 1), kSpec256);
    const GeneratorWord w = random_real_word(rng, 1, 3);
    const GridFn wf = grid_apply_word(w, f), wg = grid_apply_word(w, g);
    const double lhs = l2_norm(grid_stft(wf, wg));
    CHECK(std::abs(lhs - l2_norm(f) * l2_norm(g)) < 1e-8 * lhs);
  }
  const GridFn f = phi1(kSpec256);
  const GeneratorWord c(1, {AtomR{RVec::Constant(1, 0.5)}});
  const GridFn cf = grid_apply_word(c, f);
  const double deficit = 1.0 - l2_norm(grid_stft(cf, cf)) / std::pow(l2_norm(f), 2);
  CHECK(deficit > 1e-3);
}

TEST_CASE("resolution convergence") {
  // Fixed box of length 16, halving h each step.
  const GaussianState f = isotropic_gaussian(1, 0.8);
  const GeneratorWord w(1, {Multiplier{c1(0.4 - 0.3 * kI)}, Fourier{false}});
  double prev = std::numeric_limits<double>::infinity();
  for (int n = 16; n <= 256; n *= 2) {
    const GridSpec s{1, n, 16.0 / n};
    const double err = oracle_error(w, f, s);
    MESSAGE("n = " << n << " error " << err);
    if (prev > 1e-10) CHECK((err <= prev / 4.0 || err < 1e-10));
    prev = err;
  }
}

TEST_CASE("binary and csv io") {
  Rng rng(81);
  const GridFn f = sample(random_state(rng, 1), GridSpec{1, 32, 0.25});
  std::stringstream ss;
  write_grid_binary(ss, f);
  CHECK(ss.str().size() == 18 + 32 * 16);
  const GridFn g = read_grid_binary(ss);
  CHECK(g.spec.n == 32);
  CHECK(g.spec.h == 0.25);
  CHECK((g.data - f.data).norm() == 0.0);
  std::stringstream bad("XXXX");
  CHECK_THROWS_AS(read_grid_binary(bad), IoError);
  std::stringstream csv;
  write_grid_csv(csv, f);
  std::string header;
  std::getline(csv, header);
  CHECK(header == "index,x,re,im");
}
