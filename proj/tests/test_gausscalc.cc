// test_gausscalc.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "mpsemi/gausscalc.h"
#include "mpsemi/sampling.h"
#include "oracles.h"

using namespace mpsemi;

namespace {

CMat c1(cplx v) { return CMat::Constant(1, 1, v); }
RVec rv1(double v) { return RVec::Constant(1, v); }
CVec cv1(cplx v) { return CVec::Constant(1, v); }

GaussianState state1(cplx c, cplx q, cplx b) { return make_state(c, c1(q), cv1(b)); }

// Fourier transform integral f-hat(xi) = int f(y) e^{-2 pi i xi y} dy.
cplx fhat_quad(const GaussianState &f, double xi) {
  return oracle::trapezoid(
      [&](double y) { return eval(f, rv1(y)) * std::exp(-2.0 * kPi * kI * xi * y); },
      -12, 12, 4000);
}

}  // namespace

TEST_CASE("gaussian_integral examples") {
  CHECK(std::abs(gaussian_integral(CMat::Identity(2, 2), CVec::Zero(2)) - 1.0) < 1e-15);
  const double a = 2.5;
  CVec z(2);
  z << 0.3, -0.7;
  const cplx expect = std::pow(a, -1.0) * std::exp(-kPi * z.squaredNorm() / a);
  CHECK(std::abs(gaussian_integral(a * CMat::Identity(2, 2), z) - expect) < 1e-15);
  const cplx v = gaussian_integral(c1(cplx(1, -1)), cv1(0.0));
  CHECK(std::abs(v - std::pow(2.0, -0.25) * std::exp(kI * kPi / 8.0)) < 1e-15);
  CHECK_THROWS_AS(gaussian_integral(c1(cplx(-1, 1)), cv1(0.0)), ValidationError);
}

TEST_CASE("gaussian_integral matches quadrature") {
  Rng rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const cplx m(uniform(rng, 0.4, 2.0), uniform(rng, -2, 2));
    const cplx z(uniform(rng, -1, 1), uniform(rng, -0.3, 0.3));
    const cplx q = oracle::trapezoid(
        [&](double x) { return std::exp(-kPi * m * x * x + 2.0 * kPi * kI * z * x); },
        -15, 15, 6000);
    CHECK(std::abs(gaussian_integral(c1(m), cv1(z)) - q) < 1e-12);
  }
  // d = 2 against an iterated quadrature.
  CMat m(2, 2);
  m << cplx(1.2, 0.4), cplx(0.3, -0.2), cplx(0.3, -0.2), cplx(0.9, -0.7);
  CVec z(2);
  z << cplx(0.2, 0.1), cplx(-0.4, 0.0);
  const cplx q = oracle::trapezoid2(
      [&](double x, double y) {
        CVec v(2);
        v << x, y;
        return std::exp(-kPi * (v.transpose() * m * v)(0, 0) +
                        2.0 * kPi * kI * (z.transpose() * v)(0, 0));
      },
      -8, 8, 600);
  CHECK(std::abs(gaussian_integral(m, z) - q) < 1e-10);
}

TEST_CASE("eval and shift examples") {
  const GaussianState phi = standard_gaussian(1);
  CHECK(std::abs(eval(phi, rv1(0.0)) - 1.0) < 1e-15);
  CHECK(std::abs(eval(phi, rv1(1.0)) - std::exp(-kPi)) < 1e-15);
  CHECK(state_distance(shift(phi, CVec::Zero(2), 0.0), phi) == 0.0);
  CHECK(std::abs(shift(phi, CVec::Zero(2), 0.5).c + 1.0) < 1e-15);
  // Pointwise against the defining formula.
  Rng rng(1);
  const GaussianState f = random_state(rng, 1);
  const double x = 0.4, xi = -0.9, tau = 0.3;
  CVec z(2);
  z << x, xi;
  const GaussianState g = shift(f, z, tau);
  for (double y : {-1.0, 0.2, 0.7}) {
    const cplx direct = std::exp(2.0 * kPi * kI * tau - kI * kPi * x * xi +
                                 2.0 * kPi * kI * xi * y) *
                        eval(f, rv1(y - x));
    CHECK(std::abs(eval(g, rv1(y)) - direct) < 1e-13);
  }
}

TEST_CASE("shift composition law") {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 2;
    const GaussianState f = random_state(rng, d);
    const RVec z1 = random_matrix(rng, 2 * d, 1, -1, 1);
    const RVec z2 = random_matrix(rng, 2 * d, 1, -1, 1);
    const double t1 = uniform(rng, 0, 1), t2 = uniform(rng, 0, 1);
    const GaussianState two = shift(shift(f, z2.cast<cplx>(), t2), z1.cast<cplx>(), t1);
    const double sym = 0.5 * (z2.head(d).dot(z1.tail(d)) - z1.head(d).dot(z2.tail(d)));
    const GaussianState one = shift(f, (z1 + z2).cast<cplx>(), t1 + t2 + sym);
    CHECK(state_distance(two, one) < 1e-12);
  }
}

TEST_CASE("Fourier token against quadrature") {
  const GaussianState phi = standard_gaussian(1);
  const GaussianState fphi = apply_token(Fourier{}, phi);
  CHECK(projective_distance(fphi, phi) < 1e-15);
  CHECK(std::abs(std::abs(fphi.c) - 1.0) < 1e-15);
  const GaussianState f = state1(cplx(0.7, 0.2), cplx(0.4, 1.3), cplx(0.3, 0.1));
  const GaussianState g = apply_token(Fourier{}, f);
  const GaussianState gi = apply_token(Fourier{true}, f);
  for (double xi : {-0.8, 0.0, 0.5}) {
    CHECK(std::abs(eval(g, rv1(xi)) - std::exp(-kI * kPi / 4.0) * fhat_quad(f, xi)) < 1e-12);
    CHECK(std::abs(eval(gi, rv1(xi)) - std::exp(kI * kPi / 4.0) * fhat_quad(f, -xi)) < 1e-12);
  }
  // Four Fourier transforms give the identity in d = 1 up to (-1)^d.
  const GeneratorWord f4(1, {Fourier{}, Fourier{}, Fourier{}, Fourier{}});
  CHECK(state_distance(apply_word(f4, f), scaled(f, -1.0)) < 1e-12);
  CHECK(state_distance(apply_word(GeneratorWord(1, {Fourier{true}, Fourier{}}), f), f) < 1e-12);
}

TEST_CASE("Multiplier token against quadrature") {
  const GaussianState f = state1(1.0, cplx(0.3, 1.1), cplx(0.2, 0.05));
  const cplx p(0.6, -0.4);
  const GaussianState g = apply_token(Multiplier{c1(p)}, f);
  // Inverse transform of e^{-i pi p xi^2} f-hat(xi), both by quadrature.
  const int n = 1600;
  const double lo = -8, hi = 8, h = (hi - lo) / n;
  std::vector<cplx> spec(n + 1);
  for (int k = 0; k <= n; ++k) {
    const double xi = lo + k * h;
    spec[k] = std::exp(-kI * kPi * p * xi * xi) * fhat_quad(f, xi);
  }
  for (double x : {-0.6, 0.1, 0.9}) {
    cplx s = 0.0;
    for (int k = 0; k <= n; ++k) {
      const double w = (k == 0 || k == n) ? 0.5 : 1.0;
      s += w * spec[k] * std::exp(2.0 * kPi * kI * (lo + k * h) * x);
    }
    CHECK(std::abs(eval(g, rv1(x)) - s * h) < 1e-10);
  }
}

TEST_CASE("Rescale and Chirp tokens pointwise") {
  Rng rng(5);
  const GaussianState f = random_state(rng, 2);
  const RMat e = random_invertible(rng, 2);
  const GaussianState g = apply_token(Rescale{e, 1}, f);
  const RVec x = random_matrix(rng, 2, 1, -1, 1);
  CHECK(std::abs(eval(g, x) - kI * std::sqrt(std::abs(e.determinant())) * eval(f, e * x)) < 1e-13);
  const CMat q = random_symmetric(rng, 2, 1.0).cast<cplx>() + kI * random_psd(rng, 2, 1.0).cast<cplx>();
  const GaussianState h = apply_token(Chirp{q}, f);
  const CVec xc = x.cast<cplx>();
  CHECK(std::abs(eval(h, x) - std::exp(kI * kPi * (xc.transpose() * q * xc)(0, 0)) * eval(f, x)) < 1e-13);
}

TEST_CASE("AtomR against the Mehler integral") {
  for (double theta : {0.3, 1.0}) {
    for (double a : {0.5, 1.0, 2.0}) {
      const GaussianState phi_a = isotropic_gaussian(1, a);
      const GaussianState out = apply_token(AtomR{rv1(theta)}, phi_a);
      const double ch = std::cosh(theta), sh = std::sinh(theta), th = std::tanh(theta);
      const double bb = (a + th) / (1.0 + a * th);
      for (double x : {-0.7, 0.0, 0.4, 1.1}) {
        const cplx quad = std::pow(ch, -0.5) * oracle::trapezoid(
            [&](double eta) {
              const cplx ph = kI * kPi * (2 * x * eta + kI * (x * x + eta * eta) * sh) / ch;
              return std::exp(ph) * std::pow(a, -0.5) * std::exp(-kPi * eta * eta / a);
            },
            -12, 12, 4000);
        CHECK(std::abs(eval(out, rv1(x)) - quad) < 1e-12);
        const double closed = std::pow(ch + a * sh, -0.5) * std::exp(-kPi * bb * x * x);
        CHECK(std::abs(eval(out, rv1(x)) - closed) < 1e-12);
      }
    }
  }
}

TEST_CASE("apply_word basics and contraction") {
  Rng rng(7);
  const GaussianState f = random_state(rng, 1);
  CHECK(state_distance(apply_word(GeneratorWord(1), f), f) == 0.0);
  CHECK(state_distance(apply_word(factor_R_theta(0.8), f),
                       apply_token(AtomR{rv1(0.8)}, f)) == 0.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const GaussianState g = random_state(rng, d);
    const GeneratorWord w = random_positive_word(rng, d, 4);
    CHECK(l2_norm(apply_word(w, g)) <= l2_norm(g) * (1 + 1e-12));
    const GeneratorWord r = random_real_word(rng, d, 4);
    CHECK(std::abs(l2_norm(apply_word(r, g)) - l2_norm(g)) <= 1e-12 * l2_norm(g) * 10);
  }
  const GaussianState phi = standard_gaussian(1);
  CHECK(l2_norm(apply_token(Chirp{c1(kI)}, phi)) < l2_norm(phi) * (1 - 1e-3));
  CHECK(l2_norm(apply_token(AtomR{rv1(1.0)}, phi)) < l2_norm(phi) * (1 - 1e-3));
}

TEST_CASE("apply_matrix agrees projectively with apply_word") {
  Rng rng(8);
  const GaussianState f = random_state(rng, 2);
  CHECK(state_distance(apply_matrix(BlockSymplectic::identity(2), f), f) < 1e-14);
  const CMat p = random_symmetric(rng, 2, 1.0).cast<cplx>();
  const GaussianState vp = apply_matrix(BlockSymplectic(make_v(p)), f);
  CHECK((vp.q - (f.q + p)).norm() < 1e-13);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 1 + trial % 2;
    const GeneratorWord w = random_positive_word(rng, d, 5);
    const BlockSymplectic s = word_to_matrix(w);
    cplx ratio0 = 0.0;
    for (int k = 0; k < 20; ++k) {
      const GaussianState g = random_state(rng, d);
      const GaussianState a = apply_word(w, g), b = apply_matrix(s, g);
      CHECK(projective_distance(a, b) < 1e-10);
      const cplx ratio = a.c / b.c;
      if (k == 0) ratio0 = ratio;
      CHECK(std::abs(ratio - ratio0) < 1e-10 * std::abs(ratio0));
      CHECK(std::abs(std::abs(ratio) - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("inner products") {
  const GaussianState phi = standard_gaussian(1);
  CHECK(std::abs(inner_product(phi, phi) - std::sqrt(0.5)) < 1e-15);
  Rng rng(9);
  const GaussianState f = random_state(rng, 1), g = random_state(rng, 1);
  const cplx quad = oracle::trapezoid(
      [&](double x) { return eval(f, rv1(x)) * std::conj(eval(g, rv1(x))); }, -12, 12, 4000);
  CHECK(std::abs(inner_product(f, g) - quad) < 1e-12);
  for (int trial = 0; trial < 5; ++trial) {
    const int d = 1 + trial % 3;
    RVec sigma(d);
    for (int j = 0; j < d; ++j) sigma(j) = uniform(rng, 1.0, 4.0);
    const RMat e = sigma.cwiseInverse().asDiagonal();
    const GaussianState gd = standard_gaussian(d);
    double expect = 1.0;
    for (int j = 0; j < d; ++j) expect *= std::sqrt(sigma(j) / (1 + sigma(j) * sigma(j)));
    CHECK(std::abs(inner_product(apply_token(Rescale{e, 0}, gd), gd) - expect) < 1e-12);
  }
  // Far-shifted overlap decay.
  CVec z(2);
  z << 3.0, 0.0;
  const GaussianState far = shift(phi, z, 0.0);
  CHECK(std::abs(inner_product(phi, far)) <=
        std::exp(-kPi * 9.0 / 2.0) * l2_norm(phi) * l2_norm(far) * (1 + 1e-12));
}

TEST_CASE("Wigner of Gaussians") {
  const GaussianState phi = standard_gaussian(1);
  const GaussianState w = wigner_gaussian(phi, phi);
  CHECK(std::abs(w.c - std::sqrt(2.0)) < 1e-14);
  CHECK((w.q - 2.0 * kI * CMat::Identity(2, 2)).norm() < 1e-14);
  CHECK(w.b.norm() < 1e-14);
  const GaussianState phin = scaled(phi, std::pow(2.0, 0.25));
  CHECK(std::abs(wigner_gaussian(phin, phin).c - 2.0) < 1e-14);
  CHECK(std::abs(wigner_gaussian(standard_gaussian(2), standard_gaussian(2)).c - 2.0) < 1e-14);

  Rng rng(10);
  const GaussianState f = random_state(rng, 1), g = random_state(rng, 1);
  const GaussianState wfg = wigner_gaussian(f, g);
  for (auto [x, xi] : {std::pair{0.2, -0.4}, std::pair{-0.5, 0.3}}) {
    const cplx quad = oracle::trapezoid(
        [&](double y) {
          return eval(f, rv1(x + y / 2)) * std::conj(eval(g, rv1(x - y / 2))) *
                 std::exp(-2.0 * kPi * kI * y * xi);
        },
        -20, 20, 8000);
    RVec z(2);
    z << x, xi;
    CHECK(std::abs(eval(wfg, z) - quad) < 1e-12);
  }
  const GaussianState wgf = wigner_gaussian(g, f);
  RVec z(2);
  z << 0.3, 0.1;
  CHECK(std::abs(eval(wgf, z) - std::conj(eval(wfg, z))) < 1e-13);
  // Translation covariance.
  RVec s(2);
  s << 0.5, -0.25;
  const GaussianState ws = wigner_gaussian(shift(f, s.cast<cplx>(), 0.0), shift(g, s.cast<cplx>(), 0.0));
  CHECK(std::abs(eval(ws, z) - eval(wfg, z - s)) < 1e-12);
}

TEST_CASE("conjugation and tilde words") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = 1 + trial % 2;
    const GaussianState f = random_state(rng, d);
    const GeneratorWord w = random_positive_word(rng, d, 4);
    const GaussianState lhs = conj_state(apply_word(w, conj_state(f)));
    const GaussianState rhs = apply_word(tilde_word(w), f);
    CHECK(state_distance(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("Moyal identity on Gaussians") {
  Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianState f1 = random_state(rng, 1), g1 = random_state(rng, 1);
    const GaussianState f2 = random_state(rng, 1), g2 = random_state(rng, 1);
    const GeneratorWord w = random_real_word(rng, 1, 3);
    const GaussianState a1 = apply_word(w, f1), b1 = apply_word(w, g1);
    const GaussianState a2 = apply_word(w, f2), b2 = apply_word(w, g2);
    const cplx lhs = inner_product(wigner_gaussian(a1, b1), wigner_gaussian(a2, b2));
    const cplx rhs = inner_product(f1, f2) * std::conj(inner_product(g1, g2));
    CHECK(std::abs(lhs - rhs) < 1e-10 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("intertwining") {
  Rng rng(13);
  const GaussianSum f = random_sum(rng, 1, 3);
  RVec z(2);
  z << 1.0, 1.0;
  CHECK(check_intertwining(GeneratorWord(1), z, 0.3, f).residual() < 1e-15);
  const GeneratorWord chirp(1, {Chirp{c1(0.7)}});
  CHECK(check_intertwining(chirp, z, 0.1, f).residual() < 1e-12);
  const GeneratorWord atom(1, {AtomR{rv1(1.0)}});
  for (int trial = 0; trial < 10; ++trial)
    CHECK(check_intertwining(atom, z, 0.0, random_sum(rng, 1, 3)).residual() < 1e-10);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 1 + trial % 2;
    const RVec zz = random_matrix(rng, 2 * d, 1, -1, 1);
    CHECK(check_intertwining(random_positive_word(rng, d, 4), zz, uniform(rng, 0, 1),
                             random_sum(rng, d, 2)).residual() < 1e-10);
  }
}

TEST_CASE("Siegel violations are reported") {
  const GaussianState bad = state1(1.0, cplx(0.5, 0.0), 0.0);
  CHECK_THROWS_AS(apply_token(Fourier{}, bad), NumericalError);
  CHECK_THROWS_AS(make_state(1.0, CMat::Identity(2, 2), CVec::Zero(3)), ValidationError);
}
