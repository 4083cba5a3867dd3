// words.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/words.h"

#include <cmath>

namespace mpsemi {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_square(const auto &m, int d, const char *what) {
  if (m.rows() != d || m.cols() != d)
    throw ValidationError("DimensionError",
                          std::string(what) + " has wrong dimension");
}

void check_symmetric(const CMat &m, double tol, const char *what) {
  if ((m - m.transpose()).norm() > tol * std::max(1.0, m.norm()))
    throw ValidationError("ValidationError", std::string(what) + " is not symmetric");
}

void check_nonnegative(const RVec &v, int d, const char *what) {
  if (v.size() != d)
    throw ValidationError("DimensionError", std::string(what) + " has wrong size");
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!(v(j) >= 0.0) || !std::isfinite(v(j)))
      throw ValidationError("ValidationError",
                            std::string(what) + " must be nonnegative");
}

CMat diag_c(const RVec &v) { return v.cast<cplx>().asDiagonal(); }

}  // namespace

std::string token_name(const GeneratorToken &t) {
  return std::visit(
      overloaded{[](const Fourier &f) -> std::string {
                   return f.inverse ? "FourierInverse" : "Fourier";
                 },
                 [](const Rescale &) -> std::string { return "Rescale"; },
                 [](const Chirp &) -> std::string { return "Chirp"; },
                 [](const Multiplier &) -> std::string { return "Multiplier"; },
                 [](const AtomR &) -> std::string { return "AtomR"; },
                 [](const AtomP &) -> std::string { return "AtomP"; }},
      t);
}

void validate_token(const GeneratorToken &t, int d, double tol) {
  std::visit(
      overloaded{
          [](const Fourier &) {},
          [&](const Rescale &r) {
            check_square(r.e, d, "Rescale E");
            Eigen::JacobiSVD<RMat> svd(r.e);
            const RVec &sv = svd.singularValues();
            if (!(sv(d - 1) > 1e-12 * sv(0)))
              throw ValidationError("ValidationError", "Rescale E is singular");
          },
          [&](const Chirp &c) {
            check_square(c.q, d, "Chirp Q");
            check_symmetric(c.q, tol, "Chirp Q");
            const RMat im = c.q.imag();
            if (min_sym_eigenvalue(im) < -kPositivityMargin * std::max(1.0, im.norm()))
              throw ValidationError("ValidationError", "Chirp needs Im Q >= 0");
          },
          [&](const Multiplier &m) {
            check_square(m.p, d, "Multiplier P");
            check_symmetric(m.p, tol, "Multiplier P");
            const RMat im = m.p.imag();
            if (min_sym_eigenvalue(-im) < -kPositivityMargin * std::max(1.0, im.norm()))
              throw ValidationError("ValidationError", "Multiplier needs Im P <= 0");
          },
          [&](const AtomR &a) { check_nonnegative(a.theta, d, "AtomR theta"); },
          [&](const AtomP &a) { check_nonnegative(a.delta, d, "AtomP delta"); }},
      t);
}

CMat token_matrix(const GeneratorToken &t, int d) {
  return std::visit(
      overloaded{
          [&](const Fourier &f) -> CMat {
            return f.inverse ? CMat(-standard_j(d)) : standard_j(d);
          },
          [&](const Rescale &r) -> CMat { return make_d(r.e); },
          [&](const Chirp &c) -> CMat { return make_v(c.q); },
          [&](const Multiplier &m) -> CMat { return make_v_upper(m.p); },
          [&](const AtomR &a) -> CMat { return make_r(a.theta); },
          [&](const AtomP &a) -> CMat { return make_v(kI * diag_c(a.delta)); }},
      t);
}

GeneratorWord::GeneratorWord(int d, std::vector<GeneratorToken> tokens)
    : d_(d), tokens_(std::move(tokens)) {
  if (d < 1) throw ValidationError("DimensionError", "word dimension must be >= 1");
  for (const auto &t : tokens_) validate_token(t, d_);
}

GeneratorWord GeneratorWord::then_after(const GeneratorWord &other) const {
  return concat(*this, other);
}

GeneratorWord GeneratorWord::with_left(const GeneratorToken &t) const {
  std::vector<GeneratorToken> v{t};
  v.insert(v.end(), tokens_.begin(), tokens_.end());
  return GeneratorWord(d_, std::move(v));
}

GeneratorWord concat(const GeneratorWord &left, const GeneratorWord &right) {
  if (left.d() != right.d())
    throw ValidationError("DimensionError", "word dimension mismatch");
  std::vector<GeneratorToken> v = left.tokens();
  v.insert(v.end(), right.tokens().begin(), right.tokens().end());
  return GeneratorWord(left.d(), std::move(v));
}

CMat word_matrix(const GeneratorWord &w) {
  CMat s = CMat::Identity(2 * w.d(), 2 * w.d());
  for (const auto &t : w.tokens()) s = s * token_matrix(t, w.d());
  return s;
}

BlockSymplectic word_to_matrix(const GeneratorWord &w) {
  return BlockSymplectic(word_matrix(w), 1e-8);
}

GeneratorWord factor_R_theta(const RVec &theta) {
  const int d = static_cast<int>(theta.size());
  check_nonnegative(theta, d, "theta");
  RVec th(d), sech(d);
  for (int j = 0; j < d; ++j) {
    th(j) = std::tanh(theta(j));
    sech(j) = 1.0 / std::cosh(theta(j));
  }
  const CMat q = kI * diag_c(th);
  return GeneratorWord(d, {Chirp{q}, Rescale{sech.asDiagonal(), 0},
                           Fourier{true}, Chirp{q}, Fourier{false}});
}

GeneratorWord factor_R_theta(double theta) {
  if (!(theta >= 0.0))
    throw ValidationError("ValidationError", "theta must be nonnegative");
  return factor_R_theta(RVec::Constant(1, theta));
}

GeneratorWord tilde_word(const GeneratorWord &w) {
  std::vector<GeneratorToken> out;
  out.reserve(w.size());
  for (const auto &t : w.tokens()) {
    out.push_back(std::visit(
        overloaded{
            [](const Fourier &f) -> GeneratorToken { return Fourier{!f.inverse}; },
            [](const Rescale &r) -> GeneratorToken { return Rescale{r.e, -r.maslov}; },
            [](const Chirp &c) -> GeneratorToken { return Chirp{-c.q.conjugate()}; },
            [](const Multiplier &m) -> GeneratorToken {
              return Multiplier{-m.p.conjugate()};
            },
            [](const AtomR &a) -> GeneratorToken { return a; },
            [](const AtomP &a) -> GeneratorToken { return a; }},
        t));
  }
  return GeneratorWord(w.d(), std::move(out));
}

bool is_real_word(const GeneratorWord &w, double tol) {
  for (const auto &t : w.tokens()) {
    const bool ok = std::visit(
        overloaded{[](const Fourier &) { return true; },
                   [](const Rescale &) { return true; },
                   [&](const Chirp &c) { return is_real_matrix(c.q, tol); },
                   [&](const Multiplier &m) { return is_real_matrix(m.p, tol); },
                   [](const AtomR &a) { return a.theta.isZero(0.0); },
                   [](const AtomP &a) { return a.delta.isZero(0.0); }},
        t);
    if (!ok) return false;
  }
  return true;
}

GeneratorWord inverse_word(const GeneratorWord &w) {
  if (!is_real_word(w))
    throw ValidationError("ValidationError", "only real words can be inverted");
  std::vector<GeneratorToken> out;
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it) {
    out.push_back(std::visit(
        overloaded{
            [](const Fourier &f) -> GeneratorToken { return Fourier{!f.inverse}; },
            [](const Rescale &r) -> GeneratorToken {
              return Rescale{r.e.inverse(), -r.maslov};
            },
            [](const Chirp &c) -> GeneratorToken { return Chirp{-c.q.real().cast<cplx>()}; },
            [](const Multiplier &m) -> GeneratorToken {
              return Multiplier{-m.p.real().cast<cplx>()};
            },
            [](const AtomR &a) -> GeneratorToken { return a; },
            [](const AtomP &a) -> GeneratorToken { return a; }},
        *it));
  }
  return GeneratorWord(w.d(), std::move(out));
}

GeneratorWord partial_fourier_word(const RVec &mask, bool inverse) {
  const int d = static_cast<int>(mask.size());
  const CMat m = diag_c(mask);
  if (inverse) return GeneratorWord(d, {Chirp{m}, Multiplier{-m}, Chirp{m}});
  return GeneratorWord(d, {Chirp{-m}, Multiplier{m}, Chirp{-m}});
}

GeneratorWord lift_word(const GeneratorWord &w, int which) {
  if (which != 0 && which != 1)
    throw ValidationError("ValidationError", "block index must be 0 or 1");
  const int d = w.d(), n = 2 * d;
  const int off = which * d;
  auto embed_c = [&](const CMat &x) {
    CMat out = CMat::Zero(n, n);
    out.block(off, off, d, d) = x;
    return out;
  };
  auto embed_r = [&](const RVec &x) {
    RVec out = RVec::Zero(n);
    out.segment(off, d) = x;
    return out;
  };
  std::vector<GeneratorToken> out;
  for (const auto &t : w.tokens()) {
    std::visit(
        overloaded{
            [&](const Fourier &f) {
              const auto pw = partial_fourier_word(embed_r(RVec::Ones(d)), f.inverse);
              out.insert(out.end(), pw.tokens().begin(), pw.tokens().end());
            },
            [&](const Rescale &r) {
              RMat e = RMat::Identity(n, n);
              e.block(off, off, d, d) = r.e;
              out.push_back(Rescale{e, r.maslov});
            },
            [&](const Chirp &c) { out.push_back(Chirp{embed_c(c.q)}); },
            [&](const Multiplier &m) { out.push_back(Multiplier{embed_c(m.p)}); },
            [&](const AtomR &a) { out.push_back(AtomR{embed_r(a.theta)}); },
            [&](const AtomP &a) { out.push_back(AtomP{embed_r(a.delta)}); }},
        t);
  }
  return GeneratorWord(n, std::move(out));
}

GeneratorWord conjugation_kernel_word(const ConjugationKernel &k) {
  const int d = static_cast<int>(k.rescale.rows());
  return GeneratorWord(d, {Rescale{k.rescale, 0}, Chirp{k.word_chirp},
                           Multiplier{k.multiplier}});
}

}  // namespace mpsemi
