// gridlab.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/gridlab.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <cstring>
#include <istream>
#include <limits>
#include <ostream>

#include <fftw3.h>

namespace mpsemi {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Unnormalized in-place FFT; sign -1 is the forward exponent.
void fft_inplace(CVec *v, int sign) {
  const int n = static_cast<int>(v->size());
  auto *p = reinterpret_cast<fftw_complex *>(v->data());
  fftw_plan plan = fftw_plan_dft_1d(n, p, p, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

void check_same_spec(const GridFn &f, const GridFn &g) {
  if (f.spec.d != g.spec.d || f.spec.n != g.spec.n ||
      std::abs(f.spec.h - g.spec.h) > 1e-15 * f.spec.h)
    throw ValidationError("ValidationError", "grid specs differ");
}

// Applies op to every line of a 2-d grid along the given axis.
template <class Op>
void for_each_line(GridFn *f, int axis, Op op) {
  const int n = f->spec.n;
  CVec line(n);
  for (int o = 0; o < n; ++o) {
    for (int k = 0; k < n; ++k)
      line(k) = axis == 0 ? f->data(static_cast<long>(k) * n + o)
                          : f->data(static_cast<long>(o) * n + k);
    const CVec out = op(line);
    for (int k = 0; k < n; ++k) {
      if (axis == 0)
        f->data(static_cast<long>(k) * n + o) = out(k);
      else
        f->data(static_cast<long>(o) * n + k) = out(k);
    }
  }
}

RVec point_vector(const GridSpec &s, long idx) {
  RVec x(s.d);
  if (s.d == 1) {
    x(0) = s.point(static_cast<int>(idx));
  } else {
    x(0) = s.point(static_cast<int>(idx / s.n));
    x(1) = s.point(static_cast<int>(idx % s.n));
  }
  return x;
}

GridFn pointwise_chirp(const GridFn &f, const CMat &q) {
  GridFn g = f;
  for (long i = 0; i < f.spec.size(); ++i) {
    const CVec x = point_vector(f.spec, i).cast<cplx>();
    g.data(i) *= std::exp(kI * kPi * (x.transpose() * q * x)(0, 0));
  }
  return g;
}

GridFn grid_rescale(const GridFn &f, const RMat &e, int maslov) {
  const int d = f.spec.d;
  if (e.rows() != d || e.cols() != d)
    throw ValidationError("DimensionError", "rescale matrix has wrong size");
  const int m = ((maslov % 4) + 4) % 4;
  const cplx amp = std::polar(std::sqrt(std::abs(e.determinant())), kPi * m / 2.0);
  GridFn g = f;
  if (d == 1) {
    g.data = amp * bandlimited_rescale(f.data, e(0, 0));
    return g;
  }
  // Monomial matrices: one nonzero entry per row and per column.
  int sigma[2];
  double scale[2];
  for (int i = 0; i < 2; ++i) {
    int count = 0;
    for (int j = 0; j < 2; ++j) {
      if (e(i, j) != 0.0) {
        sigma[i] = j;
        scale[i] = e(i, j);
        ++count;
      }
    }
    if (count != 1)
      throw UnsupportedError("UnsupportedRescale",
                             "2-d grid rescaling supports monomial matrices only");
  }
  if (sigma[0] == sigma[1])
    throw UnsupportedError("UnsupportedRescale", "singular rescale matrix");
  for (int axis = 0; axis < 2; ++axis) {
    if (scale[axis] != 1.0)
      for_each_line(&g, axis, [&](const CVec &line) {
        return bandlimited_rescale(line, scale[axis]);
      });
  }
  if (sigma[0] == 1) {
    const int n = f.spec.n;
    GridFn t = g;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        t.data(static_cast<long>(i) * n + j) = g.data(static_cast<long>(j) * n + i);
    g = t;
  }
  g.data *= amp;
  return g;
}

GridFn grid_multiplier(const GridFn &f, const CMat &p) {
  GridFn g = grid_fourier(f, false);
  g = pointwise_chirp(g, -p);
  return grid_fourier(g, true);
}

// Spectrum of f padded to 2n and transformed back: samples at spacing h/2 on
// the points (m - n) h / 2, m = 0..2n-1.
CVec oversample2(const CVec &f) {
  const int n = static_cast<int>(f.size());
  const CVec coef = centered_dft(f, -1) / static_cast<double>(n);
  CVec pad = CVec::Zero(2 * n);
  pad.segment(n / 2, n) = coef;
  return centered_dft(pad, +1);
}

void require_phase_space(const GridFn &f, const GridFn &g) {
  check_same_spec(f, g);
  if (f.spec.d != 1)
    throw ValidationError("ValidationError", "phase-space transforms need d = 1");
  if (!f.spec.is_symmetric(1e-9))
    throw ValidationError("ValidationError", "phase-space grids need n h^2 = 1");
}

}  // namespace

void validate(const GridSpec &spec) {
  if (spec.d != 1 && spec.d != 2)
    throw ValidationError("ValidationError", "grid dimension must be 1 or 2");
  if (spec.n < 2 || !std::has_single_bit(static_cast<unsigned>(spec.n)))
    throw ValidationError("ValidationError", "grid size must be a power of two");
  if (!(spec.h > 0.0) || !std::isfinite(spec.h))
    throw ValidationError("ValidationError", "grid spacing must be positive");
}

GridFn zeros(const GridSpec &spec) {
  validate(spec);
  return GridFn{spec, CVec::Zero(spec.size())};
}

GridFn sample(const GaussianState &f, const GridSpec &spec) {
  return sample(GaussianSum{f}, spec);
}

GridFn sample(const GaussianSum &f, const GridSpec &spec) {
  GridFn g = zeros(spec);
  for (const auto &t : f)
    if (t.d != spec.d)
      throw ValidationError("DimensionError", "state and grid dimensions differ");
  for (long i = 0; i < spec.size(); ++i) g.data(i) = eval(f, point_vector(spec, i));
  return g;
}

double boundary_ratio(const GridFn &f) {
  const double mx = f.data.cwiseAbs().maxCoeff();
  if (mx == 0.0) return 0.0;
  const int n = f.spec.n;
  double b = 0.0;
  for (long i = 0; i < f.spec.size(); ++i) {
    bool edge;
    if (f.spec.d == 1) {
      edge = i == 0 || i == n - 1;
    } else {
      const long r = i / n, c = i % n;
      edge = r == 0 || r == n - 1 || c == 0 || c == n - 1;
    }
    if (edge) b = std::max(b, std::abs(f.data(i)));
  }
  return b / mx;
}

double l2_norm(const GridFn &f) {
  return std::pow(f.spec.h, 0.5 * f.spec.d) * f.data.norm();
}

cplx inner_product(const GridFn &f, const GridFn &g) {
  check_same_spec(f, g);
  return std::pow(f.spec.h, f.spec.d) * g.data.dot(f.data);
}

double relative_error(const GridFn &a, const GridFn &b) {
  check_same_spec(a, b);
  const double nb = b.data.norm();
  return nb > 0 ? (a.data - b.data).norm() / nb : (a.data - b.data).norm();
}

double projective_error(const GridFn &a, const GridFn &b) {
  check_same_spec(a, b);
  const cplx overlap = b.data.dot(a.data);
  const cplx phase = std::abs(overlap) > 0 ? overlap / std::abs(overlap) : cplx(1.0);
  const double nb = b.data.norm();
  const double err = (a.data - phase * b.data).norm();
  return nb > 0 ? err / nb : err;
}

CVec centered_dft(const CVec &in, int sign) {
  const long n = in.size();
  if (n % 2 != 0) throw ValidationError("ValidationError", "centered DFT needs even length");
  CVec v(n);
  for (long j = 0; j < n; ++j) v(j) = (j % 2 ? -1.0 : 1.0) * in(j);
  fft_inplace(&v, sign);
  const cplx ph = std::polar(1.0, sign * kPi * static_cast<double>(n % 4) / 2.0);
  for (long k = 0; k < n; ++k) v(k) *= (k % 2 ? -1.0 : 1.0) * ph;
  return v;
}

GridFn grid_fourier(const GridFn &f, bool inverse) {
  validate(f.spec);
  GridFn g = f;
  const int sign = inverse ? +1 : -1;
  const double h = f.spec.h;
  const double hw = f.spec.dual_spacing();
  // Riemann sum per axis with the i^{-1/2} (or i^{1/2}) normalization.
  const cplx fac = std::polar(h, inverse ? kPi / 4 : -kPi / 4);
  if (f.spec.d == 1) {
    g.data = fac * centered_dft(f.data, sign);
  } else {
    for (int axis = 0; axis < 2; ++axis)
      for_each_line(&g, axis, [&](const CVec &line) { return CVec(fac * centered_dft(line, sign)); });
  }
  g.spec.h = hw;
  return g;
}

CVec bandlimited_rescale(const CVec &f, double scale) {
  const int n = static_cast<int>(f.size());
  const int c = n / 2;
  const CVec coef = centered_dft(f, -1) / static_cast<double>(n);
  const double alpha = scale / n;
  const int len = 2 * n;
  CVec a = CVec::Zero(len), b = CVec::Zero(len);
  for (int up = 0; up < n; ++up) {
    const double u = up - c;
    a(up) = coef(up) * std::polar(1.0, kPi * alpha * u * u);
  }
  for (int m = 0; m < n; ++m) {
    const cplx w = std::polar(1.0, -kPi * alpha * static_cast<double>(m) * m);
    b(m) = w;
    if (m > 0) b(len - m) = w;
  }
  fft_inplace(&a, -1);
  fft_inplace(&b, -1);
  CVec conv = a.cwiseProduct(b);
  fft_inplace(&conv, +1);
  conv /= static_cast<double>(len);
  CVec out(n);
  for (int vp = 0; vp < n; ++vp) {
    const double v = vp - c;
    // The interpolant lives on [-n/2, n/2) in grid units.
    const double target = scale * v;
    if (target < -c || target >= c) {
      out(vp) = 0.0;
    } else {
      out(vp) = std::polar(1.0, kPi * alpha * v * v) * conv(vp);
    }
  }
  return out;
}

GridFn grid_apply_token(const GeneratorToken &t, const GridFn &f) {
  validate(f.spec);
  validate_token(t, f.spec.d);
  return std::visit(
      overloaded{
          [&](const Fourier &ft) { return grid_fourier(f, ft.inverse); },
          [&](const Rescale &r) { return grid_rescale(f, r.e, r.maslov); },
          [&](const Chirp &c) { return pointwise_chirp(f, c.q); },
          [&](const Multiplier &m) { return grid_multiplier(f, m.p); },
          [&](const AtomR &a) { return grid_apply_word(factor_R_theta(a.theta), f); },
          [&](const AtomP &a) {
            return pointwise_chirp(f, kI * a.delta.cast<cplx>().asDiagonal().toDenseMatrix());
          }},
      t);
}

GridFn grid_apply_word(const GeneratorWord &w, const GridFn &f) {
  if (w.d() != f.spec.d)
    throw ValidationError("DimensionError", "word and grid dimensions differ");
  GridFn g = f;
  for (auto it = w.tokens().rbegin(); it != w.tokens().rend(); ++it)
    g = grid_apply_token(*it, g);
  return g;
}

GridFn grid_wigner(const GridFn &f, const GridFn &g) {
  require_phase_space(f, g);
  const int n = f.spec.n;
  const double h = f.spec.h;
  const CVec fo = oversample2(f.data), go = oversample2(g.data);
  GridFn out{GridSpec{2, n, h}, CVec::Zero(static_cast<long>(n) * n)};
  CVec acc(n);
  for (int k = 0; k < n; ++k) {
    acc.setZero();
    for (int m = -n; m < n; ++m) {
      const int i1 = 2 * k + m, i2 = 2 * k - m;
      if (i1 < 0 || i1 >= 2 * n || i2 < 0 || i2 >= 2 * n) continue;
      const cplx v = fo(i1) * std::conj(go(i2));
      acc(((m % n) + n) % n) += (m % 2 ? -1.0 : 1.0) * v;
    }
    fft_inplace(&acc, -1);
    out.data.segment(static_cast<long>(k) * n, n) = h * acc;
  }
  return out;
}

GridFn grid_stft(const GridFn &f, const GridFn &g) {
  require_phase_space(f, g);
  const int n = f.spec.n, c = n / 2;
  const double h = f.spec.h;
  GridFn out{GridSpec{2, n, h}, CVec::Zero(static_cast<long>(n) * n)};
  CVec col(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      const int gi = m - k + c;
      col(m) = (gi >= 0 && gi < n) ? f.data(m) * std::conj(g.data(gi)) : cplx(0.0);
    }
    out.data.segment(static_cast<long>(k) * n, n) = h * centered_dft(col, -1);
  }
  return out;
}

GridFn grid_spectrogram(const GridFn &f, const GridFn &g) {
  GridFn v = grid_stft(f, g);
  for (long i = 0; i < v.data.size(); ++i) v.data(i) = std::norm(v.data(i));
  return v;
}

double discrete_modnorm(const GridFn &f, const GridFn &g, double p, double q,
                        double s) {
  if (!(p >= 1.0) || !(q >= 1.0))
    throw ValidationError("ValidationError", "mixed norm exponents must be >= 1");
  const GridFn v = grid_stft(f, g);
  const int n = v.spec.n;
  const double h = v.spec.h;
  const bool pinf = std::isinf(p), qinf = std::isinf(q);
  double outer = 0.0;
  for (int j = 0; j < n; ++j) {
    const double xi = v.spec.point(j);
    double inner = 0.0;
    for (int k = 0; k < n; ++k) {
      const double x = v.spec.point(k);
      const double w = std::pow(1.0 + x * x + xi * xi, 0.5 * s);
      const double a = w * std::abs(v.data(static_cast<long>(k) * n + j));
      inner = pinf ? std::max(inner, a) : inner + std::pow(a, p) * h;
    }
    if (!pinf) inner = std::pow(inner, 1.0 / p);
    outer = qinf ? std::max(outer, inner) : outer + std::pow(inner, q) * h;
  }
  return qinf ? outer : std::pow(outer, 1.0 / q);
}

ContractionResult contraction_check(const GeneratorWord &w, const GridFn &f) {
  ContractionResult r;
  const double n0 = l2_norm(f);
  if (n0 == 0.0) return r;
  r.ratio = l2_norm(grid_apply_word(w, f)) / n0;
  r.strict = r.ratio < 1.0 - 1e-8;
  return r;
}

GridFn grid_shift(const GridFn &f, int x_steps, double xi) {
  if (f.spec.d != 1) throw ValidationError("ValidationError", "grid_shift needs d = 1");
  const int n = f.spec.n;
  const double x = x_steps * f.spec.h;
  GridFn g = zeros(f.spec);
  for (int k = 0; k < n; ++k) {
    const int src = k - x_steps;
    if (src < 0 || src >= n) continue;
    const double y = f.spec.point(k);
    g.data(k) = std::polar(1.0, -kPi * x * xi + 2.0 * kPi * xi * y) * f.data(src);
  }
  return g;
}

GridFn grid_translate(const GridFn &f, int steps0, int steps1) {
  if (f.spec.d != 2) throw ValidationError("ValidationError", "grid_translate needs d = 2");
  const int n = f.spec.n;
  GridFn g = zeros(f.spec);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int si = i - steps0, sj = j - steps1;
      if (si < 0 || si >= n || sj < 0 || sj >= n) continue;
      g.data(static_cast<long>(i) * n + j) = f.data(static_cast<long>(si) * n + sj);
    }
  }
  return g;
}

namespace {

template <class T>
void put_le(std::ostream &os, T v) {
  unsigned char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  os.write(reinterpret_cast<const char *>(buf), sizeof(T));
}

template <class T>
T get_le(std::istream &is) {
  unsigned char buf[sizeof(T)];
  if (!is.read(reinterpret_cast<char *>(buf), sizeof(T)))
    throw IoError("IoError", "truncated grid file");
  if constexpr (std::endian::native == std::endian::big) std::reverse(buf, buf + sizeof(T));
  T v;
  std::memcpy(&v, buf, sizeof(T));
  return v;
}

}  // namespace

void write_grid_binary(std::ostream &os, const GridFn &f) {
  os.write("MPGF", 4);
  put_le<std::uint8_t>(os, 1);
  put_le<std::uint8_t>(os, static_cast<std::uint8_t>(f.spec.d));
  put_le<std::uint32_t>(os, static_cast<std::uint32_t>(f.spec.n));
  put_le<double>(os, f.spec.h);
  for (long i = 0; i < f.data.size(); ++i) {
    put_le<double>(os, f.data(i).real());
    put_le<double>(os, f.data(i).imag());
  }
  if (!os) throw IoError("IoError", "failed to write grid");
}

GridFn read_grid_binary(std::istream &is) {
  char magic[4];
  if (!is.read(magic, 4) || std::memcmp(magic, "MPGF", 4) != 0)
    throw IoError("IoError", "not a grid file");
  const auto version = get_le<std::uint8_t>(is);
  if (version != 1) throw IoError("IoError", "unsupported grid file version");
  GridSpec spec;
  spec.d = get_le<std::uint8_t>(is);
  spec.n = static_cast<int>(get_le<std::uint32_t>(is));
  spec.h = get_le<double>(is);
  try {
    validate(spec);
  } catch (const ValidationError &e) {
    throw IoError("IoError", std::string("bad grid header: ") + e.what());
  }
  GridFn f{spec, CVec(spec.size())};
  for (long i = 0; i < f.data.size(); ++i) {
    const double re = get_le<double>(is);
    const double im = get_le<double>(is);
    f.data(i) = cplx(re, im);
  }
  return f;
}

void write_grid_csv(std::ostream &os, const GridFn &f) {
  const auto prec = os.precision(17);
  if (f.spec.d == 1) {
    os << "index,x,re,im\n";
    for (long i = 0; i < f.data.size(); ++i)
      os << i << ',' << f.spec.point(static_cast<int>(i)) << ',' << f.data(i).real()
         << ',' << f.data(i).imag() << '\n';
  } else {
    os << "index,x0,x1,re,im\n";
    for (long i = 0; i < f.data.size(); ++i) {
      const RVec x = point_vector(f.spec, i);
      os << i << ',' << x(0) << ',' << x(1) << ',' << f.data(i).real() << ','
         << f.data(i).imag() << '\n';
    }
  }
  os.precision(prec);
}

}  // namespace mpsemi
