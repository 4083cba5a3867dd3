// serialize.cc

// Copyright 2026 The mpsemi Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "mpsemi/serialize.h"

#include <fstream>
#include <iostream>
#include <sstream>

namespace mpsemi {

namespace {

[[noreturn]] void format_error(const std::string &what) {
  throw IoError("FormatError", what);
}

const Json &field(const Json &j, const char *key) {
  if (!j.is_object() || !j.contains(key))
    format_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json &j) {
  if (!j.is_number()) format_error("expected a number");
  return j.get<double>();
}

int integer(const Json &j) {
  if (!j.is_number_integer()) format_error("expected an integer");
  return j.get<int>();
}

Json strings(const std::vector<std::string> &v) { return Json(v); }

template <typename T>
Json optional_json(const std::optional<T> &v) {
  return v ? to_json(*v) : Json(nullptr);
}

RMat real_rows(const Json &rows) {
  if (!rows.is_array()) format_error("expected an array of rows");
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  RMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) format_error("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = number(rows[i][k]);
  }
  return m;
}

Json real_rows_json(const RMat &m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json to_json(cplx z) { return Json::array({z.real(), z.imag()}); }

cplx complex_from_json(const Json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {number(j[0]), number(j[1])};
  format_error("expected a number or a [re, im] pair");
}

Json to_json(const CMat &m) {
  return Json{{"re", real_rows_json(m.real())}, {"im", real_rows_json(m.imag())}};
}

Json to_json(const RMat &m) { return real_rows_json(m); }

CMat cmat_from_json(const Json &j) {
  if (j.is_object()) {
    const RMat re = real_rows(field(j, "re"));
    if (!j.contains("im")) return re.cast<cplx>();
    const RMat im = real_rows(j.at("im"));
    if (re.rows() != im.rows() || re.cols() != im.cols())
      format_error("re and im shapes differ");
    CMat m(re.rows(), re.cols());
    m.real() = re;
    m.imag() = im;
    return m;
  }
  if (!j.is_array()) format_error("expected a matrix");
  const std::size_t r = j.size();
  const std::size_t c = r ? j[0].size() : 0;
  CMat m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) format_error("ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = complex_from_json(j[i][k]);
  }
  return m;
}

RMat rmat_from_json(const Json &j) {
  const CMat m = cmat_from_json(j);
  if (m.imag().norm() != 0.0) format_error("expected a real matrix");
  return m.real();
}

Json to_json(const CVec &v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(to_json(v(k)));
  return out;
}

Json to_json(const RVec &v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

CVec cvec_from_json(const Json &j) {
  if (!j.is_array()) format_error("expected a vector");
  CVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v(k) = complex_from_json(j[k]);
  return v;
}

RVec rvec_from_json(const Json &j) {
  if (!j.is_array()) format_error("expected a vector");
  RVec v(j.size());
  for (std::size_t k = 0; k < j.size(); ++k) v(k) = number(j[k]);
  return v;
}

Json to_json(const GaussianState &f) {
  return Json{{"d", f.d}, {"c", to_json(f.c)}, {"Q", to_json(f.q)}, {"b", to_json(f.b)}};
}

GaussianState state_from_json(const Json &j) {
  const int d = integer(field(j, "d"));
  const cplx c = j.contains("c") ? complex_from_json(j.at("c")) : cplx(1.0);
  const CMat q = cmat_from_json(field(j, "Q"));
  const CVec b = j.contains("b") ? cvec_from_json(j.at("b")) : CVec::Zero(d);
  if (q.rows() != d || b.size() != d) format_error("state dimensions disagree with d");
  return make_state(c, q, b);
}

Json to_json(const GeneratorToken &t) {
  return std::visit(
      [](const auto &tok) -> Json {
        using T = std::decay_t<decltype(tok)>;
        if constexpr (std::is_same_v<T, Fourier>) {
          return Json{{"type", "Fourier"}, {"inverse", tok.inverse}};
        } else if constexpr (std::is_same_v<T, Rescale>) {
          return Json{{"type", "Rescale"}, {"E", to_json(tok.e)}, {"maslov", tok.maslov}};
        } else if constexpr (std::is_same_v<T, Chirp>) {
          return Json{{"type", "Chirp"}, {"Q", to_json(tok.q)}};
        } else if constexpr (std::is_same_v<T, Multiplier>) {
          return Json{{"type", "Multiplier"}, {"P", to_json(tok.p)}};
        } else if constexpr (std::is_same_v<T, AtomR>) {
          return Json{{"type", "AtomR"}, {"theta", to_json(tok.theta)}};
        } else {
          return Json{{"type", "AtomP"}, {"delta", to_json(tok.delta)}};
        }
      },
      t);
}

Json to_json(const GeneratorWord &w) {
  Json tokens = Json::array();
  for (const auto &t : w.tokens()) tokens.push_back(to_json(t));
  return Json{{"d", w.d()}, {"tokens", tokens}};
}

GeneratorWord word_from_json(const Json &j) {
  const int d = integer(field(j, "d"));
  const Json &tokens = field(j, "tokens");
  if (!tokens.is_array()) format_error("tokens must be an array");
  std::vector<GeneratorToken> out;
  for (const Json &t : tokens) {
    const Json &type = field(t, "type");
    if (!type.is_string()) format_error("token type must be a string");
    const std::string name = type.get<std::string>();
    if (name == "Fourier") {
      out.push_back(Fourier{t.value("inverse", false)});
    } else if (name == "Rescale") {
      out.push_back(Rescale{rmat_from_json(field(t, "E")),
                            t.contains("maslov") ? integer(t.at("maslov")) : 0});
    } else if (name == "Chirp") {
      out.push_back(Chirp{cmat_from_json(field(t, "Q"))});
    } else if (name == "Multiplier") {
      out.push_back(Multiplier{cmat_from_json(field(t, "P"))});
    } else if (name == "AtomR") {
      out.push_back(AtomR{rvec_from_json(field(t, "theta"))});
    } else if (name == "AtomP") {
      out.push_back(AtomP{rvec_from_json(field(t, "delta"))});
    } else {
      format_error("unknown token type \"" + name + "\"");
    }
  }
  for (const auto &t : out) validate_token(t, d);
  return GeneratorWord(d, std::move(out));
}

Json to_json(const QuadraticHamiltonian &h) {
  return Json{{"d", h.d}, {"Q", to_json(h.qmat)}};
}

QuadraticHamiltonian hamiltonian_from_json(const Json &j) {
  const CMat q = cmat_from_json(field(j, "Q"));
  if (j.contains("d") && q.rows() != 2 * integer(j.at("d")))
    format_error("Q must be 2d x 2d");
  return make_hamiltonian(q);
}

TfrSpec tfr_spec_from_json(const Json &j, double tol) {
  if (j.is_object() && j.contains("A")) return TfrSpec(cmat_from_json(j.at("A")), tol);
  return build_covariant(cmat_from_json(field(j, "A11")), cmat_from_json(field(j, "A13")),
                         cmat_from_json(field(j, "A21")), tol);
}

Json to_json(const PositivityReport &r) {
  return Json{{"class", to_string(r.cls)},
              {"min_eigenvalue", r.min_eigenvalue},
              {"margin", r.margin}};
}

Json to_json(const TriangularReport &r) {
  return Json{{"shape", r.shape == TriangularShape::kLower ? "Lower" : "Upper"},
              {"a_real_invertible", r.a_real_invertible},
              {"imag_condition", r.imag_condition},
              {"positive", r.positive},
              {"eigen_class", to_string(r.eigen_class)},
              {"agrees", r.agrees}};
}

Json to_json(const ConjugationReport &r) {
  Json out{{"re_c_zero", r.re_c_zero},
           {"re_b_zero", r.re_b_zero},
           {"a_real_invertible", r.a_real_invertible},
           {"atc_condition", r.atc_condition},
           {"abt_condition", r.abt_condition},
           {"positive", r.positive},
           {"eigen_class", to_string(r.eigen_class)},
           {"agrees", r.agrees},
           {"kernel", nullptr}};
  if (r.kernel) {
    out["kernel"] = Json{{"rescale", to_json(r.kernel->rescale)},
                         {"chirp", to_json(r.kernel->chirp)},
                         {"word_chirp", to_json(r.kernel->word_chirp)},
                         {"multiplier", to_json(r.kernel->multiplier)},
                         {"amplitude", r.kernel->amplitude},
                         {"factorization_residual", r.kernel->factorization_residual}};
  }
  return out;
}

Json to_json(const PolarPair &p) {
  return Json{{"U", to_json(p.u.matrix())},
              {"Z", to_json(p.z.matrix())},
              {"residual", p.residual},
              {"imag_u", p.imag_u}};
}

Json to_json(const AtomicDecomposition &a) {
  return Json{{"V", to_json(a.v)},
              {"theta", to_json(a.theta)},
              {"delta", to_json(a.delta)},
              {"residual", a.residual}};
}

Json to_json(const SymplecticSvd &s) {
  return Json{{"W", to_json(s.w)},
              {"sigma", to_json(s.sigma)},
              {"V", to_json(s.v)},
              {"residual", s.residual}};
}

Json to_json(const CovarianceReport &r) {
  Json out{{"covariant", r.covariant}, {"failed", strings(r.failed)}, {"form", nullptr}};
  if (r.form) {
    out["form"] = Json{{"A11", to_json(r.form->a11)},
                       {"A13", to_json(r.form->a13)},
                       {"A21", to_json(r.form->a21)},
                       {"B_A", to_json(r.form->b_a)}};
  }
  return out;
}

Json to_json(const CohenKernel &k) {
  return Json{{"kind", to_string(k.kind)},
              {"B_A", to_json(k.b_a)},
              {"gaussian", optional_json(k.gaussian)}};
}

Json to_json(const SpectrogramReport &r) {
  return Json{{"ok", r.ok},
              {"failed", strings(r.failed)},
              {"phi", optional_json(r.phi)},
              {"psi", optional_json(r.psi)},
              {"constant", to_json(r.constant)}};
}

Json to_json(const PureSpectrogramReport &r) {
  return Json{{"ok", r.ok}, {"failed", strings(r.failed)}, {"phi", optional_json(r.phi)}};
}

Json to_json(const ConjugationSymmetryReport &r) {
  return Json{{"symmetric", r.symmetric},
              {"pattern", r.pattern},
              {"positive", r.positive},
              {"failed", strings(r.failed)},
              {"structure", optional_json(r.structure)}};
}

Json to_json(const ClassificationReport &r) {
  return Json{{"covariant", r.covariant},
              {"cohen_kernel", optional_json(r.cohen_kernel)},
              {"spectrogram", optional_json(r.spectrogram)},
              {"pure_spectrogram", optional_json(r.pure_spectrogram)},
              {"conjugation_symmetric", r.conjugation_symmetric},
              {"failure_clauses", strings(r.failure_clauses)}};
}

Json to_json(const HormanderSplit &h) {
  return Json{{"U1", to_json(h.u1)},
              {"theta", to_json(h.theta)},
              {"delta", to_json(h.delta)},
              {"U2", to_json(h.u2)}};
}

Json to_json(const WeylSymbol &w) {
  return Json{{"symbol", to_json(w.a)},
              {"degenerate", w.degenerate},
              {"Sigma", to_json(w.sigma)},
              {"V", to_json(w.v)},
              {"theta", to_json(w.theta)},
              {"delta", to_json(w.delta)},
              {"amplitude", w.amplitude}};
}

Json to_json(const CombinedBound &b) {
  return Json{{"u_bound", b.u_bound},
              {"z_bound", b.z_bound},
              {"total", b.total},
              {"sigma_max_u", b.sigma_max_u}};
}

Json read_json_file(const std::string &path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw IoError("IoError", "cannot open " + path);
    buf << in.rdbuf();
  }
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception &e) {
    throw IoError("FormatError", "malformed JSON in " + path + ": " + e.what());
  }
}

void write_text(const std::string &path, const std::string &text) {
  if (path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("IoError", "cannot write " + path);
  out << text;
  if (!out) throw IoError("IoError", "write failed for " + path);
}

}  // namespace mpsemi
