#include "p3d/foliation1d.hpp"

#include <sstream>

#include "p3d/errors.hpp"

namespace p3d {

LinearField::LinearField(const Mat4& traceless) : a_(traceless) {
  if (a_.trace() != 0) throw MathError("linear field matrix must be traceless");
  bool zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (a_(i, j) != 0) zero = false;
  if (zero) throw MathError("zero linear field");
}

VectorField LinearField::field() const {
  PolyQuad f;
  for (int i = 0; i < 4; ++i) {
    std::vector<Poly::Term> terms;
    for (int j = 0; j < 4; ++j)
      if (a_(i, j) != 0) terms.emplace_back(Monomial::variable(j), a_(i, j));
    f[i] = Poly::from_terms(std::move(terms));
  }
  return VectorField(f);
}

LinearField traceless_normalize(const Mat4& a) {
  Rational t = a.trace() / 4;
  Mat4 b = a;
  for (int i = 0; i < 4; ++i) b(i, i) -= t;
  bool zero = true;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (b(i, j) != 0) zero = false;
  if (zero) throw MathError("scalar matrix gives the zero field on P^3");
  return LinearField(b);
}

ProjScheme vf_singular_scheme(const VectorField& v) {
  if (v.is_radial()) throw MathError("field is a multiple of the radial field and vanishes everywhere");
  std::vector<Poly> minors;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = i + 1; j < kNumVars; ++j) {
      Poly m = Poly::variable(i) * v[j] - Poly::variable(j) * v[i];
      if (!m.is_zero()) minors.push_back(std::move(m));
    }
  return saturate_irrelevant(Ideal(minors));
}

ChernTriple conormal_chern(int k, const ProjScheme& W) {
  if (W.dimension() >= 2) throw MathError("singular scheme of the field has a surface component");
  // HP_W(t) = delta t + chi
  long delta = 0, chi = 0;
  const auto& hp = W.hilbert().hilbert_polynomial;
  if (!hp.empty()) chi = Rational(hp[0]).get_num().get_si();
  if (hp.size() > 1) delta = Rational(hp[1]).get_num().get_si();
  const long t = k - 1;
  const long c3IW = -delta * t - 2 * chi + 4 * delta;
  ChernTriple n;
  n.c1 = -4;
  n.c2 = 6 - delta + (k + 3) * (k - 1);
  n.c3 = -4 - n.c2 * (k - 1) + (k + 3) * delta - c3IW;
  return n;
}

LinearClassification classify_linear(const LinearField& f) {
  LinearClassification c;
  c.scheme = vf_singular_scheme(f.field());
  if (c.scheme.dimension() >= 2)
    throw MathError("field vanishes along a plane (three-dimensional eigenspace); the foliation is not saturated");
  c.conormal = conormal_chern(1, c.scheme);
  if (c.scheme.dimension() == 0) {
    c.which = LinearCase::generic;
  } else {
    auto [hull, W] = equidimensional_hull(c.scheme);
    if (hull.degree() == 1)
      c.which = LinearCase::one_plane_eigenspace;
    else if (hull.degree() == 2)
      c.which = LinearCase::two_plane_eigenspaces;
    else
      throw VerificationError("linear field with a singular curve of degree " + std::to_string(hull.degree()));
  }
  static const ChernTriple expected[3] = {{-4, 6, 4}, {-4, 5, 2}, {-4, 4, 0}};
  if (!(c.conormal == expected[static_cast<int>(c.which) - 1]))
    throw VerificationError("conormal Chern classes disagree with the eigenstructure case");
  return c;
}

std::vector<OneForm> annihilator_form_space(const VectorField& v, int l) {
  if (l < 2) return {};
  const int e = l - 1;
  const int k = v.degree();
  const auto& cols = monomials_of_degree(e);
  const long n = static_cast<long>(cols.size());
  const long r1 = num_monomials(l);
  RatMatrix m = zero_matrix(r1 + num_monomials(e + k), kNumVars * n);
  for (int i = 0; i < kNumVars; ++i)
    for (long c = 0; c < n; ++c) {
      m(monomial_index(cols[c] * Monomial::variable(i)), i * n + c) += 1;
      for (const auto& [mono, coef] : v[i].terms()) m(r1 + monomial_index(mono * cols[c]), i * n + c) += coef;
    }
  RatMatrix ker = kernel(std::move(m));
  std::vector<OneForm> out;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    RatVector col = ker.col(j);
    PolyQuad q;
    for (int i = 0; i < kNumVars; ++i) q[i] = from_coefficients(col, i * n, e);
    out.emplace_back(std::move(q));
  }
  return out;
}

ChernTriple predicted_chern(int k, int l, long c2N, long c3N) {
  ChernTriple t;
  t.c1 = 4 - l;
  t.c2 = static_cast<long>(l) * (k - 1) + 6 - c2N;
  t.c3 = c3N + (1 - k - l) * c2N + static_cast<long>(k * k + 2 * k + 3) * l - 4;
  return t;
}

InducedDistribution induce_distribution(const VectorField& v, const OneForm& sigma, int l) {
  if (!contract(sigma, v).is_zero()) throw MathError("form is not annihilated by the field");
  if (sigma.degree() + 2 != l) throw MathError("form degree does not match the twist");
  InducedDistribution out;
  out.conormal = conormal_chern(v.degree(), vf_singular_scheme(v));
  out.predicted = predicted_chern(v.degree(), l, out.conormal.c2, out.conormal.c3);
  out.report = analyze(sigma);
  out.computed = {out.report.c1, out.report.c2, out.report.c3};
  out.agrees = out.computed == out.predicted;
  return out;
}

Mat4 parse_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Mat4 m;
  int row = 0;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    std::vector<Rational> vals;
    while (ls >> tok) vals.push_back(parse_rational(tok));
    if (vals.empty()) continue;
    if (vals.size() != 4) throw ParseError("matrix row " + std::to_string(row + 1) + " needs 4 entries");
    if (row >= 4) throw ParseError("matrix has more than 4 rows");
    for (int j = 0; j < 4; ++j) m(row, j) = vals[j];
    ++row;
  }
  if (row != 4) throw ParseError("matrix needs 4 rows");
  return m;
}

}  // namespace p3d
