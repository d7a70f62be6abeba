#include "p3d/differential.hpp"

#include <sstream>

#include "expr_parser.hpp"
#include "p3d/errors.hpp"

namespace p3d {

int common_degree(const PolyQuad& q, const char* what) {
  std::optional<int> d;
  for (const auto& p : q) {
    if (p.is_zero()) continue;
    auto h = p.homogeneous_degree();
    if (!h) throw MathError(std::string(what) + ": coefficient is not homogeneous");
    if (d && *d != *h) throw MathError(std::string(what) + ": coefficients have unequal degrees");
    d = h;
  }
  if (!d) throw MathError(std::string(what) + ": all coefficients are zero");
  return *d;
}

Poly radial_contraction(const PolyQuad& coeffs) {
  common_degree(coeffs, "radial contraction");
  Poly s;
  for (int i = 0; i < kNumVars; ++i) s += coeffs[i] * Poly::variable(i);
  return s;
}

OneForm::OneForm(PolyQuad coeffs) : coeffs_(std::move(coeffs)) {
  int e = common_degree(coeffs_, "1-form");
  if (e < 1) throw MathError("1-form coefficients must have degree at least 1");
  Poly r = radial_contraction(coeffs_);
  if (!r.is_zero()) throw MathError("1-form does not descend to P^3: contraction with the radial field is " + to_string(r));
  degree_ = e - 1;
}

Poly divergence(const PolyQuad& v) {
  Poly s;
  for (int i = 0; i < kNumVars; ++i) s += partial_derivative(v[i], i);
  return s;
}

PolyQuad radial_field(const Poly& multiplier) {
  PolyQuad r;
  for (int i = 0; i < kNumVars; ++i) r[i] = multiplier * Poly::variable(i);
  return r;
}

VectorField::VectorField(PolyQuad comps) {
  degree_ = common_degree(comps, "vector field");
  Poly div = divergence(comps);
  if (!div.is_zero()) {
    PolyQuad r = radial_field(div.scaled(Rational(1, degree_ + 3)));
    for (int i = 0; i < kNumVars; ++i) comps[i] -= r[i];
  }
  comps_ = std::move(comps);
}

bool VectorField::is_radial() const {
  for (const auto& p : comps_)
    if (!p.is_zero()) return false;
  return true;
}

bool ThreeForm::is_zero() const {
  for (const auto& p : comps)
    if (!p.is_zero()) return false;
  return true;
}

Ideal singular_ideal(const OneForm& w) {
  std::vector<Poly> g;
  for (const auto& p : w.coeffs())
    if (!p.is_zero()) g.push_back(p);
  return Ideal(std::move(g));
}

std::pair<OneForm, Poly> primitive_part(const PolyQuad& coeffs) {
  common_degree(coeffs, "primitive part");
  Poly g = multivariate_gcd(std::vector<Poly>(coeffs.begin(), coeffs.end()));
  PolyQuad out;
  for (int i = 0; i < kNumVars; ++i) {
    auto q = exact_divide(coeffs[i], g);
    if (!q) throw VerificationError("gcd does not divide a coefficient");
    out[i] = *q;
  }
  return {OneForm(std::move(out)), g};
}

std::pair<ThreeForm, bool> integrability(const OneForm& w) {
  const auto& A = w.coeffs();
  Poly B[kNumVars][kNumVars];
  for (int i = 0; i < kNumVars; ++i)
    for (int j = i + 1; j < kNumVars; ++j)
      B[i][j] = partial_derivative(A[j], i) - partial_derivative(A[i], j);
  static constexpr int kTriples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  ThreeForm t;
  for (int n = 0; n < 4; ++n) {
    auto [i, j, k] = std::tuple(kTriples[n][0], kTriples[n][1], kTriples[n][2]);
    t.comps[n] = A[i] * B[j][k] - A[j] * B[i][k] + A[k] * B[i][j];
  }
  bool zero = t.is_zero();
  return {std::move(t), zero};
}

Poly contract(const PolyQuad& w, const PolyQuad& v) {
  Poly s;
  for (int i = 0; i < kNumVars; ++i) s += w[i] * v[i];
  return s;
}

Poly contract(const OneForm& w, const VectorField& v) { return contract(w.coeffs(), v.comps()); }

namespace {

int permutation_sign(int a, int b, int c, int d) {
  int p[4] = {a, b, c, d};
  int s = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) s = -s;
    }
  return s;
}

}  // namespace

OneForm form_from_fields(const VectorField& a, const VectorField& b) {
  PolyQuad w;
  for (int l = 0; l < kNumVars; ++l)
    for (int i = 0; i < kNumVars; ++i)
      for (int j = 0; j < kNumVars; ++j)
        for (int k = 0; k < kNumVars; ++k) {
          int s = permutation_sign(i, j, k, l);
          if (s == 0) continue;
          w[l] += (Poly::variable(i) * a[j] * b[k]).scaled(s);
        }
  bool zero = true;
  for (const auto& p : w)
    if (!p.is_zero()) zero = false;
  if (zero) throw MathError("fields are dependent modulo the radial field");
  return primitive_part(w).first;
}

namespace {

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

PolyQuad parse_quad(const std::string& raw, char label) {
  std::string text = strip_comments(raw);
  PolyQuad q;
  bool labelled = false;
  std::array<bool, kNumVars> seen{};
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start != std::string::npos && line[start] == label && start + 2 < line.size() &&
        line[start + 1] >= '0' && line[start + 1] <= '3' && line.find(':', start) == start + 2) {
      labelled = true;
      int i = line[start + 1] - '0';
      if (seen[i]) throw ParseError(std::string("duplicate entry ") + label + line[start + 1], offset + start);
      seen[i] = true;
      try {
        q[i] = parse_poly(line.substr(start + 3));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), offset + start + 3 + e.position());
      }
    } else if (labelled && start != std::string::npos) {
      throw ParseError("unexpected text after labelled entries", offset + start);
    }
    offset += line.size() + 1;
  }
  if (labelled) {
    for (int i = 0; i < kNumVars; ++i)
      if (!seen[i]) throw ParseError(std::string("missing entry ") + label + std::to_string(i));
    return q;
  }
  auto e = detail::parse_expression(text, true);
  if (!e[kNumVars].is_zero()) throw ParseError("expression has a term without a differential");
  for (int i = 0; i < kNumVars; ++i) q[i] = e[i];
  return q;
}

OneForm parse_one_form(const std::string& text) { return OneForm(parse_quad(text, 'A')); }

VectorField parse_vector_field(const std::string& text) { return VectorField(parse_quad(text, 'F')); }

std::string render_quad(const PolyQuad& q, char label) {
  std::string out;
  for (int i = 0; i < kNumVars; ++i) out += std::string(1, label) + std::to_string(i) + ": " + to_string(q[i]) + "\n";
  return out;
}

}  // namespace p3d
