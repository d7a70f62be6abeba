#include "p3d/constructions.hpp"

#include <functional>

#include "p3d/errors.hpp"
#include "p3d/foliation1d.hpp"
#include "p3d/linalg.hpp"

namespace p3d {

int SmallInts::operator()(int r) { return static_cast<int>(gen_() % static_cast<unsigned>(2 * r + 1)) - r; }

Poly SmallInts::poly(int degree, int r) {
  std::vector<Poly::Term> terms;
  for (const auto& m : monomials_of_degree(degree)) terms.emplace_back(m, (*this)(r));
  return Poly::from_terms(std::move(terms));
}

PolyQuad SmallInts::twisted_form(int degree, int r) {
  PolyQuad a;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = i + 1; j < kNumVars; ++j) {
      Poly theta = poly(degree, r);
      a[j] += Poly::variable(i) * theta;
      a[i] -= Poly::variable(j) * theta;
    }
  return a;
}

std::vector<VectorField> fields_killed_by(const std::vector<PolyQuad>& forms, int k) {
  const auto& cols = monomials_of_degree(k);
  const long n = static_cast<long>(cols.size());
  std::vector<long> offset;
  long rows = 0;
  for (const auto& f : forms) {
    offset.push_back(rows);
    rows += num_monomials(k + common_degree(f, "form"));
  }
  RatMatrix m = zero_matrix(rows, kNumVars * n);
  for (std::size_t f = 0; f < forms.size(); ++f)
    for (int i = 0; i < kNumVars; ++i)
      for (long c = 0; c < n; ++c)
        for (const auto& [mono, coef] : forms[f][i].terms()) m(offset[f] + monomial_index(mono * cols[c]), i * n + c) += coef;
  RatMatrix ker = kernel(std::move(m));
  // canonical representatives; radial multiples become zero
  RatMatrix reps = zero_matrix(ker.cols(), kNumVars * n);
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    RatVector col = ker.col(j);
    PolyQuad q;
    for (int i = 0; i < kNumVars; ++i) q[i] = from_coefficients(col, i * n, k);
    VectorField v(q);
    for (int i = 0; i < kNumVars; ++i) {
      RatVector c = coefficients(v[i], k);
      for (long t = 0; t < n; ++t) reps(j, i * n + t) = c(t);
    }
  }
  auto pivots = rref_in_place(reps);
  std::vector<VectorField> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    PolyQuad q;
    for (int i = 0; i < kNumVars; ++i) q[i] = from_coefficients(reps.row(r).transpose(), i * n, k);
    out.emplace_back(q);
  }
  return out;
}

std::vector<OneForm> forms_killing(const std::vector<PolyQuad>& fields, int e) {
  std::vector<PolyQuad> all = fields;
  all.push_back(radial_field());
  const auto& cols = monomials_of_degree(e);
  const long n = static_cast<long>(cols.size());
  std::vector<long> offset;
  long rows = 0;
  for (const auto& f : all) {
    offset.push_back(rows);
    rows += num_monomials(e + common_degree(f, "field"));
  }
  RatMatrix m = zero_matrix(rows, kNumVars * n);
  for (std::size_t f = 0; f < all.size(); ++f)
    for (int i = 0; i < kNumVars; ++i)
      for (long c = 0; c < n; ++c)
        for (const auto& [mono, coef] : all[f][i].terms()) m(offset[f] + monomial_index(mono * cols[c]), i * n + c) += coef;
  RatMatrix ker = kernel(std::move(m));
  std::vector<OneForm> out;
  for (Eigen::Index j = 0; j < ker.cols(); ++j) {
    RatVector col = ker.col(j);
    PolyQuad q;
    for (int i = 0; i < kNumVars; ++i) q[i] = from_coefficients(col, i * n, e);
    out.emplace_back(q);
  }
  return out;
}

namespace {

constexpr int kRange = 3;

PolyQuad d(const Poly& f) {
  PolyQuad q;
  for (int i = 0; i < kNumVars; ++i) q[i] = partial_derivative(f, i);
  return q;
}

OneForm primitive(const PolyQuad& q) {
  for (const auto& p : q)
    if (!p.is_zero()) return primitive_part(q).first;
  throw MathError("construction produced the zero form");
}

// b dA - (deg A / deg B) A dB for a pencil of hypersurfaces
OneForm pencil_form(const Poly& a, const Poly& b) {
  const int da = *a.homogeneous_degree(), db = *b.homogeneous_degree();
  PolyQuad q;
  auto ga = d(a), gb = d(b);
  for (int i = 0; i < kNumVars; ++i) q[i] = (b * ga[i]).scaled(db) - (a * gb[i]).scaled(da);
  return primitive(q);
}

// Contact structure x dy - y dx + z dw - w dz; its null correlation sections
// are the linear fields J^{-1} S x with S antisymmetric.
std::vector<Mat4> antisymmetric_basis() {
  std::vector<Mat4> out;
  for (int a = 0; a < kNumVars; ++a)
    for (int b = a + 1; b < kNumVars; ++b) {
      Mat4 s = Mat4::Constant(Rational(0));
      s(a, b) = 1;
      s(b, a) = -1;
      out.push_back(s);
    }
  return out;
}

Mat4 contact_inverse() {
  Mat4 j = Mat4::Constant(Rational(0));
  j(0, 1) = -1;
  j(1, 0) = 1;
  j(2, 3) = -1;
  j(3, 2) = 1;
  return j;
}

Mat4 random_antisymmetric(SmallInts& rnd) {
  Mat4 s = Mat4::Constant(Rational(0));
  for (int i = 0; i < kNumVars; ++i)
    for (int j = i + 1; j < kNumVars; ++j) {
      int c = rnd(kRange);
      s(i, j) = c;
      s(j, i) = -c;
    }
  return s;
}

PolyQuad linear_field(const Mat4& a) {
  PolyQuad v;
  for (int i = 0; i < kNumVars; ++i)
    for (int j = 0; j < kNumVars; ++j)
      if (a(i, j) != 0) v[i] += Poly::variable(j).scaled(a(i, j));
  return v;
}

// x^T B x componentwise for a list of four matrices
PolyQuad quadratic_field(const std::array<Mat4, kNumVars>& b) {
  PolyQuad v;
  for (int i = 0; i < kNumVars; ++i)
    for (int r = 0; r < kNumVars; ++r)
      for (int c = 0; c < kNumVars; ++c)
        if (b[i](r, c) != 0) v[i] += (Poly::variable(r) * Poly::variable(c)).scaled(b[i](r, c));
  return v;
}

VectorField single_field(const std::vector<PolyQuad>& forms, int k) {
  auto fields = fields_killed_by(forms, k);
  if (fields.size() != 1)
    throw MathError("expected a single field of degree " + std::to_string(k) + " killed by the forms, found " +
                    std::to_string(fields.size()));
  return fields.front();
}

OneForm random_combination(const std::vector<OneForm>& basis, SmallInts& rnd) {
  PolyQuad q;
  for (const auto& b : basis) {
    int c = rnd(kRange);
    for (int i = 0; i < kNumVars; ++i) q[i] += b[i].scaled(c);
  }
  return primitive(q);
}

Construction two_linear_fields(unsigned seed) {
  SmallInts rnd(seed);
  PolyQuad a, b;
  for (int i = 0; i < kNumVars; ++i) {
    a[i] = rnd.poly(1, kRange);
    b[i] = rnd.poly(1, kRange);
  }
  return {"two-linear-fields", seed, form_from_fields(VectorField(a), VectorField(b)), std::nullopt, 0};
}

Construction split_pullback(unsigned seed) {
  SmallInts rnd(seed);
  PolyQuad a, b;
  a[3] = Poly(1);
  for (int i = 0; i < 3; ++i) b[i] = rnd.poly(2, kRange);
  return {"split-pullback", seed, form_from_fields(VectorField(a), VectorField(b)), std::nullopt, 0};
}

Construction null_correlation(unsigned seed) {
  SmallInts rnd(seed);
  const Mat4 jinv = contact_inverse();
  // bundle map given by rows x^T S_i for random antisymmetric S_i
  std::array<Mat4, kNumVars> s;
  for (auto& m : s) m = random_antisymmetric(rnd);
  std::vector<PolyQuad> images;
  for (const auto& basis : antisymmetric_basis()) {
    Mat4 section = jinv * basis;
    std::array<Mat4, kNumVars> b;
    for (int i = 0; i < kNumVars; ++i) b[i] = s[i] * section;
    images.push_back(quadratic_field(b));
  }
  auto forms = forms_killing(images, 3);
  if (forms.size() != 1)
    throw MathError("null correlation map is degenerate for this seed (" + std::to_string(forms.size()) +
                    " candidate forms)");
  return {"null-correlation", seed, primitive(forms.front().coeffs()), std::nullopt, 0};
}

Construction logarithmic_112(unsigned seed) {
  SmallInts rnd(seed);
  const Poly f1 = Poly::variable(0), f2 = Poly::variable(1);
  const Poly f3 = rnd.poly(2, kRange);
  // residues l1 + l2 + 2 l3 = 0 with all three nonzero
  int l1 = 0, l2 = 0;
  while (l1 == 0 || l2 == 0 || l1 + l2 == 0 || (l1 + l2) % 2 != 0) {
    l1 = rnd(kRange);
    l2 = rnd(kRange);
  }
  const Rational l3(-(l1 + l2), 2);
  PolyQuad q;
  auto g1 = d(f1), g2 = d(f2), g3 = d(f3);
  for (int i = 0; i < kNumVars; ++i)
    q[i] = (f2 * f3 * g1[i]).scaled(l1) + (f1 * f3 * g2[i]).scaled(l2) + (f1 * f2 * g3[i]).scaled(l3);
  return {"logarithmic-112", seed, primitive(q), std::nullopt, 0};
}

Construction rational_22(unsigned seed) {
  SmallInts rnd(seed);
  Poly a = rnd.poly(2, kRange), b = rnd.poly(2, kRange);
  return {"rational-22", seed, pencil_form(a, b), std::nullopt, 0};
}

Construction rational_13(unsigned seed) {
  SmallInts rnd(seed);
  Poly h = rnd.poly(1, kRange), f = rnd.poly(3, kRange);
  return {"rational-13", seed, pencil_form(f, h.pow(3)), std::nullopt, 0};
}

// Field of degree 3 killed by two sections of Omega^1(3); sigma = f alpha + g beta.
Construction induced_two_sections(unsigned seed) {
  SmallInts rnd(seed);
  PolyQuad alpha = rnd.twisted_form(1, 2), beta = rnd.twisted_form(1, 2);
  VectorField v = single_field({alpha, beta}, 3);
  Poly f = rnd.poly(1, 2), g = rnd.poly(1, 2);
  PolyQuad s;
  for (int i = 0; i < kNumVars; ++i) s[i] = f * alpha[i] + g * beta[i];
  return {"induced-two-sections", seed, primitive(s), v, 4};
}

// Field of degree 2 killed by sections of Omega^1(2) and Omega^1(3); sigma = q alpha + h beta.
Construction induced_mixed_sections(unsigned seed) {
  SmallInts rnd(seed);
  PolyQuad alpha = rnd.twisted_form(0, 2), beta = rnd.twisted_form(1, 2);
  VectorField v = single_field({alpha, beta}, 2);
  Poly q = rnd.poly(2, 2), h = rnd.poly(1, 2);
  PolyQuad s;
  for (int i = 0; i < kNumVars; ++i) s[i] = q * alpha[i] + h * beta[i];
  return {"induced-mixed-sections", seed, primitive(s), v, 4};
}

// Field of degree 3 with conormal sheaf a twisted null correlation bundle:
// the sections of the bundle are sent into Omega^1(3) by a sum of three
// products of sections of Omega^1(2).
Construction induced_null_correlation(unsigned seed) {
  SmallInts rnd(seed);
  std::vector<std::pair<PolyQuad, PolyQuad>> terms;
  for (int t = 0; t < 3; ++t) terms.emplace_back(rnd.twisted_form(0, kRange), rnd.twisted_form(0, kRange));
  const Mat4 jinv = contact_inverse();
  std::vector<PolyQuad> images;
  for (const auto& basis : antisymmetric_basis()) {
    PolyQuad section = linear_field(jinv * basis);
    PolyQuad img;
    for (const auto& [a, b] : terms) {
      Poly c = contract(a, section);
      for (int i = 0; i < kNumVars; ++i) img[i] += c * b[i];
    }
    images.push_back(img);
  }
  VectorField v = single_field(images, 3);
  auto sigmas = annihilator_form_space(v, 4);
  if (sigmas.empty()) throw MathError("no forms of twist 4 annihilated by the field");
  return {"induced-null-correlation", seed, random_combination(sigmas, rnd), v, 4};
}

struct Entry {
  RecipeInfo info;
  std::function<Construction(unsigned)> run;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {{"two-linear-fields", "span of two random linear fields"}, two_linear_fields},
      {{"split-pullback", "d/dw together with a random quadratic field in d/dx, d/dy, d/dz"}, split_pullback},
      {{"null-correlation", "image of a null correlation bundle under a random bundle map"}, null_correlation},
      {{"logarithmic-112", "logarithmic form with poles on two planes and a quadric"}, logarithmic_112},
      {{"rational-22", "pencil of two random quadrics"}, rational_22},
      {{"rational-13", "pencil spanned by a random cubic and a triple plane"}, rational_13},
      {{"induced-two-sections", "degree-3 field from two sections of Omega^1(3), twist 4"}, induced_two_sections},
      {{"induced-mixed-sections", "degree-2 field from sections of Omega^1(2) and Omega^1(3), twist 4"},
       induced_mixed_sections},
      {{"induced-null-correlation", "degree-3 field with null correlation conormal sheaf, twist 4"},
       induced_null_correlation},
  };
  return t;
}

}  // namespace

const std::vector<RecipeInfo>& recipes() {
  static const std::vector<RecipeInfo> out = [] {
    std::vector<RecipeInfo> v;
    for (const auto& e : table()) v.push_back(e.info);
    return v;
  }();
  return out;
}

Construction construct(const std::string& recipe, unsigned seed) {
  for (const auto& e : table())
    if (e.info.name == recipe) return e.run(seed);
  throw ParseError("unknown recipe '" + recipe + "'");
}

}  // namespace p3d
