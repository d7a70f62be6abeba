#include <doctest.h>

#include "p3d/constructions.hpp"
#include "p3d/errors.hpp"
#include "p3d/foliation1d.hpp"

using namespace p3d;

namespace {

Mat4 diag(int a, int b, int c, int d) {
  Mat4 m = Mat4::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  m(3, 3) = d;
  return m;
}

}  // namespace

TEST_CASE("matrix parsing") {
  Mat4 m = parse_matrix("1 0 0 0\n0 2 0 0\n# comment\n0 0 3 0\n0 0 0 -6\n");
  CHECK(m == diag(1, 2, 3, -6));
  CHECK_THROWS_AS(parse_matrix("1 2 3"), ParseError);
  CHECK_THROWS_AS(LinearField(Mat4::Identity()), MathError);
  CHECK_THROWS_AS(LinearField(Mat4::Zero()), MathError);
  // the trace is removed by normalization
  LinearField f = traceless_normalize(diag(2, 3, 4, 5));
  CHECK(f.matrix().trace() == 0);
}

TEST_CASE("generic linear field") {
  auto c = classify_linear(LinearField(diag(1, 2, 3, -6)));
  CHECK(c.which == LinearCase::generic);
  CHECK(c.scheme.dimension() == 0);
  CHECK(c.scheme.genus_or_length() == 4);
  CHECK(c.conormal == ChernTriple{-4, 6, 4});
}

TEST_CASE("one repeated eigenvalue") {
  auto c = classify_linear(LinearField(diag(1, 1, 2, -4)));
  CHECK(c.which == LinearCase::one_plane_eigenspace);
  CHECK(c.scheme.dimension() == 1);
  CHECK(c.scheme.degree() == 1);
  CHECK(c.scheme.genus_or_length() == -2);
  CHECK(c.conormal == ChernTriple{-4, 5, 2});
}

TEST_CASE("two repeated eigenvalues") {
  auto c = classify_linear(LinearField(diag(1, 1, -1, -1)));
  CHECK(c.which == LinearCase::two_plane_eigenspaces);
  CHECK(c.scheme.degree() == 2);
  CHECK(c.scheme.genus_or_length() == -1);
  CHECK(c.conormal == ChernTriple{-4, 4, 0});
  Mat4 n = Mat4::Zero();
  n(0, 1) = 1;
  n(2, 3) = 1;
  auto d = classify_linear(LinearField(n));
  CHECK(d.which == LinearCase::two_plane_eigenspaces);
  CHECK(d.scheme.degree() == 2);
  CHECK(d.scheme.genus_or_length() == -1);
}

TEST_CASE("singular scheme of a linear field") {
  ProjScheme s = vf_singular_scheme(LinearField(diag(1, 2, 3, -6)).field());
  CHECK(s.dimension() == 0);
  CHECK(s.genus_or_length() == 4);
}

TEST_CASE("predicted chern classes") {
  CHECK(predicted_chern(3, 4, 9, 0) == ChernTriple{0, 5, 14});
  CHECK(predicted_chern(3, 4, 10, 0) == ChernTriple{0, 4, 8});
  CHECK(predicted_chern(2, 4, 6, 0) == ChernTriple{0, 4, 10});
}

TEST_CASE("forms annihilating a field") {
  VectorField v = LinearField(diag(1, 2, 3, -6)).field();
  auto forms = annihilator_form_space(v, 3);
  REQUIRE_FALSE(forms.empty());
  for (const auto& w : forms) CHECK(contract(w, v).is_zero());
}

TEST_CASE("seeded constructions are reproducible") {
  Construction a = construct("induced-mixed-sections", 1), b = construct("induced-mixed-sections", 1);
  CHECK(a.form == b.form);
  REQUIRE(a.field);
  CHECK(a.field->comps() == b.field->comps());
  CHECK(a.twist == 4);
  InducedDistribution d = induce_distribution(*a.field, a.form, a.twist);
  CHECK(d.agrees);
  CHECK(d.computed == ChernTriple{0, 4, 10});
  CHECK(d.report.deg_C == 2);
  CHECK_THROWS_AS(construct("no-such-recipe", 1), ParseError);
}

TEST_CASE("small integers") {
  SmallInts a(7), b(7);
  for (int i = 0; i < 50; ++i) {
    int x = a(3);
    CHECK(x == b(3));
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
  CHECK(*a.poly(2, 2).homogeneous_degree() == 2);
  PolyQuad t = a.twisted_form(1, 2);
  CHECK(radial_contraction(t).is_zero());
}

TEST_CASE("kernels of forms and fields") {
  VectorField v(PolyQuad{parse_poly("x"), parse_poly("-y"), Poly(), Poly()});
  auto forms = forms_killing({v.comps()}, 1);
  for (const auto& w : forms) CHECK(contract(w, v).is_zero());
  REQUIRE_FALSE(forms.empty());
  auto fields = fields_killed_by({forms[0].coeffs()}, 1);
  CHECK(!fields.empty());
  for (const auto& f : fields) CHECK(contract(forms[0], f).is_zero());
}
