#include <doctest.h>

#include <cstdlib>

#include "p3d/errors.hpp"
#include "p3d/groebner.hpp"

using namespace p3d;

namespace {

Ideal I(std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s));
  return Ideal(g);
}

const char* kTwistedCubic[] = {"xz-y^2", "xw-yz", "yw-z^2"};

Ideal twisted_cubic() { return I({kTwistedCubic[0], kTwistedCubic[1], kTwistedCubic[2]}); }

}  // namespace

TEST_CASE("reduced basis of the twisted cubic") {
  Ideal tc = twisted_cubic();
  const auto& b = tc.basis();
  CHECK(b.size() == 3);
  CHECK(is_groebner_basis(b));
  for (const auto& g : b) CHECK(g.leading_term().second == 1);
  CHECK(contains(tc, parse_poly("x z^2 - y^2 z")));
  CHECK_FALSE(contains(tc, parse_poly("x^2")));
  CHECK(normal_form(parse_poly("y^2"), tc) == parse_poly("xz"));
}

TEST_CASE("basis in other orders") {
  std::vector<Poly> gens = twisted_cubic().generators();
  auto lex = groebner_basis(gens, TermOrder::lex());
  CHECK(is_groebner_basis(lex, TermOrder::lex()));
  auto el = groebner_basis(gens, TermOrder::elimination({0}));
  CHECK(is_groebner_basis(el, TermOrder::elimination({0})));
}

TEST_CASE("unit and zero ideals") {
  CHECK(I({"x", "x+1"}).is_unit());
  CHECK(Ideal::unit().is_unit());
  CHECK(Ideal(std::vector<Poly>{}).is_zero());
  CHECK(same_ideal(I({"x^2", "xy", "y"}), I({"y", "x^2"})));
}

TEST_CASE("ideal operations") {
  CHECK(same_ideal(intersection(I({"x"}), I({"y"})), I({"xy"})));
  CHECK(same_ideal(ideal_product(I({"x", "y"}), I({"z"})), I({"xz", "yz"})));
  CHECK(same_ideal(ideal_sum(I({"x"}), I({"y"})), I({"x", "y"})));
  CHECK(same_ideal(quotient(I({"x^2", "xy"}), parse_poly("x")), I({"x", "y"})));
  CHECK(same_ideal(quotient(I({"xy", "xz"}), I({"y", "z"})), I({"x"})));
  // (x^2, xy) has an embedded line, not an embedded point
  CHECK(same_ideal(saturation(I({"x^2", "xy"}), irrelevant_ideal()), I({"x^2", "xy"})));
  CHECK(same_ideal(saturation(I({"x^2", "xy", "xz", "xw"}), irrelevant_ideal()), I({"x"})));
  CHECK(same_ideal(saturation_by_variable(I({"x w^3", "y w"}), 3), I({"x", "y"})));
  CHECK(same_ideal(eliminate(I({"x - z", "y - z"}), {2}), I({"x - y"})));
  // two points and their union
  Ideal p = I({"x", "y", "z"}), q = I({"y", "z", "w"});
  Ideal u = intersection(std::vector<Ideal>{p, q});
  CHECK(same_ideal(u, I({"y", "z", "xw"})));
}

TEST_CASE("minimal generators drop redundancy") {
  auto m = minimal_generators(I({"x^2", "x^2 + xy", "xy", "x^2 y"}));
  CHECK(m.size() == 2);
  CHECK(m[0].homogeneous_degree() == 2);
}

TEST_CASE("gcd") {
  Poly f = parse_poly("(x+y)(z-w)^2"), g = parse_poly("(x+y)(z-w)(x-w)");
  CHECK(multivariate_gcd({f, g}).monic() == parse_poly("(x+y)(z-w)").monic());
  CHECK(multivariate_gcd({parse_poly("x"), parse_poly("y")}).is_constant());
}

TEST_CASE("syzygies of the twisted cubic") {
  auto gens = twisted_cubic().generators();
  SyzygyModule S = syzygy_module(gens);
  CHECK(S.ambient.degrees == std::vector<int>{2, 2, 2});
  Submodule m = minimalize(S);
  CHECK(m.generators.size() == 2);
  for (const auto& v : S.generators) {
    Poly s;
    for (std::size_t i = 0; i < gens.size(); ++i) s += v[i] * gens[i];
    CHECK(s.is_zero());
    auto d = element_degree(S.ambient, v);
    REQUIRE(d);
    CHECK(*d >= 3);
  }
  for (const auto& v : m.generators) CHECK(element_degree(S.ambient, v) == 3);
}

TEST_CASE("free resolution of the twisted cubic") {
  Resolution r = free_resolution(twisted_cubic(), 4);
  CHECK(r.ranks() == std::vector<int>{3, 2});
  auto b = r.betti();
  CHECK(b[0] == std::vector<int>{2, 2, 2});
  CHECK(b[1] == std::vector<int>{3, 3});
}

TEST_CASE("resolution of a complete intersection") {
  Resolution r = free_resolution(I({"x", "y^2", "z^3"}), 4);
  CHECK(r.ranks() == std::vector<int>{3, 3, 1});
  CHECK(r.betti()[2] == std::vector<int>{6});
}

TEST_CASE("module membership and quotients") {
  FreeModule F{{0, 0}};
  Submodule M{F, {{parse_poly("x"), parse_poly("y")}, {parse_poly("z"), Poly()}}};
  CHECK(module_contains(M, {parse_poly("xz+z^2"), parse_poly("yz")}));
  CHECK_FALSE(module_contains(M, {parse_poly("x"), Poly()}));
  CHECK(same_ideal(module_quotient(M, {Poly(1), Poly()}), I({"z"})));
  CHECK(quotient_dimension(M, 0) == 2);
  CHECK(quotient_dimension(M, 1) == 8 - 2);
  CHECK(submodule_dimension(M, 1) == 2);
}

TEST_CASE("hilbert data of known schemes") {
  HilbertData tc = hilbert_data(twisted_cubic());
  CHECK(tc.dimension == 1);
  CHECK(tc.degree == 3);
  CHECK(tc.genus_or_length == 0);
  for (int t = 0; t < 8; ++t) CHECK(tc.hf(t) == (t == 0 ? 1 : 3 * t + 1));

  HilbertData plane_cubic = hilbert_data(I({"x", "y^3+z^3+w^3"}));
  CHECK(plane_cubic.degree == 3);
  CHECK(plane_cubic.genus_or_length == 1);

  HilbertData skew = hilbert_data(intersection(I({"x", "y"}), I({"z", "w"})));
  CHECK(skew.degree == 2);
  CHECK(skew.genus_or_length == -1);

  HilbertData pts = hilbert_data(intersection(std::vector<Ideal>{I({"x", "y", "z"}), I({"y", "z", "w"}), I({"x", "z", "w"})}));
  CHECK(pts.dimension == 0);
  CHECK(pts.genus_or_length == 3);

  HilbertData empty = hilbert_data(I({"x", "y", "z", "w"}));
  CHECK(empty.dimension == -1);
  CHECK(hilbert_data(I({"x^2+y^2+z^2+w^2"})).dimension == 2);
}

TEST_CASE("hilbert numerator of monomial ideals") {
  // R/(x): numerator 1 - t
  CHECK(hilbert_numerator({Monomial(1, 0, 0, 0)}) == std::vector<long>{1, -1});
  // R/(x^2, xy): 1 - 2t^2 + t^3
  CHECK(hilbert_numerator({Monomial(2, 0, 0, 0), Monomial(1, 1, 0, 0)}) == std::vector<long>{1, 0, -2, 1});
}

TEST_CASE("step limit") {
  setenv("P3D_MAX_GB_STEPS", "3", 1);
  std::vector<Poly> g = {parse_poly("x^3 - y^2 z"), parse_poly("y^3 - z^2 w"), parse_poly("z^3 - w^2 x"),
                         parse_poly("w^3 - x^2 y")};
  CHECK_THROWS_AS(groebner_basis(g), ResourceError);
  unsetenv("P3D_MAX_GB_STEPS");
  CHECK(is_groebner_basis(groebner_basis(g)));
}
