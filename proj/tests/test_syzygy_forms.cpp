#include <doctest.h>

#include "p3d/errors.hpp"
#include "p3d/syzygy_forms.hpp"

using namespace p3d;

namespace {

ProjScheme S(std::initializer_list<const char*> gens) {
  std::vector<Poly> g;
  for (const char* s : gens) g.push_back(parse_poly(s));
  return saturate_irrelevant(Ideal(g));
}

void check_singular_along(const std::vector<OneForm>& forms, const ProjScheme& C) {
  for (const auto& w : forms)
    for (const auto& a : w.coeffs()) CHECK(contains(C.ideal(), a));
}

}  // namespace

TEST_CASE("form from a linear syzygy of the twisted cubic") {
  std::vector<Poly> F = {parse_poly("xz-y^2"), parse_poly("xw-yz"), parse_poly("yw-z^2")};
  // z F0 - y F1 + x F2 = 0
  std::vector<Poly> G = {parse_poly("z"), parse_poly("-y"), parse_poly("x")};
  OneForm w = form_from_syzygy(F, G);
  CHECK(w.degree() == 1);
  check_singular_along({w}, S({"xz-y^2", "xw-yz", "yw-z^2"}));
  CHECK_THROWS_AS(form_from_syzygy(F, {parse_poly("x"), parse_poly("y"), parse_poly("z")}), MathError);
  CHECK_THROWS_AS(form_from_syzygy(F, {parse_poly("x")}), MathError);
}

TEST_CASE("candidate forms match linear syzygies") {
  struct Case {
    ProjScheme C;
    int d;
  };
  std::vector<Case> cases = {
      {S({"xz-y^2", "xw-yz", "yw-z^2"}), 1},
      {S({"x", "y"}), 0},
      {S({"x", "y"}), 1},
      {S({"xz", "xw", "yz", "yw"}), 1},
      {S({"xz-y^2", "xw-yz", "yw-z^2"}), 2},
  };
  for (const auto& c : cases) {
    bool on_low_surface = false;
    for (int e = 1; e <= c.d; ++e) on_low_surface = on_low_surface || hypersurface_containment(c.C, e) > 0;
    if (on_low_surface) {
      CHECK_THROWS_AS(candidate_forms(c.C, c.d), MathError);
      continue;
    }
    auto forms = candidate_forms(c.C, c.d);
    check_singular_along(forms, c.C);
    CHECK(static_cast<long>(forms.size()) == linear_syzygy_count(c.C, c.d));
    for (const auto& w : forms) CHECK(w.degree() == c.d);
  }
}

TEST_CASE("twisted cubic in degree two") {
  ProjScheme tc = S({"xz-y^2", "xw-yz", "yw-z^2"});
  CHECK_THROWS_AS(candidate_forms(tc, 2), MathError);
  auto forms = candidate_forms(tc, 2, false);
  CHECK_FALSE(forms.empty());
  check_singular_along(forms, tc);
}

TEST_CASE("common factor of the candidate forms") {
  // a plane cubic and a line: every form vanishing on it has the plane as a factor
  ProjScheme c = saturate_irrelevant(intersection(Ideal({parse_poly("x"), parse_poly("y^3+z^3+w^3")}),
                                                  Ideal({parse_poly("y"), parse_poly("z")})));
  Poly g = candidate_forms_common_factor(c, 2);
  CHECK(g.monic() == parse_poly("x"));
  CHECK(candidate_forms_common_factor(S({"xz-y^2", "xw-yz", "yw-z^2"}), 1).is_constant());
}
