#include <doctest.h>

#include <set>

#include "p3d/distribution.hpp"
#include "p3d/errors.hpp"
#include "p3d/io.hpp"

using namespace p3d;

namespace {

std::string fixture(const std::string& name) { return std::string(P3D_FIXTURE_DIR) + "/" + name; }

Point pt(const char* s) { return parse_point(s); }

}  // namespace

TEST_CASE("the degree-two table") {
  const auto& t = degree_two_table();
  CHECK(t.size() == 17);
  std::set<std::string> ids;
  for (const auto& r : t) ids.insert(r.id());
  CHECK(ids.size() == 17);
  CHECK(ids.count("(6,20)"));
  CHECK(ids.count("(-1,0)"));
  CHECK_FALSE(classify_row(0, 0).spectrum);
  CHECK(classify_row(5, 14).spectrum == std::vector<int>{-2, -2, -1, -1, -1});
}

TEST_CASE("rows ruled out by the classification") {
  for (auto [c2, c3] : std::vector<std::pair<int, int>>{{4, 0}, {4, 2}, {4, 4}, {7, 0}, {2, 6}, {1, 4}, {-2, 0}})
    CHECK_THROWS_AS(classify_row(c2, c3), MathError);
  CHECK_THROWS_AS(classify_row(2, -2), MathError);
}

TEST_CASE("twisted cubic example") {
  DistributionReport r = analyze(read_form(fixture("twisted-cubic-3-6.form")));
  CHECK(r.degree == 2);
  CHECK(r.deg_C == 3);
  CHECK(r.pa_C == 0);
  CHECK(r.residual_length == 6);
  CHECK(r.c2 == 3);
  CHECK(r.c3 == 6);
  CHECK(r.c3_crosscheck == r.c3);
  CHECK(r.stability.tag == Stability::stable);
  REQUIRE(r.table_row);
  CHECK(r.table_row->id() == "(3,6)");
  CHECK(r.quadric_containment_dim == 0);
  CHECK(in_residual(r, pt("(3:0:1:0)")));
  CHECK(in_residual(r, pt("(1:-7:5:-7)")));
  // on the curve part, not residual
  CHECK(vanishes_at(r.Z.ideal(), pt("(1:0:0:0)")));
  CHECK_FALSE(in_residual(r, pt("(1:0:0:0)")));
  CHECK_FALSE(vanishes_at(r.Z.ideal(), pt("(1:1:1:2)")));
}

TEST_CASE("section dimensions") {
  OneForm w = read_form(fixture("semistable-2-4.form"));
  CHECK(section_dims(w, -2) == 0);
  CHECK(section_dims(w, -1) == 0);
  CHECK(section_dims(w, 0) == 1);
  CHECK(section_dims(w, 1) == 4);
  auto s = stability_class(w, 2, 4);
  CHECK(s.tag == Stability::strictly_semistable);
  CHECK(s.h0_zero == 1);
  CHECK(to_string(Stability::unstable) == "unstable");
}

TEST_CASE("isolated singularities") {
  DistributionReport r = analyze(read_form(fixture("jouanolou-generic.form")));
  CHECK(r.Z.dimension() == 0);
  CHECK(r.C.empty());
  CHECK_FALSE(r.pa_C);
  CHECK(r.residual_length == 20);
  CHECK(r.c3 == 20);
  CHECK(r.c2 == 6);
}

TEST_CASE("double line admissibility") {
  ProjScheme g3 = saturate_irrelevant(double_line_ideal(-3));
  CHECK(g3.degree() == 2);
  CHECK(g3.genus_or_length() == -3);
  auto v = multiline_admissibility(g3, 2, MultipleLine::double_line);
  CHECK_FALSE(v.admissible);
  CHECK(v.truncated_degree == 3);
  CHECK_FALSE(v.reason.empty());
  CHECK(multiline_admissibility(g3, 3, MultipleLine::double_line).admissible);
  for (int g = 0; g >= -2; --g) {
    ProjScheme c = saturate_irrelevant(double_line_ideal(g));
    CHECK(c.genus_or_length() == g);
    CHECK(multiline_admissibility(c, 2, MultipleLine::double_line).admissible);
  }
  CHECK_THROWS_AS(double_line_ideal(1), MathError);
}

TEST_CASE("triple line admissibility") {
  for (int b = 1; b <= 4; ++b) {
    ProjScheme c = saturate_irrelevant(triple_line_ideal_a_minus1(b));
    CHECK(c.degree() == 3);
    CHECK(c.genus_or_length() == 1 - b);
  }
  ProjScheme b3 = saturate_irrelevant(triple_line_ideal_a_minus1(3));
  auto v = multiline_admissibility(b3, 2, MultipleLine::triple_line);
  CHECK_FALSE(v.admissible);
  CHECK(v.truncated_degree == 4);
  // every generator of the b = 2 ideal has degree at most 3 = d + 1
  ProjScheme b2 = saturate_irrelevant(triple_line_ideal_a_minus1(2));
  auto v2 = multiline_admissibility(b2, 2, MultipleLine::triple_line);
  CHECK(v2.admissible);
  CHECK(same_ideal(truncated_subscheme(b2, 2).ideal(), b2.ideal()));
  CHECK_THROWS_AS(triple_line_ideal_a_minus1(0), MathError);
}

TEST_CASE("points") {
  Point p = pt("(1/2:0:-3:1)");
  CHECK(to_string(p) == "(1/2:0:-3:1)");
  CHECK(vanishes_at(point_ideal(p), p));
  CHECK_FALSE(vanishes_at(point_ideal(p), pt("(1:0:-3:1)")));
  CHECK(vanishes_at(point_ideal(p), pt("(1:0:-6:2)")));
  CHECK_THROWS_AS(parse_point("(0:0:0:0)"), ParseError);
  CHECK_THROWS_AS(parse_point("(1:2:3)"), ParseError);
  CHECK_THROWS_AS(parse_point("1:2:3:4"), ParseError);
}
