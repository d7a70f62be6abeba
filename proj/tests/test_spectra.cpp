#include <doctest.h>

#include "p3d/errors.hpp"
#include "p3d/spectra.hpp"

using namespace p3d;

namespace {

long h0_p1(int a) { return a < 0 ? 0 : a + 1; }
long h1_p1(int a) { return a > -2 ? 0 : -a - 1; }

}  // namespace

TEST_CASE("cohomology from the spectrum") {
  for (const Spectrum& s : std::vector<Spectrum>{{0, 0}, {-1, 0}, {-2, -1, -1}, {-3, -2, -2, -1, -1, -1}, {-1, 0, 1}}) {
    for (int p = -6; p <= -1; ++p) {
      long want = 0;
      for (int k : s) want += h0_p1(k + p + 1);
      CHECK(spectrum_h1(s, p) == want);
    }
    for (int p = -3; p <= 4; ++p) {
      long want = 0;
      for (int k : s) want += h1_p1(k + p + 1);
      CHECK(spectrum_h2(s, p) == want);
    }
  }
  CHECK(spectrum_h1({0, 0}, -1) == 2);
  CHECK_THROWS_AS(spectrum_h1({0}, 0), MathError);
  CHECK_THROWS_AS(spectrum_h2({0}, -4), MathError);
}

TEST_CASE("admissibility rules") {
  SpectrumConstraints none;
  CHECK(spectrum_admissible({-1, 0}, 2, none));
  CHECK_FALSE(spectrum_admissible({-1, 0}, 4, none));
  // gaps are not allowed
  CHECK_FALSE(spectrum_admissible({-2, 0}, 4, none));
  CHECK_FALSE(spectrum_admissible({-2, 2}, 0, none));
  SpectrumConstraints lf;
  lf.locally_free = true;
  CHECK(spectrum_admissible({-1, 0, 1}, 0, lf));
  CHECK(spectrum_admissible({-1, -1, 0, 1, 1}, 0, lf));
  CHECK_FALSE(spectrum_admissible({-1, -1, 0, 1}, 2, lf));
  SpectrumConstraints st;
  st.stable = true;
  CHECK_FALSE(spectrum_admissible({-1, 1}, 0, st));
  CHECK(spectrum_admissible({-1, 0, 1}, 0, st));
  SpectrumConstraints no1;
  no1.forbid_value_one = true;
  CHECK_FALSE(spectrum_admissible({-1, 0, 1}, 0, no1));
}

TEST_CASE("enumeration") {
  SpectrumConstraints st;
  st.stable = true;
  CHECK(enumerate_spectra(1, 0, st) == std::vector<Spectrum>{{0}});
  CHECK(enumerate_spectra(2, 2, st) == std::vector<Spectrum>{{-1, 0}});
  auto five = enumerate_spectra(5, 14, st);
  st.h1_zero_at = {-1};
  CHECK(enumerate_spectra(5, 14, st) == std::vector<Spectrum>{{-2, -2, -1, -1, -1}});
  CHECK(five.size() > 1);
  CHECK_THROWS_AS(enumerate_spectra(2, 3, st), MathError);
  CHECK_THROWS_AS(enumerate_spectra(2, -2, st), MathError);
  CHECK_THROWS_AS(enumerate_spectra(0, 0, st), MathError);
  CHECK(to_string(Spectrum{-1, 0}) == "{-1,0}");
}

TEST_CASE("table verification") {
  auto checks = verify_table();
  CHECK(checks.size() == 15);
  int flagged = 0;
  for (const auto& t : checks) {
    CHECK(t.pass);
    CHECK(t.found == std::vector<Spectrum>{t.expected});
    CHECK_FALSE(t.derivation.empty());
    if (t.flagged) {
      ++flagged;
      CHECK(t.c2 == 6);
      CHECK(t.expected == Spectrum{-3, -2, -2, -1, -1, -1});
      CHECK(t.printed == Spectrum{-3, -2, -1, -1, -1});
    }
  }
  CHECK(flagged == 1);
}
