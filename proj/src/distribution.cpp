#include "p3d/distribution.hpp"

#include <algorithm>
#include <sstream>

#include "p3d/errors.hpp"
#include "p3d/linalg.hpp"

namespace p3d {

std::string to_string(Stability s) {
  switch (s) {
    case Stability::unstable:
      return "unstable";
    case Stability::strictly_semistable:
      return "strictly_semistable";
    case Stability::stable:
      return "stable";
  }
  return "?";
}

std::string TableRow::id() const { return "(" + std::to_string(c2) + "," + std::to_string(c3) + ")"; }

const std::vector<TableRow>& degree_two_table() {
  using V = std::vector<int>;
  static const std::vector<TableRow> rows = {
      {6, 20, V{-3, -2, -2, -1, -1, -1}, "empty"},
      {5, 14, V{-2, -2, -1, -1, -1}, "line"},
      {4, 10, V{-2, -1, -1, -1}, "conic"},
      {4, 8, V{-1, -1, -1, -1}, "two skew lines"},
      {4, 6, V{-1, -1, -1, 0}, "double line of genus -2"},
      {3, 8, V{-2, -1, -1}, "plane cubic curve"},
      {3, 6, V{-1, -1, -1}, "twisted cubic"},
      {3, 4, V{-1, -1, 0}, "conic and a disjoint line"},
      {3, 2, V{-1, 0, 0}, "three skew lines"},
      {3, 0, V{0, 0, 0}, "double line of genus -2 and a disjoint line"},
      {2, 4, V{-1, -1}, "elliptic quartic curve"},
      {2, 2, V{-1, 0}, "rational quartic curve"},
      {2, 0, V{0, 0}, "twisted cubic and a disjoint line"},
      {1, 2, V{-1}, "curve of degree 5, genus 2"},
      {1, 0, V{0}, "elliptic curve of degree 5"},
      {0, 0, std::nullopt, "ACM curve of degree 6, genus 3"},
      {-1, 0, std::nullopt, "ACM curve of degree 7, genus 5"},
  };
  return rows;
}

TableRow classify_row(long c2, long c3) {
  for (const auto& r : degree_two_table())
    if (r.c2 == c2 && r.c3 == c3) return r;
  std::ostringstream msg;
  msg << "impossible pair (c2, c3) = (" << c2 << ", " << c3 << ")";
  if (c2 == 4 && c3 < 6)
    msg << ": c2 = 4 forces a curve part of degree 2, which must be a conic, two skew lines or a double line;"
           " a double line of genus below -2 would make the distribution singular along the second"
           " infinitesimal neighbourhood of the line, so p_a >= -2 and c3 = 2 + 2 p_a + 8 - 4 >= 6";
  else if (c3 % 2 != 0)
    msg << ": c3 must be even when c1 = 0";
  else
    msg << ": not in the degree-two classification";
  throw MathError(msg.str());
}

TableRow classify_row(const DistributionReport& r) {
  if (r.degree != 2) throw MathError("the classification table covers degree 2 only");
  return classify_row(r.c2, r.c3);
}

long section_dims(const OneForm& w, int k) {
  if (k + 1 < 0) return 0;
  const int e = k + 1;
  const int target = w.degree() + 1 + e;
  const auto& cols = monomials_of_degree(e);
  const long n = static_cast<long>(cols.size());
  RatMatrix m = zero_matrix(num_monomials(target), kNumVars * n);
  for (int i = 0; i < kNumVars; ++i)
    for (long c = 0; c < n; ++c)
      for (const auto& [mono, coef] : w[i].terms()) m(monomial_index(mono * cols[c]), i * n + c) += coef;
  long ker = kNumVars * n - static_cast<long>(rank(std::move(m)));
  return ker - num_monomials(k);
}

StabilityClass stability_class(const OneForm& w, long c2, long c3) {
  const int d = w.degree();
  const int c1 = 2 - d;
  // F = T_D(m) with c1(F) in {0, -1}
  int m = (d - 2) >= 0 ? (d - 2) / 2 : -((3 - d) / 2);
  const int c1F = c1 + 2 * m;
  StabilityClass s;
  s.h0_minus1 = section_dims(w, m - 1);
  s.h0_zero = section_dims(w, m);
  if (c1F == 0) {
    if (s.h0_minus1 > 0)
      s.tag = Stability::unstable;
    else if (s.h0_zero > 0)
      s.tag = Stability::strictly_semistable;
    else
      s.tag = Stability::stable;
  } else {
    s.tag = s.h0_zero > 0 ? Stability::unstable : Stability::stable;
  }
  if (d == 2) {
    auto pair = std::make_pair(c2, c3);
    if (s.tag == Stability::strictly_semistable && pair != std::make_pair(0L, 0L) &&
        pair != std::make_pair(1L, 2L) && pair != std::make_pair(2L, 4L))
      throw VerificationError("strictly semistable tangent sheaf with (c2, c3) outside {(0,0), (1,2), (2,4)}");
    if (s.tag == Stability::unstable && pair != std::make_pair(-1L, 0L))
      throw VerificationError("unstable tangent sheaf with (c2, c3) other than (-1, 0)");
    if (s.tag != Stability::unstable) {
      if (c3 % 2 != 0) throw VerificationError("semistable tangent sheaf with odd c3");
      if (c3 > c2 * c2 - c2 + 2) throw VerificationError("c3 exceeds c2^2 - c2 + 2");
    }
  }
  return s;
}

DistributionReport analyze(const OneForm& w) {
  DistributionReport r;
  r.degree = w.degree();
  const long d = r.degree;
  if (multivariate_gcd(std::vector<Poly>(w.coeffs().begin(), w.coeffs().end())).total_degree() > 0)
    throw MathError("form is not primitive: its coefficients share a common factor");
  r.Z = saturate_irrelevant(singular_ideal(w));
  if (r.Z.dimension() >= 2)
    throw MathError("singular scheme has dimension " + std::to_string(r.Z.dimension()) +
                    "; the form does not define a distribution with isolated codimension-two singularities");
  auto [C, W] = equidimensional_hull(r.Z);
  r.C = C;
  r.dualizing = W;
  r.residual_length = residual_length(r.Z, r.C);
  long chi = 0;
  if (!r.C.empty()) {
    r.deg_C = r.C.degree();
    r.pa_C = r.C.genus_or_length();
    chi = 1 - *r.pa_C;
  }
  r.c1 = 2 - d;
  r.c2 = d * d + 2 - r.deg_C;
  r.c3 = d * d * d + 2 * d * d + 2 * d - r.deg_C * (3 * d - 2) - 2 * chi;
  r.c3_crosscheck = r.residual_length;
  if (r.c3 != r.c3_crosscheck)
    throw VerificationError("c3 from the curve invariants (" + std::to_string(r.c3) +
                            ") differs from the residual length (" + std::to_string(r.c3_crosscheck) + ")");
  r.stability = stability_class(w, r.c2, r.c3);
  for (int k = -1; k <= 1; ++k) r.h0_table[k] = section_dims(w, k);
  r.quadric_containment_dim = hypersurface_containment(r.Z, 2);
  if (d == 2) r.table_row = classify_row(r.c2, r.c3);
  return r;
}

bool vanishes_at(const Ideal& I, const std::array<Rational, kNumVars>& p) {
  for (const auto& g : I.generators())
    if (g.evaluate(p) != 0) return false;
  return true;
}

bool in_residual(const DistributionReport& r, const std::array<Rational, kNumVars>& p) {
  if (!vanishes_at(r.Z.ideal(), p)) return false;
  if (r.C.empty()) return true;
  return !vanishes_at(r.C.ideal(), p);
}

AdmissibilityVerdict multiline_admissibility(const ProjScheme& C, int d, MultipleLine kind) {
  AdmissibilityVerdict v;
  if (C.dimension() != 1) throw MathError("multiple-line check needs a curve");
  ProjScheme T = truncated_subscheme(C, d);
  v.truncated_dimension = T.dimension();
  v.truncated_degree = T.dimension() == 1 ? T.degree() : 0;
  if (T.dimension() >= 2) {
    v.admissible = false;
    v.reason = "low-degree part of the ideal cuts a surface";
  } else if (T.degree() > C.degree()) {
    v.admissible = false;
    v.reason = kind == MultipleLine::double_line
                   ? "singular scheme would contain the second infinitesimal neighbourhood of the line"
                   : "singular scheme would contain a multiple structure on the line of degree at least 4";
  }
  return v;
}

Ideal double_line_ideal(int genus) {
  if (genus > 0) throw MathError("double lines have genus at most 0");
  Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2), w = Poly::variable(3);
  return Ideal({x * x, x * y, y * y, x * z.pow(-genus) + y * w.pow(-genus)});
}

Ideal triple_line_ideal_a_minus1(int b) {
  if (b < 1) throw MathError("triple line type (-1, b) needs b >= 1");
  Poly x = Poly::variable(0), y = Poly::variable(1), z = Poly::variable(2), w = Poly::variable(3);
  return Ideal({x * x, x * y, y.pow(3), x * w.pow(b) - y * y * z.pow(b - 1)});
}

}  // namespace p3d
