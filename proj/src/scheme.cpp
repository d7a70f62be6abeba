#include "p3d/scheme.hpp"

#include <algorithm>

#include "p3d/errors.hpp"

namespace p3d {

ProjScheme::ProjScheme(Ideal saturated) : ideal_(std::move(saturated)) {
  if (!ideal_.is_homogeneous()) throw MathError("projective scheme needs a homogeneous ideal");
  hilbert_ = hilbert_data(ideal_);
  if (hilbert_.dimension < 0)
    generators_ = {Poly(1)};
  else
    generators_ = minimal_generators(Ideal(ideal_.basis()));
}

ProjScheme saturate_irrelevant(const Ideal& I) {
  if (!I.is_homogeneous()) throw MathError("saturation needs a homogeneous ideal");
  std::vector<Ideal> parts;
  for (int v = 0; v < kNumVars; ++v) parts.push_back(saturation_by_variable(I, v));
  Ideal sat = intersection(parts);
  return ProjScheme(Ideal(sat.basis()));
}

CurveInvariants curve_invariants(const ProjScheme& S) {
  if (S.dimension() >= 2)
    throw MathError("scheme of dimension " + std::to_string(S.dimension()) + " has no curve invariants");
  return {S.dimension(), S.degree(), S.genus_or_length()};
}

long DualizingModule::dimension(int q) const {
  if (ambient.rank() == 0) return 0;
  long k = kernel.generators.empty() && kernel.ambient.rank() == 0 ? 0 : submodule_dimension(kernel, q);
  long i = image.generators.empty() ? 0 : submodule_dimension(image, q);
  return k - i;
}

DualizingModule dualizing_module(const ProjScheme& S) {
  DualizingModule W;
  if (S.empty()) return W;
  Resolution res = free_resolution(S.ideal(), 4);
  if (res.maps.size() > 3) throw MathError("ideal is not saturated (projective dimension 3)");
  if (res.maps.size() < 2) {
    // complete intersection of one hypersurface: Ext^2 vanishes
    return W;
  }
  const GradedMap& d2 = res.maps[1];
  for (int b : d2.source.degrees) W.ambient.degrees.push_back(-b);
  W.kernel.ambient = W.ambient;
  W.image.ambient = W.ambient;
  const int r0 = d2.target.rank();
  const int r1 = d2.source.rank();
  for (int i = 0; i < r0; ++i) {
    ModuleElement row(r1);
    bool zero = true;
    for (int j = 0; j < r1; ++j) {
      row[j] = d2.columns[j][i];
      if (!row[j].is_zero()) zero = false;
    }
    if (!zero) W.image.generators.push_back(std::move(row));
  }
  if (res.maps.size() == 2) {
    for (int j = 0; j < r1; ++j) {
      ModuleElement e(r1);
      e[j] = Poly(1);
      W.kernel.generators.push_back(std::move(e));
    }
    return W;
  }
  const GradedMap& d3 = res.maps[2];
  FreeModule dual2;
  for (int b : d3.source.degrees) dual2.degrees.push_back(-b);
  std::vector<ModuleElement> rows;
  for (int j = 0; j < r1; ++j) {
    ModuleElement row(d3.source.rank());
    for (int k = 0; k < d3.source.rank(); ++k) row[k] = d3.columns[k][j];
    rows.push_back(std::move(row));
  }
  // kernel of the transpose = syzygies among the rows; zero rows give unit vectors
  std::vector<int> live;
  std::vector<ModuleElement> live_rows;
  for (int j = 0; j < r1; ++j) {
    bool zero = std::all_of(rows[j].begin(), rows[j].end(), [](const Poly& p) { return p.is_zero(); });
    if (zero) {
      ModuleElement e(r1);
      e[j] = Poly(1);
      W.kernel.generators.push_back(std::move(e));
    } else {
      live.push_back(j);
      live_rows.push_back(rows[j]);
    }
  }
  SyzygyModule syz = minimalize(syzygies(dual2, live_rows));
  for (const auto& s : syz.generators) {
    ModuleElement e(r1);
    for (std::size_t a = 0; a < live.size(); ++a) e[live[a]] = s[a];
    W.kernel.generators.push_back(std::move(e));
  }
  return W;
}

Ideal annihilator(const DualizingModule& W) {
  if (W.kernel.generators.empty()) return Ideal::unit();
  std::vector<Ideal> parts;
  for (const auto& k : W.kernel.generators) {
    if (W.image.generators.empty()) return Ideal();
    parts.push_back(module_quotient(W.image, k));
  }
  return intersection(parts);
}

std::pair<ProjScheme, DualizingModule> equidimensional_hull(const ProjScheme& S) {
  if (S.dimension() >= 2)
    throw MathError("equidimensional hull needs a scheme of dimension at most 1, got " +
                    std::to_string(S.dimension()));
  if (S.dimension() <= 0) return {ProjScheme(), DualizingModule{}};
  DualizingModule W = dualizing_module(S);
  Ideal ann = annihilator(W);
  ProjScheme C = saturate_irrelevant(ann);
  if (C.dimension() != 1) throw VerificationError("hull of a curve is not a curve");
  if (!contains(C.ideal(), S.ideal())) throw VerificationError("hull does not contain the scheme's ideal");
  return {C, W};
}

long residual_length(const ProjScheme& Z, const ProjScheme& C) {
  std::vector<Rational> a = Z.hilbert().hilbert_polynomial;
  const auto& b = C.hilbert().hilbert_polynomial;
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  for (std::size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) throw MathError("Hilbert polynomials differ by a non-constant; C is not the hull of Z");
  Rational r = a.empty() ? Rational(0) : a[0];
  if (r.get_den() != 1) throw VerificationError("non-integral residual length");
  return r.get_num().get_si();
}

long dualizing_degree_dims(const DualizingModule& W, int p) { return W.dimension(p - 4); }

ProjScheme truncated_subscheme(const ProjScheme& C, int d) {
  std::vector<Poly> low;
  for (const auto& g : C.generators())
    if (!g.is_zero() && *g.homogeneous_degree() <= d + 1) low.push_back(g);
  if (low.empty()) return ProjScheme(Ideal());
  return saturate_irrelevant(Ideal(low));
}

long hypersurface_containment(const ProjScheme& Z, int m) {
  if (m < 0) return 0;
  return num_monomials(m) - Z.hilbert().hf(m);
}

}  // namespace p3d
