#include "p3d/syzygy_forms.hpp"

#include "p3d/errors.hpp"
#include "p3d/linalg.hpp"

namespace p3d {

OneForm form_from_syzygy(const std::vector<Poly>& F, const std::vector<Poly>& G) {
  if (F.size() != G.size()) throw MathError("syzygy length differs from the number of generators");
  std::optional<int> total;
  Poly check;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (F[j].is_zero() || G[j].is_zero()) continue;
    auto df = F[j].homogeneous_degree(), dg = G[j].homogeneous_degree();
    if (!df || !dg) throw MathError("syzygy entries must be homogeneous");
    if (total && *total != *df + *dg) throw MathError("syzygy is not homogeneous");
    total = *df + *dg;
    if (*dg == 0) throw MathError("syzygy has a nonzero constant entry");
    check += F[j] * G[j];
  }
  if (!check.is_zero()) throw MathError("not a syzygy: sum F_j G_j = " + to_string(check));
  PolyQuad w;
  for (std::size_t j = 0; j < F.size(); ++j) {
    if (F[j].is_zero() || G[j].is_zero()) continue;
    Rational s(1, *G[j].homogeneous_degree());
    for (int i = 0; i < kNumVars; ++i) w[i] += (F[j] * partial_derivative(G[j], i)).scaled(s);
  }
  bool zero = true;
  for (const auto& p : w)
    if (!p.is_zero()) zero = false;
  if (zero) throw MathError("syzygy gives the zero form");
  return primitive_part(w).first;
}

namespace {

std::vector<Poly> piece(const ProjScheme& C, int t) { return graded_piece(C.generators(), t); }

std::vector<PolyQuad> candidate_space(const ProjScheme& C, int d) {
  auto B = piece(C, d + 1);
  const long b = static_cast<long>(B.size());
  if (b == 0) return {};
  RatMatrix m = zero_matrix(num_monomials(d + 2), kNumVars * b);
  for (int i = 0; i < kNumVars; ++i)
    for (long j = 0; j < b; ++j)
      for (const auto& [mono, c] : B[j].terms()) m(monomial_index(mono * Monomial::variable(i)), i * b + j) += c;
  RatMatrix ker = kernel(std::move(m));
  std::vector<PolyQuad> out;
  for (Eigen::Index k = 0; k < ker.cols(); ++k) {
    PolyQuad q;
    for (int i = 0; i < kNumVars; ++i)
      for (long j = 0; j < b; ++j)
        if (ker(i * b + j, k) != 0) q[i] += B[j].scaled(ker(i * b + j, k));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

std::vector<OneForm> candidate_forms(const ProjScheme& C, int d, bool check) {
  if (d < 0) throw MathError("distribution degree must be non-negative");
  if (check)
    for (int e = 1; e <= d; ++e)
      if (hypersurface_containment(C, e) > 0)
        throw MathError("scheme lies on a hypersurface of degree " + std::to_string(e));
  std::vector<OneForm> out;
  for (auto& q : candidate_space(C, d)) out.emplace_back(std::move(q));
  return out;
}

Poly candidate_forms_common_factor(const ProjScheme& C, int d) {
  std::vector<Poly> all;
  for (const auto& q : candidate_space(C, d))
    for (const auto& p : q)
      if (!p.is_zero()) all.push_back(p);
  if (all.empty()) return Poly();
  return multivariate_gcd(all);
}

long linear_syzygy_count(const ProjScheme& C, int d) {
  auto B = piece(C, d + 1);
  if (B.empty()) return 0;
  SyzygyModule s = syzygy_module(B);
  if (s.generators.empty()) return 0;
  return submodule_dimension(s, d + 2);
}

}  // namespace p3d
