#include "p3d/linalg.hpp"

#include "p3d/errors.hpp"

namespace p3d {

RatMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  RatMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = 0;
  return m;
}

Eigen::Index rank(RatMatrix m) { return static_cast<Eigen::Index>(rref_in_place(m).size()); }

RatMatrix kernel(RatMatrix m) {
  auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMatrix k = zero_matrix(m.cols(), static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    Eigen::Index col = free_cols[f];
    k(col, f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -m(r, col);
  }
  return k;
}

RatVector coefficients(const Poly& f, int degree) {
  RatVector v(num_monomials(degree));
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = 0;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() != degree) throw MathError("coefficient vector of a polynomial of the wrong degree");
    v(monomial_index(m)) = c;
  }
  return v;
}

Poly from_coefficients(const RatVector& v, Eigen::Index offset, int degree) {
  const auto& ms = monomials_of_degree(degree);
  std::vector<Poly::Term> terms;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    const Rational& c = v(offset + static_cast<Eigen::Index>(i));
    if (c != 0) terms.emplace_back(ms[i], c);
  }
  return Poly::from_sorted_terms(std::move(terms));
}

std::vector<Poly> graded_piece(const std::vector<Poly>& gens, int t) {
  std::vector<Poly> spanning;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto d = g.homogeneous_degree();
    if (!d) throw MathError("graded piece needs homogeneous generators");
    if (*d > t) continue;
    for (const auto& m : monomials_of_degree(t - *d)) spanning.push_back(g.times_monomial(m));
  }
  const Eigen::Index n = num_monomials(t);
  if (spanning.empty()) return {};
  RatMatrix m(static_cast<Eigen::Index>(spanning.size()), n);
  for (std::size_t i = 0; i < spanning.size(); ++i) m.row(i) = coefficients(spanning[i], t).transpose();
  auto pivots = rref_in_place(m);
  std::vector<Poly> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(from_coefficients(m.row(r).transpose(), 0, t));
  return out;
}

}  // namespace p3d
