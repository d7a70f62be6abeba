#pragma once

#include <Eigen/Core>
#include <vector>

#include "p3d/poly.hpp"
#include "p3d/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace p3d {

using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using Mat4 = Eigen::Matrix<Rational, 4, 4>;

RatMatrix zero_matrix(Eigen::Index rows, Eigen::Index cols);

// Reduced row echelon form in place; returns pivot columns.
template <typename Derived>
std::vector<Eigen::Index> rref_in_place(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) m.row(p).swap(m.row(row));
    Scalar inv = 1 / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j)
      if (m(row, j) != 0) m(row, j) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Scalar f = m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j)
        if (m(row, j) != 0) m(r, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Eigen::Index rank(RatMatrix m);
// Columns form a basis of {v : m v = 0}.
RatMatrix kernel(RatMatrix m);

// Coefficient vector of a homogeneous polynomial of the given degree in the
// monomials_of_degree() basis.
RatVector coefficients(const Poly& f, int degree);
Poly from_coefficients(const RatVector& v, Eigen::Index offset, int degree);

// Basis (as polynomials) of the degree-t piece of the ideal generated by gens.
std::vector<Poly> graded_piece(const std::vector<Poly>& gens, int t);

}  // namespace p3d
