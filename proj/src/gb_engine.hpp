#pragma once

#include <map>
#include <vector>

#include "p3d/poly.hpp"

namespace p3d::gb {

struct Term {
  Monomial m;
  int comp = 0;
  Rational c;
};

// Sorted descending in the module order, no zero coefficients.
using Vec = std::vector<Term>;

struct Order {
  TermOrder mono;
  // degree of the basis vector e_i
  std::vector<int> shift;
  // lower block index dominates; components in one block compared by pot/top
  std::vector<int> block;
  bool pot = false;

  static Order top(int rank, std::vector<int> shifts = {});
  int compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  int degree(const Monomial& m, int c) const { return m.degree() + shift[c]; }
};

struct Options {
  bool reduce_tails = true;
  // homogeneous input only: pairs of higher degree are dropped, so the
  // result is a basis for degrees up to the bound
  int degree_bound = 1 << 29;
};

// Reduced Groebner basis, sorted ascending in the order, monic.
std::vector<Vec> groebner(const std::vector<Vec>& gens, const Order& order, const Options& opt = {});

// Full normal form of f with respect to the (monic) basis.
Vec normal_form(const Vec& f, const std::vector<Vec>& basis, const Order& order);

// Every S-pair of the basis reduces to zero.
bool is_groebner(const std::vector<Vec>& basis, const Order& order);

Vec sort_vec(Vec v, const Order& order);
Vec monic(Vec v);

long step_limit();

}  // namespace p3d::gb
