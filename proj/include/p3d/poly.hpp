#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "p3d/rational.hpp"

namespace p3d {

inline constexpr int kNumVars = 4;

class Monomial {
 public:
  Monomial() = default;
  Monomial(int e0, int e1, int e2, int e3);
  static Monomial variable(int i, int power = 1);

  int operator[](int i) const { return exp_[i]; }
  int degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  Monomial operator*(const Monomial& o) const;
  // Requires o | *this.
  Monomial operator/(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
  bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }
  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kNumVars> exp_{};
  std::uint16_t deg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// grevlex with x > y > z > w; -1, 0, 1 like strcmp
int grevlex_compare(const Monomial& a, const Monomial& b);

class TermOrder {
 public:
  enum class Kind { grevlex, lex, elimination, weighted };

  TermOrder() = default;
  static TermOrder grevlex();
  // grevlex in which `var` is the smallest variable
  static TermOrder grevlex_last(int var);
  static TermOrder lex();
  // the listed variables are eliminated (they dominate the rest)
  static TermOrder elimination(const std::vector<int>& vars);
  static TermOrder weighted(const std::array<int, kNumVars>& weights);

  int compare(const Monomial& a, const Monomial& b) const;
  bool graded() const { return kind_ == Kind::grevlex || kind_ == Kind::weighted; }
  int weight(const Monomial& m) const;
  Kind kind() const { return kind_; }
  bool is_default() const;
  const std::array<int, kNumVars>& permutation() const { return perm_; }
  int block() const { return block_; }

  bool operator==(const TermOrder& o) const;

 private:
  int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const;

  Kind kind_ = Kind::grevlex;
  // perm_[k] is the variable at position k, position 0 most significant
  std::array<int, kNumVars> perm_{0, 1, 2, 3};
  int block_ = 0;
  std::array<int, kNumVars> weights_{1, 1, 1, 1};
};

class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  explicit Poly(const Rational& c);
  explicit Poly(long c) : Poly(Rational(c)) {}
  static Poly variable(int i);
  static Poly monomial(const Monomial& m, const Rational& c = 1);
  // Sums duplicates, drops zeros, sorts grevlex-descending.
  static Poly from_terms(std::vector<Term> terms);
  // Trusted: already sorted, distinct, nonzero.
  static Poly from_sorted_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::optional<int> homogeneous_degree() const { return hdeg_; }
  int total_degree() const;
  const Term& leading_term() const { return terms_.front(); }
  Rational coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& c) const;
  Poly times_monomial(const Monomial& m, const Rational& c = 1) const;
  Poly pow(int n) const;
  // Divides by the leading coefficient.
  Poly monic() const;

  Rational evaluate(const std::array<Rational, kNumVars>& point) const;
  // Divisible by this variable power.
  int min_exponent(int var) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void set_degree_flag();

  std::vector<Term> terms_;
  std::optional<int> hdeg_;
};

Poly partial_derivative(const Poly& f, int var);

// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);

Poly parse_poly(const std::string& text);
std::string to_string(const Poly& f);
std::string variable_name(int i);

// All monomials of the given degree in grevlex-descending order.
const std::vector<Monomial>& monomials_of_degree(int degree);
// Index of m inside monomials_of_degree(m.degree()).
int monomial_index(const Monomial& m);
long binomial(long n, long k);
// dim of degree-t polynomials in 4 variables
long num_monomials(int t);

}  // namespace p3d
