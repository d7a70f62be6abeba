#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "p3d/poly.hpp"

namespace p3d {

class Ideal {
 public:
  Ideal() = default;
  explicit Ideal(std::vector<Poly> generators);
  static Ideal unit();

  const std::vector<Poly>& generators() const { return gens_; }
  bool is_homogeneous() const;

  // Reduced Groebner basis in grevlex, computed once and shared by copies.
  const std::vector<Poly>& basis() const;
  bool has_cached_basis() const;

  bool is_zero() const;
  bool is_unit() const;

 private:
  struct Cache {
    std::once_flag once;
    std::vector<Poly> basis;
    bool ready = false;
  };

  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

std::vector<Poly> groebner_basis(const std::vector<Poly>& gens, const TermOrder& order = TermOrder());
Ideal groebner_basis(const Ideal& I);
Poly normal_form(const Poly& f, const Ideal& I);
bool contains(const Ideal& I, const Poly& f);
bool contains(const Ideal& I, const Ideal& J);
bool same_ideal(const Ideal& I, const Ideal& J);
bool is_groebner_basis(const std::vector<Poly>& basis, const TermOrder& order = TermOrder());

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal intersection(const Ideal& I, const Ideal& J);
Ideal intersection(const std::vector<Ideal>& ideals);
// I : (f)
Ideal quotient(const Ideal& I, const Poly& f);
Ideal quotient(const Ideal& I, const Ideal& J);
// I : J^infinity, iterating quotients until two consecutive ideals agree
Ideal saturation(const Ideal& I, const Ideal& J);
// I : x_var^infinity for homogeneous I
Ideal saturation_by_variable(const Ideal& I, int var);
Ideal irrelevant_ideal();
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// Minimal homogeneous generators, in order of increasing degree.
std::vector<Poly> minimal_generators(const Ideal& I);

Poly multivariate_gcd(const std::vector<Poly>& fs);

// ---- modules

// F = sum of R(-degrees[i]); deg(m e_i) = deg m + degrees[i]
struct FreeModule {
  std::vector<int> degrees;
  int rank() const { return static_cast<int>(degrees.size()); }
};

using ModuleElement = std::vector<Poly>;

struct Submodule {
  FreeModule ambient;
  std::vector<ModuleElement> generators;
};

using SyzygyModule = Submodule;

// Degree of a nonzero homogeneous element, nullopt if zero or inhomogeneous.
std::optional<int> element_degree(const FreeModule& F, const ModuleElement& v);

// Reduced module basis in term-over-position grevlex with the module shifts.
std::vector<ModuleElement> module_basis(const Submodule& M);
ModuleElement module_normal_form(const ModuleElement& v, const Submodule& M);
bool module_contains(const Submodule& M, const ModuleElement& v);

// Syzygies of homogeneous elements of F; lives in sum of R(-deg g_i).
SyzygyModule syzygies(const FreeModule& F, const std::vector<ModuleElement>& gens);
SyzygyModule syzygy_module(const std::vector<Poly>& gens);
Submodule minimalize(const Submodule& M);
// {r : r*v in M}
Ideal module_quotient(const Submodule& M, const ModuleElement& v);
// dimension of the degree-p piece of F/M
long quotient_dimension(const Submodule& M, int p);
// dimension of the degree-p piece of M
long submodule_dimension(const Submodule& M, int p);

// ---- resolutions

struct GradedMap {
  FreeModule source;
  FreeModule target;
  // columns[j] is the image of the j-th source basis vector
  std::vector<ModuleElement> columns;
};

struct Resolution {
  // maps[0]: F0 -> R (the generators), maps[k]: Fk -> F(k-1)
  std::vector<GradedMap> maps;
  std::vector<int> ranks() const;
  // betti[k] = generator degrees of Fk
  std::vector<std::vector<int>> betti() const;
};

Resolution free_resolution(const Ideal& I, int length_bound);

// ---- Hilbert data

struct HilbertData {
  // hilbert_function[t] for t = 0..size-1
  std::vector<long> hilbert_function;
  // coefficients c_k of HP(t) = sum c_k t^k
  std::vector<Rational> hilbert_polynomial;
  // numerator N(t) of the Hilbert series N(t)/(1-t)^4
  std::vector<long> series_numerator;
  int dimension = -1;
  long degree = 0;
  // arithmetic genus for curves, length for points, 0 otherwise
  long genus_or_length = 0;
  int regularity_index = 0;

  long hf(int t) const;
  Rational hp(int t) const;
};

HilbertData hilbert_data(const Ideal& I);
// Hilbert series numerator of R / (monomials)
std::vector<long> hilbert_numerator(const std::vector<Monomial>& monomials);

}  // namespace p3d
