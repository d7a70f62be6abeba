#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p3d/groebner.hpp"

namespace p3d {

// Closed subscheme of P^3 given by a saturated homogeneous ideal.
class ProjScheme {
 public:
  ProjScheme() : ProjScheme(Ideal::unit()) {}
  // The ideal must already be saturated; use saturate_irrelevant otherwise.
  explicit ProjScheme(Ideal saturated);

  const Ideal& ideal() const { return ideal_; }
  const HilbertData& hilbert() const { return hilbert_; }
  // -1 for the empty scheme
  int dimension() const { return hilbert_.dimension; }
  long degree() const { return hilbert_.degree; }
  long genus_or_length() const { return hilbert_.genus_or_length; }
  bool empty() const { return hilbert_.dimension < 0; }
  const std::vector<Poly>& generators() const { return generators_; }

 private:
  Ideal ideal_;
  HilbertData hilbert_;
  std::vector<Poly> generators_;
};

struct CurveInvariants {
  int dimension = -1;
  long degree = 0;
  long genus_or_length = 0;
};

// Graded module Ext^2(R/I, R) presented as K / Im inside a free module, with
// K = ker of the dual third differential and Im = image of the dual second.
struct DualizingModule {
  FreeModule ambient;
  Submodule kernel;
  Submodule image;
  // dimension of the degree-q piece of K / Im
  long dimension(int q) const;
};

ProjScheme saturate_irrelevant(const Ideal& I);
CurveInvariants curve_invariants(const ProjScheme& S);
DualizingModule dualizing_module(const ProjScheme& S);
// Annihilator of a presented module K / Im.
Ideal annihilator(const DualizingModule& W);
// Pure one-dimensional part of S and the module Ext^2(R/I_S, R).
std::pair<ProjScheme, DualizingModule> equidimensional_hull(const ProjScheme& S);
// HP(R/I_Z) - HP(R/I_C), required to be constant
long residual_length(const ProjScheme& Z, const ProjScheme& C);
// h^0(omega_C(p)) for the curve part underlying W
long dualizing_degree_dims(const DualizingModule& W, int p);
// saturation of the ideal generated by the elements of I_C of degree <= d+1
ProjScheme truncated_subscheme(const ProjScheme& C, int d);
// dim of the degree-m piece of the saturated ideal
long hypersurface_containment(const ProjScheme& Z, int m);

}  // namespace p3d
