#pragma once

#include <array>
#include <string>
#include <utility>

#include "p3d/groebner.hpp"

namespace p3d {

using PolyQuad = std::array<Poly, kNumVars>;

// Twisted 1-form sum A_i dx_i with sum A_i x_i = 0 and coefficients of
// common degree d+1.
class OneForm {
 public:
  // Throws MathError unless the coefficients descend to P^3.
  explicit OneForm(PolyQuad coeffs);

  const PolyQuad& coeffs() const { return coeffs_; }
  const Poly& operator[](int i) const { return coeffs_[i]; }
  // the distribution degree d
  int degree() const { return degree_; }

  bool operator==(const OneForm& o) const { return coeffs_ == o.coeffs_; }

 private:
  PolyQuad coeffs_;
  int degree_ = 0;
};

// Homogeneous vector field sum F_i d/dx_i of degree k, stored as the unique
// divergence-free representative modulo multiples of the radial field.
class VectorField {
 public:
  explicit VectorField(PolyQuad comps);

  const PolyQuad& comps() const { return comps_; }
  const Poly& operator[](int i) const { return comps_[i]; }
  int degree() const { return degree_; }
  // the field is a multiple of the radial field
  bool is_radial() const;

 private:
  PolyQuad comps_;
  int degree_ = 0;
};

// Components against dx^dy^dz, dx^dy^dw, dx^dz^dw, dy^dz^dw.
struct ThreeForm {
  PolyQuad comps;
  bool is_zero() const;
};

// Common degree of nonzero entries; throws on mixed or inhomogeneous input.
int common_degree(const PolyQuad& q, const char* what);

Poly radial_contraction(const PolyQuad& coeffs);
Ideal singular_ideal(const OneForm& w);
// Divides out the gcd of the coefficients.
std::pair<OneForm, Poly> primitive_part(const PolyQuad& coeffs);
std::pair<ThreeForm, bool> integrability(const OneForm& w);
Poly contract(const OneForm& w, const VectorField& v);
Poly contract(const PolyQuad& w, const PolyQuad& v);
Poly divergence(const PolyQuad& v);
PolyQuad radial_field(const Poly& multiplier = Poly(1));

// Primitive form whose kernel is spanned by the two fields (and the radial one).
OneForm form_from_fields(const VectorField& a, const VectorField& b);

// Either "A0: ..." to "A3: ..." lines or one expression in dx, dy, dz, dw.
OneForm parse_one_form(const std::string& text);
// Either "F0: ..." to "F3: ..." lines or one expression in d/dx written as dx, ...
PolyQuad parse_quad(const std::string& text, char label);
VectorField parse_vector_field(const std::string& text);
std::string render_quad(const PolyQuad& q, char label);

}  // namespace p3d
