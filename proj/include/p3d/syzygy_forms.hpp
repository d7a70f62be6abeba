#pragma once

#include <vector>

#include "p3d/differential.hpp"
#include "p3d/scheme.hpp"

namespace p3d {

// omega = sum F_j (1/deg G_j) dG_j for a homogeneous syzygy (G_j) of (F_j),
// returned primitive.
OneForm form_from_syzygy(const std::vector<Poly>& F, const std::vector<Poly>& G);

// Basis of the twisted 1-forms of degree d whose coefficients lie in
// (I_C)_{d+1}. With check set, throws when C lies on a hypersurface of degree <= d.
std::vector<OneForm> candidate_forms(const ProjScheme& C, int d, bool check = true);
// Common factor of every coefficient of every candidate form.
Poly candidate_forms_common_factor(const ProjScheme& C, int d);
// dim of the degree-(d+2) piece of the syzygies among a basis of (I_C)_{d+1}
long linear_syzygy_count(const ProjScheme& C, int d);

}  // namespace p3d
