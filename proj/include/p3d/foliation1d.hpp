#pragma once

#include <vector>

#include "p3d/distribution.hpp"
#include "p3d/linalg.hpp"

namespace p3d {

// Traceless 4x4 matrix; the field sum a_ij x_j d/dx_i.
class LinearField {
 public:
  explicit LinearField(const Mat4& traceless);
  const Mat4& matrix() const { return a_; }
  VectorField field() const;

 private:
  Mat4 a_;
};

struct ChernTriple {
  long c1 = 0, c2 = 0, c3 = 0;
  bool operator==(const ChernTriple& o) const { return c1 == o.c1 && c2 == o.c2 && c3 == o.c3; }
};

enum class LinearCase { generic = 1, one_plane_eigenspace = 2, two_plane_eigenspaces = 3 };

struct LinearClassification {
  LinearCase which = LinearCase::generic;
  // conormal sheaf
  ChernTriple conormal;
  ProjScheme scheme;
};

ProjScheme vf_singular_scheme(const VectorField& v);
LinearField traceless_normalize(const Mat4& a);
LinearClassification classify_linear(const LinearField& f);
// Chern classes of the conormal sheaf of a degree-k field, read off the
// Hilbert polynomial of its singular scheme.
ChernTriple conormal_chern(int k, const ProjScheme& W);
std::vector<OneForm> annihilator_form_space(const VectorField& v, int l);
ChernTriple predicted_chern(int k, int l, long c2N, long c3N);

struct InducedDistribution {
  DistributionReport report;
  ChernTriple computed;
  ChernTriple predicted;
  ChernTriple conormal;
  bool agrees = false;
};

InducedDistribution induce_distribution(const VectorField& v, const OneForm& sigma, int l);

Mat4 parse_matrix(const std::string& text);

}  // namespace p3d
