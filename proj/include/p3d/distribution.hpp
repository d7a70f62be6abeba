#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>

#include "p3d/differential.hpp"
#include "p3d/scheme.hpp"

namespace p3d {

enum class Stability { unstable, strictly_semistable, stable };
std::string to_string(Stability s);

struct StabilityClass {
  Stability tag = Stability::stable;
  // sections of the normalized tangent sheaf twisted by -1 and 0
  long h0_minus1 = 0;
  long h0_zero = 0;
};

struct TableRow {
  int c2;
  int c3;
  // empty when the tangent sheaf splits
  std::optional<std::vector<int>> spectrum;
  std::string curve;
  std::string id() const;
};

// The degree-2 classification table.
const std::vector<TableRow>& degree_two_table();

struct DistributionReport {
  int degree = 0;
  ProjScheme Z;
  ProjScheme C;
  DualizingModule dualizing;
  long residual_length = 0;
  long deg_C = 0;
  // arithmetic genus of C; unset when C is empty
  std::optional<long> pa_C;
  long c1 = 0, c2 = 0, c3 = 0;
  long c3_crosscheck = 0;
  StabilityClass stability;
  std::optional<TableRow> table_row;
  long quadric_containment_dim = 0;
  std::map<int, long> h0_table;
};

DistributionReport analyze(const OneForm& w);
// h^0(T_D(k)): fields of degree k+1 killed by w, modulo radial multiples
long section_dims(const OneForm& w, int k);
StabilityClass stability_class(const OneForm& w, long c2, long c3);
// Throws MathError for pairs ruled out by the classification.
TableRow classify_row(long c2, long c3);
TableRow classify_row(const DistributionReport& r);

// Every generator of I vanishes at p.
bool vanishes_at(const Ideal& I, const std::array<Rational, kNumVars>& p);
// p lies on Z but off the curve part.
bool in_residual(const DistributionReport& r, const std::array<Rational, kNumVars>& p);

enum class MultipleLine { double_line, triple_line };

struct AdmissibilityVerdict {
  bool admissible = true;
  std::string reason;
  int truncated_dimension = 1;
  long truncated_degree = 0;
};

AdmissibilityVerdict multiline_admissibility(const ProjScheme& C, int d, MultipleLine kind);

// Multiple-line ideals supported on x = y = 0.
// (x^2, xy, y^2, x p + y q) with deg p = deg q = -genus.
Ideal double_line_ideal(int genus);
// (x^2, xy, y^3, x q - y^2 p) with deg q = b, deg p = b - 1.
Ideal triple_line_ideal_a_minus1(int b);

}  // namespace p3d
