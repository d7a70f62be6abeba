#pragma once

#include <map>
#include <string>
#include <vector>

namespace p3d {

// Sorted ascending.
using Spectrum = std::vector<int>;

struct SpectrumConstraints {
  bool stable = false;
  bool locally_free = false;
  // 1 may not occur (no quadric through the singular scheme)
  bool forbid_value_one = false;
  std::vector<int> h1_zero_at;
  std::vector<int> h2_zero_at;
  std::map<int, long> h2_at_most;
  std::map<int, long> h2_equal;
};

// h^1(F(p)) for p <= -1
long spectrum_h1(const Spectrum& s, int p);
// h^2(F(p)) for p >= -3
long spectrum_h2(const Spectrum& s, int p);

bool spectrum_admissible(const Spectrum& s, long c3, const SpectrumConstraints& cons);
std::vector<Spectrum> enumerate_spectra(int c2, long c3, const SpectrumConstraints& cons);

std::string to_string(const Spectrum& s);

struct TableCheck {
  int c2;
  long c3;
  SpectrumConstraints constraints;
  // where the constraint set comes from
  std::string derivation;
  Spectrum expected;
  std::vector<Spectrum> found;
  bool pass = false;
  // the printed table entry differs from the derived one
  bool flagged = false;
  Spectrum printed;
};

std::vector<TableCheck> verify_table();

}  // namespace p3d
