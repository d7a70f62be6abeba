#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "p3d/differential.hpp"

namespace p3d {

// Seeded source of small integers, identical on every platform.
class SmallInts {
 public:
  explicit SmallInts(unsigned seed) : gen_(seed) {}
  // uniform in [-r, r]
  int operator()(int r);
  Poly poly(int degree, int r);
  // iota_R of a 2-form whose entries are random of the given degree; lies in Omega^1(degree + 2)
  PolyQuad twisted_form(int degree, int r);

 private:
  // the raw engine output is fixed by the standard; distributions are not
  std::mt19937 gen_;
};

struct Construction {
  std::string recipe;
  unsigned seed = 0;
  OneForm form;
  // set when the distribution is induced by a foliation by curves
  std::optional<VectorField> field;
  int twist = 0;
};

struct RecipeInfo {
  std::string name;
  std::string summary;
};

const std::vector<RecipeInfo>& recipes();
// Throws ParseError for an unknown recipe and MathError when the seed gives a degenerate instance.
Construction construct(const std::string& recipe, unsigned seed);

// Basis, modulo the radial field, of the degree-k fields killed by every form.
std::vector<VectorField> fields_killed_by(const std::vector<PolyQuad>& forms, int k);
// Twisted 1-forms with coefficients of degree e killing every field.
std::vector<OneForm> forms_killing(const std::vector<PolyQuad>& fields, int e);

}  // namespace p3d
