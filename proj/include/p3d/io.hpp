#pragma once

#include <array>
#include <string>

#include <json.hpp>

#include "p3d/constructions.hpp"
#include "p3d/distribution.hpp"
#include "p3d/foliation1d.hpp"
#include "p3d/spectra.hpp"

namespace p3d {

using Json = nlohmann::ordered_json;
using Point = std::array<Rational, kNumVars>;

constexpr int kJsonSchema = 1;

// Throws ParseError when the file cannot be read.
std::string read_text(const std::string& path);
OneForm read_form(const std::string& path);
// Generators separated by commas or newlines; '#' starts a comment.
Ideal parse_ideal(const std::string& text);
Ideal read_ideal(const std::string& path);
Mat4 read_matrix(const std::string& path);

// "(a:b:c:d)" with rational entries
Point parse_point(const std::string& text);
std::string to_string(const Point& p);
// Ideal of a single point.
Ideal point_ideal(const Point& p);

Json to_json(const Rational& q);
Json to_json(const ProjScheme& s);
Json to_json(const DistributionReport& r);
Json to_json(const LinearClassification& c);
Json to_json(const ChernTriple& t);
Json to_json(const InducedDistribution& d);
Json to_json(const TableCheck& t);

std::string to_text(const DistributionReport& r);

}  // namespace p3d
