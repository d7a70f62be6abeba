#include "p3d/io.hpp"

#include <fstream>
#include <sstream>

#include "p3d/errors.hpp"

namespace p3d {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OneForm read_form(const std::string& path) { return parse_one_form(read_text(path)); }

Ideal parse_ideal(const std::string& text) {
  std::vector<Poly> gens;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream parts(line);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.find_first_not_of(" \t\r") == std::string::npos) continue;
      Poly g = parse_poly(piece);
      if (!g.is_zero()) gens.push_back(std::move(g));
    }
  }
  if (gens.empty()) throw ParseError("ideal has no generators");
  Ideal I(std::move(gens));
  if (!I.is_homogeneous()) throw ParseError("ideal generators must be homogeneous");
  return I;
}

Ideal read_ideal(const std::string& path) { return parse_ideal(read_text(path)); }

Mat4 read_matrix(const std::string& path) { return parse_matrix(read_text(path)); }

Point parse_point(const std::string& text) {
  std::string s = text;
  auto l = s.find('('), r = s.rfind(')');
  if (l == std::string::npos || r == std::string::npos || r < l) throw ParseError("point must look like (a:b:c:d)");
  s = s.substr(l + 1, r - l - 1);
  Point p;
  std::istringstream in(s);
  std::string tok;
  int k = 0;
  while (std::getline(in, tok, ':')) {
    if (k >= kNumVars) throw ParseError("point has more than four coordinates");
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    p[k++] = parse_rational(tok);
  }
  if (k != kNumVars) throw ParseError("point needs four coordinates");
  bool zero = true;
  for (const auto& c : p)
    if (c != 0) zero = false;
  if (zero) throw ParseError("(0:0:0:0) is not a point");
  return p;
}

std::string to_string(const Point& p) {
  std::string out = "(";
  for (int i = 0; i < kNumVars; ++i) out += (i ? ":" : "") + to_string(p[i]);
  return out + ")";
}

Ideal point_ideal(const Point& p) {
  int pivot = 0;
  while (p[pivot] == 0) ++pivot;
  std::vector<Poly> gens;
  for (int i = 0; i < kNumVars; ++i) {
    if (i == pivot) continue;
    // p_pivot x_i - p_i x_pivot
    gens.push_back(Poly::variable(i).scaled(p[pivot]) - Poly::variable(pivot).scaled(p[i]));
  }
  return Ideal(std::move(gens));
}

Json to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return to_string(q);
}

Json to_json(const ProjScheme& s) {
  Json j;
  j["dimension"] = s.dimension();
  j["degree"] = s.degree();
  j["genus_or_length"] = s.genus_or_length();
  Json gens = Json::array();
  for (const auto& g : s.generators()) gens.push_back(to_string(g));
  j["generators"] = gens;
  return j;
}

Json to_json(const DistributionReport& r) {
  Json j;
  j["schema"] = kJsonSchema;
  j["degree"] = r.degree;
  j["singular_scheme"] = to_json(r.Z);
  Json c = to_json(r.C);
  c["arithmetic_genus"] = r.pa_C ? Json(*r.pa_C) : Json(nullptr);
  j["curve_part"] = c;
  j["residual_length"] = r.residual_length;
  j["c1"] = r.c1;
  j["c2"] = r.c2;
  j["c3"] = r.c3;
  j["c3_from_residual"] = r.c3_crosscheck;
  j["stability"] = to_string(r.stability.tag);
  Json h0;
  for (const auto& [k, v] : r.h0_table) h0[std::to_string(k)] = v;
  j["h0_tangent"] = h0;
  j["table_row"] = r.table_row ? Json(r.table_row->id()) : Json(nullptr);
  j["quadric_containment_dim"] = r.quadric_containment_dim;
  j["dualizing_h0_at_1"] = r.C.empty() ? 0 : dualizing_degree_dims(r.dualizing, 1);
  return j;
}

Json to_json(const ChernTriple& t) { return Json::array({t.c1, t.c2, t.c3}); }

Json to_json(const LinearClassification& c) {
  Json j;
  j["schema"] = kJsonSchema;
  j["case"] = static_cast<int>(c.which);
  j["conormal_chern"] = to_json(c.conormal);
  j["singular_scheme"] = to_json(c.scheme);
  return j;
}

Json to_json(const InducedDistribution& d) {
  Json j = to_json(d.report);
  j["conormal_chern"] = to_json(d.conormal);
  j["predicted_chern"] = to_json(d.predicted);
  j["computed_chern"] = to_json(d.computed);
  j["prediction_agrees"] = d.agrees;
  return j;
}

Json to_json(const TableCheck& t) {
  Json j;
  j["row"] = "(" + std::to_string(t.c2) + "," + std::to_string(t.c3) + ")";
  j["derivation"] = t.derivation;
  j["expected"] = to_string(t.expected);
  Json found = Json::array();
  for (const auto& s : t.found) found.push_back(to_string(s));
  j["found"] = found;
  j["pass"] = t.pass;
  j["flagged"] = t.flagged;
  if (t.flagged) j["printed"] = to_string(t.printed);
  return j;
}

std::string to_text(const DistributionReport& r) {
  std::ostringstream o;
  o << "degree " << r.degree << "\n";
  o << "singular scheme: dim " << r.Z.dimension() << ", degree " << r.Z.degree() << "\n";
  if (r.C.empty())
    o << "curve part: empty\n";
  else
    o << "curve part: degree " << r.deg_C << ", arithmetic genus " << *r.pa_C << "\n";
  o << "residual length " << r.residual_length << "\n";
  o << "chern classes (" << r.c1 << ", " << r.c2 << ", " << r.c3 << ")\n";
  o << "tangent sheaf " << to_string(r.stability.tag) << "\n";
  o << "h0(T(k)) for k=-1,0,1: " << r.h0_table.at(-1) << " " << r.h0_table.at(0) << " " << r.h0_table.at(1) << "\n";
  o << "quadrics through Z: " << r.quadric_containment_dim << "\n";
  if (r.table_row) o << "table row " << r.table_row->id() << "\n";
  return o.str();
}

}  // namespace p3d
