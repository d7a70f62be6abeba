#include "p3d/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

#include "p3d/errors.hpp"

namespace p3d {

namespace fs = std::filesystem;

namespace {

const std::string kSuffix = ".expect.json";

std::string fixture_path(const CorpusEntry& e, const char* key) {
  if (!e.spec.contains(key)) throw ParseError("entry " + e.id + " lacks '" + key + "'");
  return (fs::path(e.dir) / e.spec[key].get<std::string>()).string();
}

void compare(const Json& expected, const Json& actual, EntryResult& out) {
  for (const auto& [key, want] : expected.items()) {
    if (key == "residual_points") continue;
    Json got = actual.contains(key) ? actual[key] : Json(nullptr);
    if (got != want) out.diffs.push_back({key, want, got});
  }
}

void check_points(const Json& expected, const DistributionReport& r, EntryResult& out) {
  if (!expected.contains("residual_points")) return;
  Json found = Json::object();
  for (const auto& p : expected["residual_points"]) {
    const std::string text = p.get<std::string>();
    bool inside = in_residual(r, parse_point(text));
    found[text] = inside;
    if (!inside) out.diffs.push_back({"residual_points " + text, true, false});
  }
  out.actual["residual_points"] = found;
}

void run_distribution(const OneForm& w, const CorpusEntry& e, EntryResult& out, const DistributionReport& r,
                      const InducedDistribution* induced) {
  Json actual;
  actual["degree"] = r.degree;
  actual["singular_dimension"] = r.Z.dimension();
  actual["curve_degree"] = r.deg_C;
  actual["curve_genus"] = r.pa_C ? Json(*r.pa_C) : Json(nullptr);
  actual["residual_length"] = r.residual_length;
  actual["c1"] = r.c1;
  actual["c2"] = r.c2;
  actual["c3"] = r.c3;
  actual["stability"] = to_string(r.stability.tag);
  Json h0;
  for (const auto& [k, v] : r.h0_table) h0[std::to_string(k)] = v;
  actual["h0_tangent"] = h0;
  actual["table_row"] = r.table_row ? Json(r.table_row->id()) : Json(nullptr);
  actual["quadric_containment_dim"] = r.quadric_containment_dim;
  actual["dualizing_h0_at_1"] = r.C.empty() ? 0 : dualizing_degree_dims(r.dualizing, 1);
  actual["integrable"] = integrability(w).second;
  if (induced) {
    actual["conormal_chern"] = to_json(induced->conormal);
    actual["predicted_chern"] = to_json(induced->predicted);
    actual["prediction_agrees"] = induced->agrees;
  }
  out.actual = actual;
  if (r.table_row) out.table_row = r.table_row->id();
  const Json& expected = e.spec.at("expected");
  compare(expected, actual, out);
  check_points(expected, r, out);
}

void run_form(const CorpusEntry& e, EntryResult& out) {
  OneForm w = read_form(fixture_path(e, "form"));
  run_distribution(w, e, out, analyze(w), nullptr);
}

void run_recipe(const CorpusEntry& e, EntryResult& out) {
  Construction c = construct(e.spec.at("recipe").get<std::string>(), e.spec.at("seed").get<unsigned>());
  if (c.field) {
    InducedDistribution d = induce_distribution(*c.field, c.form, c.twist);
    run_distribution(c.form, e, out, d.report, &d);
  } else {
    run_distribution(c.form, e, out, analyze(c.form), nullptr);
  }
}

void run_multiline(const CorpusEntry& e, EntryResult& out) {
  ProjScheme C = saturate_irrelevant(read_ideal(fixture_path(e, "ideal")));
  const std::string kind = e.spec.at("multiple").get<std::string>();
  MultipleLine m;
  if (kind == "double")
    m = MultipleLine::double_line;
  else if (kind == "triple")
    m = MultipleLine::triple_line;
  else
    throw ParseError("multiple must be 'double' or 'triple'");
  AdmissibilityVerdict v = multiline_admissibility(C, e.spec.at("degree").get<int>(), m);
  Json actual;
  actual["curve_degree"] = C.degree();
  actual["curve_genus"] = C.genus_or_length();
  actual["admissible"] = v.admissible;
  actual["truncated_dimension"] = v.truncated_dimension;
  actual["truncated_degree"] = v.truncated_degree;
  actual["reason"] = v.reason;
  out.actual = actual;
  compare(e.spec.at("expected"), actual, out);
}

void run_linear(const CorpusEntry& e, EntryResult& out) {
  LinearClassification c = classify_linear(LinearField(read_matrix(fixture_path(e, "matrix"))));
  Json actual;
  actual["case"] = static_cast<int>(c.which);
  actual["singular_dimension"] = c.scheme.dimension();
  actual["singular_degree"] = c.scheme.degree();
  actual["genus_or_length"] = c.scheme.genus_or_length();
  actual["conormal_chern"] = to_json(c.conormal);
  out.actual = actual;
  compare(e.spec.at("expected"), actual, out);
}

void run_spectrum(const CorpusEntry& e, EntryResult& out) {
  const std::string row = e.spec.at("row").get<std::string>();
  for (const auto& t : verify_table()) {
    Json j = to_json(t);
    if (j["row"] != row) continue;
    out.actual = j;
    out.table_row = row;
    compare(e.spec.at("expected"), j, out);
    return;
  }
  throw ParseError("no spectrum check for row " + row);
}

}  // namespace

bool CorpusSummary::pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  for (const auto& r : rows)
    if (r.entries.empty()) return false;
  return true;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
  if (!fs::is_directory(dir)) throw ParseError("fixture directory '" + dir + "' not found");
  std::vector<CorpusEntry> out;
  for (const auto& f : fs::directory_iterator(dir)) {
    const std::string name = f.path().filename().string();
    if (name.size() <= kSuffix.size() || name.compare(name.size() - kSuffix.size(), kSuffix.size(), kSuffix) != 0)
      continue;
    CorpusEntry e;
    e.id = name.substr(0, name.size() - kSuffix.size());
    e.dir = dir;
    try {
      e.spec = Json::parse(read_text(f.path().string()));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError(name + ": " + ex.what());
    }
    if (e.spec.value("schema", 0) != kJsonSchema) throw ParseError(name + ": unsupported schema");
    e.kind = e.spec.at("kind").get<std::string>();
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

EntryResult run_entry(const CorpusEntry& e) {
  EntryResult out;
  out.id = e.id;
  out.kind = e.kind;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (e.kind == "form")
      run_form(e, out);
    else if (e.kind == "recipe")
      run_recipe(e, out);
    else if (e.kind == "multiline")
      run_multiline(e, out);
    else if (e.kind == "linear")
      run_linear(e, out);
    else if (e.kind == "spectrum")
      run_spectrum(e, out);
    else
      throw ParseError("unknown entry kind '" + e.kind + "'");
    out.pass = out.diffs.empty();
  } catch (const std::exception& ex) {
    out.error = ex.what();
    out.pass = false;
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CorpusSummary verify_corpus(const std::string& dir, const std::vector<std::string>& only, int jobs) {
  std::vector<CorpusEntry> all = load_corpus(dir);
  std::vector<CorpusEntry> todo;
  for (const auto& id : only)
    if (std::none_of(all.begin(), all.end(), [&](const auto& e) { return e.id == id; }))
      throw ParseError("no corpus entry '" + id + "'");
  for (auto& e : all)
    if (only.empty() || std::find(only.begin(), only.end(), e.id) != only.end()) todo.push_back(std::move(e));

  CorpusSummary s;
  s.full = only.empty();
  s.entries.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < todo.size(); i = next++) s.entries[i] = run_entry(todo[i]);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  if (s.full) {
    for (const auto& row : degree_two_table()) {
      RowCoverage c{row.id(), {}};
      for (const auto& e : s.entries)
        if (e.pass && e.table_row == row.id()) c.entries.push_back(e.id);
      s.rows.push_back(std::move(c));
    }
  }
  return s;
}

Json to_json(const CorpusSummary& s) {
  Json j;
  j["schema"] = kJsonSchema;
  j["pass"] = s.pass();
  Json entries = Json::array();
  for (const auto& e : s.entries) {
    Json x;
    x["id"] = e.id;
    x["kind"] = e.kind;
    x["pass"] = e.pass;
    x["seconds"] = e.seconds;
    if (!e.error.empty()) x["error"] = e.error;
    Json diffs = Json::array();
    for (const auto& d : e.diffs) diffs.push_back({{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}});
    x["diffs"] = diffs;
    x["actual"] = e.actual;
    entries.push_back(x);
  }
  j["entries"] = entries;
  if (s.full) {
    Json rows = Json::array();
    for (const auto& r : s.rows) rows.push_back({{"row", r.row}, {"covered_by", r.entries}});
    j["table_rows"] = rows;
  }
  return j;
}

std::string to_text(const CorpusSummary& s) {
  std::ostringstream o;
  for (const auto& e : s.entries) {
    o << (e.pass ? "PASS " : "FAIL ") << e.id << " [" << e.kind << "]";
    if (e.table_row) o << " row " << *e.table_row;
    o << " " << static_cast<long>(e.seconds * 1000) << " ms\n";
    if (!e.error.empty()) o << "    error: " << e.error << "\n";
    for (const auto& d : e.diffs)
      o << "    " << d.field << ": expected " << d.expected.dump() << ", got " << d.actual.dump() << "\n";
  }
  if (s.full) {
    o << "table rows:\n";
    for (const auto& r : s.rows) {
      o << "  " << (r.entries.empty() ? "MISSING " : "covered ") << r.row;
      for (const auto& id : r.entries) o << " " << id;
      o << "\n";
    }
  }
  o << (s.pass() ? "corpus passed" : "corpus FAILED") << "\n";
  return o.str();
}

}  // namespace p3d
