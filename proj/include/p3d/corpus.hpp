#pragma once

#include <optional>
#include <string>
#include <vector>

#include "p3d/io.hpp"

namespace p3d {

// One fixtures/<id>.expect.json file. Kinds: form, recipe, multiline, linear, spectrum.
struct CorpusEntry {
  std::string id;
  std::string kind;
  std::string dir;
  Json spec;
};

struct FieldDiff {
  std::string field;
  Json expected;
  Json actual;
};

struct EntryResult {
  std::string id;
  std::string kind;
  bool pass = false;
  std::vector<FieldDiff> diffs;
  std::string error;
  std::optional<std::string> table_row;
  double seconds = 0;
  Json actual;
};

struct RowCoverage {
  std::string row;
  std::vector<std::string> entries;
};

struct CorpusSummary {
  std::vector<EntryResult> entries;
  // filled for full runs only
  std::vector<RowCoverage> rows;
  bool full = false;
  bool pass() const;
};

std::vector<CorpusEntry> load_corpus(const std::string& dir);
EntryResult run_entry(const CorpusEntry& e);
// Entries run on `jobs` worker threads; results are ordered by id.
CorpusSummary verify_corpus(const std::string& dir, const std::vector<std::string>& only, int jobs);

Json to_json(const CorpusSummary& s);
std::string to_text(const CorpusSummary& s);

}  // namespace p3d
