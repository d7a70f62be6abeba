// p3dist: analysis and construction of codimension one distributions on P^3.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse error, 3 math or resource error.

#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "p3d/corpus.hpp"
#include "p3d/errors.hpp"

using namespace p3d;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kParse = 2;
constexpr int kMath = 3;

std::pair<int, long> parse_bound(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) throw ParseError("expected P:N, got '" + s + "'");
  try {
    return {std::stoi(s.substr(0, c)), std::stol(s.substr(c + 1))};
  } catch (const std::exception&) {
    throw ParseError("expected P:N, got '" + s + "'");
  }
}

void print(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Codimension one distributions on P^3: singular schemes, Chern classes, spectra"};
  app.require_subcommand(1);
  bool json = false;

  std::string analyze_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "analyze the distribution given by a twisted 1-form file");
  analyze_cmd->add_option("form", analyze_path, "form file (A0..A3 lines or a dx-expression)")->required();
  analyze_cmd->add_flag("--json", json, "JSON output");

  std::string recipe;
  unsigned seed = 1;
  bool list_recipes = false;
  auto* construct_cmd = app.add_subcommand("construct", "build a distribution from a seeded recipe and analyze it");
  construct_cmd->add_option("recipe", recipe, "recipe name");
  construct_cmd->add_option("--seed", seed, "random seed")->capture_default_str();
  construct_cmd->add_flag("--list", list_recipes, "list recipes");
  construct_cmd->add_flag("--json", json, "JSON output");

  int c2 = 0;
  long c3 = 0;
  SpectrumConstraints cons;
  std::vector<std::string> at_most, equal;
  bool table = false;
  auto* spectra_cmd = app.add_subcommand("spectra", "enumerate spectra of rank-2 reflexive sheaves with c1 = 0");
  spectra_cmd->add_option("c2", c2, "second Chern class");
  spectra_cmd->add_option("c3", c3, "third Chern class");
  spectra_cmd->add_flag("--stable", cons.stable, "stable sheaf");
  spectra_cmd->add_flag("--locally-free", cons.locally_free, "vector bundle (c3 = 0)");
  spectra_cmd->add_flag("--no-one", cons.forbid_value_one, "1 does not occur");
  spectra_cmd->add_option("--h1-zero", cons.h1_zero_at, "h1(F(p)) = 0 at p");
  spectra_cmd->add_option("--h2-zero", cons.h2_zero_at, "h2(F(p)) = 0 at p");
  spectra_cmd->add_option("--h2-at-most", at_most, "h2(F(p)) <= n, given as p:n");
  spectra_cmd->add_option("--h2-equal", equal, "h2(F(p)) = n, given as p:n");
  spectra_cmd->add_flag("--table", table, "check every non-split row of the degree-two table");
  spectra_cmd->add_flag("--json", json, "JSON output");

  std::string matrix_path;
  auto* linear_cmd = app.add_subcommand("classify-linear", "classify the degree-one foliation by curves of a 4x4 matrix");
  linear_cmd->add_option("matrix", matrix_path, "matrix file, four rows of four rationals")->required();
  linear_cmd->add_flag("--json", json, "JSON output");

  std::string fixtures = "fixtures";
  std::vector<std::string> only;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  auto* corpus_cmd = app.add_subcommand("verify-corpus", "run every fixture and compare with its expectations");
  corpus_cmd->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();
  corpus_cmd->add_option("--only", only, "entry ids to run");
  corpus_cmd->add_option("--jobs,-j", jobs, "worker threads");
  corpus_cmd->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*analyze_cmd) {
      DistributionReport r = analyze(read_form(analyze_path));
      if (json)
        print(to_json(r));
      else
        std::cout << to_text(r);
      return kOk;
    }

    if (*construct_cmd) {
      if (list_recipes || recipe.empty()) {
        for (const auto& r : recipes()) std::cout << r.name << "  " << r.summary << "\n";
        return recipe.empty() && !list_recipes ? kParse : kOk;
      }
      Construction c = construct(recipe, seed);
      if (c.field) {
        InducedDistribution d = induce_distribution(*c.field, c.form, c.twist);
        if (json) {
          Json j = to_json(d);
          j["form"] = render_quad(c.form.coeffs(), 'A');
          j["field"] = render_quad(c.field->comps(), 'F');
          print(j);
        } else {
          std::cout << render_quad(c.field->comps(), 'F') << render_quad(c.form.coeffs(), 'A') << to_text(d.report);
          std::cout << "predicted (" << d.predicted.c1 << ", " << d.predicted.c2 << ", " << d.predicted.c3 << ")"
                    << (d.agrees ? " agrees" : " DISAGREES") << "\n";
        }
        return d.agrees ? kOk : kMismatch;
      }
      DistributionReport r = analyze(c.form);
      if (json) {
        Json j = to_json(r);
        j["form"] = render_quad(c.form.coeffs(), 'A');
        print(j);
      } else {
        std::cout << render_quad(c.form.coeffs(), 'A') << to_text(r);
      }
      return kOk;
    }

    if (*spectra_cmd) {
      if (table) {
        auto checks = verify_table();
        bool ok = true;
        Json rows = Json::array();
        for (const auto& t : checks) {
          ok = ok && t.pass;
          rows.push_back(to_json(t));
          if (!json) {
            std::cout << (t.pass ? "PASS" : "FAIL") << " (" << t.c2 << "," << t.c3 << ") " << to_string(t.expected);
            if (t.flagged) std::cout << "  [table prints " << to_string(t.printed) << "]";
            std::cout << "\n";
          }
        }
        if (json) print(Json{{"schema", kJsonSchema}, {"rows", rows}, {"pass", ok}});
        return ok ? kOk : kMismatch;
      }
      if (spectra_cmd->count("c2") == 0 || spectra_cmd->count("c3") == 0)
        throw ParseError("spectra needs c2 and c3 (or --table)");
      for (const auto& s : at_most) cons.h2_at_most.insert(parse_bound(s));
      for (const auto& s : equal) cons.h2_equal.insert(parse_bound(s));
      auto found = enumerate_spectra(c2, c3, cons);
      if (json) {
        Json list = Json::array();
        for (const auto& s : found) list.push_back(to_string(s));
        print(Json{{"schema", kJsonSchema}, {"c2", c2}, {"c3", c3}, {"spectra", list}});
      } else {
        for (const auto& s : found) std::cout << to_string(s) << "\n";
      }
      return kOk;
    }

    if (*linear_cmd) {
      LinearClassification c = classify_linear(LinearField(read_matrix(matrix_path)));
      if (json) {
        print(to_json(c));
      } else {
        std::cout << "case " << static_cast<int>(c.which) << "\n";
        std::cout << "conormal chern (" << c.conormal.c1 << ", " << c.conormal.c2 << ", " << c.conormal.c3 << ")\n";
        std::cout << "singular scheme: dim " << c.scheme.dimension() << ", degree " << c.scheme.degree() << "\n";
      }
      return kOk;
    }

    if (*corpus_cmd) {
      CorpusSummary s = verify_corpus(fixtures, only, jobs);
      if (json)
        print(to_json(s));
      else
        std::cout << to_text(s);
      return s.pass() ? kOk : kMismatch;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const MathError& e) {
    std::cerr << "math error: " << e.what() << "\n";
    return kMath;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kMath;
  }
  return kParse;
}
