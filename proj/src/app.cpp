#include "sigmaforge/app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sigmaforge/catalog.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/group_io.hpp"
#include "sigmaforge/lattice.hpp"
#include "sigmaforge/report.hpp"
#include "sigmaforge/sigma.hpp"
#include "sigmaforge/structure.hpp"

namespace sigmaforge {

namespace {

const std::vector<std::string> kCheckNames = {
    "lattice",   "qsnormal-db", "qsigmat", "theorem-c", "theorem-e",
    "theorem-f", "theorem-b",   "robinson", "np",       "pp",
    "qspq",      "corpus"};

bool known_check(const std::string& name) {
  for (const std::string& c : kCheckNames)
    if (c == name) return true;
  return false;
}

// Lazily built per-group state.  The analysis must outlive every database
// built on it, so both live here together.
struct GroupContext {
  GroupPtr g;
  std::shared_ptr<const LatticeAnalysis> an;
  std::map<std::string, std::shared_ptr<const SigmaQuasinormalDB>> dbs;

  const LatticeAnalysis& analysis() {
    if (!an) an = std::make_shared<const LatticeAnalysis>(SubgroupLattice::build(g));
    return *an;
  }
  const SigmaQuasinormalDB& db(const SigmaPartition& sigma) {
    std::string key = sigma.name();
    auto it = dbs.find(key);
    if (it == dbs.end())
      it = dbs.emplace(key, std::make_shared<const SigmaQuasinormalDB>(
                                analysis(), sigma))
               .first;
    return *it->second;
  }
};

GroupPtr resolve_group(const std::string& input, long cap) {
  if (input.rfind("catalog:", 0) == 0)
    return catalog_group(input.substr(8), cap);
  return load_group_file(input, cap);
}

PropertyReport run_check(const std::string& check, GroupContext& ctx,
                         const SigmaPartition& sigma) {
  if (check == "lattice") {
    const SubgroupLattice& lat = ctx.analysis().lattice();
    PropertyReport rep;
    rep.check = "lattice";
    std::ostringstream note;
    note << lat.size() << " subgroups; modular lattice: "
         << (is_modular_lattice(lat) ? "true" : "false");
    rep.note = note.str();
    return rep;
  }
  if (check == "qsnormal-db") {
    const SigmaQuasinormalDB& db = ctx.db(sigma);
    const SubgroupLattice& lat = db.analysis().lattice();
    PropertyReport rep;
    rep.check = "qsnormal-db";
    rep.sigma = sigma.name();
    int ssn = 0, qn = 0, sq = 0;
    for (int i = 0; i < lat.size(); ++i) {
      if (db.sigma_subnormal(i, lat.top())) ++ssn;
      if (db.qn(i, lat.top())) ++qn;
      if (db.subqn(i)) {
        ++sq;
        rep.witnesses.push_back("sigma-subquasinormal: " + describe(lat.node(i)));
      }
    }
    std::ostringstream note;
    note << lat.size() << " subgroups; sigma-subnormal in G: " << ssn
         << "; sigma-quasinormal in G: " << qn
         << "; sigma-subquasinormal in G: " << sq;
    rep.note = note.str();
    return rep;
  }
  if (check == "qsigmat") return is_QsigmaT_bruteforce(ctx.db(sigma));
  if (check == "theorem-c") return check_theorem_C(ctx.db(sigma));
  if (check == "theorem-e") return check_theorem_E(ctx.db(sigma));
  if (check == "theorem-f") {
    if (!(sigma == SigmaPartition::coarsest()))
      throw ConfigError(
          "theorem-f is the coarsest-partition case; pass --sigma coarsest");
    return check_theorem_F(ctx.db(sigma));
  }
  if (check == "theorem-b") return verify_theorem_B(ctx.db(sigma));
  if (check == "robinson") return find_robinson_complex(ctx.g).report;
  if (check == "np" || check == "pp") {
    PropertyReport rep;
    rep.check = check;
    std::vector<int> ps = prime_factors(ctx.g->order());
    for (int p : ps) {
      rep.sub_reports.push_back(check == "np" ? satisfies_Np(ctx.g, p)
                                              : satisfies_Pp(ctx.g, p));
      if (!rep.sub_reports.back().verdict) rep.verdict = false;
    }
    std::ostringstream note;
    note << "conjunction over pi(G), " << ps.size() << " primes";
    rep.note = note.str();
    return rep;
  }
  if (check == "qspq") return satisfies_Q_sigmaP(ctx.g, sigma);
  throw ConfigError("unknown check '" + check + "'");
}

struct CorpusCase {
  std::string group;
  std::string sigma_text;
  std::string check;
  bool expected = true;
  int line = 0;
};

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<CorpusCase> parse_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus manifest '" + path + "'");
  std::vector<CorpusCase> cases;
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
      if (c == ';') {
        fields.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    fields.push_back(trim(cur));
    if (fields.size() != 4)
      throw ConfigError("corpus line " + std::to_string(lineno) +
                        ": expected 'group ; sigma ; check ; expected'");
    CorpusCase c;
    c.group = fields[0];
    c.sigma_text = fields[1];
    c.check = fields[2];
    c.line = lineno;
    if (fields[3] == "true") {
      c.expected = true;
    } else if (fields[3] == "false") {
      c.expected = false;
    } else {
      throw ConfigError("corpus line " + std::to_string(lineno) +
                        ": expected verdict must be 'true' or 'false'");
    }
    if (!known_check(c.check) || c.check == "corpus")
      throw ConfigError("corpus line " + std::to_string(lineno) +
                        ": unknown check '" + c.check + "'");
    SigmaPartition::parse(c.sigma_text);  // validate eagerly, fail loudly
    cases.push_back(std::move(c));
  }
  return cases;
}

struct CaseResult {
  PropertyReport report;
  bool ok = false;
  std::string error;  // nonempty when the row aborted before a verdict
  int severity = 0;   // 0 ok, 1 mismatch, 2 config, 3 scale, 4 inconsistent
};

CaseResult run_case(const CorpusCase& c, long cap) {
  CaseResult r;
  try {
    GroupContext ctx{catalog_group(c.group, cap), nullptr, {}};
    SigmaPartition sigma = SigmaPartition::parse(c.sigma_text);
    r.report = run_check(c.check, ctx, sigma);
    ReportStatus worst = r.report.worst_status();
    if (worst == ReportStatus::Inconsistent) {
      r.severity = 4;
    } else if (worst == ReportStatus::ScaleLimited) {
      r.severity = 3;
    } else {
      r.ok = (r.report.verdict == c.expected);
      if (!r.ok) r.severity = 1;
    }
  } catch (const ScaleError& e) {
    r.error = e.what();
    r.severity = 3;
  } catch (const ParseError& e) {
    r.error = std::string(e.what()) + " (line " + std::to_string(e.line()) +
              ", column " + std::to_string(e.col()) + ")";
    r.severity = 2;
  } catch (const ConfigError& e) {
    r.error = e.what();
    r.severity = 2;
  } catch (const DomainError& e) {
    r.error = e.what();
    r.severity = 4;
  }
  return r;
}

int run_corpus(const std::string& path, bool sigma_filter,
               const SigmaPartition& sigma, long cap, int jobs, bool json,
               std::ostream& out) {
  std::vector<CorpusCase> cases = parse_manifest(path);
  if (sigma_filter) {
    std::vector<CorpusCase> kept;
    for (const CorpusCase& c : cases)
      if (SigmaPartition::parse(c.sigma_text) == sigma) kept.push_back(c);
    cases = std::move(kept);
  }

  std::vector<CaseResult> results(cases.size());
  if (jobs <= 1 || cases.size() <= 1) {
    for (size_t i = 0; i < cases.size(); ++i) results[i] = run_case(cases[i], cap);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      for (size_t i = next++; i < cases.size(); i = next++)
        results[i] = run_case(cases[i], cap);
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, static_cast<int>(cases.size()));
    pool.reserve(static_cast<size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  int severity = 0;
  int mismatches = 0, errors = 0;
  for (const CaseResult& r : results) {
    severity = std::max(severity, r.severity);
    if (!r.error.empty())
      ++errors;
    else if (!r.ok)
      ++mismatches;
  }

  if (json) {
    nlohmann::json doc;
    doc["manifest"] = path;
    doc["cases"] = nlohmann::json::array();
    for (size_t i = 0; i < cases.size(); ++i) {
      nlohmann::json row;
      row["group"] = cases[i].group;
      row["sigma"] = cases[i].sigma_text;
      row["check"] = cases[i].check;
      row["expected"] = cases[i].expected;
      row["line"] = cases[i].line;
      if (results[i].error.empty()) {
        row["ok"] = results[i].ok;
        row["report"] = results[i].report;
      } else {
        row["ok"] = false;
        row["error"] = results[i].error;
      }
      doc["cases"].push_back(std::move(row));
    }
    doc["summary"] = {{"cases", cases.size()},
                      {"mismatches", mismatches},
                      {"errors", errors}};
    out << doc.dump(2) << "\n";
  } else {
    for (size_t i = 0; i < cases.size(); ++i) {
      const CorpusCase& c = cases[i];
      const CaseResult& r = results[i];
      const char* tag = r.ok ? "[ OK ]" : "[MISMATCH]";
      if (!r.error.empty()) tag = "[ERROR]";
      out << tag << " " << c.group << " ; " << c.sigma_text << " ; " << c.check
          << " ; expected " << (c.expected ? "true" : "false");
      if (!r.error.empty())
        out << " ; " << r.error;
      else if (!r.ok)
        out << " ; got " << (r.report.verdict ? "true" : "false");
      out << "\n";
    }
    out << cases.size() << " cases: " << (cases.size() - mismatches - errors)
        << " ok, " << mismatches << " mismatches, " << errors << " errors\n";
  }
  return severity;
}

int exit_code_for(const std::vector<PropertyReport>& reports) {
  ReportStatus worst = ReportStatus::Ok;
  bool all_true = true;
  for (const PropertyReport& r : reports) {
    worst = std::max(worst, r.worst_status());
    if (!r.verdict) all_true = false;
  }
  if (worst == ReportStatus::Inconsistent) return 4;
  if (worst == ReportStatus::ScaleLimited) return 3;
  return all_true ? 0 : 1;
}

}  // namespace

int sigmaforge_main(int argc, const char* const* argv, std::ostream& out,
                    std::ostream& err) {
  CLI::App app{"sigma-quasinormality toolkit for finite permutation groups"};
  app.require_subcommand(1);

  CLI::App* analyze = app.add_subcommand(
      "analyze", "analyze one group, or run a corpus manifest");
  std::string input;
  std::string sigma_text = "coarsest";
  std::vector<std::string> checks;
  std::string dot_path;
  bool json = false;
  long cap = PermGroup::kDefaultOrderCap;
  int jobs = 1;
  analyze
      ->add_option("input",
                   input,
                   "group file, catalog:NAME, or corpus:MANIFEST")
      ->required();
  CLI::Option* sigma_opt =
      analyze->add_option("--sigma", sigma_text,
                          "sigma partition: finest | coarsest | pi:2,3 | "
                          "onepi:2,3 | classes:[2,3][5]rest");
  analyze
      ->add_option("--check", checks, "checks to run (default: qsigmat)")
      ->delimiter(',');
  analyze->add_flag("--json", json, "emit one JSON document instead of text");
  analyze->add_option("--dot", dot_path,
                      "write the Hasse diagram of the subgroup lattice");
  analyze->add_option("--cap", cap, "order cap for group enumeration")
      ->envname("SIGMAFORGE_CAP")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--jobs", jobs, "corpus worker count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    SigmaPartition sigma = SigmaPartition::parse(sigma_text);

    bool corpus_input = input.rfind("corpus:", 0) == 0;
    bool corpus_check = false;
    for (const std::string& c : checks) {
      if (!known_check(c)) throw ConfigError("unknown check '" + c + "'");
      if (c == "corpus") corpus_check = true;
    }
    if (corpus_input || corpus_check) {
      std::string path = corpus_input ? input.substr(7) : input;
      return run_corpus(path, sigma_opt->count() > 0, sigma, cap, jobs, json,
                        out);
    }
    if (checks.empty()) checks.push_back("qsigmat");

    GroupContext ctx{resolve_group(input, cap), nullptr, {}};
    std::vector<PropertyReport> reports;
    reports.reserve(checks.size());
    for (const std::string& c : checks) reports.push_back(run_check(c, ctx, sigma));

    if (!dot_path.empty()) {
      const SigmaQuasinormalDB& db = ctx.db(sigma);
      std::ofstream dot(dot_path);
      if (!dot) throw ConfigError("cannot write DOT file '" + dot_path + "'");
      dot << to_dot(ctx.analysis(), &db);
      err << "wrote " << dot_path << "\n";
    }

    if (json) {
      nlohmann::json doc;
      doc["input"] = input;
      doc["degree"] = ctx.g->degree();
      doc["order"] = ctx.g->order();
      doc["sigma"] = sigma.name();
      doc["reports"] = reports;
      out << doc.dump(2) << "\n";
    } else {
      out << "group: " << input << " (degree " << ctx.g->degree() << ", order "
          << ctx.g->order() << ")\n";
      for (const PropertyReport& r : reports) out << render_text(r);
    }
    return exit_code_for(reports);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << " (line " << e.line() << ", column "
        << e.col() << ")\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ScaleError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    err << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace sigmaforge
