#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "vanprop/errors.hpp"
#include "vanprop/group_analysis.hpp"
#include "vanprop/serialize.hpp"
#include "vanprop/table_match.hpp"
#include "vanprop/verify_suites.hpp"

namespace {

using namespace vanprop;

struct Options {
  std::string format = "text";
  std::string out_path;
  size_t cap = kDefaultElementCap;
  unsigned seed = 12345;
  int exact_limit = kDefaultExactLimit;
  int bound_limit = kDefaultBoundLimit;
  long tail_to = 1000000;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opt.out_path);
  if (!f) throw InputError("cannot write to '" + opt.out_path + "'");
  f << text;
}

struct Target {
  enum class Kind { sym, alt, group } kind;
  int n = 0;
  std::string source;
};

Target parse_target(const std::vector<std::string>& words) {
  if (words.empty()) throw InputError("missing target (sym N | alt N | builtin:... | file)");
  if (words[0] == "sym" || words[0] == "alt") {
    if (words.size() != 2) throw InputError("usage: " + words[0] + " N");
    int n;
    try {
      n = std::stoi(words[1]);
    } catch (const std::exception&) {
      throw InputError("malformed degree '" + words[1] + "'");
    }
    return Target{words[0] == "sym" ? Target::Kind::sym : Target::Kind::alt, n, ""};
  }
  if (words.size() != 1) throw InputError("group targets take a single source argument");
  return Target{Target::Kind::group, 0, words[0]};
}

std::string render_report_text(const VanishingReport& rep, bool with_classes) {
  std::ostringstream os;
  os << "pv(" << rep.group_label << ") = " << to_string(rep.pv) << " ≈ "
     << decimal_approx(rep.pv) << "\n";
  os << "pnv(" << rep.group_label << ") = " << to_string(rep.pnv) << " ≈ "
     << decimal_approx(rep.pnv) << "\n";
  os << "order " << to_string(rep.order) << ", " << rep.vanishing.size()
     << " vanishing and " << rep.nonvanishing.size() << " non-vanishing classes\n";
  if (with_classes) {
    for (const auto& c : rep.vanishing)
      os << "  van " << c.label << " size " << to_string(c.size) << " witness "
         << c.witness.value_or("-") << "\n";
    for (const auto& c : rep.nonvanishing)
      os << "  nv  " << c.label << " size " << to_string(c.size) << "\n";
  }
  return os.str();
}

int cmd_pv(const Options& opt, const std::vector<std::string>& words, bool with_classes) {
  Target t = parse_target(words);
  VanishingReport rep;
  switch (t.kind) {
    case Target::Kind::sym: rep = pv_sym(t.n); break;
    case Target::Kind::alt: rep = pv_alt(t.n); break;
    case Target::Kind::group:
      rep = vanishing_set(parse_group_source(t.source, opt.cap));
      break;
  }
  if (opt.format == "json")
    emit(opt, to_json(rep).dump(2));
  else if (opt.format == "csv")
    emit(opt, to_csv(rep));
  else
    emit(opt, render_report_text(rep, with_classes));
  return 0;
}

int cmd_table(const Options& opt, const std::vector<std::string>& words) {
  Target t = parse_target(words);
  std::string csv, json;
  switch (t.kind) {
    case Target::Kind::sym: {
      SymCharacterTable tab = sym_table(t.n);
      csv = to_csv(tab);
      json = to_json(tab).dump(2);
      break;
    }
    case Target::Kind::alt: {
      AltCharacterTable tab = alt_table(t.n);
      csv = to_csv(tab);
      json = to_json(tab).dump(2);
      break;
    }
    case Target::Kind::group: {
      GroupCharacterTable tab =
          GroupCharacterTable::build(parse_group_source(t.source, opt.cap));
      csv = to_csv(tab);
      json = to_json(tab).dump(2);
      break;
    }
  }
  emit(opt, opt.format == "json" ? json : csv);
  return 0;
}

int cmd_cores(const Options& opt, int r, int n) {
  std::vector<Partition> cores = list_r_cores(r, n);
  if (opt.format == "json") {
    Json j = Json::array();
    for (const auto& p : cores) j.push_back(p.str());
    emit(opt, j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& p : cores) os << p.str() << "\n";
    if (cores.empty()) os << "(no " << r << "-cores of " << n << ")\n";
    emit(opt, os.str());
  }
  return 0;
}

int cmd_bounds(const Options& opt, long n) {
  CandidateTypeSet set = candidate_types(n);
  BigRational bound = pnv_upper_bound(n);
  long mn = moved_points_bound(n);
  if (opt.format == "json") {
    Json j;
    j["n"] = n;
    j["max_three_cycles"] = set.max_three_cycles;
    j["max_two_cycles"] = set.max_two_cycles;
    j["moved_points_bound"] = mn;
    j["candidate_types"] = Json::array();
    for (const auto& t : set.types) j["candidate_types"].push_back(t.str_exponent());
    j["pnv_upper_bound"] = to_string(bound);
    j["threshold"] = to_string(symmetric_pnv_threshold());
    emit(opt, j.dump(2));
  } else {
    std::ostringstream os;
    os << "n = " << n << "\n";
    os << "A(n) (max 3-cycles) = " << set.max_three_cycles << "\n";
    os << "B(n) (max 2-cycles) = " << set.max_two_cycles << "\n";
    os << "m_n (moved points)  = " << mn << "\n";
    os << "candidate types:";
    for (const auto& t : set.types) os << " " << t.str_exponent();
    os << "\npnv upper bound = " << to_string(bound) << " ≈ " << decimal_approx(bound) << "\n";
    emit(opt, os.str());
  }
  return 0;
}

int emit_suites(const Options& opt, const std::vector<SuiteResult>& suites) {
  bool pass = true;
  if (opt.format == "json") {
    Json j = Json::array();
    for (const auto& s : suites) {
      pass = pass && s.pass;
      Json js;
      js["suite"] = s.name;
      js["pass"] = s.pass;
      js["checks"] = s.lines;
      j.push_back(std::move(js));
    }
    emit(opt, j.dump(2));
  } else {
    std::ostringstream os;
    for (const auto& s : suites) {
      pass = pass && s.pass;
      os << (s.pass ? "[PASS] " : "[FAIL] ") << s.name << " (" << s.lines.size()
         << " checks)\n";
      for (const auto& f : s.failures) os << "    " << f << "\n";
    }
    emit(opt, os.str());
  }
  return pass ? 0 : 1;
}

int cmd_verify(const Options& opt, const std::string& what) {
  std::vector<SuiteResult> suites;
  if (what == "1.1") {
    suites.push_back(run_theorem_1_1(opt.cap));
  } else if (what == "1.3") {
    suites.push_back(run_theorem_1_3(opt.seed, 20, opt.cap));
  } else if (what == "1.4") {
    if (opt.format == "json") {
      // structured per-n rows rather than flattened check lines
      Theorem14Report rep = verify_theorem_1_4(opt.exact_limit, opt.bound_limit);
      Json j = to_json(rep);
      if (opt.tail_to >= 106) {
        bool tail = moved_points_tail_holds(106, opt.tail_to);
        j["tail"] = Json{{"from", 106}, {"to", opt.tail_to}, {"pass", tail}};
        rep.pass = rep.pass && tail;
        j["pass"] = rep.pass;
      }
      emit(opt, j.dump(2));
      return rep.pass ? 0 : 1;
    }
    suites.push_back(run_theorem_1_4(opt.exact_limit, opt.bound_limit, opt.tail_to));
  } else if (what == "1.6") {
    suites.push_back(run_theorem_1_6(opt.cap));
  } else if (what == "lemmas") {
    suites.push_back(run_lemma_suite(opt.cap));
  } else if (what == "all") {
    suites.push_back(run_theorem_1_4(opt.exact_limit, opt.bound_limit, opt.tail_to));
    suites.push_back(run_theorem_1_1(opt.cap));
    suites.push_back(run_theorem_1_3(opt.seed, 20, opt.cap));
    suites.push_back(run_theorem_1_6(opt.cap));
    suites.push_back(run_lemma_suite(opt.cap));
  } else {
    throw InputError("unknown verify target '" + what + "' (1.1 | 1.3 | 1.4 | 1.6 | lemmas | all)");
  }
  return emit_suites(opt, suites);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact vanishing-element proportions for symmetric, alternating and small finite groups"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--format", opt.format, "output format: text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");
  app.add_option("--cap", opt.cap, "element cap for group enumeration");
  app.add_option("--seed", opt.seed, "seed for randomized property sweeps");
  app.add_option("--exact-limit,--exact", opt.exact_limit, "largest n checked with exact tables");
  app.add_option("--bound-limit,--bound", opt.bound_limit, "largest n checked with class-size bounds");
  app.add_option("--tail-to", opt.tail_to, "upper end of the moved-points tail scan");

  std::vector<std::string> pv_words, table_words;
  bool pv_classes = false;
  CLI::App* pv = app.add_subcommand("pv", "vanishing proportion of a group");
  pv->add_option("target", pv_words, "sym N | alt N | builtin:... | group file");
  pv->add_flag("--classes", pv_classes, "list per-class details");

  CLI::App* table = app.add_subcommand("table", "exact character table");
  table->add_option("target", table_words, "sym N | alt N | builtin:... | group file");
  bool table_csv = false, table_json = false;
  table->add_flag("--csv", table_csv, "shorthand for --format csv");
  table->add_flag("--json", table_json, "shorthand for --format json");

  int cores_r = 0, cores_n = 0;
  CLI::App* cores = app.add_subcommand("cores", "list the r-cores of n");
  cores->add_option("r", cores_r, "hook length divisor")->required();
  cores->add_option("n", cores_n, "partition size")->required();

  long bounds_n = 0;
  CLI::App* bounds = app.add_subcommand("bounds", "non-vanishing candidate data for S_n");
  bounds->add_option("n", bounds_n, "degree of the symmetric group")->required();

  std::string verify_what;
  std::string verify_family = "builtins";
  CLI::App* verify = app.add_subcommand("verify", "run a theorem or lemma property suite");
  verify->add_option("what", verify_what, "1.1 | 1.3 | 1.4 | 1.6 | lemmas | all")->required();
  verify->add_option("--family", verify_family, "group family to sweep (builtins)")
      ->check(CLI::IsMember({"builtins"}));

  for (CLI::App* sub : {pv, table, cores, bounds, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (pv->parsed()) return cmd_pv(opt, pv_words, pv_classes);
    if (table->parsed()) {
      if (table_csv) opt.format = "csv";
      if (table_json) opt.format = "json";
      return cmd_table(opt, table_words);
    }
    if (cores->parsed()) return cmd_cores(opt, cores_r, cores_n);
    if (bounds->parsed()) return cmd_bounds(opt, bounds_n);
    if (verify->parsed()) return cmd_verify(opt, verify_what);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
