#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "orbitcert/orbitcert.hpp"

namespace {

using namespace orbitcert;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 10;
constexpr int kExitSchema = 11;
constexpr int kExitMath = 12;
constexpr int kExitInternal = 13;

struct CliState {
  bool json = false;
  bool quiet = false;
  bool trace = false;
  bool color = false;
  std::optional<std::uint64_t> seed;
  std::optional<double> kn_tol;
  std::optional<int> kn_max_iter;
  bool assert_no_overgroup = false;

  int verbosity() const { return quiet ? 0 : (trace ? 2 : 1); }
};

std::string paint(const CliState& cli, const char* code, const std::string& s) {
  if (!cli.color) return s;
  return std::string("\033[") + code + "m" + s + "\033[0m";
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("$", "cannot open file: " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw SchemaError("$", std::string("invalid JSON: ") + e.what());
  }
  return doc;
}

ProblemSpec load_problem(const std::string& path, const CliState& cli) {
  ProblemSpec spec = parse_problem(load_json(path));
  if (cli.seed) spec.options.seed = *cli.seed;
  if (cli.kn_tol) spec.options.kn_tol = *cli.kn_tol;
  if (cli.kn_max_iter) spec.options.kn_max_iter = *cli.kn_max_iter;
  if (cli.assert_no_overgroup) spec.options.assert_no_reductive_overgroup = true;
  return spec;
}

void print_human_verdict(const CliState& cli, const Verdict& v) {
  std::string ans = to_string(v.answer);
  std::string colored = v.answer == Answer::Yes  ? paint(cli, "32", ans)
                        : v.answer == Answer::No ? paint(cli, "31", ans)
                                                 : paint(cli, "33", ans);
  std::cout << to_string(v.question) << ": " << colored << " ("
            << (v.exact ? "exact" : "numerical") << ")\n";
  if (cli.quiet) return;
  if (v.certificate_s)
    std::cout << "  certificate s = " << to_string(v.certificate_s->coords)
              << "\n";
  if (v.orbit) {
    std::cout << "  orbit verdict: " << to_string(v.orbit->kind) << "\n";
    if (v.orbit->certificate) {
      std::cout << "    lambda = " << to_string(v.orbit->certificate->lambda)
                << ", realized s = "
                << to_string(v.orbit->certificate->realized_s.coords) << "\n";
    }
    for (const auto& note : v.orbit->notes) std::cout << "    " << note << "\n";
  }
  if (v.overgroup) {
    std::cout << "  reductive overgroup: " << to_string(v.overgroup->status)
              << " [" << v.overgroup->method << "]";
    if (!v.overgroup->detail.empty()) std::cout << " " << v.overgroup->detail;
    std::cout << "\n";
  }
  for (const auto& sc : v.side_conditions) {
    std::cout << "  side condition " << sc.name << ": " << sc.outcome;
    if (!sc.note.empty()) std::cout << " (" << sc.note << ")";
    std::cout << "\n";
  }
  if (!v.failing_subprocedure.empty())
    std::cout << "  inconclusive sub-procedure: " << v.failing_subprocedure
              << "\n";
}

int run_check(const std::string& path, Question q, const CliState& cli) {
  ProblemSpec spec = load_problem(path, cli);
  ProblemInstance inst = instantiate(spec);
  Transcript tr;
  tr.verbosity = cli.verbosity();
  Verdict v = q == Question::Observability
                  ? observability_check(*inst.algebra, inst.subalgebra,
                                        spec.options, &tr)
                  : epimorphicity_check(*inst.algebra, inst.subalgebra,
                                        spec.options, &tr);
  Json report = build_report(spec, v, tr);
  if (cli.json) {
    std::cout << report.dump(2) << "\n";
  } else {
    print_human_verdict(cli, v);
  }
  switch (v.answer) {
    case Answer::Yes: return kExitYes;
    case Answer::No: return kExitNo;
    default: return kExitUnknown;
  }
}

int run_grading(const std::string& path, const std::string& s_text,
                const CliState& cli) {
  ProblemSpec spec = load_problem(path, cli);
  ProblemInstance inst = instantiate(spec);
  const LieAlgebra& g = *inst.algebra;
  QVec coords;
  std::stringstream ss(s_text);
  std::string tok;
  while (std::getline(ss, tok, ',')) coords.push_back(parse_rational(tok));
  Element s = g.element(coords);
  RationalGrading gr = grade(g, s);
  if (cli.json) {
    Json out;
    out["s"] = json_of(s);
    Json pieces = Json::array();
    for (const auto& [eig, basis] : gr.pieces) {
      Json p;
      p["eigenvalue"] = to_string(eig);
      p["dim"] = basis.size();
      if (cli.trace) p["basis"] = json_of(basis);
      pieces.push_back(p);
    }
    out["pieces"] = pieces;
    out["p_dim"] = gr.p_basis.size();
    out["q_dim"] = gr.q_basis.size();
    out["n_dim"] = gr.n_basis.size();
    if (cli.trace) {
      out["p_basis"] = json_of(gr.p_basis);
      out["q_basis"] = json_of(gr.q_basis);
      out["n_basis"] = json_of(gr.n_basis);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "grading by s = " << to_string(s.coords) << "\n";
    for (const auto& [eig, basis] : gr.pieces) {
      std::cout << "  g_" << to_string(eig) << ": dim " << basis.size() << "\n";
      if (cli.trace)
        for (const auto& b : basis)
          std::cout << "    " << to_string(b.coords) << "\n";
    }
    std::cout << "  p dim " << gr.p_basis.size() << ", q dim "
              << gr.q_basis.size() << ", n dim " << gr.n_basis.size() << "\n";
  }
  return kExitYes;
}

int run_orthocent(const std::string& path, const CliState& cli) {
  ProblemSpec spec = load_problem(path, cli);
  ProblemInstance inst = instantiate(spec);
  Subalgebra z = orthogonal_centralizer(*inst.algebra, inst.subalgebra);
  if (cli.json) {
    Json out;
    out["dim"] = z.dim();
    out["basis"] = json_of(z.basis);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "orthogonal centralizer: dim " << z.dim() << "\n";
    for (const auto& b : z.basis)
      std::cout << "  " << to_string(b.coords) << "\n";
  }
  return kExitYes;
}

int run_corpus(const CliState& cli) {
  std::vector<CorpusCase> cases = corpus_cases();
  bool all_ok = true;
  Json out;
  out["tool"] = Json{{"name", kToolName},
                     {"version", kToolVersion},
                     {"table_version", kOvergroupTableVersion}};
  Json jcases = Json::array();
  for (auto& c : cases) {
    if (cli.seed) c.spec.options.seed = *cli.seed;
    ProblemInstance inst = instantiate(c.spec);
    Transcript tr;
    tr.verbosity = cli.verbosity();
    Verdict v = c.question == Question::Observability
                    ? observability_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr)
                    : epimorphicity_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr);
    Json report = build_report(c.spec, v, tr);
    VerifyResult vr = verify_report(report);
    bool ok = v.answer == c.expected && v.exact && vr.ok;
    all_ok = all_ok && ok;
    if (cli.json) {
      Json jc;
      jc["name"] = c.name;
      jc["question"] = to_string(c.question);
      jc["expected"] = to_string(c.expected);
      jc["got"] = to_string(v.answer);
      jc["certificate_verified"] = vr.ok;
      jc["pass"] = ok;
      jc["report"] = report;
      jcases.push_back(jc);
    } else {
      std::string tag = ok ? paint(cli, "32", "PASS") : paint(cli, "31", "FAIL");
      std::cout << "[" << tag << "] " << c.name << ": expected "
                << to_string(c.expected) << ", got " << to_string(v.answer)
                << (v.exact ? " (exact" : " (numerical")
                << (vr.ok ? ", certificate verified)" : ", certificate FAILED)")
                << "\n";
      if (!vr.ok && !cli.quiet)
        for (const auto& f : vr.failures) std::cout << "    ! " << f << "\n";
    }
  }
  if (cli.json) {
    out["cases"] = jcases;
    out["all_pass"] = all_ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all_ok ? "all corpus cases pass" : "corpus failures present")
              << "\n";
  }
  return all_ok ? kExitYes : kExitNo;
}

int verify_one(const Json& report, const CliState& cli, bool& all_ok) {
  VerifyResult vr = verify_report(report);
  all_ok = all_ok && vr.ok;
  if (!cli.json) {
    std::string q = report.value("question", "?");
    std::string a =
        report.contains("verdict") ? report["verdict"].value("answer", "?") : "?";
    std::string tag = vr.ok ? paint(cli, "32", "OK") : paint(cli, "31", "FAIL");
    std::cout << "[" << tag << "] " << q << "=" << a << ": " << vr.checks.size()
              << " checks";
    if (!vr.failures.empty()) {
      std::cout << ", failures:";
      for (const auto& f : vr.failures) std::cout << " | " << f;
    }
    std::cout << "\n";
  }
  return vr.ok ? 0 : 1;
}

int run_verify(const std::string& path, const CliState& cli) {
  Json doc = load_json(path);
  bool all_ok = true;
  Json results = Json::array();
  auto handle = [&](const Json& rep) {
    VerifyResult vr = verify_report(rep);
    all_ok = all_ok && vr.ok;
    if (cli.json) {
      Json r;
      r["ok"] = vr.ok;
      r["checks"] = vr.checks;
      r["failures"] = vr.failures;
      results.push_back(r);
    } else {
      verify_one(rep, cli, all_ok);
    }
  };
  if (doc.is_array()) {
    for (const auto& item : doc) handle(item);
  } else if (doc.contains("cases")) {
    for (const auto& item : doc["cases"]) handle(item["report"]);
  } else {
    handle(doc);
  }
  if (cli.json) {
    Json out;
    out["all_ok"] = all_ok;
    out["results"] = results;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (all_ok ? "all certificates verified"
                         : "certificate verification failed")
              << "\n";
  }
  return all_ok ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact observability/epimorphicity checks for Lie subalgebras "
               "via orbit-closure criteria"};
  app.require_subcommand(1);
  app.fallthrough();

  CliState cli;
  bool no_color = std::getenv("NO_COLOR") != nullptr;
  cli.color = !no_color && isatty(fileno(stdout));

  app.add_flag("--json", cli.json, "machine-readable report on stdout");
  app.add_flag("--quiet", cli.quiet, "verdict only");
  app.add_flag("--trace", cli.trace, "full transcript including eigenbases");
  std::uint64_t seed_val = 0;
  auto* seed_opt = app.add_option("--seed", seed_val, "random seed");
  double tol_val = 0;
  auto* tol_opt = app.add_option("--kn-tol", tol_val, "descent tolerance");
  int iter_val = 0;
  auto* iter_opt =
      app.add_option("--kn-max-iter", iter_val, "descent iteration limit");
  app.add_flag("--assert-no-reductive-overgroup", cli.assert_no_overgroup,
               "caller asserts h lies in no proper reductive subgroup");

  std::string file, svec, report_file;
  auto* obs = app.add_subcommand("check-observable",
                                 "decide observability of the subalgebra");
  obs->add_option("file", file, "problem JSON")->required();
  auto* epi = app.add_subcommand("check-epimorphic",
                                 "decide epimorphicity of the subalgebra");
  epi->add_option("file", file, "problem JSON")->required();
  auto* grad = app.add_subcommand("grading",
                                  "eigenspace grading by a rational semisimple element");
  grad->add_option("file", file, "problem JSON")->required();
  grad->add_option("--s", svec, "comma-separated rational coordinates")
      ->required();
  auto* oc = app.add_subcommand("orthocent",
                                "orthogonal centralizer of the subalgebra");
  oc->add_option("file", file, "problem JSON")->required();
  auto* corpus = app.add_subcommand("corpus", "run the built-in regression corpus");
  auto* verify = app.add_subcommand("verify",
                                    "re-check certificates of emitted reports");
  verify->add_option("file", report_file, "report JSON (single, array or corpus output)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }
  if (*seed_opt) cli.seed = seed_val;
  if (*tol_opt) cli.kn_tol = tol_val;
  if (*iter_opt) cli.kn_max_iter = iter_val;

  try {
    if (obs->parsed()) return run_check(file, orbitcert::Question::Observability, cli);
    if (epi->parsed()) return run_check(file, orbitcert::Question::Epimorphicity, cli);
    if (grad->parsed()) return run_grading(file, svec, cli);
    if (oc->parsed()) return run_orthocent(file, cli);
    if (corpus->parsed()) return run_corpus(cli);
    if (verify->parsed()) return run_verify(report_file, cli);
  } catch (const orbitcert::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const orbitcert::RationalParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSchema;
  } catch (const orbitcert::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
