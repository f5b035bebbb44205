// Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

#include <catch2/catch_amalgamated.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <set>

#include "oracles.hpp"
#include "orbitcert/orbitcert.hpp"

using namespace orbitcert;

namespace {

struct Criterion {
  std::string name;
  bool ok = true;
  int checks = 0;
  std::vector<std::string> failures;

  explicit Criterion(std::string n) : name(std::move(n)) {}
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      ok = false;
      failures.push_back(what);
    }
  }
  ~Criterion() {
    std::cout << "[ACCEPTANCE] " << name << ": " << (ok ? "PASS" : "FAIL")
              << " (" << checks << " checks)";
    for (const auto& f : failures) std::cout << "\n    ! " << f;
    std::cout << std::endl;
  }
};

Element diag_element(const LieAlgebra& g, std::vector<long> d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Rat(d[i]);
  auto e = element_from_matrix(g, m);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_CASE("criterion 1: corpus regression with verified certificates") {
  Criterion crit("1 corpus-regression");
  auto start = std::chrono::steady_clock::now();
  auto cases = corpus_cases();
  crit.expect(cases.size() >= 12, "at least 12 corpus cases");
  for (const auto& c : cases) {
    ProblemInstance inst = instantiate(c.spec);
    Transcript tr;
    Verdict v = c.question == Question::Observability
                    ? observability_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr)
                    : epimorphicity_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr);
    crit.expect(v.answer == c.expected,
                c.name + ": expected " + to_string(c.expected) + ", got " +
                    to_string(v.answer));
    crit.expect(v.exact, c.name + ": verdict not exact");
    Json report = build_report(c.spec, v, tr);
    VerifyResult vr = verify_report(report);
    crit.expect(vr.ok, c.name + ": certificate re-verification failed");
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  crit.expect(secs < 10.0, "runtime under 10 s");
  CHECK(crit.ok);
}

TEST_CASE("criterion 2: quasiparabolics are observable with exact certificates") {
  Criterion crit("2 quasiparabolic-observability");
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  struct Sample {
    const LieAlgebra* g;
    Element s;
    std::string name;
  };
  std::vector<Sample> samples;
  for (long c : {1L, 2L, -1L, -2L})
    samples.push_back({&sl2,
                       Element(scale(Rat(c), sl2.basis_element(1).coords)),
                       "sl2 c=" + std::to_string(c)});
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<long> pick(-2, 2);
  std::set<std::pair<long, long>> seen;
  while (samples.size() < 10) {
    long a = pick(rng), b = pick(rng);
    if (a == 0 && b == 0) continue;
    if (!seen.insert({a, b}).second) continue;
    samples.push_back({&sl3, diag_element(sl3, {a, b - a, -b}),
                       "sl3 (" + std::to_string(a) + "," + std::to_string(b) +
                           ")"});
  }
  for (const auto& sample : samples) {
    const LieAlgebra& g = *sample.g;
    RationalGrading gr = grade(g, sample.s);
    Subalgebra qs = make_subalgebra(g, gr.q_basis);
    Verdict v = observability_check(g, qs);
    crit.expect(v.answer == Answer::Yes && v.exact,
                sample.name + ": expected exact yes");
    if (v.certificate_s) {
      SukhanovReport rep = sukhanov_certificate_check(g, qs, *v.certificate_s);
      crit.expect(rep.ok(), sample.name + ": certificate fails re-check");
    } else {
      crit.expect(false, sample.name + ": missing certificate");
    }
  }
  CHECK(crit.ok);
}

TEST_CASE("criterion 3: cross-validation against the brute-force search") {
  Criterion crit("3 sukhanov-cross-validation");
  std::set<std::string> done;
  for (const auto& c : corpus_cases()) {
    Json key = serialize(c.spec);
    key["question"] = nullptr;
    if (!done.insert(key.dump()).second) continue;
    ProblemInstance inst = instantiate(c.spec);
    const LieAlgebra& g = *inst.algebra;
    std::vector<Element> conj;
    for (const auto& u : c.stored_conjugations) conj.push_back(g.element(u));
    Verdict v = observability_check(g, inst.subalgebra, c.spec.options);
    auto oracle = oracles::sukhanov_search(g, inst.subalgebra, conj);
    crit.expect((v.answer == Answer::Yes) == oracle.has_value(),
                c.name + ": oracle disagreement");
    crit.expect(v.exact, c.name + ": verdict not exact");
  }
  CHECK(crit.ok);
}

TEST_CASE("criterion 4: LP layer agrees with the integer lattice oracle") {
  Criterion crit("4 lp-vs-lattice");
  auto start = std::chrono::steady_clock::now();
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 500; ++trial) {
    auto sys = oracles::random_weight_system(rng);
    WeightSupport ws = oracles::synthetic_support(sl2, sys.weights, sys.d);
    bool lp = instability_lp(ws).has_value();
    bool box = oracles::box_instability(sys.weights, sys.d);
    crit.expect(lp == box, "instability mismatch at trial " +
                               std::to_string(trial));
    bool closed = closedness_lp(ws).closed;
    bool box_witness = oracles::box_nonclosed_witness(sys.weights, sys.d);
    crit.expect(closed == !box_witness,
                "closedness mismatch at trial " + std::to_string(trial));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start)
                    .count();
  crit.expect(secs < 5.0, "runtime under 5 s");
  CHECK(crit.ok);
}

TEST_CASE("criterion 5: descent matches the exact LP on torus corpus cases") {
  Criterion crit("5 kempf-ness-consistency");
  for (const auto& c : corpus_cases()) {
    ProblemInstance inst = instantiate(c.spec);
    const LieAlgebra& g = *inst.algebra;
    LeviDecomposition ld = levi_decomposition(g, inst.subalgebra);
    if (ld.unip.basis.empty()) continue;
    Subalgebra acting = orthogonal_centralizer(g, ld.levi);
    if (!is_abelian(g, acting)) continue;
    TorusExtraction torus = extract_torus(g, acting, 0);
    if (!torus.spans_acting) continue;
    HomVector v = hom_vector(g, ld.unip);
    WeightSupport ws = weight_support(v, torus.basis);
    bool lp = instability_lp(ws).has_value();
    DescentResult dr = kempf_ness_descent(v, acting, 1e-6, 10000);
    bool match = lp ? dr.status == DescentStatus::ConvergedToZero
                    : dr.status == DescentStatus::ConvergedToPositiveMin;
    crit.expect(match, c.name + ": descent status " + to_string(dr.status) +
                           " vs LP " + (lp ? "feasible" : "infeasible"));
  }
  // the symmetric pair {(1), (-1)} with unit components has infimum 2
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), f = sl2.basis_element(2);
  Element half_h(scale(Rat(1, 2), sl2.basis_element(1).coords));
  HomVector vpair =
      hom_vector(sl2, make_subalgebra(sl2, {Element(add(e.coords, f.coords))}));
  Subalgebra acting = make_subalgebra(sl2, {half_h});
  WeightSupport wspair = weight_support(vpair, {half_h});
  bool weights_ok = wspair.weights.size() == 2 &&
                    wspair.weights[0] == QVec{Rat(-1)} &&
                    wspair.weights[1] == QVec{Rat(1)};
  crit.expect(weights_ok, "symmetric pair has weights {(1), (-1)}");
  DescentResult pair = kempf_ness_descent(vpair, acting, 1e-6, 10000);
  crit.expect(pair.status == DescentStatus::ConvergedToPositiveMin,
              "symmetric pair stalls at a positive minimum");
  crit.expect(std::abs(pair.norm_infimum_estimate - 2.0) <= 1e-6,
              "symmetric pair infimum is 2 within 1e-6");
  CHECK(crit.ok);
}

TEST_CASE("criterion 6: structural invariants are exact on the corpus") {
  Criterion crit("6 structural-invariants");
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);

  // Jacobi and Killing invariance on random rational elements
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  for (const LieAlgebra* g : {&sl2, &sl3}) {
    for (int trial = 0; trial < 100; ++trial) {
      QVec xc(g->dim()), yc(g->dim()), zc(g->dim());
      for (std::size_t i = 0; i < g->dim(); ++i) {
        xc[i] = Rat(num(rng));
        yc[i] = Rat(num(rng));
        zc[i] = Rat(num(rng));
      }
      Element x(xc), y(yc), z(zc);
      Element jac = bracket(*g, x, bracket(*g, y, z));
      jac.coords = add(jac.coords, bracket(*g, y, bracket(*g, z, x)).coords);
      jac.coords = add(jac.coords, bracket(*g, z, bracket(*g, x, y)).coords);
      if (!is_zero(jac.coords)) {
        crit.expect(false, "Jacobi identity failed on random elements");
        break;
      }
      if (killing_pair(*g, bracket(*g, x, y), z) !=
          killing_pair(*g, x, bracket(*g, y, z))) {
        crit.expect(false, "Killing invariance failed");
        break;
      }
    }
  }
  crit.expect(true, "randomized Jacobi and Killing invariance");

  // grading invariants on the sampled elements
  std::vector<std::pair<const LieAlgebra*, Element>> ss = {
      {&sl2, sl2.basis_element(1)},
      {&sl3, diag_element(sl3, {1, 0, -1})},
      {&sl3, diag_element(sl3, {1, 1, -2})},
      {&sl3, diag_element(sl3, {2, -1, -1})}};
  for (const auto& [g, s] : ss) {
    RationalGrading gr = grade(*g, s);
    for (const auto& [ei, bi] : gr.pieces)
      for (const auto& [ej, bj] : gr.pieces) {
        if (sgn(ei + ej) == 0) continue;
        for (const auto& x : bi)
          for (const auto& y : bj)
            crit.expect(killing_pair(*g, x, y) == Rat(0),
                        "piece orthogonality");
      }
    SpanBuilder nspan(g->dim());
    for (const auto& x : gr.n_basis) nspan.add(x.coords);
    for (const auto& p : gr.p_basis)
      for (const auto& x : gr.n_basis)
        crit.expect(nspan.contains(bracket(*g, p, x).coords),
                    "n_s ideal in p_s");
    for (const auto& q : gr.q_basis)
      for (const auto& x : gr.n_basis)
        crit.expect(nspan.contains(bracket(*g, q, x).coords),
                    "n_s ideal in q_s");
    for (const auto& x : gr.n_basis)
      crit.expect(is_nilpotent_matrix(g->ad(x)), "n_s nilpotency");
  }

  // orthogonal centralizer monotonicity
  {
    Element e12 = sl3.basis_element(0), e21 = sl3.basis_element(5);
    Element h1 = diag_element(sl3, {1, -1, 0});
    Subalgebra small = make_subalgebra(sl3, {h1});
    Subalgebra big = make_subalgebra(sl3, {e12, e21, h1});
    Subalgebra zs = orthogonal_centralizer(sl3, small);
    Subalgebra zb = orthogonal_centralizer(sl3, big);
    SpanBuilder span(sl3.dim());
    for (const auto& x : zs.basis) span.add(x.coords);
    for (const auto& x : zb.basis)
      crit.expect(span.contains(x.coords), "Z-perp monotonicity");
  }

  // nested-subgroup monotonicity of positive orbit verdicts
  {
    Element e12 = sl3.basis_element(0), e13 = sl3.basis_element(1),
            e23 = sl3.basis_element(2), e21 = sl3.basis_element(5);
    Element h1 = diag_element(sl3, {1, -1, 0});
    Verdict big = observability_check(
        sl3, make_subalgebra(sl3, {e12, e21, h1, e13, e23}));
    Verdict small1 = observability_check(sl3, make_subalgebra(sl3, {h1, e13}));
    Verdict small2 = observability_check(sl3, make_subalgebra(sl3, {e13}));
    crit.expect(big.answer == Answer::Yes, "outer subgroup verdict");
    crit.expect(small1.answer == Answer::Yes && small2.answer == Answer::Yes,
                "nested subgroup positive verdicts");
  }
  CHECK(crit.ok);
}

TEST_CASE("criterion 7: certificate soundness audit over all reports") {
  Criterion crit("7 certificate-soundness");
  for (const auto& c : corpus_cases()) {
    ProblemInstance inst = instantiate(c.spec);
    Transcript tr;
    Verdict v = c.question == Question::Observability
                    ? observability_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr)
                    : epimorphicity_check(*inst.algebra, inst.subalgebra,
                                          c.spec.options, &tr);
    Json report = build_report(c.spec, v, tr);
    VerifyResult vr = verify_report(report);
    for (const auto& f : vr.failures)
      crit.expect(false, c.name + ": " + f);
    crit.expect(vr.ok, c.name + ": verification outcome");
    if (v.exact)
      crit.expect(!report["verdict"]["certificate"].is_null(),
                  c.name + ": exact verdict carries a certificate");
  }
  CHECK(crit.ok);
}

TEST_CASE("criterion 8: corpus runs are byte-identical") {
  Criterion crit("8 determinism");
  const char* bin = std::getenv("ORBITCERT_BIN");
  auto capture = [&](const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
  };
  if (bin != nullptr) {
    std::string cmd = std::string(bin) + " --json --seed 0 corpus";
    std::string a = capture(cmd);
    std::string b = capture(cmd);
    crit.expect(!a.empty(), "corpus produced output");
    crit.expect(a == b, "two CLI corpus runs are byte-identical");
  } else {
    // in-process fallback when the binary path is not exported
    auto run = [&]() {
      std::string all;
      for (const auto& c : corpus_cases()) {
        ProblemInstance inst = instantiate(c.spec);
        Transcript tr;
        Verdict v = c.question == Question::Observability
                        ? observability_check(*inst.algebra, inst.subalgebra,
                                              c.spec.options, &tr)
                        : epimorphicity_check(*inst.algebra, inst.subalgebra,
                                              c.spec.options, &tr);
        all += build_report(c.spec, v, tr).dump();
      }
      return all;
    };
    crit.expect(run() == run(), "two in-process corpus runs are identical");
  }
  CHECK(crit.ok);
}
