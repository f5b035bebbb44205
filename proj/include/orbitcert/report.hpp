#ifndef ORBITCERT_REPORT_HPP
#define ORBITCERT_REPORT_HPP

#include <string>
#include <vector>

#include "orbitcert/problem.hpp"
#include "orbitcert/table.hpp"
#include "orbitcert/version.hpp"

namespace orbitcert {

namespace detail {

inline Json json_of_certificate(const Verdict& v) {
  if (v.question == Question::Observability) {
    if (v.answer == Answer::Yes && v.certificate_s) {
      Json c;
      c["type"] = "sukhanov";
      c["s"] = json_of(*v.certificate_s);
      return c;
    }
    if (v.answer == Answer::No && v.exact && v.orbit && v.orbit->gordan) {
      Json c;
      c["type"] = "gordan";
      c["torus"] = json_of(v.orbit->gordan->torus_basis);
      c["weights"] = json_of(v.orbit->gordan->weights);
      c["combination"] = json_of(v.orbit->gordan->combination);
      return c;
    }
    return nullptr;
  }
  // epimorphicity
  if (v.answer == Answer::Yes && !v.orbit) {
    Json c;
    c["type"] = "whole-algebra";
    return c;
  }
  if (v.answer == Answer::Yes && v.orbit && v.orbit->relint) {
    Json c;
    c["type"] = "closed-orbit";
    c["torus"] = json_of(v.orbit->relint->torus_basis);
    c["weights"] = json_of(v.orbit->relint->weights);
    c["relint_combinations"] = json_of(v.orbit->relint->combinations);
    return c;
  }
  if (v.answer == Answer::No && v.overgroup && v.overgroup->witness) {
    Json c;
    c["type"] = "reductive-overgroup";
    c["witness"] = json_of(*v.overgroup->witness);
    c["method"] = v.overgroup->method;
    c["detail"] = v.overgroup->detail;
    return c;
  }
  if (v.answer == Answer::No && v.orbit && v.orbit->certificate) {
    const OneParameterCertificate& opc = *v.orbit->certificate;
    Json c;
    c["type"] = v.orbit->kind == OrbitKind::ZeroInClosure
                    ? "instability"
                    : "nonclosedness-witness";
    c["torus"] = json_of(opc.torus_basis);
    c["lambda"] = json_of(opc.lambda);
    c["realized_s"] = json_of(opc.realized_s);
    c["weights"] = json_of(opc.weights);
    Json pairings = Json::array();
    for (const auto& p : opc.pairings) pairings.push_back(to_string(p));
    c["pairings"] = pairings;
    if (v.orbit->boundary) {
      c["conjugator"] = json_of(v.orbit->boundary->conjugator);
      c["limit"] = json_of(v.orbit->boundary->limit_images);
      c["orbit_dim_v"] = v.orbit->boundary->orbit_dim_v;
      c["orbit_dim_limit"] = v.orbit->boundary->orbit_dim_limit;
    }
    return c;
  }
  return nullptr;
}

}  // namespace detail

/// Machine-readable report. Deterministic for a fixed (problem, seed): the
/// transcript, certificate and ordering carry no timestamps or addresses.
inline Json build_report(const ProblemSpec& spec, const Verdict& v,
                         const Transcript& tr) {
  Json rep;
  Json tool;
  tool["name"] = kToolName;
  tool["version"] = kToolVersion;
  tool["table_version"] = kOvergroupTableVersion;
  rep["tool"] = tool;
  rep["question"] = to_string(v.question);
  rep["problem"] = serialize(spec);
  Json verdict;
  verdict["answer"] = to_string(v.answer);
  Json conf;
  conf["kind"] = v.exact ? "exact" : "numerical";
  if (!v.exact) conf["tolerance"] = v.tolerance;
  verdict["confidence"] = conf;
  verdict["certificate"] = detail::json_of_certificate(v);
  if (v.overgroup) {
    Json og;
    og["status"] = to_string(v.overgroup->status);
    og["method"] = v.overgroup->method;
    if (v.overgroup->witness) og["witness"] = json_of(*v.overgroup->witness);
    og["detail"] = v.overgroup->detail;
    verdict["overgroup"] = og;
  }
  Json side = Json::array();
  for (const auto& sc : v.side_conditions) {
    Json s;
    s["name"] = sc.name;
    s["outcome"] = sc.outcome;
    if (!sc.note.empty()) s["note"] = sc.note;
    side.push_back(s);
  }
  verdict["side_conditions"] = side;
  if (!v.failing_subprocedure.empty())
    verdict["failing_subprocedure"] = v.failing_subprocedure;
  if (v.orbit && v.orbit->numerics) {
    Json num;
    num["status"] = to_string(v.orbit->numerics->status);
    num["value"] = v.orbit->numerics->value;
    num["grad_norm"] = v.orbit->numerics->grad_norm;
    num["iterations"] = v.orbit->numerics->iterations;
    num["tolerance"] = v.orbit->numerics->tolerance;
    verdict["numerics"] = num;
  }
  rep["verdict"] = verdict;
  rep["transcript"] = tr.steps;
  return rep;
}

// ---------------------------------------------------------------------------
// independent certificate re-verification
// ---------------------------------------------------------------------------

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> checks;
  std::vector<std::string> failures;

  void pass(const std::string& what) { checks.push_back(what); }
  void fail(const std::string& what) {
    ok = false;
    failures.push_back(what);
  }
  void require(bool cond, const std::string& what) {
    if (cond)
      pass(what);
    else
      fail(what);
  }
};

namespace detail {

inline std::vector<Element> parse_elements(const LieAlgebra& g, const Json& arr) {
  std::vector<Element> out;
  for (const auto& row : arr) {
    QVec v;
    for (const auto& x : row) v.push_back(rational_at(x, "$.certificate"));
    out.push_back(g.element(std::move(v)));
  }
  return out;
}

inline std::vector<QVec> parse_vectors(const Json& arr) {
  std::vector<QVec> out;
  for (const auto& row : arr) {
    QVec v;
    for (const auto& x : row) v.push_back(rational_at(x, "$.certificate"));
    out.push_back(std::move(v));
  }
  return out;
}

inline bool same_weight_sets(const std::vector<QVec>& a,
                             const std::vector<QVec>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

/// Shared setup: acting algebra and inclusion vector of the problem.
struct VerifyContext {
  ProblemInstance inst;
  LeviDecomposition ld;
  Subalgebra acting;
  HomVector v;
};

inline VerifyContext verify_context(const ProblemSpec& spec) {
  VerifyContext ctx;
  ctx.inst = instantiate(spec);
  const LieAlgebra& g = *ctx.inst.algebra;
  ctx.ld = levi_decomposition(g, ctx.inst.subalgebra);
  ctx.acting = orthogonal_centralizer(g, ctx.ld.levi);
  ctx.v = hom_vector(g, ctx.ld.unip);
  return ctx;
}

inline bool torus_inside_acting(const LieAlgebra& g, const Subalgebra& acting,
                                const std::vector<Element>& torus) {
  SpanBuilder span = detail::span_of(g, acting.basis);
  for (const auto& t : torus)
    if (!span.contains(t.coords)) return false;
  return true;
}

inline bool torus_spans_abelian_acting(const LieAlgebra& g,
                                       const Subalgebra& acting,
                                       const std::vector<Element>& torus) {
  if (!is_abelian(g, acting)) return false;
  SpanBuilder span = detail::span_of(g, torus);
  if (span.size() != acting.dim()) return false;
  return torus_inside_acting(g, acting, torus);
}

}  // namespace detail

/// Re-checks every certificate in a report from the serialized data alone.
/// The problem is re-instantiated from the embedded problem block; exact
/// claims must re-verify with exact arithmetic.
inline VerifyResult verify_report(const Json& report) {
  VerifyResult res;
  if (!report.contains("problem") || !report.contains("verdict")) {
    res.fail("report has problem and verdict blocks");
    return res;
  }
  ProblemSpec spec;
  try {
    spec = parse_problem(report["problem"]);
  } catch (const Error& e) {
    res.fail(std::string("problem block parses: ") + e.what());
    return res;
  }
  const Json& verdict = report["verdict"];
  const std::string answer = verdict.value("answer", "");
  const std::string question = report.value("question", "");
  const bool exact = verdict.contains("confidence") &&
                     verdict["confidence"].value("kind", "") == "exact";
  if (answer == "unknown") {
    res.pass("unknown answers carry no certificate obligations");
    return res;
  }
  if (!exact) {
    res.pass("non-exact verdict carries no exact certificate obligations");
    return res;
  }
  const Json& cert = verdict["certificate"];
  if (cert.is_null()) {
    res.fail("exact verdict must carry a certificate");
    return res;
  }

  try {
    detail::VerifyContext ctx = detail::verify_context(spec);
    const LieAlgebra& g = *ctx.inst.algebra;
    const Subalgebra& h = ctx.inst.subalgebra;
    const std::string type = cert.value("type", "");

    if (type == "sukhanov") {
      QVec s;
      for (const auto& x : cert["s"]) s.push_back(detail::rational_at(x, "$.s"));
      Element se = g.element(s);
      verify_rational_semisimple(g, se);
      res.pass("certificate s is rational semisimple");
      SukhanovReport rep = sukhanov_certificate_check(g, h, se);
      res.require(rep.h_in_q, "lie(h) contained in q_s");
      res.require(rep.ru_in_n, "lie(R_u h) contained in n_s");
      res.require(question == "observability" && answer == "yes",
                  "certificate type matches the verdict");
      return res;
    }

    if (type == "gordan") {
      std::vector<Element> torus = detail::parse_elements(g, cert["torus"]);
      res.require(detail::torus_spans_abelian_acting(g, ctx.acting, torus),
                  "torus spans the abelian acting algebra");
      WeightSupport ws = weight_support(ctx.v, torus);
      res.require(detail::same_weight_sets(ws.weights,
                                           detail::parse_vectors(cert["weights"])),
                  "serialized weights equal the recomputed support");
      QVec y;
      for (const auto& x : cert["combination"])
        y.push_back(detail::rational_at(x, "$.combination"));
      bool nonneg = y.size() == ws.weights.size();
      Rat total = 0;
      QVec combo = zero_vector(torus.size());
      for (std::size_t i = 0; i < y.size() && nonneg; ++i) {
        nonneg = sgn(y[i]) >= 0;
        total += y[i];
        combo = add(combo, scale(y[i], ws.weights[i]));
      }
      res.require(nonneg && total == 1 && is_zero(combo),
                  "Gordan combination is convex and sums the weights to zero");
      res.require(answer == "no", "certificate type matches the verdict");
      return res;
    }

    if (type == "instability" || type == "nonclosedness-witness") {
      std::vector<Element> torus = detail::parse_elements(g, cert["torus"]);
      res.require(detail::torus_inside_acting(g, ctx.acting, torus),
                  "torus lies in the acting algebra");
      WeightSupport ws = weight_support(ctx.v, torus);
      res.require(detail::same_weight_sets(ws.weights,
                                           detail::parse_vectors(cert["weights"])),
                  "serialized weights equal the recomputed support");
      QVec lambda;
      for (const auto& x : cert["lambda"])
        lambda.push_back(detail::rational_at(x, "$.lambda"));
      QVec s = zero_vector(g.dim());
      for (std::size_t j = 0; j < torus.size(); ++j)
        s = add(s, scale(lambda[j], torus[j].coords));
      QVec s_ser;
      for (const auto& x : cert["realized_s"])
        s_ser.push_back(detail::rational_at(x, "$.realized_s"));
      res.require(s == s_ser, "realized_s equals sum lambda_j t_j");
      if (type == "instability") {
        bool all_pos = !ws.weights.empty() || ctx.v.is_zero();
        for (const auto& w : ws.weights)
          all_pos = all_pos && sgn(dot(w, lambda)) > 0;
        res.require(all_pos, "all support pairings are strictly positive");
        if (question == "epimorphicity")
          res.require(answer == "no" && !ctx.v.is_zero(),
                      "0 in the closure of a nonzero orbit implies not closed");
      } else {
        bool nonneg = true, some_pos = false;
        for (const auto& w : ws.weights) {
          int sg = sgn(dot(w, lambda));
          nonneg = nonneg && sg >= 0;
          some_pos = some_pos || sg > 0;
        }
        res.require(nonneg && some_pos,
                    "witness pairings are nonnegative with one positive");
        if (cert.contains("limit")) {
          std::vector<Element> limit = detail::parse_elements(g, cert["limit"]);
          std::vector<Element> recomputed(ws.domain_size,
                                          Element(zero_vector(g.dim())));
          Element u(zero_vector(g.dim()));
          if (cert.contains("conjugator")) {
            QVec uc;
            for (const auto& x : cert["conjugator"])
              uc.push_back(detail::rational_at(x, "$.conjugator"));
            u = g.element(uc);
          }
          HomVector moved = u.is_zero()
                                ? ctx.v
                                : apply_to_images(ctx.v, exp_ad_nilpotent(g, u));
          WeightSupport wsm = weight_support(moved, torus);
          recomputed = detail::limit_along(wsm, lambda, g);
          bool same = limit.size() == recomputed.size();
          for (std::size_t i = 0; i < limit.size() && same; ++i)
            same = limit[i].coords == recomputed[i].coords;
          res.require(same, "limit point recomputes from the direction");
          std::size_t dv = detail::orbit_dimension(g, moved.images, ctx.acting);
          std::size_t dl = detail::orbit_dimension(g, recomputed, ctx.acting);
          res.require(dl < dv, "orbit dimension drops at the limit");
        } else {
          res.require(detail::torus_spans_abelian_acting(g, ctx.acting, torus),
                      "torus witness is exact only for the full torus action");
        }
        res.require(answer == "no", "certificate type matches the verdict");
      }
      return res;
    }

    if (type == "closed-orbit") {
      if (ctx.v.is_zero()) {
        res.pass("v = 0: the orbit {0} is closed");
        return res;
      }
      std::vector<Element> torus = detail::parse_elements(g, cert["torus"]);
      res.require(detail::torus_spans_abelian_acting(g, ctx.acting, torus),
                  "closedness certificate applies to a torus action");
      WeightSupport ws = weight_support(ctx.v, torus);
      res.require(detail::same_weight_sets(ws.weights,
                                           detail::parse_vectors(cert["weights"])),
                  "serialized weights equal the recomputed support");
      const Json& combos = cert["relint_combinations"];
      bool all_ok = combos.size() == ws.weights.size();
      for (std::size_t a = 0; a < combos.size() && all_ok; ++a) {
        QVec y;
        for (const auto& x : combos[a]) y.push_back(detail::rational_at(x, "$"));
        if (y.size() != ws.weights.size()) {
          all_ok = false;
          break;
        }
        QVec sum = ws.weights.empty() ? QVec{} : ws.weights[a];
        for (std::size_t i = 0; i < y.size(); ++i) {
          if (sgn(y[i]) < 0) all_ok = false;
          sum = add(sum, scale(y[i], ws.weights[i]));
        }
        all_ok = all_ok && is_zero(sum);
      }
      res.require(all_ok, "every weight cancels by a nonnegative combination");
      // the closedness half alone does not decide epimorphicity; the
      // overgroup block carries the rest
      if (verdict.contains("overgroup")) {
        const Json& og = verdict["overgroup"];
        std::string status = og.value("status", "");
        std::string method = og.value("method", "table");
        if (status == "not-contained" && method == "table") {
          ReductiveOvergroupReport rep =
              not_in_proper_reductive(g, h, spec.options.seed);
          res.require(
              rep.status == ReductiveOvergroupReport::Status::NotContained,
              "table re-run confirms no reductive overgroup");
        } else if (status == "not-contained") {
          res.pass("no-reductive-overgroup accepted by user assertion");
        } else if (status == "contained" && og.contains("witness")) {
          std::vector<Element> wit = detail::parse_elements(g, og["witness"]);
          Subalgebra wsub = make_subalgebra(g, wit);
          bool contains = true;
          SpanBuilder span = detail::span_of(g, wit);
          for (const auto& b : h.basis)
            contains = contains && span.contains(b.coords);
          res.require(contains && wsub.dim() < g.dim() && is_reductive(g, wsub),
                      "overgroup witness is a proper reductive subalgebra "
                      "containing h");
        }
      }
      return res;
    }

    if (type == "reductive-overgroup") {
      std::vector<Element> wit = detail::parse_elements(g, cert["witness"]);
      Subalgebra wsub = make_subalgebra(g, wit);
      bool contains = true;
      SpanBuilder span = detail::span_of(g, wit);
      for (const auto& b : h.basis)
        contains = contains && span.contains(b.coords);
      res.require(contains && wsub.dim() < g.dim() && is_reductive(g, wsub),
                  "witness is a proper reductive subalgebra containing h");
      res.require(answer == "no", "certificate type matches the verdict");
      return res;
    }

    if (type == "whole-algebra") {
      res.require(h.dim() == g.dim() && answer == "yes",
                  "h spans the whole algebra");
      return res;
    }

    res.fail("unknown certificate type: " + type);
  } catch (const Error& e) {
    res.fail(std::string("verification raised: ") + e.what());
  }
  return res;
}

}  // namespace orbitcert

#endif
