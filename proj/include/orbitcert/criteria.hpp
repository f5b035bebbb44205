#ifndef ORBITCERT_CRITERIA_HPP
#define ORBITCERT_CRITERIA_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbitcert/grading.hpp"
#include "orbitcert/orbit.hpp"
#include "orbitcert/table.hpp"

namespace orbitcert {

enum class Answer { Yes, No, Unknown };
enum class Question { Observability, Epimorphicity };

inline std::string to_string(Answer a) {
  switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    default: return "unknown";
  }
}

inline std::string to_string(Question q) {
  return q == Question::Observability ? "observability" : "epimorphicity";
}

struct SideCondition {
  std::string name;
  std::string outcome;
  std::string note;
};

struct ReductiveOvergroupReport {
  enum class Status { NotContained, Contained, Unknown };
  Status status = Status::Unknown;
  std::optional<std::vector<Element>> witness;
  std::string method = "table";  // or "user-assertion"
  std::string detail;
};

inline std::string to_string(ReductiveOvergroupReport::Status s) {
  switch (s) {
    case ReductiveOvergroupReport::Status::NotContained: return "not-contained";
    case ReductiveOvergroupReport::Status::Contained: return "contained";
    default: return "unknown";
  }
}

/// Decision record. A Yes observability verdict always carries a rational
/// semisimple element that passes the Sukhanov containments exactly; Unknown
/// names the sub-procedure that could not conclude.
struct Verdict {
  Question question = Question::Observability;
  Answer answer = Answer::Unknown;
  bool exact = false;
  double tolerance = 0.0;
  std::optional<Element> certificate_s;
  std::optional<OrbitVerdict> orbit;
  std::optional<ReductiveOvergroupReport> overgroup;
  std::vector<SideCondition> side_conditions;
  std::string failing_subprocedure;
};

struct CheckOptions {
  std::uint64_t seed = 0;
  double kn_tol = 1e-8;
  int kn_max_iter = 10000;
  bool assert_no_reductive_overgroup = false;

  OrbitOptions orbit_options() const {
    OrbitOptions o;
    o.kn_tol = kn_tol;
    o.kn_max_iter = kn_max_iter;
    return o;
  }
};

/// {z : [z, l] = 0 and (z, l) = 0}, the Lie algebra of the orthogonal
/// centralizer. Requires l reductive; the result is bracket-closed.
inline Subalgebra orthogonal_centralizer(const LieAlgebra& g,
                                         const Subalgebra& l) {
  if (!is_reductive(g, l)) throw NotReductiveInput();
  std::vector<QVec> rows;
  const QMat& killing = g.killing_matrix();
  for (const auto& b : l.basis) {
    QMat adb = g.ad(b);
    for (std::size_t r = 0; r < g.dim(); ++r) rows.push_back(adb.row(r));
    QVec krow(g.dim(), Rat(0));
    for (std::size_t c = 0; c < g.dim(); ++c) krow[c] = dot(killing.row(c), b.coords);
    rows.push_back(std::move(krow));
  }
  if (rows.empty()) return full_subalgebra(g);
  std::vector<Element> basis;
  for (auto& k : kernel(QMat::from_rows(rows))) basis.emplace_back(std::move(k));
  return make_subalgebra(g, std::move(basis));
}

namespace detail {

inline Subalgebra with_split(const LieAlgebra& g, const Subalgebra& h,
                             const LeviDecomposition& ld) {
  Subalgebra out = h;
  out.levi_part = ld.levi.basis;
  out.unipotent_radical = ld.unip.basis;
  return out;
}

}  // namespace detail

/// Observability of the connected subgroup with Lie algebra h, decided by the
/// 0-in-orbit-closure criterion over the orthogonal centralizer of a Levi
/// part. Positive answers always re-verify a Sukhanov certificate exactly.
inline Verdict observability_check(const LieAlgebra& g, const Subalgebra& h,
                                   const CheckOptions& opts = {},
                                   Transcript* tr = nullptr) {
  Verdict v;
  v.question = Question::Observability;
  LeviDecomposition ld = levi_decomposition(g, h);
  Subalgebra hs = detail::with_split(g, h, ld);
  if (tr)
    tr->add("levi_decomposition", Json{{"levi", json_of(ld.levi.basis)},
                                       {"unipotent_radical",
                                        json_of(ld.unip.basis)}});

  if (ld.unip.basis.empty()) {
    Element s0 = g.zero();
    SukhanovReport rep = sukhanov_certificate_check(g, hs, s0);
    if (!rep.ok()) throw Error("internal: s = 0 must certify a reductive input");
    v.answer = Answer::Yes;
    v.exact = true;
    v.certificate_s = s0;
    v.side_conditions.push_back(
        {"nonreductivity", "not-met",
         "input is reductive; reductive subgroups are observable and s = 0 "
         "certifies this via the trivial grading"});
    return v;
  }
  v.side_conditions.push_back({"nonreductivity", "met", ""});

  Subalgebra levi = ld.levi;
  Subalgebra z = orthogonal_centralizer(g, levi);
  if (tr) tr->add("orthogonal_centralizer", Json{{"basis", json_of(z.basis)}});

  HomVector vec = hom_vector(g, ld.unip);
  OrbitVerdict orbit =
      zero_in_orbit_closure(g, vec, z, opts.seed, opts.orbit_options(), tr);
  v.orbit = orbit;

  if (orbit.zero_in_closure_positive() && orbit.exact) {
    Element s = orbit.certificate->realized_s;
    SukhanovReport rep = sukhanov_certificate_check(g, hs, s);
    if (!rep.ok())
      throw Error("internal: instability certificate failed the Sukhanov "
                  "containments");
    if (tr) {
      Json eigs = Json::array();
      for (const auto& lam : verify_rational_semisimple(g, s))
        eigs.push_back(to_string(lam));
      tr->add("sukhanov_check", Json{{"s", json_of(s)},
                                     {"eigenvalues", eigs},
                                     {"h_in_q", rep.h_in_q},
                                     {"ru_in_n", rep.ru_in_n}});
    }
    v.answer = Answer::Yes;
    v.exact = true;
    v.certificate_s = s;
    return v;
  }
  if (!orbit.zero_in_closure_positive() && orbit.exact) {
    v.answer = Answer::No;
    v.exact = true;
    return v;
  }
  v.answer = Answer::Unknown;
  v.exact = false;
  v.tolerance = opts.kn_tol;
  v.failing_subprocedure = "zero_in_orbit_closure";
  return v;
}

/// Containment of h in a proper reductive subgroup, answered from the
/// built-in table of maximal reductive subalgebra representatives. Contained
/// answers are verified exactly; NotContained additionally relies on the
/// completeness of the tabulated classes.
inline ReductiveOvergroupReport not_in_proper_reductive(const LieAlgebra& g,
                                                        const Subalgebra& h,
                                                        std::uint64_t seed = 0) {
  ReductiveOvergroupReport out;
  bool h_reductive = false;
  try {
    h_reductive = is_reductive(g, h);
  } catch (const Error&) {
    out.status = ReductiveOvergroupReport::Status::Unknown;
    out.detail = "no Levi split available";
    return out;
  }
  if (h_reductive) {
    if (h.dim() == g.dim()) {
      out.status = ReductiveOvergroupReport::Status::NotContained;
      out.detail = "the whole algebra is contained in no proper subalgebra";
      return out;
    }
    out.status = ReductiveOvergroupReport::Status::Contained;
    out.witness = h.basis;
    out.detail = "a proper reductive subalgebra is its own reductive overgroup";
    return out;
  }

  auto table = overgroup_table(g);
  if (!table) {
    out.status = ReductiveOvergroupReport::Status::Unknown;
    out.detail = "algebra is not tabulated";
    return out;
  }

  // conjugation candidates: ad-nilpotent basis directions of g
  std::vector<Element> nil;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Element b = g.basis_element(i);
    if (detail::is_ad_nilpotent(g, b) && !b.is_zero()) nil.push_back(b);
  }
  std::mt19937_64 rng(seed ^ 0xda3e39cb94b95bdbull);
  std::uniform_int_distribution<int> coeff(-1, 1);

  bool all_excluded = true;
  for (const auto& rep : table->reps) {
    if (h.dim() > rep.basis.size()) continue;  // exact dimension exclusion
    if (rep.toral) continue;  // nonreductive h has nilpotents, tori do not
    SpanBuilder rspan = detail::span_of(g, rep.basis);
    // identity test, then seeded conjugate tests h <= exp(ad u)(rep)
    const int attempts = 24;
    for (int a = 0; a <= attempts; ++a) {
      QMat fwd = QMat::identity(g.dim());
      QMat bwd = fwd;
      if (a > 0) {
        if (nil.empty()) break;
        QVec u = zero_vector(g.dim());
        if (a <= static_cast<int>(2 * nil.size())) {
          int idx = (a - 1) / 2;
          u = scale(Rat((a - 1) % 2 == 0 ? 1 : -1), nil[idx].coords);
        } else {
          for (const auto& d : nil) {
            int f = coeff(rng);
            if (f != 0) u = add(u, scale(Rat(f), d.coords));
          }
        }
        Element ue(u);
        if (ue.is_zero() || !detail::is_ad_nilpotent(g, ue)) continue;
        bwd = exp_ad_nilpotent(g, Element(scale(Rat(-1), ue.coords)));
        fwd = exp_ad_nilpotent(g, ue);
      }
      bool inside = true;
      for (const auto& b : h.basis)
        if (!rspan.contains(bwd * b.coords)) {
          inside = false;
          break;
        }
      if (!inside) continue;
      // witness: the conjugated representative containing h
      std::vector<Element> wit;
      for (const auto& r : rep.basis) wit.emplace_back(fwd * r.coords);
      Subalgebra ws = make_subalgebra(g, wit);
      if (!is_reductive(g, ws)) continue;
      out.status = ReductiveOvergroupReport::Status::Contained;
      out.witness = wit;
      out.detail = "contained in a conjugate of: " + rep.name;
      return out;
    }
    all_excluded = false;  // this representative was not ruled out exactly
  }
  if (all_excluded) {
    out.status = ReductiveOvergroupReport::Status::NotContained;
    out.detail = "every tabulated class is excluded by dimension or torality";
    return out;
  }
  out.status = ReductiveOvergroupReport::Status::Unknown;
  out.detail = "conjugation search inconclusive against the table";
  return out;
}

/// Epimorphicity of the connected subgroup with Lie algebra h: closed orbit
/// plus no proper reductive overgroup.
inline Verdict epimorphicity_check(const LieAlgebra& g, const Subalgebra& h,
                                   const CheckOptions& opts = {},
                                   Transcript* tr = nullptr) {
  Verdict v;
  v.question = Question::Epimorphicity;
  LeviDecomposition ld = levi_decomposition(g, h);

  if (ld.unip.basis.empty()) {
    if (h.dim() == g.dim()) {
      v.answer = Answer::Yes;
      v.exact = true;
      v.side_conditions.push_back(
          {"whole-group", "met", "the group is epimorphic in itself"});
      return v;
    }
    v.answer = Answer::No;
    v.exact = true;
    ReductiveOvergroupReport rep;
    rep.status = ReductiveOvergroupReport::Status::Contained;
    rep.witness = h.basis;
    rep.detail = "a proper reductive subgroup is observable, never epimorphic";
    v.overgroup = rep;
    v.side_conditions.push_back(
        {"nonreductivity", "not-met",
         "proper reductive subgroups are never epimorphic"});
    return v;
  }
  v.side_conditions.push_back({"nonreductivity", "met", ""});

  Subalgebra z = orthogonal_centralizer(g, ld.levi);
  if (tr) tr->add("orthogonal_centralizer", Json{{"basis", json_of(z.basis)}});
  HomVector vec = hom_vector(g, ld.unip);
  OrbitVerdict orbit =
      orbit_closed(g, vec, z, opts.seed, opts.orbit_options(), tr);
  v.orbit = orbit;

  if (orbit.closedness_negative() && orbit.exact) {
    v.answer = Answer::No;
    v.exact = true;
    v.side_conditions.push_back({"orbit-closedness", "not-met", ""});
    return v;
  }
  if (orbit.kind == OrbitKind::ClosedOrbit && orbit.exact) {
    v.side_conditions.push_back({"orbit-closedness", "met", ""});
    ReductiveOvergroupReport rep;
    if (opts.assert_no_reductive_overgroup) {
      rep.status = ReductiveOvergroupReport::Status::NotContained;
      rep.method = "user-assertion";
      rep.detail = "asserted by the caller";
    } else {
      rep = not_in_proper_reductive(g, h, opts.seed);
    }
    v.overgroup = rep;
    switch (rep.status) {
      case ReductiveOvergroupReport::Status::NotContained:
        v.answer = Answer::Yes;
        v.exact = true;
        return v;
      case ReductiveOvergroupReport::Status::Contained:
        v.answer = Answer::No;
        v.exact = true;
        return v;
      default:
        v.answer = Answer::Unknown;
        v.exact = true;  // the gap is a declared table boundary, not numerics
        v.failing_subprocedure = "not_in_proper_reductive";
        return v;
    }
  }
  v.answer = Answer::Unknown;
  v.exact = false;
  v.tolerance = opts.kn_tol;
  v.failing_subprocedure = "orbit_closed";
  return v;
}

}  // namespace orbitcert

#endif
