#ifndef ORBITCERT_CORPUS_HPP
#define ORBITCERT_CORPUS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "orbitcert/problem.hpp"

namespace orbitcert {

/// A built-in regression case: a problem, the question asked, the expected
/// answer, and conjugations for the independent certificate-search oracle.
struct CorpusCase {
  std::string name;
  ProblemSpec spec;
  Question question;
  Answer expected;
  std::vector<QVec> stored_conjugations;  // ad-nilpotent conjugator elements
};

namespace detail {

inline QVec coords_of(const LieAlgebra& g, const QMat& m) {
  auto e = element_from_matrix(g, m);
  if (!e) throw Error("internal: corpus matrix outside the algebra");
  return e->coords;
}

inline QMat diag3(long a, long b, long c) {
  QMat m(3, 3);
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace detail

/// The shipped regression corpus over sl2 and sl3. Every expected verdict is
/// exact and certificate-backed.
inline std::vector<CorpusCase> corpus_cases() {
  std::vector<CorpusCase> cases;
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);

  auto add = [&](const std::string& name, ClassicalFamily fam, int n,
                 std::vector<QVec> basis, Question q, Answer expected,
                 std::vector<QVec> conj = {}) {
    CorpusCase c;
    c.name = name;
    c.spec.algebra.classical = ClassicalId{fam, n};
    c.spec.basis = std::move(basis);
    c.question = q;
    c.expected = expected;
    c.stored_conjugations = std::move(conj);
    cases.push_back(std::move(c));
  };

  // sl2 in basis order (E12, H1, E21)
  QVec e{Rat(1), Rat(0), Rat(0)};
  QVec h{Rat(0), Rat(1), Rat(0)};
  QVec f{Rat(0), Rat(0), Rat(1)};
  QVec emhf{Rat(1), Rat(-1), Rat(-1)};  // e - h - f

  add("sl2-line-e-obs", ClassicalFamily::sl, 2, {e}, Question::Observability,
      Answer::Yes);
  add("sl2-line-e-epi", ClassicalFamily::sl, 2, {e}, Question::Epimorphicity,
      Answer::No);
  add("sl2-borel-obs", ClassicalFamily::sl, 2, {e, h}, Question::Observability,
      Answer::No);
  add("sl2-borel-epi", ClassicalFamily::sl, 2, {e, h}, Question::Epimorphicity,
      Answer::Yes);
  add("sl2-torus-obs", ClassicalFamily::sl, 2, {h}, Question::Observability,
      Answer::Yes);
  add("sl2-torus-epi", ClassicalFamily::sl, 2, {h}, Question::Epimorphicity,
      Answer::No);
  add("sl2-whole-epi", ClassicalFamily::sl, 2, {e, h, f},
      Question::Epimorphicity, Answer::Yes);
  add("sl2-conjugated-line-obs", ClassicalFamily::sl, 2, {emhf},
      Question::Observability, Answer::Yes, {e, f});
  add("sl2-conjugated-line-epi", ClassicalFamily::sl, 2, {emhf},
      Question::Epimorphicity, Answer::No, {e, f});
  {
    // the quasiparabolic of s = h in sl2 is the nilpotent line
    RationalGrading gr = grade(sl2, sl2.element(h));
    std::vector<QVec> qb;
    for (const auto& x : gr.q_basis) qb.push_back(x.coords);
    add("sl2-quasiparabolic-h-obs", ClassicalFamily::sl, 2, qb,
        Question::Observability, Answer::Yes);
  }

  // sl3 in basis order (E12, E13, E23, H1, H2, E21, E31, E32)
  auto el = [&](const QMat& m) { return detail::coords_of(sl3, m); };
  QMat E12 = detail::unit_matrix(3, 0, 1);
  QMat E13 = detail::unit_matrix(3, 0, 2);
  QMat E23 = detail::unit_matrix(3, 1, 2);
  QMat E21 = detail::unit_matrix(3, 1, 0);
  QVec block_e12 = el(E12), block_e21 = el(E21);
  QVec block_h = el(detail::diag3(1, -1, 0));
  QVec rad_e13 = el(E13), rad_e23 = el(E23);

  auto quasi = [&](const QMat& s) {
    RationalGrading gr = grade(sl3, sl3.element(el(s)));
    std::vector<QVec> qb;
    for (const auto& x : gr.q_basis) qb.push_back(x.coords);
    return qb;
  };
  add("sl3-quasiparabolic-reg-obs", ClassicalFamily::sl, 3,
      quasi(detail::diag3(1, 0, -1)), Question::Observability, Answer::Yes);
  add("sl3-quasiparabolic-reg-epi", ClassicalFamily::sl, 3,
      quasi(detail::diag3(1, 0, -1)), Question::Epimorphicity, Answer::No);
  add("sl3-quasiparabolic-wall-obs", ClassicalFamily::sl, 3,
      quasi(detail::diag3(1, 1, -2)), Question::Observability, Answer::Yes);
  add("sl3-quasiparabolic-mirror-obs", ClassicalFamily::sl, 3,
      quasi(detail::diag3(2, -1, -1)), Question::Observability, Answer::Yes);
  add("sl3-block-radical-obs", ClassicalFamily::sl, 3,
      {block_e12, block_e21, block_h, rad_e13, rad_e23},
      Question::Observability, Answer::Yes);
  add("sl3-block-obs", ClassicalFamily::sl, 3,
      {block_e12, block_e21, block_h}, Question::Observability, Answer::Yes);
  add("sl3-block-epi", ClassicalFamily::sl, 3,
      {block_e12, block_e21, block_h}, Question::Epimorphicity, Answer::No);
  add("sl3-radical-obs", ClassicalFamily::sl, 3, {rad_e13, rad_e23},
      Question::Observability, Answer::Yes);
  {
    // full parabolic: nonnegative part of the grading by diag(1, 1, -2)
    RationalGrading gr = grade(sl3, sl3.element(el(detail::diag3(1, 1, -2))));
    std::vector<QVec> pb;
    for (const auto& x : gr.p_basis) pb.push_back(x.coords);
    add("sl3-parabolic-obs", ClassicalFamily::sl, 3, pb,
        Question::Observability, Answer::No);
    add("sl3-parabolic-epi", ClassicalFamily::sl, 3, pb,
        Question::Epimorphicity, Answer::Yes);
  }
  {
    std::vector<QVec> full;
    for (std::size_t i = 0; i < sl3.dim(); ++i)
      full.push_back(sl3.basis_element(i).coords);
    add("sl3-whole-epi", ClassicalFamily::sl, 3, full, Question::Epimorphicity,
        Answer::Yes);
  }

  std::sort(cases.begin(), cases.end(),
            [](const CorpusCase& a, const CorpusCase& b) {
              return a.name < b.name;
            });
  return cases;
}

}  // namespace orbitcert

#endif
