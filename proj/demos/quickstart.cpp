// Minimal tour: build sl3, take the standard parabolic, and ask both
// questions. Run after building: ./build/demos/quickstart

#include <iostream>

#include "orbitcert/orbitcert.hpp"

using namespace orbitcert;

int main() {
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);

  // grade by s = diag(1, 1, -2); the nonnegative part is a maximal parabolic
  QMat m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = -2;
  Element s = *element_from_matrix(sl3, m);
  RationalGrading gr = grade(sl3, s);
  std::cout << "pieces of the grading by diag(1,1,-2):\n";
  for (const auto& [eig, basis] : gr.pieces)
    std::cout << "  eigenvalue " << to_string(eig) << ": dim " << basis.size()
              << "\n";

  Subalgebra parabolic = make_subalgebra(sl3, gr.p_basis);
  Verdict obs = observability_check(sl3, parabolic);
  Verdict epi = epimorphicity_check(sl3, parabolic);
  std::cout << "parabolic observability: " << to_string(obs.answer) << "\n";
  std::cout << "parabolic epimorphicity: " << to_string(epi.answer) << "\n";

  Subalgebra quasi = make_subalgebra(sl3, gr.q_basis);
  Verdict qobs = observability_check(sl3, quasi);
  std::cout << "quasiparabolic observability: " << to_string(qobs.answer);
  if (qobs.certificate_s)
    std::cout << " with certificate s = " << to_string(qobs.certificate_s->coords);
  std::cout << "\n";
  return 0;
}
