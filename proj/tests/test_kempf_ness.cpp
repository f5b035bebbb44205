#include <catch2/catch_amalgamated.hpp>

#include "orbitcert/kempf_ness.hpp"

using namespace orbitcert;

TEST_CASE("descent on the symmetric weight pair stalls at value 2") {
  // v = e + f under the torus spanned by h/2: weights (1) and (-1) with unit
  // components, f(t) = exp(2t) + exp(-2t) with infimum 2 at t = 0
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), f = sl2.basis_element(2);
  Element half_h(scale(Rat(1, 2), sl2.basis_element(1).coords));
  Subalgebra acting = make_subalgebra(sl2, {half_h});
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {Element(add(e.coords, f.coords))}));
  DescentResult r = kempf_ness_descent(v, acting, 1e-6, 10000);
  CHECK(r.status == DescentStatus::ConvergedToPositiveMin);
  CHECK(r.norm_infimum_estimate == Catch::Approx(2.0).margin(1e-6));
}

TEST_CASE("descent drives a single positive weight to zero") {
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  Element e13 = sl3.basis_element(1), e23 = sl3.basis_element(2);
  QMat m(3, 3);
  m(0, 0) = 1;
  m(1, 1) = 1;
  m(2, 2) = -2;
  Subalgebra torus = make_subalgebra(sl3, {*element_from_matrix(sl3, m)});
  HomVector v = hom_vector(sl3, make_subalgebra(sl3, {e13, e23}));
  DescentResult r = kempf_ness_descent(v, torus, 1e-6, 10000);
  CHECK(r.status == DescentStatus::ConvergedToZero);
  CHECK(r.norm_infimum_estimate < 1e-6);
}

TEST_CASE("zero vector converges immediately") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  HomVector v = hom_vector(sl2, trivial_subalgebra(sl2));
  DescentResult r = kempf_ness_descent(v, full_subalgebra(sl2));
  CHECK(r.status == DescentStatus::ConvergedToZero);
  CHECK(r.iterations == 0);
}

TEST_CASE("non-reductive acting algebra is rejected") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0);
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  CHECK_THROWS_AS(kempf_ness_descent(v, make_subalgebra(sl2, {e})),
                  NonReductiveActingAlgebra);
  CHECK_THROWS_AS(kempf_ness_descent(v, full_subalgebra(sl2), -1.0),
                  UnsupportedParameter);
}
