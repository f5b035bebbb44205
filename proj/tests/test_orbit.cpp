#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracles.hpp"
#include "orbitcert/orbit.hpp"

using namespace orbitcert;

namespace {

Element diag_element(const LieAlgebra& g, std::vector<long> d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Rat(d[i]);
  auto e = element_from_matrix(g, m);
  REQUIRE(e.has_value());
  return *e;
}

}  // namespace

TEST_CASE("hom_vector is the inclusion") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Subalgebra line = make_subalgebra(sl2, {sl2.basis_element(0)});
  HomVector v = hom_vector(sl2, line);
  REQUIRE(v.columns() == 1);
  CHECK(v.images[0].coords == v.domain_basis[0].coords);
  HomVector empty = hom_vector(sl2, trivial_subalgebra(sl2));
  CHECK(empty.columns() == 0);
  CHECK(empty.is_zero());
}

TEST_CASE("weight_support examples") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), h = sl2.basis_element(1);
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  WeightSupport ws = weight_support(v, {h});
  REQUIRE(ws.weights.size() == 1);
  CHECK(ws.weights[0] == QVec{Rat(2)});

  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  Element e13 = sl3.basis_element(1), e23 = sl3.basis_element(2);
  HomVector v3 = hom_vector(sl3, make_subalgebra(sl3, {e13, e23}));
  WeightSupport ws3 = weight_support(v3, {diag_element(sl3, {1, 1, -2})});
  REQUIRE(ws3.weights.size() == 1);
  CHECK(ws3.weights[0] == QVec{Rat(3)});

  // empty torus: the whole vector sits at the empty weight
  WeightSupport ws0 = weight_support(v3, {});
  REQUIRE(ws0.weights.size() == 1);
  CHECK(ws0.weights[0].empty());

  // components reconstruct the vector
  WeightSupport wsc =
      weight_support(v3, {diag_element(sl3, {1, -1, 0}),
                          diag_element(sl3, {0, 1, -1})});
  for (std::size_t col = 0; col < v3.columns(); ++col) {
    QVec sum = zero_vector(sl3.dim());
    for (std::size_t w = 0; w < wsc.weights.size(); ++w)
      sum = add(sum, wsc.component_images[w][col].coords);
    CHECK(sum == v3.images[col].coords);
  }
}

TEST_CASE("weight_support rejects bad tori") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), h = sl2.basis_element(1);
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  CHECK_THROWS_AS(weight_support(v, {h, e}), Error);  // e not semisimple
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  Element a = diag_element(sl3, {1, -1, 0});
  Element b = sl3.basis_element(0);  // E12 does not commute with much
  HomVector v3 = hom_vector(sl3, make_subalgebra(sl3, {sl3.basis_element(1)}));
  CHECK_THROWS_AS(weight_support(v3, {b, a}), Error);
}

TEST_CASE("exp of nilpotent conjugation round-trips") {
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  Element e13 = sl3.basis_element(1), e23 = sl3.basis_element(2);
  HomVector v = hom_vector(sl3, make_subalgebra(sl3, {e13, e23}));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 20; ++trial) {
    QVec u = zero_vector(sl3.dim());
    // random combination of strictly upper root vectors stays nilpotent
    u[0] = Rat(c(rng));
    u[1] = Rat(c(rng));
    u[2] = Rat(c(rng));
    Element ue(u);
    QMat fwd = exp_ad_nilpotent(sl3, ue);
    QMat bwd = exp_ad_nilpotent(sl3, Element(scale(Rat(-1), u)));
    HomVector round = apply_to_images(apply_to_images(v, fwd), bwd);
    for (std::size_t k = 0; k < v.columns(); ++k)
      CHECK(round.images[k].coords == v.images[k].coords);
  }
  CHECK_THROWS_AS(exp_ad_nilpotent(sl3, diag_element(sl3, {1, 0, -1})),
                  UnsupportedParameter);
}

TEST_CASE("instability and closedness LP examples") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  auto support = [&](std::vector<QVec> w, std::size_t d) {
    return oracles::synthetic_support(sl2, std::move(w), d);
  };
  // single weight (3)
  auto c1 = instability_lp(support({{Rat(3)}}, 1));
  REQUIRE(c1.has_value());
  CHECK(sgn(c1->pairings[0]) > 0);
  // lambda is cleared to integers
  CHECK(c1->lambda[0].get_den() == 1);
  // opposite weights
  CHECK_FALSE(instability_lp(support({{Rat(1)}, {Rat(-1)}}, 1)).has_value());
  auto g1 = gordan_certificate(support({{Rat(1)}, {Rat(-1)}}, 1));
  REQUIRE(g1.has_value());
  CHECK(g1->combination == QVec{Rat(1, 2), Rat(1, 2)});
  // {(2,1), (-1,1)}
  auto c2 = instability_lp(support({{Rat(2), Rat(1)}, {Rat(-1), Rat(1)}}, 2));
  REQUIRE(c2.has_value());
  for (const auto& p : c2->pairings) CHECK(sgn(p) > 0);

  // closedness
  CHECK(closedness_lp(support({{Rat(1)}, {Rat(-1)}}, 1)).closed);
  CHECK(closedness_lp(support({{Rat(0)}}, 1)).closed);
  auto cl = closedness_lp(support({{Rat(3)}}, 1));
  CHECK_FALSE(cl.closed);
  REQUIRE(cl.witness.has_value());
  CHECK(sgn(cl.witness->pairings[0]) > 0);
  // empty support is closed
  CHECK(closedness_lp(support({}, 1)).closed);
}

TEST_CASE("LP agrees with the box oracle on random weight systems") {
  std::mt19937_64 rng(2024);
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  for (int trial = 0; trial < 100; ++trial) {
    auto sys = oracles::random_weight_system(rng);
    WeightSupport ws = oracles::synthetic_support(sl2, sys.weights, sys.d);
    bool lp = instability_lp(ws).has_value();
    CHECK(lp == oracles::box_instability(sys.weights, sys.d));
    bool closed = closedness_lp(ws).closed;
    CHECK(closed == !oracles::box_nonclosed_witness(sys.weights, sys.d));
    // never both destabilizable and closed for nonempty support
    if (!sys.weights.empty() && lp) CHECK_FALSE(closed);
  }
}

TEST_CASE("instability verdict is invariant under torus rescaling") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    auto sys = oracles::random_weight_system(rng);
    WeightSupport ws = oracles::synthetic_support(sl2, sys.weights, sys.d);
    // rescale torus coordinates by positive rationals: weights scale rowwise
    WeightSupport scaled = ws;
    std::uniform_int_distribution<int> num(1, 3);
    QVec factors(sys.d);
    for (auto& f : factors) f = Rat(num(rng), num(rng));
    for (auto& w : scaled.weights)
      for (std::size_t j = 0; j < sys.d; ++j) w[j] *= factors[j];
    CHECK(instability_lp(ws).has_value() ==
          instability_lp(scaled).has_value());
  }
}

TEST_CASE("zero_in_orbit_closure examples") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), h = sl2.basis_element(1);
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  OrbitVerdict full = zero_in_orbit_closure(sl2, v, full_subalgebra(sl2), 0);
  CHECK(full.kind == OrbitKind::ZeroInClosure);
  CHECK(full.exact);
  REQUIRE(full.certificate.has_value());
  CHECK(full.certificate->realized_s.coords == h.coords);

  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  Element e13 = sl3.basis_element(1), e23 = sl3.basis_element(2);
  HomVector v3 = hom_vector(sl3, make_subalgebra(sl3, {e13, e23}));
  Subalgebra torus =
      make_subalgebra(sl3, {diag_element(sl3, {1, 1, -2})});
  OrbitVerdict t = zero_in_orbit_closure(sl3, v3, torus, 0);
  CHECK(t.kind == OrbitKind::ZeroInClosure);
  CHECK(t.exact);

  // trivial acting group, nonzero vector: exact negative
  OrbitVerdict triv =
      zero_in_orbit_closure(sl2, v, trivial_subalgebra(sl2), 0);
  CHECK_FALSE(triv.zero_in_closure_positive());
  CHECK(triv.exact);
  CHECK(triv.gordan.has_value());

  // zero vector: trivially positive
  HomVector vz = hom_vector(sl2, trivial_subalgebra(sl2));
  OrbitVerdict z = zero_in_orbit_closure(sl2, vz, full_subalgebra(sl2), 0);
  CHECK(z.kind == OrbitKind::ZeroInClosure);
  CHECK(z.exact);
}

TEST_CASE("zero_in_orbit_closure requires a reductive acting algebra") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0);
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  CHECK_THROWS_AS(
      zero_in_orbit_closure(sl2, v, make_subalgebra(sl2, {e}), 0),
      NonReductiveActingAlgebra);
}

TEST_CASE("conjugation exposes hidden instability") {
  // <e - h - f> is a nilpotent line whose fixed-torus support is blocked
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  QVec emhf{Rat(1), Rat(-1), Rat(-1)};
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {sl2.element(emhf)}));
  OrbitVerdict out = zero_in_orbit_closure(sl2, v, full_subalgebra(sl2), 0);
  CHECK(out.kind == OrbitKind::ZeroInClosure);
  CHECK(out.exact);
  REQUIRE(out.certificate.has_value());
  // the certificate destabilizes v exactly
  for (const auto& p : out.certificate->pairings) CHECK(sgn(p) > 0);
}

TEST_CASE("orbit_closed examples") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  Element e = sl2.basis_element(0), h = sl2.basis_element(1),
          f = sl2.basis_element(2);
  Subalgebra torus = make_subalgebra(sl2, {h});
  HomVector v = hom_vector(sl2, make_subalgebra(sl2, {e}));
  OrbitVerdict nc = orbit_closed(sl2, v, torus, 0);
  CHECK(nc.closedness_negative());
  CHECK(nc.exact);

  // trivial group: point orbit
  OrbitVerdict pt = orbit_closed(sl2, v, trivial_subalgebra(sl2), 0);
  CHECK(pt.kind == OrbitKind::ClosedOrbit);
  CHECK(pt.exact);

  // weights {2, -2}: closed torus orbit
  Element epf(add(e.coords, f.coords));
  HomVector vline = hom_vector(sl2, make_subalgebra(sl2, {epf}));
  OrbitVerdict cl = orbit_closed(sl2, vline, torus, 0);
  CHECK(cl.kind == OrbitKind::ClosedOrbit);
  CHECK(cl.exact);
  REQUIRE(cl.relint.has_value());
}

TEST_CASE("torus extraction finds a certified Cartan in sl2 and sl3") {
  LieAlgebra sl2 = make_classical(ClassicalFamily::sl, 2);
  TorusExtraction t2 = extract_torus(sl2, full_subalgebra(sl2), 0);
  CHECK(t2.cartan_certified);
  CHECK(t2.basis.size() == 1);
  LieAlgebra sl3 = make_classical(ClassicalFamily::sl, 3);
  TorusExtraction t3 = extract_torus(sl3, full_subalgebra(sl3), 0);
  CHECK(t3.cartan_certified);
  CHECK(t3.basis.size() == 2);
  // abelian acting algebra: the torus is the whole thing
  Subalgebra tor = make_subalgebra(sl3, {diag_element(sl3, {1, 1, -2})});
  TorusExtraction tt = extract_torus(sl3, tor, 0);
  CHECK(tt.spans_acting);
  CHECK(tt.cartan_certified);
}
