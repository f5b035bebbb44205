#include <catch2/catch_amalgamated.hpp>

#include "orbitcert/qpolynomial.hpp"

using namespace orbitcert;
using namespace orbitcert::qpoly;

TEST_CASE("divmod and gcd") {
  // (t^2 - 1) = (t - 1)(t + 1)
  QVec p{Rat(-1), Rat(0), Rat(1)};
  auto [q, r] = divmod(p, QVec{Rat(-1), Rat(1)});
  CHECK(q == QVec{Rat(1), Rat(1)});
  CHECK(r.empty());
  QVec g = gcd(p, QVec{Rat(-1), Rat(1)});
  CHECK(g == QVec{Rat(-1), Rat(1)});
}

TEST_CASE("squarefree part strips multiplicities") {
  // (t - 2)^2 (t + 1) = t^3 - 3t^2 + 4
  QVec p{Rat(4), Rat(0), Rat(-3), Rat(1)};
  QVec sf = squarefree_part(p);
  // (t - 2)(t + 1) = t^2 - t - 2
  CHECK(sf == QVec{Rat(-2), Rat(-1), Rat(1)});
}

TEST_CASE("rational roots with fractional and zero roots") {
  // t (2t - 1) (t + 3) = 2t^3 + 5t^2 - 3t
  QVec p{Rat(0), Rat(-3), Rat(5), Rat(2)};
  auto rr = rational_roots(p);
  CHECK(rr.roots == std::vector<Rat>{Rat(-3), Rat(0), Rat(1, 2)});
  CHECK(degree(rr.residual) == 0);
}

TEST_CASE("irrational factors stay in the residual") {
  // (t^2 - 2)(t - 1)
  QVec p{Rat(2), Rat(-2), Rat(-1), Rat(1)};
  auto rr = rational_roots(p);
  CHECK(rr.roots == std::vector<Rat>{Rat(1)});
  CHECK(degree(rr.residual) == 2);
  CHECK(sgn(eval(rr.residual, Rat(0)) + 2) == 0);  // monic t^2 - 2
}

TEST_CASE("integer factorization helpers") {
  auto f = factorize(Int(2 * 2 * 3 * 91));  // 91 = 7 * 13
  CHECK(f[Int(2)] == 2);
  CHECK(f[Int(3)] == 1);
  CHECK(f[Int(7)] == 1);
  CHECK(f[Int(13)] == 1);
  auto d = divisors_up_to(Int(12), Int(12));
  CHECK(d == std::vector<Int>{1, 2, 3, 4, 6, 12});
  // a larger semiprime exercises the rho path
  Int big = Int("1000003") * Int("1000033");
  auto bf = factorize(big);
  CHECK(bf.size() == 2);
  CHECK(bf.begin()->first == Int("1000003"));
}
