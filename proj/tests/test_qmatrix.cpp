#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orbitcert/qmatrix.hpp"

using namespace orbitcert;

namespace {

QMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  QMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      m(i, j) = Rat(num(rng), den(rng));
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_CASE("rref and rank") {
  QMat m = QMat::from_rows({{Rat(1), Rat(2), Rat(3)},
                            {Rat(2), Rat(4), Rat(6)},
                            {Rat(0), Rat(1), Rat(1)}});
  CHECK(rank(m) == 2);
  CHECK(rank(QMat::identity(4)) == 4);
  CHECK(rank(QMat(3, 3)) == 0);
}

TEST_CASE("kernel vectors annihilate") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    QMat m = random_matrix(rng, 4, 6);
    auto ker = kernel(m);
    CHECK(ker.size() == 6 - rank(m));
    for (const auto& k : ker) CHECK(is_zero(m * k));
  }
}

TEST_CASE("solve finds exact solutions and detects inconsistency") {
  QMat m = QMat::from_rows({{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
  auto x = solve(m, {Rat(1), Rat(1)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Rat(1, 2));
  CHECK((*x)[1] == Rat(1, 3));
  QMat sing = QMat::from_rows({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}});
  CHECK_FALSE(solve(sing, {Rat(0), Rat(1)}).has_value());
}

TEST_CASE("char_poly on companion and diagonal matrices") {
  // companion of t^3 - 2t - 5
  QMat c(3, 3);
  c(0, 2) = 5;
  c(1, 0) = 1;
  c(1, 2) = 2;
  c(2, 1) = 1;
  QVec chi = char_poly(c);
  CHECK(chi == QVec{Rat(-5), Rat(-2), Rat(0), Rat(1)});
  QMat d(2, 2);
  d(0, 0) = Rat(1, 2);
  d(1, 1) = Rat(-3);
  QVec chi2 = char_poly(d);  // (t - 1/2)(t + 3)
  CHECK(chi2 == QVec{Rat(-3, 2), Rat(5, 2), Rat(1)});
}

TEST_CASE("minimal_poly distinguishes diagonalizable from nilpotent") {
  QMat n(3, 3);
  n(0, 1) = 1;
  n(1, 2) = 1;
  CHECK(minimal_poly(n) == QVec{Rat(0), Rat(0), Rat(0), Rat(1)});  // t^3
  CHECK(is_nilpotent_matrix(n));
  QMat d(3, 3);
  d(0, 0) = 1;
  d(1, 1) = 1;
  d(2, 2) = 2;
  CHECK(minimal_poly(d) == QVec{Rat(2), Rat(-3), Rat(1)});  // (t-1)(t-2)
  CHECK_FALSE(is_nilpotent_matrix(d));
}

TEST_CASE("SpanBuilder membership and coordinates") {
  SpanBuilder s(3);
  CHECK(s.add({Rat(1), Rat(1), Rat(0)}));
  CHECK(s.add({Rat(0), Rat(1), Rat(1)}));
  CHECK_FALSE(s.add({Rat(1), Rat(2), Rat(1)}));
  CHECK(s.contains({Rat(2), Rat(3), Rat(1)}));
  CHECK_FALSE(s.contains({Rat(0), Rat(0), Rat(1)}));
  auto coords = s.coordinates({Rat(2), Rat(3), Rat(1)});
  REQUIRE(coords.has_value());
  QVec rebuilt = zero_vector(3);
  for (std::size_t i = 0; i < coords->size(); ++i)
    rebuilt = add(rebuilt, scale((*coords)[i], s.basis()[i]));
  CHECK(rebuilt == QVec{Rat(2), Rat(3), Rat(1)});
}
