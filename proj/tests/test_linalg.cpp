#include <doctest.h>

#include <random>

#include "gpcat/linalg.hpp"

using namespace gpcat;

namespace {

Matrix random_matrix(std::mt19937& rng, Field f, std::size_t r, std::size_t c) {
  Matrix m(r, c, f);
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.modulus()) - 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rank and kernel examples") {
  Field q = Field::rational();
  auto id = rank_and_kernel(Matrix::identity(3, q));
  CHECK(id.rank == 3);
  CHECK(id.kernel.cols() == 0);

  auto z = rank_and_kernel(Matrix(2, 3, q));
  CHECK(z.rank == 0);
  CHECK(z.kernel == Matrix::identity(3, q));

  // Row reduction by hand: second row is twice the first, so x = -2y.
  auto rk = rank_and_kernel(Matrix::from_rows(q, {{1, 2}, {2, 4}}));
  CHECK(rk.rank == 1);
  CHECK(rk.kernel == Matrix::from_rows(q, {{-2}, {1}}));
}

TEST_CASE("cokernel projection") {
  Field q = Field::rational();
  CHECK(cokernel_projection(Matrix::identity(3, q)).dim == 0);
  auto z = cokernel_projection(Matrix(2, 2, q));
  CHECK(z.dim == 2);
  CHECK(z.projection == Matrix::identity(2, q));
  Matrix m = Matrix::from_rows(q, {{1}, {1}});
  auto c = cokernel_projection(m);
  CHECK(c.dim == 1);
  CHECK((c.projection * m).is_zero());
  CHECK(rank(c.projection) == 1);
  CHECK(c.projection == Matrix::from_rows(q, {{-1, 1}}));
}

TEST_CASE("solve") {
  Field q = Field::rational();
  Matrix m = Matrix::from_rows(q, {{1, 2}, {2, 4}});
  auto x = solve(m, Vector{q.from_int(1), q.from_int(2)});
  REQUIRE(x);
  CHECK(*x == Vector{q.from_int(1), q.from_int(0)});
  CHECK(!solve(m, Vector{q.from_int(1), q.from_int(0)}));
  Vector b{q.parse("3/4"), q.parse("-5")};
  CHECK(*solve(Matrix::identity(2, q), b) == b);
}

TEST_CASE("field mismatch and literals") {
  Field q = Field::rational();
  Field f5 = Field::prime(5);
  CHECK_THROWS_AS(q.one() + f5.one(), Error);
  CHECK(q.parse("6/4").to_string() == "3/2");
  CHECK(q.parse("-0").to_string() == "0");
  CHECK(f5.parse("7").to_string() == "2");
  CHECK_THROWS_AS(q.parse("1/0"), Error);
  CHECK_THROWS_AS(q.parse("1.5"), Error);
  CHECK(Field::from_name("F7") == Field::prime(7));
  CHECK_THROWS_AS(Field::from_name("F6"), Error);
  CHECK((f5.from_int(2) * f5.from_int(3)).is_one());
  CHECK((f5.from_int(3).inverse() * f5.from_int(3)).is_one());
}

TEST_CASE("random properties over F5") {
  Field f = Field::prime(5);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = rng() % 7, c = rng() % 7;
    Matrix m = random_matrix(rng, f, r, c);
    auto rk = rank_and_kernel(m);
    CHECK(rk.rank + rk.kernel.cols() == c);
    CHECK((m * rk.kernel).is_zero());
    auto ck = cokernel_projection(m);
    CHECK((ck.projection * m).is_zero());
    CHECK(rank(ck.projection) == r - rk.rank);
    Matrix x0 = random_matrix(rng, f, c, 1);
    Vector b = (m * x0).column_vector(0);
    auto x = solve(m, b);
    REQUIRE(x);
    CHECK(m * *x == b);
    // Determinism.
    CHECK(rank_and_kernel(m).kernel == rk.kernel);
  }
}

TEST_CASE("plumbing shapes") {
  Field q = Field::rational();
  Matrix a = Matrix::from_rows(q, {{1, 2}});
  Matrix b = Matrix::from_rows(q, {{3}, {4}});
  Matrix s = direct_sum(a, b);
  CHECK(s.rows() == 3);
  CHECK(s.cols() == 3);
  Matrix k = kronecker_product(a, b);
  CHECK(k == Matrix::from_rows(q, {{3, 6}, {4, 8}}));
  CHECK(transpose(a) == Matrix::from_rows(q, {{1}, {2}}));
}

TEST_CASE("subspace and quotient") {
  Field q = Field::rational();
  Matrix rel = Matrix::from_rows(q, {{1}, {1}, {0}});
  Quotient quo = Quotient::of(rel);
  CHECK(quo.dim() == 2);
  CHECK((quo.projection() * rel).is_zero());
  CHECK(quo.projection() * quo.section() == Matrix::identity(2, q));
  Subspace sp = Subspace::span(Matrix::from_rows(q, {{1, 2}, {1, 2}, {0, 0}}));
  CHECK(sp.dim() == 1);
  CHECK(sp.contains(rel));
}
