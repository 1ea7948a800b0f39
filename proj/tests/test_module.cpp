#include <doctest.h>

#include <random>

#include "gpcat/module.hpp"
#include "helpers.hpp"

using namespace gpcat;
using namespace testing;

namespace {

Module a2_rep(CategoryPtr c, std::size_t d1, std::size_t d2, const Matrix& f) {
  return Module(c, {d1, d2}, {f});
}

void check_resolution(const Resolution& r) {
  // Augmentation onto, d o d = 0 and exactness at every computed term.
  CHECK(r.maps[0].is_surjective());
  for (std::size_t n = 1; n < r.maps.size(); ++n) {
    CHECK(compose(r.maps[n - 1], r.maps[n]).is_zero());
    CHECK(r.maps[n].rank() + r.maps[n - 1].rank() == r.terms[n - 1].total_dim());
  }
  if (r.completed) CHECK(r.maps.back().is_injective());
}

}  // namespace

TEST_CASE("representables and simples") {
  auto c = a2();
  auto p1 = representable(c, 0);
  CHECK(p1.dims() == std::vector<std::size_t>{1, 1});
  CHECK(p1.arrow_map(0) == Matrix::identity(1, c->field()));
  CHECK(representable(c, 1).dims() == std::vector<std::size_t>{0, 1});
  CHECK(representable(square(), 0).dims() == std::vector<std::size_t>{1, 1, 1, 1});
  for (auto cat : {a2(), square(), lambda1()}) {
    for (std::size_t x = 0; x < cat->object_count(); ++x) {
      auto s = simple(cat, x);
      for (std::size_t y = 0; y < cat->object_count(); ++y) CHECK(s.dim(y) == (x == y ? 1u : 0u));
    }
  }
  CHECK_THROWS_AS(representable(c, 5), Error);
}

TEST_CASE("module validation") {
  auto c = lambda1();
  Field q = c->field();
  // beta acting by a nonzero square-zero matrix but beta*alpha != 0.
  Matrix alpha = Matrix::from_rows(q, {{1}, {0}});
  Matrix beta = Matrix::from_rows(q, {{0, 0}, {1, 0}});
  CHECK_THROWS_AS(Module(c, {1, 2}, {alpha, beta}), Error);
  Matrix alpha2 = Matrix::from_rows(q, {{0}, {1}});
  CHECK_NOTHROW(Module(c, {1, 2}, {alpha2, beta}));
  CHECK_THROWS_AS(Module(c, {1, 2}, {Matrix(1, 1, q), beta}), Error);
}

TEST_CASE("duality") {
  auto c = a2();
  auto op = opposite(*c);
  auto d = dual(representable(c, 0), op);
  CHECK(d.dims() == std::vector<std::size_t>{1, 1});
  CHECK(dual(simple(c, 0), op) == simple(op, 0));
  auto sq = square();
  auto sqop = opposite(*sq);
  for (std::size_t x = 0; x < 4; ++x) {
    // D(C(-,x)) read covariantly has dims Hom(y, x).
    auto dl = dual(representable(sqop, x), sq);
    for (std::size_t y = 0; y < 4; ++y) CHECK(dl.dim(y) == sq->hom_dim(y, x));
    auto m = representable(sq, x);
    CHECK(dual(dual(m, sqop), sq) == m);
  }
}

TEST_CASE("tensor over the category") {
  auto c = a2();
  auto op = opposite(*c);
  Field q = c->field();
  Module f = a2_rep(c, 1, 1, Matrix::identity(1, q));
  // Yoneda: C(-,x) (x) F = F(x).
  for (auto cat : {a2(), square(), lambda1()}) {
    auto cop = opposite(*cat);
    std::mt19937 rng(3);
    Module g = representable(cat, 0);
    for (std::size_t x = 0; x < cat->object_count(); ++x) {
      TensorSpace t(representable(cop, x), g);
      CHECK(t.dim() == g.dim(x));
    }
  }
  // Right simple at 2 tensored with k -> k is the cokernel of the identity.
  CHECK(TensorSpace(simple(op, 1), f).dim() == 0);
  CHECK(TensorSpace(simple(op, 0), f).dim() == 1);
  CHECK(TensorSpace(Module::zero(op), f).dim() == 0);
}

TEST_CASE("hom spaces") {
  auto c = a2();
  Field q = c->field();
  Module f = a2_rep(c, 1, 1, Matrix(1, 1, q));
  CHECK(HomSpace(simple(c, 1), f).dim() == 1);
  for (auto cat : {a2(), square(), lambda1()}) {
    Module g = representable(cat, 0);
    for (std::size_t x = 0; x < cat->object_count(); ++x) CHECK(HomSpace(representable(cat, x), g).dim() == g.dim(x));
    CHECK(HomSpace(g, Module::zero(cat)).dim() == 0);
  }
  HomSpace h(representable(c, 0), representable(c, 0));
  CHECK(h.dim() == 1);
  CHECK(h.element(0) == ModuleMap::identity(representable(c, 0)));
}

TEST_CASE("kernel cokernel image") {
  auto c = a2();
  Field q = c->field();
  Module m = a2_rep(c, 1, 2, Matrix::from_rows(q, {{1}, {1}}));
  auto id = ModuleMap::identity(m);
  CHECK(kernel(id).module.is_zero());
  auto z = ModuleMap::zero(m, m);
  CHECK(kernel(z).module.dims() == m.dims());
  // Projection of (k -> k^2) onto (k -> k) by [1 1] at vertex 2.
  Module n = a2_rep(c, 1, 1, Matrix::from_rows(q, {{2}}));
  ModuleMap f(m, n, {Matrix::from_rows(q, {{1}}), Matrix::from_rows(q, {{1, 1}})});
  auto k = kernel(f);
  CHECK(k.module.dims() == std::vector<std::size_t>{0, 1});
  auto im = image(f);
  CHECK(im.module.dims() == std::vector<std::size_t>{1, 1});
  auto ck = cokernel(f);
  CHECK(ck.module.is_zero());
  CHECK(compose(f, k.inclusion).is_zero());
  CHECK_THROWS_AS(ModuleMap(m, n, {Matrix::from_rows(q, {{1}}), Matrix::from_rows(q, {{1, 0}})}), Error);
}

TEST_CASE("projective covers and resolutions") {
  auto c = a2();
  auto op = opposite(*c);
  auto p = representable(c, 0);
  auto pc = projective_cover(p);
  CHECK(pc.generators == std::vector<std::size_t>{0});
  CHECK(pc.epi.is_iso());
  // Right simple at the sink vertex 2: 0 -> e_1 kQ -> e_2 kQ -> S_2 -> 0.
  auto s2 = simple(op, 1);
  auto r = projective_resolution(s2, 10);
  check_resolution(r);
  CHECK(r.completed);
  CHECK(*r.length() == 1);
  CHECK(r.generators[0] == std::vector<std::size_t>{1});
  CHECK(r.generators[1] == std::vector<std::size_t>{0});
  CHECK(pdim(s2, 10) == Bounded{true, 1});
  CHECK(pdim(representable(c, 1), 10) == Bounded{true, 0});
  // Left simple at the sink is itself projective.
  CHECK(is_projective(simple(c, 1)));
  CHECK(!is_projective(simple(c, 0)));

  auto loop = loop_x2();
  auto rl = projective_resolution(simple(loop, 0), 10);
  check_resolution(rl);
  CHECK(!rl.completed);
  CHECK(rl.terms.size() == 11);
  for (const auto& t : rl.terms) CHECK(t.dim(0) == 2);
  CHECK(pdim(simple(loop, 0), 10).to_string() == "≥10");
  CHECK(pdim(Module::zero(loop), 3) == Bounded{true, 0});
}

TEST_CASE("padded resolution stays exact") {
  auto c = a3(Field::prime(5));
  auto m = simple(c, 0);
  auto r = projective_resolution(m, 6, std::size_t{2});
  check_resolution(r);
  CHECK(r.generators[0].size() == 2);
  CHECK(r.completed);
}

TEST_CASE("direct sums") {
  auto c = square();
  auto s = direct_sum({representable(c, 0), simple(c, 3)}, c);
  CHECK(s.module.dims() == std::vector<std::size_t>{1, 1, 1, 2});
  CHECK(compose(s.projections[0], s.injections[0]) == ModuleMap::identity(representable(c, 0)));
  CHECK(compose(s.projections[1], s.injections[0]).is_zero());
}
