#include <doctest.h>

#include "gpcat/representation.hpp"
#include "helpers.hpp"

using namespace gpcat;
using namespace testing;

TEST_CASE("tor over A2") {
  auto c = a2();
  auto op = opposite(*c);
  Field q = c->field();
  Representation f(module_from_rows(c, {1, 1}, {{{0}}}));
  // Tor_1(S_2, k -0-> k) is the kernel of the zero map.
  CHECK(tor(simple(op, 1), f, 1, 8).total_dim() == 1);
  CHECK(tor(simple(op, 1), f, 0, 8).total_dim() == tensor_over_C(simple(op, 1), f).value.total_dim());
  CHECK(tor(simple(op, 1), f, 0, 8).total_dim() == 1);
  Representation g(module_from_rows(c, {1, 1}, {{{1}}}));
  CHECK(tor(simple(op, 1), g, 1, 8).total_dim() == 0);
  CHECK(tor(simple(op, 1), g, 0, 8).total_dim() == 0);
  CHECK(tor(simple(op, 1), g, 5, 8).total_dim() == 0);
  (void)q;
}

TEST_CASE("ext over the loop algebra") {
  auto c = loop_x2();
  Representation s(simple(c, 0));
  for (std::size_t i = 0; i < 6; ++i) CHECK(ext(simple(c, 0), s, i, 10).total_dim() == 1);
  CHECK(ext(simple(c, 0), s, 0, 10).total_dim() == hom_over_C(simple(c, 0), s).value.total_dim());
  CHECK_THROWS_AS(ext(simple(c, 0), s, 3, 3), Error);
  for (auto cat : {a2(), square(), lambda1()}) {
    Representation g(representable(cat, 0));
    for (std::size_t x = 0; x < cat->object_count(); ++x)
      for (std::size_t i = 1; i < 4; ++i) CHECK(ext(representable(cat, x), g, i, 6).is_zero());
  }
}

TEST_CASE("tor and ext against hand-computed periodic resolution") {
  // Over k[x]/(x^2): ... -> L -x-> L -x-> L -> S, so Tor_i(S, S) = k for all i.
  auto c = loop_x2();
  auto op = opposite(*c);
  Representation s(simple(c, 0));
  for (std::size_t i = 0; i < 5; ++i) CHECK(tor(simple(op, 0), s, i, 8).total_dim() == 1);
  Representation l(representable(c, 0));
  for (std::size_t i = 1; i < 5; ++i) CHECK(tor(simple(op, 0), l, i, 8).total_dim() == 0);
}

TEST_CASE("base-valued representations") {
  auto rep = discrepancy_module();
  CHECK(rep.has_base());
  CHECK(rep.slice(0).dims() == std::vector<std::size_t>{0, 1});
  CHECK(rep.slice(1).dims() == std::vector<std::size_t>{0, 2});
  CHECK(rep.component(1).dims() == std::vector<std::size_t>{1, 2});
  // The component at object 2 is the projective Q_2 of the base.
  CHECK(is_projective(rep.component(1)));
  auto base_t = tensor_category(rep.base(), rep.category());
  auto sw = rep.swapped(base_t);
  CHECK(sw.slice(1) == rep.component(1));
  auto back = sw.swapped(rep.total_ptr());
  CHECK(back.module() == rep.module());
  // Hom and tensor against representables recover components.
  auto op = opposite(rep.category());
  for (std::size_t x = 0; x < 2; ++x) {
    CHECK(hom_over_C(representable(rep.category_ptr(), x), rep).value.dims() == rep.component(x).dims());
    CHECK(tensor_over_C(representable(op, x), rep).value.dims() == rep.component(x).dims());
  }
  auto rebuilt = Representation::assemble(rep.category_ptr(), rep.base_ptr(), rep.total_ptr(), {rep.slice(0), rep.slice(1)},
                                          {rep.base_map(0), rep.base_map(1)});
  CHECK(rebuilt.module() == rep.module());
}
