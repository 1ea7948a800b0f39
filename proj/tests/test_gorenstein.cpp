#include <doctest.h>

#include "gpcat/gorenstein.hpp"
#include "helpers.hpp"

using namespace gpcat;
using namespace testing;

namespace {

bool injective(const Matrix& m) { return rank(m) == m.cols(); }

// Pullback oracle for the square: F(c1) -> F(c2) x_{F(c4)} F(c3) bijective.
bool square_member(const Module& f) {
  const Matrix& mu = f.arrow_map(0);
  const Matrix& beta = f.arrow_map(1);
  const Matrix& alpha = f.arrow_map(2);
  const Matrix& gamma = f.arrow_map(3);
  if (!injective(beta) || !injective(gamma)) return false;
  Matrix pair = vstack(mu, alpha);
  Matrix diff = hstack(beta, gamma.scaled(f.field().from_int(-1)));
  const std::size_t fibre = diff.cols() - rank(diff);
  return injective(pair) && rank(pair) == fibre;
}

Representation rep_over_unit(const Module& m) { return Representation(m); }

BaseProfile unit_profile(Field f) { return self_injective_dimension(Category::unit(f), 4); }

}  // namespace

TEST_CASE("enumeration counts") {
  Field f2 = Field::prime(2);
  CHECK(enumerate_representations(a2(f2), {1, 1}).size() == 5);
  CHECK(enumerate_representations(a2(f2), {0, 0}).size() == 1);
  std::size_t square_zero = 0;
  for (const auto& m : enumerate_representations(loop_x2(f2), {2}))
    if (m.dim(0) == 2) ++square_zero;
  std::size_t brute = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          brute += (a * a + b * c) % 2 == 0 && (a * b + b * d) % 2 == 0 && (c * a + d * c) % 2 == 0 && (c * b + d * d) % 2 == 0;
  CHECK(brute == 4);
  CHECK(square_zero == brute);
  Enumerator e(a2(f2), {1, 1});
  std::size_t n = 0;
  while (e.next()) ++n;
  e.restart();
  std::size_t again = 0;
  while (e.next()) ++again;
  CHECK(n == again);
  CHECK_THROWS_AS(Enumerator(a2(f2), {6, 6}, 1000), Error);
  CHECK_THROWS_AS(Enumerator(a2(), {1, 1}), Error);
}

TEST_CASE("self-injective dimension profiles") {
  Field q = Field::rational();
  auto kk = make_category({"1", "2"}, {}, {}, q);
  CHECK(self_injective_dimension(kk, 6).g == std::optional<std::size_t>(0));
  CHECK(self_injective_dimension(loop_x2(), 6).g == std::optional<std::size_t>(0));
  CHECK(self_injective_dimension(a2(), 6).g == std::optional<std::size_t>(1));
  auto p = self_injective_dimension(lambda1(), 6);
  CHECK(p.status == BaseProfile::Status::unknown);
  CHECK_FALSE(p.g.has_value());
}

TEST_CASE("A2: Gorenstein P-projective iff the map is injective") {
  Field f3 = Field::prime(3);
  auto c = a2(f3);
  Nakayama nk(c, 8);
  for (const auto& m : enumerate_representations(c, {2, 2})) {
    const bool expect = injective(m.arrow_map(0));
    Representation f(m);
    for (auto route : {GprojRoute::automatic, GprojRoute::shortcut, GprojRoute::full}) {
      Verdict v = is_gproj_P(nk, f, route);
      CHECK(v.member == (expect ? Member::yes : Member::no));
    }
  }
}

TEST_CASE("square: members are the pullback squares with injective legs") {
  Field f2 = Field::prime(2);
  auto c = square(f2);
  Nakayama nk(c, 8);
  std::size_t members = 0;
  for (const auto& m : enumerate_representations(c, {1, 1, 1, 1})) {
    const bool expect = square_member(m);
    Representation f(m);
    Verdict s = is_gproj_P(nk, f, GprojRoute::shortcut);
    Verdict full = is_gproj_P(nk, f, GprojRoute::full);
    CHECK(s.member == (expect ? Member::yes : Member::no));
    CHECK(full.member == s.member);
    members += expect;
  }
  CHECK(members > 0);
}

TEST_CASE("induced objects are Gorenstein P-projective") {
  auto rep = discrepancy_module();
  Nakayama nk(rep.category_ptr(), 6);
  Representation p = nk.i_shriek(rep.base_ptr(), rep.total_ptr(), nk.i_star(rep));
  CHECK(is_gproj_P(nk, p, GprojRoute::full).member == Member::yes);
  CHECK(is_gproj_P(nk, p).member == Member::yes);
  CHECK(p_projective_section(nk, p).has_value());
  CHECK_FALSE(p_projective_section(nk, rep).has_value());
}

TEST_CASE("monic representations") {
  Field q = Field::rational();
  auto c = a2(q);
  auto id = Representation(module_from_rows(c, {1, 1}, {{{1}}}));
  auto zero = Representation(module_from_rows(c, {1, 1}, {{}}));
  CHECK(is_monic(id).member == Member::yes);
  Verdict z = is_monic(zero);
  CHECK(z.member == Member::no);
  CHECK(z.certificate["witness"]["kernel_vector"] == json::array({"1"}));
  CHECK(z.certificate["witness"]["vertex"] == "2");
  auto v = make_category({"1", "2", "3"}, {{"a", "1", "3"}, {"b", "2", "3"}}, {}, q);
  auto both = Representation(module_from_rows(v, {1, 1, 1}, {{{1}}, {{1}}}));
  Verdict w = is_monic(both);
  CHECK(w.member == Member::no);
  CHECK(w.certificate["witness"]["vertex"] == "3");
  CHECK_THROWS_AS(is_monic(Representation(simple(square(), 0))), Error);

  Field f2 = Field::prime(2);
  auto a = a3(f2);
  Nakayama nk(a, 6);
  for (const auto& m : enumerate_representations(a, {1, 2, 1})) {
    Representation f(m);
    CHECK(is_monic(f).member == is_gproj_P(nk, f).member);
  }
}

TEST_CASE("Gorenstein projectives in the base") {
  Field q = Field::rational();
  auto unit = Category::unit(q);
  CHECK(base_gp(parts_from_dims(q, {3})[0], unit_profile(q), 4).member == Member::yes);

  Field f2 = Field::prime(2);
  auto loop = loop_x2(f2);
  auto lp = self_injective_dimension(loop, 6);
  for (const auto& m : enumerate_representations(loop, {2})) CHECK(base_gp(m, lp, 6).member == Member::yes);

  auto l1 = lambda1(q);
  auto p = self_injective_dimension(l1, 6);
  Verdict s2 = base_gp(simple(l1, 1), p, 6);
  CHECK(s2.member == Member::no);
  CHECK(base_gp(representable(l1, 1), p, 6).member == Member::yes);
  // Without a finite self-injective dimension vanishing Ext is not enough.
  auto s1 = simple(l1, 0);
  Verdict v = base_gp(s1, p, 6);
  CHECK(v.member != Member::yes);
  CHECK(base_gp(simple(a2(q), 1), BaseProfile::declared(a2(q), 1), 6).member == Member::yes);
  CHECK(base_gp(simple(a2(q), 0), BaseProfile::declared(a2(q), 1), 6).member == Member::no);
}

TEST_CASE("Gorenstein projective functors") {
  Field f3 = Field::prime(3);
  auto c = a2(f3);
  Nakayama nk(c, 8);
  BaseProfile unit = unit_profile(f3);
  for (const auto& m : enumerate_representations(c, {2, 2})) {
    Verdict v = is_gp_functor(nk, rep_over_unit(m), unit);
    CHECK(v.member == (injective(m.arrow_map(0)) ? Member::yes : Member::no));
    CHECK(v.label == "GP of B^C (P Iwanaga-Gorenstein)");
  }
  CHECK(is_gp_functor(nk, Representation(simple(c, 0)), unit).member == Member::no);
}

TEST_CASE("discrepancy example") {
  auto p1 = discrepancy_module();
  auto p2 = p1.swapped(tensor_category(p1.base(), p1.category()));
  DiscrepancyResult r = discrepancy_probe(p2, p1, 6);
  CHECK(r.first.member == Member::yes);
  CHECK(r.second.member == Member::no);
  CHECK(r.witness);
  bool found = false;
  for (const auto& rec : r.second.certificate["loops"]) {
    if (rec["side"] == "C" && rec["on"] == "F") {
      CHECK(rec["image"] == 1);
      CHECK(rec["kernel"] == 2);
      CHECK(rec["image_equals_kernel"] == false);
      found = true;
    }
  }
  CHECK(found);
  bool exact_t = false;
  for (const auto& rec : r.first.certificate["loops"])
    if (rec["side"] == "base" && rec["on"] == "nu F") exact_t = rec["image_equals_kernel"].get<bool>();
  CHECK(exact_t);

  Nakayama nk2(p2.category_ptr(), 6);
  NuRep nm = nk2.nu(p2);
  auto prof = self_injective_dimension(p2.base_ptr(), 6);
  for (std::size_t c = 0; c < p2.category().object_count(); ++c)
    CHECK(base_gp(nm.value.component(c), prof, 6).member == Member::yes);

  Nakayama nk1(p1.category_ptr(), 6);
  Representation proj = nk1.i_shriek(p1.base_ptr(), p1.total_ptr(), {representable(p1.base_ptr(), 0), representable(p1.base_ptr(), 1)});
  DiscrepancyResult pp = discrepancy_probe(proj, proj.swapped(p2.total_ptr()), 6);
  CHECK(pp.first.member == Member::yes);
  CHECK(pp.second.member == Member::yes);
  CHECK_FALSE(pp.witness);
  Representation z(p1.category_ptr(), p1.base_ptr(), p1.total_ptr(), Module::zero(p1.total_ptr()));
  DiscrepancyResult zz = discrepancy_probe(z, z.swapped(p2.total_ptr()), 6);
  CHECK(zz.first.member == Member::yes);
  CHECK(zz.second.member == Member::yes);
  CHECK_THROWS_AS(discrepancy_probe(p1, p1, 6), Error);
}

TEST_CASE("lifted classes") {
  Field q = Field::rational();
  auto c = a2(q);
  Nakayama nk(c, 8);
  BaseProfile unit = unit_profile(q);
  Representation f(module_from_rows(c, {1, 2}, {{{1}, {0}}}));
  CHECK(lifted_class_membership(nk, f, XClass::gproj_P, FClass::proj, unit).member == Member::yes);
  CHECK(lifted_class_membership(nk, f, XClass::gproj_P, FClass::gp, unit).member == is_gp_functor(nk, f, unit).member);
  CHECK(lifted_class_membership(nk, f, XClass::P_proj, FClass::proj, unit).member == Member::yes);
  Representation s1(simple(c, 0));
  CHECK(lifted_class_membership(nk, s1, XClass::P_proj, FClass::proj, unit).member == Member::no);
  Representation s2(simple(c, 1));
  CHECK(lifted_class_membership(nk, s2, XClass::P_proj, FClass::gp, unit).member == Member::yes);
  Representation p = nk.i_shriek(Category::unit(q), c, parts_from_dims(q, {1, 2}));
  CHECK(lifted_class_membership(nk, p, XClass::P_proj, FClass::proj, unit).member == Member::yes);
  CHECK(x_class_from_name("p-proj") == XClass::P_proj);
  CHECK_THROWS_AS(f_class_from_name("x"), Error);
}

TEST_CASE("GP resolution dimension") {
  Field q = Field::rational();
  auto c = a2(q);
  Nakayama nk(c, 8);
  BaseProfile unit = unit_profile(q);
  CHECK(gp_resolution_dimension(nk, Representation(representable(c, 0)), unit).value == Bounded{true, 0});
  auto s1 = gp_resolution_dimension(nk, Representation(simple(c, 0)), unit);
  CHECK(s1.value == Bounded{true, 1});
  CHECK(s1.status == Member::yes);
  CHECK(s1.to_string() == "1");
  Field f2 = Field::prime(2);
  auto sq = square(f2);
  Nakayama nks(sq, 8);
  for (const auto& m : enumerate_representations(sq, {1, 1, 1, 1})) {
    auto d = gp_resolution_dimension(nks, Representation(m), unit_profile(f2));
    CHECK(d.value.finite);
    CHECK(d.value.value <= 2);
  }
}

TEST_CASE("totally acyclic windows around Gorenstein projectives") {
  Field f2 = Field::prime(2);
  auto c = a2(f2);
  Nakayama nk(c, 6);
  for (const auto& m : enumerate_representations(c, {2, 2})) {
    if (is_gp_functor(nk, Representation(m), unit_profile(f2)).member != Member::yes) continue;
    WindowRecord w = totally_acyclic_window(m, 2);
    CHECK(w.exact);
    CHECK(w.hom_exact);
  }
  auto loop = loop_x2(f2);
  WindowRecord w = totally_acyclic_window(simple(loop, 0), 3);
  CHECK(w.exact);
  CHECK(w.hom_exact);
  CHECK(w.term_dims.size() == 6);
  WindowRecord bad = totally_acyclic_window(simple(c, 0), 2);
  CHECK_FALSE((bad.exact && bad.hom_exact));
  auto rep = discrepancy_module(f2);
  auto p2 = rep.swapped(tensor_category(rep.base(), rep.category()));
  WindowRecord e = totally_acyclic_window(p2.module(), 2);
  CHECK(e.exact);
  CHECK(e.hom_exact);
}

TEST_CASE("members are closed under sums and summands") {
  Field f2 = Field::prime(2);
  auto c = a2(f2);
  Nakayama nk(c, 6);
  auto all = enumerate_representations(c, {1, 1});
  for (const auto& a : all)
    for (const auto& b : all) {
      Module s = direct_sum({a, b}, c).module;
      const bool ma = is_gproj_P(nk, Representation(a)).member == Member::yes;
      const bool mb = is_gproj_P(nk, Representation(b)).member == Member::yes;
      CHECK((is_gproj_P(nk, Representation(s)).member == Member::yes) == (ma && mb));
    }
}
