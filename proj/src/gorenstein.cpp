#include "gpcat/gorenstein.hpp"

#include <algorithm>

namespace gpcat {

namespace {

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Module regular_module(const CategoryPtr& c) {
  std::vector<std::size_t> all;
  for (std::size_t x = 0; x < c->object_count(); ++x) all.push_back(x);
  return free_module(c, all);
}

Representation with_module(const Representation& f, Module m) {
  return Representation(f.category_ptr(), f.base_ptr(), f.total_ptr(), std::move(m));
}

json ranks_json(const ModuleMap& m) {
  json out = json::array();
  for (std::size_t x = 0; x < m.source().category().object_count(); ++x) out.push_back(rank(m.component(x)));
  return out;
}

struct Scan {
  Member member = Member::yes;
  json table = json::object();
  std::optional<std::size_t> failed_degree;
  std::optional<std::size_t> blocked_degree;
};

// Degrees 1..bound (1..cutoff when unbounded); `value` returns nullopt when the
// degree is cutoff-blocked.
Scan scan_degrees(std::optional<std::size_t> bound, std::size_t cutoff,
                  const std::function<std::optional<std::vector<std::size_t>>(std::size_t)>& value) {
  Scan s;
  const std::size_t top = bound ? *bound : cutoff;
  for (std::size_t i = 1; i <= top; ++i) {
    auto dims = value(i);
    if (!dims) {
      s.blocked_degree = i;
      break;
    }
    s.table[std::to_string(i)] = *dims;
    if (std::any_of(dims->begin(), dims->end(), [](std::size_t d) { return d != 0; })) {
      s.member = Member::no;
      s.failed_degree = i;
      return s;
    }
  }
  if (!bound || s.blocked_degree) s.member = Member::inconclusive;
  return s;
}

std::optional<std::size_t> max_length(const std::vector<const Resolution*>& res) {
  std::size_t m = 0;
  for (const auto* r : res) {
    if (!r->completed) return std::nullopt;
    m = std::max(m, *r->length());
  }
  return m;
}

std::optional<std::size_t> min_opt(std::optional<std::size_t> a, std::optional<std::size_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

json scan_json(const Scan& s, std::optional<std::size_t> bound) {
  json j;
  j["dimensions"] = s.table;
  j["status"] = to_string(s.member);
  j["vanishing_certified_above"] = bound ? json(*bound) : json(nullptr);
  if (s.blocked_degree) j["blocked_degree"] = *s.blocked_degree;
  return j;
}

// X -> (+)_k C(x_k, -) through which every map from X to a representable factors.
// Generators are added greedily, skipping maps already reachable from earlier ones.
ModuleMap left_approximation(const Module& x) {
  const CategoryPtr& t = x.category_ptr();
  const Category& c = *t;
  const Field fld = c.field();
  std::vector<std::size_t> gens;
  std::vector<ModuleMap> phis;
  for (std::size_t target = 0; target < c.object_count(); ++target) {
    Module rep = representable(t, target);
    HomSpace hs(x, rep);
    auto reachable = [&]() {
      Matrix span(hs.dim(), 0, fld);
      for (std::size_t k = 0; k < phis.size(); ++k) {
        const std::size_t xk = gens[k];
        for (std::size_t i = 0; i < c.hom_dim(target, xk); ++i) {
          Vector h(c.hom_dim(target, xk), fld.zero());
          h[i] = fld.one();
          std::vector<Matrix> comps;
          for (std::size_t y = 0; y < c.object_count(); ++y) comps.push_back(c.right_multiplication(target, xk, y, h));
          ModuleMap rho(phis[k].target(), rep, std::move(comps), false);
          span = hstack(span, Matrix::column(hs.coordinates(compose(rho, phis[k])), fld));
        }
      }
      return Subspace::span(span);
    };
    Subspace covered = reachable();
    for (std::size_t i = 0; i < hs.dim(); ++i) {
      Vector e(hs.dim(), fld.zero());
      e[i] = fld.one();
      if (covered.contains(Matrix::column(e, fld))) continue;
      gens.push_back(target);
      phis.push_back(hs.element(i));
      covered = reachable();
    }
  }
  Module p = free_module(t, gens);
  std::vector<Matrix> comps;
  for (std::size_t y = 0; y < c.object_count(); ++y) {
    Matrix m(p.dim(y), x.dim(y), fld);
    std::size_t row = 0;
    for (const auto& phi : phis) {
      m.set_block(row, 0, phi.component(y));
      row += phi.component(y).rows();
    }
    comps.push_back(std::move(m));
  }
  return ModuleMap(x, p, std::move(comps), false);
}

}  // namespace

std::string to_string(Member m) {
  switch (m) {
    case Member::yes:
      return "yes";
    case Member::no:
      return "no";
    case Member::inconclusive:
      return "inconclusive";
  }
  return "";
}

Member meet(Member a, Member b) {
  if (a == Member::no || b == Member::no) return Member::no;
  if (a == Member::inconclusive || b == Member::inconclusive) return Member::inconclusive;
  return Member::yes;
}

json Verdict::to_json() const {
  json j;
  j["member"] = to_string(member);
  j["route"] = route;
  if (!label.empty()) j["label"] = label;
  j["certificate"] = certificate;
  j["hypotheses"] = hypotheses;
  return j;
}

BaseProfile BaseProfile::declared(CategoryPtr base, std::size_t g) {
  BaseProfile p;
  p.base = std::move(base);
  p.status = Status::declared;
  p.g = g;
  return p;
}

json BaseProfile::to_json() const {
  json j;
  j["status"] = status == Status::computed ? "verified-at-cutoff" : status == Status::declared ? "declared" : "unknown";
  j["self_injective_dimension"] = g ? json(*g) : json(nullptr);
  if (status != Status::declared) {
    j["cutoff"] = cutoff;
    j["pdim_D_left"] = left.to_string();
    j["pdim_D_right"] = right.to_string();
  }
  return j;
}

BaseProfile self_injective_dimension(CategoryPtr base, std::size_t cutoff) {
  BaseProfile p;
  Nakayama nk(base, cutoff);
  GorensteinDimension g = nk.gorenstein_dimension();
  p.base = std::move(base);
  p.cutoff = cutoff;
  p.left = g.left;
  p.right = g.right;
  if (g.is_finite()) {
    p.status = BaseProfile::Status::computed;
    p.g = g.value;
  }
  return p;
}

std::string to_string(GprojRoute r) {
  switch (r) {
    case GprojRoute::automatic:
      return "automatic";
    case GprojRoute::shortcut:
      return "shortcut";
    case GprojRoute::full:
      return "full";
  }
  return "";
}

Verdict is_gproj_P(const Nakayama& nk, const Representation& f, GprojRoute route) {
  Verdict v;
  const std::size_t cutoff = nk.cutoff();
  const GorensteinDimension g = nk.gorenstein_dimension();
  v.hypotheses["cutoff"] = cutoff;
  v.hypotheses["P_gorenstein_dimension"] = g.to_string();

  if (route == GprojRoute::automatic) {
    json slices = json::array();
    bool all = true;
    for (std::size_t b = 0; b < f.base().object_count() && all; ++b) {
      all = is_projective(f.slice(b));
      slices.push_back(f.slice(b).dims());
    }
    if (all) {
      v.member = Member::yes;
      v.route = "projective-slices";
      v.certificate["projective_slices"] = slices;
      return v;
    }
    route = g.is_finite() ? GprojRoute::shortcut : GprojRoute::full;
  }

  Resolution res = projective_resolution(f.module(), cutoff);
  std::vector<DerivedComplex> tor_complexes;
  auto l_nu = [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
    if (res.completed || i + 1 <= res.computed()) return nk.left_derived_nu(f, res, i).module().dims();
    if (tor_complexes.empty())
      for (std::size_t c = 0; c < nk.category().object_count(); ++c)
        tor_complexes.push_back(DerivedComplex::tensor(nk.dr_resolution(c), f));
    std::vector<std::size_t> dims;
    for (const auto& dc : tor_complexes) {
      if (!dc.available(i)) return std::nullopt;
      Module m = dc.degree(i);
      dims.insert(dims.end(), m.dims().begin(), m.dims().end());
    }
    return dims;
  };

  if (route == GprojRoute::shortcut) {
    if (!g.is_finite()) throw Error(ErrorKind::argument, "the shortcut route needs P Iwanaga-Gorenstein, got " + g.to_string());
    v.route = "shortcut";
    v.hypotheses["P_iwanaga_gorenstein"] = g.value;
    Scan s = scan_degrees(g.value, cutoff, l_nu);
    v.member = s.member;
    v.certificate["L_nu"] = scan_json(s, g.value);
    if (s.failed_degree) v.certificate["witness"] = {{"condition", "L_i nu"}, {"degree", *s.failed_degree}};
    if (s.blocked_degree) v.certificate["blocking_cutoff"] = cutoff;
    return v;
  }

  v.route = "full";
  std::vector<const Resolution*> drs, dls;
  for (std::size_t x = 0; x < nk.category().object_count(); ++x) {
    drs.push_back(&nk.dr_resolution(x));
    dls.push_back(&nk.dl_resolution(x));
  }
  std::vector<Resolution> slice_res;
  for (std::size_t b = 0; b < f.base().object_count(); ++b) slice_res.push_back(projective_resolution(f.slice(b), cutoff));
  std::vector<const Resolution*> slice_ptrs;
  for (const auto& r : slice_res) slice_ptrs.push_back(&r);
  std::optional<std::size_t> bound_a =
      min_opt(min_opt(res.completed ? res.length() : std::nullopt, max_length(drs)), max_length(slice_ptrs));
  Scan a = scan_degrees(bound_a, cutoff, l_nu);
  v.certificate["L_nu"] = scan_json(a, bound_a);
  if (a.member == Member::no) {
    v.member = Member::no;
    v.certificate["witness"] = {{"condition", "L_i nu"}, {"degree", *a.failed_degree}};
    return v;
  }

  NuRep nf = nk.nu(f);
  std::vector<DerivedComplex> ext_complexes;
  for (std::size_t x = 0; x < nk.category().object_count(); ++x)
    ext_complexes.push_back(DerivedComplex::hom(nk.dl_resolution(x), nf.value));
  // Injective dimension of each slice of nu F, as pdim of its dual.
  std::vector<Resolution> dual_res;
  for (std::size_t b = 0; b < f.base().object_count(); ++b)
    dual_res.push_back(projective_resolution(dual(nf.value.slice(b), nk.opposite_ptr()), cutoff));
  std::vector<const Resolution*> dual_ptrs;
  for (const auto& r : dual_res) dual_ptrs.push_back(&r);
  std::optional<std::size_t> bound_b = min_opt(max_length(dls), max_length(dual_ptrs));
  Scan b = scan_degrees(bound_b, cutoff, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> dims;
    for (const auto& dc : ext_complexes) {
      if (!dc.available(i)) return std::nullopt;
      Module m = dc.degree(i);
      dims.insert(dims.end(), m.dims().begin(), m.dims().end());
    }
    return dims;
  });
  v.certificate["R_nu_minus_of_nu"] = scan_json(b, bound_b);
  if (b.member == Member::no) {
    v.member = Member::no;
    v.certificate["witness"] = {{"condition", "R^i nu^- nu"}, {"degree", *b.failed_degree}};
    return v;
  }

  auto [lam, nmn] = nk.lambda(f);
  const bool iso = lam.is_iso();
  v.certificate["lambda"] = {{"ranks", ranks_json(lam)}, {"source_dims", f.module().dims()},
                             {"target_dims", nmn.value.module().dims()}, {"iso", iso}};
  if (!iso) {
    v.member = Member::no;
    for (std::size_t x = 0; x < f.total_ptr()->object_count(); ++x) {
      const Matrix& m = lam.component(x);
      if (m.rows() != m.cols() || rank(m) != m.rows()) {
        v.certificate["witness"] = {{"condition", "lambda not an isomorphism"}, {"object", f.total_ptr()->object_name(x)}};
        break;
      }
    }
    return v;
  }
  v.member = meet(a.member, b.member);
  if (v.member == Member::inconclusive) v.certificate["blocking_cutoff"] = cutoff;
  return v;
}

Verdict is_monic(const Representation& f) {
  const Category& c = f.category();
  if (!c.relations().empty())
    throw Error(ErrorKind::argument, "the monic test needs a relation-free category; use the gproj-p check instead");
  Verdict v;
  v.route = "assembled-maps";
  v.member = Member::yes;
  json ranks = json::array();
  for (std::size_t b = 0; b < f.base().object_count(); ++b) {
    const Module& s = f.slice(b);
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      Matrix assembled(s.dim(i), 0, f.field());
      for (std::size_t a = 0; a < c.arrow_count(); ++a)
        if (c.arrow(a).target == i) assembled = hstack(assembled, s.arrow_map(a));
      RankKernel rk = rank_and_kernel(assembled);
      ranks.push_back({{"vertex", c.object_name(i)}, {"base_object", f.base().object_name(b)}, {"rank", rk.rank},
                       {"columns", assembled.cols()}});
      if (rk.kernel.cols() > 0 && v.member == Member::yes) {
        v.member = Member::no;
        v.certificate["witness"] = {{"vertex", c.object_name(i)},
                                    {"base_object", f.base().object_name(b)},
                                    {"kernel_vector", vector_json(rk.kernel.column_vector(0))}};
      }
    }
  }
  v.certificate["ranks"] = ranks;
  return v;
}

Verdict base_gp(const Module& b, const BaseProfile& profile, std::size_t cutoff) {
  if (!same_category(b.category(), *profile.base)) throw Error(ErrorKind::validation, "base profile is for a different algebra");
  Verdict v;
  v.hypotheses["base_profile"] = profile.to_json();
  if (is_projective(b)) {
    v.member = Member::yes;
    v.route = "projective";
    v.certificate["top_dimensions"] = top_dimensions(b);
    v.certificate["dims"] = b.dims();
    return v;
  }
  v.route = profile.g ? "ext-to-self-injective-dimension" : "ext-to-cutoff";
  Resolution res = projective_resolution(b, cutoff);
  DerivedComplex dc = DerivedComplex::hom(res, Representation(regular_module(profile.base)));
  Scan s = scan_degrees(profile.g, cutoff, [&](std::size_t i) -> std::optional<std::vector<std::size_t>> {
    if (!dc.available(i)) return std::nullopt;
    return std::vector<std::size_t>{dc.degree(i).total_dim()};
  });
  v.member = s.member;
  v.certificate["ext_into_regular"] = scan_json(s, profile.g);
  if (s.failed_degree) v.certificate["witness"] = {{"condition", "Ext^i(B, base) nonzero"}, {"degree", *s.failed_degree}};
  if (s.member == Member::inconclusive) v.certificate["blocking_cutoff"] = cutoff;
  return v;
}

Verdict is_gp_functor(const Nakayama& nk, const Representation& f, const BaseProfile& profile) {
  Verdict v;
  Verdict x = is_gproj_P(nk, f);
  const GorensteinDimension g = nk.gorenstein_dimension();
  NuRep nf = nk.nu(f);
  json comps = json::array();
  Member fm = Member::yes;
  for (std::size_t c = 0; c < nk.category().object_count(); ++c) {
    Verdict bc = base_gp(nf.value.component(c), profile, nk.cutoff());
    fm = meet(fm, bc.member);
    json j = bc.to_json();
    j.erase("hypotheses");
    j["object"] = nk.category().object_name(c);
    comps.push_back(j);
  }
  v.member = meet(x.member, fm);
  v.route = "gproj-p-and-base";
  v.certificate["gproj_p"] = x.to_json();
  v.certificate["nu_components"] = comps;
  v.hypotheses["cutoff"] = nk.cutoff();
  v.hypotheses["P_gorenstein_dimension"] = g.to_string();
  v.hypotheses["base_profile"] = profile.to_json();
  if (g.is_finite())
    v.label = "GP of B^C (P Iwanaga-Gorenstein)";
  else if (profile.g)
    v.label = "GP of B^C (base Proj-Gorenstein)";
  else
    v.label = "membership in GP(GProj_P) only";
  return v;
}

XClass x_class_from_name(const std::string& s) {
  if (s == "gproj_P" || s == "gproj-p") return XClass::gproj_P;
  if (s == "P_proj" || s == "p-proj") return XClass::P_proj;
  throw Error(ErrorKind::argument, "unknown X class '" + s + "' (expected gproj-p or p-proj)");
}

FClass f_class_from_name(const std::string& s) {
  if (s == "gp") return FClass::gp;
  if (s == "proj") return FClass::proj;
  throw Error(ErrorKind::argument, "unknown F class '" + s + "' (expected gp or proj)");
}

std::string to_string(XClass x) { return x == XClass::gproj_P ? "gproj-p" : "p-proj"; }
std::string to_string(FClass f) { return f == FClass::gp ? "gp" : "proj"; }

std::optional<ModuleMap> p_projective_section(const Nakayama& nk, const Representation& f) {
  Representation p = nk.i_shriek(f.base_ptr(), f.total_ptr(), nk.i_star(f));
  ModuleMap eps = nk.counit_shriek(f, p);
  HomSpace sections(f.module(), p.module());
  HomSpace ends(f.module(), f.module());
  Vector id = ends.flatten(ModuleMap::identity(f.module()));
  Matrix a(id.size(), sections.dim(), f.field());
  for (std::size_t k = 0; k < sections.dim(); ++k) a.set_column(k, ends.flatten(compose(eps, sections.element(k))));
  auto sol = solve(a, id);
  if (!sol) return std::nullopt;
  return sections.element(*sol);
}

Verdict lifted_class_membership(const Nakayama& nk, const Representation& f, XClass x, FClass fc, const BaseProfile& profile) {
  Verdict v;
  v.route = to_string(x) + "/" + to_string(fc);
  Member xm;
  if (x == XClass::gproj_P) {
    Verdict xv = is_gproj_P(nk, f);
    xm = xv.member;
    v.certificate["x_side"] = xv.to_json();
  } else {
    auto s = p_projective_section(nk, f);
    xm = s ? Member::yes : Member::no;
    v.certificate["x_side"] = {{"test", "counit i_! i^* F -> F splits"}, {"splits", bool(s)}};
  }
  NuRep nf = nk.nu(f);
  json comps = json::array();
  Member fm = Member::yes;
  for (std::size_t c = 0; c < nk.category().object_count(); ++c) {
    const Module& comp = nf.value.component(c);
    json j;
    j["object"] = nk.category().object_name(c);
    if (fc == FClass::gp) {
      Verdict bc = base_gp(comp, profile, nk.cutoff());
      fm = meet(fm, bc.member);
      j["verdict"] = bc.to_json();
    } else {
      const bool proj = is_projective(comp);
      fm = meet(fm, proj ? Member::yes : Member::no);
      j["projective"] = proj;
      j["dims"] = comp.dims();
    }
    comps.push_back(j);
  }
  v.certificate["f_side"] = comps;
  v.member = meet(xm, fm);
  v.hypotheses["cutoff"] = nk.cutoff();
  v.hypotheses["base_profile"] = profile.to_json();
  return v;
}

std::string GpResolutionDimension::to_string() const {
  if (status == Member::inconclusive && value.finite) return "≤" + std::to_string(value.value);
  return value.to_string();
}

GpResolutionDimension gp_resolution_dimension(const Nakayama& nk, const Representation& f, const BaseProfile& profile) {
  GpResolutionDimension out;
  const std::size_t cutoff = nk.cutoff();
  Resolution res = projective_resolution(f.module(), cutoff);
  bool uncertain = false;
  for (std::size_t n = 0; n <= cutoff; ++n) {
    Module syz;
    if (n == 0)
      syz = f.module();
    else if (n <= res.computed())
      syz = kernel(res.maps[n - 1]).module;
    else if (res.completed)
      syz = Module::zero(f.total_ptr());
    else
      break;
    Verdict v = is_gp_functor(nk, with_module(f, syz), profile);
    out.stages.push_back({{"stage", n}, {"member", to_string(v.member)}, {"syzygy_dims", syz.dims()}});
    if (v.member == Member::yes) {
      out.value = {true, n};
      out.status = uncertain ? Member::inconclusive : Member::yes;
      return out;
    }
    if (v.member == Member::inconclusive) uncertain = true;
  }
  out.value = {false, cutoff};
  out.status = Member::inconclusive;
  return out;
}

json loop_exactness(const Nakayama& nk, const Representation& f) {
  const Category& c = nk.category();
  const Category& base = f.base();
  NuRep nf = nk.nu(f);
  json out = json::array();
  auto record = [&](const std::string& side, const std::string& arrow, const std::string& object, const std::string& on,
                    const ModuleMap& m) {
    const std::size_t r = m.rank();
    const std::size_t k = m.source().total_dim() - r;
    const bool squares_to_zero = compose(m, m).is_zero();
    out.push_back({{"side", side}, {"arrow", arrow}, {"object", object}, {"on", on}, {"image", r}, {"kernel", k},
                   {"image_equals_kernel", squares_to_zero && r == k}});
  };
  for (const Representation* rep : {&f, static_cast<const Representation*>(&nf.value)}) {
    const std::string on = rep == &f ? "F" : "nu F";
    for (std::size_t a = 0; a < c.arrow_count(); ++a) {
      const auto& ar = c.arrow(a);
      if (ar.source != ar.target) continue;
      record("C", ar.name, c.object_name(ar.source), on, rep->component_map(ar.source, ar.source, c.arrow_element(a)));
    }
    for (std::size_t beta = 0; beta < base.arrow_count(); ++beta) {
      const auto& br = base.arrow(beta);
      if (br.source != br.target) continue;
      record("base", br.name, base.object_name(br.source), on, rep->base_map(beta));
    }
  }
  return out;
}

json DiscrepancyResult::to_json() const {
  json j;
  j["first"] = first.to_json();
  j["second"] = second.to_json();
  j["witness"] = witness;
  return j;
}

DiscrepancyResult discrepancy_probe(const Representation& first, const Representation& second, std::size_t cutoff) {
  if (!same_category(first.category(), second.base()) || !same_category(first.base(), second.category()) ||
      !(first.swapped(second.total_ptr()).module() == second.module())) {
    throw Error(ErrorKind::validation, "the two factorizations do not present the same module");
  }
  DiscrepancyResult r;
  auto run = [&](const Representation& rep) {
    Nakayama nk(rep.category_ptr(), cutoff);
    Verdict v = is_gp_functor(nk, rep, self_injective_dimension(rep.base_ptr(), cutoff));
    v.certificate["loops"] = loop_exactness(nk, rep);
    return v;
  };
  r.first = run(first);
  r.second = run(second);
  r.witness = (r.first.member == Member::yes && r.second.member == Member::no) ||
              (r.first.member == Member::no && r.second.member == Member::yes);
  return r;
}

json WindowRecord::to_json() const {
  return {{"exact", exact}, {"hom_exact", hom_exact}, {"term_dims", term_dims}};
}

WindowRecord totally_acyclic_window(const Module& f, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::argument, "window size must be positive");
  Resolution res = projective_resolution(f, n);
  std::vector<Module> terms;
  std::vector<ModuleMap> maps;
  for (std::size_t k = n; k-- > 0;) {
    terms.push_back(res.term(k));
    if (k > 0) maps.push_back(res.differential(k));
  }

  Module x = f;
  ModuleMap into_x = res.maps[0];
  for (std::size_t j = 0; j < n; ++j) {
    ModuleMap iota = left_approximation(x);
    maps.push_back(compose(iota, into_x));
    terms.push_back(iota.target());
    QuotientResult q = cokernel(iota);
    x = q.module;
    into_x = q.projection;
  }

  WindowRecord w;
  for (const auto& m : terms) w.term_dims.push_back(m.dims());
  w.exact = true;
  for (std::size_t k = 1; k + 1 < terms.size() && w.exact; ++k) w.exact = homology(maps[k - 1], maps[k]).module.is_zero();

  const Module lambda = regular_module(f.category_ptr());
  std::vector<HomSpace> duals;
  for (const auto& m : terms) duals.emplace_back(m, lambda);
  auto dual_map = [&](std::size_t k) {
    const HomSpace& from = duals[k + 1];
    const HomSpace& to = duals[k];
    Matrix m(to.dim(), from.dim(), f.field());
    for (std::size_t i = 0; i < from.dim(); ++i) m.set_column(i, to.coordinates(compose(from.element(i), maps[k])));
    return m;
  };
  w.hom_exact = true;
  for (std::size_t k = 1; k + 1 < terms.size() && w.hom_exact; ++k)
    w.hom_exact = VectorHomology(dual_map(k), dual_map(k - 1)).dim() == 0;
  return w;
}

Enumerator::Enumerator(CategoryPtr c, std::vector<std::size_t> bounds, std::size_t limit)
    : c_(std::move(c)), bounds_(std::move(bounds)) {
  if (c_->field().is_rational()) throw Error(ErrorKind::argument, "enumeration needs a prime field");
  if (bounds_.size() != c_->object_count()) throw Error(ErrorKind::dimension, "one dimension bound per object expected");
  p_ = c_->field().modulus();
  start_dims();
  bool more = true;
  while (more) {
    std::size_t exponent = 0;
    for (std::size_t a = 0; a < c_->arrow_count(); ++a) exponent += dims_[c_->arrow(a).source] * dims_[c_->arrow(a).target];
    std::size_t size = 1;
    for (std::size_t e = 0; e < exponent && size <= limit; ++e) size *= p_;
    raw_size_ += size;
    if (raw_size_ > limit)
      throw Error(ErrorKind::argument, "raw search space exceeds the enumeration limit of " + std::to_string(limit));
    more = advance_dims();
  }
  restart();
}

void Enumerator::start_dims() { dims_.assign(bounds_.size(), 0); }

bool Enumerator::advance_dims() {
  for (std::size_t x = 0; x < dims_.size(); ++x) {
    if (dims_[x] < bounds_[x]) {
      ++dims_[x];
      return true;
    }
    dims_[x] = 0;
  }
  return false;
}

bool Enumerator::advance_entries() {
  for (auto& e : entries_) {
    if (e + 1 < p_) {
      ++e;
      return true;
    }
    e = 0;
  }
  return false;
}

void Enumerator::restart() {
  start_dims();
  started_ = false;
  done_ = false;
}

std::optional<Module> Enumerator::current() const {
  const Field f = c_->field();
  std::vector<Matrix> arrows;
  std::size_t k = 0;
  for (std::size_t a = 0; a < c_->arrow_count(); ++a) {
    const auto& ar = c_->arrow(a);
    Matrix m(dims_[ar.target], dims_[ar.source], f);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = f.from_int(entries_[k++]);
    arrows.push_back(std::move(m));
  }
  try {
    return Module(c_, dims_, std::move(arrows));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::validation) throw;
    return std::nullopt;
  }
}

std::optional<Module> Enumerator::next() {
  while (!done_) {
    if (!started_) {
      started_ = true;
    } else if (!advance_entries()) {
      if (!advance_dims()) {
        done_ = true;
        break;
      }
      started_ = true;
    } else {
      if (auto m = current()) return m;
      continue;
    }
    std::size_t count = 0;
    for (std::size_t a = 0; a < c_->arrow_count(); ++a) count += dims_[c_->arrow(a).source] * dims_[c_->arrow(a).target];
    entries_.assign(count, 0);
    if (auto m = current()) return m;
  }
  return std::nullopt;
}

std::vector<Module> enumerate_representations(CategoryPtr c, const std::vector<std::size_t>& bounds, std::size_t limit) {
  Enumerator e(std::move(c), bounds, limit);
  std::vector<Module> out;
  while (auto m = e.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace gpcat
