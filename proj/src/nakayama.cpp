#include "gpcat/nakayama.hpp"

namespace gpcat {

namespace {

Vector unit_vector(std::size_t n, std::size_t i, const Field& f) {
  Vector v(n, f.zero());
  v[i] = f.one();
  return v;
}

// Objects of the free module i_! V at base object b: object c repeated dim V_c(b) times.
std::vector<std::size_t> shriek_generators(const std::vector<Module>& parts, std::size_t b) {
  std::vector<std::size_t> gens;
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (std::size_t k = 0; k < parts[c].dim(b); ++k) gens.push_back(c);
  return gens;
}

std::vector<std::size_t> generator_starts(const std::vector<Module>& parts, std::size_t b) {
  std::vector<std::size_t> start{0};
  for (const auto& p : parts) start.push_back(start.back() + p.dim(b));
  return start;
}

Matrix factor_through(const Matrix& ambient_map, const Quotient& q, const char* what) {
  Matrix m = ambient_map * q.section();
  if (!(m * q.projection() == ambient_map)) throw Error(ErrorKind::inconsistent, std::string(what) + ": map is not well defined");
  return m;
}

}  // namespace

std::string GorensteinDimension::to_string() const {
  switch (kind) {
    case Kind::finite:
      return std::to_string(value);
    case Kind::at_least:
      return "≥" + std::to_string(value);
    case Kind::not_iwanaga_gorenstein:
      return "not-Iwanaga-Gorenstein-at-cutoff";
  }
  return "";
}

Parts parts_from_dims(const Field& f, const std::vector<std::size_t>& dims) {
  auto unit = Category::unit(f);
  Parts parts;
  for (auto d : dims) parts.emplace_back(unit, std::vector<std::size_t>{d}, std::vector<Matrix>{});
  return parts;
}

Nakayama::Nakayama(CategoryPtr c, std::size_t cutoff) : c_(std::move(c)), op_(opposite(*c_)), cutoff_(cutoff) {
  const Category& cat = *c_;
  const std::size_t n = cat.object_count();
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> rdims, ldims;
    for (std::size_t y = 0; y < n; ++y) {
      rdims.push_back(cat.hom_dim(x, y));
      ldims.push_back(cat.hom_dim(y, x));
    }
    std::vector<Matrix> rarrows, larrows;
    for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
      const auto& ar = cat.arrow(a);
      Vector h = cat.arrow_element(a);
      rarrows.push_back(transpose(cat.left_multiplication(x, ar.source, ar.target, h)));
      larrows.push_back(transpose(cat.right_multiplication(ar.source, ar.target, x, h)));
    }
    dr_.emplace_back(op_, std::move(rdims), std::move(rarrows));
    dl_.emplace_back(c_, std::move(ldims), std::move(larrows));
  }
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const auto& ar = cat.arrow(a);
    Vector h = cat.arrow_element(a);
    std::vector<Matrix> rcomps, lcomps;
    for (std::size_t y = 0; y < n; ++y) {
      rcomps.push_back(transpose(cat.right_multiplication(ar.source, ar.target, y, h)));
      lcomps.push_back(transpose(cat.left_multiplication(y, ar.source, ar.target, h)));
    }
    dr_maps_.emplace_back(dr_[ar.source], dr_[ar.target], std::move(rcomps));
    dl_maps_.emplace_back(dl_[ar.target], dl_[ar.source], std::move(lcomps));
  }
  for (std::size_t x = 0; x < n; ++x) {
    dr_res_.push_back(projective_resolution(dr_[x], cutoff_));
    dl_res_.push_back(projective_resolution(dl_[x], cutoff_));
  }
}

GorensteinDimension Nakayama::gorenstein_dimension() const {
  GorensteinDimension g;
  g.left = {true, 0};
  g.right = {true, 0};
  for (std::size_t x = 0; x < category().object_count(); ++x) {
    const Resolution& l = dl_res_[x];
    const Resolution& r = dr_res_[x];
    if (!l.completed) g.left = {false, cutoff_};
    else if (g.left.finite) g.left.value = std::max(g.left.value, *l.length());
    if (!r.completed) g.right = {false, cutoff_};
    else if (g.right.finite) g.right.value = std::max(g.right.value, *r.length());
  }
  if (g.left.finite && g.right.finite) {
    if (g.left.value != g.right.value) {
      throw Error(ErrorKind::inconsistent, "sup pdim D(C(-,c)) = " + std::to_string(g.left.value) +
                                               " differs from sup pdim D(C(c,-)) = " + std::to_string(g.right.value));
    }
    g.kind = GorensteinDimension::Kind::finite;
    g.value = g.left.value;
  } else if (!g.left.finite && !g.right.finite) {
    g.kind = GorensteinDimension::Kind::at_least;
    g.value = cutoff_;
  } else {
    g.kind = GorensteinDimension::Kind::not_iwanaga_gorenstein;
    g.value = cutoff_;
  }
  return g;
}

NuSlice Nakayama::nu(const Module& f) const {
  NuSlice s;
  const Category& cat = category();
  std::vector<std::size_t> dims;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    s.spaces.emplace_back(dr_[c], f);
    dims.push_back(s.spaces.back().dim());
  }
  ModuleMap id = ModuleMap::identity(f);
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const auto& ar = cat.arrow(a);
    arrows.push_back(s.spaces[ar.source].induced(dr_maps_[a], id, s.spaces[ar.target]));
  }
  s.value = Module(c_, std::move(dims), std::move(arrows));
  return s;
}

ModuleMap Nakayama::nu(const ModuleMap& f, const NuSlice& source, const NuSlice& target) const {
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < category().object_count(); ++c)
    comps.push_back(source.spaces[c].induced(ModuleMap::identity(dr_[c]), f, target.spaces[c]));
  return ModuleMap(source.value, target.value, std::move(comps), false);
}

NuMinusSlice Nakayama::nu_minus(const Module& f) const {
  NuMinusSlice s;
  const Category& cat = category();
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < cat.object_count(); ++x) {
    s.spaces.emplace_back(dl_[x], f);
    dims.push_back(s.spaces.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < cat.arrow_count(); ++a) {
    const auto& ar = cat.arrow(a);
    const HomSpace& src = s.spaces[ar.source];
    const HomSpace& tgt = s.spaces[ar.target];
    Matrix m(tgt.dim(), src.dim(), f.field());
    for (std::size_t i = 0; i < src.dim(); ++i) m.set_column(i, tgt.coordinates(compose(src.element(i), dl_maps_[a])));
    arrows.push_back(std::move(m));
  }
  s.value = Module(c_, std::move(dims), std::move(arrows));
  return s;
}

ModuleMap Nakayama::nu_minus(const ModuleMap& f, const NuMinusSlice& source, const NuMinusSlice& target) const {
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < category().object_count(); ++x) {
    const HomSpace& src = source.spaces[x];
    const HomSpace& tgt = target.spaces[x];
    Matrix m(tgt.dim(), src.dim(), f.source().field());
    for (std::size_t i = 0; i < src.dim(); ++i) m.set_column(i, tgt.coordinates(compose(f, src.element(i))));
    comps.push_back(std::move(m));
  }
  return ModuleMap(source.value, target.value, std::move(comps), false);
}

ModuleMap Nakayama::sharp(const ModuleMap& phi, const NuSlice& nu_g, const NuMinusSlice& nu_minus_f) const {
  const Category& cat = category();
  const Field& fld = cat.field();
  const Module& g = nu_g.spaces[0].left();
  const Module& f = phi.target();
  std::vector<Matrix> comps;
  for (std::size_t y = 0; y < cat.object_count(); ++y) {
    const HomSpace& hs = nu_minus_f.spaces[y];
    Matrix m(hs.dim(), g.dim(y), fld);
    for (std::size_t k = 0; k < g.dim(y); ++k) {
      Vector gk = unit_vector(g.dim(y), k, fld);
      std::vector<Matrix> parts;
      for (std::size_t c = 0; c < cat.object_count(); ++c) {
        Matrix part(f.dim(c), cat.hom_dim(c, y), fld);
        for (std::size_t i = 0; i < cat.hom_dim(c, y); ++i)
          part.set_column(i, phi.component(c) * nu_g.spaces[c].class_of(y, unit_vector(cat.hom_dim(c, y), i, fld), gk));
        parts.push_back(std::move(part));
      }
      m.set_column(k, hs.coordinates(ModuleMap(dl_[y], f, std::move(parts))));
    }
    comps.push_back(std::move(m));
  }
  return ModuleMap(g, nu_minus_f.value, std::move(comps));
}

ModuleMap Nakayama::flat(const ModuleMap& psi, const NuSlice& nu_g, const NuMinusSlice& nu_minus_f) const {
  const Category& cat = category();
  const Field& fld = cat.field();
  const Module& g = psi.source();
  const Module& f = nu_minus_f.spaces[0].target();
  std::vector<Matrix> comps;
  for (std::size_t c = 0; c < cat.object_count(); ++c) {
    const TensorSpace& ts = nu_g.spaces[c];
    Matrix amb(f.dim(c), ts.ambient(), fld);
    for (std::size_t y = 0; y < cat.object_count(); ++y)
      for (std::size_t k = 0; k < g.dim(y); ++k) {
        ModuleMap e = nu_minus_f.spaces[y].element(psi.component(y).column_vector(k));
        for (std::size_t i = 0; i < cat.hom_dim(c, y); ++i) amb.set_column(ts.offset(y) + i * g.dim(y) + k, e.component(c).column_vector(i));
      }
    comps.push_back(factor_through(amb, ts.quotient(), "adjunct"));
  }
  return ModuleMap(nu_g.value, f, std::move(comps));
}

ModuleMap Nakayama::lambda(const Module& g) const {
  NuSlice n = nu(g);
  NuMinusSlice nm = nu_minus(n.value);
  return sharp(ModuleMap::identity(n.value), n, nm);
}

ModuleMap Nakayama::sigma(const Module& f) const {
  NuMinusSlice nm = nu_minus(f);
  NuSlice n = nu(nm.value);
  return flat(ModuleMap::identity(nm.value), n, nm);
}

NuRep Nakayama::nu(const Representation& f) const {
  NuRep r;
  std::vector<Module> values;
  for (std::size_t b = 0; b < f.base().object_count(); ++b) {
    r.slices.push_back(nu(f.slice(b)));
    values.push_back(r.slices.back().value);
  }
  std::vector<ModuleMap> maps;
  for (std::size_t beta = 0; beta < f.base().arrow_count(); ++beta) {
    const auto& br = f.base().arrow(beta);
    maps.push_back(nu(f.base_map(beta), r.slices[br.source], r.slices[br.target]));
  }
  r.value = Representation::assemble(c_, f.base_ptr(), f.total_ptr(), values, maps);
  return r;
}

ModuleMap Nakayama::nu(const ModuleMap& f, const Representation& source, const Representation& target, const NuRep& nu_source,
                       const NuRep& nu_target) const {
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < source.base().object_count(); ++b)
    maps.push_back(nu(slice_map(source, target, f, b), nu_source.slices[b], nu_target.slices[b]));
  return assemble_map(nu_source.value, nu_target.value, maps);
}

NuMinusRep Nakayama::nu_minus(const Representation& f) const {
  NuMinusRep r;
  std::vector<Module> values;
  for (std::size_t b = 0; b < f.base().object_count(); ++b) {
    r.slices.push_back(nu_minus(f.slice(b)));
    values.push_back(r.slices.back().value);
  }
  std::vector<ModuleMap> maps;
  for (std::size_t beta = 0; beta < f.base().arrow_count(); ++beta) {
    const auto& br = f.base().arrow(beta);
    maps.push_back(nu_minus(f.base_map(beta), r.slices[br.source], r.slices[br.target]));
  }
  r.value = Representation::assemble(c_, f.base_ptr(), f.total_ptr(), values, maps);
  return r;
}

ModuleMap Nakayama::nu_minus(const ModuleMap& f, const Representation& source, const Representation& target,
                             const NuMinusRep& nu_minus_source, const NuMinusRep& nu_minus_target) const {
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < source.base().object_count(); ++b)
    maps.push_back(nu_minus(slice_map(source, target, f, b), nu_minus_source.slices[b], nu_minus_target.slices[b]));
  return assemble_map(nu_minus_source.value, nu_minus_target.value, maps);
}

std::pair<ModuleMap, NuMinusRep> Nakayama::lambda(const Representation& f) const {
  NuRep n = nu(f);
  NuMinusRep nm = nu_minus(n.value);
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < f.base().object_count(); ++b)
    maps.push_back(sharp(ModuleMap::identity(n.slices[b].value), n.slices[b], nm.slices[b]));
  return {assemble_map(f, nm.value, maps), nm};
}

Representation Nakayama::i_shriek(CategoryPtr base, CategoryPtr total, const Parts& parts) const {
  const Category& cat = category();
  if (parts.size() != cat.object_count()) throw Error(ErrorKind::dimension, "i_!: one part per object expected");
  std::vector<Module> slices;
  std::vector<std::vector<std::size_t>> gens;
  for (std::size_t b = 0; b < base->object_count(); ++b) {
    gens.push_back(shriek_generators(parts, b));
    slices.push_back(free_module(c_, gens.back()));
  }
  std::vector<ModuleMap> maps;
  for (std::size_t beta = 0; beta < base->arrow_count(); ++beta) {
    const auto& br = base->arrow(beta);
    auto sstart = generator_starts(parts, br.source);
    auto tstart = generator_starts(parts, br.target);
    std::vector<Vector> images;
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const Matrix& v = parts[c].arrow_map(beta);
      for (std::size_t k = 0; k < parts[c].dim(br.source); ++k) {
        Vector img(slices[br.target].dim(c), cat.field().zero());
        for (std::size_t l = 0; l < parts[c].dim(br.target); ++l)
          img[free_offset(cat, gens[br.target], tstart[c] + l, c)] = v(l, k);
        images.push_back(std::move(img));
      }
    }
    maps.push_back(map_from_free(slices[br.source], gens[br.source], images, slices[br.target]));
  }
  return Representation::assemble(c_, std::move(base), std::move(total), slices, maps);
}

ModuleMap Nakayama::i_shriek(const std::vector<ModuleMap>& maps, const Representation& source, const Representation& target) const {
  const Category& cat = category();
  Parts vs, ws;
  for (const auto& m : maps) {
    vs.push_back(m.source());
    ws.push_back(m.target());
  }
  std::vector<ModuleMap> slice_maps;
  for (std::size_t b = 0; b < source.base().object_count(); ++b) {
    auto sg = shriek_generators(vs, b);
    auto tg = shriek_generators(ws, b);
    auto tstart = generator_starts(ws, b);
    std::vector<Vector> images;
    for (std::size_t c = 0; c < vs.size(); ++c) {
      const Matrix& g = maps[c].component(b);
      for (std::size_t k = 0; k < vs[c].dim(b); ++k) {
        Vector img(target.slice(b).dim(c), cat.field().zero());
        for (std::size_t l = 0; l < ws[c].dim(b); ++l) img[free_offset(cat, tg, tstart[c] + l, c)] = g(l, k);
        images.push_back(std::move(img));
      }
    }
    slice_maps.push_back(map_from_free(source.slice(b), sg, images, target.slice(b)));
  }
  return assemble_map(source, target, slice_maps);
}

Representation Nakayama::i_lower_star(CategoryPtr base, CategoryPtr total, const Parts& parts) const {
  const Category& cat = category();
  const Field& fld = cat.field();
  const std::size_t n = cat.object_count();
  if (parts.size() != n) throw Error(ErrorKind::dimension, "i_*: one part per object expected");
  std::vector<Module> slices;
  for (std::size_t b = 0; b < base->object_count(); ++b) {
    std::vector<Module> summands;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < parts[c].dim(b); ++k) summands.push_back(dl_[c]);
    slices.push_back(direct_sum(summands, c_).module);
  }
  std::vector<ModuleMap> maps;
  for (std::size_t beta = 0; beta < base->arrow_count(); ++beta) {
    const auto& br = base->arrow(beta);
    std::vector<Matrix> comps;
    for (std::size_t y = 0; y < n; ++y) {
      Matrix m(slices[br.target].dim(y), slices[br.source].dim(y), fld);
      std::size_t roff = 0, coff = 0;
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t block = cat.hom_dim(y, c);
        const Matrix& v = parts[c].arrow_map(beta);
        for (std::size_t l = 0; l < parts[c].dim(br.target); ++l)
          for (std::size_t k = 0; k < parts[c].dim(br.source); ++k)
            if (!v(l, k).is_zero()) m.set_block(roff + l * block, coff + k * block, Matrix::identity(block, fld).scaled(v(l, k)));
        roff += block * parts[c].dim(br.target);
        coff += block * parts[c].dim(br.source);
      }
      comps.push_back(std::move(m));
    }
    maps.emplace_back(slices[br.source], slices[br.target], std::move(comps), false);
  }
  return Representation::assemble(c_, std::move(base), std::move(total), slices, maps);
}

Parts Nakayama::i_star(const Representation& f) const {
  Parts p;
  for (std::size_t c = 0; c < category().object_count(); ++c) p.push_back(f.component(c));
  return p;
}

ModuleMap Nakayama::counit_shriek(const Representation& f, const Representation& p) const {
  Parts parts = i_star(f);
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < f.base().object_count(); ++b) {
    auto gens = shriek_generators(parts, b);
    std::vector<Vector> images;
    for (std::size_t c = 0; c < parts.size(); ++c)
      for (std::size_t k = 0; k < parts[c].dim(b); ++k) images.push_back(unit_vector(parts[c].dim(b), k, f.field()));
    maps.push_back(map_from_free(p.slice(b), gens, images, f.slice(b)));
  }
  return assemble_map(p, f, maps);
}

std::vector<ModuleMap> Nakayama::unit_shriek(const Parts& parts, const Representation& shriek) const {
  const Category& cat = category();
  std::vector<ModuleMap> units;
  for (std::size_t c = 0; c < parts.size(); ++c) {
    std::vector<Matrix> comps;
    for (std::size_t b = 0; b < shriek.base().object_count(); ++b) {
      auto gens = shriek_generators(parts, b);
      auto start = generator_starts(parts, b);
      Matrix m(shriek.dim(c, b), parts[c].dim(b), cat.field());
      for (std::size_t k = 0; k < parts[c].dim(b); ++k) m(free_offset(cat, gens, start[c] + k, c), k) = cat.field().one();
      comps.push_back(std::move(m));
    }
    units.emplace_back(parts[c], shriek.component(c), std::move(comps), false);
  }
  return units;
}

ModuleMap Nakayama::unit_lower_star(const Representation& f, const Representation& i_lower) const {
  const Category& cat = category();
  const std::size_t n = cat.object_count();
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < f.base().object_count(); ++b) {
    const Module& fb = f.slice(b);
    std::vector<Matrix> comps;
    for (std::size_t y = 0; y < n; ++y) {
      Matrix m(i_lower.slice(b).dim(y), fb.dim(y), cat.field());
      std::size_t row = 0;
      for (std::size_t c = 0; c < n; ++c) {
        const std::size_t block = cat.hom_dim(y, c);
        for (std::size_t k = 0; k < fb.dim(c); ++k, row += block)
          for (std::size_t i = 0; i < block; ++i) {
            const Matrix& act = fb.basis_action(y, c, i);
            for (std::size_t j = 0; j < fb.dim(y); ++j) m(row + i, j) = act(k, j);
          }
      }
      comps.push_back(std::move(m));
    }
    maps.emplace_back(fb, i_lower.slice(b), std::move(comps), false);
  }
  return assemble_map(f, i_lower, maps);
}

ModuleMap Nakayama::nu_shriek_to_lower_star(const NuRep& nu_shriek, const Representation& shriek, const Representation& lower) const {
  const Category& cat = category();
  const Field& fld = cat.field();
  const std::size_t n = cat.object_count();
  std::vector<ModuleMap> maps;
  for (std::size_t b = 0; b < shriek.base().object_count(); ++b) {
    // The free slice has top S_c with multiplicity dim V_c(b).
    auto copies = top_dimensions(shriek.slice(b));
    std::vector<std::size_t> gens;
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < copies[c]; ++k) gens.push_back(c);
    const NuSlice& ns = nu_shriek.slices[b];
    std::vector<Matrix> comps;
    for (std::size_t c = 0; c < n; ++c) {
      const TensorSpace& ts = ns.spaces[c];
      Matrix amb(lower.slice(b).dim(c), ts.ambient(), fld);
      std::vector<std::size_t> row_start;
      std::size_t row = 0;
      for (std::size_t c2 = 0; c2 < n; ++c2) {
        row_start.push_back(row);
        row += cat.hom_dim(c, c2) * copies[c2];
      }
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t fy = shriek.slice(b).dim(y);
        for (std::size_t j = 0; j < gens.size(); ++j) {
          const std::size_t c2 = gens[j];
          std::size_t k = 0;
          for (std::size_t jj = 0; jj < j; ++jj)
            if (gens[jj] == c2) ++k;
          const std::size_t off = free_offset(cat, gens, j, y);
          for (std::size_t u = 0; u < cat.hom_dim(c2, y); ++u) {
            Matrix left = cat.left_multiplication(c, c2, y, unit_vector(cat.hom_dim(c2, y), u, fld));
            for (std::size_t i = 0; i < cat.hom_dim(c, y); ++i) {
              const std::size_t col = ts.offset(y) + i * fy + off + u;
              for (std::size_t w = 0; w < cat.hom_dim(c, c2); ++w)
                amb(row_start[c2] + k * cat.hom_dim(c, c2) + w, col) = left(i, w);
            }
          }
        }
      }
      comps.push_back(factor_through(amb, ts.quotient(), "nu i_! -> i_*"));
    }
    maps.emplace_back(ns.value, lower.slice(b), std::move(comps), false);
  }
  return assemble_map(nu_shriek.value, lower, maps);
}

Representation Nakayama::left_derived_nu(const Representation& f, std::size_t i) const {
  return left_derived_nu(f, projective_resolution(f.module(), cutoff_), i);
}

Representation Nakayama::left_derived_nu(const Representation& f, const Resolution& res, std::size_t i) const {
  if (i == 0) throw Error(ErrorKind::argument, "left derived functors start at degree 1");
  if (!res.completed && i + 1 > res.computed()) {
    throw Error(ErrorKind::inconclusive, "L_" + std::to_string(i) + " nu needs resolution term " + std::to_string(i + 1) +
                                             " beyond the cutoff " + std::to_string(res.cutoff));
  }
  auto wrap = [&](const Module& m) { return Representation(c_, f.base_ptr(), f.total_ptr(), m); };
  Representation q_prev = wrap(res.term(i - 1)), q = wrap(res.term(i)), q_next = wrap(res.term(i + 1));
  NuRep n_prev = nu(q_prev), n = nu(q), n_next = nu(q_next);
  ModuleMap out = nu(res.differential(i), q, q_prev, n, n_prev);
  ModuleMap in = nu(res.differential(i + 1), q_next, q, n_next, n);
  return wrap(homology(in, out).module);
}

Module Nakayama::left_derived_nu_at(const Representation& f, std::size_t c, std::size_t i) const {
  return DerivedComplex::tensor(dr_res_[c], f).degree(i);
}

Module Nakayama::right_derived_nu_minus_at(const Representation& f, std::size_t x, std::size_t i) const {
  return DerivedComplex::hom(dl_res_[x], f).degree(i);
}

std::vector<std::size_t> Nakayama::right_derived_nu_minus_by_coresolution(const Representation& f, std::size_t i) const {
  auto wrap = [&](const Module& m) { return Representation(c_, f.base_ptr(), f.total_ptr(), m); };
  // I^0 .. I^{i+1} with differentials d^n: I^n -> I^{n+1}.
  std::vector<Representation> terms;
  std::vector<ModuleMap> diffs;
  Representation current = f;
  ModuleMap prev_projection;
  for (std::size_t n = 0; n <= i + 1; ++n) {
    Representation inj = i_lower_star(f.base_ptr(), f.total_ptr(), i_star(current));
    ModuleMap unit = unit_lower_star(current, inj);
    if (n > 0) diffs.push_back(compose(unit, prev_projection));
    terms.push_back(inj);
    QuotientResult q = cokernel(unit);
    current = wrap(q.module);
    prev_projection = q.projection;
  }
  std::vector<NuMinusRep> nm;
  for (const auto& t : terms) nm.push_back(nu_minus(t));
  ModuleMap out = nu_minus(diffs[i], terms[i], terms[i + 1], nm[i], nm[i + 1]);
  ModuleMap in = i == 0 ? ModuleMap::zero(Module::zero(f.total_ptr()), nm[0].value.module())
                        : nu_minus(diffs[i - 1], terms[i - 1], terms[i], nm[i - 1], nm[i]);
  return homology(in, out).module.dims();
}

}  // namespace gpcat
