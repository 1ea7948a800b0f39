#include "gpcat/representation.hpp"

namespace gpcat {

std::size_t total_arrow_of_c(const Category& base, std::size_t a, std::size_t d) {
  return a * base.object_count() + d;
}

std::size_t total_arrow_of_base(const Category& c, const Category& base, std::size_t x, std::size_t beta) {
  return c.arrow_count() * base.object_count() + x * base.arrow_count() + beta;
}

Representation::Representation(Module m) : Representation(m.category_ptr(), Category::unit(m.field()), m.category_ptr(), m) {}

Representation::Representation(CategoryPtr c, CategoryPtr base, CategoryPtr total, Module m) {
  const std::size_t nc = c->object_count(), nb = base->object_count();
  if (!(c->field() == base->field())) throw Error(ErrorKind::field_mismatch, "representation: category and base over different fields");
  if (total->object_count() != nc * nb || total->arrow_count() != c->arrow_count() * nb + nc * base->arrow_count()) {
    throw Error(ErrorKind::validation, "representation: total category does not match the factors");
  }
  if (!same_category(m.category(), *total)) throw Error(ErrorKind::validation, "representation: module over the wrong category");
  auto data = std::make_shared<Data>();
  for (std::size_t b = 0; b < nb; ++b) {
    std::vector<std::size_t> dims;
    for (std::size_t x = 0; x < nc; ++x) dims.push_back(m.dim(x * nb + b));
    std::vector<Matrix> arrows;
    for (std::size_t a = 0; a < c->arrow_count(); ++a) arrows.push_back(m.arrow_map(total_arrow_of_c(*base, a, b)));
    data->slices.emplace_back(c, std::move(dims), std::move(arrows));
  }
  for (std::size_t beta = 0; beta < base->arrow_count(); ++beta) {
    std::vector<Matrix> comps;
    for (std::size_t x = 0; x < nc; ++x) comps.push_back(m.arrow_map(total_arrow_of_base(*c, *base, x, beta)));
    const auto& br = base->arrow(beta);
    data->base_maps.emplace_back(data->slices[br.source], data->slices[br.target], std::move(comps), false);
  }
  for (std::size_t x = 0; x < nc; ++x) {
    std::vector<std::size_t> dims;
    for (std::size_t b = 0; b < nb; ++b) dims.push_back(m.dim(x * nb + b));
    std::vector<Matrix> arrows;
    for (std::size_t beta = 0; beta < base->arrow_count(); ++beta)
      arrows.push_back(m.arrow_map(total_arrow_of_base(*c, *base, x, beta)));
    data->components.emplace_back(base, std::move(dims), std::move(arrows));
  }
  data->c = std::move(c);
  data->base = std::move(base);
  data->total = std::move(total);
  data->module = std::move(m);
  data_ = std::move(data);
}

Representation Representation::assemble(CategoryPtr c, CategoryPtr base, CategoryPtr total, const std::vector<Module>& slices,
                                        const std::vector<ModuleMap>& base_maps) {
  const std::size_t nc = c->object_count(), nb = base->object_count();
  if (slices.size() != nb || base_maps.size() != base->arrow_count()) {
    throw Error(ErrorKind::dimension, "representation: one slice per base object and one map per base arrow expected");
  }
  std::vector<std::size_t> dims(nc * nb);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t b = 0; b < nb; ++b) dims[x * nb + b] = slices[b].dim(x);
  std::vector<Matrix> arrows(total->arrow_count());
  for (std::size_t a = 0; a < c->arrow_count(); ++a)
    for (std::size_t b = 0; b < nb; ++b) arrows[total_arrow_of_c(*base, a, b)] = slices[b].arrow_map(a);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t beta = 0; beta < base->arrow_count(); ++beta)
      arrows[total_arrow_of_base(*c, *base, x, beta)] = base_maps[beta].component(x);
  Module m(total, std::move(dims), std::move(arrows));
  return Representation(std::move(c), std::move(base), std::move(total), std::move(m));
}

ModuleMap Representation::component_map(std::size_t x, std::size_t y, const Vector& h) const {
  std::vector<Matrix> comps;
  for (std::size_t b = 0; b < base().object_count(); ++b) comps.push_back(slice(b).action(x, y, h));
  return ModuleMap(component(x), component(y), std::move(comps), false);
}

Representation Representation::swapped(CategoryPtr swapped_total) const {
  const Category& c = category();
  const Category& b = base();
  const std::size_t nc = c.object_count(), nb = b.object_count();
  std::vector<std::size_t> dims(nc * nb);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t y = 0; y < nb; ++y) dims[y * nc + x] = dim(x, y);
  std::vector<Matrix> arrows(module().arrow_maps().size());
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    for (std::size_t y = 0; y < nb; ++y)
      arrows[total_arrow_of_base(b, c, y, a)] = module().arrow_map(total_arrow_of_c(b, a, y));
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t beta = 0; beta < b.arrow_count(); ++beta)
      arrows[total_arrow_of_c(c, beta, x)] = module().arrow_map(total_arrow_of_base(c, b, x, beta));
  Module m(swapped_total, std::move(dims), std::move(arrows));
  return Representation(base_ptr(), category_ptr(), std::move(swapped_total), std::move(m));
}

ModuleMap assemble_map(const Representation& source, const Representation& target, const std::vector<ModuleMap>& slice_maps) {
  const std::size_t nc = source.category().object_count(), nb = source.base().object_count();
  std::vector<Matrix> comps(nc * nb);
  for (std::size_t x = 0; x < nc; ++x)
    for (std::size_t b = 0; b < nb; ++b) comps[x * nb + b] = slice_maps[b].component(x);
  return ModuleMap(source.module(), target.module(), std::move(comps), false);
}

ModuleMap slice_map(const Representation& source, const Representation& target, const ModuleMap& f, std::size_t b) {
  const std::size_t nc = source.category().object_count(), nb = source.base().object_count();
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < nc; ++x) comps.push_back(f.component(x * nb + b));
  return ModuleMap(source.slice(b), target.slice(b), std::move(comps), false);
}

BaseTensor tensor_over_C(const Module& right, const Representation& f) {
  BaseTensor t;
  const Category& base = f.base();
  std::vector<std::size_t> dims;
  for (std::size_t b = 0; b < base.object_count(); ++b) {
    t.parts.emplace_back(right, f.slice(b));
    dims.push_back(t.parts.back().dim());
  }
  ModuleMap id = ModuleMap::identity(right);
  std::vector<Matrix> arrows;
  for (std::size_t beta = 0; beta < base.arrow_count(); ++beta) {
    const auto& br = base.arrow(beta);
    arrows.push_back(t.parts[br.source].induced(id, f.base_map(beta), t.parts[br.target]));
  }
  t.value = Module(f.base_ptr(), std::move(dims), std::move(arrows));
  return t;
}

BaseHom hom_over_C(const Module& left, const Representation& f) {
  BaseHom h;
  const Category& base = f.base();
  std::vector<std::size_t> dims;
  for (std::size_t b = 0; b < base.object_count(); ++b) {
    h.parts.emplace_back(left, f.slice(b));
    dims.push_back(h.parts.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t beta = 0; beta < base.arrow_count(); ++beta) {
    const auto& br = base.arrow(beta);
    const HomSpace& s = h.parts[br.source];
    const HomSpace& t = h.parts[br.target];
    Matrix m(t.dim(), s.dim(), f.field());
    for (std::size_t i = 0; i < s.dim(); ++i) m.set_column(i, t.coordinates(compose(f.base_map(beta), s.element(i))));
    arrows.push_back(std::move(m));
  }
  h.value = Module(f.base_ptr(), std::move(dims), std::move(arrows));
  return h;
}

namespace {

Module sum_of_components(const Representation& f, const std::vector<std::size_t>& objects) {
  std::vector<Module> parts;
  for (auto x : objects) parts.push_back(f.component(x));
  return direct_sum(parts, f.base_ptr()).module;
}

// Offsets of the component blocks inside sum_of_components at base object b.
std::vector<std::size_t> block_offsets(const Representation& f, const std::vector<std::size_t>& objects, std::size_t b) {
  std::vector<std::size_t> off{0};
  for (auto x : objects) off.push_back(off.back() + f.dim(x, b));
  return off;
}

}  // namespace

DerivedComplex DerivedComplex::tensor(const Resolution& res, const Representation& f) {
  const Category& c = f.category();
  const Category& op = res.resolved.category();
  DerivedComplex dc;
  dc.homological_ = true;
  dc.completed_ = res.completed;
  dc.base_ = f.base_ptr();
  const std::size_t nb = f.base().object_count();
  for (std::size_t n = 0; n < res.terms.size(); ++n) dc.terms_.push_back(sum_of_components(f, res.generators[n]));
  dc.maps_.push_back(ModuleMap::zero(dc.terms_[0], Module::zero(dc.base_)));
  for (std::size_t n = 1; n < res.terms.size(); ++n) {
    const auto& gens = res.generators[n];
    const auto& prev = res.generators[n - 1];
    std::vector<Matrix> comps;
    for (std::size_t b = 0; b < nb; ++b) {
      auto roff = block_offsets(f, prev, b);
      auto coff = block_offsets(f, gens, b);
      Matrix m(roff.back(), coff.back(), f.field());
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t xj = gens[j];
        const Vector& h = res.images[n][j];
        for (std::size_t i = 0; i < prev.size(); ++i) {
          const std::size_t xi = prev[i];
          const std::size_t off = free_offset(op, prev, i, xj);
          Vector u(c.hom_dim(xj, xi), f.field().zero());
          bool any = false;
          for (std::size_t k = 0; k < op.hom_dim(xi, xj); ++k) {
            if (h[off + k].is_zero()) continue;
            Path p = op.hom_basis(xi, xj)[k];
            std::reverse(p.begin(), p.end());
            Vector v = c.reduce(xj, xi, p);
            for (std::size_t r = 0; r < v.size(); ++r) u[r] += h[off + k] * v[r];
            any = true;
          }
          if (any) m.set_block(roff[i], coff[j], f.slice(b).action(xj, xi, u));
        }
      }
      comps.push_back(std::move(m));
    }
    dc.maps_.emplace_back(dc.terms_[n], dc.terms_[n - 1], std::move(comps), false);
  }
  return dc;
}

DerivedComplex DerivedComplex::hom(const Resolution& res, const Representation& f) {
  const Category& c = f.category();
  DerivedComplex dc;
  dc.homological_ = false;
  dc.completed_ = res.completed;
  dc.base_ = f.base_ptr();
  const std::size_t nb = f.base().object_count();
  for (std::size_t n = 0; n < res.terms.size(); ++n) dc.terms_.push_back(sum_of_components(f, res.generators[n]));
  dc.maps_.push_back(ModuleMap::zero(Module::zero(dc.base_), dc.terms_[0]));
  for (std::size_t n = 1; n < res.terms.size(); ++n) {
    const auto& gens = res.generators[n];
    const auto& prev = res.generators[n - 1];
    std::vector<Matrix> comps;
    for (std::size_t b = 0; b < nb; ++b) {
      auto roff = block_offsets(f, gens, b);
      auto coff = block_offsets(f, prev, b);
      Matrix m(roff.back(), coff.back(), f.field());
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const std::size_t xj = gens[j];
        const Vector& h = res.images[n][j];
        for (std::size_t i = 0; i < prev.size(); ++i) {
          const std::size_t xi = prev[i];
          const std::size_t off = free_offset(c, prev, i, xj);
          Vector u(h.begin() + off, h.begin() + off + c.hom_dim(xi, xj));
          bool any = false;
          for (const auto& s : u) any = any || !s.is_zero();
          if (any) m.set_block(roff[j], coff[i], f.slice(b).action(xi, xj, u));
        }
      }
      comps.push_back(std::move(m));
    }
    dc.maps_.emplace_back(dc.terms_[n - 1], dc.terms_[n], std::move(comps), false);
  }
  return dc;
}

bool DerivedComplex::available(std::size_t i) const { return completed_ || i + 1 < terms_.size(); }

std::optional<std::size_t> DerivedComplex::vanishing_above() const {
  if (!completed_) return std::nullopt;
  return terms_.size() - 1;
}

Module DerivedComplex::degree(std::size_t i) const {
  if (!available(i)) {
    throw Error(ErrorKind::inconclusive, "degree " + std::to_string(i) + " needs resolution term " + std::to_string(i + 1) +
                                             " beyond the cutoff " + std::to_string(terms_.size() - 1));
  }
  if (i >= terms_.size()) return Module::zero(base_);
  Module next = i + 1 < terms_.size() ? terms_[i + 1] : Module::zero(base_);
  if (homological_) {
    ModuleMap in = i + 1 < maps_.size() ? maps_[i + 1] : ModuleMap::zero(next, terms_[i]);
    return homology(in, maps_[i]).module;
  }
  ModuleMap out = i + 1 < maps_.size() ? maps_[i + 1] : ModuleMap::zero(terms_[i], next);
  return homology(maps_[i], out).module;
}

Module tor(const Module& right, const Representation& f, std::size_t i, std::size_t cutoff) {
  return DerivedComplex::tensor(projective_resolution(right, cutoff), f).degree(i);
}

Module ext(const Module& left, const Representation& f, std::size_t i, std::size_t cutoff) {
  return DerivedComplex::hom(projective_resolution(left, cutoff), f).degree(i);
}

}  // namespace gpcat
