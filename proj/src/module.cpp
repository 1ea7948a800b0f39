#include "gpcat/module.hpp"

#include <numeric>

namespace gpcat {

bool same_category(const Category& a, const Category& b) { return &a == &b || a.structurally_equal(b); }

namespace {

void require_same(const Category& a, const Category& b, const char* what) {
  if (!same_category(a, b)) throw Error(ErrorKind::validation, std::string(what) + ": modules over different categories");
}

Matrix path_matrix(const std::vector<Matrix>& arrows, const std::vector<std::size_t>& dims, std::size_t x,
                   const Path& p, const Field& f) {
  Matrix m = Matrix::identity(dims[x], f);
  for (auto a : p) m = arrows[a] * m;
  return m;
}

}  // namespace

Module::Module(CategoryPtr category, std::vector<std::size_t> dims, std::vector<Matrix> arrows) {
  const Category& c = *category;
  const Field& f = c.field();
  if (dims.size() != c.object_count()) throw Error(ErrorKind::dimension, "module: one dimension per object expected");
  if (arrows.size() != c.arrow_count()) throw Error(ErrorKind::dimension, "module: one matrix per arrow expected");
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& ar = c.arrow(a);
    if (!(arrows[a].field() == f)) throw Error(ErrorKind::field_mismatch, "module: matrix for arrow '" + ar.name + "' over another field");
    if (arrows[a].rows() != dims[ar.target] || arrows[a].cols() != dims[ar.source]) {
      throw Error(ErrorKind::dimension, "module: matrix for arrow '" + ar.name + "' has shape " +
                                            std::to_string(arrows[a].rows()) + "x" + std::to_string(arrows[a].cols()) +
                                            ", expected " + std::to_string(dims[ar.target]) + "x" +
                                            std::to_string(dims[ar.source]));
    }
  }
  for (std::size_t r = 0; r < c.relations().size(); ++r) {
    const auto& rel = c.relations()[r];
    std::size_t x = c.arrow(rel.terms.front().path.front()).source;
    std::size_t y = c.arrow(rel.terms.front().path.back()).target;
    Matrix sum(dims[y], dims[x], f);
    for (const auto& t : rel.terms) sum = sum + path_matrix(arrows, dims, x, t.path, f).scaled(t.coefficient);
    if (!sum.is_zero()) {
      std::string label;
      for (std::size_t k = 0; k < rel.terms.size(); ++k) {
        if (k) label += " + ";
        label += rel.terms[k].coefficient.to_string() + "*" + c.path_label(x, rel.terms[k].path);
      }
      throw Error(ErrorKind::validation, "module: relation " + label + " = 0 does not hold");
    }
  }
  auto data = std::make_shared<Data>();
  const std::size_t n = c.object_count();
  data->basis_actions.resize(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (const auto& p : c.hom_basis(x, y))
        data->basis_actions[x * n + y].push_back(path_matrix(arrows, dims, x, p, f));
  data->category = std::move(category);
  data->dims = std::move(dims);
  data->arrows = std::move(arrows);
  data_ = std::move(data);
}

Module Module::zero(CategoryPtr category) {
  std::vector<Matrix> arrows(category->arrow_count(), Matrix(0, 0, category->field()));
  std::vector<std::size_t> dims(category->object_count(), 0);
  return Module(std::move(category), std::move(dims), std::move(arrows));
}

std::size_t Module::total_dim() const { return std::accumulate(dims().begin(), dims().end(), std::size_t{0}); }

const Matrix& Module::basis_action(std::size_t x, std::size_t y, std::size_t i) const {
  return data_->basis_actions[x * category().object_count() + y][i];
}

Matrix Module::action(std::size_t x, std::size_t y, const Vector& h) const {
  Matrix m(dim(y), dim(x), field());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) m = m + basis_action(x, y, i).scaled(h[i]);
  return m;
}

bool operator==(const Module& a, const Module& b) {
  if (a.data_ == b.data_) return true;
  return same_category(a.category(), b.category()) && a.dims() == b.dims() && a.arrow_maps() == b.arrow_maps();
}

ModuleMap::ModuleMap(Module source, Module target, std::vector<Matrix> components, bool check)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same(source_.category(), target_.category(), "module map");
  const Category& c = source_.category();
  if (components_.size() != c.object_count()) throw Error(ErrorKind::dimension, "module map: one component per object expected");
  for (std::size_t x = 0; x < components_.size(); ++x) {
    if (components_[x].rows() != target_.dim(x) || components_[x].cols() != source_.dim(x)) {
      throw Error(ErrorKind::dimension, "module map: component at '" + c.object_name(x) + "' has the wrong shape");
    }
  }
  if (!check) return;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    if (!(target_.arrow_map(a) * components_[ar.source] == components_[ar.target] * source_.arrow_map(a))) {
      throw Error(ErrorKind::validation, "module map: naturality fails at arrow '" + ar.name + "'");
    }
  }
}

ModuleMap ModuleMap::identity(const Module& m) {
  std::vector<Matrix> comps;
  for (auto d : m.dims()) comps.push_back(Matrix::identity(d, m.field()));
  return ModuleMap(m, m, std::move(comps), false);
}

ModuleMap ModuleMap::zero(const Module& source, const Module& target) {
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < source.dims().size(); ++x) comps.emplace_back(target.dim(x), source.dim(x), source.field());
  return ModuleMap(source, target, std::move(comps), false);
}

bool ModuleMap::is_zero() const {
  for (const auto& m : components_)
    if (!m.is_zero()) return false;
  return true;
}

std::size_t ModuleMap::rank() const {
  std::size_t r = 0;
  for (const auto& m : components_) r += gpcat::rank(m);
  return r;
}

bool ModuleMap::is_injective() const { return rank() == source_.total_dim(); }
bool ModuleMap::is_surjective() const { return rank() == target_.total_dim(); }
bool ModuleMap::is_iso() const { return is_injective() && is_surjective(); }

ModuleMap ModuleMap::operator+(const ModuleMap& o) const {
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < components_.size(); ++x) comps.push_back(components_[x] + o.components_[x]);
  return ModuleMap(source_, target_, std::move(comps), false);
}

ModuleMap ModuleMap::operator-(const ModuleMap& o) const {
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < components_.size(); ++x) comps.push_back(components_[x] - o.components_[x]);
  return ModuleMap(source_, target_, std::move(comps), false);
}

ModuleMap ModuleMap::scaled(const Scalar& s) const {
  std::vector<Matrix> comps;
  for (const auto& m : components_) comps.push_back(m.scaled(s));
  return ModuleMap(source_, target_, std::move(comps), false);
}

bool operator==(const ModuleMap& a, const ModuleMap& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (!(f.target().dims() == g.source().dims())) throw Error(ErrorKind::dimension, "compose: maps are not composable");
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < f.components().size(); ++x) comps.push_back(g.component(x) * f.component(x));
  return ModuleMap(f.source(), g.target(), std::move(comps), false);
}

Module representable(CategoryPtr c, std::size_t x) {
  if (x >= c->object_count()) throw Error(ErrorKind::argument, "representable: unknown object");
  return free_module(std::move(c), {x});
}

Module simple(CategoryPtr c, std::size_t x) {
  if (x >= c->object_count()) throw Error(ErrorKind::argument, "simple: unknown object");
  std::vector<std::size_t> dims(c->object_count(), 0);
  dims[x] = 1;
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c->arrow_count(); ++a)
    arrows.emplace_back(dims[c->arrow(a).target], dims[c->arrow(a).source], c->field());
  return Module(std::move(c), std::move(dims), std::move(arrows));
}

Module dual(const Module& m, CategoryPtr op) {
  const Category& c = m.category();
  if (op->object_count() != c.object_count() || op->arrow_count() != c.arrow_count()) {
    throw Error(ErrorKind::validation, "dual: category is not the opposite");
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    if (op->arrow(a).source != c.arrow(a).target || op->arrow(a).target != c.arrow(a).source) {
      throw Error(ErrorKind::validation, "dual: category is not the opposite");
    }
    arrows.push_back(transpose(m.arrow_map(a)));
  }
  return Module(std::move(op), m.dims(), std::move(arrows));
}

ModuleMap dual(const ModuleMap& f, const Module& dual_source, const Module& dual_target) {
  std::vector<Matrix> comps;
  for (const auto& m : f.components()) comps.push_back(transpose(m));
  return ModuleMap(dual_target, dual_source, std::move(comps), false);
}

SubmoduleResult kernel(const ModuleMap& f) {
  const Module& m = f.source();
  const Category& c = m.category();
  std::vector<Subspace> parts;
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    parts.push_back(Subspace::kernel_of(f.component(x)));
    dims.push_back(parts.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    arrows.push_back(parts[ar.target].coordinates(m.arrow_map(a) * parts[ar.source].basis()));
  }
  Module k(m.category_ptr(), std::move(dims), std::move(arrows));
  std::vector<Matrix> inc;
  for (const auto& p : parts) inc.push_back(p.basis());
  return {k, ModuleMap(k, m, std::move(inc), false)};
}

QuotientResult cokernel(const ModuleMap& f) {
  const Module& n = f.target();
  const Category& c = n.category();
  std::vector<Quotient> parts;
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    parts.push_back(Quotient::of(f.component(x)));
    dims.push_back(parts.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    arrows.push_back(parts[ar.source].induced(n.arrow_map(a), parts[ar.target]));
  }
  Module q(n.category_ptr(), std::move(dims), std::move(arrows));
  std::vector<Matrix> proj;
  for (const auto& p : parts) proj.push_back(p.projection());
  return {q, ModuleMap(n, q, std::move(proj), false)};
}

SubmoduleResult image(const ModuleMap& f) {
  const Module& n = f.target();
  const Category& c = n.category();
  std::vector<Subspace> parts;
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    parts.push_back(Subspace::span(f.component(x)));
    dims.push_back(parts.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    arrows.push_back(parts[ar.target].coordinates(n.arrow_map(a) * parts[ar.source].basis()));
  }
  Module im(n.category_ptr(), std::move(dims), std::move(arrows));
  std::vector<Matrix> inc;
  for (const auto& p : parts) inc.push_back(p.basis());
  return {im, ModuleMap(im, n, std::move(inc), false)};
}

VectorHomology::VectorHomology(const Matrix& d_in, const Matrix& d_out) {
  if (!(d_out * d_in).is_zero()) throw Error(ErrorKind::inconsistent, "homology: composite of differentials is not zero");
  cycles_ = Subspace::kernel_of(d_out);
  quotient_ = Quotient::of(cycles_.coordinates(d_in));
}

Matrix VectorHomology::representatives() const { return cycles_.basis() * quotient_.section(); }

Matrix VectorHomology::induced(const Matrix& phi, const VectorHomology& target) const {
  return target.quotient_.projection() * target.cycles_.coordinates(phi * representatives());
}

ModuleHomology homology(const ModuleMap& in, const ModuleMap& out) {
  const Module& mid = in.target();
  const Category& c = mid.category();
  ModuleHomology h;
  std::vector<std::size_t> dims;
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    h.parts.emplace_back(in.component(x), out.component(x));
    dims.push_back(h.parts.back().dim());
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    arrows.push_back(h.parts[ar.source].induced(mid.arrow_map(a), h.parts[ar.target]));
  }
  h.module = Module(mid.category_ptr(), std::move(dims), std::move(arrows));
  return h;
}

ModuleMap induced_on_homology(const ModuleHomology& from, const ModuleHomology& to, const ModuleMap& phi) {
  std::vector<Matrix> comps;
  for (std::size_t x = 0; x < from.parts.size(); ++x) comps.push_back(from.parts[x].induced(phi.component(x), to.parts[x]));
  return ModuleMap(from.module, to.module, std::move(comps), false);
}

DirectSum direct_sum(const std::vector<Module>& parts, CategoryPtr c) {
  const std::size_t n = c->object_count();
  const Field f = c->field();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    require_same(p.category(), *c, "direct sum");
    for (std::size_t x = 0; x < n; ++x) dims[x] += p.dim(x);
  }
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c->arrow_count(); ++a) {
    const auto& ar = c->arrow(a);
    Matrix m(dims[ar.target], dims[ar.source], f);
    std::size_t r = 0, col = 0;
    for (const auto& p : parts) {
      m.set_block(r, col, p.arrow_map(a));
      r += p.dim(ar.target);
      col += p.dim(ar.source);
    }
    arrows.push_back(std::move(m));
  }
  DirectSum s;
  s.module = Module(c, dims, std::move(arrows));
  std::vector<std::size_t> offset(n, 0);
  for (const auto& p : parts) {
    std::vector<Matrix> inj, proj;
    for (std::size_t x = 0; x < n; ++x) {
      Matrix i(dims[x], p.dim(x), f);
      i.set_block(offset[x], 0, Matrix::identity(p.dim(x), f));
      proj.push_back(transpose(i));
      inj.push_back(std::move(i));
      offset[x] += p.dim(x);
    }
    s.injections.emplace_back(p, s.module, std::move(inj), false);
    s.projections.emplace_back(s.module, p, std::move(proj), false);
  }
  return s;
}

HomSpace::HomSpace(Module source, Module target) : source_(std::move(source)), target_(std::move(target)) {
  require_same(source_.category(), target_.category(), "hom space");
  const Category& c = source_.category();
  const Field f = c.field();
  offsets_.push_back(0);
  for (std::size_t x = 0; x < c.object_count(); ++x) offsets_.push_back(offsets_.back() + source_.dim(x) * target_.dim(x));
  std::size_t eqs = 0;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) eqs += target_.dim(c.arrow(a).target) * source_.dim(c.arrow(a).source);
  Matrix m(eqs, offsets_.back(), f);
  std::size_t row = 0;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const auto& ar = c.arrow(a);
    const std::size_t x = ar.source, y = ar.target;
    const Matrix& na = target_.arrow_map(a);
    const Matrix& ma = source_.arrow_map(a);
    const std::size_t mx = source_.dim(x), my = source_.dim(y), nx = target_.dim(x), ny = target_.dim(y);
    for (std::size_t r = 0; r < ny; ++r)
      for (std::size_t col = 0; col < mx; ++col, ++row) {
        for (std::size_t k = 0; k < nx; ++k)
          if (!na(r, k).is_zero()) m(row, offsets_[x] + k * mx + col) += na(r, k);
        for (std::size_t k = 0; k < my; ++k)
          if (!ma(k, col).is_zero()) m(row, offsets_[y] + r * my + k) -= ma(k, col);
      }
  }
  space_ = Subspace::kernel_of(m);
}

ModuleMap HomSpace::element(const Vector& coords) const {
  Vector flat = space_.basis() * coords;
  std::vector<Matrix> comps;
  const Category& c = source_.category();
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    Matrix m(target_.dim(x), source_.dim(x), c.field());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) m(r, col) = flat[offsets_[x] + r * m.cols() + col];
    comps.push_back(std::move(m));
  }
  return ModuleMap(source_, target_, std::move(comps), false);
}

ModuleMap HomSpace::element(std::size_t i) const {
  Vector e(dim(), source_.field().zero());
  e[i] = source_.field().one();
  return element(e);
}

Vector HomSpace::flatten(const ModuleMap& f) const {
  Vector flat;
  flat.reserve(offsets_.back());
  for (const auto& m : f.components())
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t col = 0; col < m.cols(); ++col) flat.push_back(m(r, col));
  return flat;
}

Vector HomSpace::coordinates(const ModuleMap& f) const {
  return space_.coordinates(Matrix::column(flatten(f), source_.field())).column_vector(0);
}

TensorSpace::TensorSpace(Module right, Module left) : right_(std::move(right)), left_(std::move(left)) {
  const Category& c = left_.category();
  const Category& op = right_.category();
  bool ok = op.object_count() == c.object_count() && op.arrow_count() == c.arrow_count() && op.field() == c.field();
  for (std::size_t a = 0; ok && a < c.arrow_count(); ++a)
    ok = op.arrow(a).source == c.arrow(a).target && op.arrow(a).target == c.arrow(a).source;
  if (!ok) throw Error(ErrorKind::validation, "tensor: right module is not over the opposite category");
  const Field f = c.field();
  offsets_.push_back(0);
  for (std::size_t x = 0; x < c.object_count(); ++x) offsets_.push_back(offsets_.back() + right_.dim(x) * left_.dim(x));
  std::size_t rels = 0;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) rels += right_.dim(c.arrow(a).target) * left_.dim(c.arrow(a).source);
  Matrix m(offsets_.back(), rels, f);
  std::size_t col = 0;
  for (std::size_t a = 0; a < c.arrow_count(); ++a) {
    const std::size_t x = c.arrow(a).source, y = c.arrow(a).target;
    const Matrix& ra = right_.arrow_map(a);
    const Matrix& fa = left_.arrow_map(a);
    const std::size_t fx = left_.dim(x), fy = left_.dim(y), rx = right_.dim(x);
    for (std::size_t i = 0; i < right_.dim(y); ++i)
      for (std::size_t j = 0; j < fx; ++j, ++col) {
        for (std::size_t k = 0; k < rx; ++k)
          if (!ra(k, i).is_zero()) m(offsets_[x] + k * fx + j, col) += ra(k, i);
        for (std::size_t l = 0; l < fy; ++l)
          if (!fa(l, j).is_zero()) m(offsets_[y] + i * fy + l, col) -= fa(l, j);
      }
  }
  quotient_ = Quotient::of(m);
}

Matrix TensorSpace::induced(const ModuleMap& f, const ModuleMap& g, const TensorSpace& target) const {
  const Category& c = left_.category();
  Matrix amb(target.ambient(), ambient(), c.field());
  for (std::size_t x = 0; x < c.object_count(); ++x)
    amb.set_block(target.offsets_[x], offsets_[x], kronecker_product(f.component(x), g.component(x)));
  return quotient_.induced(amb, target.quotient_);
}

Vector TensorSpace::class_of(std::size_t x, const Vector& r, const Vector& n) const {
  Vector amb(ambient(), left_.field().zero());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j) amb[offsets_[x] + i * n.size() + j] = r[i] * n[j];
  return quotient_.projection() * amb;
}

Module free_module(CategoryPtr c, const std::vector<std::size_t>& generators) {
  const Field f = c->field();
  std::vector<std::size_t> dims(c->object_count(), 0);
  for (auto g : generators)
    for (std::size_t y = 0; y < dims.size(); ++y) dims[y] += c->hom_dim(g, y);
  std::vector<Matrix> arrows;
  for (std::size_t a = 0; a < c->arrow_count(); ++a) {
    const auto& ar = c->arrow(a);
    Matrix m(dims[ar.target], dims[ar.source], f);
    Vector h = c->arrow_element(a);
    std::size_t r = 0, col = 0;
    for (auto g : generators) {
      m.set_block(r, col, c->left_multiplication(g, ar.source, ar.target, h));
      r += c->hom_dim(g, ar.target);
      col += c->hom_dim(g, ar.source);
    }
    arrows.push_back(std::move(m));
  }
  return Module(std::move(c), std::move(dims), std::move(arrows));
}

std::size_t free_offset(const Category& c, const std::vector<std::size_t>& generators, std::size_t j, std::size_t y) {
  std::size_t off = 0;
  for (std::size_t k = 0; k < j; ++k) off += c.hom_dim(generators[k], y);
  return off;
}

ModuleMap map_from_free(const Module& free, const std::vector<std::size_t>& generators, const std::vector<Vector>& images,
                        const Module& target) {
  const Category& c = free.category();
  std::vector<Matrix> comps;
  for (std::size_t y = 0; y < c.object_count(); ++y) {
    Matrix m(target.dim(y), free.dim(y), c.field());
    std::size_t col = 0;
    for (std::size_t j = 0; j < generators.size(); ++j) {
      const std::size_t x = generators[j];
      for (std::size_t i = 0; i < c.hom_dim(x, y); ++i, ++col) {
        Vector v = target.basis_action(x, y, i) * images[j];
        m.set_column(col, v);
      }
    }
    comps.push_back(std::move(m));
  }
  return ModuleMap(free, target, std::move(comps), false);
}

namespace {

// Radical of M at x: sum of images of arrows ending at x.
Matrix radical_span(const Module& m, std::size_t x) {
  const Category& c = m.category();
  Matrix r(m.dim(x), 0, m.field());
  for (std::size_t a = 0; a < c.arrow_count(); ++a)
    if (c.arrow(a).target == x) r = hstack(r, m.arrow_map(a));
  return r;
}

std::vector<Vector> top_generators(const Module& m, std::size_t x) {
  Matrix span = radical_span(m, x);
  std::size_t r = rank(span);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < m.dim(x) && r < m.dim(x); ++k) {
    Vector e(m.dim(x), m.field().zero());
    e[k] = m.field().one();
    Matrix trial = hstack(span, Matrix::column(e, m.field()));
    std::size_t tr = rank(trial);
    if (tr > r) {
      span = std::move(trial);
      r = tr;
      gens.push_back(std::move(e));
    }
  }
  return gens;
}

}  // namespace

std::vector<std::size_t> top_dimensions(const Module& m) {
  std::vector<std::size_t> d;
  for (std::size_t x = 0; x < m.category().object_count(); ++x) d.push_back(m.dim(x) - rank(radical_span(m, x)));
  return d;
}

ProjectiveCover projective_cover(const Module& m) {
  ProjectiveCover pc;
  for (std::size_t x = 0; x < m.category().object_count(); ++x)
    for (auto& v : top_generators(m, x)) {
      pc.generators.push_back(x);
      pc.images.push_back(std::move(v));
    }
  pc.module = free_module(m.category_ptr(), pc.generators);
  pc.epi = map_from_free(pc.module, pc.generators, pc.images, m);
  return pc;
}

std::optional<std::size_t> Resolution::length() const {
  if (!completed) return std::nullopt;
  return terms.size() - 1;
}

Module Resolution::term(std::size_t n) const {
  if (n < terms.size()) return terms[n];
  if (!completed) throw Error(ErrorKind::inconclusive, "resolution term " + std::to_string(n) + " beyond cutoff");
  return Module::zero(resolved.category_ptr());
}

ModuleMap Resolution::differential(std::size_t n) const {
  if (n < maps.size()) return maps[n];
  if (n == 0) throw Error(ErrorKind::argument, "resolution has no augmentation");
  return ModuleMap::zero(term(n), term(n - 1));
}

Resolution projective_resolution(const Module& m, std::size_t cutoff, std::optional<std::size_t> pad_object) {
  Resolution res;
  res.resolved = m;
  res.cutoff = cutoff;
  ProjectiveCover pc = projective_cover(m);
  if (pad_object) {
    Vector v(m.dim(*pad_object), m.field().zero());
    if (!v.empty()) v[0] = m.field().one();
    pc.generators.push_back(*pad_object);
    pc.images.push_back(std::move(v));
    pc.module = free_module(m.category_ptr(), pc.generators);
    pc.epi = map_from_free(pc.module, pc.generators, pc.images, m);
  }
  res.generators.push_back(pc.generators);
  res.images.push_back(pc.images);
  res.terms.push_back(pc.module);
  res.maps.push_back(pc.epi);
  for (std::size_t n = 0;; ++n) {
    SubmoduleResult k = kernel(res.maps[n]);
    if (k.module.is_zero()) {
      res.completed = true;
      break;
    }
    if (n == cutoff) break;
    ProjectiveCover next = projective_cover(k.module);
    std::vector<Vector> images;
    for (std::size_t j = 0; j < next.generators.size(); ++j)
      images.push_back(k.inclusion.component(next.generators[j]) * next.images[j]);
    res.generators.push_back(next.generators);
    res.terms.push_back(next.module);
    res.maps.push_back(map_from_free(next.module, next.generators, images, res.terms[n]));
    res.images.push_back(std::move(images));
  }
  return res;
}

std::string Bounded::to_string() const { return finite ? std::to_string(value) : "≥" + std::to_string(value); }

Bounded pdim(const Module& m, std::size_t cutoff) {
  Resolution r = projective_resolution(m, cutoff);
  if (r.completed) return {true, *r.length()};
  return {false, cutoff};
}

bool is_projective(const Module& m) { return projective_cover(m).epi.is_injective(); }

std::string dimension_vector(const Module& m) {
  std::string s = "(";
  for (std::size_t x = 0; x < m.dims().size(); ++x) {
    if (x) s += ",";
    s += std::to_string(m.dim(x));
  }
  return s + ")";
}

}  // namespace gpcat
