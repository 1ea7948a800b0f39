#pragma once

// Finite-dimensional left modules over a Category: a vector space M(x) per
// object and a matrix M(a): M(source) -> M(target) per arrow.  Right modules
// are left modules over the opposite category.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpcat/category.hpp"

namespace gpcat {

bool same_category(const Category& a, const Category& b);

class Module {
 public:
  Module() = default;
  /// Validates shapes, field and all relations of the category.
  Module(CategoryPtr category, std::vector<std::size_t> dims, std::vector<Matrix> arrows);
  static Module zero(CategoryPtr category);

  const CategoryPtr& category_ptr() const { return data_->category; }
  const Category& category() const { return *data_->category; }
  const Field& field() const { return data_->category->field(); }

  std::size_t dim(std::size_t x) const { return data_->dims[x]; }
  const std::vector<std::size_t>& dims() const { return data_->dims; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& arrow_map(std::size_t a) const { return data_->arrows[a]; }
  const std::vector<Matrix>& arrow_maps() const { return data_->arrows; }
  /// Action of basis element i of Hom(x, y).
  const Matrix& basis_action(std::size_t x, std::size_t y, std::size_t i) const;
  /// Action of h in Hom(x, y), given in coordinates.
  Matrix action(std::size_t x, std::size_t y, const Vector& h) const;

  friend bool operator==(const Module& a, const Module& b);

 private:
  struct Data {
    CategoryPtr category;
    std::vector<std::size_t> dims;
    std::vector<Matrix> arrows;
    std::vector<std::vector<Matrix>> basis_actions;
  };
  std::shared_ptr<const Data> data_;
};

class ModuleMap {
 public:
  ModuleMap() = default;
  /// Checks every naturality square unless check is false.
  ModuleMap(Module source, Module target, std::vector<Matrix> components, bool check = true);
  static ModuleMap identity(const Module& m);
  static ModuleMap zero(const Module& source, const Module& target);

  const Module& source() const { return source_; }
  const Module& target() const { return target_; }
  const Matrix& component(std::size_t x) const { return components_[x]; }
  const std::vector<Matrix>& components() const { return components_; }

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_iso() const;
  std::size_t rank() const;

  ModuleMap operator+(const ModuleMap& o) const;
  ModuleMap operator-(const ModuleMap& o) const;
  ModuleMap scaled(const Scalar& s) const;
  friend bool operator==(const ModuleMap& a, const ModuleMap& b);

 private:
  Module source_;
  Module target_;
  std::vector<Matrix> components_;
};

/// g o f.
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);

/// C(x, -).
Module representable(CategoryPtr c, std::size_t x);
Module simple(CategoryPtr c, std::size_t x);
/// D(M) = Hom_k(M, k) as a module over `op`, the opposite of M's category.
Module dual(const Module& m, CategoryPtr op);
/// D(f): D(target) -> D(source).
ModuleMap dual(const ModuleMap& f, const Module& dual_source, const Module& dual_target);

struct SubmoduleResult {
  Module module;
  ModuleMap inclusion;
};
struct QuotientResult {
  Module module;
  ModuleMap projection;
};
SubmoduleResult kernel(const ModuleMap& f);
QuotientResult cokernel(const ModuleMap& f);
SubmoduleResult image(const ModuleMap& f);

/// Homology of a vector-space complex at the middle term.
class VectorHomology {
 public:
  /// d_in: V' -> V, d_out: V -> V''; requires d_out * d_in == 0.
  VectorHomology(const Matrix& d_in, const Matrix& d_out);
  std::size_t dim() const { return quotient_.dim(); }
  const Subspace& cycles() const { return cycles_; }
  const Quotient& quotient() const { return quotient_; }
  /// Matrix of the map induced on homology by a chain map component V -> W.
  Matrix induced(const Matrix& phi, const VectorHomology& target) const;
  /// Representative cycles of the homology basis (columns).
  Matrix representatives() const;

 private:
  Subspace cycles_;
  Quotient quotient_;
};

struct ModuleHomology {
  Module module;
  std::vector<VectorHomology> parts;
};
/// ker(out) / im(in) with induced arrow action.
ModuleHomology homology(const ModuleMap& in, const ModuleMap& out);
/// Map induced on homology by a chain map component.
ModuleMap induced_on_homology(const ModuleHomology& from, const ModuleHomology& to, const ModuleMap& phi);

struct DirectSum {
  Module module;
  std::vector<ModuleMap> injections;
  std::vector<ModuleMap> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts, CategoryPtr c);

/// Hom_C(M, N) as a subspace of the flattened objectwise matrix spaces.
class HomSpace {
 public:
  HomSpace(Module source, Module target);
  std::size_t dim() const { return space_.dim(); }
  ModuleMap element(std::size_t i) const;
  ModuleMap element(const Vector& coords) const;
  Vector coordinates(const ModuleMap& f) const;
  /// Ambient flattening: per object, row-major entries.
  Vector flatten(const ModuleMap& f) const;
  const Module& source() const { return source_; }
  const Module& target() const { return target_; }

 private:
  Module source_;
  Module target_;
  std::vector<std::size_t> offsets_;
  Subspace space_;
};

/// R (x)_C F for a right module R (module over the opposite) and a left
/// module F, presented as the quotient of (+)_x R(x) (x) F(x) by the arrow
/// relations (r.a) (x) n - r (x) (a.n).  Pair (i, j) sits at i * dim F(x) + j.
class TensorSpace {
 public:
  TensorSpace(Module right, Module left);
  std::size_t dim() const { return quotient_.dim(); }
  const Quotient& quotient() const { return quotient_; }
  std::size_t offset(std::size_t x) const { return offsets_[x]; }
  std::size_t ambient() const { return offsets_.back(); }
  const Module& right() const { return right_; }
  const Module& left() const { return left_; }
  /// Induced map from f: R -> R' and g: F -> F'.
  Matrix induced(const ModuleMap& f, const ModuleMap& g, const TensorSpace& target) const;
  /// Class of r (x) n placed in the x summand.
  Vector class_of(std::size_t x, const Vector& r, const Vector& n) const;

 private:
  Module right_;
  Module left_;
  std::vector<std::size_t> offsets_;
  Quotient quotient_;
};

/// Direct sum of representables C(x_j, -) for the listed objects.
Module free_module(CategoryPtr c, const std::vector<std::size_t>& generators);
/// Offset of summand j inside free_module(generators)(y).
std::size_t free_offset(const Category& c, const std::vector<std::size_t>& generators, std::size_t j, std::size_t y);
/// The map sending generator j (identity of x_j) to images[j] in N(x_j).
ModuleMap map_from_free(const Module& free, const std::vector<std::size_t>& generators,
                        const std::vector<Vector>& images, const Module& target);

/// Top M / rad M with generators chosen as standard basis vectors in order.
struct ProjectiveCover {
  std::vector<std::size_t> generators;
  std::vector<Vector> images;
  Module module;
  ModuleMap epi;
};
ProjectiveCover projective_cover(const Module& m);
std::vector<std::size_t> top_dimensions(const Module& m);

struct Resolution {
  Module resolved;
  /// generators[n]: objects of the representable summands of term n.
  std::vector<std::vector<std::size_t>> generators;
  std::vector<Module> terms;
  /// images[n][j]: image of generator j of term n, in term n-1 (or in the
  /// resolved module for n = 0).
  std::vector<std::vector<Vector>> images;
  /// maps[0] is the augmentation, maps[n] the differential term n -> term n-1.
  std::vector<ModuleMap> maps;
  bool completed = false;
  std::size_t cutoff = 0;

  /// Length when completed.
  std::optional<std::size_t> length() const;
  /// Zero module for indices past the computed range of a completed resolution.
  Module term(std::size_t n) const;
  /// Differential term n -> term n-1 (zero outside the computed range).
  ModuleMap differential(std::size_t n) const;
  /// Highest index whose term has been computed.
  std::size_t computed() const { return terms.size() - 1; }
};

/// Terms 0..cutoff, stopping early when a kernel vanishes.  With pad_object
/// set, term 0 receives an extra summand C(pad, -) mapped onto the image of
/// the first generator (or zero).
Resolution projective_resolution(const Module& m, std::size_t cutoff, std::optional<std::size_t> pad_object = {});

struct Bounded {
  bool finite = false;
  std::size_t value = 0;
  std::string to_string() const;
  friend bool operator==(const Bounded&, const Bounded&) = default;
};
Bounded pdim(const Module& m, std::size_t cutoff);
bool is_projective(const Module& m);

std::string dimension_vector(const Module& m);

}  // namespace gpcat
