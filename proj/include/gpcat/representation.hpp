#pragma once

// Representations of C with values in modules over a base algebra B, stored
// as modules over the tensor category T = C (x) B (T = C when B is the unit
// category).  Object (c, b) of T has index c * |B| + b.

#include <vector>

#include "gpcat/module.hpp"

namespace gpcat {

class Representation {
 public:
  Representation() = default;
  /// Base field only.
  explicit Representation(Module m);
  Representation(CategoryPtr c, CategoryPtr base, CategoryPtr total, Module m);
  /// From C-modules per base object and C-module maps per base arrow.
  static Representation assemble(CategoryPtr c, CategoryPtr base, CategoryPtr total, const std::vector<Module>& slices,
                                 const std::vector<ModuleMap>& base_maps);

  const CategoryPtr& category_ptr() const { return data_->c; }
  const Category& category() const { return *data_->c; }
  const CategoryPtr& base_ptr() const { return data_->base; }
  const Category& base() const { return *data_->base; }
  const CategoryPtr& total_ptr() const { return data_->total; }
  const Module& module() const { return data_->module; }
  const Field& field() const { return data_->c->field(); }
  bool has_base() const { return !data_->base->is_unit(); }

  std::size_t dim(std::size_t c, std::size_t b) const { return module().dim(c * base().object_count() + b); }
  std::size_t total_dim() const { return module().total_dim(); }
  bool is_zero() const { return module().is_zero(); }

  /// The C-module at base object b.
  const Module& slice(std::size_t b) const { return data_->slices[b]; }
  /// C-module map slice(source) -> slice(target) of a base arrow.
  const ModuleMap& base_map(std::size_t beta) const { return data_->base_maps[beta]; }
  /// The B-module F(c).
  const Module& component(std::size_t c) const { return data_->components[c]; }
  /// B-module map F(h): F(x) -> F(y) for h in C(x, y).
  ModuleMap component_map(std::size_t x, std::size_t y, const Vector& h) const;

  /// Same data viewed with the factors exchanged (B-valued -> C-valued).
  Representation swapped(CategoryPtr swapped_total) const;

 private:
  struct Data {
    CategoryPtr c;
    CategoryPtr base;
    CategoryPtr total;
    Module module;
    std::vector<Module> slices;
    std::vector<ModuleMap> base_maps;
    std::vector<Module> components;
  };
  std::shared_ptr<const Data> data_;
};

/// Arrow index in T of arrow a of C at base object d.
std::size_t total_arrow_of_c(const Category& base, std::size_t a, std::size_t d);
/// Arrow index in T of arrow beta of B at object x of C.
std::size_t total_arrow_of_base(const Category& c, const Category& base, std::size_t x, std::size_t beta);

/// Map of representations from C-module maps per base object.
ModuleMap assemble_map(const Representation& source, const Representation& target, const std::vector<ModuleMap>& slice_maps);
/// Restriction of a T-module map to base object b.
ModuleMap slice_map(const Representation& source, const Representation& target, const ModuleMap& f, std::size_t b);

/// R (x)_C F as a B-module.
struct BaseTensor {
  Module value;
  std::vector<TensorSpace> parts;
};
BaseTensor tensor_over_C(const Module& right, const Representation& f);

/// Hom_C(M, F) as a B-module.
struct BaseHom {
  Module value;
  std::vector<HomSpace> parts;
};
BaseHom hom_over_C(const Module& left, const Representation& f);

/// Complex of B-modules (+)_j F(x_j) obtained from a projective resolution
/// by tensoring (right resolutions) or by Hom (left resolutions).
class DerivedComplex {
 public:
  /// `res` resolves a right C-module: the chain complex P_n (x)_C F.
  static DerivedComplex tensor(const Resolution& res, const Representation& f);
  /// `res` resolves a left C-module: the cochain complex Hom_C(P_n, F).
  static DerivedComplex hom(const Resolution& res, const Representation& f);

  /// Homology in degree i; throws Error(inconclusive) when the truncation of
  /// the resolution could affect it.
  Module degree(std::size_t i) const;
  bool available(std::size_t i) const;
  /// Degrees above this vanish (completed resolutions only).
  std::optional<std::size_t> vanishing_above() const;

 private:
  bool homological_ = true;
  bool completed_ = false;
  CategoryPtr base_;
  std::vector<Module> terms_;
  /// Homological: maps_[n]: terms_[n] -> terms_[n-1].  Cohomological:
  /// maps_[n]: terms_[n-1] -> terms_[n].
  std::vector<ModuleMap> maps_;
};

/// Tor_i^C(R, F) and Ext^i_C(M, F) as B-modules.
Module tor(const Module& right, const Representation& f, std::size_t i, std::size_t cutoff);
Module ext(const Module& left, const Representation& f, std::size_t i, std::size_t cutoff);

}  // namespace gpcat
