#pragma once

// The adjoint triple i_! -| i^* -| i_* for the inclusion of the objects of C
// and the Nakayama functor nu = D(C) (x)_C - with its right adjoint nu^-.
//
// Coefficients, built from the composition table of C:
//   dr(c) = D(C(c,-)), a right module (module over the opposite category);
//   dl(x) = D(C(-,x)), a left module.
// nu(F)(c) = dr(c) (x)_C F and nu^-(F)(x) = Hom_C(dl(x), F).  Note that
// dr(c)(y) = dl(y)(c) = D(C(c,y)); the adjunction maps below use this.
// Everything is computed one base object at a time.

#include <optional>
#include <string>
#include <vector>

#include "gpcat/representation.hpp"

namespace gpcat {

/// Per-object base modules (the image of i^*).
using Parts = std::vector<Module>;

struct NuSlice {
  Module value;
  std::vector<TensorSpace> spaces;
};
struct NuMinusSlice {
  Module value;
  std::vector<HomSpace> spaces;
};

struct NuRep {
  Representation value;
  std::vector<NuSlice> slices;
};
struct NuMinusRep {
  Representation value;
  std::vector<NuMinusSlice> slices;
};

struct GorensteinDimension {
  enum class Kind { finite, at_least, not_iwanaga_gorenstein };
  Kind kind = Kind::finite;
  std::size_t value = 0;
  /// sup pdim dl(x) and sup pdim dr(c).
  Bounded left;
  Bounded right;
  std::string to_string() const;
  bool is_finite() const { return kind == Kind::finite; }
};

class Nakayama {
 public:
  Nakayama(CategoryPtr c, std::size_t cutoff);

  const CategoryPtr& category_ptr() const { return c_; }
  const Category& category() const { return *c_; }
  const CategoryPtr& opposite_ptr() const { return op_; }
  std::size_t cutoff() const { return cutoff_; }

  const Module& dr(std::size_t c) const { return dr_[c]; }
  const Module& dl(std::size_t x) const { return dl_[x]; }
  /// For a: c -> c', the map dr(c) -> dr(c').
  const ModuleMap& dr_map(std::size_t a) const { return dr_maps_[a]; }
  /// For a: x -> x', the map dl(x') -> dl(x).
  const ModuleMap& dl_map(std::size_t a) const { return dl_maps_[a]; }
  const Resolution& dr_resolution(std::size_t c) const { return dr_res_[c]; }
  const Resolution& dl_resolution(std::size_t x) const { return dl_res_[x]; }

  GorensteinDimension gorenstein_dimension() const;

  // Single base object (plain C-modules).
  NuSlice nu(const Module& f) const;
  ModuleMap nu(const ModuleMap& f, const NuSlice& source, const NuSlice& target) const;
  NuMinusSlice nu_minus(const Module& f) const;
  ModuleMap nu_minus(const ModuleMap& f, const NuMinusSlice& source, const NuMinusSlice& target) const;
  /// Adjunct G -> nu^- F of phi: nu G -> F.
  ModuleMap sharp(const ModuleMap& phi, const NuSlice& nu_g, const NuMinusSlice& nu_minus_f) const;
  /// Adjunct nu G -> F of psi: G -> nu^- F.
  ModuleMap flat(const ModuleMap& psi, const NuSlice& nu_g, const NuMinusSlice& nu_minus_f) const;
  /// Unit G -> nu^- nu G.
  ModuleMap lambda(const Module& g) const;
  /// Counit nu nu^- F -> F.
  ModuleMap sigma(const Module& f) const;

  // Representations (all base objects).
  NuRep nu(const Representation& f) const;
  /// nu on a map of representations (a map of total modules).
  ModuleMap nu(const ModuleMap& f, const Representation& source, const Representation& target, const NuRep& nu_source,
               const NuRep& nu_target) const;
  NuMinusRep nu_minus(const Representation& f) const;
  ModuleMap nu_minus(const ModuleMap& f, const Representation& source, const Representation& target,
                     const NuMinusRep& nu_minus_source, const NuMinusRep& nu_minus_target) const;
  /// Unit F -> nu^- nu F, assembled from the slices; also returns nu^- nu F.
  std::pair<ModuleMap, NuMinusRep> lambda(const Representation& f) const;

  Representation i_shriek(CategoryPtr base, CategoryPtr total, const Parts& parts) const;
  Representation i_lower_star(CategoryPtr base, CategoryPtr total, const Parts& parts) const;
  /// i_! on maps of parts.
  ModuleMap i_shriek(const std::vector<ModuleMap>& maps, const Representation& source, const Representation& target) const;
  Parts i_star(const Representation& f) const;
  /// Counit i_! i^* F -> F (the action map).
  ModuleMap counit_shriek(const Representation& f, const Representation& p) const;
  /// Unit V_c -> (i^* i_! V)(c).
  std::vector<ModuleMap> unit_shriek(const Parts& parts, const Representation& shriek) const;
  /// Unit F -> i_* i^* F (evaluation u |-> F(u) f).
  ModuleMap unit_lower_star(const Representation& f, const Representation& i_lower) const;
  /// The canonical map nu i_! V -> i_* V.
  ModuleMap nu_shriek_to_lower_star(const NuRep& nu_shriek, const Representation& shriek, const Representation& lower) const;

  /// L_i nu(F) computed from a projective resolution of F.
  Representation left_derived_nu(const Representation& f, std::size_t i) const;
  /// Same, reusing a projective resolution of f.module().
  Representation left_derived_nu(const Representation& f, const Resolution& res, std::size_t i) const;
  /// L_i nu(F)(c) = Tor_i(dr(c), F) as a base module.
  Module left_derived_nu_at(const Representation& f, std::size_t c, std::size_t i) const;
  /// R^i nu^-(F)(x) = Ext^i(dl(x), F) as a base module.
  Module right_derived_nu_minus_at(const Representation& f, std::size_t x, std::size_t i) const;
  /// R^i nu^-(F) from the coresolution by the I-injectives i_* i^*; object dims.
  std::vector<std::size_t> right_derived_nu_minus_by_coresolution(const Representation& f, std::size_t i) const;

 private:
  CategoryPtr c_;
  CategoryPtr op_;
  std::size_t cutoff_;
  std::vector<Module> dr_;
  std::vector<Module> dl_;
  std::vector<ModuleMap> dr_maps_;
  std::vector<ModuleMap> dl_maps_;
  std::vector<Resolution> dr_res_;
  std::vector<Resolution> dl_res_;
};

/// Parts over the unit category from a dimension vector.
Parts parts_from_dims(const Field& f, const std::vector<std::size_t>& dims);

}  // namespace gpcat
