#pragma once

// Finite k-linear categories presented by a quiver with relations.
//
// Paths are stored in traversal order: {a, b} means "a then b" and is written
// b*a.  Hom spaces are spans of paths modulo the two-sided ideal generated by
// the relations.  Each hom basis consists of the surviving normal words, the
// least path (by length, then lexicographically on arrow indices) in each
// reduced class; the identity is always basis element 0 of Hom(x, x).

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gpcat/linalg.hpp"

namespace gpcat {

using Path = std::vector<std::size_t>;

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  friend bool operator==(const Quiver&, const Quiver&) = default;
};

struct RelationTerm {
  Scalar coefficient;
  Path path;
  friend bool operator==(const RelationTerm&, const RelationTerm&) = default;
};

struct Relation {
  std::vector<RelationTerm> terms;
  friend bool operator==(const Relation&, const Relation&) = default;
};

class Category;
using CategoryPtr = std::shared_ptr<const Category>;

class Category {
 public:
  /// Builds the quotient of the path category by the relation ideal.  Throws
  /// Error(validation) on malformed input and Error(possibly_infinite) when
  /// the arrow ideal is not shown nilpotent by paths of length length_cutoff.
  static CategoryPtr build(Quiver quiver, std::vector<Relation> relations, Field field, std::size_t length_cutoff);
  /// One object, hom space k.
  static CategoryPtr unit(Field field);

  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  const Field& field() const { return field_; }
  std::size_t length_cutoff() const { return length_cutoff_; }
  /// Paths of this length and longer vanish.
  std::size_t nilpotency_index() const { return nilpotency_; }

  std::size_t object_count() const { return quiver_.objects.size(); }
  std::size_t arrow_count() const { return quiver_.arrows.size(); }
  const std::string& object_name(std::size_t x) const { return quiver_.objects[x]; }
  const Arrow& arrow(std::size_t a) const { return quiver_.arrows[a]; }
  std::size_t object_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& name) const;
  bool is_unit() const { return object_count() == 1 && arrow_count() == 0; }

  std::size_t hom_dim(std::size_t x, std::size_t y) const { return basis_[x * object_count() + y].size(); }
  const std::vector<Path>& hom_basis(std::size_t x, std::size_t y) const { return basis_[x * object_count() + y]; }
  std::size_t total_dim() const;

  /// Coordinates in Hom(x, y) of the class of a path from x to y.
  Vector reduce(std::size_t x, std::size_t y, const Path& path) const;
  /// Coordinates of (basis j of Hom(y,z)) o (basis i of Hom(x,y)) in Hom(x,z).
  const Vector& compose(std::size_t x, std::size_t y, std::size_t z, std::size_t i, std::size_t j) const;
  /// h in Hom(y,z); matrix of u |-> h o u from Hom(x,y) to Hom(x,z).
  Matrix left_multiplication(std::size_t x, std::size_t y, std::size_t z, const Vector& h) const;
  /// h in Hom(x,y); matrix of u |-> u o h from Hom(y,z) to Hom(x,z).
  Matrix right_multiplication(std::size_t x, std::size_t y, std::size_t z, const Vector& h) const;
  Vector arrow_element(std::size_t a) const;
  Vector identity_element(std::size_t x) const;

  /// "b*a" for the path a-then-b, "e_x" for the identity at x.
  std::string path_label(std::size_t x, const Path& path) const;
  std::string basis_label(std::size_t x, std::size_t y, std::size_t i) const;
  Path parse_path(const std::string& text) const;

  /// Exhaustive associativity and unit check over all basis triples.
  bool check_associativity() const;
  /// Every relation reduces to zero.
  bool check_relations() const;

  /// Same quiver, relations, field and cutoff.
  bool structurally_equal(const Category& other) const;

 private:
  Category() = default;

  Quiver quiver_;
  std::vector<Relation> relations_;
  Field field_;
  std::size_t length_cutoff_ = 0;
  std::size_t nilpotency_ = 0;
  std::vector<std::vector<Path>> basis_;
  std::vector<std::map<Path, Vector>> normal_form_;
  std::vector<std::vector<Vector>> composition_;
};

/// Arrows and relation paths reversed.
CategoryPtr opposite(const Category& c);

/// Objects (c,d) numbered c * |C2| + d.  Arrows: (a,d) for arrows a of C1 and
/// objects d of C2 first (a-major), then (c,b) for objects c of C1 and arrows
/// b of C2 (c-major).  Relations: both relation sets and all mixed
/// commutativity squares.
CategoryPtr tensor_category(const Category& c1, const Category& c2);

}  // namespace gpcat
