#pragma once

// Exact dense linear algebra over Q and prime fields F_p.
//
// Normal forms (all outputs are deterministic):
//  * rank_and_kernel runs Gauss-Jordan elimination choosing, for each column
//    left to right, the topmost usable row as pivot.  The kernel basis has one
//    vector per free column j: a 1 in position j, zeros in the other free
//    positions and minus the reduced row entries in the pivot positions.
//    Stacked as columns, the free rows form an identity block.
//  * cokernel_projection(m) is the transpose of the kernel basis of m^T, so its
//    rows are the normalized left annihilators of m.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gpcat/error.hpp"

namespace gpcat {

class Scalar;

/// Field descriptor: Q (modulus 0) or F_p.
class Field {
 public:
  Field() = default;
  static Field rational() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  /// Parses `-?[0-9]+(/[1-9][0-9]*)?` (rationals) or a decimal residue.
  Scalar parse(std::string_view literal) const;
  std::string name() const;
  /// Accepts "Q" or "F<p>".
  static Field from_name(std::string_view name);

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_ = 0;
};

class Scalar {
 public:
  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  friend class Field;
  void check_field(const Scalar& o) const;

  std::uint32_t modulus_ = 0;
  std::uint32_t residue_ = 0;
  mpq_class value_;
};

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field field);

  static Matrix identity(std::size_t n, Field field);
  static Matrix from_rows(Field field, const std::vector<std::vector<long>>& rows);
  static Matrix column(const Vector& v, Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column_vector(std::size_t c) const;
  Vector row_vector(std::size_t r) const;
  void set_column(std::size_t c, const Vector& v);
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix scaled(const Scalar& s) const;

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b);

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct RankKernel {
  std::size_t rank = 0;
  /// Columns span the kernel; cols = nullity.
  Matrix kernel;
};

struct Cokernel {
  std::size_t dim = 0;
  /// dim x rows(m), full row rank, projection * m == 0.
  Matrix projection;
};

/// Row echelon data for a matrix: reduced form and pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon reduced_row_echelon(Matrix m);
std::size_t rank(const Matrix& m);
RankKernel rank_and_kernel(const Matrix& m);
Cokernel cokernel_projection(const Matrix& m);
/// Particular solution with free variables zero, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Solves m * X = B column by column; nullopt if any column is inconsistent.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

Matrix transpose(const Matrix& m);
Matrix direct_sum(const Matrix& a, const Matrix& b);
Matrix direct_sum(std::span<const Matrix> blocks, Field field);
Matrix kronecker_product(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

/// Column basis of a subspace with a fixed left inverse (coordinates map).
class Subspace {
 public:
  Subspace() = default;
  /// `spanning` columns need not be independent; a basis is extracted
  /// greedily in column order.
  static Subspace span(const Matrix& spanning);
  static Subspace kernel_of(const Matrix& m);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }
  /// Coordinates of vectors known to lie in the subspace.
  Matrix coordinates(const Matrix& vectors) const { return left_inverse_ * vectors; }
  bool contains(const Matrix& vectors) const;

 private:
  Matrix basis_;
  Matrix left_inverse_;
};

/// Quotient V / U with projection and a fixed section of it.
class Quotient {
 public:
  Quotient() = default;
  /// Quotient of the ambient space of `relations` by their column span.
  static Quotient of(const Matrix& relations);

  const Matrix& projection() const { return projection_; }
  const Matrix& section() const { return section_; }
  std::size_t dim() const { return projection_.rows(); }
  std::size_t ambient() const { return projection_.cols(); }
  /// Matrix of the map V/U -> V'/U' induced by `map`: V -> V'.
  Matrix induced(const Matrix& map, const Quotient& target) const;

 private:
  Matrix projection_;
  Matrix section_;
};

Matrix right_inverse(const Matrix& full_row_rank);
Matrix left_inverse(const Matrix& full_col_rank);

std::string to_string(const Matrix& m);

}  // namespace gpcat
