#include "gpcat/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gpcat {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::field_mismatch: return "field-mismatch";
    case ErrorKind::dimension: return "dimension";
    case ErrorKind::validation: return "validation";
    case ErrorKind::parse: return "parse";
    case ErrorKind::possibly_infinite: return "possibly-infinite-dimensional";
    case ErrorKind::inconsistent: return "inconsistent";
    case ErrorKind::inconclusive: return "inconclusive-at-cutoff";
    case ErrorKind::io: return "io";
    case ErrorKind::argument: return "argument";
  }
  return "unknown";
}

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void require_same(const Field& a, const Field& b) {
  if (!(a == b)) {
    throw Error(ErrorKind::field_mismatch, "operands over different fields: " + a.name() + " vs " + b.name());
  }
}

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p) || p > (1u << 31)) {
    throw Error(ErrorKind::argument, "F_p requires a prime p < 2^31, got " + std::to_string(p));
  }
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.value_ = value;
  } else {
    long r = value % static_cast<long>(modulus_);
    if (r < 0) r += modulus_;
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Field::parse(std::string_view literal) const {
  auto fail = [&]() -> Scalar {
    throw Error(ErrorKind::parse, "invalid " + name() + " literal '" + std::string(literal) + "'");
  };
  if (literal.empty()) return fail();
  std::size_t pos = 0;
  bool negative = false;
  if (literal[0] == '-') {
    negative = true;
    pos = 1;
  }
  std::size_t slash = literal.find('/');
  std::string_view num = literal.substr(pos, slash == std::string_view::npos ? std::string_view::npos : slash - pos);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : literal.substr(slash + 1);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!digits(num)) return fail();
  if (slash != std::string_view::npos && (!digits(den) || den[0] == '0')) return fail();

  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    mpz_class n(std::string(num), 10);
    mpz_class d = 1;
    if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
    if (negative) n = -n;
    s.value_ = mpq_class(n, d);
    s.value_.canonicalize();
    return s;
  }
  // Prime field: decimal residues, optionally negated or divided.
  auto reduce = [&](std::string_view text) {
    std::uint64_t r = 0;
    for (char c : text) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % modulus_;
    return static_cast<std::uint32_t>(r);
  };
  std::uint32_t r = reduce(num);
  if (slash != std::string_view::npos) {
    std::uint32_t d = reduce(den);
    if (d == 0) return fail();
    r = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r) * mod_inverse(d, modulus_) % modulus_);
  }
  if (negative && r != 0) r = modulus_ - r;
  s.residue_ = r;
  return s;
}

std::string Field::name() const { return modulus_ == 0 ? "Q" : "F" + std::to_string(modulus_); }

Field Field::from_name(std::string_view name) {
  if (name == "Q") return rational();
  if (name.size() > 1 && name[0] == 'F') {
    std::string digits(name.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        digits.size() <= 10) {
      return prime(static_cast<std::uint32_t>(std::stoull(digits)));
    }
  }
  throw Error(ErrorKind::parse, "unknown field '" + std::string(name) + "' (expected Q or F<p>)");
}

// ---------------------------------------------------------------- Scalar

Field Scalar::field() const { return modulus_ == 0 ? Field::rational() : Field::prime(modulus_); }

bool Scalar::is_zero() const { return modulus_ == 0 ? sgn(value_) == 0 : residue_ == 0; }

bool Scalar::is_one() const { return modulus_ == 0 ? value_ == 1 : residue_ == 1; }

void Scalar::check_field(const Scalar& o) const {
  if (modulus_ != o.modulus_) require_same(field(), o.field());
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_field(o);
  Scalar r;
  r.modulus_ = modulus_;
  if (modulus_ == 0) {
    r.value_ = value_ + o.value_;
  } else {
    r.residue_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(residue_) + o.residue_) % modulus_);
  }
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_field(o);
  Scalar r;
  r.modulus_ = modulus_;
  if (modulus_ == 0) {
    r.value_ = value_ - o.value_;
  } else {
    r.residue_ = static_cast<std::uint32_t>((static_cast<std::uint64_t>(residue_) + modulus_ - o.residue_) % modulus_);
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_field(o);
  Scalar r;
  r.modulus_ = modulus_;
  if (modulus_ == 0) {
    r.value_ = value_ * o.value_;
  } else {
    r.residue_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(residue_) * o.residue_ % modulus_);
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::argument, "division by zero");
  Scalar r;
  r.modulus_ = modulus_;
  if (modulus_ == 0) {
    r.value_ = 1 / value_;
  } else {
    r.residue_ = mod_inverse(residue_, modulus_);
  }
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_field(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.modulus_ = modulus_;
  if (modulus_ == 0) {
    r.value_ = -value_;
  } else {
    r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (modulus_ != o.modulus_) return false;
  return modulus_ == 0 ? value_ == o.value_ : residue_ == o.residue_;
}

std::string Scalar::to_string() const { return modulus_ == 0 ? value_.get_str() : std::to_string(residue_); }

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(std::size_t n, Field field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<long>>& rows) {
  std::size_t nr = rows.size();
  std::size_t nc = nr == 0 ? 0 : rows[0].size();
  Matrix m(nr, nc, field);
  for (std::size_t i = 0; i < nr; ++i) {
    if (rows[i].size() != nc) throw Error(ErrorKind::dimension, "ragged matrix rows");
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const Vector& v, Field field) {
  Matrix m(v.size(), 1, field);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw Error(ErrorKind::dimension, "column length mismatch");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = v[i];
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same(field_, o.field_);
  if (cols_ != o.rows_) {
    throw Error(ErrorKind::dimension, "matrix product " + std::to_string(rows_) + "x" + std::to_string(cols_) + " * " +
                                          std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::dimension, "matrix sum shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same(field_, o.field_);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::dimension, "matrix difference shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Vector Matrix::operator*(const Vector& v) const {
  if (v.size() != cols_) throw Error(ErrorKind::dimension, "matrix-vector length mismatch");
  Vector r(rows_, field_.zero());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (!a.is_zero() && !v[k].is_zero()) r[i] += a * v[k];
    }
  }
  return r;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::dimension, "block out of range");
  Matrix b(nr, nc, field_);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::dimension, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw Error(ErrorKind::dimension, "block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) += b(i, j);
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------- elimination

Echelon reduced_row_echelon(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      Scalar factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!m(row, j).is_zero()) m(i, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

RankKernel rank_and_kernel(const Matrix& m) {
  Echelon e = reduced_row_echelon(m);
  RankKernel rk;
  rk.rank = e.pivots.size();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::size_t nullity = m.cols() - rk.rank;
  rk.kernel = Matrix(m.cols(), nullity, m.field());
  std::size_t k = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    rk.kernel(j, k) = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) rk.kernel(e.pivots[r], k) = -e.reduced(r, j);
    ++k;
  }
  return rk;
}

Cokernel cokernel_projection(const Matrix& m) {
  RankKernel left = rank_and_kernel(transpose(m));
  Cokernel c;
  c.projection = transpose(left.kernel);
  c.dim = c.projection.rows();
  return c;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::dimension, "solve: right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1, m.field());
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  Echelon e = reduced_row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols(), m.field().zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (b.rows() != m.rows()) throw Error(ErrorKind::dimension, "solve: right-hand side rows mismatch");
  Matrix aug = hstack(m, b);
  Echelon e = reduced_row_echelon(std::move(aug));
  for (auto p : e.pivots) {
    if (p >= m.cols()) return std::nullopt;
  }
  Matrix x(m.cols(), b.cols(), m.field());
  for (std::size_t r = 0; r < e.pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, m.cols() + j);
  return x;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  require_same(a.field(), b.field());
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Matrix direct_sum(std::span<const Matrix> blocks, Field field) {
  std::size_t nr = 0, nc = 0;
  for (const auto& b : blocks) {
    require_same(field, b.field());
    nr += b.rows();
    nc += b.cols();
  }
  Matrix r(nr, nc, field);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    r.set_block(r0, c0, b);
    r0 += b.rows();
    c0 += b.cols();
  }
  return r;
}

Matrix kronecker_product(const Matrix& a, const Matrix& b) {
  require_same(a.field(), b.field());
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& s = a(i, j);
      if (s.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return r;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same(a.field(), b.field());
  if (a.rows() != b.rows()) throw Error(ErrorKind::dimension, "hstack row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same(a.field(), b.field());
  if (a.cols() != b.cols()) throw Error(ErrorKind::dimension, "vstack column mismatch");
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix right_inverse(const Matrix& p) {
  auto x = solve(p, Matrix::identity(p.rows(), p.field()));
  if (!x) throw Error(ErrorKind::dimension, "right_inverse: matrix is not of full row rank");
  return *x;
}

Matrix left_inverse(const Matrix& k) { return transpose(right_inverse(transpose(k))); }

// ---------------------------------------------------------------- subspaces

Subspace Subspace::span(const Matrix& spanning) {
  Echelon e = reduced_row_echelon(spanning);
  Subspace s;
  s.basis_ = Matrix(spanning.rows(), e.pivots.size(), spanning.field());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) s.basis_.set_column(k, spanning.column_vector(e.pivots[k]));
  s.left_inverse_ = left_inverse(s.basis_);
  return s;
}

Subspace Subspace::kernel_of(const Matrix& m) {
  Subspace s;
  s.basis_ = rank_and_kernel(m).kernel;
  s.left_inverse_ = left_inverse(s.basis_);
  return s;
}

bool Subspace::contains(const Matrix& vectors) const { return basis_ * coordinates(vectors) == vectors; }

Quotient Quotient::of(const Matrix& relations) {
  Quotient q;
  q.projection_ = cokernel_projection(relations).projection;
  q.section_ = right_inverse(q.projection_);
  return q;
}

Matrix Quotient::induced(const Matrix& map, const Quotient& target) const {
  return target.projection_ * map * section_;
}

std::string to_string(const Matrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace gpcat
