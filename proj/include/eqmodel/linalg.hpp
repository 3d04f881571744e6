#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

/// Exact rational linear algebra over sparse column storage.
///
/// Every matrix in the library is a `Matrix`: column-major, sparse, with two
/// structural shortcuts (all-zero and identity) so that the very large but
/// trivially structured maps that show up in the enriched categories never
/// get materialized.

namespace eqmodel {

using Rational = mpq_class;

/// "p/q", with the denominator omitted when it is 1.
std::string to_string(Rational const &q);
Rational parse_rational(std::string_view text);

class SparseVec
{
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVec() = default;
  static SparseVec unit(std::size_t index, Rational const &coeff = 1);

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  std::vector<Entry> const &entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  Rational get(std::size_t index) const;
  std::size_t leading_index() const { return entries_.front().first; }

  /// Appends an entry; indices must be strictly increasing and `value` nonzero.
  void push_back(std::size_t index, Rational value);

  /// this += coeff * other
  void add_scaled(SparseVec const &other, Rational const &coeff);
  void scale(Rational const &coeff);
  SparseVec scaled(Rational const &coeff) const;

  /// Keeps entries with index in [lo, lo+len) and shifts them down by lo.
  SparseVec slice(std::size_t lo, std::size_t len) const;
  SparseVec shifted(std::size_t offset) const;

  /// Builds from unsorted (index, value) pairs, summing duplicates.
  static SparseVec from_unsorted(std::vector<Entry> entries);
  static SparseVec from_dense(std::vector<Rational> const &values);

  friend SparseVec operator+(SparseVec a, SparseVec const &b);
  friend SparseVec operator-(SparseVec a, SparseVec const &b);
  friend bool operator==(SparseVec const &a, SparseVec const &b);

private:
  std::vector<Entry> entries_;
};

class Matrix
{
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::vector<SparseVec> columns);
  static Matrix from_rows(std::size_t cols, std::vector<SparseVec> const &rows);
  static Matrix from_dense(std::vector<std::vector<Rational>> const &rows);
  /// Matrix of the map sending basis vector j to basis vector perm[j].
  static Matrix permutation(std::vector<std::size_t> const &perm, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool is_identity() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  /// Column j (materialized for identities).
  SparseVec column(std::size_t j) const;
  Rational at(std::size_t i, std::size_t j) const;
  std::size_t nnz() const;

  SparseVec apply(SparseVec const &x) const;
  Matrix transpose() const;
  std::vector<SparseVec> row_vectors() const;
  std::vector<std::vector<Rational>> to_dense() const;

  Matrix block(std::size_t row0, std::size_t nrows, std::size_t col0,
               std::size_t ncols) const;

  friend Matrix operator*(Matrix const &a, Matrix const &b);
  friend Matrix operator+(Matrix const &a, Matrix const &b);
  friend Matrix operator-(Matrix const &a, Matrix const &b);
  Matrix scaled(Rational const &c) const;
  friend bool operator==(Matrix const &a, Matrix const &b);

private:
  void materialize();

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  bool identity_ = false;
  // Empty means the zero matrix; otherwise one entry per column.
  std::vector<SparseVec> columns_;
};

Matrix kron(Matrix const &a, Matrix const &b);
Matrix direct_sum(Matrix const &a, Matrix const &b);
Matrix hstack(Matrix const &a, Matrix const &b);
Matrix vstack(Matrix const &a, Matrix const &b);

/// Fully reduced row echelon form of a growing set of vectors in Q^dim.
/// Pivots are the leading (smallest) index of each basis vector; every basis
/// vector has coefficient 1 at its own pivot and 0 at every other pivot.
class Echelon
{
public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  /// Returns true iff v was not already in the span.
  bool insert(SparseVec v);
  /// v minus its component in the span along the pivot coordinates.
  SparseVec reduce(SparseVec const &v) const;
  bool contains(SparseVec const &v) const { return reduce(v).empty(); }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  bool is_pivot(std::size_t index) const;
  /// Pivot indices in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Basis vectors ordered by pivot.
  std::vector<SparseVec> basis() const;
  SparseVec const *basis_for_pivot(std::size_t pivot) const;

private:
  std::size_t dim_;
  std::vector<SparseVec> basis_;
  std::vector<std::size_t> pivot_of_;              // parallel to basis_
  std::vector<std::pair<std::size_t, std::size_t>> by_pivot_;  // sorted (pivot, slot)
};

std::size_t rank(Matrix const &a);

/// Columns form a basis of ker a; the basis vector for free column f has a 1
/// at f and 0 at every other free column.
Matrix kernel(Matrix const &a);

/// Reduced column-echelon basis of the column space, as columns.
Matrix image_basis(Matrix const &a);

/// Quotient of Q^rows by the column space of a matrix.
struct Cokernel
{
  Matrix quotient;  // dim x rows
  Matrix section;   // rows x dim, quotient * section = id
  std::size_t dim() const { return quotient.rows(); }
};
Cokernel cokernel(Matrix const &a);
Cokernel cokernel_of_span(std::size_t ambient, std::vector<SparseVec> const &relations);

/// Some x with a x = b, or nullopt when inconsistent.
std::optional<SparseVec> solve(Matrix const &a, SparseVec const &b);
/// Some X with a X = b, or nullopt when any column is inconsistent.
std::optional<Matrix> solve(Matrix const &a, Matrix const &b);
/// Exact inverse; throws std::domain_error when singular.
Matrix inverse(Matrix const &a);

}  // namespace eqmodel
