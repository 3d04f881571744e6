#include "eqmodel/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqmodel {

std::string to_string(Rational const &q)
{
  return q.get_str();
}

Rational parse_rational(std::string_view text)
{
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// SparseVec -----------------------------------------------------------------

SparseVec SparseVec::unit(std::size_t index, Rational const &coeff)
{
  SparseVec v;
  if (coeff != 0)
    v.entries_.emplace_back(index, coeff);
  return v;
}

Rational SparseVec::get(std::size_t index) const
{
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](Entry const &e, std::size_t i) { return e.first < i; });
  if (it != entries_.end() && it->first == index)
    return it->second;
  return 0;
}

void SparseVec::push_back(std::size_t index, Rational value)
{
  if (value == 0)
    return;
  entries_.emplace_back(index, std::move(value));
}

void SparseVec::add_scaled(SparseVec const &other, Rational const &coeff)
{
  if (coeff == 0 || other.empty())
    return;

  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());

  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      merged.emplace_back(b->first, coeff * b->second);
      ++b;
    } else {
      Rational s = a->second + coeff * b->second;
      if (s != 0)
        merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVec::scale(Rational const &coeff)
{
  if (coeff == 0) {
    entries_.clear();
    return;
  }
  for (auto &e : entries_)
    e.second *= coeff;
}

SparseVec SparseVec::scaled(Rational const &coeff) const
{
  SparseVec v = *this;
  v.scale(coeff);
  return v;
}

SparseVec SparseVec::slice(std::size_t lo, std::size_t len) const
{
  SparseVec v;
  for (auto const &[i, c] : entries_)
    if (i >= lo && i < lo + len)
      v.entries_.emplace_back(i - lo, c);
  return v;
}

SparseVec SparseVec::shifted(std::size_t offset) const
{
  SparseVec v = *this;
  for (auto &e : v.entries_)
    e.first += offset;
  return v;
}

SparseVec SparseVec::from_unsorted(std::vector<Entry> entries)
{
  std::sort(entries.begin(), entries.end(),
            [](Entry const &x, Entry const &y) { return x.first < y.first; });
  SparseVec v;
  for (auto &e : entries) {
    if (!v.entries_.empty() && v.entries_.back().first == e.first)
      v.entries_.back().second += e.second;
    else
      v.entries_.push_back(std::move(e));
  }
  std::erase_if(v.entries_, [](Entry const &e) { return e.second == 0; });
  return v;
}

SparseVec SparseVec::from_dense(std::vector<Rational> const &values)
{
  SparseVec v;
  for (std::size_t i = 0; i < values.size(); ++i)
    v.push_back(i, values[i]);
  return v;
}

SparseVec operator+(SparseVec a, SparseVec const &b)
{
  a.add_scaled(b, 1);
  return a;
}

SparseVec operator-(SparseVec a, SparseVec const &b)
{
  a.add_scaled(b, -1);
  return a;
}

bool operator==(SparseVec const &a, SparseVec const &b)
{
  return a.entries_ == b.entries_;
}

// Matrix --------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

Matrix Matrix::identity(std::size_t n)
{
  Matrix m(n, n);
  m.identity_ = n > 0;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::vector<SparseVec> columns)
{
  Matrix m(rows, columns.size());
  for (auto const &c : columns)
    if (!c.empty() && c.entries().back().first >= rows)
      throw std::out_of_range("column entry exceeds row count");
  bool any = std::any_of(columns.begin(), columns.end(),
                         [](SparseVec const &c) { return !c.empty(); });
  if (any)
    m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, std::vector<SparseVec> const &rows)
{
  std::vector<std::vector<SparseVec::Entry>> cols_entries(cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto const &[j, c] : rows[i]) {
      if (j >= cols)
        throw std::out_of_range("row entry exceeds column count");
      cols_entries[j].emplace_back(i, c);
    }
  std::vector<SparseVec> columns(cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (auto &[i, c] : cols_entries[j])
      columns[j].push_back(i, std::move(c));
  return from_columns(rows.size(), std::move(columns));
}

Matrix Matrix::from_dense(std::vector<std::vector<Rational>> const &rows)
{
  std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  std::vector<SparseVec> r;
  r.reserve(rows.size());
  for (auto const &row : rows) {
    if (row.size() != ncols)
      throw std::invalid_argument("ragged dense matrix");
    r.push_back(SparseVec::from_dense(row));
  }
  return from_rows(ncols, r);
}

Matrix Matrix::permutation(std::vector<std::size_t> const &perm, std::size_t rows)
{
  std::vector<SparseVec> columns;
  columns.reserve(perm.size());
  for (auto p : perm)
    columns.push_back(SparseVec::unit(p));
  return from_columns(rows, std::move(columns));
}

bool Matrix::is_identity() const
{
  if (identity_ || (rows_ == 0 && cols_ == 0))
    return true;
  if (rows_ != cols_ || columns_.empty())
    return false;
  for (std::size_t j = 0; j < cols_; ++j) {
    auto const &c = columns_[j];
    if (c.nnz() != 1 || c.leading_index() != j || c.entries().front().second != 1)
      return false;
  }
  return true;
}

bool Matrix::is_zero() const
{
  if (identity_)
    return false;
  return std::all_of(columns_.begin(), columns_.end(),
                     [](SparseVec const &c) { return c.empty(); });
}

SparseVec Matrix::column(std::size_t j) const
{
  if (j >= cols_)
    throw std::out_of_range("column index");
  if (identity_)
    return SparseVec::unit(j);
  if (columns_.empty())
    return {};
  return columns_[j];
}

Rational Matrix::at(std::size_t i, std::size_t j) const
{
  if (i >= rows_ || j >= cols_)
    throw std::out_of_range("matrix index");
  if (identity_)
    return i == j ? 1 : 0;
  if (columns_.empty())
    return 0;
  return columns_[j].get(i);
}

std::size_t Matrix::nnz() const
{
  if (identity_)
    return rows_;
  std::size_t n = 0;
  for (auto const &c : columns_)
    n += c.nnz();
  return n;
}

SparseVec Matrix::apply(SparseVec const &x) const
{
  if (identity_)
    return x;
  if (columns_.empty() || x.empty())
    return {};
  std::vector<SparseVec::Entry> acc;
  for (auto const &[j, c] : x) {
    if (j >= cols_)
      throw std::out_of_range("vector exceeds matrix columns");
    for (auto const &[i, a] : columns_[j])
      acc.emplace_back(i, a * c);
  }
  return SparseVec::from_unsorted(std::move(acc));
}

Matrix Matrix::transpose() const
{
  if (identity_)
    return *this;
  if (columns_.empty())
    return Matrix(cols_, rows_);
  return from_rows(rows_, columns_);
}

std::vector<SparseVec> Matrix::row_vectors() const
{
  Matrix t = transpose();
  std::vector<SparseVec> rows(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    rows[i] = t.column(i);
  return rows;
}

std::vector<std::vector<Rational>> Matrix::to_dense() const
{
  std::vector<std::vector<Rational>> d(rows_, std::vector<Rational>(cols_));
  for (std::size_t j = 0; j < cols_; ++j)
    for (auto const &[i, c] : column(j))
      d[i][j] = c;
  return d;
}

Matrix Matrix::block(std::size_t row0, std::size_t nrows, std::size_t col0,
                     std::size_t ncols) const
{
  if (row0 + nrows > rows_ || col0 + ncols > cols_)
    throw std::out_of_range("matrix block");
  if (identity_ && row0 == col0 && nrows == ncols)
    return identity(nrows);
  std::vector<SparseVec> cols;
  cols.reserve(ncols);
  for (std::size_t j = 0; j < ncols; ++j)
    cols.push_back(column(col0 + j).slice(row0, nrows));
  return from_columns(nrows, std::move(cols));
}

void Matrix::materialize()
{
  if (identity_) {
    columns_.resize(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      columns_[j] = SparseVec::unit(j);
    identity_ = false;
  } else if (columns_.empty()) {
    columns_.resize(cols_);
  }
}

Matrix operator*(Matrix const &a, Matrix const &b)
{
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product dimension mismatch");
  if (a.identity_)
    return b;
  if (b.identity_)
    return a;
  if (a.columns_.empty() || b.columns_.empty())
    return Matrix(a.rows_, b.cols_);
  std::vector<SparseVec> cols(b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j)
    cols[j] = a.apply(b.columns_[j]);
  return Matrix::from_columns(a.rows_, std::move(cols));
}

Matrix operator+(Matrix const &a, Matrix const &b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum dimension mismatch");
  if (b.is_zero())
    return a;
  if (a.is_zero())
    return b;
  std::vector<SparseVec> cols(a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j)
    cols[j] = a.column(j) + b.column(j);
  return Matrix::from_columns(a.rows_, std::move(cols));
}

Matrix operator-(Matrix const &a, Matrix const &b)
{
  return a + b.scaled(-1);
}

Matrix Matrix::scaled(Rational const &c) const
{
  if (c == 1)
    return *this;
  Matrix m = *this;
  if (c == 0)
    return Matrix(rows_, cols_);
  if (m.is_zero())
    return m;
  m.materialize();
  for (auto &col : m.columns_)
    col.scale(c);
  return m;
}

bool operator==(Matrix const &a, Matrix const &b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    return false;
  if (a.identity_ && b.identity_)
    return true;
  if (a.is_zero() && b.is_zero())
    return true;
  for (std::size_t j = 0; j < a.cols_; ++j)
    if (!(a.column(j) == b.column(j)))
      return false;
  return true;
}

Matrix kron(Matrix const &a, Matrix const &b)
{
  std::size_t rows = a.rows() * b.rows();
  std::size_t cols = a.cols() * b.cols();
  if (a.is_identity() && b.is_identity() && a.rows() * b.rows() > 0)
    return Matrix::identity(rows);
  if (a.is_zero() || b.is_zero())
    return Matrix(rows, cols);
  std::vector<SparseVec> out(cols);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    SparseVec acol = a.column(j);
    for (std::size_t l = 0; l < b.cols(); ++l) {
      SparseVec bcol = b.column(l);
      SparseVec col;
      for (auto const &[i, x] : acol)
        for (auto const &[k, y] : bcol)
          col.push_back(i * b.rows() + k, x * y);
      out[j * b.cols() + l] = std::move(col);
    }
  }
  return Matrix::from_columns(rows, std::move(out));
}

Matrix direct_sum(Matrix const &a, Matrix const &b)
{
  if (a.is_identity() && b.is_identity() && a.is_square() && b.is_square())
    return Matrix::identity(a.rows() + b.rows());
  std::vector<SparseVec> cols;
  cols.reserve(a.cols() + b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    cols.push_back(a.column(j));
  for (std::size_t j = 0; j < b.cols(); ++j)
    cols.push_back(b.column(j).shifted(a.rows()));
  return Matrix::from_columns(a.rows() + b.rows(), std::move(cols));
}

Matrix hstack(Matrix const &a, Matrix const &b)
{
  if (a.rows() != b.rows())
    throw std::invalid_argument("hstack row mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(a.cols() + b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    cols.push_back(a.column(j));
  for (std::size_t j = 0; j < b.cols(); ++j)
    cols.push_back(b.column(j));
  return Matrix::from_columns(a.rows(), std::move(cols));
}

Matrix vstack(Matrix const &a, Matrix const &b)
{
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack column mismatch");
  std::vector<SparseVec> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    cols.push_back(a.column(j) + b.column(j).shifted(a.rows()));
  return Matrix::from_columns(a.rows() + b.rows(), std::move(cols));
}

// Echelon -------------------------------------------------------------------

SparseVec Echelon::reduce(SparseVec const &v) const
{
  SparseVec r = v;
  for (auto const &[i, c] : v) {
    if (auto const *b = basis_for_pivot(i))
      r.add_scaled(*b, -c);
  }
  return r;
}

bool Echelon::insert(SparseVec v)
{
  v = reduce(v);
  if (v.empty())
    return false;
  if (v.entries().back().first >= dim_)
    throw std::out_of_range("echelon vector exceeds dimension");

  std::size_t p = v.leading_index();
  Rational lead = v.entries().front().second;
  v.scale(1 / lead);

  for (auto &b : basis_) {
    Rational c = b.get(p);
    if (c != 0)
      b.add_scaled(v, -c);
  }

  auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(),
                             std::make_pair(p, std::size_t{0}));
  by_pivot_.insert(it, {p, basis_.size()});
  pivot_of_.push_back(p);
  basis_.push_back(std::move(v));
  return true;
}

bool Echelon::is_pivot(std::size_t index) const
{
  return basis_for_pivot(index) != nullptr;
}

SparseVec const *Echelon::basis_for_pivot(std::size_t pivot) const
{
  auto it = std::lower_bound(by_pivot_.begin(), by_pivot_.end(),
                             std::make_pair(pivot, std::size_t{0}));
  if (it != by_pivot_.end() && it->first == pivot)
    return &basis_[it->second];
  return nullptr;
}

std::vector<std::size_t> Echelon::pivots() const
{
  std::vector<std::size_t> p;
  p.reserve(by_pivot_.size());
  for (auto const &[pivot, slot] : by_pivot_)
    p.push_back(pivot);
  return p;
}

std::vector<SparseVec> Echelon::basis() const
{
  std::vector<SparseVec> b;
  b.reserve(by_pivot_.size());
  for (auto const &[pivot, slot] : by_pivot_)
    b.push_back(basis_[slot]);
  return b;
}

// Derived operations --------------------------------------------------------

std::size_t rank(Matrix const &a)
{
  if (a.is_zero())
    return 0;
  if (a.is_identity())
    return a.rows();
  Echelon e(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    e.insert(a.column(j));
  return e.rank();
}

Matrix kernel(Matrix const &a)
{
  if (a.is_zero())
    return Matrix::identity(a.cols());
  if (a.is_identity())
    return Matrix(a.cols(), 0);

  Echelon e(a.cols());
  for (auto const &row : a.row_vectors())
    e.insert(row);

  std::vector<std::vector<SparseVec::Entry>> free_entries(a.cols());
  std::vector<bool> pivot(a.cols(), false);
  for (auto p : e.pivots())
    pivot[p] = true;
  for (auto const &b : e.basis()) {
    std::size_t p = b.leading_index();
    for (auto const &[f, c] : b)
      if (f != p)
        free_entries[f].emplace_back(p, -c);
  }

  std::vector<SparseVec> cols;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (pivot[f])
      continue;
    auto entries = std::move(free_entries[f]);
    entries.emplace_back(f, 1);
    cols.push_back(SparseVec::from_unsorted(std::move(entries)));
  }
  return Matrix::from_columns(a.cols(), std::move(cols));
}

Matrix image_basis(Matrix const &a)
{
  if (a.is_identity())
    return a;
  if (a.is_zero())
    return Matrix(a.rows(), 0);
  Echelon e(a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j)
    e.insert(a.column(j));
  return Matrix::from_columns(a.rows(), e.basis());
}

Cokernel cokernel_of_span(std::size_t ambient, std::vector<SparseVec> const &relations)
{
  Echelon e(ambient);
  for (auto const &r : relations)
    e.insert(r);
  if (e.rank() == 0)
    return {Matrix::identity(ambient), Matrix::identity(ambient)};

  std::vector<std::size_t> position(ambient, 0);
  std::vector<std::size_t> free;
  for (std::size_t r = 0; r < ambient; ++r)
    if (!e.is_pivot(r)) {
      position[r] = free.size();
      free.push_back(r);
    }

  std::vector<SparseVec> qcols(ambient);
  for (std::size_t r : free)
    qcols[r] = SparseVec::unit(position[r]);
  for (auto const &b : e.basis()) {
    std::size_t p = b.leading_index();
    SparseVec col;
    for (auto const &[i, c] : b)
      if (i != p)
        col.push_back(position[i], -c);
    qcols[p] = std::move(col);
  }

  std::vector<SparseVec> scols;
  scols.reserve(free.size());
  for (std::size_t r : free)
    scols.push_back(SparseVec::unit(r));

  return {Matrix::from_columns(free.size(), std::move(qcols)),
          Matrix::from_columns(ambient, std::move(scols))};
}

Cokernel cokernel(Matrix const &a)
{
  if (a.is_zero())
    return {Matrix::identity(a.rows()), Matrix::identity(a.rows())};
  std::vector<SparseVec> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    cols.push_back(a.column(j));
  return cokernel_of_span(a.rows(), cols);
}

std::optional<Matrix> solve(Matrix const &a, Matrix const &b)
{
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve dimension mismatch");
  if (a.is_identity())
    return b;
  if (b.is_zero())
    return Matrix(a.cols(), b.cols());

  std::size_t n = a.cols();
  auto arows = a.row_vectors();
  auto brows = b.row_vectors();
  Echelon e(n + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    SparseVec row = arows[i];
    row.add_scaled(brows[i].shifted(n), 1);
    e.insert(std::move(row));
  }

  std::vector<std::vector<SparseVec::Entry>> xcols(b.cols());
  for (auto const &basis : e.basis()) {
    std::size_t p = basis.leading_index();
    if (p >= n)
      return std::nullopt;
    for (auto const &[i, c] : basis)
      if (i >= n)
        xcols[i - n].emplace_back(p, c);
  }
  std::vector<SparseVec> cols;
  cols.reserve(b.cols());
  for (auto &entries : xcols)
    cols.push_back(SparseVec::from_unsorted(std::move(entries)));
  return Matrix::from_columns(n, std::move(cols));
}

std::optional<SparseVec> solve(Matrix const &a, SparseVec const &b)
{
  auto x = solve(a, Matrix::from_columns(a.rows(), {b}));
  if (!x)
    return std::nullopt;
  return x->column(0);
}

Matrix inverse(Matrix const &a)
{
  if (!a.is_square())
    throw std::domain_error("inverse of non-square matrix");
  if (a.is_identity())
    return a;
  auto x = solve(a, Matrix::identity(a.rows()));
  if (!x)
    throw std::domain_error("singular matrix");
  return *x;
}

}  // namespace eqmodel
