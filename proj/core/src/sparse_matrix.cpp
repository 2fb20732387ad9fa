#include "braidhom/sparse_matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>

#include "braidhom/error.hpp"

namespace braidhom {

void normalize_column(SparseMatrix::Column& col, const Field& F) {
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    std::uint32_t r = col[i].first;
    Scalar acc = std::move(col[i].second);
    std::size_t k = i + 1;
    for (; k < col.size() && col[k].first == r; ++k) acc = F.add(acc, col[k].second);
    if (!Field::is_zero(acc)) col[out++] = {r, std::move(acc)};
    i = k;
  }
  col.resize(out);
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), field_(field), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n, Field field) {
  SparseMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    m.cols_[i].push_back({static_cast<std::uint32_t>(i), field.from_int(1)});
  }
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t j, Column entries) {
  for (const auto& [r, v] : entries) {
    if (r >= rows_) throw Error("row index out of range");
    if (!field_.contains(v)) throw FieldMismatch("entry " + v.get_str() + " not in " + field_.name());
  }
  normalize_column(entries, field_);
  cols_.at(j) = std::move(entries);
}

void SparseMatrix::add_entry(std::size_t i, std::size_t j, const Scalar& value) {
  Column c = cols_.at(j);
  c.push_back({static_cast<std::uint32_t>(i), value});
  set_column(j, std::move(c));
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const Column& c = cols_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i,
                             [](const Entry& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == i) return it->second;
  return Scalar(0);
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols(), rows_, field_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [r, v] : cols_[j]) t.cols_[r].push_back({static_cast<std::uint32_t>(j), v});
  }
  return t;
}

SparseMatrix::Column SparseMatrix::apply(const Column& x) const {
  Column out;
  for (const auto& [k, xv] : x) {
    for (const auto& [r, v] : cols_.at(k)) out.push_back({r, field_.mul(v, xv)});
  }
  normalize_column(out, field_);
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("product of matrices over different fields");
  if (cols() != rhs.rows()) throw Error("dimension mismatch in matrix product");
  SparseMatrix out(rows_, rhs.cols(), field_);
  for (std::size_t j = 0; j < rhs.cols(); ++j) out.cols_[j] = apply(rhs.cols_[j]);
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("sum of matrices over different fields");
  if (rows_ != rhs.rows_ || cols() != rhs.cols()) throw Error("dimension mismatch in matrix sum");
  SparseMatrix out(rows_, cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c = cols_[j];
    c.insert(c.end(), rhs.cols_[j].begin(), rhs.cols_[j].end());
    normalize_column(c, field_);
    out.cols_[j] = std::move(c);
  }
  return out;
}

SparseMatrix SparseMatrix::scaled(const Scalar& s) const {
  SparseMatrix out(rows_, cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c;
    for (const auto& [r, v] : cols_[j]) c.push_back({r, field_.mul(v, s)});
    normalize_column(c, field_);
    out.cols_[j] = std::move(c);
  }
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& rhs) const {
  return *this + rhs.scaled(field_.from_int(-1));
}

bool SparseMatrix::is_zero() const {
  return std::all_of(cols_.begin(), cols_.end(), [](const Column& c) { return c.empty(); });
}

SparseMatrix SparseMatrix::reduced(const Field& F) const {
  if (F == field_) return *this;
  if (!field_.is_rational()) {
    throw FieldMismatch("cannot reduce a matrix over " + field_.name() + " to " + F.name());
  }
  SparseMatrix out(rows_, cols(), F);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c;
    c.reserve(cols_[j].size());
    for (const auto& [r, v] : cols_[j]) {
      Scalar w = F.from_rational(v);
      if (!Field::is_zero(w)) c.push_back({r, std::move(w)});
    }
    out.cols_[j] = std::move(c);
  }
  return out;
}

SparseMatrix SparseMatrix::permuted(const std::vector<std::uint32_t>& rp,
                                    const std::vector<std::uint32_t>& cp) const {
  if (rp.size() != rows_ || cp.size() != cols()) throw Error("permutation size mismatch");
  SparseMatrix out(rows_, cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c;
    for (const auto& [r, v] : cols_[j]) c.push_back({rp[r], v});
    normalize_column(c, field_);
    out.cols_[cp[j]] = std::move(c);
  }
  return out;
}

SparseMatrix SparseMatrix::select_columns(const std::vector<std::uint32_t>& sel) const {
  SparseMatrix out(rows_, sel.size(), field_);
  for (std::size_t j = 0; j < sel.size(); ++j) out.cols_[j] = cols_.at(sel[j]);
  return out;
}

SparseMatrix SparseMatrix::select_rows(const std::vector<std::uint32_t>& sel) const {
  std::vector<std::int64_t> where(rows_, -1);
  for (std::size_t i = 0; i < sel.size(); ++i) where.at(sel[i]) = static_cast<std::int64_t>(i);
  SparseMatrix out(sel.size(), cols(), field_);
  for (std::size_t j = 0; j < cols(); ++j) {
    Column c;
    for (const auto& [r, v] : cols_[j]) {
      if (where[r] >= 0) c.push_back({static_cast<std::uint32_t>(where[r]), v});
    }
    normalize_column(c, field_);
    out.cols_[j] = std::move(c);
  }
  return out;
}

SparseMatrix SparseMatrix::hconcat(const SparseMatrix& rhs) const {
  if (field_ != rhs.field_) throw FieldMismatch("concatenating matrices over different fields");
  if (rows_ != rhs.rows_) throw Error("row count mismatch in hconcat");
  SparseMatrix out(rows_, cols() + rhs.cols(), field_);
  std::copy(cols_.begin(), cols_.end(), out.cols_.begin());
  std::copy(rhs.cols_.begin(), rhs.cols_.end(), out.cols_.begin() + cols());
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_;
}

void SparseMatrix::write_triplets(std::ostream& out) const {
  out << rows_ << ' ' << cols() << ' ' << nnz() << '\n';
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& [r, v] : cols_[j]) out << r << ' ' << j << ' ' << v.get_str() << '\n';
  }
}

SparseMatrix SparseMatrix::read_triplets(std::istream& in, Field field) {
  std::size_t rows = 0, cols = 0, nnz = 0;
  if (!(in >> rows >> cols >> nnz)) throw InvalidInput("bad triplet header");
  std::vector<Column> buf(cols);
  for (std::size_t k = 0; k < nnz; ++k) {
    std::size_t r = 0, c = 0;
    std::string v;
    if (!(in >> r >> c >> v)) throw InvalidInput("truncated triplet data");
    if (r >= rows || c >= cols) throw InvalidInput("triplet index out of range");
    mpq_class q(v);
    q.canonicalize();
    buf[c].push_back({static_cast<std::uint32_t>(r), field.from_rational(q)});
  }
  SparseMatrix m(rows, cols, field);
  for (std::size_t j = 0; j < cols; ++j) m.set_column(j, std::move(buf[j]));
  return m;
}

}  // namespace braidhom
