#include "posetrep/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace posetrep {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<RatVec>& cols) {
  for (const auto& c : cols)
    if (c.size() != rows) throw DimensionMismatch("generator length != ambient dimension");
  RationalMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape");
  RationalMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum shape");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] + rhs.entries_[i];
  return s;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix diff shape");
  RationalMatrix s(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) s.entries_[i] = entries_[i] - rhs.entries_[i];
  return s;
}

RationalMatrix RationalMatrix::operator*(const Rat& s) const {
  RationalMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] = entries_[i] * s;
  return m;
}

RatVec RationalMatrix::column(std::size_t c) const {
  RatVec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

RatVec RationalMatrix::apply(const RatVec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  RatVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

Rat RationalMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat& r) { return r == 0; });
}

std::vector<std::size_t> RationalMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && at(sel, col) == 0) ++sel;
    if (sel == rows_) continue;
    if (sel != row)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
    Rat inv = Rat(1) / at(row, col);
    for (std::size_t j = col; j < cols_; ++j) at(row, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == row || at(i, col) == 0) continue;
      Rat f = at(i, col);
      for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix copy = *this;
  return copy.rref().size();
}

std::vector<RatVec> RationalMatrix::kernel() const {
  RationalMatrix r = *this;
  std::vector<std::size_t> pivots = r.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols_, Rat(0));
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  RationalMatrix aug(rows_, 2 * cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_ + i) = 1;
  }
  auto pivots = aug.rref();
  if (pivots.size() != rows_ || (rows_ > 0 && pivots.back() >= cols_)) return std::nullopt;
  RationalMatrix inv(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

int RationalMatrix::compare(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_ ? -1 : 1;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_ ? -1 : 1;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i] != b.entries_[i]) return a.entries_[i] < b.entries_[i] ? -1 : 1;
  }
  return 0;
}

std::string RationalMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "\n" : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << to_string(at(i, j));
  }
  return os.str();
}

std::optional<LinearSolution> solve_linear(const RationalMatrix& A, const RatVec& b) {
  if (b.size() != A.rows()) throw DimensionMismatch("rhs length != row count");
  RationalMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  auto pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == A.cols()) return std::nullopt;  // 0 = 1 row
  LinearSolution sol;
  sol.particular.assign(A.cols(), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) sol.particular[pivots[k]] = aug.at(k, A.cols());
  sol.kernel = A.kernel();
  return sol;
}

namespace {

/// Canonical basis: transpose of the RREF of the generators written as rows.
RationalMatrix canonical_basis(std::size_t ambient, const std::vector<RatVec>& generators) {
  RationalMatrix rows(generators.size(), ambient);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].size() != ambient)
      throw DimensionMismatch("generator length != ambient dimension");
    for (std::size_t j = 0; j < ambient; ++j) rows.at(i, j) = generators[i][j];
  }
  auto pivots = rows.rref();
  RationalMatrix basis(ambient, pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t j = 0; j < ambient; ++j) basis.at(j, k) = rows.at(k, j);
  return basis;
}

}  // namespace

Subspace::Subspace(std::size_t ambient_dim)
    : ambient_dim_(ambient_dim), basis_(ambient_dim, 0) {}

Subspace::Subspace(std::size_t ambient_dim, const std::vector<RatVec>& generators)
    : ambient_dim_(ambient_dim), basis_(canonical_basis(ambient_dim, generators)) {}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) gens.push_back(unit_vector(ambient_dim, i));
  return Subspace(ambient_dim, gens);
}

std::string Subspace::str() const {
  if (dim() == 0) return "0";
  std::ostringstream os;
  os << "<";
  for (std::size_t c = 0; c < dim(); ++c) {
    if (c) os << ", ";
    bool first = true;
    for (std::size_t i = 0; i < ambient_dim_; ++i) {
      const Rat& x = basis_.at(i, c);
      if (x == 0) continue;
      if (!first) os << (x > 0 ? "+" : "");
      if (x == -1)
        os << "-";
      else if (x != 1)
        os << to_string(x) << " ";
      os << "e" << (i + 1);
      first = false;
    }
    if (first) os << "0";
  }
  os << ">";
  return os.str();
}

Subspace span(std::size_t ambient_dim, const std::vector<RatVec>& generators) {
  return Subspace(ambient_dim, generators);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("sum: ambient dims differ");
  std::vector<RatVec> gens;
  for (std::size_t c = 0; c < u.dim(); ++c) gens.push_back(u.basis().column(c));
  for (std::size_t c = 0; c < v.dim(); ++c) gens.push_back(v.basis().column(c));
  return Subspace(u.ambient_dim(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch("intersect: ambient dims differ");
  std::size_t n = u.ambient_dim(), p = u.dim(), q = v.dim();
  if (p == 0 || q == 0) return Subspace(n);
  // kernel of [U | -V]; the U-part of each kernel vector spans the intersection
  RationalMatrix m(n, p + q);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < p; ++j) m.at(i, j) = u.basis().at(i, j);
    for (std::size_t j = 0; j < q; ++j) m.at(i, p + j) = -v.basis().at(i, j);
  }
  std::vector<RatVec> gens;
  for (const RatVec& k : m.kernel()) {
    RatVec w(n, Rat(0));
    for (std::size_t j = 0; j < p; ++j)
      if (k[j] != 0)
        for (std::size_t i = 0; i < n; ++i) w[i] += k[j] * u.basis().at(i, j);
    gens.push_back(std::move(w));
  }
  return Subspace(n, gens);
}

bool contains(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw DimensionMismatch("contains: ambient dims differ");
  if (v.dim() == 0) return true;
  Subspace s = sum(u, v);
  return s.dim() == u.dim();
}

bool contains_vector(const Subspace& u, const RatVec& v) {
  if (v.size() != u.ambient_dim()) throw DimensionMismatch("contains_vector: length");
  std::vector<RatVec> gens;
  for (std::size_t c = 0; c < u.dim(); ++c) gens.push_back(u.basis().column(c));
  gens.push_back(v);
  return Subspace(u.ambient_dim(), gens).dim() == u.dim();
}

Subspace orthogonal_complement(const Subspace& u) {
  // rows of basis^T annihilate the complement; its kernel is the complement
  RationalMatrix bt = u.basis().transpose();
  if (u.dim() == 0) return Subspace::full(u.ambient_dim());
  return Subspace(u.ambient_dim(), bt.kernel());
}

int compare(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return a.ambient_dim() < b.ambient_dim() ? -1 : 1;
  return RationalMatrix::compare(a.basis(), b.basis());
}

RatVec unit_vector(std::size_t n, std::size_t i) {
  RatVec v(n, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace posetrep
