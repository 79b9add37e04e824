#pragma once

#include <optional>
#include <vector>

#include "posetrep/rational.hpp"

namespace posetrep {

/// Dense matrix over exact rationals, row-major. Small sizes only (the whole
/// library operates at ambient dimension <= 8).
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0), cols_(0) {}
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<RatVec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix operator+(const RationalMatrix& rhs) const;
  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const Rat& s) const;
  bool operator==(const RationalMatrix& rhs) const = default;

  RatVec column(std::size_t c) const;
  RatVec apply(const RatVec& v) const;  // matrix * vector
  Rat trace() const;
  bool is_zero() const;

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  /// Basis of the right kernel {x : Ax = 0}, one vector per free column,
  /// in the canonical RREF-derived form.
  std::vector<RatVec> kernel() const;

  /// Exact inverse; nullopt when singular.
  std::optional<RationalMatrix> inverse() const;

  /// Lexicographic order on (rows, cols, entries); used for canonical sets.
  static int compare(const RationalMatrix& a, const RationalMatrix& b);

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> entries_;
};

struct LinearSolution {
  RatVec particular;
  std::vector<RatVec> kernel;
};

/// Particular solution of Ax = b plus a kernel basis; nullopt if inconsistent.
std::optional<LinearSolution> solve_linear(const RationalMatrix& A, const RatVec& b);

/// A subspace of Q^n held by its canonical basis: the columns are the unique
/// reduced column echelon basis, so two subspaces are equal iff their basis
/// matrices are identical.
class Subspace {
 public:
  /// Zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim);
  /// Span of the given generator columns (need not be independent).
  Subspace(std::size_t ambient_dim, const std::vector<RatVec>& generators);

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.cols(); }
  const RationalMatrix& basis() const { return basis_; }

  bool operator==(const Subspace& rhs) const = default;

  std::string str() const;

 private:
  std::size_t ambient_dim_;
  RationalMatrix basis_;  // ambient_dim x dim, canonical
};

Subspace span(std::size_t ambient_dim, const std::vector<RatVec>& generators);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Subspace& v);  // u >= v
bool contains_vector(const Subspace& u, const RatVec& v);

/// Orthogonal complement with respect to the standard bilinear form.
Subspace orthogonal_complement(const Subspace& u);

/// Strict total order for deterministic subspace sets.
int compare(const Subspace& a, const Subspace& b);

RatVec unit_vector(std::size_t n, std::size_t i);

}  // namespace posetrep
