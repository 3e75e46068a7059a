// Copyright 2026 The approachlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APPROACHLAB_LINALG_HPP_
#define APPROACHLAB_LINALG_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "approachlab/rational.hpp"

namespace approachlab {

// Dense vector of exact rationals. Every binary operation checks that the
// operand lengths agree and throws DimensionError otherwise.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t size) : entries_(size) {}
  RationalVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}

  static RationalVector unit(std::size_t size, std::size_t index);
  static RationalVector constant(std::size_t size, const Rational& value);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  Rational& operator[](std::size_t i) { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  void push_back(Rational value) { entries_.push_back(std::move(value)); }

  bool is_zero() const;
  Rational sum() const;
  // Concatenation; used for the constant-coordinate augmentation.
  RationalVector appended(const Rational& value) const;
  RationalVector head(std::size_t count) const;
  std::vector<double> to_doubles() const;
  // "(1, -2/3, 0)"
  std::string str() const;

  RationalVector& operator+=(const RationalVector& rhs);
  RationalVector& operator-=(const RationalVector& rhs);
  RationalVector& operator*=(const Rational& scale);
  RationalVector operator-() const;
  friend RationalVector operator+(RationalVector lhs, const RationalVector& rhs) { return lhs += rhs; }
  friend RationalVector operator-(RationalVector lhs, const RationalVector& rhs) { return lhs -= rhs; }
  friend RationalVector operator*(RationalVector lhs, const Rational& scale) { return lhs *= scale; }
  friend RationalVector operator*(const Rational& scale, RationalVector rhs) { return rhs *= scale; }

  friend bool operator==(const RationalVector&, const RationalVector&) = default;
  // Lexicographic; shorter vectors order first. Used only for lookups.
  friend std::strong_ordering operator<=>(const RationalVector& lhs, const RationalVector& rhs);

 private:
  std::vector<Rational> entries_;
};

// Exact inner product. Runs in 128-bit integer arithmetic over a common
// denominator while the operands allow it, which covers the dyadic plays and
// small-integer losses that dominate simulation workloads.
Rational dot(const RationalVector& a, const RationalVector& b);
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

// Row-major dense matrix of rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
  static RationalMatrix from_columns(const std::vector<RationalVector>& columns);
  static RationalMatrix diagonal(const RationalVector& diag);
  // a * b^T
  static RationalMatrix outer(const RationalVector& a, const RationalVector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Rational> row_span(std::size_t r) const {
    return std::span<const Rational>(entries_).subspan(r * cols_, cols_);
  }
  RationalVector row(std::size_t r) const;
  RationalVector col(std::size_t c) const;
  // Row-major flattening, the layout used for tensor products.
  RationalVector flatten() const;
  static RationalMatrix unflatten(const RationalVector& flat, std::size_t rows, std::size_t cols);

  RationalMatrix transpose() const;
  bool is_zero() const;
  std::string str() const;

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& scale);
  friend RationalMatrix operator+(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs += rhs; }
  friend RationalMatrix operator-(RationalMatrix lhs, const RationalMatrix& rhs) { return lhs -= rhs; }
  friend RationalMatrix operator*(RationalMatrix lhs, const Rational& scale) { return lhs *= scale; }
  friend RationalMatrix operator*(const Rational& scale, RationalMatrix rhs) { return rhs *= scale; }
  friend RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs);
  friend RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Exact determinant by rational Gaussian elimination. Throws DimensionError
// for non-square input.
Rational det_exact(const RationalMatrix& m);

// Throws PreconditionError when m is singular.
RationalMatrix inverse(const RationalMatrix& m);

// Basis of {x : m x = 0}, one vector per free column of the echelon form.
std::vector<RationalVector> right_kernel_basis(const RationalMatrix& m);
// Basis of {v : v^T m = 0}; empty iff m has full row rank.
std::vector<RationalVector> left_kernel_basis(const RationalMatrix& m);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

// Greedy maximal linearly independent subset, in input order.
std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors);

}  // namespace approachlab

#endif  // APPROACHLAB_LINALG_HPP_
