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

#include "approachlab/linalg.hpp"

#include <numeric>
#include <sstream>

#include "approachlab/error.hpp"

namespace approachlab {
namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": size " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// Accumulates sum of products over a shared 64-bit denominator; returns false
// when a term does not fit and has to take the generic path.
class FastAccumulator {
 public:
  bool add_product(const Rational::Small& x, const Rational::Small& y) {
    if (x.num == 0 || y.num == 0) return true;
    const __int128 pn = static_cast<__int128>(x.num) * y.num;
    const __int128 pd = static_cast<__int128>(x.den) * y.den;
    if (pd > INT64_MAX) return false;
    const auto d = static_cast<std::int64_t>(pd);
    __int128 scaled_term = pn;
    __int128 scaled_acc = num_;
    std::int64_t new_den = den_;
    if (d == den_) {
      // nothing to rescale
    } else if (den_ % d == 0) {
      if (__builtin_mul_overflow(pn, static_cast<__int128>(den_ / d), &scaled_term)) return false;
    } else if (d % den_ == 0) {
      if (__builtin_mul_overflow(num_, static_cast<__int128>(d / den_), &scaled_acc)) return false;
      new_den = d;
    } else {
      const std::int64_t g = std::gcd(den_, d);
      __int128 l = static_cast<__int128>(den_ / g) * d;
      if (l > INT64_MAX) return false;
      new_den = static_cast<std::int64_t>(l);
      if (__builtin_mul_overflow(num_, static_cast<__int128>(new_den / den_), &scaled_acc)) return false;
      if (__builtin_mul_overflow(pn, static_cast<__int128>(new_den / d), &scaled_term)) return false;
    }
    __int128 total;
    if (__builtin_add_overflow(scaled_acc, scaled_term, &total)) return false;
    num_ = total;
    den_ = new_den;
    return true;
  }

  Rational value() const { return Rational::from_i128(num_, den_); }

 private:
  __int128 num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace

RationalVector RationalVector::unit(std::size_t size, std::size_t index) {
  RationalVector v(size);
  v[index] = 1;
  return v;
}

RationalVector RationalVector::constant(std::size_t size, const Rational& value) {
  return RationalVector(std::vector<Rational>(size, value));
}

bool RationalVector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Rational RationalVector::sum() const {
  Rational s;
  for (const auto& x : entries_) s += x;
  return s;
}

RationalVector RationalVector::appended(const Rational& value) const {
  RationalVector out = *this;
  out.entries_.push_back(value);
  return out;
}

RationalVector RationalVector::head(std::size_t count) const {
  if (count > size()) throw DimensionError("head: count exceeds vector size");
  return RationalVector(std::vector<Rational>(entries_.begin(), entries_.begin() + static_cast<long>(count)));
}

std::vector<double> RationalVector::to_doubles() const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& x : entries_) out.push_back(x.to_double());
  return out;
}

std::string RationalVector::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += ", ";
    out += entries_[i].str();
  }
  return out + ")";
}

RationalVector& RationalVector::operator+=(const RationalVector& rhs) {
  require_same_size(size(), rhs.size(), "vector addition");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& rhs) {
  require_same_size(size(), rhs.size(), "vector subtraction");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

RationalVector RationalVector::operator-() const {
  RationalVector out = *this;
  for (auto& x : out.entries_) x = -x;
  return out;
}

std::strong_ordering operator<=>(const RationalVector& lhs, const RationalVector& rhs) {
  if (lhs.size() != rhs.size()) return lhs.size() <=> rhs.size();
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const auto c = lhs[i] <=> rhs[i];
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  require_same_size(a.size(), b.size(), "dot product");
  FastAccumulator fast;
  Rational slow;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto* x = a[i].small();
    const auto* y = b[i].small();
    if (x != nullptr && y != nullptr && fast.add_product(*x, *y)) continue;
    slow += a[i] * b[i];
  }
  return fast.value() + slow;
}

Rational dot(const RationalVector& a, const RationalVector& b) { return dot(a.entries(), b.entries()); }

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return RationalMatrix();
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_size(rows[r].size(), m.cols(), "matrix row");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RationalVector>& columns) {
  return from_rows(columns).transpose();
}

RationalMatrix RationalMatrix::diagonal(const RationalVector& diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RationalMatrix RationalMatrix::outer(const RationalVector& a, const RationalVector& b) {
  RationalMatrix m(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * b[c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  auto s = row_span(r);
  return RationalVector(std::vector<Rational>(s.begin(), s.end()));
}

RationalVector RationalMatrix::col(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::flatten() const { return RationalVector(entries_); }

RationalMatrix RationalMatrix::unflatten(const RationalVector& flat, std::size_t rows, std::size_t cols) {
  require_same_size(flat.size(), rows * cols, "unflatten");
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < flat.size(); ++i) m.entries_[i] = flat[i];
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string RationalMatrix::str() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ", ";
    out += row(r).str();
  }
  return out + "]";
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix addition shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scale) {
  for (auto& x : entries_) x *= scale;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& lhs, const RationalMatrix& rhs) {
  require_same_size(lhs.cols(), rhs.rows(), "matrix product");
  const RationalMatrix rt = rhs.transpose();
  RationalMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) = dot(lhs.row_span(r), rt.row_span(c));
  }
  return out;
}

RationalVector operator*(const RationalMatrix& lhs, const RationalVector& rhs) {
  require_same_size(lhs.cols(), rhs.size(), "matrix-vector product");
  RationalVector out(lhs.rows());
  for (std::size_t r = 0; r < lhs.rows(); ++r) out[r] = dot(lhs.row_span(r), rhs.entries());
  return out;
}

RowEchelon row_reduce(RationalMatrix m) {
  RowEchelon out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c).is_zero()) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(pivot_row, k));
    }
    const Rational inv = m(pivot_row, c).reciprocal();
    for (std::size_t k = c; k < m.cols(); ++k) m(pivot_row, k) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c).is_zero()) continue;
      const Rational factor = m(i, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(pivot_row, k).is_zero()) m(i, k) -= factor * m(pivot_row, k);
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_reduce(m).pivots.size(); }

Rational det_exact(const RationalMatrix& input) {
  if (!input.is_square()) throw DimensionError("det_exact: matrix is not square");
  RationalMatrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m(r, c).is_zero()) ++r;
    if (r == n) return Rational();
    if (r != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(r, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Rational inv = m(c, c).reciprocal();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      const Rational factor = m(i, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(i, k) -= factor * m(c, k);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) {
    throw PreconditionError("inverse: matrix is singular");
  }
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

std::vector<RationalVector> right_kernel_basis(const RationalMatrix& m) {
  const RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RationalVector> left_kernel_basis(const RationalMatrix& m) {
  return right_kernel_basis(m.transpose());
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
  require_same_size(m.rows(), b.size(), "solve");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const RowEchelon ech = row_reduce(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
  RationalVector x(m.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
  return x;
}

std::vector<std::size_t> independent_subset(const std::vector<RationalVector>& vectors) {
  // Incremental elimination: each kept vector is stored reduced against the
  // previous ones together with its leading column.
  std::vector<std::size_t> kept;
  std::vector<std::pair<std::size_t, RationalVector>> echelon;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    RationalVector v = vectors[i];
    for (const auto& [lead, row] : echelon) {
      if (v[lead].is_zero()) continue;
      const Rational factor = v[lead] / row[lead];
      v -= row * factor;
    }
    std::size_t lead = 0;
    while (lead < v.size() && v[lead].is_zero()) ++lead;
    if (lead == v.size()) continue;
    kept.push_back(i);
    echelon.emplace_back(lead, std::move(v));
  }
  return kept;
}

}  // namespace approachlab
