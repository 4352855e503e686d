#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <tuple>
#include <utility>
#include <vector>

#include "ladderlab/qring.hpp"

namespace ladderlab {

inline bool scalar_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool scalar_is_zero(const RatFun& x) { return x.is_zero(); }
inline bool scalar_is_zero(const Rational& x) { return x == 0; }

using Index = std::uint32_t;

template <class Scalar>
using SparseVec = std::vector<std::pair<Index, Scalar>>;

/// Sorts by index, merges duplicates and drops zeros.
template <class Scalar>
SparseVec<Scalar> canonicalize(SparseVec<Scalar> v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<Scalar> out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i) out.back().second += x;
    else {
      if (!out.empty() && scalar_is_zero(out.back().second)) out.pop_back();
      out.emplace_back(i, std::move(x));
    }
  }
  if (!out.empty() && scalar_is_zero(out.back().second)) out.pop_back();
  return out;
}

template <class Scalar>
Scalar sparse_get(const SparseVec<Scalar>& v, Index i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, Index k) { return e.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Scalar(0);
}

/// Column-compressed sparse matrix; columns are sorted sparse vectors without zeros.
template <class Scalar>
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix identity(Index n) {
    SparseMatrix m(n, n);
    for (Index i = 0; i < n; ++i) m.columns_[i].emplace_back(i, Scalar(1));
    return m;
  }

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  const SparseVec<Scalar>& column(Index j) const { return columns_[j]; }
  void set_column(Index j, SparseVec<Scalar> v) { columns_[j] = std::move(v); }

  Scalar entry(Index i, Index j) const { return sparse_get(columns_[j], i); }

  std::size_t nnz() const {
    std::size_t s = 0;
    for (const auto& c : columns_) s += c.size();
    return s;
  }

  bool is_zero() const { return nnz() == 0; }

  /// Product of this matrix with a sparse column vector.
  SparseVec<Scalar> apply(const SparseVec<Scalar>& x) const {
    std::vector<Scalar> acc;
    std::vector<char> used;
    std::vector<Index> touched;
    return apply_with(x, acc, used, touched);
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes disagree");
    SparseMatrix c(a.rows_, b.cols_);
    std::vector<Scalar> acc;
    std::vector<char> used;
    std::vector<Index> touched;
    for (Index j = 0; j < b.cols_; ++j) c.columns_[j] = a.apply_with(b.columns_[j], acc, used, touched);
    return c;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

  SparseMatrix scaled(const Scalar& s) const {
    SparseMatrix r(rows_, cols_);
    if (scalar_is_zero(s)) return r;
    for (Index j = 0; j < cols_; ++j) {
      auto& col = r.columns_[j];
      col.reserve(columns_[j].size());
      for (const auto& [i, x] : columns_[j]) col.emplace_back(i, x * s);
    }
    return r;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (Index j = 0; j < cols_; ++j)
      for (const auto& [i, x] : columns_[j]) t.columns_[i].emplace_back(j, x);
    return t;
  }

  Scalar trace() const {
    Scalar s(0);
    for (Index j = 0; j < std::min(rows_, cols_); ++j) s += entry(j, j);
    return s;
  }

  /// this (x) identity_d, with the identity factor varying fastest.
  SparseMatrix kron_identity(Index d) const {
    SparseMatrix r(rows_ * d, cols_ * d);
    for (Index j = 0; j < cols_; ++j)
      for (Index t = 0; t < d; ++t) {
        auto& col = r.columns_[j * d + t];
        col.reserve(columns_[j].size());
        for (const auto& [i, x] : columns_[j]) col.emplace_back(i * d + t, x);
      }
    return r;
  }

  template <class F>
  auto map(F f) const -> SparseMatrix<decltype(f(std::declval<Scalar>()))> {
    using T = decltype(f(std::declval<Scalar>()));
    SparseMatrix<T> r(rows_, cols_);
    for (Index j = 0; j < cols_; ++j) {
      SparseVec<T> col;
      for (const auto& [i, x] : columns_[j]) {
        T y = f(x);
        if (!scalar_is_zero(y)) col.emplace_back(i, std::move(y));
      }
      r.set_column(j, std::move(col));
    }
    return r;
  }

  /// Entries as (row, col, value), column-major.
  std::vector<std::tuple<Index, Index, Scalar>> triplets() const {
    std::vector<std::tuple<Index, Index, Scalar>> out;
    for (Index j = 0; j < cols_; ++j)
      for (const auto& [i, x] : columns_[j]) out.emplace_back(i, j, x);
    return out;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
  }

private:
  SparseVec<Scalar> apply_with(const SparseVec<Scalar>& x, std::vector<Scalar>& acc, std::vector<char>& used,
                               std::vector<Index>& touched) const {
    if (acc.size() != rows_) {
      acc.assign(rows_, Scalar(0));
      used.assign(rows_, 0);
    }
    touched.clear();
    for (const auto& [k, xk] : x) {
      for (const auto& [i, a] : columns_[k]) {
        if (!used[i]) {
          used[i] = 1;
          touched.push_back(i);
          acc[i] = a * xk;
        } else {
          acc[i] += a * xk;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    SparseVec<Scalar> out;
    out.reserve(touched.size());
    for (Index i : touched) {
      if (!scalar_is_zero(acc[i])) out.emplace_back(i, std::move(acc[i]));
      acc[i] = Scalar(0);
      used[i] = 0;
    }
    return out;
  }

  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes disagree");
    SparseMatrix c(a.rows_, a.cols_);
    for (Index j = 0; j < a.cols_; ++j) {
      const auto& x = a.columns_[j];
      const auto& y = b.columns_[j];
      auto& out = c.columns_[j];
      std::size_t p = 0, q = 0;
      while (p < x.size() || q < y.size()) {
        if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
          out.push_back(x[p++]);
        } else if (p == x.size() || y[q].first < x[p].first) {
          out.emplace_back(y[q].first, subtract ? Scalar(-y[q].second) : y[q].second);
          ++q;
        } else {
          Scalar s = subtract ? x[p].second - y[q].second : x[p].second + y[q].second;
          if (!scalar_is_zero(s)) out.emplace_back(x[p].first, std::move(s));
          ++p;
          ++q;
        }
      }
    }
    return c;
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<SparseVec<Scalar>> columns_;
};

}  // namespace ladderlab
