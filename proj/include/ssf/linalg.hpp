#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ssf/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<ssf::Rational> : GenericNumTraits<ssf::Rational> {
  using Real = ssf::Rational;
  using NonInteger = ssf::Rational;
  using Nested = ssf::Rational;
  using Literal = ssf::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 100,
    MulCost = 100
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<ssf::ModP> : GenericNumTraits<ssf::ModP> {
  using Real = ssf::ModP;
  using NonInteger = ssf::ModP;
  using Nested = ssf::ModP;
  using Literal = ssf::ModP;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 6
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace ssf {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
Matrix<S> zeros(const Field<S>& f, Index rows, Index cols) {
  return Matrix<S>::Constant(rows, cols, f.zero());
}

template <class S>
Vector<S> zero_vector(const Field<S>& f, Index n) {
  return Vector<S>::Constant(n, f.zero());
}

template <class S>
Matrix<S> identity(const Field<S>& f, Index n) {
  Matrix<S> m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

template <class S>
Vector<S> unit_vector(const Field<S>& f, Index n, Index i) {
  Vector<S> v = zero_vector(f, n);
  v(i) = f.one();
  return v;
}

/// Binds Eigen-made literals (ModP) to the field; a no-op over Q.
template <class S, class Derived>
Matrix<S> normalized(const Field<S>& f, const Eigen::MatrixBase<Derived>& m) {
  Matrix<S> out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = f.normalize(m(i, j));
  return out;
}

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) return false;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != S(i == j ? 1 : 0)) return false;
  return true;
}

template <class S>
struct Rref {
  Matrix<S> reduced;
  std::vector<Index> pivots;  // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row, so the
/// result depends only on the input.
template <class Derived>
Rref<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  Rref<S> out{m.eval(), {}};
  Matrix<S>& r = out.reduced;
  Index row = 0;
  for (Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Index pivot = -1;
    for (Index i = row; i < r.rows(); ++i)
      if (!is_zero(r(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) r.row(pivot).swap(r.row(row));
    const S inv = r(row, col).inverse();
    for (Index j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (Index i = 0; i < r.rows(); ++i) {
      if (i == row || is_zero(r(i, col))) continue;
      const S factor = r(i, col);
      for (Index j = col; j < r.cols(); ++j) r(i, j) -= factor * r(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <class Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rref(m).rank();
}

/// Basis of the null space, one vector per free column (that coordinate set
/// to 1), in increasing order of the free column.
template <class Derived>
std::vector<Vector<typename Derived::Scalar>> kernel(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  const Rref<S> r = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vector<S>> basis;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<S> v = Vector<S>::Constant(m.cols(), S(0));
    v(free) = S(1);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v(r.pivots[k]) = -r.reduced(static_cast<Index>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class S>
struct Solution {
  std::optional<Vector<S>> x;
  /// Row of the reduced augmented system reading 0 = 1 when inconsistent.
  std::optional<Index> inconsistent_row;

  explicit operator bool() const { return x.has_value(); }
};

/// Any solution of M x = v; free variables are set to zero.
template <class DerivedM, class DerivedV>
Solution<typename DerivedM::Scalar> solve_linear(const Eigen::MatrixBase<DerivedM>& m,
                                                 const Eigen::MatrixBase<DerivedV>& v) {
  using S = typename DerivedM::Scalar;
  if (v.rows() != m.rows() || v.cols() != 1) fail(ErrorCode::DimensionMismatch, "solve_linear: right-hand side size");
  Matrix<S> aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = v;
  const Rref<S> r = rref(aug);
  Solution<S> out;
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    if (r.pivots[k] == m.cols()) {
      out.inconsistent_row = static_cast<Index>(k);
      return out;
    }
  Vector<S> x = Vector<S>::Constant(m.cols(), S(0));
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x(r.pivots[k]) = r.reduced(static_cast<Index>(k), m.cols());
  out.x = std::move(x);
  return out;
}

template <class Derived>
std::optional<Matrix<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  const Index n = m.rows();
  Matrix<S> aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = Matrix<S>::Identity(n, n);
  const Rref<S> r = rref(aug);
  if (r.rank() < n || r.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<S>(r.reduced.rightCols(n));
}

/// k-th power by repeated squaring; M^0 is the identity.
template <class Derived>
Matrix<typename Derived::Scalar> mat_pow(const Eigen::MatrixBase<Derived>& m, std::uint64_t k) {
  using S = typename Derived::Scalar;
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "mat_pow: matrix is not square");
  Matrix<S> result = Matrix<S>::Identity(m.rows(), m.cols());
  Matrix<S> base = m;
  while (k > 0) {
    if (k & 1U) result = (result * base).eval();
    k >>= 1U;
    if (k > 0) base = (base * base).eval();
  }
  return result;
}

template <class S>
Matrix<S> columns(const std::vector<Vector<S>>& vs, Index rows) {
  Matrix<S> m(rows, static_cast<Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Index>(j)) = vs[j];
  return m;
}

/// Canonical basis of span(vs): the nonzero rows of the rref of the stacked
/// vectors. Two spans are equal iff their canonical bases are equal.
template <class S>
std::vector<Vector<S>> span_basis(const std::vector<Vector<S>>& vs, Index dim) {
  if (vs.empty()) return {};
  Matrix<S> rows(static_cast<Index>(vs.size()), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) rows.row(static_cast<Index>(i)) = vs[i].transpose();
  const Rref<S> r = rref(rows);
  std::vector<Vector<S>> out;
  for (Index i = 0; i < r.rank(); ++i) out.push_back(r.reduced.row(i).transpose());
  return out;
}

template <class S>
bool same_span(const std::vector<Vector<S>>& a, const std::vector<Vector<S>>& b, Index dim) {
  const auto ca = span_basis(a, dim);
  const auto cb = span_basis(b, dim);
  if (ca.size() != cb.size()) return false;
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (ca[i] != cb[i]) return false;
  return true;
}

template <class S>
bool in_span(const std::vector<Vector<S>>& basis, const Vector<S>& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  return static_cast<bool>(solve_linear(columns(basis, v.size()), v));
}

/// Lexicographic order on coordinates, for canonical sorting of vectors.
template <class S>
bool lex_less(const Vector<S>& a, const Vector<S>& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

}  // namespace ssf
