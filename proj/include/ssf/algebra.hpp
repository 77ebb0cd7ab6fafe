#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ssf/linalg.hpp"
#include "ssf/quadratic_space.hpp"

namespace ssf {

enum class AlgebraKind { SplitSpin, ExceptionalCover, Matsuo3C, Derived };

inline std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::SplitSpin: return "split_spin";
    case AlgebraKind::ExceptionalCover: return "cover";
    case AlgebraKind::Matsuo3C: return "matsuo_3c";
    case AlgebraKind::Derived: return "derived";
  }
  return "derived";
}

template <class S>
struct AlgebraMeta {
  AlgebraKind kind = AlgebraKind::Derived;
  std::optional<S> alpha;
  std::optional<QuadraticSpace<S>> space;
  /// alpha in {0, 1, 1/2}: the algebra is a Jordan algebra.
  bool jordan_special = false;
  std::vector<std::string> warnings;
};

/// Finite-dimensional commutative algebra given by structure constants.
///
/// left_mult(i) is the matrix of ad_{b_i}; its column j holds b_i b_j in
/// basis coordinates. For the split spin factor the basis is e_1..e_k, z1,
/// z2; for the exceptional cover it is e_1..e_k, z1, n.
template <class S>
class Algebra {
 public:
  Algebra(Field<S> field, std::vector<std::string> labels, std::vector<Matrix<S>> left_mult,
          AlgebraMeta<S> meta = {})
      : field_(std::move(field)), labels_(std::move(labels)), left_mult_(std::move(left_mult)), meta_(std::move(meta)) {
    const Index n = dim();
    if (static_cast<Index>(left_mult_.size()) != n) fail(ErrorCode::DimensionMismatch, "one label per basis vector");
    for (auto& m : left_mult_) {
      if (m.rows() != n || m.cols() != n) fail(ErrorCode::DimensionMismatch, "structure constants must be n x n x n");
      m = normalized(field_, m);
    }
    for (Index i = 0; i < n; ++i)
      for (Index j = i + 1; j < n; ++j)
        if (left_mult_[i].col(j) != left_mult_[j].col(i))
          fail(ErrorCode::NotCommutative,
               "b_" + std::to_string(i) + " b_" + std::to_string(j) + " != b_" + std::to_string(j) + " b_" +
                   std::to_string(i));
  }

  Index dim() const { return static_cast<Index>(labels_.size()); }
  const Field<S>& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const AlgebraMeta<S>& meta() const { return meta_; }
  AlgebraKind kind() const { return meta_.kind; }

  const Matrix<S>& left_mult(Index i) const { return left_mult_[static_cast<std::size_t>(i)]; }
  /// Coefficient of b_k in b_i b_j.
  const S& constant(Index i, Index j, Index k) const { return left_mult(i)(k, j); }
  Vector<S> basis(Index i) const { return unit_vector(field_, dim(), i); }

  // Positions in the split-spin / cover basis.
  Index dim_e() const { return dim() - 2; }
  Index z1() const { return dim() - 2; }
  Index z2() const { return dim() - 1; }
  Index n() const { return dim() - 1; }

  const S& alpha() const {
    if (!meta_.alpha) fail(ErrorCode::WrongAlgebraKind, "algebra carries no alpha");
    return *meta_.alpha;
  }
  const QuadraticSpace<S>& space() const {
    if (!meta_.space) fail(ErrorCode::WrongAlgebraKind, "algebra carries no quadratic space");
    return *meta_.space;
  }

 private:
  Field<S> field_;
  std::vector<std::string> labels_;
  std::vector<Matrix<S>> left_mult_;
  AlgebraMeta<S> meta_;
};

template <class S>
bool same_structure(const Algebra<S>& a, const Algebra<S>& b) {
  if (a.dim() != b.dim()) return false;
  for (Index i = 0; i < a.dim(); ++i)
    if (a.left_mult(i) != b.left_mult(i)) return false;
  return true;
}

/// Same algebra on the reordered basis: new basis vector i is old perm[i].
template <class S>
Algebra<S> permuted(const Algebra<S>& a, const std::vector<Index>& perm) {
  const Index n = a.dim();
  std::vector<std::string> labels;
  std::vector<Matrix<S>> mult;
  for (Index i = 0; i < n; ++i) {
    labels.push_back(a.labels()[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])]);
    Matrix<S> m(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        m(k, j) = a.constant(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)],
                             perm[static_cast<std::size_t>(k)]);
    mult.push_back(std::move(m));
  }
  return Algebra<S>(a.field(), std::move(labels), std::move(mult));
}

namespace detail {

inline std::vector<std::string> e_labels(Index k) {
  std::vector<std::string> labels;
  for (Index i = 0; i < k; ++i) labels.push_back("e" + std::to_string(i + 1));
  return labels;
}

}  // namespace detail

/// S(b, alpha) on E + F z1 + F z2:
///   z1^2 = z1, z2^2 = z2, z1 z2 = 0, e z1 = alpha e, e z2 = (1 - alpha) e,
///   e f = -b(e,f) z  with  z = alpha(alpha-2) z1 + (alpha-1)(alpha+1) z2.
/// Never rejects parameters; degenerate choices are recorded in meta().
template <class S>
Algebra<S> build_split_spin(const QuadraticSpace<S>& q, const S& alpha_in) {
  const Field<S>& f = q.field();
  const S alpha = f.normalize(alpha_in);
  const S one = f.one();
  const Index k = q.dim();
  const Index n = k + 2;
  const Index z1 = k;
  const Index z2 = k + 1;
  const S zc1 = alpha * (alpha - f(2));
  const S zc2 = (alpha - one) * (alpha + one);

  std::vector<Matrix<S>> mult(static_cast<std::size_t>(n), zeros(f, n, n));
  for (Index i = 0; i < k; ++i) {
    Matrix<S>& m = mult[static_cast<std::size_t>(i)];
    for (Index j = 0; j < k; ++j) {
      m(z1, j) = -q.gram()(i, j) * zc1;
      m(z2, j) = -q.gram()(i, j) * zc2;
    }
    m(i, z1) = alpha;
    m(i, z2) = one - alpha;
  }
  Matrix<S>& m1 = mult[static_cast<std::size_t>(z1)];
  Matrix<S>& m2 = mult[static_cast<std::size_t>(z2)];
  for (Index j = 0; j < k; ++j) {
    m1(j, j) = alpha;
    m2(j, j) = one - alpha;
  }
  m1(z1, z1) = one;
  m2(z2, z2) = one;

  auto labels = detail::e_labels(k);
  labels.push_back("z1");
  labels.push_back("z2");

  AlgebraMeta<S> meta;
  meta.kind = AlgebraKind::SplitSpin;
  meta.alpha = alpha;
  meta.space = q;
  if (f.characteristic() == 2) meta.warnings.push_back("characteristic 2: no family idempotents, axial operations refused");
  if (is_zero(alpha) || alpha == one) {
    meta.jordan_special = true;
    meta.warnings.push_back("alpha in {0,1}: direct product of a spin factor Jordan algebra and the field");
  } else if (f.characteristic() != 2 && alpha == f(1, 2)) {
    meta.jordan_special = true;
    meta.warnings.push_back("alpha = 1/2: spin factor Jordan algebra");
  }
  return Algebra<S>(f, std::move(labels), std::move(mult), std::move(meta));
}

/// The nil cover of S(b,-1)° on E + F z1 + F n:
///   z1^2 = z1, n^2 = 0, z1 n = 0, e z1 = -e, e n = 0, e f = -b(e,f)(3 z1 - 2 n).
template <class S>
Algebra<S> build_exceptional(const QuadraticSpace<S>& q) {
  const Field<S>& f = q.field();
  const Index k = q.dim();
  const Index n = k + 2;
  const Index z1 = k;
  const Index nil = k + 1;

  std::vector<Matrix<S>> mult(static_cast<std::size_t>(n), zeros(f, n, n));
  for (Index i = 0; i < k; ++i) {
    Matrix<S>& m = mult[static_cast<std::size_t>(i)];
    for (Index j = 0; j < k; ++j) {
      m(z1, j) = -f(3) * q.gram()(i, j);
      m(nil, j) = f(2) * q.gram()(i, j);
    }
    m(i, z1) = -f.one();
  }
  Matrix<S>& m1 = mult[static_cast<std::size_t>(z1)];
  for (Index j = 0; j < k; ++j) m1(j, j) = -f.one();
  m1(z1, z1) = f.one();

  auto labels = detail::e_labels(k);
  labels.push_back("z1");
  labels.push_back("n");

  AlgebraMeta<S> meta;
  meta.kind = AlgebraKind::ExceptionalCover;
  meta.alpha = -f.one();
  meta.space = q;
  if (f.characteristic() == 2 || f.characteristic() == 3)
    meta.warnings.push_back("characteristic 2 or 3: axial operations refused");
  return Algebra<S>(f, std::move(labels), std::move(mult), std::move(meta));
}

/// 3C(alpha) on idempotents a, b, c with xy = (alpha/2)(x + y - w) for
/// distinct x, y and w the third basis vector.
template <class S>
Algebra<S> matsuo_3c(const Field<S>& f, const S& alpha) {
  if (f.characteristic() == 2) fail(ErrorCode::CharTwo, "3C(alpha) needs characteristic != 2");
  const S h = f.normalize(alpha) / f(2);
  std::vector<Matrix<S>> mult(3, zeros(f, 3, 3));
  for (Index i = 0; i < 3; ++i) {
    Matrix<S>& m = mult[static_cast<std::size_t>(i)];
    m(i, i) = f.one();
    for (Index j = 0; j < 3; ++j) {
      if (j == i) continue;
      const Index w = 3 - i - j;
      m(i, j) = h;
      m(j, j) = h;
      m(w, j) = -h;
    }
  }
  AlgebraMeta<S> meta;
  meta.kind = AlgebraKind::Matsuo3C;
  meta.alpha = f.normalize(alpha);
  return Algebra<S>(f, {"a", "b", "c"}, std::move(mult), std::move(meta));
}

template <class S>
void check_element(const Algebra<S>& a, const Vector<S>& u) {
  if (u.size() != a.dim())
    fail(ErrorCode::AlgebraMismatch,
         "element of length " + std::to_string(u.size()) + " in an algebra of dimension " + std::to_string(a.dim()));
}

/// Matrix of v -> a v.
template <class S>
Matrix<S> adjoint(const Algebra<S>& alg, const Vector<S>& a) {
  check_element(alg, a);
  Matrix<S> m = zeros(alg.field(), alg.dim(), alg.dim());
  for (Index i = 0; i < alg.dim(); ++i)
    if (!is_zero(a(i))) m += a(i) * alg.left_mult(i);
  return m;
}

template <class S>
Vector<S> multiply(const Algebra<S>& alg, const Vector<S>& u, const Vector<S>& v) {
  check_element(alg, v);
  return normalized(alg.field(), Vector<S>(adjoint(alg, u) * v));
}

/// u + c1 z1 + c2 z2 (or c2 n) for an E-vector u.
template <class S>
Vector<S> make_element(const Algebra<S>& alg, const Vector<S>& e_part, const S& c1, const S& c2) {
  if (e_part.size() != alg.dim_e()) fail(ErrorCode::DimensionMismatch, "E-part has the wrong length");
  Vector<S> x(alg.dim());
  x.head(alg.dim_e()) = e_part;
  x(alg.z1()) = c1;
  x(alg.z2()) = c2;
  return normalized(alg.field(), x);
}

template <class S>
Vector<S> lift(const Algebra<S>& alg, const Vector<S>& e_part) {
  return make_element(alg, e_part, alg.field().zero(), alg.field().zero());
}

template <class S>
Vector<S> e_part(const Algebra<S>& alg, const Vector<S>& x) {
  check_element(alg, x);
  return x.head(alg.dim_e());
}

/// Block matrix acting as m on E and fixing the two remaining basis vectors.
template <class S>
Matrix<S> extend_from_e(const Algebra<S>& alg, const Matrix<S>& m) {
  if (m.rows() != alg.dim_e() || m.cols() != alg.dim_e()) fail(ErrorCode::DimensionMismatch, "extend_from_e");
  Matrix<S> out = identity(alg.field(), alg.dim());
  out.topLeftCorner(alg.dim_e(), alg.dim_e()) = m;
  return out;
}

template <class S>
struct Eigenspace {
  S eigenvalue;
  std::vector<Vector<S>> basis;
};

template <class S>
struct Eigendecomposition {
  std::vector<Eigenspace<S>> spaces;  // in candidate order
  bool complete = false;              // dimensions sum to dim A
};

/// ker(ad_a - lambda I) for every candidate lambda.
template <class S>
Eigendecomposition<S> eigendecompose(const Algebra<S>& alg, const Vector<S>& a, const std::vector<S>& candidates) {
  const Field<S>& f = alg.field();
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (f.normalize(candidates[i]) == f.normalize(candidates[j]))
        fail(ErrorCode::DuplicateCandidates, "candidate eigenvalue " + f.normalize(candidates[i]).to_string() +
                                                 " appears twice");
  const Matrix<S> ad = adjoint(alg, a);
  Eigendecomposition<S> out;
  Index total = 0;
  for (const S& lambda : candidates) {
    Eigenspace<S> space{f.normalize(lambda), {}};
    for (auto& v : kernel(Matrix<S>(ad - lambda * identity(f, alg.dim())))) space.basis.push_back(normalized(f, v));
    total += static_cast<Index>(space.basis.size());
    out.spaces.push_back(std::move(space));
  }
  out.complete = total == alg.dim();
  return out;
}

/// The element u with u b_i = b_i for every basis vector, if one exists.
template <class S>
std::optional<Vector<S>> identity_of(const Algebra<S>& alg) {
  const Index n = alg.dim();
  Matrix<S> system(n * n, n);
  Vector<S> rhs(n * n);
  for (Index i = 0; i < n; ++i) {
    // u b_i = ad_{b_i} u by commutativity
    system.middleRows(i * n, n) = alg.left_mult(i);
    rhs.segment(i * n, n) = alg.basis(i);
  }
  auto sol = solve_linear(system, rhs);
  if (!sol) return std::nullopt;
  return normalized(alg.field(), *sol.x);
}

template <class S>
struct Subalgebra {
  Algebra<S> algebra;
  Matrix<S> embedding;     // columns: basis of the subalgebra in ambient coordinates
  int closure_degree = 0;  // smallest k with products of <= k generators closed
};

namespace detail {

template <class S>
std::vector<Vector<S>> products(const Algebra<S>& alg, const std::vector<Vector<S>>& a,
                                const std::vector<Vector<S>>& b) {
  std::vector<Vector<S>> out;
  for (const auto& u : a)
    for (const auto& v : b) out.push_back(multiply(alg, u, v));
  return out;
}

/// Algebra induced on span(basis), which must be closed under products.
template <class S>
Algebra<S> restricted(const Algebra<S>& alg, const std::vector<Vector<S>>& basis, const Matrix<S>& embed) {
  const Index m = static_cast<Index>(basis.size());
  std::vector<Matrix<S>> mult;
  std::vector<std::string> labels;
  for (Index a = 0; a < m; ++a) {
    Matrix<S> l(m, m);
    for (Index b = 0; b < m; ++b) {
      auto sol = solve_linear(embed, multiply(alg, basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]));
      if (!sol) fail(ErrorCode::InternalError, "subspace is not closed under products");
      l.col(b) = *sol.x;
    }
    mult.push_back(std::move(l));
    labels.push_back("w" + std::to_string(a + 1));
  }
  return Algebra<S>(alg.field(), std::move(labels), std::move(mult));
}

}  // namespace detail

/// Subalgebra generated by `generators`. P_1 is their span and P_k adds the
/// products P_i P_j with i + j = k; the result is the first P_k closed under
/// multiplication. Throws CapExceeded when some P_k outgrows `cap`
/// (cap 0 means the ambient dimension).
template <class S>
Subalgebra<S> subalgebra(const Algebra<S>& alg, const std::vector<Vector<S>>& generators, Index cap = 0) {
  for (const auto& g : generators) check_element(alg, g);
  if (cap <= 0) cap = alg.dim();
  const Index n = alg.dim();
  std::vector<std::vector<Vector<S>>> levels;  // levels[k-1] = basis of P_k
  levels.push_back(span_basis(generators, n));
  int degree = 1;
  while (true) {
    const auto& current = levels.back();
    if (static_cast<Index>(current.size()) > cap)
      fail(ErrorCode::CapExceeded, "subalgebra dimension exceeds cap " + std::to_string(cap));
    bool closed = true;
    for (const auto& w : detail::products(alg, current, current))
      if (!in_span(current, w)) {
        closed = false;
        break;
      }
    if (closed) break;
    std::vector<Vector<S>> next = current;
    const int k = degree + 1;
    for (int i = 1; i <= k / 2; ++i) {
      auto prod = detail::products(alg, levels[static_cast<std::size_t>(i - 1)], levels[static_cast<std::size_t>(k - i - 1)]);
      next.insert(next.end(), prod.begin(), prod.end());
    }
    levels.push_back(span_basis(next, n));
    ++degree;
  }
  const auto& basis = levels.back();
  Matrix<S> embed = basis.empty() ? Matrix<S>(n, 0) : columns(basis, n);
  embed = normalized(alg.field(), embed);
  return Subalgebra<S>{detail::restricted(alg, basis, embed), embed, degree};
}

template <class S>
struct Quotient {
  Algebra<S> algebra;
  Matrix<S> projection;           // dim(A/I) x dim(A)
  std::vector<Index> complement;  // ambient basis vectors kept as the quotient basis
};

template <class S>
bool is_ideal(const Algebra<S>& alg, const std::vector<Vector<S>>& span) {
  const auto basis = span_basis(span, alg.dim());
  for (const auto& v : basis)
    for (Index i = 0; i < alg.dim(); ++i)
      if (!in_span(basis, multiply(alg, alg.basis(i), v))) return false;
  return true;
}

/// A / span(ideal_basis); throws NotAnIdeal. The quotient basis is the set of
/// ambient basis vectors (in order) completing the ideal to a basis of A.
template <class S>
Quotient<S> quotient(const Algebra<S>& alg, const std::vector<Vector<S>>& ideal_basis) {
  for (const auto& v : ideal_basis) check_element(alg, v);
  const Index n = alg.dim();
  const Field<S>& f = alg.field();
  if (!is_ideal(alg, ideal_basis)) fail(ErrorCode::NotAnIdeal, "span is not closed under multiplication by A");
  std::vector<Vector<S>> basis = span_basis(ideal_basis, n);
  const Index r = static_cast<Index>(basis.size());
  std::vector<Index> complement;
  for (Index i = 0; i < n && static_cast<Index>(basis.size()) < n; ++i) {
    if (in_span(basis, alg.basis(i))) continue;
    basis.push_back(alg.basis(i));
    complement.push_back(i);
  }
  const Index m = n - r;
  const auto inv = inverse(columns(basis, n));
  if (!inv) fail(ErrorCode::InternalError, "quotient: completed basis is singular");
  const Matrix<S> proj = normalized(f, Matrix<S>(inv->bottomRows(m)));

  std::vector<Matrix<S>> mult;
  std::vector<std::string> labels;
  for (Index a = 0; a < m; ++a) {
    Matrix<S> l(m, m);
    for (Index b = 0; b < m; ++b)
      l.col(b) = proj * multiply(alg, alg.basis(complement[static_cast<std::size_t>(a)]),
                                 alg.basis(complement[static_cast<std::size_t>(b)]));
    mult.push_back(std::move(l));
    labels.push_back(alg.labels()[static_cast<std::size_t>(complement[static_cast<std::size_t>(a)])]);
  }
  return Quotient<S>{Algebra<S>(f, std::move(labels), std::move(mult)), proj, std::move(complement)};
}

struct IsomorphismCheck {
  bool ok = false;
  bool invertible = false;  // injective, for embeddings
  /// First basis pair (i, j) with phi(b_i b_j) != phi(b_i) phi(b_j).
  std::optional<std::pair<Index, Index>> failing;
};

/// Whether `map` (columns: images of the basis of `a` in `b`) is an injective
/// algebra homomorphism a -> b.
template <class S>
IsomorphismCheck is_embedding(const Algebra<S>& a, const Algebra<S>& b, const Matrix<S>& map) {
  if (map.rows() != b.dim() || map.cols() != a.dim()) fail(ErrorCode::DimensionMismatch, "map has the wrong shape");
  IsomorphismCheck out;
  out.invertible = rank(map) == a.dim();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i; j < a.dim(); ++j) {
      const Vector<S> lhs = normalized(b.field(), Vector<S>(map * multiply(a, a.basis(i), a.basis(j))));
      const Vector<S> rhs = multiply(b, Vector<S>(map.col(i)), Vector<S>(map.col(j)));
      if (lhs != rhs) {
        out.failing = std::make_pair(i, j);
        return out;
      }
    }
  out.ok = out.invertible;
  return out;
}

template <class S>
IsomorphismCheck is_isomorphism(const Algebra<S>& a, const Algebra<S>& b, const Matrix<S>& map) {
  if (a.dim() != b.dim()) fail(ErrorCode::DimensionMismatch, "isomorphism needs algebras of equal dimension");
  return is_embedding(a, b, map);
}

}  // namespace ssf
