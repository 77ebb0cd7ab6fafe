#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ssf/linalg.hpp"

namespace ssf {

/// The space E with its symmetric bilinear form b, given by a Gram matrix.
template <class S>
class QuadraticSpace {
 public:
  QuadraticSpace(Field<S> field, Matrix<S> gram) : field_(std::move(field)), gram_(normalized(field_, gram)) {
    if (gram_.rows() < 1 || gram_.rows() != gram_.cols())
      fail(ErrorCode::InvalidGram, "Gram matrix must be square with dimension >= 1");
    for (Index i = 0; i < gram_.rows(); ++i)
      for (Index j = i + 1; j < gram_.cols(); ++j)
        if (gram_(i, j) != gram_(j, i)) fail(ErrorCode::InvalidGram, "Gram matrix is not symmetric");
  }

  Index dim() const { return gram_.rows(); }
  const Matrix<S>& gram() const { return gram_; }
  const Field<S>& field() const { return field_; }

 private:
  Field<S> field_;
  Matrix<S> gram_;
};

template <class S>
S bform(const QuadraticSpace<S>& q, const Vector<S>& u, const Vector<S>& v) {
  if (u.size() != q.dim() || v.size() != q.dim()) fail(ErrorCode::DimensionMismatch, "bform: vector length");
  return q.field().normalize((u.transpose() * q.gram() * v)(0, 0));
}

template <class S>
S norm(const QuadraticSpace<S>& q, const Vector<S>& u) {
  return bform(q, u, u);
}

/// Matrix of v -> v - 2 b(e,v)/b(e,e) e.
template <class S>
Matrix<S> reflection(const QuadraticSpace<S>& q, const Vector<S>& e) {
  const S nn = norm(q, e);
  if (is_zero(nn)) fail(ErrorCode::IsotropicVector, "reflection in an isotropic vector");
  const S c = q.field()(2) / nn;
  Matrix<S> r = identity(q.field(), q.dim());
  r -= c * e * (q.gram() * e).transpose();
  return normalized(q.field(), r);
}

/// -r_e: the action of the Miyamoto involution of a family axis on E.
template <class S>
Matrix<S> negated_reflection(const QuadraticSpace<S>& q, const Vector<S>& e) {
  return normalized(q.field(), Matrix<S>(-reflection(q, e)));
}

/// Basis of E^perp, i.e. the kernel of the Gram matrix.
template <class S>
std::vector<Vector<S>> form_radical_space(const QuadraticSpace<S>& q) {
  std::vector<Vector<S>> out;
  for (auto& v : kernel(q.gram())) out.push_back(normalized(q.field(), v));
  return out;
}

template <class S>
bool is_degenerate(const QuadraticSpace<S>& q) {
  return rank(q.gram()) < q.dim();
}

enum class SearchStatus { Exhaustive, Sampled, Unknown };

template <class S>
struct NormOneSearch {
  SearchStatus status = SearchStatus::Unknown;
  std::vector<Vector<S>> vectors;  // every entry has b(e,e) = 1
  bool spans = false;              // the vectors found span E
};

inline constexpr std::uint64_t kDefaultNormOneBudget = 100000;

namespace detail {

template <class S>
S small_random(const Field<S>& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  if constexpr (std::is_same_v<S, ModP>) {
    std::uniform_int_distribution<std::uint64_t> any(0, f.order() - 1);
    return f.element(any(rng));
  } else {
    return f(dist(rng));
  }
}

template <class S>
bool push_unique(std::vector<Vector<S>>& out, const Vector<S>& v) {
  for (const auto& w : out)
    if (w == v) return false;
  out.push_back(v);
  return true;
}

}  // namespace detail

/// Vectors e with b(e,e) = 1.
///
/// Over F_p with p^dim <= budget every vector is tested (Exhaustive).
/// Otherwise candidates v are tried (first the basis vectors and their
/// pairwise sums and differences, then random ones) and rescaled by
/// 1/sqrt(b(v,v)) when b(v,v) is a nonzero square. Sampling stops once the
/// found vectors span E and at least `want` were found, or after `budget`
/// candidates. An empty sampled result is reported as Unknown.
template <class S>
NormOneSearch<S> find_norm_one(const QuadraticSpace<S>& q, std::uint64_t budget = kDefaultNormOneBudget,
                               std::uint64_t seed = 1, std::size_t want = 0) {
  const Field<S>& f = q.field();
  const Index n = q.dim();
  NormOneSearch<S> out;

  if constexpr (std::is_same_v<S, ModP>) {
    std::uint64_t total = 1;
    bool small = true;
    for (Index i = 0; i < n && small; ++i) {
      total *= f.order();
      small = total <= budget;
    }
    if (small) {
      out.status = SearchStatus::Exhaustive;
      std::vector<std::uint64_t> digits(static_cast<std::size_t>(n), 0);
      Vector<S> v = zero_vector(f, n);
      for (std::uint64_t count = 0; count < total; ++count) {
        if (norm(q, v) == f.one()) out.vectors.push_back(v);
        for (Index i = n - 1; i >= 0; --i) {
          auto& d = digits[static_cast<std::size_t>(i)];
          d = (d + 1) % f.order();
          v(i) = f.element(d);
          if (d != 0) break;
        }
      }
      out.spans = static_cast<Index>(span_basis(out.vectors, n).size()) == n;
      return out;
    }
  }

  std::vector<Vector<S>> candidates;
  for (Index i = 0; i < n; ++i) candidates.push_back(unit_vector(f, n, i));
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      candidates.push_back(unit_vector(f, n, i) + unit_vector(f, n, j));
      candidates.push_back(unit_vector(f, n, i) - unit_vector(f, n, j));
    }

  std::mt19937_64 rng(seed);
  auto done = [&] {
    return out.vectors.size() >= want && static_cast<Index>(span_basis(out.vectors, n).size()) == n;
  };
  for (std::uint64_t tried = 0; tried < budget; ++tried) {
    Vector<S> v(n);
    if (tried < candidates.size()) {
      v = candidates[tried];
    } else {
      for (Index i = 0; i < n; ++i) v(i) = detail::small_random(f, rng);
    }
    const S c = norm(q, v);
    if (is_zero(c)) continue;
    const auto root = f.sqrt(c);
    if (!root) continue;
    Vector<S> e = normalized(f, Vector<S>(v / *root));
    if (detail::push_unique(out.vectors, e) && done()) break;
  }
  out.status = out.vectors.empty() ? SearchStatus::Unknown : SearchStatus::Sampled;
  out.spans = static_cast<Index>(span_basis(out.vectors, n).size()) == n;
  return out;
}

}  // namespace ssf
