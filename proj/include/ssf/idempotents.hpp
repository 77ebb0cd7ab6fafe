#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ssf/algebra.hpp"

namespace ssf {

enum class IdempotentTag { One, Z1, Z2, FamilyA, FamilyB, FamilyExc, Other };

inline std::string_view to_string(IdempotentTag tag) {
  switch (tag) {
    case IdempotentTag::One: return "One";
    case IdempotentTag::Z1: return "Z1";
    case IdempotentTag::Z2: return "Z2";
    case IdempotentTag::FamilyA: return "FamilyA";
    case IdempotentTag::FamilyB: return "FamilyB";
    case IdempotentTag::FamilyExc: return "FamilyExc";
    case IdempotentTag::Other: return "Other";
  }
  return "Other";
}

template <class S>
struct IdempotentClass {
  IdempotentTag tag = IdempotentTag::Other;
  Vector<S> element;
  /// Norm-one witness for the three families.
  std::optional<Vector<S>> e;
};

enum class Family { A, B, Exceptional };

inline constexpr std::uint64_t kDefaultBruteforceBudget = 1000000;

template <class S>
bool is_idempotent(const Algebra<S>& alg, const Vector<S>& x) {
  return multiply(alg, x, x) == x;
}

template <class S>
Vector<S> unit_element(const Algebra<S>& alg) {
  if (alg.kind() != AlgebraKind::SplitSpin) fail(ErrorCode::WrongAlgebraKind, "only S(b,alpha) has the identity z1 + z2");
  const Field<S>& f = alg.field();
  return make_element(alg, zero_vector(f, alg.dim_e()), f.one(), f.one());
}

/// x^- : negate the E-part (the action of the central involution).
template <class S>
Vector<S> sigma(const Algebra<S>& alg, const Vector<S>& x) {
  check_element(alg, x);
  Vector<S> y = x;
  y.head(alg.dim_e()) = -x.head(alg.dim_e());
  return normalized(alg.field(), y);
}

/// The family idempotent attached to a norm-one vector e:
///   (a)   1/2 (e + alpha z1 + (alpha+1) z2)
///   (b)   1/2 (e + (2-alpha) z1 + (1-alpha) z2)
///   (exc) 1/2 (e - z1 + n)           in the exceptional cover
template <class S>
Vector<S> family_axis(const Algebra<S>& alg, const Vector<S>& e, Family family) {
  const Field<S>& f = alg.field();
  if (f.characteristic() == 2) fail(ErrorCode::CharTwo, "family idempotents need characteristic != 2");
  const bool cover = alg.kind() == AlgebraKind::ExceptionalCover;
  if ((family == Family::Exceptional) != cover || (!cover && alg.kind() != AlgebraKind::SplitSpin))
    fail(ErrorCode::WrongAlgebraKind, "family does not belong to this kind of algebra");
  if (norm(alg.space(), e) != f.one()) fail(ErrorCode::NotNormOne, "b(e,e) != 1");
  const S half = f(1, 2);
  Vector<S> x;
  switch (family) {
    case Family::A: {
      const S a = alg.alpha();
      x = make_element(alg, Vector<S>(half * e), half * a, half * (a + f.one()));
      break;
    }
    case Family::B: {
      const S a = alg.alpha();
      x = make_element(alg, Vector<S>(half * e), half * (f(2) - a), half * (f.one() - a));
      break;
    }
    case Family::Exceptional:
      x = make_element(alg, Vector<S>(half * e), -half, half);
      break;
  }
  if (!is_idempotent(alg, x)) fail(ErrorCode::InternalError, "family element is not idempotent");
  return x;
}

/// Match a nonzero idempotent against 1, z1, z2 and the family templates.
/// Other means no template fits, which the classification rules out when
/// char != 2 and alpha is not in {0, 1, 1/2} (resp. char not in {2, 3}).
template <class S>
IdempotentClass<S> classify_idempotent(const Algebra<S>& alg, const Vector<S>& x) {
  const Field<S>& f = alg.field();
  const bool cover = alg.kind() == AlgebraKind::ExceptionalCover;
  if (!cover && alg.kind() != AlgebraKind::SplitSpin)
    fail(ErrorCode::WrongAlgebraKind, "classification applies to S(b,alpha) and its exceptional cover");
  if (is_zero(x) || !is_idempotent(alg, x)) fail(ErrorCode::NotIdempotent, "not a nonzero idempotent");

  IdempotentClass<S> out{IdempotentTag::Other, normalized(f, x), std::nullopt};
  const Vector<S> u = e_part(alg, x);
  const S g = x(alg.z1());
  const S d = x(alg.z2());
  if (is_zero(u)) {
    if (g == f.one() && is_zero(d)) out.tag = IdempotentTag::Z1;
    else if (!cover && is_zero(g) && d == f.one()) out.tag = IdempotentTag::Z2;
    else if (!cover && g == f.one() && d == f.one()) out.tag = IdempotentTag::One;
    return out;
  }
  if (f.characteristic() == 2) return out;
  const Vector<S> e = normalized(f, Vector<S>(f(2) * u));
  if (norm(alg.space(), e) != f.one()) return out;
  const S half = f(1, 2);
  if (cover) {
    if (g == -half && d == half) out.tag = IdempotentTag::FamilyExc;
  } else {
    const S a = alg.alpha();
    if (g == half * a && d == half * (a + f.one())) out.tag = IdempotentTag::FamilyA;
    else if (g == half * (f(2) - a) && d == half * (f.one() - a)) out.tag = IdempotentTag::FamilyB;
  }
  if (out.tag != IdempotentTag::Other) out.e = e;
  return out;
}

/// Every nonzero x with x^2 = x, by scanning all p^dim(A) coordinate
/// vectors in lexicographic order. Works on raw residues straight from the
/// structure constants.
template <class S>
std::vector<Vector<S>> enumerate_idempotents_bruteforce(const Algebra<S>& alg,
                                                        std::uint64_t budget = kDefaultBruteforceBudget) {
  if constexpr (!std::is_same_v<S, ModP>) {
    (void)alg;
    (void)budget;
    fail(ErrorCode::NotFiniteField, "exhaustive idempotent scan needs a finite field");
  } else {
    const Field<ModP>& f = alg.field();
    const std::uint64_t p = f.p();
    const Index n = alg.dim();
    std::uint64_t total = 1;
    for (Index i = 0; i < n; ++i) {
      total *= p;
      if (total > budget)
        fail(ErrorCode::BudgetExceeded, "p^dim(A) exceeds the scan budget " + std::to_string(budget));
    }

    struct Term {
      std::size_t i, j, k;
      std::uint64_t c;
    };
    std::vector<Term> terms;
    for (Index i = 0; i < n; ++i)
      for (Index j = i; j < n; ++j)
        for (Index k = 0; k < n; ++k) {
          std::uint64_t c = alg.constant(i, j, k).residue_mod(f.p());
          if (c == 0) continue;
          if (i != j) c = (2 * c) % p;
          terms.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k), c});
        }

    std::vector<std::uint64_t> x(static_cast<std::size_t>(n), 0);
    std::vector<std::uint64_t> sq(static_cast<std::size_t>(n), 0);
    std::vector<Vector<ModP>> found;
    for (std::uint64_t count = 0; count < total; ++count) {
      if (count > 0) {
        std::fill(sq.begin(), sq.end(), 0);
        for (const Term& t : terms) sq[t.k] = (sq[t.k] + ((t.c * x[t.i]) % p) * x[t.j]) % p;
        if (sq == x) {
          Vector<ModP> v(n);
          for (Index i = 0; i < n; ++i) v(i) = f.element(x[static_cast<std::size_t>(i)]);
          found.push_back(std::move(v));
        }
      }
      for (Index i = n - 1; i >= 0; --i) {
        auto& d = x[static_cast<std::size_t>(i)];
        d = (d + 1) % p;
        if (d != 0) break;
      }
    }
    return found;
  }
}

}  // namespace ssf
