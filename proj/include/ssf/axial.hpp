#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssf/algebra.hpp"
#include "ssf/idempotents.hpp"

namespace ssf {

enum class LawKind { Jordan, Monster };

/// Fusion law on eigenvalues (1, 0, alpha) or (1, 0, alpha, beta).
/// table[i][j] is a bit mask over eigenvalue indices; minus[i] marks the odd
/// part of the C2-grading.
template <class S>
struct FusionLaw {
  LawKind kind = LawKind::Jordan;
  std::vector<S> eigenvalues;
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> table;
  std::vector<bool> minus;

  std::size_t size() const { return eigenvalues.size(); }
  bool allows(std::size_t a, std::size_t b, std::size_t c) const { return ((table[a][b] >> c) & 1U) != 0; }
};

namespace detail {

template <class S>
void require_distinct(const Field<S>& f, const std::vector<S>& values, const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j)
      if (f.normalize(values[i]) == f.normalize(values[j]))
        fail(ErrorCode::EigenvalueCollision, names[i] + " == " + names[j] + " (" +
                                                 f.normalize(values[i]).to_string() + ") in " +
                                                 f.descriptor().to_string());
}

}  // namespace detail

/// Jordan type eta: 1*1 = {1}, 0*0 = {0}, 1*0 = {}, {1,0}*eta = {eta}, eta*eta = {1,0}.
template <class S>
FusionLaw<S> jordan_law(const Field<S>& f, const S& eta) {
  FusionLaw<S> law;
  law.kind = LawKind::Jordan;
  law.eigenvalues = {f.one(), f.zero(), f.normalize(eta)};
  law.names = {"1", "0", "eta"};
  detail::require_distinct(f, law.eigenvalues, law.names);
  constexpr std::uint32_t kOne = 1U, kZero = 2U, kEta = 4U;
  law.table = {{kOne, 0U, kEta}, {0U, kZero, kEta}, {kEta, kEta, kOne | kZero}};
  law.minus = {false, false, true};
  return law;
}

/// Monster type (alpha, beta): the Jordan-type rules on {1, 0, alpha}, plus
/// beta * {1, 0, alpha} = {beta} and beta * beta = {1, 0, alpha}.
template <class S>
FusionLaw<S> monster_law(const Field<S>& f, const S& alpha, const S& beta) {
  FusionLaw<S> law;
  law.kind = LawKind::Monster;
  law.eigenvalues = {f.one(), f.zero(), f.normalize(alpha), f.normalize(beta)};
  law.names = {"1", "0", "alpha", "beta"};
  detail::require_distinct(f, law.eigenvalues, law.names);
  constexpr std::uint32_t kOne = 1U, kZero = 2U, kAlpha = 4U, kBeta = 8U;
  law.table = {{kOne, 0U, kAlpha, kBeta},
               {0U, kZero, kAlpha, kBeta},
               {kAlpha, kAlpha, kOne | kZero, kBeta},
               {kBeta, kBeta, kBeta, kOne | kZero | kAlpha}};
  law.minus = {false, false, false, true};
  return law;
}

struct FusionViolation {
  std::size_t lhs = 0;        // eigenvalue indices into the law
  std::size_t rhs = 0;
  std::size_t component = 0;  // offending eigenvalue found in the product
};

template <class S>
struct AxisReport {
  FusionLaw<S> law;
  std::vector<Index> dims;  // eigenspace dimension per law eigenvalue
  bool primitive = false;
  std::vector<FusionViolation> violations;
  Matrix<S> miyamoto;  // +1 on the even part, -1 on the odd part
  std::vector<Eigenspace<S>> eigenspaces;

  bool passes() const { return primitive && violations.empty(); }
};

/// Decompose ad_x over the law's eigenvalues and test every fusion rule on
/// products of eigenbasis vectors. Throws IncompleteDecomposition when the
/// eigenspaces do not fill A (x has an eigenvalue outside the law).
template <class S>
AxisReport<S> check_axis(const Algebra<S>& alg, const Vector<S>& x, const FusionLaw<S>& law) {
  const Field<S>& f = alg.field();
  if (is_zero(x) || !is_idempotent(alg, x)) fail(ErrorCode::NotIdempotent, "axis candidate is not a nonzero idempotent");
  auto dec = eigendecompose(alg, x, law.eigenvalues);
  if (!dec.complete) {
    Index total = 0;
    for (const auto& s : dec.spaces) total += static_cast<Index>(s.basis.size());
    fail(ErrorCode::IncompleteDecomposition, "eigenspaces over the law span " + std::to_string(total) + " of " +
                                                 std::to_string(alg.dim()) + " dimensions");
  }

  AxisReport<S> report;
  report.law = law;
  std::vector<Vector<S>> all;
  std::vector<std::size_t> block_of;
  for (std::size_t i = 0; i < dec.spaces.size(); ++i) {
    report.dims.push_back(static_cast<Index>(dec.spaces[i].basis.size()));
    for (const auto& v : dec.spaces[i].basis) {
      all.push_back(v);
      block_of.push_back(i);
    }
  }
  report.primitive = report.dims[0] == 1;

  const Matrix<S> basis = columns(all, alg.dim());
  const auto inv = inverse(basis);
  if (!inv) fail(ErrorCode::InternalError, "eigenbasis is singular");

  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      const Vector<S> coords = *inv * multiply(alg, all[a], all[b]);
      const std::size_t la = block_of[a];
      const std::size_t lb = block_of[b];
      for (std::size_t c = 0; c < all.size(); ++c) {
        if (is_zero(coords(static_cast<Index>(c)))) continue;
        const std::size_t lc = block_of[c];
        if (law.allows(la, lb, lc)) continue;
        const FusionViolation v{std::min(la, lb), std::max(la, lb), lc};
        const bool seen = std::any_of(report.violations.begin(), report.violations.end(), [&](const FusionViolation& w) {
          return w.lhs == v.lhs && w.rhs == v.rhs && w.component == v.component;
        });
        if (!seen) report.violations.push_back(v);
      }
    }

  Matrix<S> sign = zeros(f, alg.dim(), alg.dim());
  for (std::size_t c = 0; c < all.size(); ++c)
    sign(static_cast<Index>(c), static_cast<Index>(c)) = law.minus[block_of[c]] ? -f.one() : f.one();
  report.miyamoto = normalized(f, Matrix<S>(basis * sign * *inv));
  report.eigenspaces = std::move(dec.spaces);
  return report;
}

template <class S>
bool is_automorphism(const Algebra<S>& alg, const Matrix<S>& m) {
  if (m.rows() != alg.dim() || m.cols() != alg.dim()) return false;
  return is_isomorphism(alg, alg, m).ok;
}

/// The Miyamoto involution tau_x, verified to be an automorphism of order
/// dividing 2. Throws NotAnAutomorphism otherwise.
template <class S>
Matrix<S> miyamoto(const Algebra<S>& alg, const Vector<S>& x, const FusionLaw<S>& law) {
  const AxisReport<S> report = check_axis(alg, x, law);
  const Matrix<S>& t = report.miyamoto;
  if (!is_identity(Matrix<S>(t * t))) fail(ErrorCode::NotAnAutomorphism, "tau_x is not an involution");
  const auto check = is_isomorphism(alg, alg, t);
  if (!check.ok) {
    std::string where;
    if (check.failing) where = " (basis pair " + std::to_string(check.failing->first) + "," + std::to_string(check.failing->second) + ")";
    fail(ErrorCode::NotAnAutomorphism, "tau_x is not multiplicative" + where);
  }
  return t;
}

/// The law under which a family axis of S(b,alpha) is an axis: Monster type
/// (alpha, 1/2) for family (a), (1 - alpha, 1/2) for family (b), and
/// (-1, 1/2) for the exceptional family.
template <class S>
FusionLaw<S> family_law(const Algebra<S>& alg, Family family) {
  const Field<S>& f = alg.field();
  switch (family) {
    case Family::A: return monster_law(f, alg.alpha(), f(1, 2));
    case Family::B: return monster_law(f, S(f.one() - alg.alpha()), f(1, 2));
    case Family::Exceptional: return monster_law(f, -f.one(), f(1, 2));
  }
  return monster_law(f, alg.alpha(), f(1, 2));
}

/// The axes whose Miyamoto involution is -r_e: x, x^-, 1 - x, 1 - x^- for
/// x in family (a) (only x, x^- in the exceptional cover). Each one is
/// checked to produce -r_e extended by the identity on z1, z2 (or z1, n).
template <class S>
std::vector<Vector<S>> axes_with_involution(const Algebra<S>& alg, const Vector<S>& e) {
  const bool cover = alg.kind() == AlgebraKind::ExceptionalCover;
  const Vector<S> x = family_axis(alg, e, cover ? Family::Exceptional : Family::A);
  const Matrix<S> expected = extend_from_e(alg, negated_reflection(alg.space(), e));
  std::vector<std::pair<Vector<S>, Family>> axes;
  if (cover) {
    axes = {{x, Family::Exceptional}, {sigma(alg, x), Family::Exceptional}};
  } else {
    const Vector<S> one = unit_element(alg);
    axes = {{x, Family::A},
            {sigma(alg, x), Family::A},
            {normalized(alg.field(), Vector<S>(one - x)), Family::B},
            {normalized(alg.field(), Vector<S>(one - sigma(alg, x))), Family::B}};
  }
  std::vector<Vector<S>> out;
  for (const auto& [axis, family] : axes) {
    if (miyamoto(alg, axis, family_law(alg, family)) != expected)
      fail(ErrorCode::InternalError, "Miyamoto involution differs from -r_e");
    out.push_back(axis);
  }
  return out;
}

/// B_x = <x, x^-, z1> for the family axis x of e, checked against
/// 3C(alpha) through the basis map (a, b, c) -> (x, x^-, z1).
template <class S>
IsomorphismCheck b_x_is_3c(const Algebra<S>& alg, const Vector<S>& e) {
  const bool cover = alg.kind() == AlgebraKind::ExceptionalCover;
  const Vector<S> x = family_axis(alg, e, cover ? Family::Exceptional : Family::A);
  const Matrix<S> map = columns(std::vector<Vector<S>>{x, sigma(alg, x), alg.basis(alg.z1())}, alg.dim());
  return is_embedding(matsuo_3c(alg.field(), alg.alpha()), alg, map);
}

template <class S>
struct FrobeniusForm {
  Matrix<S> gram;
  std::vector<Vector<S>> radical;
  bool associative = false;  // (a, bc) = (ab, c) on all basis triples
};

template <class S>
S form_value(const Matrix<S>& gram, const Vector<S>& u, const Vector<S>& v) {
  return (u.transpose() * gram * v)(0, 0);
}

template <class S>
bool is_associative_form(const Algebra<S>& alg, const Matrix<S>& gram) {
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vector<S> ij = multiply(alg, alg.basis(i), alg.basis(j));
      for (Index k = 0; k < alg.dim(); ++k) {
        const Vector<S> jk = multiply(alg, alg.basis(j), alg.basis(k));
        if (form_value(gram, alg.basis(i), jk) != form_value(gram, ij, alg.basis(k))) return false;
      }
    }
  return true;
}

/// The Frobenius form of S(b,alpha):
///   (e,f) = (alpha+1)(2-alpha) b(e,f), (z1,z1) = alpha+1, (z2,z2) = 2-alpha,
///   E orthogonal to z1, z2 and (z1,z2) = 0;
/// and of the exceptional cover: (e,f) = 3 b(e,f), (z1,z1) = 1, n in the radical.
template <class S>
FrobeniusForm<S> frobenius(const Algebra<S>& alg) {
  const Field<S>& f = alg.field();
  const Index k = alg.dim_e();
  FrobeniusForm<S> out;
  out.gram = zeros(f, alg.dim(), alg.dim());
  if (alg.kind() == AlgebraKind::SplitSpin) {
    const S a = alg.alpha();
    out.gram.topLeftCorner(k, k) = (a + f.one()) * (f(2) - a) * alg.space().gram();
    out.gram(alg.z1(), alg.z1()) = a + f.one();
    out.gram(alg.z2(), alg.z2()) = f(2) - a;
  } else if (alg.kind() == AlgebraKind::ExceptionalCover) {
    out.gram.topLeftCorner(k, k) = f(3) * alg.space().gram();
    out.gram(alg.z1(), alg.z1()) = f.one();
  } else {
    fail(ErrorCode::WrongAlgebraKind, "Frobenius form is defined for S(b,alpha) and its exceptional cover");
  }
  out.gram = normalized(f, out.gram);
  out.associative = is_associative_form(alg, out.gram);
  for (auto& v : kernel(out.gram)) out.radical.push_back(normalized(f, v));
  return out;
}

/// For dim E = 1: the Frobenius Gram matrix in the basis (x, x^-, z1) is
/// invariant under all permutations of that basis.
template <class S>
bool frobenius_s3_invariant(const Algebra<S>& alg, const Vector<S>& e) {
  if (alg.kind() != AlgebraKind::SplitSpin || alg.dim_e() != 1)
    fail(ErrorCode::WrongAlgebraKind, "S3 invariance applies to S(b,alpha) with dim E = 1");
  const Vector<S> x = family_axis(alg, e, Family::A);
  const Matrix<S> basis = columns(std::vector<Vector<S>>{x, sigma(alg, x), alg.basis(alg.z1())}, alg.dim());
  const Matrix<S> g = basis.transpose() * frobenius(alg).gram * basis;
  std::array<Index, 3> perm{0, 1, 2};
  do {
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        if (g(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != g(i, j)) return false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return true;
}

enum class RadicalKind { FormRadical, BaricMinusOne, BaricTwo, Cover };

inline std::string_view to_string(RadicalKind kind) {
  switch (kind) {
    case RadicalKind::FormRadical: return "FormRadical";
    case RadicalKind::BaricMinusOne: return "BaricMinusOne";
    case RadicalKind::BaricTwo: return "BaricTwo";
    case RadicalKind::Cover: return "Cover";
  }
  return "FormRadical";
}

template <class S>
struct AlgebraRadical {
  RadicalKind kind = RadicalKind::FormRadical;
  std::vector<Vector<S>> basis;
  bool is_ideal = false;
};

/// Radical of S(b,alpha): the lift of E^perp when alpha is not -1 or 2. For
/// alpha = -1 (resp. 2) the algebra is baric and the rank-one Frobenius form
/// has radical E + F z1 (resp. E + F z2); that space is returned with the
/// baric tag. For the exceptional cover: E^perp + F n.
template <class S>
AlgebraRadical<S> algebra_radical(const Algebra<S>& alg) {
  const Field<S>& f = alg.field();
  AlgebraRadical<S> out;
  if (alg.kind() == AlgebraKind::SplitSpin) {
    const S a = alg.alpha();
    if (a == -f.one() || a == f(2)) {
      out.kind = a == -f.one() ? RadicalKind::BaricMinusOne : RadicalKind::BaricTwo;
      for (Index i = 0; i < alg.dim_e(); ++i) out.basis.push_back(alg.basis(i));
      out.basis.push_back(alg.basis(out.kind == RadicalKind::BaricMinusOne ? alg.z1() : alg.z2()));
    } else {
      for (const auto& v : form_radical_space(alg.space())) out.basis.push_back(lift(alg, v));
    }
  } else if (alg.kind() == AlgebraKind::ExceptionalCover) {
    if (f.characteristic() == 2 || f.characteristic() == 3)
      fail(ErrorCode::BadCharacteristic, "exceptional cover radical needs characteristic not 2 or 3");
    out.kind = RadicalKind::Cover;
    for (const auto& v : form_radical_space(alg.space())) out.basis.push_back(lift(alg, v));
    out.basis.push_back(alg.basis(alg.n()));
  } else {
    fail(ErrorCode::WrongAlgebraKind, "radical is defined for S(b,alpha) and its exceptional cover");
  }
  out.is_ideal = is_ideal(alg, out.basis);
  return out;
}

enum class SimplicityReason { Simple, DegenerateForm, BaricMinusOne, BaricTwo };

inline std::string_view to_string(SimplicityReason r) {
  switch (r) {
    case SimplicityReason::Simple: return "Simple";
    case SimplicityReason::DegenerateForm: return "DegenerateForm";
    case SimplicityReason::BaricMinusOne: return "BaricMinusOne";
    case SimplicityReason::BaricTwo: return "BaricTwo";
  }
  return "Simple";
}

struct SimplicityVerdict {
  bool simple = false;
  SimplicityReason reason = SimplicityReason::Simple;
};

/// S(b,alpha) is simple iff b is non-degenerate and alpha is not -1 or 2,
/// valid when char != 2 and E is spanned by norm-one vectors. `evidence`
/// must certify the spanning hypothesis.
template <class S>
SimplicityVerdict is_simple(const Algebra<S>& alg, const std::optional<NormOneSearch<S>>& evidence) {
  const Field<S>& f = alg.field();
  if (alg.kind() != AlgebraKind::SplitSpin) fail(ErrorCode::WrongAlgebraKind, "simplicity criterion applies to S(b,alpha)");
  if (f.characteristic() == 2) fail(ErrorCode::CharTwo, "simplicity criterion needs characteristic != 2");
  if (!evidence || !evidence->spans)
    fail(ErrorCode::UnverifiedSpanHypothesis, "no evidence that E is spanned by norm-one vectors");
  for (const auto& e : evidence->vectors)
    if (e.size() != alg.dim_e() || norm(alg.space(), e) != f.one())
      fail(ErrorCode::UnverifiedSpanHypothesis, "evidence contains a vector that is not norm one in this space");
  if (static_cast<Index>(span_basis(evidence->vectors, alg.dim_e()).size()) != alg.dim_e())
    fail(ErrorCode::UnverifiedSpanHypothesis, "evidence vectors do not span E");

  const S a = alg.alpha();
  if (a == -f.one()) return {false, SimplicityReason::BaricMinusOne};
  if (a == f(2)) return {false, SimplicityReason::BaricTwo};
  if (is_degenerate(alg.space())) return {false, SimplicityReason::DegenerateForm};
  return {true, SimplicityReason::Simple};
}

}  // namespace ssf
