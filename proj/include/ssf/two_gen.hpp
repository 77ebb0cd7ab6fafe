#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "ssf/axial.hpp"

namespace ssf {

enum class Variant { SplitSpin, ExceptionalCover };

inline std::string_view to_string(Variant v) { return v == Variant::SplitSpin ? "split_spin" : "cover"; }

template <class S>
struct TwoGenConfig {
  Field<S> field;
  std::optional<S> alpha;  // ignored (forced to -1) for the cover
  S mu;
  Variant variant = Variant::SplitSpin;
};

/// S(b,alpha) or the cover on E = <e, f> with b(e,e) = b(f,f) = 1 and
/// b(e,f) = mu, with the two axes x = axis(e) and y = axis(f).
template <class S>
struct TwoGen {
  Algebra<S> algebra;
  Vector<S> e, f;  // E-coordinates
  Vector<S> x, y;
  S mu;
  Variant variant = Variant::SplitSpin;
  bool axes_verified = false;  // x and y pass the family law
};

template <class S>
Matrix<S> two_gen_gram(const Field<S>& f, const S& mu) {
  Matrix<S> g(2, 2);
  g << f.one(), f.normalize(mu), f.normalize(mu), f.one();
  return g;
}

template <class S>
TwoGen<S> build_two_gen(const TwoGenConfig<S>& cfg) {
  const Field<S>& f = cfg.field;
  const bool cover = cfg.variant == Variant::ExceptionalCover;
  if (f.characteristic() == 2) fail(ErrorCode::CharTwo, "two-generated algebras need characteristic != 2");
  if (cover && f.characteristic() == 3) fail(ErrorCode::BadCharacteristic, "the cover needs characteristic != 3");
  const QuadraticSpace<S> q(f, two_gen_gram(f, cfg.mu));
  std::optional<Algebra<S>> alg;
  if (cover) {
    alg.emplace(build_exceptional(q));
  } else {
    if (!cfg.alpha) fail(ErrorCode::ConfigError, "split spin factor needs alpha");
    const S a = f.normalize(*cfg.alpha);
    if (is_zero(a) || a == f.one() || a == f(1, 2))
      fail(ErrorCode::ExcludedAlpha, "alpha " + a.to_string() + " is in {0, 1, 1/2}");
    alg.emplace(build_split_spin(q, a));
  }
  const Family family = cover ? Family::Exceptional : Family::A;
  const Vector<S> e = unit_vector(f, 2, 0);
  const Vector<S> fv = unit_vector(f, 2, 1);
  TwoGen<S> out{*alg, e, fv, family_axis(*alg, e, family), family_axis(*alg, fv, family), f.normalize(cfg.mu),
                cfg.variant, false};
  const FusionLaw<S> law = family_law(*alg, family);
  out.axes_verified = check_axis(*alg, out.x, law).passes() && check_axis(*alg, out.y, law).passes();
  return out;
}

template <class S>
struct YabeData {
  Vector<S> a0, a1, a_minus1, q;
  S delta;
  bool spans_algebra = false;
  bool a_minus1_formula_ok = false;  // tau_x(y) agrees with the closed form
  /// Products among (a0, a1, a_minus1, q) in that basis; present when the
  /// four elements form a basis.
  std::optional<Algebra<S>> yabe_algebra;
};

/// a0 = x, a1 = y, a_{-1} = y^{tau_x}, and
///   q = alpha(alpha+1)(mu-1)/4 * 1   (split spin, alpha != -1)
///   q = (1-mu)/4 * n                 (cover)
/// with delta = -2 mu - 1.
template <class S>
YabeData<S> yabe_data(const TwoGen<S>& tg) {
  const Algebra<S>& alg = tg.algebra;
  const Field<S>& f = alg.field();
  const bool cover = tg.variant == Variant::ExceptionalCover;
  if (!cover && alg.alpha() == -f.one())
    fail(ErrorCode::SpecialAlpha, "x and y do not generate S(b,-1)");
  if (tg.mu == f.one()) fail(ErrorCode::MuOne, "mu = 1: x and y generate a 2-dimensional subalgebra");

  const Family family = cover ? Family::Exceptional : Family::A;
  YabeData<S> out;
  out.a0 = tg.x;
  out.a1 = tg.y;
  out.a_minus1 = normalized(f, Vector<S>(miyamoto(alg, tg.x, family_law(alg, family)) * tg.y));
  const S half = f(1, 2);
  const Vector<S> e_minus = normalized(f, Vector<S>(half * (f(2) * tg.mu * tg.e - tg.f)));
  if (cover) {
    out.q = make_element(alg, zero_vector(f, 2), f.zero(), S((f.one() - tg.mu) / f(4)));
    out.a_minus1_formula_ok = out.a_minus1 == make_element(alg, e_minus, -half, half);
  } else {
    const S a = alg.alpha();
    out.q = normalized(f, Vector<S>(a * (a + f.one()) * (tg.mu - f.one()) / f(4) * unit_element(alg)));
    out.a_minus1_formula_ok = out.a_minus1 == make_element(alg, e_minus, S(half * a), S(half * (a + f.one())));
  }
  out.delta = f.normalize(-f(2) * tg.mu - f.one());

  const std::vector<Vector<S>> basis{out.a0, out.a1, out.a_minus1, out.q};
  const Matrix<S> m = columns(basis, alg.dim());
  out.spans_algebra = alg.dim() == 4 && rank(m) == 4;
  if (out.spans_algebra) {
    const Matrix<S> inv = *inverse(m);
    std::vector<Matrix<S>> mult;
    for (const auto& u : basis) {
      Matrix<S> l(4, 4);
      for (Index j = 0; j < 4; ++j) l.col(j) = inv * multiply(alg, u, basis[static_cast<std::size_t>(j)]);
      mult.push_back(normalized(f, l));
    }
    out.yabe_algebra.emplace(f, std::vector<std::string>{"a0", "a1", "a_minus1", "q"}, std::move(mult));
  }
  return out;
}

/// Matrix of rho = theta tau_x on E in the basis (e, f), acting on row
/// vectors: [[2 mu, -1], [1, 0]].
template <class S>
Matrix<S> rho(const Field<S>& f, const S& mu) {
  Matrix<S> r(2, 2);
  r << f(2) * mu, -f.one(), f.one(), f.zero();
  return normalized(f, r);
}

/// theta tau_x as a row-action matrix, from the column matrices of tau_x and
/// theta on E: (T_x Theta)^T.
template <class S>
Matrix<S> rho_from_involutions(const Field<S>& f, const Matrix<S>& tau_x_on_e, const Matrix<S>& theta_on_e) {
  return normalized(f, Matrix<S>((tau_x_on_e * theta_on_e).transpose()));
}

enum class OrderKind { Finite, InfiniteCertified, ExceedsCap };

inline std::string_view to_string(OrderKind k) {
  switch (k) {
    case OrderKind::Finite: return "Finite";
    case OrderKind::InfiniteCertified: return "InfiniteCertified";
    case OrderKind::ExceedsCap: return "ExceedsCap";
  }
  return "Finite";
}

struct OrderResult {
  OrderKind kind = OrderKind::Finite;
  std::uint64_t n = 0;  // the order when kind == Finite
};

/// Order of rho. Over Q a determinant-one 2x2 matrix other than +-I has
/// finite order only for trace -1, 0, 1 (orders 3, 4, 6). Over F_p, mu = 1
/// and mu = -1 give p and 2p; otherwise powers are taken up to `cap`
/// (0 means 2p^2, beyond every possible order).
template <class S>
OrderResult rho_order(const Field<S>& f, const S& mu_in, std::uint64_t cap = 0) {
  const S mu = f.normalize(mu_in);
  const S trace = f(2) * mu;
  if constexpr (std::is_same_v<S, Rational>) {
    (void)cap;
    if (trace == f(-1)) return {OrderKind::Finite, 3};
    if (is_zero(trace)) return {OrderKind::Finite, 4};
    if (trace == f(1)) return {OrderKind::Finite, 6};
    return {OrderKind::InfiniteCertified, 0};
  } else {
    const std::uint64_t p = f.p();
    if (mu == f.one()) return {OrderKind::Finite, p};
    if (mu == -f.one()) return {OrderKind::Finite, 2 * p};
    if (cap == 0) cap = 2 * p * p;
    const Matrix<S> r = rho(f, mu);
    Matrix<S> power = r;
    for (std::uint64_t k = 1; k <= cap; ++k) {
      if (is_identity(power)) return {OrderKind::Finite, k};
      power = normalized(f, Matrix<S>(power * r));
    }
    return {OrderKind::ExceedsCap, 0};
  }
}

inline constexpr std::size_t kDefaultAxetCap = 1024;

enum class OrbitSplit { Single, TwoHalves };

inline std::string_view to_string(OrbitSplit s) { return s == OrbitSplit::Single ? "single" : "two_halves"; }

template <class S>
struct AxetResult {
  OrderKind size_kind = OrderKind::Finite;
  std::uint64_t size = 0;           // |X| when finite
  std::vector<Vector<S>> orbit;     // E-vectors of the axes found (truncated at the cap)
  bool cap_exceeded = false;
  std::optional<OrbitSplit> split;  // finite case only
  std::optional<int> d_hat_index;   // [D^ : D], finite case only
  std::optional<std::uint64_t> d_order;
  OrderResult rho;
  bool consistent = false;  // |X| = |rho| and the parity rule, when finite
};

namespace detail {

template <class T>
bool contains(const std::vector<T>& xs, const T& x) {
  for (const auto& y : xs)
    if (y == x) return true;
  return false;
}

/// Closure of `set` under the maps -r_g for g in the set. Each new vector is
/// pushed through every earlier map and its own map is applied to every
/// earlier vector. Returns false when the set outgrows `cap`.
template <class S>
bool close_axes(const QuadraticSpace<S>& q, std::vector<Vector<S>>& set, std::size_t cap) {
  const Field<S>& f = q.field();
  std::vector<Matrix<S>> maps;
  auto add = [&](Vector<S> w) {
    if (!contains(set, w)) set.push_back(std::move(w));
  };
  for (std::size_t i = 0; i < set.size(); ++i) {
    maps.push_back(negated_reflection(q, set[i]));
    for (std::size_t j = 0; j <= i; ++j) {
      add(normalized(f, Vector<S>(maps[j] * set[i])));
      add(normalized(f, Vector<S>(maps[i] * set[j])));
    }
    if (set.size() > cap) return false;
  }
  return true;
}

/// Orbit of v under the group generated by `gens`.
template <class S>
std::vector<Vector<S>> orbit(const Field<S>& f, const std::vector<Matrix<S>>& gens, const Vector<S>& v) {
  std::vector<Vector<S>> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Vector<S> w = normalized(f, Vector<S>(g * out[i]));
      if (!contains(out, w)) out.push_back(std::move(w));
    }
  return out;
}

/// Elements of the group generated by `gens`, or nullopt past `cap`.
template <class S>
std::optional<std::vector<Matrix<S>>> group_closure(const Field<S>& f, const std::vector<Matrix<S>>& gens,
                                                    std::size_t cap) {
  std::vector<Matrix<S>> out{identity(f, gens.front().rows())};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& g : gens) {
      Matrix<S> h = normalized(f, Matrix<S>(out[i] * g));
      bool seen = false;
      for (const auto& k : out)
        if (k == h) {
          seen = true;
          break;
        }
      if (seen) continue;
      out.push_back(std::move(h));
      if (out.size() > cap) return std::nullopt;
    }
  return out;
}

}  // namespace detail

/// The axet X = x^D + y^D as E-vectors, found by closing {e, f} under the
/// involutions -r_g of the axes already found. The D-orbit split and the
/// index [D^ : D] come from D = <tau_x, tau_y> and theta (e <-> f) directly.
/// Only E and the form matter, so this needs no alpha.
template <class S>
AxetResult<S> axet(const Field<S>& f, const S& mu, std::size_t cap = kDefaultAxetCap) {
  const QuadraticSpace<S> q(f, two_gen_gram(f, mu));
  const Vector<S> e = unit_vector(f, 2, 0);
  const Vector<S> fv = unit_vector(f, 2, 1);
  AxetResult<S> out;
  out.rho = rho_order(f, mu);
  out.orbit = {e, fv};
  if (!detail::close_axes(q, out.orbit, cap)) {
    out.cap_exceeded = true;
    out.size_kind = out.rho.kind == OrderKind::InfiniteCertified ? OrderKind::InfiniteCertified : OrderKind::ExceedsCap;
    return out;
  }
  out.size_kind = OrderKind::Finite;
  out.size = out.orbit.size();

  const std::vector<Matrix<S>> gens{negated_reflection(q, e), negated_reflection(q, fv)};
  const auto x_orbit = detail::orbit(f, gens, e);
  out.split = detail::contains(x_orbit, fv) ? OrbitSplit::Single : OrbitSplit::TwoHalves;
  Matrix<S> theta = zeros(f, 2, 2);
  theta(0, 1) = f.one();
  theta(1, 0) = f.one();
  if (const auto group = detail::group_closure(f, gens, 4 * cap + 4)) {
    out.d_order = group->size();
    out.d_hat_index = detail::contains(*group, theta) ? 1 : 2;
  }
  const bool odd = out.size % 2 == 1;
  out.consistent = out.rho.kind == OrderKind::Finite && out.rho.n == out.size &&
                   (odd == (*out.split == OrbitSplit::Single)) && out.d_hat_index && (odd == (*out.d_hat_index == 1));
  return out;
}

template <class S>
AxetResult<S> axet(const TwoGen<S>& tg, std::size_t cap = kDefaultAxetCap) {
  return axet(tg.algebra.field(), tg.mu, cap);
}

}  // namespace ssf
