#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssf/exceptional.hpp"
#include "ssf/two_gen.hpp"

using namespace ssf;

namespace {

TwoGen<Rational> two_gen_q(const Rational& a, const Rational& mu) {
  return build_two_gen(TwoGenConfig<Rational>{Field<Rational>(), a, mu, Variant::SplitSpin});
}

// Order of a 2x2 matrix over F_p by plain repeated multiplication.
std::uint64_t naive_order(const Matrix<ModP>& m, const Field<ModP>& f) {
  Matrix<ModP> power = m;
  for (std::uint64_t k = 1;; ++k) {
    if (power == identity(f, 2)) return k;
    power = normalized(f, Matrix<ModP>(power * m));
  }
}

}  // namespace

TEST_CASE("two-generated construction") {
  const Field<Rational> q;
  const auto tg = two_gen_q(q(3), q(2));
  CHECK(tg.algebra.dim() == 4);
  CHECK(tg.axes_verified);
  const auto cover = build_two_gen(TwoGenConfig<Rational>{q, std::nullopt, q(2), Variant::ExceptionalCover});
  CHECK(cover.axes_verified);
  CHECK(cover.algebra.kind() == AlgebraKind::ExceptionalCover);
  CHECK_THROWS_AS(two_gen_q(q(1, 2), q(2)), Error);
  CHECK_THROWS_AS(two_gen_q(q(0), q(2)), Error);
  CHECK_THROWS_AS(build_two_gen(TwoGenConfig<Rational>{q, std::nullopt, q(2), Variant::SplitSpin}), Error);
  const Field<ModP> f3(3);
  CHECK_THROWS_AS(build_two_gen(TwoGenConfig<ModP>{f3, std::nullopt, f3(2), Variant::ExceptionalCover}), Error);
}

TEST_CASE("mu = 1 collapses the algebra generated by x and y") {
  const Field<Rational> q;
  for (long a : {3L, -3L, 5L}) {
    const auto tg = two_gen_q(q(a), q(1));
    CHECK(multiply(tg.algebra, tg.x, tg.y) == q(1, 2) * (tg.x + tg.y));
    CHECK(subalgebra(tg.algebra, {tg.x, tg.y}).algebra.dim() == 2);
    CHECK_THROWS_AS(yabe_data(tg), Error);
  }
}

TEST_CASE("Yabe basis") {
  const Field<Rational> q;
  const auto tg = two_gen_q(q(3), q(2));
  const auto y = yabe_data(tg);
  CHECK(y.delta == q(-5));
  CHECK(y.q == q(3) * unit_element(tg.algebra));
  CHECK(y.spans_algebra);
  CHECK(y.a_minus1_formula_ok);
  REQUIRE(y.yabe_algebra);
  CHECK(y.yabe_algebra->labels() == std::vector<std::string>{"a0", "a1", "a_minus1", "q"});
  // a0 is idempotent in the new basis too.
  CHECK(y.yabe_algebra->left_mult(0).col(0) == unit_vector(q, 4, 0));

  const auto cover = build_two_gen(TwoGenConfig<Rational>{q, std::nullopt, q(2), Variant::ExceptionalCover});
  const auto yc = yabe_data(cover);
  CHECK(yc.q == make_element(cover.algebra, zero_vector(q, 2), q(0), q(-1, 4)));
  CHECK(yc.spans_algebra);
  CHECK(yc.a_minus1_formula_ok);
  CHECK_THROWS_AS(yabe_data(two_gen_q(q(-1), q(2))), Error);
}

TEST_CASE("Yabe basis spans for generic parameters") {
  const Field<ModP> f(11);
  for (std::uint64_t a = 2; a < 11; ++a)
    for (std::uint64_t m = 0; m < 11; ++m) {
      const ModP alpha = f.element(a), mu = f.element(m);
      if (alpha == f(1, 2) || alpha == f(-1) || mu == f(1)) continue;
      const auto tg = build_two_gen(TwoGenConfig<ModP>{f, alpha, mu, Variant::SplitSpin});
      const auto y = yabe_data(tg);
      CHECK(y.spans_algebra);
      CHECK(y.a_minus1_formula_ok);
      CHECK(y.delta == f(-2) * mu - f(1));
      CHECK(subalgebra(tg.algebra, {tg.x, tg.y}).algebra.dim() == 4);
    }
}

TEST_CASE("rho") {
  const Field<Rational> q;
  Matrix<Rational> r0(2, 2);
  r0 << q(0), q(-1), q(1), q(0);
  CHECK(rho(q, q(0)) == r0);
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 20; ++t) {
    const Rational mu(d(rng), 1 + t);
    const Matrix<Rational> r = rho(q, mu);
    CHECK(r(0, 0) * r(1, 1) - r(0, 1) * r(1, 0) == q(1));
    CHECK(r.trace() == q(2) * mu);
    if (mu == q(1) || mu == q(-1)) continue;
    // theta tau_x from the Miyamoto involution of x restricted to E
    const auto tg = two_gen_q(q(3), mu);
    const auto tau = miyamoto(tg.algebra, tg.x, family_law(tg.algebra, Family::A));
    Matrix<Rational> theta(2, 2);
    theta << q(0), q(1), q(1), q(0);
    CHECK(rho_from_involutions(q, Matrix<Rational>(tau.topLeftCorner(2, 2)), theta) == r);
  }
}

TEST_CASE("rho order") {
  const Field<Rational> q;
  CHECK(rho_order(q, q(-1, 2)).n == 3);
  CHECK(rho_order(q, q(0)).n == 4);
  CHECK(rho_order(q, q(1, 2)).n == 6);
  for (const Rational& mu : {q(1), q(-1), q(2), q(1, 3), q(-7, 5)})
    CHECK(rho_order(q, mu).kind == OrderKind::InfiniteCertified);
  for (const Rational& mu : {q(-1, 2), q(0), q(1, 2)}) {
    const auto n = rho_order(q, mu).n;
    CHECK(is_identity(mat_pow(rho(q, mu), n)));
    for (std::uint64_t k = 1; k < n; ++k) CHECK_FALSE(is_identity(mat_pow(rho(q, mu), k)));
  }

  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    const Field<ModP> f(p);
    for (std::uint64_t m = 0; m < p; ++m) {
      const ModP mu = f.element(m);
      const auto r = rho_order(f, mu);
      REQUIRE(r.kind == OrderKind::Finite);
      CHECK(r.n == naive_order(rho(f, mu), f));
    }
  }
  const Field<ModP> f5(5), f7(7);
  CHECK(rho_order(f5, f5(2)).n == 3);
  CHECK(rho_order(f7, f7(1)).n == 7);
  CHECK(rho_order(f5, f5(-1)).n == 10);
  CHECK(rho_order(Field<ModP>(101), Field<ModP>(101)(5), 2).kind == OrderKind::ExceedsCap);
}

TEST_CASE("axets") {
  const Field<Rational> q;
  const auto third = axet(two_gen_q(q(3), q(-1, 2)));
  CHECK(third.size == 3);
  CHECK(third.split == OrbitSplit::Single);
  CHECK(third.d_hat_index == 1);
  CHECK(third.consistent);
  const auto square = axet(two_gen_q(q(3), q(0)));
  CHECK(square.size == 4);
  CHECK(square.split == OrbitSplit::TwoHalves);
  CHECK(square.d_hat_index == 2);
  CHECK(square.consistent);
  CHECK(axet(two_gen_q(q(3), q(1, 2))).size == 6);
  const auto inf = axet(two_gen_q(q(3), q(2)), 64);
  CHECK(inf.size_kind == OrderKind::InfiniteCertified);
  CHECK(inf.cap_exceeded);

  const Field<ModP> f7(7), f5(5);
  const auto seven = axet(build_two_gen(TwoGenConfig<ModP>{f7, f7(3), f7(1), Variant::SplitSpin}));
  CHECK(seven.size == 7);
  CHECK(seven.split == OrbitSplit::Single);
  CHECK(seven.d_hat_index == 1);
  const auto ten = axet(build_two_gen(TwoGenConfig<ModP>{f5, f5(2), f5(-1), Variant::SplitSpin}));
  CHECK(ten.size == 10);
  CHECK(ten.split == OrbitSplit::TwoHalves);
  CHECK(ten.consistent);
  // the cover shares E and the involutions -r_e
  const auto cover = axet(build_two_gen(TwoGenConfig<ModP>{f5, std::nullopt, f5(2), Variant::ExceptionalCover}));
  CHECK(cover.size == 3);
}

TEST_CASE("axet invariants over small fields") {
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    const Field<ModP> f(p);
    for (std::uint64_t m = 0; m < p; ++m) {
      const auto tg = build_two_gen(TwoGenConfig<ModP>{f, f(3) == f(1, 2) ? f(4) : f(3), f.element(m), Variant::SplitSpin});
      const auto x = axet(tg);
      REQUIRE(x.size_kind == OrderKind::Finite);
      CHECK(x.consistent);
      CHECK(x.size == x.orbit.size());
      // every member is a norm-one vector and -r_e maps X to itself
      const QuadraticSpace<ModP>& s = tg.algebra.space();
      for (const auto& v : x.orbit) {
        CHECK(norm(s, v) == f.one());
        const Matrix<ModP> t = negated_reflection(s, v);
        CHECK(t * v == v);
        for (const auto& w : x.orbit) CHECK(detail::contains(x.orbit, Vector<ModP>(normalized(f, Vector<ModP>(t * w)))));
      }
    }
  }
}

TEST_CASE("cover report") {
  const Field<Rational> q;
  Matrix<Rational> id(2, 2), deg(2, 2);
  id << q(1), q(0), q(0), q(1);
  deg << q(1), q(1), q(1), q(1);
  const auto r = verify_cover(QuadraticSpace<Rational>(q, id));
  CHECK(r.ok());
  CHECK(r.family_samples > 0);
  REQUIRE(r.radical_basis.size() == 1);
  CHECK(r.radical_basis[0] == unit_vector(q, 4, 3));

  const auto d = verify_cover(QuadraticSpace<Rational>(q, deg));
  CHECK(d.ok());
  Vector<Rational> lifted(4);
  lifted << q(1), q(-1), q(0), q(0);
  CHECK(same_span<Rational>(d.radical_basis, {lifted, unit_vector(q, 4, 3)}, 4));
  const Field<ModP> f3(3);
  Matrix<ModP> g3(1, 1);
  g3(0, 0) = f3(1);
  CHECK_THROWS_AS(verify_cover(QuadraticSpace<ModP>(f3, g3)), Error);
}

TEST_CASE("cover automorphisms") {
  const Field<Rational> q;
  Matrix<Rational> id(2, 2);
  id << q(1), q(0), q(0), q(1);
  const QuadraticSpace<Rational> s(q, id);
  const auto alg = build_exceptional(s);
  CHECK(cover_aut_membership(s, extend_from_e(alg, negated_reflection(s, unit_vector(q, 2, 0)))));
  Matrix<Rational> scale_n = identity(q, 4);
  scale_n(3, 3) = q(2);
  CHECK_FALSE(cover_aut_membership(s, scale_n));
  const QuadraticSpace<Rational> zero(q, zeros(q, 2, 2));
  CHECK(cover_aut_membership(zero, scale_n));
}

TEST_CASE("subspaces W give sub-covers") {
  const Field<Rational> q;
  Matrix<Rational> g(3, 3);
  g << q(1), q(2), q(0), q(2), q(-1), q(1), q(0), q(1), q(3);
  const QuadraticSpace<Rational> s(q, g);
  const auto alg = build_exceptional(s);
  Vector<Rational> w(3);
  w << q(1), q(1), q(-2);
  const auto sub = subalgebra(alg, {lift(alg, w), alg.basis(alg.z1()), alg.basis(alg.n())});
  CHECK(sub.algebra.dim() == 3);
  Matrix<Rational> gw(1, 1);
  gw(0, 0) = norm(s, w);
  const auto small = build_exceptional(QuadraticSpace<Rational>(q, gw));
  const Matrix<Rational> map = columns<Rational>({lift(alg, w), alg.basis(alg.z1()), alg.basis(alg.n())}, 5);
  CHECK(is_embedding(small, alg, map).ok);
}
