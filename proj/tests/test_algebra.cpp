#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ssf/idempotents.hpp"

using namespace ssf;

namespace {

// Direct formula for (u + g1 z1 + d1 z2)(v + g2 z1 + d2 z2), written out
// without structure constants.
template <class S>
Vector<S> spin_product(const Field<S>& f, const Matrix<S>& gram, const S& a, const Vector<S>& x, const Vector<S>& y) {
  const Index k = gram.rows();
  const Vector<S> u = x.head(k), v = y.head(k);
  const S g1 = x(k), d1 = x(k + 1), g2 = y(k), d2 = y(k + 1);
  const S buv = (u.transpose() * gram * v)(0, 0);
  Vector<S> out(k + 2);
  out.head(k) = (g1 * a + d1 * (f.one() - a)) * v + (g2 * a + d2 * (f.one() - a)) * u;
  out(k) = g1 * g2 - buv * a * (a - f(2));
  out(k + 1) = d1 * d2 - buv * (a - f.one()) * (a + f.one());
  return normalized(f, out);
}

template <class S>
Vector<S> cover_product(const Field<S>& f, const Matrix<S>& gram, const Vector<S>& x, const Vector<S>& y) {
  const Index k = gram.rows();
  const Vector<S> u = x.head(k), v = y.head(k);
  const S g1 = x(k), g2 = y(k);
  const S buv = (u.transpose() * gram * v)(0, 0);
  Vector<S> out(k + 2);
  out.head(k) = -g1 * v - g2 * u;
  out(k) = g1 * g2 - f(3) * buv;
  out(k + 1) = f(2) * buv;
  return normalized(f, out);
}

template <class S>
Vector<S> random_vector(const Field<S>& f, Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-5, 5);
  Vector<S> v(n);
  for (Index i = 0; i < n; ++i) v(i) = f(d(rng));
  return v;
}

template <class S>
Matrix<S> random_gram(const Field<S>& f, Index n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  Matrix<S> g(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) g(i, j) = g(j, i) = f(d(rng));
  return g;
}

Matrix<Rational> gram1(long v) {
  Matrix<Rational> g(1, 1);
  g(0, 0) = Rational(v);
  return g;
}

Matrix<ModP> gram1(const Field<ModP>& f, long v) {
  Matrix<ModP> g(1, 1);
  g(0, 0) = f(v);
  return g;
}

}  // namespace

TEST_CASE("quadratic space validation") {
  const Field<Rational> q;
  Matrix<Rational> bad(2, 2);
  bad << q(1), q(2), q(3), q(1);
  CHECK_THROWS_AS(QuadraticSpace<Rational>(q, bad), Error);
  CHECK_THROWS_AS(QuadraticSpace<Rational>(q, Matrix<Rational>(0, 0)), Error);
  Matrix<Rational> rect(1, 2);
  rect << q(1), q(0);
  CHECK_THROWS_AS(QuadraticSpace<Rational>(q, rect), Error);

  Matrix<Rational> g(2, 2);
  g << q(1), q(1), q(1), q(1);
  const QuadraticSpace<Rational> s(q, g);
  CHECK(is_degenerate(s));
  REQUIRE(form_radical_space(s).size() == 1);
  CHECK(norm(s, form_radical_space(s)[0]) == q(0));
  Vector<Rational> iso(2);
  iso << q(1), q(-1);
  CHECK_THROWS_AS(reflection(s, iso), Error);
}

TEST_CASE("reflections are isometric involutions") {
  std::mt19937_64 rng(3);
  const Field<Rational> q;
  for (int t = 0; t < 50; ++t) {
    const QuadraticSpace<Rational> s(q, random_gram(q, 3, rng));
    const Vector<Rational> e = random_vector(q, 3, rng);
    if (is_zero(norm(s, e))) continue;
    const Matrix<Rational> r = reflection(s, e);
    CHECK(is_identity(Matrix<Rational>(r * r)));
    CHECK(r.transpose() * s.gram() * r == s.gram());
    CHECK(r * e == -e);
  }
}

TEST_CASE("norm-one search") {
  const Field<ModP> f(5);
  Matrix<ModP> g(2, 2);
  g << f(1), f(0), f(0), f(1);
  const auto found = find_norm_one(QuadraticSpace<ModP>(f, g));
  CHECK(found.status == SearchStatus::Exhaustive);
  // x^2 + y^2 = 1 over F_5 has p - (-1/p) = 4 solutions.
  CHECK(found.vectors.size() == 4);
  CHECK(found.spans);

  const Field<Rational> q;
  Matrix<Rational> h(2, 2);
  h << q(4), q(0), q(0), q(9);
  const auto sampled = find_norm_one(QuadraticSpace<Rational>(q, h), 1000, 5, 3);
  CHECK(sampled.status == SearchStatus::Sampled);
  CHECK(sampled.spans);
  CHECK(sampled.vectors.size() >= 3);
  for (const auto& e : sampled.vectors) CHECK(norm(QuadraticSpace<Rational>(q, h), e) == q(1));

  // 2x^2 = 1 has no rational solution and 2 is not a square.
  const auto none = find_norm_one(QuadraticSpace<Rational>(q, gram1(2)), 200, 1);
  CHECK(none.status == SearchStatus::Unknown);
  CHECK_FALSE(none.spans);
}

TEST_CASE("split spin factor matches the direct product formula") {
  std::mt19937_64 rng(7);
  const Field<Rational> q;
  for (int t = 0; t < 30; ++t) {
    const Index k = 1 + t % 3;
    const QuadraticSpace<Rational> s(q, random_gram(q, k, rng));
    const Rational a(static_cast<long>(t % 9) - 4, 1 + t % 4);
    const auto alg = build_split_spin(s, a);
    CHECK(alg.dim() == k + 2);
    for (int r = 0; r < 5; ++r) {
      const Vector<Rational> x = random_vector(q, k + 2, rng), y = random_vector(q, k + 2, rng);
      CHECK(multiply(alg, x, y) == spin_product(q, s.gram(), a, x, y));
      CHECK(multiply(alg, x, y) == multiply(alg, y, x));
    }
  }
  const Field<ModP> f(13);
  for (int t = 0; t < 20; ++t) {
    const QuadraticSpace<ModP> s(f, random_gram(f, 2, rng));
    const ModP a = f(t);
    const auto alg = build_split_spin(s, a);
    const Vector<ModP> x = random_vector(f, 4, rng), y = random_vector(f, 4, rng);
    CHECK(multiply(alg, x, y) == spin_product(f, s.gram(), a, x, y));
  }
}

TEST_CASE("exceptional cover matches the direct product formula") {
  std::mt19937_64 rng(8);
  const Field<Rational> q;
  for (int t = 0; t < 20; ++t) {
    const QuadraticSpace<Rational> s(q, random_gram(q, 2, rng));
    const auto alg = build_exceptional(s);
    const Vector<Rational> x = random_vector(q, 4, rng), y = random_vector(q, 4, rng);
    CHECK(multiply(alg, x, y) == cover_product(q, s.gram(), x, y));
  }
}

TEST_CASE("identity elements") {
  const Field<Rational> q;
  const auto alg = build_split_spin(QuadraticSpace<Rational>(q, gram1(1)), Rational(3));
  const auto one = identity_of(alg);
  REQUIRE(one);
  CHECK(*one == unit_element(alg));
  const auto cover = build_exceptional(QuadraticSpace<Rational>(q, gram1(1)));
  CHECK_FALSE(identity_of(cover));
  CHECK_THROWS_AS(unit_element(cover), Error);
}

TEST_CASE("degenerate parameters are recorded, not rejected") {
  const Field<Rational> q;
  const QuadraticSpace<Rational> s(q, gram1(1));
  CHECK(build_split_spin(s, Rational(0)).meta().jordan_special);
  CHECK(build_split_spin(s, Rational(1)).meta().jordan_special);
  CHECK(build_split_spin(s, Rational(1, 2)).meta().jordan_special);
  CHECK_FALSE(build_split_spin(s, Rational(3)).meta().jordan_special);
  CHECK(build_split_spin(s, Rational(3)).meta().warnings.empty());
  const Field<ModP> f2(2);
  CHECK_FALSE(build_split_spin(QuadraticSpace<ModP>(f2, gram1(f2, 1)), f2(1)).meta().warnings.empty());
  CHECK_THROWS_AS(matsuo_3c(f2, f2(1)), Error);
}

TEST_CASE("element length is checked") {
  const Field<Rational> q;
  const auto alg = build_split_spin(QuadraticSpace<Rational>(q, gram1(1)), Rational(3));
  CHECK_THROWS_AS(multiply(alg, Vector<Rational>(Vector<Rational>::Constant(2, q(1))), alg.basis(0)), Error);
}

TEST_CASE("eigendecomposition") {
  const Field<Rational> q;
  const auto alg = build_split_spin(QuadraticSpace<Rational>(q, gram1(1)), Rational(3));
  const auto dec = eigendecompose(alg, alg.basis(alg.z1()), {q(1), q(0), q(3)});
  CHECK(dec.complete);
  CHECK(dec.spaces[0].basis.size() == 1);
  CHECK(dec.spaces[1].basis.size() == 1);
  CHECK(dec.spaces[2].basis.size() == 1);
  CHECK_FALSE(eigendecompose(alg, alg.basis(alg.z1()), {q(1), q(0)}).complete);
  CHECK_THROWS_AS(eigendecompose(alg, alg.basis(alg.z1()), {q(1), q(1)}), Error);
}

TEST_CASE("subalgebras and quotients") {
  const Field<Rational> q;
  Matrix<Rational> g(2, 2);
  g << q(1), q(0), q(0), q(1);
  const auto alg = build_split_spin(QuadraticSpace<Rational>(q, g), Rational(3));
  const auto sub = subalgebra(alg, {alg.basis(0)});
  // e1^2 = -(3 z1 + 8 z2) =: -w; w e1 = -7 e1 but w^2 = 9 z1 + 64 z2 is new.
  CHECK(sub.algebra.dim() == 3);
  CHECK(sub.closure_degree == 4);
  CHECK(subalgebra(alg, {alg.basis(0), alg.basis(1)}).algebra.dim() == 4);
  CHECK_THROWS_AS(subalgebra(alg, {alg.basis(0), alg.basis(1)}, 3), Error);

  const auto cover = build_exceptional(QuadraticSpace<Rational>(q, g));
  const auto quo = quotient(cover, {cover.basis(cover.n())});
  CHECK(quo.algebra.dim() == 3);
  CHECK(quo.algebra.labels() == std::vector<std::string>{"e1", "e2", "z1"});
  CHECK_THROWS_AS(quotient(cover, {cover.basis(0)}), Error);
}

TEST_CASE("permuted algebras and isomorphism checks") {
  const Field<Rational> q;
  const auto alg = build_split_spin(QuadraticSpace<Rational>(q, gram1(2)), Rational(5));
  const auto p = permuted(alg, {2, 0, 1});
  Matrix<Rational> map = zeros(q, 3, 3);
  // old basis vector i goes to the new position holding it
  map(1, 0) = q(1);
  map(2, 1) = q(1);
  map(0, 2) = q(1);
  CHECK(is_isomorphism(alg, p, map).ok);
  CHECK_FALSE(is_isomorphism(alg, alg, map).ok);
  CHECK_FALSE(is_isomorphism(alg, alg, zeros(q, 3, 3)).ok);
}

TEST_CASE("family idempotents") {
  const Field<Rational> q;
  Matrix<Rational> g(2, 2);
  g << q(1), q(1, 2), q(1, 2), q(1);
  const QuadraticSpace<Rational> s(q, g);
  const Rational a(3);
  const auto alg = build_split_spin(s, a);
  const Vector<Rational> e = unit_vector(q, 2, 0);
  const auto xa = family_axis(alg, e, Family::A);
  const auto xb = family_axis(alg, e, Family::B);
  CHECK(is_idempotent(alg, xa));
  CHECK(is_idempotent(alg, xb));
  // 1 - x_a(e) = x_b(-e)
  CHECK(unit_element(alg) - xa == family_axis(alg, Vector<Rational>(-e), Family::B));
  CHECK(classify_idempotent(alg, xa).tag == IdempotentTag::FamilyA);
  CHECK(*classify_idempotent(alg, xa).e == e);
  CHECK(classify_idempotent(alg, xb).tag == IdempotentTag::FamilyB);
  CHECK(classify_idempotent(alg, sigma(alg, xa)).tag == IdempotentTag::FamilyA);
  CHECK(classify_idempotent(alg, unit_element(alg)).tag == IdempotentTag::One);
  CHECK(classify_idempotent(alg, alg.basis(alg.z1())).tag == IdempotentTag::Z1);
  CHECK(classify_idempotent(alg, alg.basis(alg.z2())).tag == IdempotentTag::Z2);
  CHECK_THROWS_AS(classify_idempotent(alg, zero_vector(q, 4)), Error);
  CHECK_THROWS_AS(classify_idempotent(alg, alg.basis(0)), Error);
  CHECK_THROWS_AS(family_axis(alg, Vector<Rational>(q(2) * e), Family::A), Error);
  CHECK_THROWS_AS(family_axis(alg, e, Family::Exceptional), Error);

  const auto cover = build_exceptional(s);
  const auto xe = family_axis(cover, e, Family::Exceptional);
  CHECK(is_idempotent(cover, xe));
  CHECK(classify_idempotent(cover, xe).tag == IdempotentTag::FamilyExc);
  CHECK(classify_idempotent(cover, cover.basis(cover.z1())).tag == IdempotentTag::Z1);
  CHECK_THROWS_AS(family_axis(cover, e, Family::A), Error);
}

// Oracle counts from an exhaustive scan written independently of the library.
TEST_CASE("exhaustive idempotent scans") {
  const Field<ModP> f5(5);
  const QuadraticSpace<ModP> s5(f5, gram1(f5, 1));
  const auto found = enumerate_idempotents_bruteforce(build_split_spin(s5, f5(2)));
  CHECK(found.size() == 7);
  for (const auto& x : found)
    CHECK(classify_idempotent(build_split_spin(s5, f5(2)), x).tag != IdempotentTag::Other);
  CHECK(enumerate_idempotents_bruteforce(build_exceptional(s5)).size() == 3);

  // alpha = 0 over F_3 with b(e,e) = 2 (a non-square): no norm-one vectors,
  // so only z1, z2 and 1.
  const Field<ModP> f3(3);
  const auto only_z = enumerate_idempotents_bruteforce(build_split_spin(QuadraticSpace<ModP>(f3, gram1(f3, 2)), f3(0)));
  REQUIRE(only_z.size() == 3);
  CHECK(only_z[0] == make_element(build_split_spin(QuadraticSpace<ModP>(f3, gram1(f3, 2)), f3(0)),
                                  Vector<ModP>(Vector<ModP>::Constant(1, f3(0))), f3(0), f3(1)));

  CHECK_THROWS_AS(enumerate_idempotents_bruteforce(build_split_spin(s5, f5(2)), 100), Error);
  const Field<Rational> q;
  CHECK_THROWS_AS(enumerate_idempotents_bruteforce(build_split_spin(QuadraticSpace<Rational>(q, gram1(1)), q(3))),
                  Error);
}

TEST_CASE("classification covers every idempotent for generic alpha") {
  for (std::uint32_t p : {5U, 7U, 11U}) {
    const Field<ModP> f(p);
    Matrix<ModP> g(2, 2);
    g << f(1), f(2), f(2), f(3);
    const QuadraticSpace<ModP> s(f, g);
    const auto norm_one = find_norm_one(s).vectors.size();
    for (std::uint64_t ai = 2; ai < p; ++ai) {
      const ModP a = f.element(ai);
      if (a == f(1, 2)) continue;
      const auto alg = build_split_spin(s, a);
      const auto found = enumerate_idempotents_bruteforce(alg);
      // 1, z1, z2 and two families, each a bijection with norm-one vectors
      CHECK(found.size() == 3 + 2 * norm_one);
      for (const auto& x : found) CHECK(classify_idempotent(alg, x).tag != IdempotentTag::Other);
    }
    if (p > 3) {
      const auto cover = build_exceptional(s);
      const auto found = enumerate_idempotents_bruteforce(cover);
      CHECK(found.size() == 1 + norm_one);
      for (const auto& x : found) CHECK(classify_idempotent(cover, x).tag != IdempotentTag::Other);
    }
  }
}
