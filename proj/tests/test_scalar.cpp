#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "ssf/linalg.hpp"

using namespace ssf;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/4").to_string() == "3/2");
  CHECK(Rational::parse("-3").to_string() == "-3/1");
  CHECK(Rational::parse(" 0/5 ").to_string() == "0/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
}

TEST_CASE("field descriptors") {
  CHECK(FieldDescriptor::rational().to_string() == "Q");
  CHECK(FieldDescriptor::prime(7).to_string() == "F_7");
  CHECK_THROWS_AS(FieldDescriptor::prime(9), Error);
  CHECK_THROWS_AS(FieldDescriptor::prime(1), Error);
  CHECK_THROWS_AS(FieldDescriptor::prime(2147483659ULL), Error);
  CHECK(FieldDescriptor::prime(2).characteristic() == 2);
}

TEST_CASE("mod p arithmetic") {
  const Field<ModP> f(7);
  CHECK(f(1, 2) == f(4));
  CHECK(f(-1) == f(6));
  CHECK((f(3) * f(5)).residue() == 1);
  CHECK(f(3).inverse() == f(5));
  CHECK_THROWS_AS(f(1, 7), Error);
  CHECK_THROWS_AS(f(0).inverse(), Error);
  CHECK_THROWS_AS(f(1) + Field<ModP>(5)(1), Error);
  // Unbound literals adopt the modulus of the other operand.
  CHECK((ModP(1) + f(6)).residue() == 0);
  CHECK(ModP(8) == f(1));
  CHECK(f.parse("3/2") == f(5));
  CHECK(f.parse("-1") == f(6));
}

TEST_CASE("square roots") {
  const Field<Rational> q;
  CHECK(*q.sqrt(Rational(9, 4)) * *q.sqrt(Rational(9, 4)) == Rational(9, 4));
  CHECK_FALSE(q.sqrt(Rational(2)));
  CHECK_FALSE(q.sqrt(Rational(-1)));
  for (std::uint32_t p : {3U, 5U, 13U, 17U, 41U}) {
    const Field<ModP> f(p);
    int squares = 0;
    for (std::uint64_t i = 0; i < p; ++i) {
      const ModP x = f.element(i);
      const auto r = f.sqrt(x);
      if (r) {
        CHECK(*r * *r == x);
        ++squares;
      }
    }
    CHECK(squares == static_cast<int>((p + 1) / 2));
  }
}

namespace {

template <class S>
Matrix<S> random_matrix(const Field<S>& f, Index r, Index c, std::mt19937_64& rng, int zero_bias) {
  std::uniform_int_distribution<long> d(-4, 4);
  std::uniform_int_distribution<int> z(0, 9);
  Matrix<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = z(rng) < zero_bias ? f.zero() : f(d(rng));
  return m;
}

template <class S>
void linalg_properties(const Field<S>& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Index> dim(1, 5);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = dim(rng);
    const Index c = dim(rng);
    const Matrix<S> m = random_matrix(f, r, c, rng, trial % 7);
    const auto red = rref(m);
    CHECK(rref(red.reduced).reduced == red.reduced);
    const auto ker = kernel(m);
    CHECK(static_cast<Index>(ker.size()) + red.rank() == c);
    for (const auto& v : ker) CHECK(is_zero(normalized(f, Matrix<S>(m * v))));
    if (!ker.empty()) CHECK(rank(columns(ker, c)) == static_cast<Index>(ker.size()));

    const Vector<S> x0 = random_matrix(f, c, 1, rng, 2).col(0);
    const Vector<S> rhs = normalized(f, Matrix<S>(m * x0)).col(0);
    const auto sol = solve_linear(m, rhs);
    REQUIRE(sol);
    CHECK(normalized(f, Matrix<S>(m * *sol.x)) == rhs);

    if (r == c) {
      const auto inv = inverse(m);
      CHECK(inv.has_value() == (red.rank() == r));
      if (inv) CHECK(is_identity(normalized(f, Matrix<S>(m * *inv))));
    }
  }
}

}  // namespace

TEST_CASE("linear algebra properties over Q") { linalg_properties(Field<Rational>(), 11); }
TEST_CASE("linear algebra properties over F_5") { linalg_properties(Field<ModP>(5), 12); }
TEST_CASE("linear algebra properties over F_101") { linalg_properties(Field<ModP>(101), 13); }

TEST_CASE("inconsistent systems report the offending row") {
  const Field<Rational> q;
  Matrix<Rational> m(2, 2);
  m << q(1), q(1), q(2), q(2);
  Vector<Rational> v(2);
  v << q(1), q(3);
  const auto sol = solve_linear(m, v);
  CHECK_FALSE(sol);
  CHECK(sol.inconsistent_row.has_value());
}

TEST_CASE("matrix powers") {
  const Field<ModP> f(5);
  Matrix<ModP> m(2, 2);
  m << f(4), f(4), f(1), f(0);
  CHECK(is_identity(mat_pow(m, 3)));
  CHECK_FALSE(is_identity(mat_pow(m, 1)));
  CHECK(is_identity(mat_pow(m, 0)));

  const Field<Rational> q;
  Matrix<Rational> r(2, 2);
  r << q(1), q(1), q(0), q(1);
  CHECK(mat_pow(r, 10)(0, 1) == q(10));
}

TEST_CASE("canonical spans") {
  const Field<Rational> q;
  Vector<Rational> a(3), b(3), c(3);
  a << q(1), q(2), q(0);
  b << q(0), q(1), q(1);
  c << q(1), q(3), q(1);
  CHECK(same_span<Rational>({a, b}, {c, b}, 3));
  CHECK(same_span<Rational>({a, b, c}, {a, c}, 3));
  CHECK_FALSE(same_span<Rational>({a}, {b}, 3));
  CHECK(in_span<Rational>({a, b}, c));
  CHECK_FALSE(in_span<Rational>({a}, c));
  CHECK(span_basis<Rational>({a, b, c}, 3).size() == 2);
}
