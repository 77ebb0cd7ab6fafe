#include "ssf/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "ssf/exceptional.hpp"
#include "ssf/idempotents.hpp"
#include "ssf/two_gen.hpp"

namespace ssf::acceptance {

namespace {

using Rng = std::mt19937_64;

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_ == 0) first_ = what;
    ++failures_;
  }

  /// Runs `body`; a thrown Error counts as one failed check.
  void guard(const std::string& what, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, what + ": " + std::string(to_string(e.code())) + ": " + e.what());
    }
  }

  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  const std::string& first() const { return first_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

template <class S>
std::string describe(const Field<S>& f, Index k, const S& alpha) {
  return f.descriptor().to_string() + " dimE=" + std::to_string(k) + " alpha=" + alpha.to_string();
}

template <class S>
S random_scalar(const Field<S>& f, Rng& rng) {
  if constexpr (std::is_same_v<S, ModP>) {
    return f.element(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
  } else {
    return f(std::uniform_int_distribution<long>(-6, 6)(rng), std::uniform_int_distribution<long>(1, 4)(rng));
  }
}

template <class S>
bool excluded_alpha(const Field<S>& f, const S& a) {
  return is_zero(a) || a == f.one() || a == f(1, 2);
}

/// alpha outside {0, 1, 1/2}, and outside `extra`.
template <class S>
S random_alpha(const Field<S>& f, Rng& rng, const std::vector<S>& extra = {}) {
  while (true) {
    const S a = random_scalar(f, rng);
    if (excluded_alpha(f, a)) continue;
    if (std::find(extra.begin(), extra.end(), a) != extra.end()) continue;
    return a;
  }
}

template <class S>
Matrix<S> random_gram(const Field<S>& f, Index k, Rng& rng, bool unit_first = false) {
  std::uniform_int_distribution<long> d(-3, 3);
  Matrix<S> g(k, k);
  for (Index i = 0; i < k; ++i)
    for (Index j = i; j < k; ++j) g(i, j) = g(j, i) = f(d(rng));
  if (unit_first) g(0, 0) = f.one();
  return normalized(f, g);
}

/// Calls body(field, index) over the five fields used by the suite.
template <class Body>
void for_each_field(int index, Body&& body) {
  switch (index % 5) {
    case 0: body(Field<Rational>(), index); break;
    case 1: body(Field<ModP>(5), index); break;
    case 2: body(Field<ModP>(7), index); break;
    case 3: body(Field<ModP>(11), index); break;
    default: body(Field<ModP>(13), index); break;
  }
}

template <class S>
Matrix<S> sigma_matrix(const Algebra<S>& alg) {
  return extend_from_e(alg, Matrix<S>(-identity(alg.field(), alg.dim_e())));
}

template <class S>
std::vector<Vector<S>> sorted(std::vector<Vector<S>> vs) {
  std::sort(vs.begin(), vs.end(), lex_less<S>);
  return vs;
}

CriterionResult finish(int id, std::string title, const Tally& t, std::string summary) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.checks = t.checks();
  r.failures = t.failures();
  r.passed = t.failures() == 0 && t.checks() > 0;
  r.detail = t.failures() == 0 ? std::move(summary) : t.first();
  return r;
}

// 1. Commutativity, identity 1 = z1 + z2, and the z1 <-> z2, alpha <-> 1 - alpha symmetry.
CriterionResult construction(std::uint64_t seed) {
  Tally t;
  Rng rng(seed);
  for (int i = 0; i < 200; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + (idx / 5) % 4;
      const S a = random_alpha(f, rng);
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng));
        const Algebra<S> alg = build_split_spin(q, a);
        bool comm = true;
        for (Index u = 0; u < alg.dim(); ++u)
          for (Index v = 0; v < alg.dim(); ++v)
            for (Index w = 0; w < alg.dim(); ++w) comm = comm && alg.constant(u, v, w) == alg.constant(v, u, w);
        t.expect(comm, where + ": structure constants not symmetric");

        const Vector<S> one = make_element(alg, zero_vector(f, k), f.one(), f.one());
        bool unit = true;
        for (Index u = 0; u < alg.dim(); ++u) unit = unit && multiply(alg, one, alg.basis(u)) == alg.basis(u);
        t.expect(unit, where + ": z1 + z2 is not the identity");

        std::vector<Index> swap(static_cast<std::size_t>(alg.dim()));
        for (Index u = 0; u < alg.dim(); ++u) swap[static_cast<std::size_t>(u)] = u;
        std::swap(swap[static_cast<std::size_t>(k)], swap[static_cast<std::size_t>(k + 1)]);
        t.expect(same_structure(permuted(alg, swap), build_split_spin(q, S(f.one() - a))),
                 where + ": swapping z1, z2 does not give S(b, 1 - alpha)");
      });
    });
  }
  return finish(1, "construction axioms", t, "200 random configurations");
}

// 2. alpha = 0: z1 annihilates E + F z2. alpha = 1/2 over Q: u = z1 - z2 has
// u^2 = 1, e u = 0 and (e + g u)(f + d u) = (3/4 b(e,f) + g d) 1.
CriterionResult degenerate_alpha(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 2);
  for (int i = 0; i < 20; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + idx % 4;
      const std::string where = describe(f, k, f.zero());
      t.guard(where, [&] {
        const Algebra<S> alg = build_split_spin(QuadraticSpace<S>(f, random_gram(f, k, rng)), f.zero());
        const Vector<S> z1 = alg.basis(alg.z1());
        for (Index u = 0; u < alg.dim(); ++u) {
          if (u == alg.z1()) continue;
          t.expect(is_zero(multiply(alg, z1, alg.basis(u))), where + ": z1 b_" + std::to_string(u) + " != 0");
        }
        t.expect(multiply(alg, z1, z1) == z1, where + ": z1 not idempotent");
        t.expect(alg.meta().jordan_special, where + ": not flagged as a Jordan case");
      });
    });
  }
  const Field<Rational> q;
  for (int i = 0; i < 20; ++i) {
    const Index k = 1 + i % 4;
    const std::string where = describe(q, k, q(1, 2));
    t.guard(where, [&] {
      const QuadraticSpace<Rational> space(q, random_gram(q, k, rng));
      const Algebra<Rational> alg = build_split_spin(space, q(1, 2));
      const Vector<Rational> one = unit_element(alg);
      const Vector<Rational> u = make_element(alg, zero_vector(q, k), q(1), q(-1));
      t.expect(multiply(alg, u, u) == one, where + ": u^2 != 1");
      for (Index j = 0; j < k; ++j) t.expect(is_zero(multiply(alg, alg.basis(j), u)), where + ": e u != 0");
      for (int r = 0; r < 5; ++r) {
        Vector<Rational> e(k), fv(k);
        for (Index j = 0; j < k; ++j) {
          e(j) = random_scalar(q, rng);
          fv(j) = random_scalar(q, rng);
        }
        const Rational g = random_scalar(q, rng), d = random_scalar(q, rng);
        const Vector<Rational> v = lift(alg, e) + g * u;
        const Vector<Rational> w = lift(alg, fv) + d * u;
        const Rational coeff = q(3, 4) * bform(space, e, fv) + g * d;
        t.expect(multiply(alg, v, w) == coeff * one, where + ": spin factor product formula fails");
      }
    });
  }
  return finish(2, "degenerate alpha", t, "alpha = 0 on 20 configs, alpha = 1/2 on 20 rational configs");
}

// 3. Exhaustive idempotent scans against the classification.
CriterionResult idempotent_oracle(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 3);
  std::size_t instances = 0;
  for (std::uint32_t p : {3U, 5U, 7U, 11U, 13U}) {
    const Field<ModP> f(p);
    std::uint64_t size = p * p * p;
    for (Index k = 1; size <= 1000000; ++k, size *= p) {
      const QuadraticSpace<ModP> q(f, random_gram(f, k, rng));
      const auto norm_one = find_norm_one(q, size);
      t.expect(norm_one.status == SearchStatus::Exhaustive, "norm-one search was not exhaustive");
      const std::size_t n = norm_one.vectors.size();

      std::vector<ModP> alphas;
      for (std::uint64_t i = 0; i < p; ++i)
        if (!excluded_alpha(f, f.element(i))) alphas.push_back(f.element(i));
      std::shuffle(alphas.begin(), alphas.end(), rng);
      if (alphas.size() > 2) alphas.resize(2);
      for (const ModP& a : alphas) {
        const std::string where = describe(f, k, a);
        t.guard(where, [&] {
          const Algebra<ModP> alg = build_split_spin(q, a);
          const auto found = enumerate_idempotents_bruteforce(alg);
          std::vector<Vector<ModP>> expected{unit_element(alg), alg.basis(alg.z1()), alg.basis(alg.z2())};
          const ModP half = f(1, 2);
          for (const auto& e : norm_one.vectors) {
            expected.push_back(make_element(alg, Vector<ModP>(half * e), half * a, half * (a + f.one())));
            expected.push_back(make_element(alg, Vector<ModP>(half * e), half * (f(2) - a), half * (f.one() - a)));
          }
          t.expect(found.size() == 3 + 2 * n, where + ": " + std::to_string(found.size()) + " idempotents, expected " +
                                                  std::to_string(3 + 2 * n));
          t.expect(sorted(found) == sorted(expected), where + ": idempotent set differs from the classification");
          std::size_t other = 0;
          for (const auto& x : found) other += classify_idempotent(alg, x).tag == IdempotentTag::Other;
          t.expect(other == 0, where + ": " + std::to_string(other) + " unclassified idempotents");
          ++instances;
        });
      }
      if (p > 3) {
        const std::string where = "cover " + describe(f, k, f(-1));
        t.guard(where, [&] {
          const Algebra<ModP> cover = build_exceptional(q);
          const auto found = enumerate_idempotents_bruteforce(cover);
          std::vector<Vector<ModP>> expected{cover.basis(cover.z1())};
          const ModP half = f(1, 2);
          for (const auto& e : norm_one.vectors) expected.push_back(make_element(cover, Vector<ModP>(half * e), -half, half));
          t.expect(found.size() == 1 + n, where + ": " + std::to_string(found.size()) + " idempotents, expected " +
                                              std::to_string(1 + n));
          t.expect(sorted(found) == sorted(expected), where + ": idempotent set differs from the classification");
          std::size_t other = 0;
          for (const auto& x : found) other += classify_idempotent(cover, x).tag == IdempotentTag::Other;
          t.expect(other == 0, where + ": unclassified idempotents");
          ++instances;
        });
      }
    }
  }
  return finish(3, "idempotent classification", t, std::to_string(instances) + " exhaustive instances");
}

// 4. Fusion laws for z1, z2 and both families.
CriterionResult fusion_suites(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 4);
  std::size_t pairs = 0;
  for (int i = 0; i < 40; ++i) {
    const int field_index = i % 4 == 0 ? 0 : 1 + i % 4;  // Q, F_7, F_11, F_13
    for_each_field(field_index, [&]<class S>(const Field<S>& f, int) {
      const Index k = 1 + (i / 4) % 4;
      const S a = random_alpha(f, rng);
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng, !f.is_finite()));
        const Algebra<S> alg = build_split_spin(q, a);
        const auto r1 = check_axis(alg, alg.basis(alg.z1()), jordan_law(f, a));
        t.expect(r1.passes() && r1.dims == std::vector<Index>{1, 1, k}, where + ": z1 fails jordan(alpha)");
        const auto r2 = check_axis(alg, alg.basis(alg.z2()), jordan_law(f, S(f.one() - a)));
        t.expect(r2.passes() && r2.dims == std::vector<Index>{1, 1, k}, where + ": z2 fails jordan(1 - alpha)");
        const std::vector<Index> dims{1, 1, 1, k - 1};
        for (const auto& e : find_norm_one(q, 4000, seed + static_cast<std::uint64_t>(i), 3).vectors) {
          const auto ra = check_axis(alg, family_axis(alg, e, Family::A), monster_law(f, a, f(1, 2)));
          t.expect(ra.passes() && ra.violations.empty() && ra.dims == dims, where + ": family (a) fails monster(alpha,1/2)");
          const auto rb = check_axis(alg, family_axis(alg, e, Family::B), monster_law(f, S(f.one() - a), f(1, 2)));
          t.expect(rb.passes() && rb.violations.empty() && rb.dims == dims,
                   where + ": family (b) fails monster(1-alpha,1/2)");
          ++pairs;
        }
      });
    });
  }
  t.expect(pairs >= 50, "only " + std::to_string(pairs) + " (config, e) pairs sampled");
  return finish(4, "fusion laws", t, std::to_string(pairs) + " (config, e) pairs");
}

/// The law an idempotent satisfies, trying jordan(alpha), jordan(1-alpha),
/// monster(alpha,1/2), monster(1-alpha,1/2) in turn.
template <class S>
std::optional<Matrix<S>> tau_of(const Algebra<S>& alg, const Vector<S>& y) {
  const Field<S>& f = alg.field();
  const S a = alg.alpha();
  const std::vector<std::function<FusionLaw<S>()>> laws{
      [&] { return jordan_law(f, a); }, [&] { return jordan_law(f, S(f.one() - a)); },
      [&] { return monster_law(f, a, f(1, 2)); }, [&] { return monster_law(f, S(f.one() - a), f(1, 2)); }};
  for (const auto& law : laws) {
    try {
      const auto r = check_axis(alg, y, law());
      if (r.passes()) return r.miyamoto;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

// 5. Miyamoto involutions, and the four axes sharing -r_e.
CriterionResult miyamoto_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 5);
  for (int i = 0; i < 20; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + idx % 4;
      const S a = random_alpha(f, rng);
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng, true));
        const Algebra<S> alg = build_split_spin(q, a);
        const Vector<S> e = unit_vector(f, k, 0);
        const Matrix<S> tau = miyamoto(alg, family_axis(alg, e, Family::A), monster_law(f, a, f(1, 2)));
        t.expect(tau == extend_from_e(alg, negated_reflection(q, e)), where + ": tau_x != -r_e");
        t.expect(is_identity(normalized(f, Matrix<S>(tau * tau))), where + ": tau_x^2 != 1");
        t.expect(is_automorphism(alg, tau), where + ": tau_x not multiplicative");
        const Matrix<S> s = sigma_matrix(alg);
        t.expect(miyamoto(alg, alg.basis(alg.z1()), jordan_law(f, a)) == s, where + ": tau_z1 != sigma");
        t.expect(miyamoto(alg, alg.basis(alg.z2()), jordan_law(f, S(f.one() - a))) == s, where + ": tau_z2 != sigma");
        t.expect(axes_with_involution(alg, e).size() == 4, where + ": expected four axes with tau = -r_e");
      });
    });
  }
  // Exhaustive scan: the idempotents whose involution is -r_e are exactly those four.
  // Needs dim E >= 2; for dim E = 1 the family axes are also of Jordan type.
  std::size_t scans = 0;
  for (const auto& [p, k] : std::vector<std::pair<std::uint32_t, Index>>{{5, 2}, {7, 2}, {5, 3}}) {
    const Field<ModP> f(p);
    const ModP a = random_alpha(f, rng);
    const std::string where = describe(f, k, a);
    t.guard(where, [&] {
      const QuadraticSpace<ModP> q(f, random_gram(f, k, rng));
      const Algebra<ModP> alg = build_split_spin(q, a);
      const Vector<ModP> one = unit_element(alg);
      std::vector<std::pair<Vector<ModP>, Matrix<ModP>>> taus;
      for (const auto& y : enumerate_idempotents_bruteforce(alg)) {
        if (y == one) continue;
        const auto tau = tau_of(alg, y);
        t.expect(tau.has_value(), where + ": an idempotent satisfies none of the four laws");
        if (tau) taus.emplace_back(y, *tau);
      }
      for (const auto& e : find_norm_one(q).vectors) {
        const Matrix<ModP> target = extend_from_e(alg, negated_reflection(q, e));
        std::vector<Vector<ModP>> matching;
        for (const auto& [y, tau] : taus)
          if (tau == target) matching.push_back(y);
        t.expect(sorted(matching) == sorted(axes_with_involution(alg, e)), where + ": axes with tau = -r_e differ");
        ++scans;
      }
    });
  }
  return finish(5, "Miyamoto involutions", t, std::to_string(scans) + " norm-one vectors scanned exhaustively");
}

// 6. Frobenius form: associativity, axis lengths, invariance, baric cases.
CriterionResult frobenius_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 6);
  for (int i = 0; i < 30; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + idx % 4;
      const S a = random_alpha(f, rng);
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng, true));
        const Algebra<S> alg = build_split_spin(q, a);
        const auto form = frobenius(alg);
        t.expect(form.associative, where + ": form not associative");
        const Vector<S> e = unit_vector(f, k, 0);
        const Vector<S> xa = family_axis(alg, e, Family::A), xb = family_axis(alg, e, Family::B);
        t.expect(form_value(form.gram, xa, xa) == a + f.one(), where + ": (x,x) != alpha + 1");
        t.expect(form_value(form.gram, xb, xb) == f(2) - a, where + ": (x,x) != 2 - alpha for family (b)");
        if (f.characteristic() != 3) {
          const Algebra<S> cover = build_exceptional(q);
          t.expect(frobenius(cover).associative, where + ": cover form not associative");
        }
      });
    });
  }
  // Invariance under products of reflections.
  std::size_t samples = 0;
  for (int i = 0; samples < 20 && i < 200; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 2 + idx % 3;
      const S a = random_alpha(f, rng);
      const QuadraticSpace<S> q(f, random_gram(f, k, rng));
      Matrix<S> g = identity(f, k);
      for (int r = 0; r < 1 + idx % 3; ++r) {
        Vector<S> v(k);
        for (Index j = 0; j < k; ++j) v(j) = random_scalar(f, rng);
        if (is_zero(norm(q, v))) continue;
        g = normalized(f, Matrix<S>(g * reflection(q, v)));
      }
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const Algebra<S> alg = build_split_spin(q, a);
        const Matrix<S> m = extend_from_e(alg, g);
        const auto form = frobenius(alg);
        t.expect(is_automorphism(alg, m), where + ": reflection product is not an automorphism");
        t.expect(normalized(f, Matrix<S>(m.transpose() * form.gram * m)) == form.gram, where + ": form not invariant");
      });
      ++samples;
    });
  }
  t.expect(samples >= 20, "too few invariance samples");
  // alpha in {-1, 2}: rank one, radical E + F z1 (resp. E + F z2).
  for (int i = 0; i < 10; ++i) {
    const int field_index = i % 2 == 0 ? 0 : 2 + (i / 2) % 2 * 1;  // Q, F_7, F_11
    for_each_field(field_index, [&]<class S>(const Field<S>& f, int) {
      const Index k = 1 + i % 3;
      const QuadraticSpace<S> q(f, random_gram(f, k, rng));
      for (const S& a : {S(-f.one()), f(2)}) {
        const std::string where = describe(f, k, a);
        t.guard(where, [&] {
          const Algebra<S> alg = build_split_spin(q, a);
          const auto form = frobenius(alg);
          t.expect(rank(form.gram) == 1, where + ": form rank != 1");
          std::vector<Vector<S>> expected;
          for (Index j = 0; j < k; ++j) expected.push_back(alg.basis(j));
          expected.push_back(alg.basis(a == f(2) ? alg.z2() : alg.z1()));
          t.expect(same_span(form.radical, expected, alg.dim()), where + ": form radical is not the baric ideal");
          t.expect(same_span(algebra_radical(alg).basis, expected, alg.dim()), where + ": algebra radical differs");
        });
      }
    });
  }
  return finish(6, "Frobenius form", t, "30 configs, " + std::to_string(samples) + " invariance samples");
}

// Smallest subspace containing v and closed under multiplication.
template <class S>
Index ideal_dimension(const Algebra<S>& alg, const Vector<S>& v) {
  std::vector<Vector<S>> span{v};
  for (std::size_t i = 0; i < span.size(); ++i)
    for (Index j = 0; j < alg.dim(); ++j) {
      const Vector<S> w = multiply(alg, alg.basis(j), span[i]);
      if (!in_span(span, w)) span.push_back(w);
    }
  return static_cast<Index>(span_basis(span, alg.dim()).size());
}

bool simple_by_enumeration(const Algebra<ModP>& alg) {
  const Field<ModP>& f = alg.field();
  const Index n = alg.dim();
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(n), 0);
  std::uint64_t total = 1;
  for (Index i = 0; i < n; ++i) total *= f.p();
  for (std::uint64_t c = 1; c < total; ++c) {
    for (Index i = n - 1; i >= 0; --i) {
      auto& d = digits[static_cast<std::size_t>(i)];
      d = (d + 1) % f.p();
      if (d != 0) break;
    }
    Index lead = 0;
    while (digits[static_cast<std::size_t>(lead)] == 0) ++lead;
    if (digits[static_cast<std::size_t>(lead)] != 1) continue;  // one vector per line
    Vector<ModP> v(n);
    for (Index i = 0; i < n; ++i) v(i) = f.element(digits[static_cast<std::size_t>(i)]);
    if (ideal_dimension(alg, v) < n) return false;
  }
  return true;
}

// 7. Radical and simplicity.
CriterionResult radical_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 7);
  for (int i = 0; i < 20; ++i) {
    // F_5 has no alpha outside {0, 1, 1/2, -1, 2}.
    const int field_index = std::array{0, 2, 3, 4}[static_cast<std::size_t>(i % 4)];
    for_each_field(field_index, [&]<class S>(const Field<S>& f, int) {
      const Index k = 2 + i % 3;
      const S a = random_alpha(f, rng, {S(-f.one()), f(2)});
      // Gram B D B^T with B of rank < k, so the form is degenerate.
      Matrix<S> b(k, k - 1);
      for (Index r = 0; r < k; ++r)
        for (Index c = 0; c < k - 1; ++c) b(r, c) = random_scalar(f, rng);
      const Matrix<S> d = random_gram(f, k - 1, rng);
      const Matrix<S> gram = normalized(f, Matrix<S>(b * d * b.transpose()));
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, gram);
        const Algebra<S> alg = build_split_spin(q, a);
        const auto rad = algebra_radical(alg);
        t.expect(rad.kind == RadicalKind::FormRadical, where + ": wrong radical kind");
        t.expect(static_cast<Index>(rad.basis.size()) == k - rank(gram), where + ": radical dimension != dim E^perp");
        for (const auto& v : rad.basis) {
          t.expect(is_zero(v(alg.z1())) && is_zero(v(alg.z2())), where + ": radical leaves E");
          t.expect(is_zero(normalized(f, Matrix<S>(gram * v.head(k)))), where + ": radical vector not in E^perp");
        }
        t.expect(rad.is_ideal, where + ": radical is not an ideal");
        t.expect(same_span(rad.basis, frobenius(alg).radical, alg.dim()), where + ": differs from the form radical");
      });
    });
  }

  // The theorem on the grid, over Q against the stated verdicts and over
  // F_11 against exhaustive ideal enumeration.
  const Field<Rational> q;
  Matrix<Rational> id(2, 2), deg(2, 2);
  id << q(1), q(0), q(0), q(1);
  deg << q(1), q(1), q(1), q(1);
  for (const auto& [gram, nondegenerate] : std::vector<std::pair<Matrix<Rational>, bool>>{{id, true}, {deg, false}}) {
    const QuadraticSpace<Rational> space(q, gram);
    const auto evidence = find_norm_one(space);
    for (long a : {-1L, 2L, 3L, -3L, 5L}) {
      const std::string where = describe(q, 2, q(a)) + (nondegenerate ? " gram=I" : " gram=J");
      t.guard(where, [&] {
        const auto verdict = is_simple(build_split_spin(space, q(a)), std::optional(evidence));
        const bool expected = nondegenerate && a != -1 && a != 2;
        t.expect(verdict.simple == expected, where + ": simplicity verdict disagrees with the theorem");
        if (a == -1) t.expect(verdict.reason == SimplicityReason::BaricMinusOne, where + ": reason");
        if (a == 2) t.expect(verdict.reason == SimplicityReason::BaricTwo, where + ": reason");
      });
    }
  }
  const Field<ModP> f(11);
  Matrix<ModP> id11(2, 2), deg11(2, 2);
  id11 << f(1), f(0), f(0), f(1);
  deg11 << f(1), f(1), f(1), f(1);
  for (const auto& gram : {id11, deg11}) {
    const QuadraticSpace<ModP> space(f, gram);
    const auto evidence = find_norm_one(space);
    for (long a : {-1L, 2L, 3L, -3L, 5L}) {
      const std::string where = describe(f, 2, f(a));
      t.guard(where, [&] {
        const Algebra<ModP> alg = build_split_spin(space, f(a));
        t.expect(is_simple(alg, std::optional(evidence)).simple == simple_by_enumeration(alg),
                 where + ": verdict disagrees with ideal enumeration");
      });
    }
  }
  return finish(7, "radical and simplicity", t, "20 degenerate configs, 20 grid points");
}

// 8. B_x = <x, x^-, z1> is 3C(alpha).
CriterionResult three_c_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 8);
  auto explicit_products = [&]<class S>(const Algebra<S>& alg, const Vector<S>& x, const S& a, const std::string& where) {
    const Field<S>& f = alg.field();
    const Vector<S> xm = sigma(alg, x);
    const Vector<S> z = alg.basis(alg.z1());
    const S h = a / f(2);
    auto rule = [&](const Vector<S>& u, const Vector<S>& v, const Vector<S>& w) {
      return multiply(alg, u, v) == normalized(f, Vector<S>(h * (u + v - w)));
    };
    t.expect(rule(x, xm, z) && rule(x, z, xm) && rule(xm, z, x), where + ": B_x products differ from 3C(alpha)");
  };
  for (int i = 0; i < 25; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + idx % 3;
      // At alpha = -1, x + x^- = -z1 and B_x is only two-dimensional.
      const S a = random_alpha(f, rng, {S(-f.one())});
      const std::string where = describe(f, k, a);
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng, true));
        const Algebra<S> alg = build_split_spin(q, a);
        const Vector<S> e = unit_vector(f, k, 0);
        t.expect(b_x_is_3c(alg, e).ok, where + ": B_x does not embed as 3C(alpha)");
        explicit_products(alg, family_axis(alg, e, Family::A), a, where);
        if (k == 1) {
          const Vector<S> x = family_axis(alg, e, Family::A);
          const Matrix<S> map = columns(std::vector<Vector<S>>{x, sigma(alg, x), alg.basis(alg.z1())}, 3);
          t.expect(is_isomorphism(matsuo_3c(f, a), alg, map).ok, where + ": dim E = 1 algebra is not 3C(alpha)");
          t.expect(frobenius_s3_invariant(alg, e), where + ": Frobenius form not S3-invariant");
        }
        if (f.characteristic() != 3) {
          const Algebra<S> cover = build_exceptional(q);
          t.expect(b_x_is_3c(cover, e).ok, "cover " + where + ": B_x does not embed as 3C(-1)");
          explicit_products(cover, family_axis(cover, e, Family::Exceptional), S(-f.one()), "cover " + where);
        }
      });
    });
  }
  {
    const Field<Rational> q;
    const Algebra<Rational> alg = build_split_spin(QuadraticSpace<Rational>(q, identity(q, 2)), q(-1));
    const Vector<Rational> x = family_axis(alg, unit_vector(q, 2, 0), Family::A);
    t.expect(span_basis<Rational>({x, sigma(alg, x), alg.basis(alg.z1())}, 4).size() == 2,
             "alpha=-1: B_x should collapse to dimension 2");
  }
  return finish(8, "3C subalgebras", t, "25 configs, split spin and cover");
}

// 9. Yabe basis data.
CriterionResult yabe_suite(std::uint64_t) {
  Tally t;
  const Field<Rational> q;
  const std::vector<Rational> alphas{q(2), q(3), q(-3), q(5), q(1, 3), q(-2, 5)};
  const std::vector<Rational> mus{q(0), q(2), q(-1), q(1, 2), q(-1, 2), q(3, 7), q(-3)};
  const Rational h = q(1, 2);
  for (const auto& a : alphas)
    for (const auto& mu : mus) {
      const std::string where = "alpha=" + a.to_string() + " mu=" + mu.to_string();
      t.guard(where, [&] {
        const auto tg = build_two_gen(TwoGenConfig<Rational>{q, a, mu, Variant::SplitSpin});
        const auto y = yabe_data(tg);
        t.expect(y.delta == q(-2) * mu - q(1), where + ": delta != -2 mu - 1");
        Vector<Rational> expected_q(4);
        const Rational c = a * (a + q(1)) * (mu - q(1)) / q(4);
        expected_q << q(0), q(0), c, c;
        t.expect(y.q == expected_q, where + ": q != alpha(alpha+1)(mu-1)/4 * 1");
        Vector<Rational> am(4);
        am << h * q(2) * mu, -h, h * a, h * (a + q(1));
        t.expect(y.a_minus1 == am, where + ": a_{-1} differs from the closed form");
        t.expect(y.spans_algebra && rank(columns<Rational>({y.a0, y.a1, y.a_minus1, y.q}, 4)) == 4,
                 where + ": {a0, a1, a_-1, q} does not span");
      });
    }
  for (const auto& mu : mus) {
    const std::string where = "cover mu=" + mu.to_string();
    t.guard(where, [&] {
      const auto tg = build_two_gen(TwoGenConfig<Rational>{q, std::nullopt, mu, Variant::ExceptionalCover});
      const auto y = yabe_data(tg);
      Vector<Rational> expected_q(4);
      expected_q << q(0), q(0), q(0), (q(1) - mu) / q(4);
      t.expect(y.q == expected_q, where + ": q != (1-mu)/4 n");
      Vector<Rational> am(4);
      am << h * q(2) * mu, -h, -h, h;
      t.expect(y.a_minus1 == am, where + ": a_{-1} differs from the closed form");
      t.expect(y.spans_algebra, where + ": does not span");
      t.expect(y.delta == q(-2) * mu - q(1), where + ": delta");
    });
  }
  for (const auto& a : alphas) {
    const std::string where = "alpha=" + a.to_string() + " mu=1";
    t.guard(where, [&] {
      const auto tg = build_two_gen(TwoGenConfig<Rational>{q, a, q(1), Variant::SplitSpin});
      t.expect(multiply(tg.algebra, tg.x, tg.y) == h * (tg.x + tg.y), where + ": xy != (x + y)/2");
      t.expect(subalgebra(tg.algebra, {tg.x, tg.y}).algebra.dim() < 4, where + ": x, y generate A");
      bool refused = false;
      try {
        yabe_data(tg);
      } catch (const Error& e) {
        refused = e.code() == ErrorCode::MuOne;
      }
      t.expect(refused, where + ": mu = 1 not refused");
    });
  }
  t.guard("alpha=-1", [&] {
    const auto tg = build_two_gen(TwoGenConfig<Rational>{q, q(-1), q(2), Variant::SplitSpin});
    t.expect(subalgebra(tg.algebra, {tg.x, tg.y}).algebra.dim() < 4, "alpha=-1: x, y generate A");
    bool refused = false;
    try {
      yabe_data(tg);
    } catch (const Error& e) {
      refused = e.code() == ErrorCode::SpecialAlpha;
    }
    t.expect(refused, "alpha=-1 not refused");
  });
  return finish(9, "two-generated Yabe data", t, "42 split spin and 7 cover parameter pairs");
}

/// Orbit of e under <-r_e, -r_f>, by plain breadth-first search.
template <class S>
std::size_t x_orbit_size(const Field<S>& f, const S& mu) {
  const QuadraticSpace<S> q(f, two_gen_gram(f, mu));
  const std::vector<Matrix<S>> gens{negated_reflection(q, unit_vector(f, 2, 0)), negated_reflection(q, unit_vector(f, 2, 1))};
  std::vector<Vector<S>> seen{unit_vector(f, 2, 0)};
  for (std::size_t i = 0; i < seen.size(); ++i)
    for (const auto& g : gens) {
      const Vector<S> w = normalized(f, Vector<S>(g * seen[i]));
      if (std::find(seen.begin(), seen.end(), w) == seen.end()) seen.push_back(w);
    }
  return seen.size();
}

template <class S>
void check_finite_axet(Tally& t, const Field<S>& f, const S& mu, std::uint64_t expected, const std::string& where) {
  const auto x = axet(f, mu);
  t.expect(x.size_kind == OrderKind::Finite && x.size == expected,
           where + ": |X| = " + std::to_string(x.size) + ", expected " + std::to_string(expected));
  t.expect(x.rho.kind == OrderKind::Finite && x.rho.n == x.size, where + ": |X| != |rho|");
  const Matrix<S> r = rho(f, mu);
  t.expect(is_identity(normalized(f, mat_pow(r, expected))), where + ": rho^|X| != 1");
  const bool odd = expected % 2 == 1;
  t.expect(x.split == (odd ? OrbitSplit::Single : OrbitSplit::TwoHalves), where + ": D-orbit split breaks parity rule");
  t.expect(x.d_hat_index == (odd ? 1 : 2), where + ": [D^:D] breaks parity rule");
  t.expect(x_orbit_size(f, mu) == (odd ? expected : expected / 2), where + ": x^D has the wrong length");
  t.expect(x.consistent, where + ": inconsistent axet result");
}

// 10. Axet sizes.
CriterionResult axet_suite(std::uint64_t) {
  Tally t;
  const Field<Rational> q;
  const std::vector<std::pair<Rational, std::uint64_t>> sweep{
      {q(-1), 0}, {q(-1, 2), 3}, {q(0), 4}, {q(1, 2), 6}, {q(1), 0}};
  for (const auto& [mu, size] : sweep) {
    const std::string where = "Q mu=" + mu.to_string();
    t.guard(where, [&] {
      if (size == 0) {
        const auto x = axet(q, mu, 256);
        t.expect(x.rho.kind == OrderKind::InfiniteCertified, where + ": rho not certified infinite");
        t.expect(x.size_kind == OrderKind::InfiniteCertified && x.cap_exceeded, where + ": axet not infinite");
      } else {
        check_finite_axet(t, q, mu, size, where);
        for (std::uint64_t j = 1; j < size; ++j) t.expect(!is_identity(mat_pow(rho(q, mu), j)), where + ": rho order too small");
      }
    });
  }
  const Field<ModP> f5(5), f7(7);
  t.guard("F_7 mu=1", [&] { check_finite_axet(t, f7, f7(1), 7, "F_7 mu=1"); });
  t.guard("F_5 mu=-1", [&] { check_finite_axet(t, f5, f5(-1), 10, "F_5 mu=-1"); });
  t.guard("F_5 mu=2", [&] { check_finite_axet(t, f5, f5(2), 3, "F_5 mu=2"); });
  std::size_t finite = 0;
  for (std::uint32_t p : {5U, 7U, 11U, 13U}) {
    const Field<ModP> f(p);
    for (std::uint64_t m = 0; m < p; ++m) {
      const std::string where = f.descriptor().to_string() + " mu=" + std::to_string(m);
      t.guard(where, [&] {
        const auto x = axet(f, f.element(m));
        t.expect(x.size_kind == OrderKind::Finite, where + ": axet not finite");
        check_finite_axet(t, f, f.element(m), x.size, where);
        ++finite;
      });
    }
  }
  return finish(10, "axet sizes", t, "rational sweep and " + std::to_string(finite) + " finite-field cases");
}

// 11. The cover pipeline on random Grams.
CriterionResult cover_suite(std::uint64_t seed) {
  Tally t;
  Rng rng(seed + 11);
  for (int i = 0; i < 10; ++i) {
    for_each_field(i, [&]<class S>(const Field<S>& f, int idx) {
      const Index k = 1 + idx % 3;
      const std::string where = "cover " + describe(f, k, S(-f.one()));
      t.guard(where, [&] {
        const QuadraticSpace<S> q(f, random_gram(f, k, rng, true));
        const auto r = verify_cover(q);
        t.expect(r.nil_ideal_ok, where + ": <n> is not a nil ideal");
        t.expect(r.no_identity, where + ": identity found");
        t.expect(r.quotient_iso_ok, where + ": quotient is not E + F z1 in S(b,-1)");
        t.expect(r.fusion_ok && r.family_samples > 0, where + ": fusion");
        t.expect(r.three_c_ok, where + ": 3C(-1)");
        t.expect(r.radical_ok, where + ": radical is not E^perp + <n>");
        t.expect(r.frobenius_associative, where + ": Frobenius form");
      });
    });
  }
  return finish(11, "exceptional cover", t, "10 random Grams");
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
  using Fn = CriterionResult (*)(std::uint64_t);
  static const Fn table[kCriteria] = {construction,   degenerate_alpha, idempotent_oracle, fusion_suites,
                                      miyamoto_suite, frobenius_suite,  radical_suite,     three_c_suite,
                                      yabe_suite,     axet_suite,       cover_suite};
  if (id < 1 || id > kCriteria) fail(ErrorCode::ConfigError, "no acceptance criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r = table[id - 1](seed);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_all(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id, seed));
  return out;
}

std::string format_line(const CriterionResult& r) {
  char time[32];
  std::snprintf(time, sizeof time, "%.2f", r.seconds);
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.title << " (" << r.checks << " checks, " << time
     << " s): " << r.detail;
  return os.str();
}

}  // namespace ssf::acceptance
