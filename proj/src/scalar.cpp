#include "ssf/scalar.hpp"

#include <charconv>
#include <ostream>

namespace ssf {

namespace {

long parse_long(std::string_view text) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    fail(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return value;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::int64_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return r < 0 ? r + p : r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldDescriptor FieldDescriptor::prime(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p))
    fail(ErrorCode::NotPrime, "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  return FieldDescriptor(Kind::Prime, static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::to_string() const {
  return kind_ == Kind::Rational ? "Q" : "F_" + std::to_string(p_);
}

// Rational

Rational::Rational(long num, long den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    mpz_class num;
    if (text.empty() || num.set_str(std::string(text.front() == '+' ? text.substr(1) : text), 10) != 0)
      fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
    return Rational(mpq_class(num));
  }
  mpz_class num;
  mpz_class den;
  const std::string ns(text.substr(0, slash));
  const std::string ds(text.substr(slash + 1));
  if (ns.empty() || ds.empty() || num.set_str(ns, 10) != 0 || den.set_str(ds, 10) != 0)
    fail(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  return Rational(mpq_class(1 / q_));
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ModP

ModP ModP::from_residue(std::int64_t value, std::uint32_t p) {
  ModP r;
  r.p_ = p;
  r.v_ = reduce(value, p);
  return r;
}

std::uint64_t ModP::residue_mod(std::uint32_t p) const {
  if (bound() && p != p_) fail(ErrorCode::FieldMismatch, "F_" + std::to_string(p_) + " vs F_" + std::to_string(p));
  return static_cast<std::uint64_t>(reduce(v_, p));
}

std::uint64_t ModP::residue() const {
  if (!bound()) fail(ErrorCode::FieldMismatch, "integer literal has no modulus");
  return static_cast<std::uint64_t>(v_);
}

std::uint32_t ModP::common_modulus(const ModP& a, const ModP& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    fail(ErrorCode::FieldMismatch, "F_" + std::to_string(a.p_) + " vs F_" + std::to_string(b.p_));
  return a.p_ != 0 ? a.p_ : b.p_;
}

ModP ModP::inverse() const {
  if (!bound()) {
    if (v_ == 1 || v_ == -1) return *this;
    if (v_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    fail(ErrorCode::FieldMismatch, "cannot invert an integer literal outside a field");
  }
  if (v_ == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
  // extended Euclid
  std::int64_t r0 = p_, r1 = v_, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  return from_residue(s0, p_);
}

std::string ModP::to_string() const { return std::to_string(v_); }

ModP& ModP::operator+=(const ModP& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ += o.v_;
  } else {
    v_ = reduce(reduce(v_, p) + reduce(o.v_, p), p);
    p_ = p;
  }
  return *this;
}

ModP& ModP::operator-=(const ModP& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ -= o.v_;
  } else {
    v_ = reduce(reduce(v_, p) - reduce(o.v_, p), p);
    p_ = p;
  }
  return *this;
}

ModP& ModP::operator*=(const ModP& o) {
  const std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    v_ *= o.v_;
  } else {
    v_ = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(reduce(v_, p)),
                                          static_cast<std::uint64_t>(reduce(o.v_, p)), p));
    p_ = p;
  }
  return *this;
}

ModP operator-(const ModP& a) {
  if (!a.bound()) return ModP(static_cast<long>(-a.v_));
  return ModP::from_residue(-a.v_, a.p_);
}

bool operator==(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return a.v_ == b.v_;
  return reduce(a.v_, p) == reduce(b.v_, p);
}

bool operator<(const ModP& a, const ModP& b) {
  const std::uint32_t p = ModP::common_modulus(a, b);
  if (p == 0) return a.v_ < b.v_;
  return reduce(a.v_, p) < reduce(b.v_, p);
}

std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.to_string(); }

// Fields

Field<Rational>::Field(const FieldDescriptor& d) {
  if (d.kind() != FieldDescriptor::Kind::Rational) fail(ErrorCode::FieldMismatch, "expected Q, got " + d.to_string());
}

std::optional<Rational> Field<Rational>::sqrt(const Rational& x) const {
  const mpq_class& q = x.value();
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  mpz_class rn;
  mpz_class rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(mpq_class(rn, rd));
}

Field<ModP>::Field(std::uint32_t p) : p_(FieldDescriptor::prime(p).p()) {}

Field<ModP>::Field(const FieldDescriptor& d) : p_(d.p()) {
  if (d.kind() != FieldDescriptor::Kind::Prime) fail(ErrorCode::FieldMismatch, "expected F_p, got Q");
}

ModP Field<ModP>::operator()(long num, long den) const {
  const ModP d = ModP::from_residue(den, p_);
  if (d.is_zero()) fail(ErrorCode::DivisionByZero, "denominator vanishes in F_" + std::to_string(p_));
  return ModP::from_residue(num, p_) / d;
}

ModP Field<ModP>::parse(std::string_view text) const {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return (*this)(parse_long(text));
  return (*this)(parse_long(text.substr(0, slash)), parse_long(text.substr(slash + 1)));
}

std::optional<ModP> Field<ModP>::sqrt(const ModP& x) const {
  const std::uint64_t a = x.residue_mod(p_);
  if (a == 0) return zero();
  if (p_ == 2) return ModP::from_residue(static_cast<std::int64_t>(a), p_);
  if (powmod(a, (p_ - 1) / 2, p_) != 1) return std::nullopt;
  // Tonelli-Shanks
  std::uint64_t q = p_ - 1;
  unsigned s = 0;
  while ((q & 1U) == 0) {
    q >>= 1U;
    ++s;
  }
  std::uint64_t z = 2;
  while (powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p_);
  std::uint64_t t = powmod(a, q, p_);
  std::uint64_t r = powmod(a, (q + 1) / 2, p_);
  while (t != 1) {
    std::uint64_t i = 0;
    std::uint64_t tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p_);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p_);
    m = i;
    c = mulmod(b, b, p_);
    t = mulmod(t, c, p_);
    r = mulmod(r, b, p_);
  }
  return ModP::from_residue(static_cast<std::int64_t>(r), p_);
}

}  // namespace ssf
