#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "ssf/errors.hpp"

namespace ssf {

/// The ground field: the rationals or a prime field F_p (p below 2^31).
class FieldDescriptor {
 public:
  enum class Kind { Rational, Prime };

  static FieldDescriptor rational() { return FieldDescriptor(Kind::Rational, 0); }
  /// Throws NotPrime unless p is a prime below 2^31.
  static FieldDescriptor prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t characteristic() const { return p_; }
  bool is_finite() const { return kind_ == Kind::Prime; }
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : q_(static_cast<long>(n)) {}
  Rational(long n) : q_(n) {}
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Accepts "p/q" or "p"; throws ParseError.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  Rational inverse() const;
  /// Always "p/q" with q > 0, e.g. "3/1".
  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element of F_p.
///
/// A value built from a plain integer (as Eigen does for Scalar(0) and
/// Scalar(1)) carries no modulus yet; it adopts the modulus of the first
/// bound value it meets. Two bound values with different moduli never mix.
class ModP {
 public:
  ModP() = default;
  ModP(int n) : v_(n) {}
  ModP(long n) : v_(n) {}

  static ModP from_residue(std::int64_t value, std::uint32_t p);

  bool bound() const { return p_ != 0; }
  std::uint32_t modulus() const { return p_; }
  /// Residue in [0, p); an unbound literal is reduced modulo p.
  std::uint64_t residue_mod(std::uint32_t p) const;
  /// Residue of a bound value; throws FieldMismatch on a literal.
  std::uint64_t residue() const;
  std::int64_t literal() const { return v_; }

  /// A literal counts as zero only when it is literally 0.
  bool is_zero() const { return v_ == 0; }
  ModP inverse() const;
  std::string to_string() const;

  ModP& operator+=(const ModP& o);
  ModP& operator-=(const ModP& o);
  ModP& operator*=(const ModP& o);
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }

  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  friend ModP operator-(const ModP& a);

  friend bool operator==(const ModP& a, const ModP& b);
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
  /// Residue order; used only for canonical sorting.
  friend bool operator<(const ModP& a, const ModP& b);

 private:
  static std::uint32_t common_modulus(const ModP& a, const ModP& b);

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ModP& r);

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

template <class S>
class Field;

/// Constant factory and field facts for the rationals.
template <>
class Field<Rational> {
 public:
  using Scalar = Rational;

  Field() = default;
  explicit Field(const FieldDescriptor& d);

  FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }
  std::uint32_t characteristic() const { return 0; }
  bool is_finite() const { return false; }

  Rational operator()(long num, long den = 1) const { return Rational(num, den); }
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational normalize(const Rational& x) const { return x; }
  Rational parse(std::string_view text) const { return Rational::parse(text); }

  /// Exact square root when one exists in the field.
  std::optional<Rational> sqrt(const Rational& x) const;

  friend bool operator==(const Field&, const Field&) { return true; }
};

/// Constant factory and field facts for F_p.
template <>
class Field<ModP> {
 public:
  using Scalar = ModP;

  explicit Field(std::uint32_t p);
  explicit Field(const FieldDescriptor& d);

  FieldDescriptor descriptor() const { return FieldDescriptor::prime(p_); }
  std::uint32_t characteristic() const { return p_; }
  std::uint32_t p() const { return p_; }
  bool is_finite() const { return true; }
  std::uint64_t order() const { return p_; }

  /// num/den reduced into F_p; throws DivisionByZero when p divides den.
  ModP operator()(long num, long den = 1) const;
  ModP zero() const { return ModP::from_residue(0, p_); }
  ModP one() const { return ModP::from_residue(1, p_); }
  /// i-th element in residue order, i < p.
  ModP element(std::uint64_t i) const { return ModP::from_residue(static_cast<std::int64_t>(i), p_); }
  ModP normalize(const ModP& x) const { return ModP::from_residue(static_cast<std::int64_t>(x.residue_mod(p_)), p_); }
  /// Accepts "k" or "num/den".
  ModP parse(std::string_view text) const;

  std::optional<ModP> sqrt(const ModP& x) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

}  // namespace ssf
