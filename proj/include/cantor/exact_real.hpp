#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

using Integer = mpz_class;
using Rational = mpq_class;

/// Either the rational field or Q(sqrt(d)) for a square-free d >= 2.
struct FieldTag {
  std::int64_t radicand = 0;  // 0 means Q

  bool is_rational() const { return radicand == 0; }
  friend bool operator==(const FieldTag&, const FieldTag&) = default;
};

/// Joins two tags; Q embeds into every quadratic field. Throws MixedField.
FieldTag join(FieldTag x, FieldTag y);

/*
 * An element a + b*sqrt(d) of Q or of a real quadratic field.
 *
 * The representation is canonical: b == 0 forces d == 0, so equality of
 * the stored triple is mathematical equality.
 */
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  ExactReal(const Integer& v) : a_(v) {}  // NOLINT
  ExactReal(const Rational& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  ExactReal(Rational a, Rational b, std::int64_t d);

  /// sqrt(n) for n >= 0, square factors pulled out (sqrt(8) = 2*sqrt(2)).
  static ExactReal sqrt(const Integer& n);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  std::int64_t radicand() const { return d_; }
  FieldTag field() const { return FieldTag{d_}; }

  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }
  int sign() const;
  bool is_zero() const { return d_ == 0 && sgn(a_) == 0; }

  ExactReal conjugate() const;
  /// a^2 - b^2 d, multiplicative on Q(sqrt(d)).
  Rational norm() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& y);
  ExactReal& operator-=(const ExactReal& y);
  ExactReal& operator*=(const ExactReal& y);
  ExactReal& operator/=(const ExactReal& y);

  friend ExactReal operator+(ExactReal x, const ExactReal& y) { return x += y; }
  friend ExactReal operator-(ExactReal x, const ExactReal& y) { return x -= y; }
  friend ExactReal operator*(ExactReal x, const ExactReal& y) { return x *= y; }
  friend ExactReal operator/(ExactReal x, const ExactReal& y) { return x /= y; }

  friend bool operator==(const ExactReal& x, const ExactReal& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y);

  /// Floating approximation; for display and sanity checks only.
  double approx() const;
  std::size_t hash() const;

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  std::int64_t d_ = 0;
};

enum class Ordering { LT, EQ, GT };

Ordering compare(const ExactReal& x, const ExactReal& y);
Integer floor(const ExactReal& x);
ExactReal pow(ExactReal base, unsigned exponent);

/// Canonical text accepted back by parse_real.
std::string format(const ExactReal& x);
std::string format(const Rational& q);
std::ostream& operator<<(std::ostream& os, const ExactReal& x);

struct ParsedReal {
  ExactReal value;
  std::vector<std::string> diagnostics;
};

/*
 * Grammar:
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := ['-'] (INT | DECIMAL | 'sqrt' '(' INT ')' | 'phi' | '(' expr ')')
 *
 * Decimals are exact (1.7 = 17/10). Throws Syntax.
 */
ParsedReal parse_real(std::string_view text);

struct ExactRealHash {
  std::size_t operator()(const ExactReal& x) const { return x.hash(); }
};

}  // namespace cantor
