#include "cantor/exact_real.hpp"

#include <cctype>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "cantor/error.hpp"

namespace cantor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedField: return "MixedFieldError";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::NegativeInput: return "NegativeInput";
    case ErrorKind::XOutOfRange: return "XOutOfRange";
    case ErrorKind::EntryNotGreaterThanOne: return "EntryNotGreaterThanOne";
    case ErrorKind::UnknownQuasiGreedy: return "UnknownQuasiGreedy";
    case ErrorKind::NotARepresentationOf1: return "NotARepresentationOf1";
    case ErrorKind::NotAlternate: return "NotAlternate";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::SumNotGreaterThanOne: return "SumNotGreaterThanOne";
    case ErrorKind::TailInequalityViolated: return "TailInequalityViolated";
    case ErrorKind::ZeroPeriod: return "ZeroPeriod";
    case ErrorKind::DigitOverflow: return "DigitOverflow";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
  }
  return "Error";
}

FieldTag join(FieldTag x, FieldTag y) {
  if (x.is_rational()) return y;
  if (y.is_rational() || x == y) return x;
  throw Error(ErrorKind::MixedField, "sqrt(" + std::to_string(x.radicand) + ") and sqrt(" +
                                         std::to_string(y.radicand) + ") cannot be combined");
}

ExactReal::ExactReal(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw Error(ErrorKind::Syntax, "negative radicand");
  if (d_ != 0) {
    // Callers may pass a non-reduced radicand; fold it through sqrt().
    ExactReal root = ExactReal::sqrt(Integer(static_cast<long>(d_)));
    a_.canonicalize();
    b_.canonicalize();
    *this = ExactReal(a_) + ExactReal(b_) * root;
    return;
  }
  a_.canonicalize();
  b_ = 0;
}

ExactReal ExactReal::sqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::Syntax, "square root of a negative number");
  if (sgn(n) == 0) return ExactReal();
  Integer rest = n;
  Integer outside = 1;
  // Trial division is enough for the radicands this library sees.
  for (Integer p = 2; p * p <= rest; ++p) {
    Integer sq = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), sq.get_mpz_t())) {
      rest /= sq;
      outside *= p;
    }
  }
  ExactReal r;
  if (rest == 1) {
    r.a_ = outside;
    return r;
  }
  if (!rest.fits_slong_p()) throw Error(ErrorKind::Syntax, "radicand too large");
  r.b_ = outside;
  r.d_ = rest.get_si();
  return r;
}

void ExactReal::normalize() {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) == 0) d_ = 0;
}

int ExactReal::sign() const {
  int sa = sgn(a_);
  int sb = d_ == 0 ? 0 : sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  return c > 0 ? sa : sb;  // never equal: d is square-free
}

ExactReal ExactReal::conjugate() const {
  ExactReal r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational ExactReal::norm() const {
  Rational n = a_ * a_ - b_ * b_ * d_;
  return n;
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& y) {
  d_ = join(field(), y.field()).radicand;
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& y) {
  d_ = join(field(), y.field()).radicand;
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& y) {
  std::int64_t d = join(field(), y.field()).radicand;
  Rational a = a_ * y.a_ + b_ * y.b_ * d;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  normalize();
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& y) {
  if (y.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  join(field(), y.field());
  // x / y = x * conj(y) / N(y)
  Rational n = y.norm();
  *this *= y.conjugate();
  a_ /= n;
  b_ /= n;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExactReal::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

namespace {

void hash_mpz(std::size_t& seed, const mpz_t z) {
  auto mix = [&](std::size_t v) { seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2); };
  mix(static_cast<std::size_t>(mpz_sgn(z) + 1));
  std::size_t n = mpz_size(z);
  mix(n);
  for (std::size_t i = 0; i < n; ++i) mix(static_cast<std::size_t>(mpz_getlimbn(z, i)));
}

Integer floor_div(const Integer& n, const Integer& d) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

}  // namespace

std::size_t ExactReal::hash() const {
  std::size_t seed = std::hash<std::int64_t>{}(d_);
  hash_mpz(seed, a_.get_num_mpz_t());
  hash_mpz(seed, a_.get_den_mpz_t());
  hash_mpz(seed, b_.get_num_mpz_t());
  hash_mpz(seed, b_.get_den_mpz_t());
  return seed;
}

Ordering compare(const ExactReal& x, const ExactReal& y) {
  auto c = x <=> y;
  if (c < 0) return Ordering::LT;
  if (c > 0) return Ordering::GT;
  return Ordering::EQ;
}

Integer floor(const ExactReal& x) {
  const Rational& a = x.rational_part();
  if (x.is_rational()) return floor_div(a.get_num(), a.get_den());
  const Rational& b = x.radical_part();
  // x = (A + B sqrt(d)) / C over a common positive denominator C.
  Integer c;
  mpz_lcm(c.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Integer big_a = a.get_num() * (c / a.get_den());
  Integer big_b = b.get_num() * (c / b.get_den());
  // s <= |B| sqrt(d) < s + 1, and the upper bound is strict since B sqrt(d) is irrational.
  Integer sq = big_b * big_b * Integer(static_cast<long>(x.radicand()));
  Integer s;
  mpz_sqrt(s.get_mpz_t(), sq.get_mpz_t());
  // A + B sqrt(d) lies strictly inside (n, n + 1).
  Integer n = sgn(big_b) > 0 ? Integer(big_a + s) : Integer(big_a - s - 1);
  return floor_div(n, c);
}

ExactReal pow(ExactReal base, unsigned exponent) {
  ExactReal result(1L);
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string format(const Rational& q) {
  return q.get_str();
}

std::string format(const ExactReal& x) {
  if (x.is_rational()) return format(x.rational_part());
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_part();
  Integer c;
  mpz_lcm(c.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  Integer big_a = a.get_num() * (c / a.get_den());
  Integer big_b = b.get_num() * (c / b.get_den());
  std::string radical = "sqrt(" + std::to_string(x.radicand()) + ")";
  Integer abs_b = abs(big_b);
  std::string rad_term = abs_b == 1 ? radical : abs_b.get_str() + "*" + radical;
  std::string num;
  if (sgn(big_a) == 0) {
    num = (sgn(big_b) < 0 ? "-" : "") + rad_term;
  } else {
    num = big_a.get_str() + (sgn(big_b) < 0 ? "-" : "+") + rad_term;
  }
  if (c == 1) return num;
  return "(" + num + ")/" + c.get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) {
  return os << format(x);
}

namespace {

class RealParser {
 public:
  explicit RealParser(std::string_view text) : text_(text) {}

  ParsedReal run() {
    ParsedReal out;
    diagnostics_ = &out.diagnostics;
    out.value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Syntax, msg + " at offset " + std::to_string(pos_) + " in \"" +
                                       std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool eat_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExactReal expr() {
    ExactReal v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ExactReal term() {
    ExactReal v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        ExactReal d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  ExactReal factor() {
    if (eat('-')) return -factor();
    if (eat('(')) {
      ExactReal v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (eat_word("sqrt")) {
      if (!eat('(')) fail("expected '(' after sqrt");
      skip_space();
      std::string n = digits();
      if (n.empty()) fail("sqrt takes a nonnegative integer");
      if (!eat(')')) fail("expected ')'");
      Integer radicand(n);
      ExactReal r = ExactReal::sqrt(radicand);
      if (!r.is_rational() && Integer(static_cast<long>(r.radicand())) != radicand) {
        diagnostics_->push_back("sqrt(" + n + ") reduced to " + format(r));
      }
      return r;
    }
    if (eat_word("phi")) {
      return (ExactReal(1L) + ExactReal::sqrt(5)) / ExactReal(2L);
    }
    skip_space();
    std::string whole = digits();
    if (whole.empty()) {
      if (pos_ >= text_.size()) fail("unexpected end of input");
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::string frac = digits();
      if (frac.empty()) fail("expected digits after '.'");
      Integer den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      Rational q(Integer(whole + frac), den);
      q.canonicalize();
      return ExactReal(q);
    }
    return ExactReal(Integer(whole));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<std::string>* diagnostics_ = nullptr;
};

}  // namespace

ParsedReal parse_real(std::string_view text) {
  return RealParser(text).run();
}

}  // namespace cantor
