#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/exact_real.hpp"

namespace cantor {

using Digit = std::uint64_t;
using FiniteWord = std::vector<Digit>;

/// Digit at position n; must be deterministic.
using DigitStream = std::function<Digit(std::size_t)>;

/// Converts an exact nonnegative integer to a digit. Throws DigitOverflow.
Digit to_digit(const Integer& v);
inline Integer to_integer(Digit d) { return Integer(static_cast<unsigned long>(d)); }

/*
 * An ultimately periodic word u v^omega, always held in canonical form:
 * v is primitive and u is the shortest possible preperiod. Finite words
 * are u 0^omega.
 */
class UPWord {
 public:
  /// 0^omega.
  UPWord() : per_{0} {}
  /// Canonicalizes. An empty period is read as "0".
  UPWord(FiniteWord preperiod, FiniteWord period);

  static UPWord finite(FiniteWord digits) { return UPWord(std::move(digits), FiniteWord{0}); }

  const FiniteWord& preperiod() const { return pre_; }
  const FiniteWord& period() const { return per_; }

  Digit at(std::size_t n) const {
    if (n < pre_.size()) return pre_[n];
    return per_[(n - pre_.size()) % per_.size()];
  }

  FiniteWord prefix(std::size_t n) const;
  UPWord shift(std::size_t n) const;
  bool ends_in_zeros() const { return per_.size() == 1 && per_[0] == 0; }
  Digit max_digit() const;
  /// Digit sum of the preperiod plus one period; used with ends_in_zeros for sum tests.
  Integer block_sum() const;

  DigitStream stream() const;

  friend bool operator==(const UPWord&, const UPWord&) = default;

 private:
  FiniteWord pre_;
  FiniteWord per_;
};

UPWord canonicalize(FiniteWord preperiod, FiniteWord period);
UPWord shift(const UPWord& w, std::size_t n);

Ordering lex_compare(const UPWord& x, const UPWord& y);
/// Compares sigma^n(x) with y without materializing the shift.
Ordering lex_compare_shifted(const UPWord& x, std::size_t n, const UPWord& y);
/// Compares w 0^omega, shifted by n, with y.
Ordering lex_compare_padded(const FiniteWord& w, std::size_t n, const UPWord& y);

bool ends_in_zeros(const UPWord& w);
std::set<FiniteWord> factors_up_to(const UPWord& w, std::size_t max_len);

/// Compact notation ("200(10)") when every digit is at most 9, comma form otherwise.
std::string to_notation(const UPWord& w);
/// Rendering with the omega exponent: "200(10)^ω", "110^ω".
std::string to_display(const UPWord& w);
std::string to_string(const FiniteWord& w);

/*
 * Word notation:
 *   compact  "200(10)"       digits 0-9, parenthesized suffix is the period
 *   general  "3,4,(2,7)"     comma separated, multi-digit letters allowed
 * A word without a period is finite (implicit 0^omega). Throws Syntax.
 */
UPWord parse_word(std::string_view text);
FiniteWord parse_finite_word(std::string_view text);

std::size_t lcm_size(std::size_t a, std::size_t b);

}  // namespace cantor
