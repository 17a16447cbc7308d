#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cantor/exact_real.hpp"
#include "cantor/words.hpp"

namespace cantor {

/*
 * Ultimately periodic Cantor base (b_0 ... b_{r-1}; overline{c_0 ... c_{p-1}}).
 * Alternate bases are the case r = 0; p is then the length of the base.
 *
 * Positions fall into r + p shift classes: class(n) = n for n < r and
 * r + (n - r) mod p otherwise. Two positions in the same class have the
 * same shifted base. The period is kept as given (not reduced to a
 * primitive block), so p is the length the caller chose; only the
 * preperiod is minimized.
 */
class UPBase {
 public:
  UPBase(std::vector<ExactReal> preperiod, std::vector<ExactReal> period);

  static UPBase alternate(std::vector<ExactReal> period) { return UPBase({}, std::move(period)); }

  const std::vector<ExactReal>& preperiod() const { return pre_; }
  const std::vector<ExactReal>& period() const { return per_; }
  FieldTag field() const { return field_; }

  bool is_alternate() const { return pre_.empty(); }
  std::size_t length() const { return per_.size(); }
  std::size_t num_classes() const { return pre_.size() + per_.size(); }

  std::size_t class_of(std::size_t n) const {
    return n < pre_.size() ? n : pre_.size() + (n - pre_.size()) % per_.size();
  }
  /// Class reached from class c after reading len more positions.
  std::size_t advance(std::size_t c, std::size_t len) const { return class_of(c + len); }

  const ExactReal& beta_at(std::size_t n) const { return entry(class_of(n)); }
  const ExactReal& entry(std::size_t cls) const {
    return cls < pre_.size() ? pre_[cls] : per_[cls - pre_.size()];
  }

  /// The base shifted by n positions, canonicalized.
  UPBase shift(std::size_t n) const;
  /// beta_0 * ... * beta_{n-1}.
  ExactReal product_prefix(std::size_t n) const;

  friend bool operator==(const UPBase&, const UPBase&) = default;

 private:
  std::vector<ExactReal> pre_;
  std::vector<ExactReal> per_;
  FieldTag field_;
};

/*
 * A base given by a producer n -> beta_n. Entries are checked (> 1) as
 * they are queried. Divergence of the product cannot be verified; callers
 * assert it, and only bounded-depth computations are offered.
 */
class StreamBase {
 public:
  using Producer = std::function<ExactReal(std::size_t)>;

  StreamBase(Producer producer, bool divergence_asserted)
      : producer_(std::move(producer)), divergence_asserted_(divergence_asserted) {}

  ExactReal beta_at(std::size_t n) const;
  ExactReal product_prefix(std::size_t n) const;
  bool divergence_asserted() const { return divergence_asserted_; }

 private:
  Producer producer_;
  bool divergence_asserted_;
};

using AnyBase = std::variant<UPBase, StreamBase>;

UPBase shift_base(const UPBase& base, std::size_t n);
ExactReal beta_at(const AnyBase& base, std::size_t n);
ExactReal product_prefix(const AnyBase& base, std::size_t n);
/// max floor(beta_i) over every entry.
Integer alphabet_bound(const UPBase& base);

/// Thue-Morse base over {(1+sqrt(13))/2, (5+sqrt(13))/6}.
StreamBase thue_morse_base();
/// 1 + 2^-(n+1): the product converges, so this is not a Cantor base.
StreamBase convergent_product_fixture();

/*
 * Base notation:
 *   per:[3,(1+sqrt(5))/2,phi]            alternate base
 *   pre:[sqrt(13)] per:[a,b]             ultimately periodic base
 *   thue-morse                           builtin stream base
 * Throws Syntax or EntryNotGreaterThanOne.
 */
AnyBase parse_base(std::string_view text);
UPBase parse_up_base(std::string_view text);
std::string to_notation(const UPBase& base);

}  // namespace cantor
