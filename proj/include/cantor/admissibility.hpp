#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/expansion.hpp"
#include "cantor/words.hpp"

namespace cantor {

/*
 * Membership tests for the greedy set D, its closure S and Pref(D) of a
 * UPBase. All tests compare shifts of a word against the quasi-greedy
 * expansions of 1 of the matching shift classes. Since both the word and
 * the base are ultimately periodic, the pairs (sigma^n(a), class(n)) repeat
 * after max(|u_a|, r) + lcm(|v_a|, p) shifts; that many comparisons decide.
 *
 * Every query throws UnknownQuasiGreedy when it needs an unresolved entry.
 */
class LanguageHandle {
 public:
  explicit LanguageHandle(const UPBase& base, std::size_t max_steps = kDefaultMaxSteps)
      : table_(quasi_greedy_table(base, max_steps)), max_steps_(max_steps) {}
  explicit LanguageHandle(QuasiGreedyTable table, std::size_t max_steps = kDefaultMaxSteps)
      : table_(std::move(table)), max_steps_(max_steps) {}

  const UPBase& base() const { return table_.base(); }
  const QuasiGreedyTable& table() const { return table_; }

  /// sigma^n(a) <_lex d*_{class(n)} for every n, starting from class `cls`.
  bool in_D(const UPWord& a, std::size_t cls = 0) const;
  /// Same with <=.
  bool in_S(const UPWord& a, std::size_t cls = 0) const;
  /// w in Pref(D) iff w 0^omega in D.
  bool in_pref_D(const FiniteWord& w, std::size_t cls = 0) const;
  /// val(a) == x and sigma^n(a) <_lex d*_{class(n)} for every n >= 1. A direct
  /// greedy run on x answers first; the d* comparison is the fallback.
  bool is_greedy_expansion(const UPWord& a, const ExactReal& x) const;

  /// X_{beta^(cls), l} = { t_0 ... t_{l-2} s : s < t_{l-1} } with t = d*_cls.
  std::vector<FiniteWord> x_set(std::size_t cls, std::size_t ell) const;
  /// Y_{beta^(cls), h}, truncated to words of length <= max_len. Alternate bases only.
  std::vector<FiniteWord> y_set(std::size_t cls, std::size_t h, std::size_t max_len) const;

 private:
  enum class Strictness { Strict, Weak };
  bool shifts_below(const UPWord& a, std::size_t cls, std::size_t first, Strictness s) const;

  QuasiGreedyTable table_;
  std::size_t max_steps_;
};

bool in_D(const UPBase& base, const UPWord& a);
bool in_S(const UPBase& base, const UPWord& a);
bool in_pref_D(const UPBase& base, const FiniteWord& w);
bool is_greedy_expansion(const UPBase& base, const UPWord& a, const ExactReal& x,
                         std::size_t max_steps = kDefaultMaxSteps);

/*
 * Decides a == d_beta(1) for an alternate base from the quasi-greedy
 * expansions of classes 1..p-1 only:
 *   sigma^{pm}(a) <_lex a for m >= 1, and
 *   sigma^{pm+i}(a) <_lex d*_i for m >= 0, 1 <= i < p.
 * `dstar_tail[i-1]` is d*_i. Throws NotAlternate, NotARepresentationOf1.
 */
bool parry2_check(const UPBase& base, const UPWord& a, std::span<const UPWord> dstar_tail);
/// Same, taking d*_1..d*_{p-1} from a freshly computed table.
bool parry2_check(const UPBase& base, const UPWord& a, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace cantor
