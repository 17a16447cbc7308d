#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/exact_real.hpp"
#include "cantor/words.hpp"

namespace cantor {

inline constexpr std::size_t kDefaultMaxSteps = 10000;

/// sum_n w_n / (beta_0 ... beta_n), exact, via the geometric closed form of the tail.
ExactReal val(const UPBase& base, const UPWord& w);
/// sum_{k<n} w_k / (beta_0 ... beta_k).
ExactReal val_prefix(const AnyBase& base, const DigitStream& w, std::size_t n);

/// (floor(beta x), beta x - floor(beta x)). Throws NegativeInput.
std::pair<Digit, ExactReal> t_step(const ExactReal& beta, const ExactReal& x);

struct GreedyTrace {
  enum class Status { Finite, Periodic, Truncated };

  FiniteWord digits;
  std::vector<ExactReal> remainders;
  Status status = Status::Truncated;
  /// For Periodic: digits[period_start..] is the repeating block.
  std::size_t period_start = 0;
};

/*
 * Runs the greedy algorithm from x in [0, 1]. On a UPBase the pair
 * (remainder, shift class) is tracked and the run stops on the first exact
 * repeat; a zero remainder ends the run as Finite.
 * Throws NegativeInput, XOutOfRange.
 */
GreedyTrace greedy_digits(const UPBase& base, const ExactReal& x, std::size_t max_steps);
GreedyTrace greedy_digits(const StreamBase& base, const ExactReal& x, std::size_t max_steps);
GreedyTrace greedy_digits(const AnyBase& base, const ExactReal& x, std::size_t max_steps);

/// A word that is either known exactly or only by a computed prefix.
struct Expansion {
  std::optional<UPWord> word;
  FiniteWord prefix;

  bool known() const { return word.has_value(); }
};

Expansion expansion_of(const UPBase& base, const ExactReal& x, std::size_t max_steps = kDefaultMaxSteps);

struct QuasiGreedyEntry {
  Expansion greedy;  // d_{beta^(i)}(1)
  Expansion dstar;   // d*_{beta^(i)}(1)

  /// Preperiod and period lengths of the canonical dstar (zero when unknown).
  std::size_t m() const { return dstar.known() ? dstar.word->preperiod().size() : 0; }
  std::size_t n() const { return dstar.known() ? dstar.word->period().size() : 0; }
};

/// Quasi-greedy expansions of 1 for every shift class of a UPBase.
class QuasiGreedyTable {
 public:
  QuasiGreedyTable(UPBase base, std::vector<QuasiGreedyEntry> entries)
      : base_(std::move(base)), entries_(std::move(entries)) {}

  const UPBase& base() const { return base_; }
  std::size_t size() const { return entries_.size(); }
  const QuasiGreedyEntry& operator[](std::size_t cls) const { return entries_.at(cls); }

  bool complete() const;
  /// Throws UnknownQuasiGreedy when the entry was not resolved.
  const UPWord& dstar(std::size_t cls) const;
  const UPWord& dstar_at(std::size_t position) const { return dstar(base_.class_of(position)); }

 private:
  UPBase base_;
  std::vector<QuasiGreedyEntry> entries_;
};

/*
 * d*(1) = d(1) when infinite; otherwise eps_0 ... eps_{l-2} (eps_{l-1} - 1)
 * followed by d* of the class l positions later. The chain of finite
 * expansions is followed over shift classes until an infinite expansion is
 * met or a class repeats, which closes a period.
 */
QuasiGreedyTable quasi_greedy_table(const UPBase& base, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace cantor
