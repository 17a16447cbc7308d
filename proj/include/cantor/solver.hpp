#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cantor/bases.hpp"
#include "cantor/exact_real.hpp"
#include "cantor/expansion.hpp"
#include "cantor/words.hpp"

namespace cantor {

/*
 * [lo, hi] around the unique base at which the word represents 1. The signs
 * are those of g = val - 1 at the endpoints, evaluated exactly: g(lo) > 0
 * and g(hi) <= 0, so the root lies in (lo, hi].
 */
struct Enclosure {
  Rational lo;
  Rational hi;
  int g_lo_sign = 0;
  int g_hi_sign = 0;
  std::size_t steps = 0;
  /// Integer polynomial (highest degree first) vanishing at the root, single bases only.
  std::optional<std::vector<Integer>> polynomial;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Sum of the digits is finite and at most 1.
bool sum_at_most_one(const UPWord& a);

/// Bisection for val_beta(a) = 1 over one real base. Throws SumNotGreaterThanOne, BudgetExceeded.
Enclosure solve_single_base(const UPWord& a, const Rational& tol, std::size_t max_steps = kDefaultMaxSteps);

/// x^{L+1} - sum a_n x^{L-n} for finite words, (x^k - 1)(x^m - ...) - ... for u v^omega.
std::vector<Integer> representation_polynomial(const UPWord& a);

struct BlockRecord {
  std::size_t n = 0;    // first position of the zero block
  std::size_t ell = 0;  // its length
  Rational alpha;       // entry used inside the block
};

struct ConstructedBase {
  StreamBase base;
  /// The same base as a UPBase; the construction is local, so it inherits the word's periodicity.
  UPBase up_base;
  std::vector<BlockRecord> log;
  /// Prefix lengths n_k + ell_k + 1 after each logged block.
  std::vector<std::size_t> boundaries() const;
};

/// A rational alpha with 1 < alpha and alpha^ell < top, near top^(1/(2 ell)).
Rational block_alpha(const Integer& top, std::size_t ell);

/*
 * Cantor base with beta_n = a_n + 1 off the zero blocks, alpha inside a
 * block and (a_n + 1) / alpha^ell right after it. Logs the first
 * `log_blocks` blocks. Throws SumNotGreaterThanOne, ZeroPeriod.
 */
ConstructedBase construct_cantor_base(const UPWord& a, std::size_t log_blocks = 20);

struct AlternateSolution {
  std::size_t p = 1;
  std::vector<Rational> tail;  // beta_1 .. beta_{p-1}
  std::size_t N = 0;           // least N with a_0 + ... + a_N > 1
  Rational partial_sum;        // a_0 + ... + a_N
  std::vector<Rational> c;     // c_0 .. c_{floor(N/p)}
  Enclosure beta0;

  UPBase base_at(const Rational& beta0) const;
};

/// (prod tail)^(floor(N/p)+1) <= partial_sum.
bool tail_inequality_holds(const std::vector<Rational>& tail, std::size_t N, std::size_t p,
                           const Rational& partial_sum);

/*
 * Alternate base (beta_0, tail) of length p with val(a) = 1. Without a tail,
 * every tail entry is 1 + 1/q for the least q meeting the inequality.
 * Throws SumNotGreaterThanOne, TailInequalityViolated, EntryNotGreaterThanOne.
 */
AlternateSolution construct_alternate_base(const UPWord& a, std::size_t p,
                                           const std::optional<std::vector<Rational>>& tail,
                                           const Rational& tol, std::size_t max_steps = kDefaultMaxSteps);

}  // namespace cantor
