#include "cantor/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "cantor/error.hpp"

namespace cantor {

namespace {

using Poly = std::vector<Integer>;  // lowest degree first

Poly poly_mul(const Poly& x, const Poly& y) {
  Poly out(x.size() + y.size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

Poly poly_sub(Poly x, const Poly& y) {
  if (x.size() < y.size()) x.resize(y.size(), Integer(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
  while (x.size() > 1 && x.back() == 0) x.pop_back();
  return x;
}

// x^len - sum w_n x^{len-1-n}
Poly monic_minus(const FiniteWord& w) {
  Poly out(w.size() + 1, Integer(0));
  out[w.size()] = 1;
  for (std::size_t n = 0; n < w.size(); ++n) out[w.size() - 1 - n] -= to_integer(w[n]);
  return out;
}

Rational rpow(const Rational& x, std::size_t e) {
  Rational out(1);
  for (std::size_t i = 0; i < e; ++i) out *= x;
  return out;
}

Rational to_rational(Digit d) { return Rational(to_integer(d)); }

UPBase alternate_of(const Rational& beta0, const std::vector<Rational>& tail) {
  std::vector<ExactReal> per{ExactReal(beta0)};
  for (const Rational& t : tail) per.emplace_back(t);
  return UPBase::alternate(std::move(per));
}

// Sign of val - 1 over the alternate base (beta0, tail).
int excess_sign(const UPWord& a, const Rational& beta0, const std::vector<Rational>& tail) {
  return (val(alternate_of(beta0, tail), a) - ExactReal(1L)).sign();
}

void charge(std::size_t& steps, std::size_t max_steps) {
  if (++steps > max_steps) {
    throw Error(ErrorKind::BudgetExceeded, "bisection exceeded " + std::to_string(max_steps) + " steps");
  }
}

// The bracket search does not depend on tol, so tighter tolerances refine
// the same sequence of intervals.
Enclosure bisect(const UPWord& a, const std::vector<Rational>& tail, const Rational& tol,
                 std::size_t max_steps) {
  if (sgn(tol) <= 0) throw Error(ErrorKind::Syntax, "tolerance must be positive");
  Enclosure e;
  Rational lo(2);
  while (excess_sign(a, lo, tail) <= 0) {
    lo = 1 + (lo - 1) / 2;
    charge(e.steps, max_steps);
  }
  Rational hi(std::max<Integer>(Integer(2), to_integer(a.at(0)) + to_integer(a.max_digit()) + 1));
  while (excess_sign(a, hi, tail) > 0) {
    hi *= 2;
    charge(e.steps, max_steps);
  }
  while (hi - lo > tol) {
    Rational mid = (lo + hi) / 2;
    if (excess_sign(a, mid, tail) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    charge(e.steps, max_steps);
  }
  e.lo = lo;
  e.hi = hi;
  e.g_lo_sign = excess_sign(a, lo, tail);
  e.g_hi_sign = excess_sign(a, hi, tail);
  return e;
}

std::pair<std::size_t, Rational> first_excess(const UPWord& a) {
  Rational s(0);
  for (std::size_t n = 0;; ++n) {
    s += to_rational(a.at(n));
    if (s > 1) return {n, s};
  }
}

void require_sum_above_one(const UPWord& a) {
  if (sum_at_most_one(a)) {
    throw Error(ErrorKind::SumNotGreaterThanOne, "digit sum of " + to_notation(a) + " is at most 1");
  }
}

Rational cantor_entry(const UPWord& a, std::size_t n) {
  const Digit d = a.at(n);
  if (d == 0) {
    std::size_t s = n;
    while (s > 0 && a.at(s - 1) == 0) --s;
    std::size_t e = n;
    while (a.at(e) == 0) ++e;
    return block_alpha(to_integer(a.at(e)) + 1, e - s);
  }
  const Rational top = to_rational(d) + 1;
  if (n == 0 || a.at(n - 1) != 0) return top;
  std::size_t s = n - 1;
  while (s > 0 && a.at(s - 1) == 0) --s;
  const std::size_t ell = n - s;
  return top / rpow(block_alpha(to_integer(d) + 1, ell), ell);
}

}  // namespace

bool sum_at_most_one(const UPWord& a) { return a.ends_in_zeros() && a.block_sum() <= 1; }

std::vector<Integer> representation_polynomial(const UPWord& a) {
  Poly p;
  if (a.ends_in_zeros()) {
    p = monic_minus(a.preperiod());
  } else {
    // 1 = val  <=>  (x^k - 1)(x^m - sum u_n x^{m-1-n}) = sum v_j x^{k-1-j}
    const FiniteWord& v = a.period();
    Poly xk(v.size() + 1, Integer(0));
    xk[v.size()] = 1;
    xk[0] = -1;
    Poly rhs(v.size(), Integer(0));
    for (std::size_t j = 0; j < v.size(); ++j) rhs[v.size() - 1 - j] = to_integer(v[j]);
    p = poly_sub(poly_mul(xk, monic_minus(a.preperiod())), rhs);
  }
  std::reverse(p.begin(), p.end());
  return p;
}

Enclosure solve_single_base(const UPWord& a, const Rational& tol, std::size_t max_steps) {
  require_sum_above_one(a);
  Enclosure e = bisect(a, {}, tol, max_steps);
  const Rational a0 = to_rational(a.at(0));
  if (e.hi < a0) throw std::logic_error("root below a_0");
  if (a.max_digit() <= a.at(0) && e.lo > a0 + 1) throw std::logic_error("root above a_0 + 1");
  e.polynomial = representation_polynomial(a);
  return e;
}

Rational block_alpha(const Integer& top, std::size_t ell) {
  // Bisect for top^(1/(2 ell)); its ell-th power is sqrt(top) < top.
  const Rational target(top);
  Rational lo(1);
  Rational hi(top);
  for (int i = 0; i < 24; ++i) {
    Rational mid = (lo + hi) / 2;
    if (rpow(mid, 2 * ell) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  for (;;) {
    Rational alpha = (lo + hi) / 2;
    if (alpha > 1 && rpow(alpha, ell) < target) return alpha;
    hi = alpha;
  }
}

std::vector<std::size_t> ConstructedBase::boundaries() const {
  std::vector<std::size_t> out;
  for (const BlockRecord& b : log) out.push_back(b.n + b.ell + 1);
  return out;
}

ConstructedBase construct_cantor_base(const UPWord& a, std::size_t log_blocks) {
  require_sum_above_one(a);
  if (a.ends_in_zeros()) throw Error(ErrorKind::ZeroPeriod, to_notation(a) + " has a zero period");

  std::vector<BlockRecord> log;
  const std::size_t scan = a.preperiod().size() + a.period().size() * (log_blocks + 2);
  for (std::size_t n = 0; n < scan && log.size() < log_blocks; ++n) {
    if (a.at(n) != 0 || (n > 0 && a.at(n - 1) == 0)) continue;
    std::size_t e = n;
    while (a.at(e) == 0) ++e;
    log.push_back({n, e - n, block_alpha(to_integer(a.at(e)) + 1, e - n)});
  }

  // For n >= |u| + 2|v| every run seen from n lies in the periodic part.
  const std::size_t r = a.preperiod().size() + 2 * a.period().size();
  std::vector<ExactReal> pre, per;
  for (std::size_t n = 0; n < r; ++n) pre.emplace_back(cantor_entry(a, n));
  for (std::size_t n = r; n < r + a.period().size(); ++n) per.emplace_back(cantor_entry(a, n));

  StreamBase stream([a](std::size_t n) { return ExactReal(cantor_entry(a, n)); }, true);
  return ConstructedBase{std::move(stream), UPBase(std::move(pre), std::move(per)), std::move(log)};
}

UPBase AlternateSolution::base_at(const Rational& beta0) const { return alternate_of(beta0, tail); }

bool tail_inequality_holds(const std::vector<Rational>& tail, std::size_t N, std::size_t p,
                           const Rational& partial_sum) {
  Rational prod(1);
  for (const Rational& t : tail) prod *= t;
  return rpow(prod, N / p + 1) <= partial_sum;
}

AlternateSolution construct_alternate_base(const UPWord& a, std::size_t p,
                                           const std::optional<std::vector<Rational>>& tail,
                                           const Rational& tol, std::size_t max_steps) {
  if (p == 0) throw Error(ErrorKind::Syntax, "alternate base length must be at least 1");
  require_sum_above_one(a);
  AlternateSolution sol;
  sol.p = p;
  std::tie(sol.N, sol.partial_sum) = first_excess(a);

  if (tail) {
    if (tail->size() != p - 1) {
      throw Error(ErrorKind::Syntax, "expected " + std::to_string(p - 1) + " tail entries");
    }
    for (const Rational& t : *tail) {
      if (t <= 1) throw Error(ErrorKind::EntryNotGreaterThanOne, "tail entry " + format(t) + " is not > 1");
    }
    if (!tail_inequality_holds(*tail, sol.N, p, sol.partial_sum)) {
      throw Error(ErrorKind::TailInequalityViolated,
                  "tail product to the power " + std::to_string(sol.N / p + 1) + " exceeds " + format(sol.partial_sum));
    }
    sol.tail = *tail;
  } else if (p > 1) {
    for (unsigned long q = 1;; ++q) {
      std::vector<Rational> candidate(p - 1, 1 + Rational(1, q));
      if (tail_inequality_holds(candidate, sol.N, p, sol.partial_sum)) {
        sol.tail = std::move(candidate);
        break;
      }
    }
  }

  Rational prod(1);
  for (const Rational& t : sol.tail) prod *= t;
  for (std::size_t m = 0; m <= sol.N / p; ++m) {
    Rational inner(0);
    Rational denom(1);
    for (std::size_t j = 0; j < p; ++j) {
      if (j > 0) denom *= sol.tail[j - 1];
      inner += to_rational(a.at(p * m + j)) / denom;
    }
    sol.c.push_back(inner / rpow(prod, m));
  }

  sol.beta0 = p == 1 ? solve_single_base(a, tol, max_steps) : bisect(a, sol.tail, tol, max_steps);
  return sol;
}

}  // namespace cantor
