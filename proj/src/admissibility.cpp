#include "cantor/admissibility.hpp"

#include <algorithm>
#include <optional>

#include "cantor/error.hpp"

namespace cantor {

namespace {

// Shifts of `a` read from class `cls` cover every (suffix, class) pair once n reaches this.
std::size_t shift_bound(const UPBase& base, const UPWord& a, std::size_t cls) {
  std::size_t r = base.preperiod().size();
  std::size_t to_periodic = cls < r ? r - cls : 0;
  return std::max(a.preperiod().size(), to_periodic) + lcm_size(a.period().size(), base.length());
}

}  // namespace

bool LanguageHandle::shifts_below(const UPWord& a, std::size_t cls, std::size_t first,
                                  Strictness s) const {
  const UPBase& b = base();
  const std::size_t bound = shift_bound(b, a, cls) + first;
  for (std::size_t n = first; n < bound; ++n) {
    Ordering o = lex_compare_shifted(a, n, table_.dstar(b.advance(cls, n)));
    if (o == Ordering::GT) return false;
    if (o == Ordering::EQ && s == Strictness::Strict) return false;
  }
  return true;
}

bool LanguageHandle::in_D(const UPWord& a, std::size_t cls) const {
  return shifts_below(a, cls, 0, Strictness::Strict);
}

bool LanguageHandle::in_S(const UPWord& a, std::size_t cls) const {
  return shifts_below(a, cls, 0, Strictness::Weak);
}

bool LanguageHandle::in_pref_D(const FiniteWord& w, std::size_t cls) const {
  // Shifts past |w| are 0^omega, which is below every d*.
  const UPBase& b = base();
  for (std::size_t n = 0; n < w.size(); ++n) {
    if (lex_compare_padded(w, n, table_.dstar(b.advance(cls, n))) != Ordering::LT) return false;
  }
  return true;
}

namespace {

// The greedy run on x settles most cases without any d*.
std::optional<bool> greedy_run_decides(const UPBase& base, const UPWord& a, const ExactReal& x,
                                       std::size_t max_steps) {
  if (val(base, a) != x) return false;
  // Doubling budgets let an early mismatch stop the run early.
  for (std::size_t budget = 16;; budget *= 2) {
    GreedyTrace t = greedy_digits(base, x, std::min(budget, max_steps));
    for (std::size_t n = 0; n < t.digits.size(); ++n) {
      if (t.digits[n] != a.at(n)) return false;
    }
    if (t.status != GreedyTrace::Status::Truncated) return true;
    if (budget >= max_steps) return std::nullopt;
  }
}

}  // namespace

bool LanguageHandle::is_greedy_expansion(const UPWord& a, const ExactReal& x) const {
  if (auto r = greedy_run_decides(base(), a, x, max_steps_)) return *r;
  return shifts_below(a, 0, 1, Strictness::Strict);
}

std::vector<FiniteWord> LanguageHandle::x_set(std::size_t cls, std::size_t ell) const {
  std::vector<FiniteWord> out;
  if (ell == 0) return out;
  const UPWord& t = table_.dstar(cls);
  FiniteWord stem = t.prefix(ell);
  Digit top = stem.back();
  for (Digit s = 0; s < top; ++s) {
    stem.back() = s;
    out.push_back(stem);
  }
  return out;
}

std::vector<FiniteWord> LanguageHandle::y_set(std::size_t cls, std::size_t h, std::size_t max_len) const {
  if (!base().is_alternate()) throw Error(ErrorKind::NotAlternate, "Y sets need an alternate base");
  const std::size_t p = base().length();
  std::vector<FiniteWord> out;
  for (std::size_t ell = 1; ell <= max_len; ++ell) {
    if (ell % p != h % p) continue;
    auto part = x_set(cls, ell);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool in_D(const UPBase& base, const UPWord& a) {
  return LanguageHandle(base).in_D(a);
}

bool in_S(const UPBase& base, const UPWord& a) {
  return LanguageHandle(base).in_S(a);
}

bool in_pref_D(const UPBase& base, const FiniteWord& w) {
  return LanguageHandle(base).in_pref_D(w);
}

bool is_greedy_expansion(const UPBase& base, const UPWord& a, const ExactReal& x, std::size_t max_steps) {
  if (auto r = greedy_run_decides(base, a, x, max_steps)) return *r;
  return LanguageHandle(base, max_steps).is_greedy_expansion(a, x);
}

bool parry2_check(const UPBase& base, const UPWord& a, std::span<const UPWord> dstar_tail) {
  if (!base.is_alternate()) throw Error(ErrorKind::NotAlternate, "parry2_check needs an alternate base");
  const std::size_t p = base.length();
  if (dstar_tail.size() + 1 != p) {
    throw Error(ErrorKind::UnknownQuasiGreedy, "expected " + std::to_string(p - 1) + " quasi-greedy words");
  }
  if (val(base, a) != ExactReal(1L)) {
    throw Error(ErrorKind::NotARepresentationOf1, to_notation(a) + " does not represent 1");
  }
  // (sigma^n(a), n mod p) repeats after |u_a| + lcm(|v_a|, p) shifts; one extra
  // period covers the m >= 1 start of the first family.
  const std::size_t bound = a.preperiod().size() + lcm_size(a.period().size(), p) + p;
  for (std::size_t n = 1; n < bound; ++n) {
    std::size_t i = n % p;
    const UPWord& ref = i == 0 ? a : dstar_tail[i - 1];
    if (lex_compare_shifted(a, n, ref) != Ordering::LT) return false;
  }
  return true;
}

bool parry2_check(const UPBase& base, const UPWord& a, std::size_t max_steps) {
  if (!base.is_alternate()) throw Error(ErrorKind::NotAlternate, "parry2_check needs an alternate base");
  QuasiGreedyTable table = quasi_greedy_table(base, max_steps);
  std::vector<UPWord> tail;
  for (std::size_t i = 1; i < base.length(); ++i) tail.push_back(table.dstar(i));
  return parry2_check(base, a, tail);
}

}  // namespace cantor
