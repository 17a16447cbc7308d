#include "cantor/expansion.hpp"

#include <algorithm>
#include <unordered_map>

#include "cantor/error.hpp"

namespace cantor {

ExactReal val(const UPBase& base, const UPWord& w) {
  // Sum the aperiodic head directly; past it both the word and the base
  // repeat with period L = lcm(|v|, p), so the tail is a geometric series.
  const std::size_t head = std::max(w.preperiod().size(), base.preperiod().size());
  const std::size_t block = lcm_size(w.period().size(), base.length());
  ExactReal sum;
  ExactReal prod(1L);
  for (std::size_t n = 0; n < head; ++n) {
    prod *= base.beta_at(n);
    if (Digit d = w.at(n)) sum += ExactReal(to_integer(d)) / prod;
  }
  if (w.ends_in_zeros() && head >= w.preperiod().size()) return sum;
  const ExactReal head_prod = prod;
  ExactReal tail;
  for (std::size_t n = head; n < head + block; ++n) {
    prod *= base.beta_at(n);
    if (Digit d = w.at(n)) tail += ExactReal(to_integer(d)) / prod;
  }
  ExactReal ratio = prod / head_prod;  // product of one aligned block
  return sum + tail * ratio / (ratio - ExactReal(1L));
}

ExactReal val_prefix(const AnyBase& base, const DigitStream& w, std::size_t n) {
  ExactReal sum;
  ExactReal prod(1L);
  for (std::size_t k = 0; k < n; ++k) {
    prod *= beta_at(base, k);
    if (Digit d = w(k)) sum += ExactReal(to_integer(d)) / prod;
  }
  return sum;
}

std::pair<Digit, ExactReal> t_step(const ExactReal& beta, const ExactReal& x) {
  if (x.sign() < 0) throw Error(ErrorKind::NegativeInput, "t_step on " + format(x));
  ExactReal y = beta * x;
  Integer f = floor(y);
  return {to_digit(f), y - ExactReal(f)};
}

namespace {

void check_x(const ExactReal& x) {
  if (x.sign() < 0) throw Error(ErrorKind::NegativeInput, "x = " + format(x));
  if (x > ExactReal(1L)) throw Error(ErrorKind::XOutOfRange, "x = " + format(x) + " exceeds 1");
}

struct State {
  ExactReal remainder;
  std::size_t cls;
  bool operator==(const State&) const = default;
};

struct StateHash {
  std::size_t operator()(const State& s) const { return s.remainder.hash() * 31 + s.cls; }
};

}  // namespace

GreedyTrace greedy_digits(const UPBase& base, const ExactReal& x, std::size_t max_steps) {
  check_x(x);
  GreedyTrace trace;
  std::unordered_map<State, std::size_t, StateHash> seen;
  ExactReal r = x;
  for (std::size_t n = 0; n < max_steps; ++n) {
    State state{r, base.class_of(n)};
    auto [it, inserted] = seen.emplace(std::move(state), n);
    if (!inserted) {
      trace.status = GreedyTrace::Status::Periodic;
      trace.period_start = it->second;
      return trace;
    }
    auto [digit, next] = t_step(base.beta_at(n), r);
    trace.digits.push_back(digit);
    trace.remainders.push_back(next);
    r = std::move(next);
    if (r.is_zero()) {
      trace.status = GreedyTrace::Status::Finite;
      return trace;
    }
  }
  trace.status = GreedyTrace::Status::Truncated;
  return trace;
}

GreedyTrace greedy_digits(const StreamBase& base, const ExactReal& x, std::size_t max_steps) {
  check_x(x);
  GreedyTrace trace;
  ExactReal r = x;
  for (std::size_t n = 0; n < max_steps; ++n) {
    auto [digit, next] = t_step(base.beta_at(n), r);
    trace.digits.push_back(digit);
    trace.remainders.push_back(next);
    r = std::move(next);
    if (r.is_zero()) {
      trace.status = GreedyTrace::Status::Finite;
      return trace;
    }
  }
  trace.status = GreedyTrace::Status::Truncated;
  return trace;
}

GreedyTrace greedy_digits(const AnyBase& base, const ExactReal& x, std::size_t max_steps) {
  return std::visit([&](const auto& b) { return greedy_digits(b, x, max_steps); }, base);
}

Expansion expansion_of(const UPBase& base, const ExactReal& x, std::size_t max_steps) {
  GreedyTrace t = greedy_digits(base, x, max_steps);
  Expansion e;
  e.prefix = t.digits;
  switch (t.status) {
    case GreedyTrace::Status::Finite:
      e.word = UPWord::finite(t.digits);
      break;
    case GreedyTrace::Status::Periodic:
      e.word = UPWord(FiniteWord(t.digits.begin(), t.digits.begin() + t.period_start),
                      FiniteWord(t.digits.begin() + t.period_start, t.digits.end()));
      break;
    case GreedyTrace::Status::Truncated:
      break;
  }
  return e;
}

bool QuasiGreedyTable::complete() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const QuasiGreedyEntry& e) { return e.dstar.known(); });
}

const UPWord& QuasiGreedyTable::dstar(std::size_t cls) const {
  const auto& e = entries_.at(cls);
  if (!e.dstar.known()) {
    throw Error(ErrorKind::UnknownQuasiGreedy,
                "quasi-greedy expansion of class " + std::to_string(cls) +
                    " not periodic within budget (prefix " + to_string(FiniteWord(e.dstar.prefix.begin(),
                                                                    e.dstar.prefix.begin() + std::min<std::size_t>(e.dstar.prefix.size(), 32))) +
                    "...)");
  }
  return *e.dstar.word;
}

QuasiGreedyTable quasi_greedy_table(const UPBase& base, std::size_t max_steps) {
  const std::size_t classes = base.num_classes();
  std::vector<QuasiGreedyEntry> entries(classes);
  std::vector<bool> done(classes, false);
  auto greedy = [&](std::size_t c) -> const Expansion& {
    if (!done[c]) {
      entries[c].greedy = expansion_of(base.shift(c), ExactReal(1L), max_steps);
      done[c] = true;
    }
    return entries[c].greedy;
  };

  for (std::size_t start = 0; start < classes; ++start) {
    FiniteWord acc;
    std::vector<std::optional<std::size_t>> entered(classes);
    std::size_t cur = start;
    Expansion& out = entries[start].dstar;
    for (;;) {
      if (entered[cur]) {
        // d*_cur recurs at the end of acc: acc[pos..] is a period.
        std::size_t pos = *entered[cur];
        out.word = UPWord(FiniteWord(acc.begin(), acc.begin() + pos), FiniteWord(acc.begin() + pos, acc.end()));
        break;
      }
      entered[cur] = acc.size();
      const Expansion& d = greedy(cur);
      if (!d.known()) {
        acc.insert(acc.end(), d.prefix.begin(), d.prefix.end());
        break;
      }
      const UPWord& w = *d.word;
      if (!w.ends_in_zeros()) {
        FiniteWord pre = acc;
        pre.insert(pre.end(), w.preperiod().begin(), w.preperiod().end());
        out.word = UPWord(std::move(pre), w.period());
        break;
      }
      // Canonical finite word: its preperiod ends with a nonzero digit.
      const FiniteWord& eps = w.preperiod();
      acc.insert(acc.end(), eps.begin(), eps.end());
      acc.back() -= 1;
      cur = base.advance(cur, eps.size());
    }
    out.prefix = out.word ? out.word->prefix(acc.size()) : acc;
  }
  return QuasiGreedyTable(base, std::move(entries));
}

}  // namespace cantor
