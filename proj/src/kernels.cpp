#include "cantor/kernels.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cantor/admissibility.hpp"
#include "cantor/automaton.hpp"
#include "cantor/error.hpp"

namespace cantor {

namespace {

using StateSet = std::vector<std::size_t>;  // sorted, unique

StateSet step_set(const ShiftAutomaton& a, const StateSet& from, Digit d) {
  StateSet out;
  for (std::size_t s : from) {
    if (auto t = a.step(s, d)) out.push_back(*t);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StateSet initial_set(const ShiftAutomaton& a) {
  StateSet s = a.initial();
  std::sort(s.begin(), s.end());
  return s;
}

struct Node {
  FiniteWord word;
  StateSet states;
};

struct Children {
  std::vector<Node> accepted;
  std::vector<FiniteWord> forbidden;
};

// Children of one accepted word: accepted extensions continue the frontier;
// a rejected extension is minimal forbidden when dropping its first letter
// leaves an accepted word.
Children expand(const ShiftAutomaton& a, const Node& node) {
  Children out;
  for (Digit d = 0; d <= a.alphabet_max(); ++d) {
    FiniteWord w = node.word;
    w.push_back(d);
    StateSet next = step_set(a, node.states, d);
    if (!next.empty()) {
      out.accepted.push_back({std::move(w), std::move(next)});
    } else if (accepts_factor(a, FiniteWord(w.begin() + 1, w.end()))) {
      out.forbidden.push_back(std::move(w));
    }
  }
  return out;
}

bool shortlex_less(const FiniteWord& x, const FiniteWord& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::uint64_t total_words(Digit alphabet_max, std::size_t max_len) {
  std::uint64_t total = 0;
  for (std::size_t len = 0; len <= max_len; ++len) total += word_count(alphabet_max, len);
  return total;
}

// Maps a global index in shortlex order to its word.
FiniteWord shortlex_word(std::uint64_t index, Digit alphabet_max) {
  std::size_t len = 0;
  for (;;) {
    std::uint64_t c = word_count(alphabet_max, len);
    if (index < c) return word_at(index, alphabet_max, len);
    index -= c;
    ++len;
  }
}

}  // namespace

std::uint64_t word_count(Digit alphabet_max, std::size_t len) {
  const std::uint64_t base = alphabet_max + 1;
  if (base == 0) throw Error(ErrorKind::DigitOverflow, "alphabet too large to enumerate");
  std::uint64_t c = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorKind::BudgetExceeded, "too many words to enumerate");
    }
    c *= base;
  }
  return c;
}

FiniteWord word_at(std::uint64_t index, Digit alphabet_max, std::size_t len) {
  const std::uint64_t base = alphabet_max + 1;
  FiniteWord w(len, 0);
  for (std::size_t i = len; i-- > 0;) {
    w[i] = index % base;
    index /= base;
  }
  return w;
}

namespace reference {

std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len) {
  std::vector<FiniteWord> out;
  std::vector<Node> frontier{{FiniteWord{}, initial_set(a)}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<Node> next;
    for (const Node& n : frontier) {
      Children e = expand(a, n);
      std::move(e.accepted.begin(), e.accepted.end(), std::back_inserter(next));
      std::move(e.forbidden.begin(), e.forbidden.end(), std::back_inserter(out));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<char> classify_factors(const ShiftAutomaton& a, const std::vector<FiniteWord>& words) {
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = accepts_factor(a, words[i]);
  return out;
}

std::vector<char> classify_prefixes(const LanguageHandle& lang, const std::vector<FiniteWord>& words,
                                    std::size_t cls) {
  std::vector<char> out(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) out[i] = lang.in_pref_D(words[i], cls);
  return out;
}

std::vector<FiniteWord> disagreements(Digit alphabet_max, std::size_t max_len, const WordPredicate& f,
                                      const WordPredicate& g, std::size_t limit) {
  std::vector<FiniteWord> out;
  const std::uint64_t total = total_words(alphabet_max, max_len);
  for (std::uint64_t i = 0; i < total && out.size() < limit; ++i) {
    FiniteWord w = shortlex_word(i, alphabet_max);
    if (f(w) != g(w)) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace reference

namespace kernels {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<FiniteWord> forbidden_factors(const ShiftAutomaton& a, std::size_t max_len) {
  std::vector<FiniteWord> out;
  std::vector<Node> frontier{{FiniteWord{}, initial_set(a)}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(frontier.size());
    std::vector<Children> parts(frontier.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i) parts[i] = expand(a, frontier[i]);
    // Concatenating in frontier order keeps the frontier lexicographic.
    std::vector<Node> next;
    for (Children& e : parts) {
      std::move(e.accepted.begin(), e.accepted.end(), std::back_inserter(next));
      std::move(e.forbidden.begin(), e.forbidden.end(), std::back_inserter(out));
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<char> classify_factors(const ShiftAutomaton& a, const std::vector<FiniteWord>& words) {
  std::vector<char> out(words.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(words.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = accepts_factor(a, words[i]);
  return out;
}

std::vector<char> classify_prefixes(const LanguageHandle& lang, const std::vector<FiniteWord>& words,
                                    std::size_t cls) {
  std::vector<char> out(words.size());
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(words.size());
  // Exceptions may not cross the parallel region; the first one is rethrown.
  std::exception_ptr failure;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      out[i] = lang.in_pref_D(words[i], cls);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<FiniteWord> disagreements(Digit alphabet_max, std::size_t max_len, const WordPredicate& f,
                                      const WordPredicate& g, std::size_t limit) {
  const std::uint64_t total = total_words(alphabet_max, max_len);
  // Collect indices per thread, then keep the `limit` smallest so the
  // result matches the serial scan.
  std::vector<std::uint64_t> hits;
  std::exception_ptr failure;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 256) nowait
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      try {
        FiniteWord w = shortlex_word(static_cast<std::uint64_t>(i), alphabet_max);
        if (f(w) != g(w)) local.push_back(static_cast<std::uint64_t>(i));
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical
    hits.insert(hits.end(), local.begin(), local.end());
  }
  if (failure) std::rethrow_exception(failure);
  std::sort(hits.begin(), hits.end());
  if (hits.size() > limit) hits.resize(limit);
  std::vector<FiniteWord> out;
  for (std::uint64_t i : hits) out.push_back(shortlex_word(i, alphabet_max));
  return out;
}

}  // namespace kernels

}  // namespace cantor
