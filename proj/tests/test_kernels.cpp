#include "doctest.h"

#include "cantor/admissibility.hpp"
#include "cantor/automaton.hpp"
#include "cantor/kernels.hpp"
#include "support.hpp"

using namespace cantor;
using namespace cantor::test;

namespace {

std::vector<FiniteWord> all_words(Digit alphabet_max, std::size_t max_len) {
  std::vector<FiniteWord> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t i = 0; i < word_count(alphabet_max, len); ++i) out.push_back(word_at(i, alphabet_max, len));
  }
  return out;
}

}  // namespace

TEST_CASE("word enumeration") {
  CHECK(word_count(3, 0) == 1);
  CHECK(word_count(3, 5) == 1024);
  CHECK(word_at(0, 3, 3) == FiniteWord{0, 0, 0});
  CHECK(word_at(27, 3, 3) == FiniteWord{1, 2, 3});
  CHECK(word_at(63, 3, 3) == FiniteWord{3, 3, 3});
}

TEST_CASE("parallel kernels match the serial references") {
  INFO("threads: " << kernels::max_threads());
  for (const std::string& s : {kPhiSquared, kThreePhiPhi, kSqrt13, kSqrt10, std::string("per:[2,3]")}) {
    CAPTURE(s);
    LanguageHandle l(B(s));
    ShiftAutomaton a = trim_accessible(build_automaton(l.table()));
    const std::size_t len = a.alphabet_max() > 5 ? 4 : 7;
    CHECK(kernels::forbidden_factors(a, len) == reference::forbidden_factors(a, len));
    auto words = all_words(a.alphabet_max(), len - 2);
    CHECK(kernels::classify_factors(a, words) == reference::classify_factors(a, words));
    for (std::size_t c = 0; c < l.base().num_classes(); ++c) {
      CHECK(kernels::classify_prefixes(l, words, c) == reference::classify_prefixes(l, words, c));
    }
  }
}

TEST_CASE("disagreements are reported in enumeration order") {
  WordPredicate f = [](const FiniteWord& w) { return w.size() % 2 == 0; };
  WordPredicate g = [](const FiniteWord& w) { return w.size() % 2 == 0 || (w.size() == 3 && w[0] == 2); };
  auto k = kernels::disagreements(2, 5, f, g, 5);
  auto r = reference::disagreements(2, 5, f, g, 5);
  CHECK(k == r);
  REQUIRE(k.size() == 5);
  CHECK(k.front() == FiniteWord{2, 0, 0});
  CHECK(k.back() == FiniteWord{2, 1, 1});
  CHECK(kernels::disagreements(3, 6, f, f).empty());
}

TEST_CASE("kernel forbidden factors on the full shift") {
  ShiftAutomaton a = build_automaton(quasi_greedy_table(B("per:[2,2]")));
  CHECK(kernels::forbidden_factors(a, 8) == std::vector<FiniteWord>{{2}});
}
