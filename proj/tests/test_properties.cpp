#include "doctest.h"

#include "properties.hpp"

using namespace cantor::test::props;

namespace {

void require(const Tally& t) {
  CHECK(t.cases >= kCases);
  CHECK(t.failures == 0);
  if (t.failures) MESSAGE("first failure: " << t.first_failure);
}

}  // namespace

TEST_CASE("value of the greedy expansion is x") { require(value_identity()); }
TEST_CASE("greedy remainders stay in [0, 1)") { require(remainder_bound()); }
TEST_CASE("greedy expansions are monotone") { require(monotonicity()); }
TEST_CASE("greedy words are admissible") { require(greedy_words_admissible()); }
TEST_CASE("quasi-greedy expansions never end in zeros and represent 1") { require(dstar_words()); }
TEST_CASE("lexicographic order and value agree on the closure") { require(lex_value_compatibility()); }
TEST_CASE("prefixes of the greedy set of (2,3) against brute force") { require(prefix_oracle()); }
