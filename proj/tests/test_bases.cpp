#include "doctest.h"

#include "cantor/error.hpp"
#include "cantor/bases.hpp"
#include "support.hpp"

using namespace cantor;
using namespace cantor::test;

TEST_CASE("entries must exceed 1") {
  try {
    B("per:[2,1]");
    FAIL("expected EntryNotGreaterThanOne");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::EntryNotGreaterThanOne);
  }
  CHECK_THROWS_AS(B("per:[2,1/2]"), Error);
  CHECK_THROWS_AS(B("per:[sqrt(2)+1,sqrt(3)+1]"), Error);  // mixed fields
  CHECK_THROWS_AS(B("per:[]"), Error);
  CHECK_THROWS_AS(B("pre:[2]"), Error);
}

TEST_CASE("shift classes") {
  UPBase b = B(kSqrt13Pre);
  CHECK(b.num_classes() == 3);
  CHECK(b.class_of(0) == 0);
  CHECK(b.class_of(1) == 1);
  CHECK(b.class_of(2) == 2);
  CHECK(b.class_of(3) == 1);
  CHECK(b.advance(2, 1) == 1);
  CHECK(b.beta_at(5) == R("(1+sqrt(13))/2"));
}

TEST_CASE("shift_base") {
  CHECK(shift_base(B(kThreePhiPhi), 1) == B("per:[phi,phi,3]"));
  CHECK(shift_base(B(kThreePhiPhi), 0) == B(kThreePhiPhi));
  CHECK(shift_base(B(kThreePhiPhi), 3) == B(kThreePhiPhi));
  CHECK(shift_base(B(kSqrt13Pre), 1) == B(kSqrt13));
  // The period is kept as written.
  CHECK(B("per:[phi,phi]").length() == 2);
  // A preperiod that rotates into the period is absorbed.
  CHECK(B("pre:[3] per:[2,3]") == B("per:[3,2]"));
}

TEST_CASE("product_prefix") {
  CHECK(B("per:[2,3]").product_prefix(4) == ExactReal(36L));
  CHECK(B(kThreePhiPhi).product_prefix(0) == ExactReal(1L));
  CHECK(B("per:[phi,phi]").product_prefix(2) == R("(3+sqrt(5))/2"));
  CHECK(B(kSqrt13Pre).product_prefix(5) == R("sqrt(13)*((1+sqrt(13))/2*(5+sqrt(13))/6)*((1+sqrt(13))/2*(5+sqrt(13))/6)"));
}

TEST_CASE("alphabet bound") {
  CHECK(alphabet_bound(B(kPhiSquared)) == 5);
  CHECK(alphabet_bound(B("per:[2,3]")) == 3);
  CHECK(alphabet_bound(B(kSqrt10)) == 9);
}

TEST_CASE("stream bases") {
  StreamBase tm = thue_morse_base();
  ExactReal a = R("(1+sqrt(13))/2"), b = R("(5+sqrt(13))/6");
  std::vector<ExactReal> expect{a, b, b, a, b, a, a, b};
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(tm.beta_at(n) == expect[n]);
  CHECK(tm.divergence_asserted());
  StreamBase conv = convergent_product_fixture();
  CHECK_FALSE(conv.divergence_asserted());
  CHECK(conv.beta_at(0) == R("3/2"));
  StreamBase bad([](std::size_t) { return ExactReal(1L); }, true);
  CHECK_THROWS_AS(bad.beta_at(0), Error);
}

TEST_CASE("notation round-trip") {
  for (const std::string& s : {kThreePhiPhi, kSqrt13, kSqrt6, kSqrt13Pre, kSqrt10, kPhiSquared, kPisot}) {
    CAPTURE(s);
    UPBase b = B(s);
    CHECK(B(to_notation(b)) == b);
  }
  CHECK(std::holds_alternative<StreamBase>(parse_base("thue-morse")));
}
