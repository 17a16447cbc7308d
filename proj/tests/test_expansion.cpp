#include "doctest.h"

#include "cantor/error.hpp"
#include "cantor/expansion.hpp"
#include "support.hpp"

using namespace cantor;
using namespace cantor::test;

namespace {

UPWord greedy1(const std::string& base, std::size_t shift = 0) {
  UPBase b = shift_base(B(base), shift);
  Expansion e = expansion_of(b, ExactReal(1L));
  REQUIRE(e.known());
  return *e.word;
}

}  // namespace

TEST_CASE("val") {
  CHECK(val(B("per:[phi,phi]"), W("110")) == ExactReal(1L));
  CHECK(val(B(kThreePhiPhi), UPWord()) == ExactReal(0L));
  CHECK(val(B(kThreePhiPhi), W("210(110)")) == R("(19+9*sqrt(5))/(3*(7+3*sqrt(5)))"));
  CHECK(val(B("per:[2,3]"), W("(12)")) == ExactReal(1L));
  CHECK(val(B("per:[2]"), W("(1)")) == ExactReal(1L));
}

TEST_CASE("val_prefix") {
  AnyBase b = B("per:[2,3]");
  CHECK(val_prefix(b, W("11").stream(), 2) == R("2/3"));
  CHECK(val_prefix(b, W("11").stream(), 0) == ExactReal(0L));
  AnyBase tm = thue_morse_base();
  GreedyTrace t = greedy_digits(tm, ExactReal(1L), 8);
  UPWord w = UPWord::finite(t.digits);
  ExactReal v = val_prefix(tm, w.stream(), 8);
  // 1 - v = r_8 / (beta_0 ... beta_7)
  CHECK(ExactReal(1L) - v == t.remainders.back() / product_prefix(tm, 8));
}

TEST_CASE("t_step") {
  CHECK(t_step(ExactReal(3L), ExactReal(1L)) == std::pair<Digit, ExactReal>{3, ExactReal(0L)});
  CHECK(t_step(R("phi"), ExactReal(0L)) == std::pair<Digit, ExactReal>{0, ExactReal(0L)});
  CHECK(t_step(R("phi"), ExactReal(1L)) == std::pair<Digit, ExactReal>{1, R("phi-1")});
  CHECK_THROWS_AS(t_step(R("phi"), R("-1/2")), Error);
}

TEST_CASE("greedy_digits") {
  GreedyTrace t = greedy_digits(B(kSqrt13), ExactReal(1L), 100);
  CHECK(t.digits == FiniteWord{2, 0, 1});
  CHECK(t.status == GreedyTrace::Status::Finite);
  GreedyTrace z = greedy_digits(B(kThreePhiPhi), ExactReal(0L), 5);
  CHECK(z.status == GreedyTrace::Status::Finite);
  GreedyTrace p = greedy_digits(B(kSqrt6), ExactReal(1L), 100);
  CHECK(p.status == GreedyTrace::Status::Periodic);
  FiniteWord pre(p.digits.begin(), p.digits.begin() + p.period_start);
  FiniteWord per(p.digits.begin() + p.period_start, p.digits.end());
  CHECK(UPWord(pre, per) == W("2(10)"));
  GreedyTrace cut = greedy_digits(shift_base(B(kPisot), 1), ExactReal(1L), 50);
  CHECK(cut.status == GreedyTrace::Status::Truncated);
  CHECK(cut.digits.size() == 50);
  CHECK_THROWS_AS(greedy_digits(B(kSqrt6), R("3/2"), 10), Error);
  CHECK_THROWS_AS(greedy_digits(B(kSqrt6), R("-1"), 10), Error);
}

TEST_CASE("greedy expansions of 1") {
  CHECK(greedy1(kThreePhiPhi, 0) == W("3"));
  CHECK(greedy1(kThreePhiPhi, 1) == W("11"));
  CHECK(greedy1(kThreePhiPhi, 2) == W("1(110)"));
  CHECK(greedy1(kSqrt13, 0) == W("201"));
  CHECK(greedy1(kSqrt13, 1) == W("11"));
  CHECK(greedy1(kSqrt6, 0) == W("2(10)"));
  CHECK(greedy1(kSqrt6, 1) == W("3"));
  CHECK(greedy1(kSqrt6, 2) == W("11002"));
  CHECK(greedy1(kSqrt10, 0) == W("34(27)"));
  CHECK(greedy1(kSqrt10, 1) == W("9"));
  CHECK(greedy1(kSqrt13Pre, 1) == W("201"));
  CHECK(greedy1(kSqrt13Pre, 2) == W("11"));
  // The word 3(10)^w represents (29+sqrt(13))/(9 sqrt(13)) > 1,
  // so it cannot be an expansion of 1; the exact run ends after 310101.
  CHECK(val(B(kSqrt13Pre), W("3(10)")) == R("(29+sqrt(13))/(9*sqrt(13))"));
  CHECK(greedy1(kSqrt13Pre, 0) == W("310101"));
  CHECK(expansion_of(B(kSqrt6), ExactReal(0L)).word == UPWord());
}

TEST_CASE("thue-morse prefix") {
  GreedyTrace t = greedy_digits(AnyBase(thue_morse_base()), ExactReal(1L), 100);
  CHECK(t.status == GreedyTrace::Status::Finite);
  CHECK(t.digits == F("2001011"));
  CHECK(UPWord::finite(t.digits).prefix(8) == F("20010110"));
}

TEST_CASE("quasi-greedy table") {
  QuasiGreedyTable t = quasi_greedy_table(B(kThreePhiPhi));
  REQUIRE(t.complete());
  CHECK(t.dstar(0) == W("(210)"));
  CHECK(t.dstar(1) == W("(102)"));
  CHECK(t.dstar(2) == W("1(110)"));
  CHECK(t[0].m() == 0);
  CHECK(t[0].n() == 3);

  QuasiGreedyTable s = quasi_greedy_table(B(kSqrt13));
  CHECK(s.dstar(0) == W("200(10)"));
  CHECK(s.dstar(1) == W("(10)"));

  QuasiGreedyTable two = quasi_greedy_table(B("per:[2,3]"));
  CHECK(two.dstar(0) == W("(12)"));
  CHECK(two.dstar(1) == W("(21)"));

  QuasiGreedyTable ten = quasi_greedy_table(B(kSqrt10));
  CHECK(ten.dstar(0) == W("34(27)"));
  CHECK(ten.dstar(1) == W("834(27)"));

  QuasiGreedyTable phi2 = quasi_greedy_table(B(kPhiSquared));
  CHECK(phi2.dstar(0) == W("2(30)"));
  CHECK(phi2.dstar(1) == W("5(03)"));
  CHECK(phi2.dstar_at(3) == W("5(03)"));

  QuasiGreedyTable pisot = quasi_greedy_table(B(kPisot), 200);
  CHECK_FALSE(pisot.complete());
  CHECK_FALSE(pisot[0].dstar.known());
  CHECK(pisot[0].dstar.prefix.front() == 2);
  CHECK_THROWS_AS(pisot.dstar(0), Error);
}
