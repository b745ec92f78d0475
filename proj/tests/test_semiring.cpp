#include <doctest.h>

#include "semiring.hpp"

using namespace wts;

TEST_CASE("natural arithmetic") {
  Semiring s = make_semiring("natural");
  CHECK(s.add(Weight::integer(2), Weight::integer(3)) == Weight::integer(5));
  CHECK(s.mul(Weight::integer(2), Weight::integer(3)) == Weight::integer(6));
  CHECK(s.zero() == Weight::integer(0));
  CHECK(s.one() == Weight::integer(1));
}

TEST_CASE("max-plus-int arithmetic with the infinity") {
  Semiring s = make_semiring("max-plus-int");
  CHECK(s.add(Weight::integer(3), Weight::integer(5)) == Weight::integer(5));
  CHECK(s.mul(Weight::integer(3), Weight::integer(5)) == Weight::integer(8));
  CHECK(s.add(Weight::neg_infinity(), Weight::integer(7)) == Weight::integer(7));
  CHECK(s.mul(Weight::neg_infinity(), Weight::integer(7)) == Weight::neg_infinity());
  CHECK(s.zero() == Weight::neg_infinity());
  CHECK(s.one() == Weight::integer(0));
}

TEST_CASE("boolean arithmetic") {
  Semiring s = make_semiring("boolean");
  CHECK(s.add(Weight::boolean(true), Weight::boolean(true)) == Weight::boolean(true));
  CHECK(s.mul(Weight::boolean(true), Weight::boolean(false)) == Weight::boolean(false));
}

TEST_CASE("min-plus zero and one") {
  Semiring s = make_semiring("min-plus-nat");
  CHECK(s.zero() == Weight::pos_infinity());
  CHECK(s.add(Weight::integer(4), Weight::integer(2)) == Weight::integer(2));
  CHECK(s.mul(Weight::integer(4), Weight::integer(2)) == Weight::integer(6));
}

TEST_CASE("unknown identifier is rejected") {
  CHECK_THROWS_AS(make_semiring("real"), ParseError);
}

TEST_CASE("weight text round-trips") {
  for (SemiringId id : all_semiring_ids()) {
    Semiring s(id);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
      Weight w = s.random(rng, 50);
      CHECK(s.parse(s.render(w)) == w);
    }
  }
}

TEST_CASE("rationals are canonical") {
  Semiring s = make_semiring("rational");
  CHECK(s.parse("7/14") == Weight::rational(1, 2));
  CHECK(s.render(s.parse("7/14")) == "1/2");
  CHECK(s.render(s.parse("-4/2")) == "-2");
  CHECK(s.parse("6/3") == s.parse("2"));
  CHECK(s.render(s.parse("6/3")) == "2");
}

TEST_CASE("parsing rejects bad syntax and out-of-carrier values") {
  Semiring nat = make_semiring("natural");
  CHECK_THROWS_AS(nat.parse("1e3"), ParseError);
  CHECK_THROWS_AS(nat.parse(""), ParseError);
  CHECK_THROWS_AS(nat.parse("1.5"), ParseError);
  CHECK_THROWS_AS(nat.parse("-2"), ValidationError);
  CHECK_THROWS_AS(nat.parse("1/2"), ValidationError);
  CHECK_THROWS_AS(nat.parse("+inf"), ValidationError);
  Semiring rq = make_semiring("rational-nonneg");
  CHECK_THROWS_AS(rq.parse("-1/2"), ValidationError);
  CHECK(rq.parse("1/2") == Weight::rational(1, 2));
  Semiring mp = make_semiring("max-plus-nat");
  CHECK(mp.parse("-inf") == Weight::neg_infinity());
  CHECK_THROWS_AS(mp.parse("+inf"), ValidationError);
  CHECK_THROWS_AS(mp.parse("-1"), ValidationError);
  Semiring b = make_semiring("boolean");
  CHECK_THROWS_AS(b.parse("2"), ValidationError);
}

TEST_CASE("laws hold on every listed semiring") {
  for (SemiringId id : all_semiring_ids()) {
    LawReport report = check_semiring_laws(Semiring(id), 1000, 42);
    INFO(semiring_name(id), ": ", report.summary());
    CHECK(report.ok);
  }
}

TEST_CASE("a broken multiplication is caught with a witness") {
  Semiring base = make_semiring("integer");
  SemiringOps ops = ops_of(base, 20);
  ops.name = "broken";
  ops.mul = [base](const Weight& a, const Weight& b) {
    return Weight::integer(mpz_class(a.as_integer() - b.as_integer()));
  };
  LawReport report = check_semiring_laws(ops, 1000, 42);
  CHECK_FALSE(report.ok);
  bool distributivity = false;
  for (const auto& f : report.failures)
    distributivity = distributivity || f.law == "left-distributive" ||
                     f.law == "right-distributive";
  CHECK(distributivity);
  REQUIRE_FALSE(report.failures.empty());
  // the witness triple really violates the law it names
  const LawFailure& f = report.failures.front();
  CHECK_FALSE(f.law.empty());
}

TEST_CASE("law checker needs at least one sample") {
  CHECK_THROWS_AS(check_semiring_laws(make_semiring("natural"), 0), ValidationError);
}
