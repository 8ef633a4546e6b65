#include <doctest.h>
#include <stdexcept>

#include "zschur/enumerate.hpp"
#include "zschur/search.hpp"
#include "zschur/serialize.hpp"
#include "zschur/witness.hpp"
#include "zschur/zero_sum.hpp"

using namespace zschur;

TEST_SUITE_BEGIN("witness");

TEST_CASE("block expansions match the closed forms") {
  CHECK(encode_coloring(build_witness(Family::T4, 6), 3) == "01201101102102");
  CHECK(encode_coloring(build_witness(Family::P7, 3), 3) == "010202010");
  CHECK(encode_coloring(build_witness(Family::P3, 4), 2) == "0011");
  CHECK(encode_coloring(build_witness(Family::T5, 6), 3) == "000011111111");
  CHECK(encode_coloring(build_witness(Family::S32KK, 4), 4) == "0011111100");

  const Coloring t6 = build_witness(Family::T6, 8);
  CHECK(t6.length() == 26);
  CHECK(encode_coloring(t6, 4) == "01230120022002200220321032");
}

TEST_CASE("inapplicable k raises a domain error naming the condition") {
  CHECK_THROWS_WITH_AS(build_witness(Family::P3, 2), "family p3 requires even k >= 4",
                       std::domain_error);
  CHECK_THROWS_AS(build_witness(Family::P3, 5), std::domain_error);
  CHECK_THROWS_WITH_AS(build_witness(Family::T4, 7), "family t4 requires 3 | k",
                       std::domain_error);
  CHECK_THROWS_AS(build_witness(Family::T5, 8), std::domain_error);
  CHECK_THROWS_WITH_AS(build_witness(Family::T6, 6), "family t6 requires 4 | k",
                       std::domain_error);
  CHECK_THROWS_AS(build_witness(Family::P7, 4), std::domain_error);
  CHECK_THROWS_AS(build_witness(Family::S32KK, 2), std::domain_error);
}

TEST_CASE("length law: built length equals claimed bound minus one") {
  for (Family f : {Family::P3, Family::T4, Family::T5, Family::T6, Family::P7,
                   Family::S32KK}) {
    for (int k = 2; k <= 30; ++k) {
      if (!family_applicable(f, k)) continue;
      const Coloring chi = build_witness(f, k);
      CHECK(chi.length() == family_length(f, k));
      CHECK(chi.length() == family_bound(f, k) - 1);
    }
  }
}

TEST_CASE("avoidance law on small k") {
  auto avoids = [](Family f, int k) {
    const auto report = verify_witness(f, k);
    CHECK(report.avoids);
    CHECK_FALSE(report.counterexample.has_value());
    CHECK(report.length == family_length(f, k));
    CHECK(report.claimed_bound == family_bound(f, k));
  };
  for (int k : {4, 6, 8}) avoids(Family::P3, k);
  for (int k : {3, 6, 9}) avoids(Family::T4, k);
  for (int k : {3, 6, 9}) avoids(Family::T5, k);
  for (int k : {4, 8}) avoids(Family::T6, k);
  for (int k : {3, 5}) avoids(Family::P7, k);
  for (int k : {3, 4, 5}) avoids(Family::S32KK, k);
}

TEST_CASE("claimed bounds never exceed computed exact values") {
  struct Case {
    Family f;
    int k;
  };
  for (const Case c : {Case{Family::T4, 6}, Case{Family::P7, 3}, Case{Family::S32KK, 4},
                       Case{Family::T5, 6}, Case{Family::P3, 6}}) {
    const Params p = family_params(c.f, c.k);
    const auto outcome = compute_number(p, SearchLimits{});
    REQUIRE(outcome.status == Status::Finite);
    CHECK(family_bound(c.f, c.k) <= outcome.value);
  }
  // tightness where it is known to hold
  CHECK(family_bound(Family::T4, 6) == 15);
  CHECK(family_bound(Family::P7, 3) == 10);
  CHECK(family_bound(Family::P7, 5) == 38);
}

TEST_CASE("p7 parity structure") {
  for (int k : {3, 5, 7, 9}) {
    const Coloring chi = build_witness(Family::P7, k);
    for (int pos = 1; pos <= chi.length(); ++pos) {
      const int c = chi.color(pos);
      if (c == 0) CHECK(pos % 2 == 1);               // color 0 only on odd integers
      if (c == 1 || c == k - 1) CHECK(pos % 2 == 0);  // colors 1 and k-1 only on even
    }
  }
}

TEST_CASE("colorings with more than ten colors use the comma encoding") {
  const Coloring chi = build_witness(Family::P7, 11);  // colors 0, 1 and 10
  const std::string text = encode_coloring(chi, 11);
  CHECK(text.find(',') != std::string::npos);
  CHECK(text.rfind("0,1,0,1", 0) == 0);
  CHECK(parse_coloring(text, 11) == chi);
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::P3, Family::T4, Family::T5, Family::T6, Family::P7,
                   Family::S32KK})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}

TEST_CASE("top-target estimate gates sweeps sensibly") {
  CHECK(top_target_solution_estimate(Family::P7, 9) >
        top_target_solution_estimate(Family::P7, 7));
  // the default 1e8 budget admits p7 up to k=9 and cuts k=11
  CHECK(top_target_solution_estimate(Family::P7, 9) < 1e8);
  CHECK(top_target_solution_estimate(Family::P7, 11) > 1e8);
  // the estimate is the exact count of solutions ending at the last position
  CHECK(top_target_solution_estimate(Family::T4, 6) ==
        doctest::Approx(static_cast<double>(count_solutions(14, 6))));
}

TEST_CASE("conjecture evidence gathers rows without asserting") {
  const int ks1[] = {6};
  const auto q1 = conjecture_evidence(Question::Q1, ks1, SearchLimits{});
  REQUIRE(q1.rows.size() == 1);
  CHECK(q1.rows[0].conjectured == 15);
  CHECK(q1.rows[0].computed.value == 15);
  CHECK(q1.rows[0].consistent);

  const int ks4[] = {3};
  const auto q4 = conjecture_evidence(Question::Q4, ks4, SearchLimits{});
  REQUIRE(q4.rows.size() == 1);
  CHECK(q4.rows[0].computed.value == 10);
  CHECK(q4.rows[0].ratio == doctest::Approx(10.0 / 9.0));

  // unresolved cells are reported as such, never graded consistent
  SearchLimits tiny;
  tiny.max_n = 20;
  const int ks2[] = {8};
  const auto q2 = conjecture_evidence(Question::Q2, ks2, tiny);
  REQUIRE(q2.rows.size() == 1);
  CHECK(q2.rows[0].computed.status == Status::Unresolved);
  CHECK_FALSE(q2.rows[0].consistent);
}

TEST_SUITE_END();
