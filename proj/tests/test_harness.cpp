#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "fubinilab/measure.hpp"
#include "fubinilab/oracle.hpp"
#include "fubinilab/suite.hpp"

using namespace fubinilab;

namespace {

using Q = Rational;

std::vector<std::vector<Q>> zeros(std::size_t m, std::size_t n) { return std::vector<std::vector<Q>>(m, std::vector<Q>(n)); }

SuiteConfig small(const std::string& suite) {
  SuiteConfig c;
  c.suites = {suite};
  return c;
}

}  // namespace

TEST_CASE("oracle sums on hand examples") {
  auto f = zeros(3, 2);
  f[1][0] = Q(7, 3);
  f[2][1] = Q(-1);
  auto dirac = oracle_discrete_fubini({Q(0), Q(1), Q(0)}, {Q(1), Q(0)}, f);
  CHECK(dirac.agree());
  CHECK(dirac.product == Q(7, 3));

  auto cell = zeros(2, 2);
  cell[0][1] = Q(1);
  auto uniform = oracle_discrete_fubini({Q(1, 2), Q(1, 2)}, {Q(1, 2), Q(1, 2)}, cell);
  CHECK(uniform.agree());
  CHECK(uniform.product == Q(1, 4));

  auto zero = oracle_discrete_fubini({Q(3), Q(-2)}, {Q(5, 7)}, zeros(2, 1));
  CHECK(zero.product == Q(0));
  CHECK(zero.agree());
}

TEST_CASE("oracle rejects mismatched shapes") {
  try {
    oracle_discrete_fubini({Q(1)}, {Q(1), Q(1)}, zeros(1, 1));
    FAIL("no throw");
  } catch (const LabError& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  const Field f2 = Field::make(2);
  CHECK_THROWS_AS(oracle_discrete_fubini(f2, {1}, {1}, {{1}, {0}}), LabError);
}

TEST_CASE("field oracle reduces mod p") {
  const Field f3 = Field::make(3);
  auto s = oracle_discrete_fubini(f3, {1, 2}, {2, 2}, {{1, 1}, {2, 1}});
  // (1*2 + 1*2) + 2*(2*2 + 1*2) = 4 + 12 = 16 = 1 mod 3
  CHECK(s.agree());
  CHECK(s.product == 1);
}

TEST_CASE("rational measure composites equal the product measure") {
  FiniteMeasures<RationalRing> m{RationalRing{}};
  FiniteMeasures<RationalRing>::Measure<int> mu, nu;
  m.accumulate(mu, 0, Q(1, 3));
  m.accumulate(mu, 1, Q(-2));
  m.accumulate(nu, 5, Q(3, 4));
  m.accumulate(nu, 6, Q(1, 5));
  auto a = m.otimes(mu, nu), b = m.otimes_tilde(mu, nu);
  CHECK(a == b);
  CHECK(a.size() == 4);
  CHECK(a.at({1, 5}) == Q(-3, 2));
  CHECK(a.at({0, 6}) == Q(1, 15));
}

TEST_CASE("spaces survive a JSON round trip") {
  for (Axioms ax : {Axioms::limit, Axioms::down_only})
    for (const auto& x : enumerate_spaces(2, ax)) {
      const Json j = to_json(x);
      CHECK(space_from_json(Json::parse(j.dump()), ax) == x);
    }
  const Field f2 = Field::make(2);
  for (const auto& e : enumerate_convvects(f2, 4, Axioms::down_only)) CHECK(vect_from_json(to_json(e)) == e);
}

TEST_CASE("malformed input is a parse error") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const LabError& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of([] { space_from_json(Json{{"points", 1}}, Axioms::limit); }) == ErrorKind::Parse);
  CHECK(kind_of([] { space_from_json(Json{{"points", 1}, {"conv", {{{3}}}}}, Axioms::limit); }) == ErrorKind::Parse);
  CHECK(kind_of([] { read_json_file("/nonexistent/space.json"); }) == ErrorKind::Parse);

  // a structure valid only without the limit axioms
  std::size_t rejected = 0;
  const auto limit = enumerate_spaces(2, Axioms::limit);
  for (const auto& x : enumerate_spaces(2, Axioms::down_only))
    if (std::find(limit.begin(), limit.end(), x) == limit.end()) {
      CHECK(kind_of([&] { space_from_json(to_json(x), Axioms::limit); }) == ErrorKind::Parse);
      ++rejected;
    }
  CHECK(rejected == 5);
}

TEST_CASE("config validation happens before any work") {
  auto invalid = [](SuiteConfig c) {
    try {
      run_suite(c);
    } catch (const LabError& e) {
      return e.kind() == ErrorKind::InvalidConfig;
    }
    return false;
  };
  SuiteConfig c;
  c.field = 4;
  CHECK(invalid(c));
  c = SuiteConfig{};
  c.jobs = 0;
  CHECK(invalid(c));
  c = SuiteConfig{};
  c.suites = {"nonsense"};
  CHECK(invalid(c));
  c = SuiteConfig{};
  c.max_size = 4;
  CHECK(invalid(c));
  CHECK_THROWS_AS(parse_axioms("upward"), LabError);
}

TEST_CASE("size bound zero gives an empty passing report") {
  SuiteConfig c;
  c.max_size = 0;
  auto r = run_suite(c);
  CHECK(r.instances.empty());
  CHECK(r.ok());
  CHECK(r.jsonl().find("\"instances\":0") != std::string::npos);
}

TEST_CASE("reports do not depend on the number of jobs") {
  for (const char* suite : {"fubini", "oracle", "adjunction"}) {
    auto c = small(suite);
    const std::string one = run_suite(c).jsonl();
    c.jobs = 5;
    CHECK(run_suite(c).jsonl() == one);
  }
}

TEST_CASE("every instance appears once with a recorded seed") {
  auto c = small("oracle");
  c.seed = 99;
  auto r = run_suite(c);
  std::set<std::string> names;
  for (const auto& i : r.instances) names.insert(i.instance);
  CHECK(names.size() == r.instances.size());
  CHECK(r.instances.size() == 100 + 9);
  CHECK(r.summary()["summary"]["config"]["seed"] == 99);
  CHECK(r.ok());

  auto other = c;
  other.seed = 100;
  CHECK(run_suite(other).jsonl() != r.jsonl());
}

TEST_CASE("seed comes from the environment when numeric") {
  ::setenv("FUBINILAB_SEED", "12345", 1);
  CHECK(seed_from_env() == 12345);
  ::setenv("FUBINILAB_SEED", "0x10", 1);
  CHECK(seed_from_env() == 16);
  ::setenv("FUBINILAB_SEED", "abc", 1);
  CHECK(seed_from_env(7) == 7);
  ::unsetenv("FUBINILAB_SEED");
  CHECK(seed_from_env() == kDefaultSeed);
}

TEST_CASE("explain traces") {
  SuiteConfig c;
  const std::string one = explain_instance(discrete(1), discrete(1), c);
  CHECK(std::count(one.begin(), one.end(), '\n') == 1);
  CHECK(one.find("equal") != std::string::npos);

  const std::string two = explain_instance(discrete(2), discrete(2), c);
  CHECK(two.find("|D(XxY)| = 16") != std::string::npos);
  CHECK(two.find("reflexive") != std::string::npos);
  CHECK(two.find("\nequal\n") != std::string::npos);
  CHECK(two.find("witness") == std::string::npos);
}
