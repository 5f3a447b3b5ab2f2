#include <doctest.h>

#include "dix/suites.hpp"

using namespace dix;

namespace {

void check_all(const SuiteReport& rep) {
  CHECK(!rep.cases.empty());
  for (const auto& c : rep.cases) CHECK_MESSAGE(c.pass, rep.suite << " " << c.id << ": " << c.detail);
  CHECK(rep.all_pass);
}

}  // namespace

TEST_CASE("gelfand_tsetlin_count") {
  CHECK(gelfand_tsetlin_count({1, 0}) == 2);
  CHECK(gelfand_tsetlin_count({1, 0, 0}) == 3);
  CHECK(gelfand_tsetlin_count({2, 1, 0}) == 8);
  CHECK(gelfand_tsetlin_count({2, 0, 0}) == 6);
  CHECK(gelfand_tsetlin_count({1, 1, 0, 0}) == 6);
}

TEST_CASE("sl2 suite") { check_all(run_suite("sl2")); }
TEST_CASE("translation suite") { check_all(run_suite("translation")); }
TEST_CASE("ind-eq-char suite") { check_all(run_suite("ind-eq-char")); }
TEST_CASE("harmonic suite") { check_all(run_suite("harmonic")); }
TEST_CASE("su-n1 suite") { check_all(run_suite("su-n1")); }
TEST_CASE("springer suite") { check_all(run_suite("springer")); }

TEST_CASE("reports do not depend on the execution mode") {
  SuiteOptions serial;
  serial.exec = kernels::Exec::Serial;
  CHECK(run_suite("springer", serial) == run_suite("springer"));
  CHECK(run_suite("harmonic", serial) == run_suite("harmonic"));
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(run_suite("nope"), Error); }
