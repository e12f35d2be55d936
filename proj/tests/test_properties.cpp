#include <doctest.h>

#include "invariants.hpp"

using namespace sing::testing;

TEST_CASE("SiNG invariants over randomised instances") {
  for (const auto& r : run_sing_invariants(20240601, 2000)) {
    INFO(r.name, ": ", r.first_failure);
    CHECK(r.cases >= 1000);
    CHECK(r.failures == 0);
  }
}

TEST_CASE("invariants hold for a second seed") {
  for (const auto& r : run_sing_invariants(7, 1000)) {
    INFO(r.name, ": ", r.first_failure);
    CHECK(r.failures == 0);
  }
}
