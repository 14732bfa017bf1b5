#include <doctest.h>

#include "properties.hpp"

namespace {

void require_clean(const props::Result& r) {
  INFO(r.first_failure);
  CHECK(r.failures == 0);
  CHECK(r.cases > 0);
}

}  // namespace

TEST_CASE("half-sum identity") { require_clean(props::half_sum_identity(10000, 1)); }

TEST_CASE("edge transmission law") { require_clean(props::edge_law(10000, 2)); }

TEST_CASE("path upper bound") { require_clean(props::path_bound(10000, 3)); }

TEST_CASE("fusion law") { require_clean(props::fusion_law(10000, 4)); }

TEST_CASE("arm_straighten increases W") {
  require_clean(props::arm_straighten_increases(10000, 5));
}

TEST_CASE("majorize increases W") { require_clean(props::majorize_increases(10000, 6)); }

TEST_CASE("exhaustive checks up to order 12") {
  const auto r = props::exhaustive_small(12);
  require_clean(r);
  CHECK(r.cases == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106 + 235 + 551);
}

TEST_CASE("TI trees have a branching median and distinct component sizes") {
  require_clean(props::ti_structure(2, 17));
}
