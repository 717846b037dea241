#include <doctest.h>

#include <splitcover/families.hpp>
#include <splitcover/io.hpp>

#include "test_util.hpp"

using namespace splitcover;
using testutil::split;

TEST_CASE("gen_s_gamma formula") {
  CHECK(gen_s_gamma(1) == split({1, 1, 2}, 1));
  CHECK(gen_s_gamma(2) == split({1, 2, 3}, 2));
  for (int gamma : {1, 3, 7, 25}) CHECK_FALSE(is_cube_empty(gen_s_gamma(gamma)));
  CHECK_THROWS_AS(gen_s_gamma(0), std::invalid_argument);
}

TEST_CASE("gen_s_theta formula") {
  CHECK(gen_s_theta(2, 2, Parity::Even) == split({2, 4, 2, 4}, 6));
  CHECK(gen_s_theta(1, 3, Parity::Odd) == split({3, 3, 1}, 3));
  CHECK(gen_s_theta(1, 1, Parity::Even) == split({1, 1}, 1));
  for (int k : {1, 2, 3})
    for (int theta : {1, 2, 5}) {
      CHECK_FALSE(is_cube_empty(gen_s_theta(k, theta, Parity::Even)));
      CHECK_FALSE(is_cube_empty(gen_s_theta(k, theta, Parity::Odd)));
      CHECK(gen_s_theta(k, theta, Parity::Even).sparsity() == 2 * k);
      CHECK(gen_s_theta(k, theta, Parity::Odd).sparsity() == 2 * k + 1);
    }
  CHECK_THROWS_AS(gen_s_theta(0, 1, Parity::Even), std::invalid_argument);
  CHECK_THROWS_AS(gen_s_theta(1, 0, Parity::Even), std::invalid_argument);
}

TEST_CASE("experiment_prop2 small sweeps pass") {
  const ExperimentReport tiny = experiment_prop2(1, 2);
  CHECK(tiny.pass);
  CHECK(tiny.instances > 0);
  // an F_2 input gets itself back, up to normalization
  for (const InstanceRecord& rec : tiny.details) {
    REQUIRE(rec.ok);
    if (member_of_family(rec.input, 2)) {
      REQUIRE(rec.output.size() == 1);
      CHECK(normalize(rec.output[0]).split == normalize(rec.input).split);
    }
  }
  CHECK(experiment_prop2(2, 4, 2).pass);
  CHECK_THROWS_AS(experiment_prop2(0, 2), std::invalid_argument);
}

TEST_CASE("experiment_prop_upper small sweeps pass") {
  const ExperimentReport k3 = experiment_prop_upper(3, 2);
  CHECK(k3.pass);
  for (const InstanceRecord& rec : k3.details) CHECK(rec.output.size() <= 2);

  const ExperimentReport k4 = experiment_prop_upper(4, 2, 2);
  CHECK(k4.pass);
  for (const InstanceRecord& rec : k4.details) CHECK(rec.output.size() <= 3);

  CHECK_THROWS_AS(experiment_prop_upper(5, 2), std::invalid_argument);
}

TEST_CASE("experiment_thm3: structure of the dominators") {
  SUBCASE("gamma within the bound finds the rigid form only") {
    const ExperimentReport rep = experiment_thm3({1}, 2);
    CHECK(rep.pass);
    bool found_dominator = false;
    for (const InstanceRecord& rec : rep.details)
      if (rec.note.find("dominates S_gamma") != std::string::npos) {
        found_dominator = true;
        CHECK(rec.ok);
      }
    CHECK(found_dominator);  // S_1 = (1,1,2;1) itself is within max-norm 2
  }
  SUBCASE("S_gamma dominates itself when in range") {
    const ExperimentReport rep = experiment_thm3({2}, 5, 2);
    CHECK(rep.pass);
    bool self_found = false;
    for (const InstanceRecord& rec : rep.details)
      if (rec.input == gen_s_gamma(2) &&
          rec.note.find("dominates S_gamma") != std::string::npos)
        self_found = true;
    CHECK(self_found);
  }
  SUBCASE("gamma beyond the bound has no dominator") {
    const ExperimentReport rep = experiment_thm3({3, 4}, 2, 2);
    CHECK(rep.pass);
    for (const InstanceRecord& rec : rep.details)
      CHECK(rec.note.find("0 dominator(s)") != std::string::npos);
  }
}

TEST_CASE("experiment_lower_bound at the smallest even sparsity") {
  const ExperimentReport rep = experiment_lower_bound(2, {1, 2, 3}, 1);
  CHECK(rep.pass);  // every 2-sparse S_theta has a singleton F_2 cover
  for (const InstanceRecord& rec : rep.details)
    CHECK(rec.note.find("size 1") != std::string::npos);
  CHECK_THROWS_AS(experiment_lower_bound(3, {1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(experiment_lower_bound(4, {1}, 1), std::invalid_argument);
}

TEST_CASE("experiment_witness_soundness is deterministic and passes") {
  const ExperimentReport a = experiment_witness_soundness(40, 123, 2);
  CHECK(a.pass);
  CHECK(a.instances == 40);
  const ExperimentReport b = experiment_witness_soundness(40, 123, 1);
  CHECK(to_json(a, true, false) == to_json(b, true, false));
}

TEST_CASE("experiment reports serialize deterministically") {
  const ExperimentReport a = experiment_prop2(2, 3, 2);
  const ExperimentReport b = experiment_prop2(2, 3, 1);
  CHECK(to_json(a, true, false).dump() == to_json(b, true, false).dump());
}
