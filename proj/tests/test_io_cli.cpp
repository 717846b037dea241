#include <doctest.h>

#include <cstdio>
#include <string>

#include <splitcover/dominance.hpp>
#include <splitcover/io.hpp>

#include "test_util.hpp"

using namespace splitcover;
using testutil::split;

TEST_CASE("rational strings: lowest terms, positive denominator") {
  CHECK(rational_to_string(Rational(3, 4)) == "3/4");
  CHECK(rational_to_string(Rational(4, 6)) == "2/3");
  CHECK(rational_to_string(Rational(-2, 5)) == "-2/5");
  CHECK(rational_to_string(Rational(3)) == "3/1");
  CHECK(rational_from_string("3/4") == Rational(3, 4));
  CHECK(rational_from_string("3") == Rational(3));
  CHECK(rational_from_string("1/-2") == Rational(-1, 2));
  CHECK(rational_from_string("-6/8") == Rational(-3, 4));
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);

  std::mt19937_64 rng(15001);
  for (int it = 0; it < 200; ++it) {
    const Rational r(testutil::draw(rng, -5000, 5000), testutil::draw(rng, 1, 997));
    CHECK(rational_from_string(rational_to_string(r)) == r);
  }
}

TEST_CASE("integer json handles values beyond 64 bits") {
  CHECK(integer_to_json(Integer(42)) == json(42));
  const Integer big("123456789012345678901234567890");
  const json j = integer_to_json(big);
  CHECK(j.is_string());
  CHECK(integer_from_json(j) == big);
  CHECK_THROWS_AS(integer_from_json(json("12x")), std::invalid_argument);
  CHECK_THROWS_AS(integer_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("split record round-trip and exact shape") {
  const SplitSet s = split({1, 1}, 0);
  CHECK(to_json(s).dump() == R"({"eta":0,"n":2,"pi":[1,1]})");
  CHECK(split_from_json(json::parse(R"({"n":2,"pi":[1,1],"eta":0})")) == s);

  std::mt19937_64 rng(15002);
  for (int it = 0; it < 200; ++it) {
    const SplitSet r = testutil::random_split(rng, testutil::draw(rng, 1, 5), 9, 20);
    CHECK(split_from_json(to_json(r)) == r);
  }

  CHECK_THROWS_AS(split_from_json(json::parse(R"({"n":2,"pi":[1],"eta":0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(split_from_json(json::parse(R"({"n":1,"pi":[0],"eta":0})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(split_from_json(json::parse("[]")), std::invalid_argument);
}

TEST_CASE("family and witness serialization round-trips") {
  const SplitFamily family = enumerate_family(2, 2);
  const SplitFamily back = family_from_json(to_json(family));
  CHECK(back.n == family.n);
  CHECK(back.k == family.k);
  REQUIRE(back.size() == family.size());
  for (std::size_t i = 0; i < family.size(); ++i) CHECK(back.splits[i] == family.splits[i]);

  const DominanceReport rep = dominates(split({1, 0}, 0), split({1, 1}, 1));
  const json j = to_json(rep);
  CHECK(j.at("dominated") == false);
  const CubePoint w = cube_point_from_json(j.at("witness"));
  CHECK(w == *rep.witness);
}

#ifdef SPLITCOVER_CLI_PATH
namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SPLITCOVER_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli exit-code contract on the fixture suite") {
  const std::string dominated =
      R"(check-dominance --s1 '{"n":2,"pi":[1,1],"eta":0}' --s0 '{"n":2,"pi":[2,3],"eta":0}')";
  CHECK(run_cli(dominated).exit_code == 0);

  const std::string not_dominated =
      R"(check-dominance --s1 '{"n":2,"pi":[1,0],"eta":0}' --s0 '{"n":2,"pi":[1,1],"eta":1}')";
  const CliResult nd = run_cli(not_dominated);
  CHECK(nd.exit_code == 1);
  CHECK(json::parse(nd.out).at("witness").is_array());

  CHECK(run_cli(R"(check-dominance --s1 '{"n":2}' --s0 '{"n":2,"pi":[1,1],"eta":0}')").exit_code ==
        2);
  CHECK(run_cli(R"(check-dominance --s1 'not json' --s0 'nope')").exit_code == 2);
  CHECK(run_cli("no-such-verb").exit_code == 2);
  // dimension mismatch is an input error
  CHECK(run_cli(
            R"(check-dominance --s1 '{"n":1,"pi":[1],"eta":0}' --s0 '{"n":2,"pi":[1,1],"eta":0}')")
            .exit_code == 2);
}

TEST_CASE("cli min-cover, family, and verify drive the library") {
  const CliResult mc = run_cli(
      R"(min-cover --family F1 --n 2 --split '{"n":2,"pi":[1,1],"eta":1}' --pmax 3)");
  CHECK(mc.exit_code == 0);
  const json cover = json::parse(mc.out);
  CHECK(cover.at("size") == 2);
  CHECK(cover.at("optimal") == true);

  const CliResult none = run_cli(
      R"(min-cover --family F1 --n 3 --split '{"n":3,"pi":[1,1,1],"eta":2}' --pmax 2)");
  CHECK(none.exit_code == 1);
  CHECK(json::parse(none.out).at("found") == false);

  const CliResult fam = run_cli("family --k 1 --n 2");
  CHECK(fam.exit_code == 0);
  CHECK(family_from_json(json::parse(fam.out)).size() == 12);

  // a family file produced by the CLI loads back for min-cover
  const std::string fam_path = "/tmp/splitcover_test_family.json";
  {
    FILE* f = fopen(fam_path.c_str(), "w");
    REQUIRE(f != nullptr);
    fputs(fam.out.c_str(), f);
    fclose(f);
  }
  const CliResult from_file = run_cli(
      "min-cover --family " + fam_path + R"( --split '{"n":2,"pi":[1,1],"eta":1}' --pmax 3)");
  CHECK(from_file.exit_code == 0);
  CHECK(json::parse(from_file.out).at("size") == 2);
  std::remove(fam_path.c_str());

  CHECK(run_cli("verify prop2 --M 1 --E 2").exit_code == 0);
  CHECK(run_cli("verify lower-bound --k 2 --theta-range 1..2 --pmax 1").exit_code == 0);
}

TEST_CASE("cli output round-trips and is byte-deterministic") {
  const CliResult gen = run_cli("gen s-gamma --gamma 4");
  CHECK(gen.exit_code == 0);
  const std::string split_text = json::parse(gen.out).dump();
  // a split printed by the CLI is accepted unchanged as input
  const CliResult self = run_cli("check-dominance --s1 '" + split_text + "' --s0 '" +
                                 split_text + "'");
  CHECK(self.exit_code == 0);

  const CliResult a = run_cli("family --k 2 --n 3");
  const CliResult b = run_cli("family --k 2 --n 3");
  CHECK(a.out == b.out);
  const CliResult c = run_cli("verify prop2 --M 1 --E 1 --details");
  const CliResult d = run_cli("verify prop2 --M 1 --E 1 --details --jobs 2");
  CHECK(c.out == d.out);

  const CliResult dom2 = run_cli(R"(dominate2 --split '{"n":2,"pi":[2,3],"eta":2}' --verify)");
  CHECK(dom2.exit_code == 0);
  CHECK(json::parse(dom2.out).at("case") == "k2-case2");

  const CliResult cov4 = run_cli(R"(cover4 --split '{"n":4,"pi":[2,3,4,5],"eta":6}' --verify)");
  CHECK(cov4.exit_code == 0);
  CHECK(json::parse(cov4.out).at("case") == "k4-case7");

  const CliResult theta = run_cli("gen s-theta --k 2 --theta 2 --parity even");
  CHECK(split_from_json(json::parse(theta.out)) == gen_s_theta(2, 2, Parity::Even));
}
#endif
