#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "hfd/sieve.hpp"

using hfd::ParamTuple;
using hfd::Step1Options;

namespace {

// Same admission conditions as the library, enumerated the dumb way: every
// (r, k) pair in the rectangle, each condition tested literally.
std::vector<ParamTuple> brute_step1(std::uint64_t v, std::uint64_t stab) {
  std::vector<ParamTuple> out;
  for (std::uint64_t r = 1; r <= 2 * stab; ++r) {
    if (r % 2)
      continue;
    if (stab % (r / 2))
      continue;
    for (std::uint64_t k = 3; k + 1 < v; ++k) {
      if (k % 2)
        continue;
      if ((r * (k - 1)) % (v - 1))
        continue;
      const std::uint64_t lambda = r * (k - 1) / (v - 1);
      if ((v * r) % k)
        continue;
      const std::uint64_t b = v * r / k;
      if (b < v)
        continue;
      const std::uint64_t g2 = std::gcd(r, 2 * lambda);
      if (lambda < g2 * g2)
        continue;
      out.push_back(ParamTuple{v, b, r, k, lambda});
    }
  }
  std::sort(out.begin(), out.end(), [](const ParamTuple& a, const ParamTuple& b) {
    return a.b != b.b ? a.b < b.b : a.k < b.k;
  });
  return out;
}

bool same(const std::vector<ParamTuple>& a, const std::vector<ParamTuple>& b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].v != b[i].v || a[i].b != b[i].b || a[i].r != b[i].r ||
        a[i].k != b[i].k || a[i].lambda != b[i].lambda)
      return false;
  return true;
}

bool contains(const std::vector<ParamTuple>& rows, ParamTuple t) {
  return std::any_of(rows.begin(), rows.end(), [&](const ParamTuple& x) {
    return x.v == t.v && x.b == t.b && x.r == t.r && x.k == t.k &&
           x.lambda == t.lambda;
  });
}

}  // namespace

TEST_CASE("r_max is the gcd of degree-minus-one, stabilizer order, subdegrees") {
  CHECK(hfd::r_max(55, 144, {18, 36}) == 18);
  CHECK(hfd::passes_rmax(55, 18));

  CHECK(hfd::r_max(176, 252000, {175}) == 175);
  CHECK(hfd::passes_rmax(176, 175));

  // 2-transitive with stabilizer order a multiple of v-1
  CHECK(hfd::r_max(10, 36, {9}) == 9);
  for (std::uint64_t m = 1; m <= 5; ++m)
    CHECK(hfd::r_max(12, m * 11, {11}) == 11);

  // without subdegree refinement the gcd stops at the stabilizer order
  CHECK(hfd::r_max(100, 693, {}) == std::gcd<std::uint64_t>(99, 693));

  CHECK_FALSE(hfd::passes_rmax(55, 7));
  CHECK_FALSE(hfd::passes_rmax(100, 10));
  CHECK(hfd::passes_rmax(99, 10));
}

TEST_CASE("r_max rejects subdegree lists with the wrong sum") {
  CHECK_THROWS_AS((void)hfd::r_max(55, 144, {18, 35}), std::invalid_argument);
  CHECK_THROWS_AS((void)hfd::r_max(1, 10, {}), std::invalid_argument);
}

TEST_CASE("r_max divides degree minus one for random actions") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t v = 5 + rng() % 96;
    const std::uint64_t stab = 1 + rng() % 100000;
    // random composition of v-1 into nontrivial subdegrees
    std::vector<std::uint64_t> subs;
    std::uint64_t left = v - 1;
    while (left > 0) {
      std::uint64_t part = 1 + rng() % left;
      subs.push_back(part);
      left -= part;
    }
    const std::uint64_t rm = hfd::r_max(v, stab, subs);
    CHECK((v - 1) % rm == 0);
    CHECK(rm >= 1);

    hfd::CandidateAction a{"random", v, stab, subs};
    CHECK(a.r_max() == rm);
    CHECK(a.group_order() == v * stab);
  }
}

TEST_CASE("parameter enumeration on ten points matches hand arithmetic") {
  const auto rows = hfd::step1_enumerate(10, 36);
  REQUIRE(rows.size() == 3);
  CHECK(contains(rows, {10, 30, 18, 6, 10}));
  CHECK(contains(rows, {10, 45, 36, 8, 28}));
  CHECK(contains(rows, {10, 60, 36, 6, 20}));
  CHECK(hfd::distinct_b(rows) == std::vector<std::uint64_t>{30, 45, 60});
  for (const auto& t : rows) {
    CHECK(t.replication_identity());
    CHECK(t.pair_identity());
    CHECK(t.fisher());
    CHECK(hfd::step1_satisfies(t, 36));
  }
}

TEST_CASE("degree eleven with stabilizer order 720 admits nothing") {
  CHECK(hfd::step1_enumerate(11, 720).empty());
}

TEST_CASE("the 176-point enumeration keeps the known parameter sets") {
  const auto rows = hfd::step1_enumerate(176, 252000);
  CHECK(contains(rows, {176, 176, 50, 50, 14}));
  CHECK(contains(rows, {176, 23100, 21000, 160, 19080}));
  CHECK(contains(rows, {176, 28875, 21000, 128, 15240}));

  for (const auto& t : rows)
    CHECK(hfd::step1_satisfies(t, 252000));

  // sorted by (b, k)
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool ordered = rows[i - 1].b < rows[i].b ||
                         (rows[i - 1].b == rows[i].b && rows[i - 1].k < rows[i].k);
    CHECK(ordered);
  }

  const auto bs = hfd::distinct_b(rows);
  for (std::uint64_t want : {std::uint64_t(176), std::uint64_t(23100),
                             std::uint64_t(28875)})
    CHECK(std::binary_search(bs.begin(), bs.end(), want));
}

TEST_CASE("the divisibility refinement only removes tuples") {
  // r/(r,2lambda) divides v-1 for every consistent tuple, so r_max = v-1
  // filters nothing; the check still proves monotonicity.
  const auto raw = hfd::step1_enumerate(176, 252000);
  Step1Options opt;
  opt.require_rmax_divisibility = true;
  opt.r_max = 175;
  const auto refined = hfd::step1_enumerate(176, 252000, opt);
  CHECK(refined.size() == raw.size());
  for (const auto& t : refined) {
    CHECK(contains(raw, t));
    CHECK(175 % (t.r / t.gcd_r_2lambda()) == 0);
  }

  // a proper divisor of v-1 cuts for real: 162 arithmetic survivors at
  // degree 100, none with r/(r,2lambda) dividing 11
  const auto raw100 = hfd::step1_enumerate(100, 443520);
  CHECK(raw100.size() == 162);
  const auto refined100 =
      hfd::step1_enumerate(100, 443520, Step1Options{true, 11});
  CHECK(refined100.empty());
  std::size_t surviving = 0;
  for (const auto& t : raw100)
    if (11 % (t.r / t.gcd_r_2lambda()) == 0)
      ++surviving;
  CHECK(surviving == 0);
  for (const auto& t : raw100)
    CHECK((t.v - 1) % (t.r / t.gcd_r_2lambda()) == 0);

  CHECK_THROWS_AS(hfd::step1_enumerate(176, 252000, Step1Options{true, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(hfd::step1_enumerate(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(hfd::step1_enumerate(10, 0), std::invalid_argument);
}

TEST_CASE("enumeration agrees with a brute-force scan at small degree") {
  for (std::uint64_t v = 4; v <= 30; ++v)
    for (std::uint64_t stab : {1, 2, 3, 4, 6, 12, 36, 60, 720}) {
      const auto fast = hfd::step1_enumerate(v, stab);
      const auto slow = brute_step1(v, stab);
      CAPTURE(v);
      CAPTURE(stab);
      CHECK(same(fast, slow));
    }
}

TEST_CASE("emitted tuples satisfy the replication-square bound") {
  for (const auto& t : hfd::step1_enumerate(176, 252000)) {
    const auto g2 = t.gcd_r_2lambda();
    CHECK(t.r * t.r > g2 * g2 * t.v);
    CHECK(t.lambda >= g2 * g2);
    CHECK(t.r % 2 == 0);
    CHECK(t.k % 2 == 0);
  }
}

TEST_CASE("primitivity criteria on the worked parameter sets") {
  // 2-(176,160,19080) with r = 21000
  const auto c1 = hfd::primitivity_criteria({176, 23100, 21000, 160, 19080});
  CHECK(ParamTuple{176, 23100, 21000, 160, 19080}.gcd_r_2lambda() == 120);
  CHECK(c1.lambda_at_least_gcd_sq);  // 19080 >= 120^2
  CHECK_FALSE(c1.r_exceeds_4lambda_k2);
  CHECK(c1.any());

  // 2-(25,4,2) with r = 16: every criterion fails
  const auto c2 = hfd::primitivity_criteria({25, 100, 16, 4, 2});
  CHECK_FALSE(c2.lambda_at_least_gcd_sq);  // 2 < 16
  CHECK_FALSE(c2.r_exceeds_4lambda_k2);    // 16 = 16, not greater
  CHECK_FALSE(c2.pair_gcd_at_most_2);      // gcd(24, 6) = 6
  CHECK_FALSE(c2.any());

  // 2-(16,6,2) with r = 6: gcd(15, 10) = 5
  const auto c3 = hfd::primitivity_criteria({16, 16, 6, 6, 2});
  CHECK_FALSE(c3.pair_gcd_at_most_2);

  CHECK_THROWS_AS(hfd::primitivity_criteria({10, 30, 12, 4, 5}),
                  std::invalid_argument);
}

TEST_CASE("imprimitivity requires both necessary conditions") {
  const auto w1 = hfd::imprimitivity_necessities({16, 16, 6, 6, 2});
  CHECK(w1.lambda_below_gcd_sq);  // 2 < gcd(6,4)^2 = 4
  CHECK(w1.r_within_4lambda_k2);  // 6 <= 32
  CHECK(w1.both());

  const auto w2 = hfd::imprimitivity_necessities({25, 100, 16, 4, 2});
  CHECK(w2.lambda_below_gcd_sq);  // 2 < 16
  CHECK(w2.r_within_4lambda_k2);  // 16 <= 16, equality attained
  CHECK(w2.both());

  // lambda >= gcd^2 excludes imprimitivity outright
  const auto w3 = hfd::imprimitivity_necessities({176, 23100, 21000, 160, 19080});
  CHECK_FALSE(w3.lambda_below_gcd_sq);
  CHECK_FALSE(w3.both());
}

TEST_CASE("group order cap at four times the cube of the stabilizer order") {
  CHECK(hfd::passes_order_bound(std::uint64_t(44352000), 252000));
  CHECK(hfd::passes_order_bound(std::uint64_t(7920), 7920));

  // far beyond 64 bits: order 808017424794512875886459904961710757005754368000000000
  const std::string monster =
      "808017424794512875886459904961710757005754368000000000";
  CHECK_FALSE(hfd::passes_order_bound(monster, 87360));
  CHECK(hfd::passes_order_bound("44352000", 252000));

  // boundary: group order exactly 4 s^3 survives, anything above does not
  CHECK(hfd::passes_order_bound("108000000000000000000000000000", 3000000000));
  CHECK_FALSE(hfd::passes_order_bound("216000000000000000000000000000", 3000000000));

  CHECK_THROWS_AS(hfd::passes_order_bound(std::uint64_t(100), 7),
                  std::invalid_argument);
  CHECK_THROWS_AS(hfd::passes_order_bound(std::uint64_t(100), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(hfd::passes_order_bound("100", 7), std::invalid_argument);
  CHECK_THROWS_AS(hfd::passes_order_bound("12a3", 5), std::invalid_argument);
  CHECK_THROWS_AS(hfd::passes_order_bound("", 5), std::invalid_argument);
}

TEST_CASE("the replication divisor must divide every subdegree") {
  // r / gcd(r, 2 lambda) = 21000 / 120 = 175
  CHECK(hfd::subdegree_divisibility({176, 23100, 21000, 160, 19080}, {175}));

  // r / gcd = 1 divides anything
  CHECK(hfd::subdegree_divisibility({10, 30, 2, 6, 1}, {1, 2, 3, 999}));

  ParamTuple t{55, 0, 36, 0, 1};  // r/gcd = 18
  CHECK(t.gcd_r_2lambda() == 2);
  CHECK(hfd::subdegree_divisibility(t, {18, 36}));
  t.r = 18;  // r/gcd = 9
  CHECK(hfd::subdegree_divisibility(t, {18, 36}));
  t.r = 24;  // r/gcd = 12
  CHECK_FALSE(hfd::subdegree_divisibility(t, {18, 36}));

  CHECK(hfd::subdegree_divisibility({55, 0, 36, 0, 1}, {}));
}

TEST_CASE("csv output is byte-stable with the documented column order") {
  const auto rows = hfd::step1_enumerate(10, 36);
  CHECK(hfd::sieve_csv(rows) ==
        "v,b,r,k,lambda,gcd_r_2lambda,passes\n"
        "10,30,18,6,10,2,true\n"
        "10,45,36,8,28,4,true\n"
        "10,60,36,6,20,4,true\n");
  CHECK(hfd::sieve_csv({}) == "v,b,r,k,lambda,gcd_r_2lambda,passes\n");

  // with a known r_max the passes column records the divisor test
  const auto csv = hfd::sieve_csv(rows, 9);
  CHECK(csv.find("false") == std::string::npos);  // all three divide 9
  const auto csv4 = hfd::sieve_csv(rows, 4);
  CHECK(csv4.find("10,30,18,6,10,2,false") != std::string::npos);
}

TEST_CASE("json output carries the same rows and column order") {
  const auto rows = hfd::step1_enumerate(10, 36);
  const auto parsed = nlohmann::ordered_json::parse(hfd::sieve_json(rows, 9));
  REQUIRE(parsed.is_array());
  REQUIRE(parsed.size() == 3);
  CHECK(parsed[0]["b"] == 30);
  CHECK(parsed[0]["lambda"] == 10);
  CHECK(parsed[0]["passes"] == true);
  CHECK(parsed[2]["r"] == 36);
  std::vector<std::string> keys;
  for (auto it = parsed[0].begin(); it != parsed[0].end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"v", "b", "r", "k", "lambda",
                                         "gcd_r_2lambda", "passes"});
}
