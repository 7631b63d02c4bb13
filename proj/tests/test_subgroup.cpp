#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfd/action.hpp"
#include "hfd/errors.hpp"
#include "hfd/subgroup.hpp"

#include "support/oracle.hpp"

using namespace hfd;

namespace {

PermGroup make(std::size_t degree, std::initializer_list<const char*> cycles,
               const char* label = nullptr) {
  std::vector<Permutation> gens;
  for (const char* text : cycles)
    gens.push_back(parse_permutation(text, degree));
  if (label)
    return PermGroup(std::move(gens), label);
  return PermGroup(std::move(gens));
}

PermGroup s4() { return make(4, {"(1,2,3,4)", "(1,2)"}, "s4"); }
PermGroup a5() { return make(5, {"(1,2,3,4,5)", "(3,4,5)"}, "a5"); }
PermGroup m11() {
  return make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"},
              "m11");
}

std::vector<test::Images> raw_gens(const PermGroup& g) {
  std::vector<test::Images> out;
  for (const auto& gen : g.generators())
    out.push_back(gen.images());
  return out;
}

test::ElementList elements_of(const PermGroup& g) {
  if (g.generators().empty())
    return {test::id_images(g.degree())};
  const auto closed = test::closure(raw_gens(g));
  return test::ElementList(closed.begin(), closed.end());
}

// Full cross-check of the exhaustive search against the lattice oracle:
// same class count for every divisor, and each returned representative's
// element set lies in a distinct oracle class.
void check_against_oracle(const PermGroup& g) {
  const std::set<test::Images> elements = test::closure(raw_gens(g));
  REQUIRE(elements.size() == g.order());

  std::map<std::uint64_t, std::vector<test::ElementList>> by_order;
  for (auto& s : test::all_subgroups(elements)) {
    const std::uint64_t m = s.size();
    by_order[m].push_back(std::move(s));
  }

  for (std::uint64_t m = 1; m <= g.order(); ++m) {
    if (g.order() % m)
      continue;
    const auto bucket = by_order.find(m);
    const auto oracle =
        bucket == by_order.end()
            ? std::vector<std::vector<test::ElementList>>{}
            : test::conjugacy_classes(elements, bucket->second);

    const SubgroupClassReport rep = subgroups_of_index(g, g.order() / m);
    REQUIRE(rep.exhaustive);
    CHECK(rep.classes.size() == oracle.size());

    std::set<std::size_t> used;
    for (const SubgroupClass& cls : rep.classes) {
      CHECK(cls.group.order() == m);
      CHECK(cls.group.order() * rep.index == g.order());
      const test::ElementList lib = elements_of(cls.group);
      bool matched = false;
      for (std::size_t i = 0; i < oracle.size() && !matched; ++i)
        if (!used.count(i) && std::binary_search(oracle[i].begin(),
                                                 oracle[i].end(), lib)) {
          used.insert(i);
          matched = true;
        }
      CHECK(matched);
    }
  }
}

std::filesystem::path fresh_dir() {
  auto dir = std::filesystem::temp_directory_path() / "hfd_subgroup_tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::string write_file(const std::string& name, const std::string& text) {
  const auto path = fresh_dir() / name;
  std::ofstream out(path);
  out << text;
  out.close();
  return path.string();
}

}  // namespace

TEST_CASE("exhaustive search agrees with the lattice oracle") {
  // Mix of shapes: symmetric/alternating, elementary abelian (conjugation
  // does nothing, so every subgroup is its own class), dihedral, quaternion,
  // a group with fixed points, and a simple group of order 168.
  check_against_oracle(s4());
  check_against_oracle(a5());
  check_against_oracle(make(6, {"(1,2)", "(3,4)", "(5,6)"}));
  check_against_oracle(make(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}));
  check_against_oracle(make(8, {"(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)"}));
  check_against_oracle(make(6, {"(1,2)", "(1,2,3)"}));
  check_against_oracle(
      make(8, {"(1,2,3,4,5,6,7)", "(1,8)(2,7)(3,4)(5,6)"}));
}

TEST_CASE("index two in the symmetric group on four points") {
  const auto rep = subgroups_of_index(s4(), 2);
  REQUIRE(rep.classes.size() == 1);
  CHECK(rep.exhaustive);
  CHECK(rep.classes[0].group.order() == 12);
  CHECK(rep.classes[0].signature() == std::vector<std::size_t>{4});
  CHECK(rep.classes[0].source == SubgroupSource::exhaustive);
}

TEST_CASE("three classes of order four in the symmetric group") {
  // The cyclic four-group and the normal Klein group are both transitive,
  // so orbit signatures alone cannot separate them; the class registry must.
  const auto rep = subgroups_of_index(s4(), 6);
  REQUIRE(rep.classes.size() == 3);
  CHECK(rep.classes[0].signature() == std::vector<std::size_t>{2, 2});
  CHECK(rep.classes[1].signature() == std::vector<std::size_t>{4});
  CHECK(rep.classes[2].signature() == std::vector<std::size_t>{4});
}

TEST_CASE("a simple group has no proper subgroup of small index") {
  for (std::uint64_t b : {2, 3, 4}) {
    const auto rep = subgroups_of_index(a5(), b);
    CHECK(rep.exhaustive);
    CHECK(rep.classes.empty());
  }
}

TEST_CASE("trivial indices and invalid indices") {
  const PermGroup g = a5();
  const auto whole = subgroups_of_index(g, 1);
  REQUIRE(whole.classes.size() == 1);
  CHECK(whole.classes[0].group.order() == 60);

  const auto trivial = subgroups_of_index(g, 60);
  REQUIRE(trivial.classes.size() == 1);
  CHECK(trivial.classes[0].group.order() == 1);
  CHECK(trivial.classes[0].signature() ==
        std::vector<std::size_t>{1, 1, 1, 1, 1});

  CHECK_THROWS_AS(subgroups_of_index(g, 0), std::invalid_argument);
  CHECK_THROWS_AS(subgroups_of_index(g, 7), std::invalid_argument);
  CHECK_THROWS_AS(subgroups_of_index(g, 120), std::invalid_argument);
}

TEST_CASE("index eleven in the mathieu group on eleven points" *
          doctest::timeout(120)) {
  const auto rep = subgroups_of_index(m11(), 11);
  REQUIRE(rep.classes.size() == 1);
  CHECK(rep.exhaustive);
  CHECK(rep.classes[0].group.order() == 720);
  CHECK(rep.classes[0].signature() == std::vector<std::size_t>{1, 10});
}

TEST_CASE("targeted search verifies orders and admits incompleteness") {
  SearchBudget tight;
  tight.exhaustive_parent_order = 1;  // force the targeted path
  tight.targeted_attempts = 300;

  const PermGroup g = a5();
  for (std::uint64_t b : {5, 6, 10}) {
    const auto rep = subgroups_of_index(g, b, tight);
    CHECK_FALSE(rep.exhaustive);
    CHECK(rep.note.find("targeted") != std::string::npos);
    CHECK(!rep.classes.empty());  // deterministic stream, seed 1
    for (const SubgroupClass& cls : rep.classes) {
      CHECK(cls.source == SubgroupSource::targeted);
      CHECK(cls.group.order() * b == g.order());
      for (const Permutation& x : cls.group.generators())
        CHECK(g.contains(x));
    }
  }
}

TEST_CASE("subgroup fixtures load and are validated") {
  const PermGroup parent = a5();

  const auto good = write_file("a4.grp",
                               "degree 5\n"
                               "order 12\n"
                               "gen (1,2,3)\n"
                               "gen (2,3,4)\n");
  const PermGroup h = load_subgroup_fixture(parent, good);
  CHECK(h.order() == 12);
  CHECK(orbit_partition(h).signature == std::vector<std::size_t>{1, 4});

  const auto wrong_degree = write_file("deg4.grp",
                                       "degree 4\n"
                                       "order 3\n"
                                       "gen (1,2,3)\n");
  CHECK_THROWS_AS(load_subgroup_fixture(parent, wrong_degree),
                  ConsistencyError);

  const auto no_order = write_file("no_order.grp",
                                   "degree 5\n"
                                   "gen (1,2,3)\n");
  CHECK_THROWS_AS(load_subgroup_fixture(parent, no_order), ConsistencyError);

  const auto outside = write_file("odd.grp",
                                  "degree 5\n"
                                  "order 2\n"
                                  "gen (1,2)\n");
  CHECK_THROWS_AS(load_subgroup_fixture(parent, outside), ConsistencyError);

  const auto wrong_order = write_file("wrong_order.grp",
                                      "degree 5\n"
                                      "order 6\n"
                                      "gen (1,2,3)\n"
                                      "gen (2,3,4)\n");
  CHECK_THROWS_AS(load_subgroup_fixture(parent, wrong_order),
                  ConsistencyError);

  CHECK_THROWS_AS(load_subgroup_fixture(parent, "/nonexistent/x.grp"),
                  ParseError);
}

TEST_CASE("conjugate fixtures carry the same signature") {
  const PermGroup parent = a5();
  const auto first = write_file("c3a.grp",
                                "degree 5\norder 3\ngen (1,2,3)\n");
  const auto second = write_file("c3b.grp",
                                 "degree 5\norder 3\ngen (1,4,5)\n");
  const PermGroup h1 = load_subgroup_fixture(parent, first);
  const PermGroup h2 = load_subgroup_fixture(parent, second);
  CHECK(orbit_partition(h1).signature == orbit_partition(h2).signature);
}

TEST_CASE("signature table rows, notes, and class order") {
  const auto table = signature_table(s4(), {5, 3, 3, 6});
  CHECK(table.group_label == "s4");
  CHECK(table.group_order == 24);
  REQUIRE(table.rows.size() == 3);  // duplicate b folded

  CHECK(table.rows[0].b == 3);
  CHECK(table.rows[0].exhaustive);
  REQUIRE(table.rows[0].classes.size() == 1);
  CHECK(table.rows[0].classes[0].group.order() == 8);

  CHECK(table.rows[1].b == 5);
  CHECK(table.rows[1].note == "does not divide the group order");
  CHECK(table.rows[1].classes.empty());

  CHECK(table.rows[2].b == 6);
  REQUIRE(table.rows[2].classes.size() == 3);
  CHECK(table.rows[2].classes[0].signature() ==
        std::vector<std::size_t>{2, 2});
}

TEST_CASE("supplied subgroups fold into matching classes") {
  const PermGroup parent = a5();
  const PermGroup c3 = make(5, {"(1,4,5)"});

  SignatureTableOptions with_search;
  with_search.supplied.emplace_back(20, c3);
  const auto folded = signature_table(parent, {20}, with_search);
  REQUIRE(folded.rows.size() == 1);
  REQUIRE(folded.rows[0].classes.size() == 1);
  CHECK(folded.rows[0].classes[0].source == SubgroupSource::exhaustive);

  // With search off, two conjugate representatives still land in one class.
  SignatureTableOptions no_search;
  no_search.search = false;
  no_search.supplied.emplace_back(20, c3);
  no_search.supplied.emplace_back(20, make(5, {"(1,2,3)"}));
  const auto merged = signature_table(parent, {20}, no_search);
  REQUIRE(merged.rows[0].classes.size() == 1);
  CHECK(merged.rows[0].classes[0].source == SubgroupSource::fixture);
  CHECK_FALSE(merged.rows[0].exhaustive);

  // Non-conjugate supplied subgroups stay separate.
  SignatureTableOptions split;
  split.search = false;
  split.supplied.emplace_back(6, make(4, {"(1,2,3,4)"}));
  split.supplied.emplace_back(6, make(4, {"(1,2)", "(3,4)"}));
  CHECK(signature_table(s4(), {6}, split).rows[0].classes.size() == 2);

  SignatureTableOptions bad_order;
  bad_order.supplied.emplace_back(20, make(5, {"(1,2)(3,4)"}));
  CHECK_THROWS_AS(signature_table(parent, {20}, bad_order),
                  std::invalid_argument);

  SignatureTableOptions bad_member;
  bad_member.supplied.emplace_back(30, make(5, {"(1,2)"}));
  CHECK_THROWS_AS(signature_table(parent, {30}, bad_member),
                  std::invalid_argument);
}

TEST_CASE("oversized parents fall back to supplied subgroups only") {
  SignatureTableOptions opts;
  opts.budget.exhaustive_parent_order = 1;
  opts.supplied.emplace_back(3, make(4, {"(1,2,3,4)", "(1,3)"}));
  const auto table = signature_table(s4(), {3, 1, 24}, opts);

  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].b == 1);  // whole group stays exact at any size
  CHECK(table.rows[0].exhaustive);
  CHECK(table.rows[1].b == 3);
  CHECK_FALSE(table.rows[1].exhaustive);
  CHECK(table.rows[1].note ==
        "parent beyond the exhaustive budget; supplied subgroups only");
  REQUIRE(table.rows[1].classes.size() == 1);
  CHECK(table.rows[1].classes[0].source == SubgroupSource::fixture);
  CHECK(table.rows[2].b == 24);  // trivial subgroup likewise exact
  CHECK(table.rows[2].exhaustive);
}

TEST_CASE("signature table markdown layout") {
  const auto table = signature_table(s4(), {3, 5});
  CHECK(signature_table_markdown(table) ==
        "# Orbit lengths of index-b subgroups of s4\n"
        "\n"
        "Group order 24.\n"
        "\n"
        "| b | order | orbit lengths | source | complete |\n"
        "|--:|------:|---------------|--------|----------|\n"
        "| 3 | 8 | 4 | exhaustive | yes |\n"
        "| 5 | | does not divide the group order | | no |\n");
}

TEST_CASE("signature table json round-trips") {
  const auto text = signature_table_json(signature_table(s4(), {6, 5}));
  const auto root = nlohmann::json::parse(text);
  CHECK(root["group"] == "s4");
  CHECK(root["order"] == 24);
  REQUIRE(root["rows"].size() == 2);
  CHECK(root["rows"][0]["b"] == 5);
  CHECK(root["rows"][0]["note"] == "does not divide the group order");
  REQUIRE(root["rows"][1]["classes"].size() == 3);
  CHECK(root["rows"][1]["classes"][0]["order"] == 4);
  CHECK(root["rows"][1]["classes"][0]["signature"] ==
        nlohmann::json::array({2, 2}));
  CHECK(root["rows"][1]["classes"][0]["source"] == "exhaustive");
}
