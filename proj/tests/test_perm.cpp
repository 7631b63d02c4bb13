#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "hfd/errors.hpp"
#include "hfd/group_io.hpp"
#include "hfd/perm.hpp"
#include "hfd/point_set.hpp"

using namespace hfd;

TEST_CASE("parse basic cycle with fixed points outside it") {
  const Permutation p = parse_permutation("(1,2,3)", 5);
  CHECK(p.images() == std::vector<Point>{2, 3, 1, 4, 5});
}

TEST_CASE("parse two disjoint four-cycles") {
  const Permutation p = parse_permutation("(3,9,7,8)(4,10,5,6)", 10);
  CHECK(p.image(3) == 9);
  CHECK(p.image(9) == 7);
  CHECK(p.image(7) == 8);
  CHECK(p.image(8) == 3);
  CHECK(p.image(4) == 10);
  CHECK(p.image(10) == 5);
  CHECK(p.image(5) == 6);
  CHECK(p.image(6) == 4);
  CHECK(p.image(1) == 1);
  CHECK(p.image(2) == 2);
}

TEST_CASE("parse identity notation") {
  const Permutation p = parse_permutation("()", 4);
  CHECK(p.is_identity());
  CHECK(p.degree() == 4);
}

TEST_CASE("parse accepts whitespace separators") {
  const Permutation comma = parse_permutation("(1,8,2)(3,4,5)(6,10,7)", 10);
  const Permutation spaces = parse_permutation("(1 8 2)(3 4 5)(6 10 7)", 10);
  const Permutation mixed = parse_permutation("(1, 8, 2) (3 4 5)(6,10 7)", 10);
  CHECK(comma == spaces);
  CHECK(comma == mixed);
  CHECK(comma.image(1) == 8);
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_permutation("", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("1,2,3", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,4)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(0,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1,2,)", 3), ParseError);
}

TEST_CASE("composition applies left argument first") {
  const Permutation a = parse_permutation("(1,2)", 3);
  const Permutation b = parse_permutation("(2,3)", 3);
  // 1 -> 2 under a, then 2 -> 3 under b.
  CHECK(compose(a, b) == parse_permutation("(1,3,2)", 3));
  CHECK(compose(b, a) == parse_permutation("(1,2,3)", 3));
}

TEST_CASE("inverse of a three-cycle") {
  const Permutation p = parse_permutation("(1,2,3)", 3);
  CHECK(p.inverse() == parse_permutation("(1,3,2)", 3));
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
}

TEST_CASE("compose rejects degree mismatch") {
  const Permutation a = parse_permutation("(1,2)", 3);
  const Permutation b = parse_permutation("(1,2)", 4);
  CHECK_THROWS_AS(compose(a, b), std::invalid_argument);
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(Permutation(7).order() == 1);
  CHECK(parse_permutation("(1,2)", 2).order() == 2);
  CHECK(parse_permutation("(1,2,3)(4,5)", 5).order() == 6);
  CHECK(parse_permutation("(1,2,3,4)(5,6,7)(8,9)", 9).order() == 12);
}

TEST_CASE("cycle formatting round-trips") {
  const char* inputs[] = {"(1,2,3)", "(3,9,7,8)(4,10,5,6)", "()",
                          "(1,8,2)(3,4,5)(6,10,7)"};
  for (const char* text : inputs) {
    const Permutation p = parse_permutation(text, 10);
    CHECK(parse_permutation(format_cycles(p), 10) == p);
  }
}

TEST_CASE("conjugation matches composed products") {
  const Permutation g = parse_permutation("(1,2,3)", 5);
  const Permutation h = parse_permutation("(2,4)(3,5)", 5);
  CHECK(conjugate(g, h) == compose(compose(h.inverse(), g), h));
}

TEST_CASE("preimage inverts image") {
  const Permutation p = parse_permutation("(1,5,4,2)", 6);
  for (Point q = 1; q <= 6; ++q)
    CHECK(p.preimage(p.image(q)) == q);
}

TEST_CASE("point set keeps members sorted and deduplicated") {
  const PointSet s(10, {7, 3, 3, 9, 1});
  CHECK(s.members() == std::vector<Point>{1, 3, 7, 9});
  CHECK(s.size() == 4);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
}

TEST_CASE("point set rejects out-of-range members") {
  CHECK_THROWS_AS(PointSet(5, {0}), std::invalid_argument);
  CHECK_THROWS_AS(PointSet(5, {6}), std::invalid_argument);
}

TEST_CASE("canonical keys separate exactly the distinct subsets") {
  // Exhaustive over all subsets at small degree.
  for (std::size_t degree = 1; degree <= 10; ++degree) {
    std::set<std::string> keys;
    std::size_t count = 0;
    for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
      std::vector<Point> members;
      for (std::size_t i = 0; i < degree; ++i)
        if (mask & (1u << i))
          members.push_back(static_cast<Point>(i + 1));
      PointSet s(degree, members);
      CHECK(s.key().size() == (degree + 7) / 8);
      CHECK(PointSet::from_key(degree, s.key()) == s);
      keys.insert(s.key());
      ++count;
    }
    CHECK(keys.size() == count);
  }
}

TEST_CASE("keys of equal sets are byte-identical regardless of input order") {
  const PointSet a(20, {17, 2, 9, 20, 1});
  const PointSet b(20, {1, 2, 9, 17, 20});
  CHECK(a.key() == b.key());
  CHECK(a == b);
}

TEST_CASE("apply maps a set to its image set") {
  const Permutation g = parse_permutation("(1,2,3)(4,5)", 6);
  const PointSet s(6, {1, 4, 6});
  CHECK(s.apply(g) == PointSet(6, {2, 5, 6}));
}

TEST_CASE("apply_to_key agrees with apply") {
  const Permutation g = parse_permutation("(1,9,3)(4,5)(2,8,10,6)", 10);
  const PointSet s(10, {1, 2, 3, 7, 10});
  std::string out;
  apply_to_key(g, s.key(), out);
  CHECK(out == s.apply(g).key());
}

TEST_CASE("set operations") {
  const PointSet a(9, {1, 2, 3, 4});
  const PointSet b(9, {3, 4, 5});
  CHECK(a.set_union(b) == PointSet(9, {1, 2, 3, 4, 5}));
  CHECK(a.set_intersection(b) == PointSet(9, {3, 4}));
  CHECK(a.intersection_size(b) == 2);
  CHECK(a.complement() == PointSet(9, {5, 6, 7, 8, 9}));
}

TEST_CASE("group file round-trip") {
  std::stringstream file;
  file << "degree 10\n"
       << "name sample\n"
       << "# a comment\n"
       << "gen (3,9,7,8)(4,10,5,6)\n"
       << "gen (1 8 2)(3 4 5)(6 10 7)\n";
  const PermGroup g = read_group(file);
  CHECK(g.degree() == 10);
  CHECK(g.label() == "sample");
  CHECK(g.generators().size() == 2);

  std::stringstream out;
  write_group(out, g);
  const PermGroup again = read_group(out);
  CHECK(again.generators() == g.generators());
  CHECK(again.label() == g.label());
}

TEST_CASE("group file order line is checked at chain construction") {
  std::stringstream good;
  good << "degree 3\norder 6\ngen (1,2)\ngen (1,2,3)\n";
  CHECK(read_group(good).order() == 6);

  std::stringstream bad;
  bad << "degree 3\norder 5\ngen (1,2)\ngen (1,2,3)\n";
  const PermGroup g = read_group(bad);
  CHECK_THROWS_AS(g.order(), ConsistencyError);
}

TEST_CASE("group file rejects malformed content") {
  auto parse = [](const char* text) {
    std::stringstream ss(text);
    return read_group(ss);
  };
  CHECK_THROWS_AS(parse("gen (1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse("degree 3\n"), ParseError);
  CHECK_THROWS_AS(parse("degree 3\nflavor sweet\ngen (1,2)\n"), ParseError);
  CHECK_THROWS_AS(parse("degree 0\ngen ()\n"), ParseError);
}

TEST_CASE("set file round-trip") {
  std::stringstream file;
  file << "degree 16\nset 1,2,3,5,9,16\n";
  const PointSet s = read_set(file);
  CHECK(s == PointSet(16, {1, 2, 3, 5, 9, 16}));

  std::stringstream out;
  write_set(out, s);
  CHECK(read_set(out) == s);
}
