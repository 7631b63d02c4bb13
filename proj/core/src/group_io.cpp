#include "hfd/group_io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "hfd/errors.hpp"

namespace hfd {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos)
    return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Splits "keyword rest" on first whitespace.
std::pair<std::string, std::string> split_keyword(const std::string& line) {
  std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos)
    return {line, ""};
  return {line.substr(0, sp), strip(line.substr(sp + 1))};
}

std::uint64_t parse_u64(const std::string& text, const char* what) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(std::string(what) + ": expected a positive integer, got '" +
                     text + "'");
  return value;
}

std::vector<Point> parse_point_list(const std::string& text, std::size_t degree,
                                    const char* what) {
  std::vector<Point> points;
  std::string token;
  std::istringstream ss(text);
  while (std::getline(ss, token, ',')) {
    token = strip(token);
    if (token.empty())
      throw ParseError(std::string(what) + ": empty entry in point list");
    const std::uint64_t value = parse_u64(token, what);
    if (value < 1 || value > degree)
      throw ParseError(std::string(what) + ": point out of range");
    points.push_back(static_cast<Point>(value));
  }
  return points;
}

}  // namespace

PermGroup read_group(std::istream& in) {
  std::optional<std::size_t> degree;
  std::optional<std::string> name;
  std::optional<std::uint64_t> order;
  std::vector<Permutation> gens;

  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#')
      continue;
    auto [keyword, rest] = split_keyword(line);
    if (keyword == "degree") {
      if (degree)
        throw ParseError("group file: duplicate degree line");
      const std::uint64_t n = parse_u64(rest, "group file degree");
      if (n == 0)
        throw ParseError("group file: degree must be at least 1");
      degree = static_cast<std::size_t>(n);
    } else if (keyword == "name") {
      name = rest;
    } else if (keyword == "order") {
      order = parse_u64(rest, "group file order");
    } else if (keyword == "gen") {
      if (!degree)
        throw ParseError("group file: gen line before degree line");
      gens.push_back(parse_permutation(rest, *degree));
    } else {
      throw ParseError("group file: unknown keyword '" + keyword + "'");
    }
  }
  if (!degree)
    throw ParseError("group file: missing degree line");
  if (gens.empty())
    throw ParseError("group file: no generators");
  return PermGroup(std::move(gens), std::move(name), order);
}

PermGroup read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open group file: " + path);
  return read_group(in);
}

void write_group(std::ostream& out, const PermGroup& g, bool include_order) {
  out << "degree " << g.degree() << "\n";
  if (g.label())
    out << "name " << *g.label() << "\n";
  if (include_order)
    out << "order " << g.order() << "\n";
  else if (g.declared_order())
    out << "order " << *g.declared_order() << "\n";
  for (const auto& gen : g.generators())
    out << "gen " << format_cycles(gen) << "\n";
}

void write_group_file(const std::string& path, const PermGroup& g,
                      bool include_order) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot open group file for writing: " + path);
  write_group(out, g, include_order);
}

PointSet read_set(std::istream& in) {
  std::optional<std::size_t> degree;
  std::optional<std::vector<Point>> members;

  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = strip(raw);
    if (line.empty() || line[0] == '#')
      continue;
    auto [keyword, rest] = split_keyword(line);
    if (keyword == "degree") {
      const std::uint64_t n = parse_u64(rest, "set file degree");
      if (n == 0)
        throw ParseError("set file: degree must be at least 1");
      degree = static_cast<std::size_t>(n);
    } else if (keyword == "set") {
      if (!degree)
        throw ParseError("set file: set line before degree line");
      members = parse_point_list(rest, *degree, "set file");
    } else {
      throw ParseError("set file: unknown keyword '" + keyword + "'");
    }
  }
  if (!degree)
    throw ParseError("set file: missing degree line");
  if (!members)
    throw ParseError("set file: missing set line");
  return PointSet(*degree, std::move(*members));
}

PointSet read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open set file: " + path);
  return read_set(in);
}

void write_set(std::ostream& out, const PointSet& s) {
  out << "degree " << s.degree() << "\n";
  out << "set ";
  const auto& members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i)
      out << ',';
    out << members[i];
  }
  out << "\n";
}

void write_set_file(const std::string& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out)
    throw ParseError("cannot open set file for writing: " + path);
  write_set(out, s);
}

}  // namespace hfd
