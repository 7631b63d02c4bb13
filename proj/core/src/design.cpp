#include "hfd/design.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "hfd/errors.hpp"

namespace hfd {
namespace {

constexpr std::size_t kPairCountLimit = 400;

// Distinct blocks of a structure with their multiplicities, plus the
// permutation each generator induces on them. Shared by everything that
// walks block or flag orbits.
struct BlockTable {
  std::size_t v = 0;
  std::vector<std::string> keys;  // canonical, sorted unique
  std::vector<std::size_t> mult;
  std::vector<std::size_t> of_input;            // input block -> distinct id
  std::vector<std::vector<std::uint32_t>> gen_maps;

  std::size_t size() const { return keys.size(); }
};

BlockTable build_table(const PermGroup& g, const IncidenceStructure& s) {
  if (g.degree() != s.v)
    throw ConsistencyError("group degree differs from design point count");
  BlockTable t;
  t.v = s.v;
  std::map<std::string, std::size_t> index;
  t.of_input.reserve(s.blocks.size());
  for (const auto& blk : s.blocks) {
    if (blk.degree() != s.v)
      throw ConsistencyError("block degree differs from design point count");
    auto key = blk.key();
    auto [it, fresh] = index.try_emplace(key, t.keys.size());
    if (fresh) {
      t.keys.push_back(key);
      t.mult.push_back(0);
    }
    ++t.mult[it->second];
    t.of_input.push_back(it->second);
  }

  const std::size_t nb = t.keys.size();
  std::string img(t.keys.empty() ? 0 : t.keys.front().size(), char(0));
  for (const auto& gen : g.generators()) {
    std::vector<std::uint32_t> m(nb);
    for (std::size_t i = 0; i < nb; ++i) {
      apply_to_key(gen, t.keys[i], img);
      auto it = index.find(img);
      if (it == index.end())
        throw ConsistencyError("generator does not preserve the block set");
      if (t.mult[it->second] != t.mult[i])
        throw ConsistencyError("generator does not preserve block multiplicity");
      m[i] = static_cast<std::uint32_t>(it->second);
    }
    t.gen_maps.push_back(std::move(m));
  }
  return t;
}

std::vector<std::size_t> distinct_block_orbits(const BlockTable& t) {
  std::vector<std::size_t> orbit_sizes;
  std::vector<char> seen(t.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::size_t root = 0; root < t.size(); ++root) {
    if (seen[root])
      continue;
    seen[root] = 1;
    queue.assign(1, static_cast<std::uint32_t>(root));
    std::size_t count = 0;
    while (!queue.empty()) {
      const std::uint32_t x = queue.back();
      queue.pop_back();
      ++count;
      for (const auto& m : t.gen_maps) {
        const std::uint32_t y = m[x];
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    orbit_sizes.push_back(count);
  }
  return orbit_sizes;
}

}  // namespace

DesignParams ParamScan::params() const {
  if (!two_design())
    throw std::logic_error("params() on a structure that is not a 2-design");
  return DesignParams{v, b, r, k, lambda};
}

ParamScan classify_parameters(const IncidenceStructure& s) {
  ParamScan scan;
  scan.v = s.v;
  scan.b = s.blocks.size();
  if (s.v == 0 || s.blocks.empty())
    throw std::invalid_argument("classify_parameters: empty structure");

  scan.uniform_k = true;
  scan.k = s.blocks.front().size();
  for (std::size_t i = 0; i < s.blocks.size(); ++i) {
    if (s.blocks[i].degree() != s.v)
      throw ConsistencyError("block degree differs from design point count");
    if (s.blocks[i].size() != scan.k) {
      scan.uniform_k = false;
      scan.k_note = "block " + std::to_string(i + 1) + " has size " +
                    std::to_string(s.blocks[i].size()) + ", block 1 has " +
                    std::to_string(scan.k);
      break;
    }
  }

  std::vector<std::size_t> degree(s.v + 1, 0);
  for (const auto& blk : s.blocks)
    for (Point p : blk.members())
      ++degree[p];
  scan.constant_r = true;
  scan.r = degree[1];
  for (Point p = 2; p <= s.v; ++p)
    if (degree[p] != scan.r) {
      scan.constant_r = false;
      scan.r_note = "point " + std::to_string(p) + " lies on " +
                    std::to_string(degree[p]) + " blocks, point 1 on " +
                    std::to_string(scan.r);
      break;
    }

  if (s.v > kPairCountLimit)
    throw std::runtime_error(
        "classify_parameters: pair counting not implemented beyond v = " +
        std::to_string(kPairCountLimit));
  std::vector<std::uint32_t> paircnt(s.v * s.v, 0);
  for (const auto& blk : s.blocks) {
    const auto& m = blk.members();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        ++paircnt[(m[i] - 1) * s.v + (m[j] - 1)];
  }
  scan.constant_lambda = true;
  scan.lambda = s.v >= 2 ? paircnt[1] : 0;  // pair (1,2)
  for (Point a = 1; a <= s.v && scan.constant_lambda; ++a)
    for (Point b = a + 1; b <= s.v; ++b)
      if (paircnt[(a - 1) * s.v + (b - 1)] != scan.lambda) {
        scan.constant_lambda = false;
        scan.lambda_note =
            "pair {" + std::to_string(a) + "," + std::to_string(b) +
            "} lies on " + std::to_string(paircnt[(a - 1) * s.v + (b - 1)]) +
            " blocks, pair {1,2} on " + std::to_string(scan.lambda);
        break;
      }
  return scan;
}

PbdProfile pbd_profile(const IncidenceStructure& s) {
  PbdProfile prof;
  if (s.v == 0)
    throw std::invalid_argument("pbd_profile: empty structure");
  if (s.v > kPairCountLimit)
    throw std::runtime_error("pbd_profile: pair counting not implemented beyond v = " +
                             std::to_string(kPairCountLimit));

  std::vector<std::uint32_t> paircnt(s.v * s.v, 0);
  prof.point_degrees.assign(s.v, 0);
  std::vector<std::size_t> weighted(s.v + 1, 0);  // sum of (|B|-1) over B at p
  for (const auto& blk : s.blocks) {
    const auto& m = blk.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      ++prof.point_degrees[m[i] - 1];
      weighted[m[i]] += m.size() - 1;
      for (std::size_t j = i + 1; j < m.size(); ++j)
        ++paircnt[(m[i] - 1) * s.v + (m[j] - 1)];
    }
  }

  prof.pair_constant = true;
  prof.lambda = s.v >= 2 ? paircnt[1] : 0;
  for (Point a = 1; a <= s.v && prof.pair_constant; ++a)
    for (Point b = a + 1; b <= s.v; ++b)
      if (paircnt[(a - 1) * s.v + (b - 1)] != prof.lambda) {
        prof.pair_constant = false;
        prof.note = "pair {" + std::to_string(a) + "," + std::to_string(b) +
                    "} lies on " + std::to_string(paircnt[(a - 1) * s.v + (b - 1)]) +
                    " blocks, pair {1,2} on " + std::to_string(prof.lambda);
      }

  prof.degree_sum_identity = prof.pair_constant;
  if (prof.pair_constant)
    for (Point p = 1; p <= s.v; ++p)
      if (weighted[p] != prof.lambda * (s.v - 1)) {
        prof.degree_sum_identity = false;  // cannot happen when pairs balance
        prof.note = "degree sum fails at point " + std::to_string(p);
        break;
      }
  return prof;
}

IncidenceStructure from_base_blocks(const PermGroup& g,
                                    const std::vector<PointSet>& bases,
                                    std::size_t orbit_cap) {
  IncidenceStructure s;
  s.v = g.degree();
  for (const auto& base : bases) {
    if (base.degree() != g.degree())
      throw ConsistencyError("base block degree differs from group degree");
    SetOrbitOptions opt;
    opt.cap = orbit_cap;
    opt.want_elements = true;
    const auto orb = g.set_orbit(base, opt);
    if (orb.status != OrbitStatus::complete)
      throw std::runtime_error("from_base_blocks: orbit cap exceeded");
    for (const auto& elem : orb.elements)
      s.blocks.push_back(elem);
  }
  return s;
}

std::vector<std::size_t> block_orbit_sizes(const PermGroup& g,
                                           const IncidenceStructure& s) {
  return distinct_block_orbits(build_table(g, s));
}

bool is_block_transitive(const PermGroup& g, const IncidenceStructure& s) {
  return block_orbit_sizes(g, s).size() == 1;
}

std::size_t FlagOrbits::orbit_of(std::size_t block_index, Point p) const {
  const std::uint8_t id = id_[block_index * v_ + (p - 1)];
  if (id == 0xFF)
    throw std::invalid_argument("orbit_of: not a flag");
  return id;
}

IncidenceStructure FlagOrbits::constituent(const IncidenceStructure& s,
                                           std::size_t orbit) const {
  IncidenceStructure out;
  out.v = s.v;
  for (std::size_t bi = 0; bi < s.blocks.size(); ++bi) {
    std::vector<Point> pts;
    for (Point p : s.blocks[bi].members())
      if (id_[bi * v_ + (p - 1)] == orbit)
        pts.push_back(p);
    if (!pts.empty())
      out.blocks.emplace_back(s.v, pts);
  }
  return out;
}

FlagOrbits flag_orbits(const PermGroup& g, const IncidenceStructure& s) {
  const BlockTable t = build_table(g, s);
  for (std::size_t m : t.mult)
    if (m != 1)
      throw std::runtime_error("flag_orbits: repeated blocks not supported");

  FlagOrbits fo;
  fo.v_ = s.v;
  fo.id_.assign(t.size() * s.v, 0xFF);

  // Incidence mask for flag enumeration.
  std::vector<std::vector<Point>> members(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    members[i] = PointSet::from_key(s.v, t.keys[i]).members();

  const auto& gens = g.generators();
  std::vector<std::uint32_t> queue;
  for (std::size_t bi = 0; bi < t.size(); ++bi) {
    for (Point p : members[bi]) {
      if (fo.id_[bi * s.v + (p - 1)] != 0xFF)
        continue;
      if (fo.sizes.size() >= 0xFF)
        throw std::runtime_error("flag_orbits: more than 254 orbits");
      // Repetition-free blocks keep input order, so the distinct id is the
      // input index.
      const auto id = static_cast<std::uint8_t>(fo.sizes.size());
      fo.reps.emplace_back(bi, p);
      std::size_t count = 0;
      queue.assign(1, static_cast<std::uint32_t>(bi * s.v + (p - 1)));
      fo.id_[queue.front()] = id;
      while (!queue.empty()) {
        const std::uint32_t f = queue.back();
        queue.pop_back();
        ++count;
        const std::size_t fb = f / s.v;
        const Point fp = static_cast<Point>(f % s.v + 1);
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
          const std::uint32_t nf =
              t.gen_maps[gi][fb] * static_cast<std::uint32_t>(s.v) +
              (gens[gi].image(fp) - 1);
          if (fo.id_[nf] == 0xFF) {
            fo.id_[nf] = id;
            queue.push_back(nf);
          }
        }
      }
      fo.sizes.push_back(count);
      fo.flag_count += count;
    }
  }
  return fo;
}

bool is_flag_transitive(const PermGroup& g, const IncidenceStructure& s) {
  return flag_orbits(g, s).orbit_count() == 1;
}

HalfFlagReport half_flag_report(const PermGroup& g,
                                const IncidenceStructure& s) {
  HalfFlagReport rep;
  rep.block_transitive = is_block_transitive(g, s);
  if (!rep.block_transitive)
    return rep;
  const PointSet& block = s.blocks.front();
  const PermGroup stab = g.setwise_stabilizer(block);
  rep.block_stabilizer_order = stab.order();
  for (const auto& o : stab.orbits()) {
    if (o.members().empty())
      continue;
    if (block.contains(o.members().front()))
      rep.orbits_on_block.push_back(o.size());
  }
  std::sort(rep.orbits_on_block.begin(), rep.orbits_on_block.end());
  const std::size_t k = block.size();
  rep.half_flag = k % 2 == 0 && rep.orbits_on_block.size() == 2 &&
                  rep.orbits_on_block[0] == k / 2 &&
                  rep.orbits_on_block[1] == k / 2;
  return rep;
}

bool is_half_flag_transitive(const PermGroup& g, const IncidenceStructure& s) {
  return half_flag_report(g, s).half_flag;
}

DualHalfFlagReport dual_half_flag_report(const PermGroup& g,
                                         const IncidenceStructure& s) {
  DualHalfFlagReport rep;
  rep.point_transitive = g.is_transitive();
  const BlockTable t = build_table(g, s);
  rep.block_transitive = distinct_block_orbits(t).size() == 1;
  if (!rep.point_transitive || !rep.block_transitive)
    return rep;
  for (std::size_t m : t.mult)
    if (m != 1)
      throw std::runtime_error("dual_half_flag_report: repeated blocks not supported");

  // Blocks through point 1, as distinct-block ids.
  std::vector<std::uint32_t> pencil;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.keys[i][0] & 1u)  // bit of point 1
      pencil.push_back(static_cast<std::uint32_t>(i));

  const PermGroup stab = g.point_stabilizer(1);
  std::vector<std::vector<std::uint32_t>> stab_maps;
  {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < t.size(); ++i)
      index[t.keys[i]] = i;
    std::string img(t.keys.front().size(), char(0));
    for (const auto& gen : stab.generators()) {
      std::vector<std::uint32_t> m(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) {
        apply_to_key(gen, t.keys[i], img);
        m[i] = static_cast<std::uint32_t>(index.at(img));
      }
      stab_maps.push_back(std::move(m));
    }
  }

  std::vector<char> seen(t.size(), 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t root : pencil) {
    if (seen[root])
      continue;
    seen[root] = 1;
    queue.assign(1, root);
    std::size_t count = 0;
    while (!queue.empty()) {
      const std::uint32_t x = queue.back();
      queue.pop_back();
      ++count;
      for (const auto& m : stab_maps)
        if (!seen[m[x]]) {
          seen[m[x]] = 1;
          queue.push_back(m[x]);
        }
    }
    rep.orbits_on_pencil.push_back(count);
  }
  std::sort(rep.orbits_on_pencil.begin(), rep.orbits_on_pencil.end());
  const std::size_t r = pencil.size();
  rep.dual_half_flag = r % 2 == 0 && rep.orbits_on_pencil.size() == 2 &&
                       rep.orbits_on_pencil[0] == r / 2 &&
                       rep.orbits_on_pencil[1] == r / 2;
  return rep;
}

IncidenceStructure read_design(std::istream& in) {
  IncidenceStructure s;
  std::string line;
  bool have_v = false;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw))
      continue;
    if (kw == "v") {
      if (have_v)
        throw ParseError("line " + std::to_string(lineno) + ": duplicate v");
      if (!(ls >> s.v) || s.v == 0)
        throw ParseError("line " + std::to_string(lineno) + ": bad v");
      have_v = true;
    } else if (kw == "block") {
      if (!have_v)
        throw ParseError("line " + std::to_string(lineno) + ": block before v");
      std::vector<Point> pts;
      std::uint64_t p;
      while (ls >> p) {
        if (p == 0 || p > s.v)
          throw ParseError("line " + std::to_string(lineno) +
                           ": point out of range");
        pts.push_back(static_cast<Point>(p));
      }
      if (!ls.eof())
        throw ParseError("line " + std::to_string(lineno) + ": bad point");
      s.blocks.emplace_back(s.v, pts);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" +
                       kw + "'");
    }
  }
  if (!have_v)
    throw ParseError("design text without a v line");
  return s;
}

IncidenceStructure read_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot open " + path);
  return read_design(in);
}

void write_design(std::ostream& out, const IncidenceStructure& s) {
  out << "v " << s.v << "\n";
  for (const auto& blk : s.blocks) {
    out << "block";
    for (Point p : blk.members())
      out << ' ' << p;
    out << "\n";
  }
}

}  // namespace hfd
