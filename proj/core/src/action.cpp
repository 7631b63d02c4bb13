#include "hfd/action.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace hfd {
namespace {

struct Dsu {
  std::vector<Point> parent;
  explicit Dsu(std::size_t n) : parent(n + 1) {
    std::iota(parent.begin(), parent.end(), Point{0});
  }
  Point find(Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

}  // namespace

OrbitPartition orbit_partition(const PermGroup& g) {
  OrbitPartition part;
  part.orbits = g.orbits();
  for (const auto& o : part.orbits)
    part.signature.push_back(o.size());
  std::sort(part.signature.begin(), part.signature.end());
  return part;
}

std::vector<std::size_t> subdegrees(const PermGroup& g) {
  if (g.degree() == 0 || !g.is_transitive())
    throw std::invalid_argument("subdegrees: group is not transitive");
  const PermGroup stab = g.point_stabilizer(1);
  std::vector<std::size_t> sizes;
  for (const auto& o : stab.orbits())
    sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::size_t rank(const PermGroup& g) { return subdegrees(g).size(); }

bool BlockSystem::trivial() const {
  return blocks.size() <= 1 || blocks.front().size() <= 1;
}

BlockSystem minimal_block_system(const PermGroup& g, Point a, Point b) {
  const std::size_t n = g.degree();
  if (a == b || a == 0 || b == 0 || a > n || b > n)
    throw std::invalid_argument("minimal_block_system: bad seed pair");

  Dsu dsu(n);
  std::vector<std::pair<Point, Point>> queue;
  dsu.parent[dsu.find(b)] = dsu.find(a);
  queue.emplace_back(a, b);

  while (!queue.empty()) {
    const auto [x, y] = queue.back();
    queue.pop_back();
    for (const auto& gen : g.generators()) {
      const Point rx = dsu.find(gen.image(x));
      const Point ry = dsu.find(gen.image(y));
      if (rx != ry) {
        dsu.parent[ry] = rx;
        queue.emplace_back(rx, ry);
      }
    }
  }

  std::vector<std::vector<Point>> classes(n + 1);
  for (Point p = 1; p <= n; ++p)
    classes[dsu.find(p)].push_back(p);
  BlockSystem sys;
  for (Point p = 1; p <= n; ++p)
    if (!classes[p].empty())
      sys.blocks.emplace_back(n, classes[p]);
  return sys;
}

std::optional<BlockSystem> imprimitivity_witness(const PermGroup& g) {
  if (!g.is_transitive())
    throw std::invalid_argument("imprimitivity_witness: group is not transitive");
  const std::size_t n = g.degree();
  for (Point b = 2; b <= n; ++b) {
    BlockSystem sys = minimal_block_system(g, 1, b);
    if (sys.blocks.size() > 1)
      return sys;
  }
  return std::nullopt;
}

bool is_primitive(const PermGroup& g) {
  if (g.degree() == 1)
    return true;
  return !imprimitivity_witness(g).has_value();
}

bool is_2_transitive(const PermGroup& g) {
  if (!g.is_transitive())
    return false;
  const auto sd = subdegrees(g);
  return sd.size() <= 2;  // degree 1 gives {1}
}

std::vector<std::pair<std::size_t, std::size_t>> equal_orbit_pairs(
    const OrbitPartition& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < p.orbits.size(); ++i)
    for (std::size_t j = i + 1; j < p.orbits.size(); ++j)
      if (p.orbits[i].size() == p.orbits[j].size())
        out.emplace_back(i, j);
  return out;
}

}  // namespace hfd
