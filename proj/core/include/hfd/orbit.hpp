#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfd/perm.hpp"
#include "hfd/point_set.hpp"

namespace hfd {

// Breadth-first orbit of a point with a Schreier vector: for every orbit
// point we remember which generator discovered it and from where, so a
// transversal element can be rebuilt on demand without storing one
// permutation per point.
class PointOrbit {
public:
  PointOrbit() = default;

  // gens must be nonempty and of uniform degree; root must be in range.
  PointOrbit(const std::vector<Permutation>& gens, Point root);

  std::size_t size() const { return points_.size(); }
  Point root() const { return points_.empty() ? 0 : points_[0]; }

  // Orbit points in BFS discovery order.
  const std::vector<Point>& points() const { return points_; }

  bool contains(Point p) const { return parent_[p - 1] != 0; }

  // An element of <gens> carrying root to p. Precondition: contains(p).
  Permutation representative(
      Point p, const std::vector<Permutation>& gens) const;

  // Generator indices along the path root -> p, in application order.
  std::vector<std::uint32_t> word(Point p) const;

private:
  std::vector<Point> points_;
  std::vector<Point> parent_;        // 0 = not in orbit; root's parent is itself
  std::vector<std::uint32_t> gen_;   // generator index that discovered the point
  std::size_t degree_ = 0;
};

enum class OrbitStatus { complete, cap_exceeded };

struct SetOrbitResult {
  OrbitStatus status = OrbitStatus::complete;
  // Exact orbit size when complete; number of subsets seen before the cap
  // was hit otherwise.
  std::uint64_t size = 0;
  // Filled only when requested; BFS discovery order, first entry the seed.
  std::vector<PointSet> elements;
};

struct SetOrbitOptions {
  std::uint64_t cap = 2'000'000;
  bool want_elements = false;
};

// BFS closure of a subset under gens with canonical-key deduplication.
SetOrbitResult set_orbit(const std::vector<Permutation>& gens,
                         const PointSet& seed,
                         const SetOrbitOptions& options = {});

// Set orbit retaining Schreier structure, for stabilizer construction.
// States are canonical keys; parents index the discovery list.
class SetOrbitTable {
public:
  SetOrbitTable(const std::vector<Permutation>& gens, const PointSet& seed,
                std::uint64_t cap);

  OrbitStatus status() const { return status_; }
  std::uint64_t size() const { return keys_.size(); }
  const std::vector<std::string>& keys() const { return keys_; }

  // An element of <gens> carrying the seed to state index i.
  Permutation representative(std::size_t i,
                             const std::vector<Permutation>& gens) const;

  // Index of key, or -1.
  std::int64_t index_of(const std::string& key) const;

private:
  std::vector<std::string> keys_;
  std::vector<std::int64_t> parent_;
  std::vector<std::uint32_t> gen_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t degree_ = 0;
  OrbitStatus status_ = OrbitStatus::complete;
};

}  // namespace hfd
