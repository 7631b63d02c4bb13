// Orbit and block-structure analysis for a group action on 1..n.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hfd/perm_group.hpp"
#include "hfd/point_set.hpp"

namespace hfd {

struct OrbitPartition {
  std::vector<PointSet> orbits;        // sorted by smallest member
  std::vector<std::size_t> signature;  // orbit sizes, ascending
};

OrbitPartition orbit_partition(const PermGroup& g);

// Orbit lengths of the stabilizer of the smallest point, ascending; the
// fixed point itself contributes the leading 1. The number of entries is
// the rank of the action. Throws std::invalid_argument when g is not
// transitive (or has degree 0).
std::vector<std::size_t> subdegrees(const PermGroup& g);

std::size_t rank(const PermGroup& g);

// A partition of 1..n into blocks permuted by the group.
struct BlockSystem {
  std::vector<PointSet> blocks;  // sorted by smallest member
  bool trivial() const;          // one block, or all blocks singletons
};

// The finest G-invariant partition in which a and b share a block
// (Atkinson's union-find refinement). Precondition: g transitive and a != b.
BlockSystem minimal_block_system(const PermGroup& g, Point a, Point b);

// Transitive with only trivial block systems. A degree-1 action counts as
// primitive. Throws std::invalid_argument on an intransitive group.
bool is_primitive(const PermGroup& g);

// When g is imprimitive, some minimal system with a != b is proper; returns
// the first such (scanning b upward from the smallest point a). Primitive
// groups yield an empty optional.
std::optional<BlockSystem> imprimitivity_witness(const PermGroup& g);

bool is_2_transitive(const PermGroup& g);

// Unordered pairs of distinct equal-size orbits, as indices into p.orbits;
// the candidate halves of a block whose stabilizer splits it evenly.
std::vector<std::pair<std::size_t, std::size_t>> equal_orbit_pairs(
    const OrbitPartition& p);

}  // namespace hfd
