// Incidence structures on points 1..v, their parameter classification, and
// flag-orbit analysis under a permutation group.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfd/perm_group.hpp"
#include "hfd/point_set.hpp"

namespace hfd {

// Blocks form a multiset; repeated blocks are legitimate.
struct IncidenceStructure {
  std::size_t v = 0;
  std::vector<PointSet> blocks;
};

struct DesignParams {
  std::size_t v = 0, b = 0, r = 0, k = 0, lambda = 0;

  bool replication_identity() const { return v * r == b * k; }
  bool pair_identity() const { return lambda * (v - 1) == r * (k - 1); }
  bool fisher() const { return b >= v; }
  // Excludes the degenerate shapes (blocks that are near-empty, full or
  // co-singleton) that make every counting statement collapse.
  bool nontrivial() const { return 2 < k && k + 1 < v; }
};

// Counting scan of a block multiset: does it carry uniform block size,
// constant point replication and constant pair coverage? Each `note` names
// the first witness against the property.
struct ParamScan {
  std::size_t v = 0, b = 0;
  bool uniform_k = false;
  std::size_t k = 0;
  std::string k_note;
  bool constant_r = false;
  std::size_t r = 0;
  std::string r_note;
  bool constant_lambda = false;
  std::size_t lambda = 0;
  std::string lambda_note;

  bool two_design() const { return uniform_k && constant_r && constant_lambda; }
  DesignParams params() const;  // requires two_design()
};

// Pair coverage is counted; structures with v > 400 are rejected
// (std::runtime_error) rather than silently skipped.
ParamScan classify_parameters(const IncidenceStructure& s);

// Pairwise-balanced view: blocks of any size (including singletons), every
// point pair covered exactly lambda times, and at each point the identity
// sum over incident blocks (|B| - 1) = lambda (v - 1).
struct PbdProfile {
  bool pair_constant = false;
  std::size_t lambda = 0;
  std::vector<std::size_t> point_degrees;  // blocks through each point
  bool degree_sum_identity = false;
  std::string note;
};

PbdProfile pbd_profile(const IncidenceStructure& s);

// Blocks = union of the set orbits of the given base blocks. Orbits are
// concatenated as multisets: a block reached from two different bases is
// kept twice.
IncidenceStructure from_base_blocks(const PermGroup& g,
                                    const std::vector<PointSet>& bases,
                                    std::size_t orbit_cap = 2'000'000);

// Orbit lengths of g on the distinct blocks. Throws ConsistencyError when a
// generator fails to preserve the block multiset.
std::vector<std::size_t> block_orbit_sizes(const PermGroup& g,
                                           const IncidenceStructure& s);

bool is_block_transitive(const PermGroup& g, const IncidenceStructure& s);

// Orbits on incident (point, block) pairs. Requires a repetition-free block
// list (flag orbits on multisets are not supported).
struct FlagOrbits {
  std::size_t flag_count = 0;
  std::vector<std::size_t> sizes;  // discovery order
  std::vector<std::pair<std::size_t, Point>> reps;  // (block index, point)

  std::size_t orbit_count() const { return sizes.size(); }
  std::size_t orbit_of(std::size_t block_index, Point p) const;

  // Sub-structure induced by one flag orbit: every block keeps exactly the
  // points whose flag lies in the orbit; blocks left empty are dropped.
  IncidenceStructure constituent(const IncidenceStructure& s,
                                 std::size_t orbit) const;

 private:
  friend FlagOrbits flag_orbits(const PermGroup&, const IncidenceStructure&);
  std::size_t v_ = 0;
  std::vector<std::uint8_t> id_;  // b*v, 0xFF = not incident
};

FlagOrbits flag_orbits(const PermGroup& g, const IncidenceStructure& s);

bool is_flag_transitive(const PermGroup& g, const IncidenceStructure& s);

// Block-transitive, and the stabilizer of a block splits it into exactly
// two point orbits of length k/2.
struct HalfFlagReport {
  bool block_transitive = false;
  std::uint64_t block_stabilizer_order = 0;
  std::vector<std::size_t> orbits_on_block;  // ascending
  bool half_flag = false;
};

HalfFlagReport half_flag_report(const PermGroup& g,
                                const IncidenceStructure& s);

bool is_half_flag_transitive(const PermGroup& g, const IncidenceStructure& s);

// Dual view: point- and block-transitive, and the stabilizer of a point
// splits the blocks through it into exactly two orbits of length r/2.
struct DualHalfFlagReport {
  bool point_transitive = false;
  bool block_transitive = false;
  std::vector<std::size_t> orbits_on_pencil;  // ascending
  bool dual_half_flag = false;
};

DualHalfFlagReport dual_half_flag_report(const PermGroup& g,
                                         const IncidenceStructure& s);

// Text form: `v <n>` header, then one `block p1 p2 ...` line per block.
IncidenceStructure read_design(std::istream& in);
IncidenceStructure read_design_file(const std::string& path);
void write_design(std::ostream& out, const IncidenceStructure& s);

}  // namespace hfd
