#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hfd/perm.hpp"

namespace hfd {

// A subset of {1..degree}. Members are kept sorted; the canonical key is a
// fixed-width little-endian bit vector of ceil(degree/8) bytes, so equal
// sets of equal degree always produce byte-identical keys.
class PointSet {
public:
  explicit PointSet(std::size_t degree);

  // Duplicates are merged; out-of-range points throw std::invalid_argument.
  PointSet(std::size_t degree, std::vector<Point> members);

  // Rebuilds a set from a canonical key of matching width.
  static PointSet from_key(std::size_t degree, const std::string& key);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(Point p) const;

  // Sorted ascending.
  const std::vector<Point>& members() const { return members_; }

  // ceil(degree/8) bytes, bit (p-1) set iff p is a member; bit i of byte j
  // covers point 8j + i + 1.
  std::string key() const;

  // Image set under p; degrees must match.
  PointSet apply(const Permutation& p) const;

  PointSet complement() const;
  PointSet set_union(const PointSet& other) const;
  PointSet set_intersection(const PointSet& other) const;
  std::size_t intersection_size(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.degree_ == b.degree_ && a.members_ == b.members_;
  }
  friend bool operator!=(const PointSet& a, const PointSet& b) {
    return !(a == b);
  }
  friend bool operator<(const PointSet& a, const PointSet& b) {
    return a.members_ < b.members_;
  }

private:
  std::size_t degree_;
  std::vector<Point> members_;
};

// Applies p to a canonical key in place of materializing PointSets; used by
// set-orbit closures. Both buffers must hold ceil(degree/8) bytes.
void apply_to_key(const Permutation& p, const std::string& in, std::string& out);

}  // namespace hfd
