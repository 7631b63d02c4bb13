#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hfd {

// Points are 1-based everywhere; 0 is never a valid point.
using Point = std::uint32_t;

// A bijection on {1..n}. Immutable after construction.
//
// Composition convention is left-to-right throughout the library:
// compose(a, b) maps x to b(a(x)).
class Permutation {
public:
  // Identity of the given degree.
  explicit Permutation(std::size_t degree);

  // images[i] is the image of point i+1. Throws std::invalid_argument
  // unless images is a bijection on {1..degree}.
  explicit Permutation(std::vector<Point> images);

  std::size_t degree() const { return images_.size(); }

  Point image(Point p) const { return images_[p - 1]; }
  Point preimage(Point p) const;

  bool is_identity() const;

  // Smallest p with image(p) != p, or 0 for the identity.
  Point smallest_moved() const;

  std::size_t support_size() const;

  Permutation inverse() const;

  // Multiplicative order (lcm of cycle lengths). Throws std::overflow_error
  // if the value does not fit in 64 bits.
  std::uint64_t order() const;

  // Nontrivial cycles, each rotated to start at its smallest point,
  // sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  const std::vector<Point>& images() const { return images_; }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

  // Order by image vectors; gives permutation containers a stable order.
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.images_ < b.images_;
  }

  std::size_t hash() const;

private:
  std::vector<Point> images_;
};

// x -> b(a(x)). Degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

// b(a(x)) conjugation helper: g^h = h^-1 g h under left-to-right
// composition, i.e. the permutation mapping x·h to (x·g)·h.
Permutation conjugate(const Permutation& g, const Permutation& h);

// Parses disjoint-cycle notation over {1..degree}. Points inside a cycle
// may be separated by commas, whitespace, or both; "()" is the identity.
// Throws ParseError on malformed syntax, out-of-range points, or a point
// repeated across cycles.
Permutation parse_permutation(std::string_view text, std::size_t degree);

// Cycle notation with comma separators; "()" for the identity.
std::string format_cycles(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace hfd
