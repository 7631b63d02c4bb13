#include "hfd/point_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hfd {

PointSet::PointSet(std::size_t degree) : degree_(degree) {
  if (degree == 0)
    throw std::invalid_argument("point set degree must be at least 1");
}

PointSet::PointSet(std::size_t degree, std::vector<Point> members)
    : degree_(degree), members_(std::move(members)) {
  if (degree == 0)
    throw std::invalid_argument("point set degree must be at least 1");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Point p : members_)
    if (p < 1 || p > degree_)
      throw std::invalid_argument("point set member out of range");
}

PointSet PointSet::from_key(std::size_t degree, const std::string& key) {
  if (key.size() != (degree + 7) / 8)
    throw std::invalid_argument("point set key has wrong width");
  std::vector<Point> members;
  for (std::size_t j = 0; j < key.size(); ++j) {
    const unsigned byte = static_cast<unsigned char>(key[j]);
    for (unsigned i = 0; i < 8; ++i)
      if (byte & (1u << i))
        members.push_back(static_cast<Point>(8 * j + i + 1));
  }
  return PointSet(degree, std::move(members));
}

bool PointSet::contains(Point p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

std::string PointSet::key() const {
  std::string bits((degree_ + 7) / 8, '\0');
  for (Point p : members_)
    bits[(p - 1) / 8] |= static_cast<char>(1u << ((p - 1) % 8));
  return bits;
}

PointSet PointSet::apply(const Permutation& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("point set apply: degree mismatch");
  std::vector<Point> out;
  out.reserve(members_.size());
  for (Point q : members_)
    out.push_back(p.image(q));
  return PointSet(degree_, std::move(out));
}

PointSet PointSet::complement() const {
  std::vector<Point> out;
  out.reserve(degree_ - members_.size());
  std::size_t idx = 0;
  for (Point p = 1; p <= degree_; ++p) {
    if (idx < members_.size() && members_[idx] == p)
      ++idx;
    else
      out.push_back(p);
  }
  return PointSet(degree_, std::move(out));
}

PointSet PointSet::set_union(const PointSet& other) const {
  if (other.degree_ != degree_)
    throw std::invalid_argument("point set union: degree mismatch");
  std::vector<Point> out;
  out.reserve(members_.size() + other.members_.size());
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out));
  return PointSet(degree_, std::move(out));
}

PointSet PointSet::set_intersection(const PointSet& other) const {
  if (other.degree_ != degree_)
    throw std::invalid_argument("point set intersection: degree mismatch");
  std::vector<Point> out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out));
  return PointSet(degree_, std::move(out));
}

std::size_t PointSet::intersection_size(const PointSet& other) const {
  std::size_t count = 0;
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a < *b)
      ++a;
    else if (*b < *a)
      ++b;
    else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

void apply_to_key(const Permutation& p, const std::string& in, std::string& out) {
  out.assign(in.size(), '\0');
  for (std::size_t j = 0; j < in.size(); ++j) {
    unsigned byte = static_cast<unsigned char>(in[j]);
    while (byte) {
      const unsigned i = static_cast<unsigned>(__builtin_ctz(byte));
      byte &= byte - 1;
      const Point q = p.image(static_cast<Point>(8 * j + i + 1));
      out[(q - 1) / 8] |= static_cast<char>(1u << ((q - 1) % 8));
    }
  }
}

}  // namespace hfd
