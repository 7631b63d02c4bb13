#include "hfd/orbit.hpp"

#include <stdexcept>

namespace hfd {

PointOrbit::PointOrbit(const std::vector<Permutation>& gens, Point root) {
  if (gens.empty())
    throw std::invalid_argument("point orbit: no generators");
  degree_ = gens[0].degree();
  if (root < 1 || root > degree_)
    throw std::invalid_argument("point orbit: root out of range");
  parent_.assign(degree_, 0);
  gen_.assign(degree_, 0);
  points_.push_back(root);
  parent_[root - 1] = root;
  for (std::size_t head = 0; head < points_.size(); ++head) {
    const Point p = points_[head];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const Point q = gens[gi].image(p);
      if (parent_[q - 1] == 0) {
        parent_[q - 1] = p;
        gen_[q - 1] = static_cast<std::uint32_t>(gi);
        points_.push_back(q);
      }
    }
  }
}

std::vector<std::uint32_t> PointOrbit::word(Point p) const {
  if (p < 1 || p > degree_ || parent_[p - 1] == 0)
    throw std::invalid_argument("orbit word: point not in orbit");
  std::vector<std::uint32_t> rev;
  Point cur = p;
  while (parent_[cur - 1] != cur) {
    rev.push_back(gen_[cur - 1]);
    cur = parent_[cur - 1];
  }
  return {rev.rbegin(), rev.rend()};
}

Permutation PointOrbit::representative(
    Point p, const std::vector<Permutation>& gens) const {
  Permutation rep(degree_);
  for (std::uint32_t gi : word(p))
    rep = compose(rep, gens[gi]);
  return rep;
}

SetOrbitResult set_orbit(const std::vector<Permutation>& gens,
                         const PointSet& seed, const SetOrbitOptions& options) {
  if (gens.empty())
    throw std::invalid_argument("set orbit: no generators");
  if (gens[0].degree() != seed.degree())
    throw std::invalid_argument("set orbit: degree mismatch");

  SetOrbitResult result;
  std::unordered_map<std::string, bool> seen;
  std::vector<std::string> queue;
  queue.push_back(seed.key());
  seen.emplace(queue.back(), true);
  std::string scratch;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& g : gens) {
      apply_to_key(g, queue[head], scratch);
      if (seen.emplace(scratch, true).second) {
        if (queue.size() >= options.cap) {
          result.status = OrbitStatus::cap_exceeded;
          result.size = queue.size();
          return result;
        }
        queue.push_back(scratch);
      }
    }
  }
  result.size = queue.size();
  if (options.want_elements) {
    result.elements.reserve(queue.size());
    for (const auto& key : queue)
      result.elements.push_back(PointSet::from_key(seed.degree(), key));
  }
  return result;
}

SetOrbitTable::SetOrbitTable(const std::vector<Permutation>& gens,
                             const PointSet& seed, std::uint64_t cap) {
  if (gens.empty())
    throw std::invalid_argument("set orbit: no generators");
  degree_ = gens[0].degree();
  if (degree_ != seed.degree())
    throw std::invalid_argument("set orbit: degree mismatch");

  keys_.push_back(seed.key());
  parent_.push_back(-1);
  gen_.push_back(0);
  index_.emplace(keys_[0], 0);
  std::string scratch;
  for (std::size_t head = 0; head < keys_.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      apply_to_key(gens[gi], keys_[head], scratch);
      auto [it, inserted] = index_.emplace(scratch, keys_.size());
      (void)it;
      if (inserted) {
        if (keys_.size() >= cap) {
          status_ = OrbitStatus::cap_exceeded;
          index_.erase(scratch);
          return;
        }
        keys_.push_back(scratch);
        parent_.push_back(static_cast<std::int64_t>(head));
        gen_.push_back(static_cast<std::uint32_t>(gi));
      }
    }
  }
}

Permutation SetOrbitTable::representative(
    std::size_t i, const std::vector<Permutation>& gens) const {
  std::vector<std::uint32_t> rev;
  std::int64_t cur = static_cast<std::int64_t>(i);
  while (parent_[cur] >= 0) {
    rev.push_back(gen_[cur]);
    cur = parent_[cur];
  }
  Permutation rep(degree_);
  for (auto it = rev.rbegin(); it != rev.rend(); ++it)
    rep = compose(rep, gens[*it]);
  return rep;
}

std::int64_t SetOrbitTable::index_of(const std::string& key) const {
  auto it = index_.find(key);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

}  // namespace hfd
