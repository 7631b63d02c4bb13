#include "hfd/stab_chain.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace hfd {

StabChain::StabChain(std::size_t degree, std::vector<Point> base_hint)
    : degree_(degree), hint_(std::move(base_hint)) {
  if (degree == 0)
    throw std::invalid_argument("stabilizer chain: degree must be at least 1");
  for (Point p : hint_)
    if (p < 1 || p > degree_)
      throw std::invalid_argument("stabilizer chain: hint point out of range");
}

StabChain StabChain::build(const std::vector<Permutation>& gens,
                           std::vector<Point> base_hint) {
  if (gens.empty())
    throw std::invalid_argument("stabilizer chain: no generators");
  StabChain chain(gens[0].degree(), std::move(base_hint));
  for (const auto& g : gens) {
    if (g.degree() != chain.degree_)
      throw std::invalid_argument("stabilizer chain: generator degree mismatch");
    chain.extend(g);
  }
  return chain;
}

std::size_t StabChain::fixed_prefix(const Permutation& g) const {
  for (std::size_t t = 0; t < base_.size(); ++t)
    if (g.image(base_[t]) != base_[t])
      return t;
  return base_.size();
}

std::vector<Permutation> StabChain::level_gens(std::size_t level) const {
  std::vector<Permutation> out;
  for (const auto& sg : gens_)
    if (sg.level >= level)
      out.push_back(sg.perm);
  return out;
}

void StabChain::recompute_orbit(std::size_t level) {
  orbit_gens_[level] = level_gens(level);
  orbits_[level] = PointOrbit(orbit_gens_[level], base_[level]);
}

std::size_t StabChain::insert_gen(const Permutation& g, std::size_t level) {
  // Open new levels until g moves the deepest base point. Hint points are
  // consumed in order even when g fixes them, so a hinted point always
  // occupies its base position (point_stabilizer relies on this).
  while (level == base_.size()) {
    Point beta = 0;
    for (Point h : hint_) {
      if (std::find(base_.begin(), base_.end(), h) == base_.end()) {
        beta = h;
        break;
      }
    }
    if (beta == 0)
      beta = g.smallest_moved();
    assert(beta != 0);
    base_.push_back(beta);
    orbits_.emplace_back();
    orbit_gens_.emplace_back();
    if (g.image(beta) != beta)
      break;
    ++level;
  }
  gens_.push_back(StrongGen{g, level});
  return level;
}

void StabChain::complete_level(std::size_t level) {
  recompute_orbit(level);
  // Snapshot by value: the scan must range over exactly the generators the
  // orbit was computed from, and deeper recursion may reallocate the level
  // vectors. Deeper insertions never change this level's orbit.
  const std::vector<Permutation> scan_gens = orbit_gens_[level];
  const PointOrbit orbit = orbits_[level];

  for (std::size_t pi = 0; pi < orbit.size(); ++pi) {
    const Point p = orbit.points()[pi];
    const Permutation u_p = orbit.representative(p, scan_gens);
    for (const auto& g : scan_gens) {
      const Point q = g.image(p);
      const Permutation u_q = orbit.representative(q, scan_gens);
      const Permutation schreier =
          compose(compose(u_p, g), u_q.inverse());
      if (schreier.is_identity())
        continue;
      const Permutation residue = sift(schreier, level + 1);
      if (residue.is_identity())
        continue;
      const std::size_t drop =
          insert_gen(residue, fixed_prefix(residue));
      assert(drop > level);
      for (std::size_t t = drop; t > level; --t)
        complete_level(t);
    }
  }
}

bool StabChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw std::invalid_argument("stabilizer chain: degree mismatch");
  const Permutation residue = sift(g, 0);
  if (residue.is_identity())
    return false;
  const std::size_t drop = insert_gen(residue, fixed_prefix(residue));
  for (std::size_t t = drop + 1; t-- > 0;)
    complete_level(t);
  return true;
}

Permutation StabChain::sift(const Permutation& x, std::size_t level) const {
  Permutation cur = x;
  for (std::size_t m = level; m < base_.size(); ++m) {
    const Point p = cur.image(base_[m]);
    if (p == base_[m])
      continue;
    if (!orbits_[m].contains(p))
      return cur;
    const Permutation u = orbits_[m].representative(p, orbit_gens_[m]);
    cur = compose(cur, u.inverse());
  }
  return cur;
}

bool StabChain::contains(const Permutation& x) const {
  if (x.degree() != degree_)
    throw std::invalid_argument("membership test: degree mismatch");
  return sift(x, 0).is_identity();
}

std::uint64_t StabChain::order() const {
  std::uint64_t result = 1;
  for (const auto& orbit : orbits_) {
    const std::uint64_t n = orbit.size();
    if (n != 0 && result > UINT64_MAX / n)
      throw std::overflow_error("group order exceeds 64 bits");
    result *= n;
  }
  return result;
}

std::size_t StabChain::orbit_size(std::size_t level) const {
  return orbits_.at(level).size();
}

const std::vector<Point>& StabChain::fundamental_orbit(std::size_t level) const {
  return orbits_.at(level).points();
}

Permutation StabChain::transversal_element(std::size_t level, Point p) const {
  return orbits_.at(level).representative(p, orbit_gens_.at(level));
}

std::vector<Permutation> StabChain::strong_generators(std::size_t level) const {
  return level_gens(level);
}

std::vector<std::uint64_t> StabChain::orbit_sizes() const {
  std::vector<std::uint64_t> out;
  out.reserve(orbits_.size());
  for (const auto& orbit : orbits_)
    out.push_back(orbit.size());
  return out;
}

}  // namespace hfd
