#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hfd/orbit.hpp"
#include "hfd/perm.hpp"

namespace hfd {

// Deterministic Schreier-Sims stabilizer chain.
//
// Level i stores a base point beta_i, the fundamental orbit of beta_i under
// the strong generators fixing beta_0..beta_{i-1}, and a Schreier vector for
// transversal reconstruction. The product of fundamental orbit sizes is the
// group order; every strong generator sifts to the identity.
//
// Base selection is reproducible: points from the hint are consumed in order
// (skipping those the incoming residue fixes), then the smallest moved point
// of the residue. Rebuilding from the same generators and hint yields an
// identical base and orbit-size factorization.
class StabChain {
public:
  // Empty chain of the trivial group.
  explicit StabChain(std::size_t degree, std::vector<Point> base_hint = {});

  static StabChain build(const std::vector<Permutation>& gens,
                         std::vector<Point> base_hint = {});

  std::size_t degree() const { return degree_; }

  // Adds a generator, restoring all invariants. Returns true if the group
  // grew. The public entry point for incremental construction.
  bool extend(const Permutation& g);

  // Product of fundamental orbit sizes; throws std::overflow_error beyond
  // 64 bits.
  std::uint64_t order() const;

  bool contains(const Permutation& x) const;

  // Residue of x after stripping through levels from `level` on. Identity
  // iff x is in the group generated by strong generators at that level.
  Permutation sift(const Permutation& x, std::size_t level = 0) const;

  std::size_t base_length() const { return base_.size(); }
  const std::vector<Point>& base() const { return base_; }

  std::size_t orbit_size(std::size_t level) const;
  const std::vector<Point>& fundamental_orbit(std::size_t level) const;

  // Element carrying base_[level] to p; p must lie in that orbit.
  Permutation transversal_element(std::size_t level, Point p) const;

  // Strong generators fixing beta_0..beta_{level-1}; level 0 gives a strong
  // generating set for the whole group. Identity-free; empty for the trivial
  // group (or beyond the base).
  std::vector<Permutation> strong_generators(std::size_t level) const;

  std::vector<std::uint64_t> orbit_sizes() const;

private:
  struct StrongGen {
    Permutation perm;
    std::size_t level;  // number of leading base points it fixes
  };

  // Fixes `level` and everything below, assuming deeper additions are the
  // only outstanding violations. Scans all Schreier generators.
  void complete_level(std::size_t level);

  void recompute_orbit(std::size_t level);
  std::vector<Permutation> level_gens(std::size_t level) const;
  std::size_t fixed_prefix(const Permutation& g) const;

  // Registers g as a strong generator, opening base levels as needed.
  // Returns the level g finally lives at (= its fixed base prefix).
  std::size_t insert_gen(const Permutation& g, std::size_t level);

  std::size_t degree_;
  std::vector<Point> hint_;
  std::vector<Point> base_;
  std::vector<StrongGen> gens_;
  std::vector<PointOrbit> orbits_;
  // Per level, the generator list the orbit was computed from; representative
  // reconstruction needs exactly that list.
  std::vector<std::vector<Permutation>> orbit_gens_;
};

}  // namespace hfd
