#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hfd/orbit.hpp"
#include "hfd/perm.hpp"
#include "hfd/point_set.hpp"
#include "hfd/stab_chain.hpp"

namespace hfd {

// Reproducible product-replacement element stream. For a fixed seed and
// generator list the sample sequence is identical across runs and platforms.
class RandomElementStream {
public:
  RandomElementStream(std::vector<Permutation> gens, std::uint64_t seed);
  Permutation next();

private:
  std::vector<Permutation> slots_;
  Permutation accumulator_;
  std::uint64_t state_;

  std::uint64_t next_word();
};

// A finitely generated permutation group. Immutable after construction; the
// stabilizer chain is built once on first demand and shared by copies, so
// values are cheap to pass around and safe to use from multiple threads.
class PermGroup {
public:
  // gens must be nonempty and of uniform degree. Identity generators are
  // dropped; a trivial group keeps a single identity generator.
  explicit PermGroup(std::vector<Permutation> gens,
                     std::optional<std::string> label = std::nullopt,
                     std::optional<std::uint64_t> declared_order = std::nullopt);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const;
  const std::vector<Permutation>& generators() const;
  const std::optional<std::string>& label() const;
  std::optional<std::uint64_t> declared_order() const;

  // Builds the chain if needed. Throws ConsistencyError if a declared order
  // does not match the computed one.
  const StabChain& chain() const;

  // A fresh chain with the given base hint; never cached.
  StabChain chain_with_base(std::vector<Point> hint) const;

  std::uint64_t order() const;
  bool is_trivial() const;
  bool contains(const Permutation& x) const;

  PointSet orbit(Point p) const;
  PointOrbit orbit_with_transversal(Point p) const;

  // All orbits on points, each sorted, ordered by smallest member.
  std::vector<PointSet> orbits() const;
  bool is_transitive() const;

  // Exactly {x in G : x(p) = p}; order(G) = |orbit(p)| * order(result).
  PermGroup point_stabilizer(Point p) const;

  SetOrbitResult set_orbit(const PointSet& b,
                           const SetOrbitOptions& options = {}) const;

  // Exactly {x in G : x(B) = B}. Throws std::runtime_error if the set orbit
  // exceeds the cap. Schreier generators along the set orbit are sifted in
  // deterministic order; construction stops once the orbit-stabilizer
  // product reaches |G|.
  PermGroup setwise_stabilizer(const PointSet& b,
                               std::uint64_t cap = 2'000'000) const;

  RandomElementStream random_stream(std::uint64_t seed) const;

  PermGroup with_label(std::string label) const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

// One draw from random_stream(seed); always a member of g.
Permutation random_element(const PermGroup& g, std::uint64_t seed);

}  // namespace hfd
