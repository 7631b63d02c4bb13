#include "hfd/perm_group.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "hfd/errors.hpp"

namespace hfd {

RandomElementStream::RandomElementStream(std::vector<Permutation> gens,
                                         std::uint64_t seed)
    : accumulator_(gens.empty() ? 1 : gens[0].degree()),
      state_(seed ^ 0x9e3779b97f4a7c15ull) {
  if (gens.empty())
    throw std::invalid_argument("random stream: no generators");
  slots_ = gens;
  // Pad the slot list so short generator lists still mix well.
  while (slots_.size() < 10)
    slots_.push_back(gens[slots_.size() % gens.size()]);
  for (int burn = 0; burn < 60; ++burn)
    next();
}

std::uint64_t RandomElementStream::next_word() {
  // splitmix64; fixed algorithm keeps streams platform-independent.
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Permutation RandomElementStream::next() {
  const std::size_t n = slots_.size();
  const std::size_t i = next_word() % n;
  std::size_t j = next_word() % (n - 1);
  if (j >= i)
    ++j;
  const bool invert = (next_word() & 1) != 0;
  const Permutation& rhs = slots_[j];
  slots_[i] = compose(slots_[i], invert ? rhs.inverse() : rhs);
  accumulator_ = compose(accumulator_, slots_[i]);
  return accumulator_;
}

struct PermGroup::Impl {
  std::vector<Permutation> gens;
  std::optional<std::string> label;
  std::optional<std::uint64_t> declared_order;
  std::size_t degree = 0;

  mutable std::once_flag chain_once;
  mutable std::optional<StabChain> chain;

  const StabChain& get_chain() const {
    std::call_once(chain_once, [this] {
      chain.emplace(StabChain::build(gens));
      if (declared_order && chain->order() != *declared_order)
        throw ConsistencyError(
            "declared group order " + std::to_string(*declared_order) +
            " does not match computed order " + std::to_string(chain->order()));
    });
    return *chain;
  }
};

PermGroup::PermGroup(std::vector<Permutation> gens,
                     std::optional<std::string> label,
                     std::optional<std::uint64_t> declared_order)
    : impl_(std::make_shared<Impl>()) {
  if (gens.empty())
    throw std::invalid_argument("group: generator list must be nonempty");
  impl_->degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != impl_->degree)
      throw std::invalid_argument("group: generator degree mismatch");
  for (auto& g : gens)
    if (!g.is_identity())
      impl_->gens.push_back(std::move(g));
  if (impl_->gens.empty())
    impl_->gens.emplace_back(impl_->degree);
  impl_->label = std::move(label);
  impl_->declared_order = declared_order;
}

PermGroup PermGroup::trivial(std::size_t degree) {
  return PermGroup({Permutation(degree)});
}

std::size_t PermGroup::degree() const { return impl_->degree; }

const std::vector<Permutation>& PermGroup::generators() const {
  return impl_->gens;
}

const std::optional<std::string>& PermGroup::label() const {
  return impl_->label;
}

std::optional<std::uint64_t> PermGroup::declared_order() const {
  return impl_->declared_order;
}

const StabChain& PermGroup::chain() const { return impl_->get_chain(); }

StabChain PermGroup::chain_with_base(std::vector<Point> hint) const {
  return StabChain::build(impl_->gens, std::move(hint));
}

std::uint64_t PermGroup::order() const { return chain().order(); }

bool PermGroup::is_trivial() const {
  for (const auto& g : impl_->gens)
    if (!g.is_identity())
      return false;
  return true;
}

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != impl_->degree)
    throw std::invalid_argument("membership test: degree mismatch");
  return chain().contains(x);
}

PointSet PermGroup::orbit(Point p) const {
  PointOrbit orb(impl_->gens, p);
  return PointSet(impl_->degree, orb.points());
}

PointOrbit PermGroup::orbit_with_transversal(Point p) const {
  return PointOrbit(impl_->gens, p);
}

std::vector<PointSet> PermGroup::orbits() const {
  std::vector<bool> seen(impl_->degree, false);
  std::vector<PointSet> out;
  for (Point p = 1; p <= impl_->degree; ++p) {
    if (seen[p - 1])
      continue;
    PointOrbit orb(impl_->gens, p);
    for (Point q : orb.points())
      seen[q - 1] = true;
    out.emplace_back(impl_->degree, orb.points());
  }
  return out;
}

bool PermGroup::is_transitive() const {
  return PointOrbit(impl_->gens, 1).size() == impl_->degree;
}

PermGroup PermGroup::point_stabilizer(Point p) const {
  if (p < 1 || p > impl_->degree)
    throw std::invalid_argument("point stabilizer: point out of range");
  StabChain chain = chain_with_base({p});
  if (chain.base_length() == 0)  // trivial group
    return *this;
  // The hinted point always heads the base.
  std::vector<Permutation> gens = chain.strong_generators(1);
  if (gens.empty())
    return PermGroup::trivial(impl_->degree);
  return PermGroup(std::move(gens));
}

SetOrbitResult PermGroup::set_orbit(const PointSet& b,
                                    const SetOrbitOptions& options) const {
  return hfd::set_orbit(impl_->gens, b, options);
}

PermGroup PermGroup::setwise_stabilizer(const PointSet& b,
                                        std::uint64_t cap) const {
  if (b.degree() != impl_->degree)
    throw std::invalid_argument("setwise stabilizer: degree mismatch");
  SetOrbitTable table(impl_->gens, b, cap);
  if (table.status() == OrbitStatus::cap_exceeded)
    throw std::runtime_error("setwise stabilizer: set orbit exceeds cap");

  const std::uint64_t group_order = order();
  const std::uint64_t target = group_order / table.size();

  StabChain stab(impl_->degree);
  std::vector<Permutation> stab_gens;
  const auto& gens = impl_->gens;
  std::string scratch;
  for (std::size_t si = 0; si < table.size() && stab.order() < target; ++si) {
    const Permutation u_s = table.representative(si, gens);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      apply_to_key(gens[gi], table.keys()[si], scratch);
      const std::int64_t ti = table.index_of(scratch);
      const Permutation u_t = table.representative(
          static_cast<std::size_t>(ti), gens);
      const Permutation schreier =
          compose(compose(u_s, gens[gi]), u_t.inverse());
      if (schreier.is_identity())
        continue;
      if (stab.extend(schreier)) {
        stab_gens.push_back(schreier);
        if (stab.order() >= target)
          break;
      }
    }
  }
  // Orbit-stabilizer certificate: Schreier generators generate the full
  // stabilizer, so the chain order must land exactly on |G| / |orbit|.
  if (stab.order() != target)
    throw std::logic_error("setwise stabilizer: orbit-stabilizer mismatch");
  if (stab_gens.empty())
    return PermGroup::trivial(impl_->degree);
  return PermGroup(std::move(stab_gens));
}

RandomElementStream PermGroup::random_stream(std::uint64_t seed) const {
  return RandomElementStream(impl_->gens, seed);
}

PermGroup PermGroup::with_label(std::string label) const {
  PermGroup out = *this;
  auto impl = std::make_shared<Impl>();
  impl->gens = impl_->gens;
  impl->label = std::move(label);
  impl->declared_order = impl_->declared_order;
  impl->degree = impl_->degree;
  out.impl_ = std::move(impl);
  return out;
}

Permutation random_element(const PermGroup& g, std::uint64_t seed) {
  return g.random_stream(seed).next();
}

}  // namespace hfd
