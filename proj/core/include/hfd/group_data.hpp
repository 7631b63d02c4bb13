// Named example groups, the on-disk fixture catalog, the binary-affine
// biplane construction, and product-action wreath groups.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfd/design.hpp"
#include "hfd/perm_group.hpp"
#include "hfd/point_set.hpp"

namespace hfd {

struct CatalogEntry {
  std::string id;
  std::string dir;  // directory holding group.grp / meta.json / blocks
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::string kind;    // "transitive" or "subgroup"
  std::string source;  // provenance tag, informational
  // kind == "transitive"
  std::uint64_t stab_order = 0;
  std::vector<std::size_t> subdegrees;
  // kind == "subgroup"
  std::string parent;  // id of the entry whose point set it acts on
  std::vector<std::size_t> orbit_signature;
  std::vector<std::string> blocks;  // block file names inside dir
};

// One subdirectory per entry: group.grp, meta.json, optional block-*.set.
// load() parses every meta.json up front (ParseError on a malformed one);
// groups and block sets are read on demand.
class FixtureCatalog {
public:
  static FixtureCatalog load(const std::string& dir);

  const std::string& root() const { return root_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const CatalogEntry* find(const std::string& id) const;

  // The entry's group, with the meta.json order cross-checked against the
  // file's declared order and the built chain. Throws std::invalid_argument
  // for an unknown id, ConsistencyError on any mismatch.
  PermGroup load_group(const std::string& id) const;

  // The entry's block files, in meta.json order.
  std::vector<PointSet> load_blocks(const std::string& id) const;

private:
  std::string root_;
  std::vector<CatalogEntry> entries_;  // sorted by id
};

struct BuiltinExample {
  PermGroup group;
  std::vector<PointSet> base_blocks;
};

// Named example loader. psl29-10 and biplane-16 are self-contained;
// imprimitive-25, hs-176-d1 and hs-176-d2 resolve through the catalog, as
// does any plain catalog id (the mathieu entries). Throws
// std::invalid_argument when the name is unknown or a needed catalog is
// missing.
BuiltinExample builtin_example(const std::string& name,
                               const FixtureCatalog* catalog = nullptr);

struct BiplaneConstruction {
  PermGroup group;           // translations extended by `triple`, order 48
  IncidenceStructure plane;  // the sixteen translates of base_block
  PointSet base_block;       // the block through the zero vector
  Permutation triple;        // order-3 affine map, two 3-orbits on the block
};

// 2-(16,6,2) developed from the difference set {0, e1, e2, e3, e4, e1+..+e4}
// in the rank-4 binary vector group. The vector with coordinates (c1..c4)
// is point 1 + sum ci 2^(i-1). The order-3 affine map is the first hit of a
// row-lexicographic scan, so every call rebuilds the identical group.
BiplaneConstruction build_affine_biplane();

// K wr S2 in product action: (a,b) is point (a-1)*n + b; generators act on
// each coordinate separately, plus the coordinate swap. The declared order
// 2|K|^2 is chain-checked. Throws std::invalid_argument unless m == 2 and
// k is transitive.
PermGroup wreath_product_action(const PermGroup& k, int m = 2);

struct CatalogCheck {
  std::string id;
  bool pass = false;
  std::string detail;  // "ok" or the first failed check
};

// Re-derives every entry's measurements (order, stabilizer order and
// subdegrees, or parent membership and orbit signature, plus block files)
// and compares them to meta.json. One result per entry, never throws.
std::vector<CatalogCheck> catalog_verify(const FixtureCatalog& catalog);

// All 2-transitive groups of the given degree (5, 7, 9 or 11) from embedded
// generators, ascending order. Degree 7 carries one of the two equivalent
// actions of its order-168 member; other degrees throw
// std::invalid_argument.
std::vector<PermGroup> two_transitive_components(std::size_t degree);

}  // namespace hfd
