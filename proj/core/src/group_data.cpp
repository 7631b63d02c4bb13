#include "hfd/group_data.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <utility>

#include "hfd/action.hpp"
#include "hfd/errors.hpp"
#include "hfd/group_io.hpp"

namespace hfd {

namespace fs = std::filesystem;

namespace {

std::vector<std::size_t> size_list(const nlohmann::json& a) {
  std::vector<std::size_t> out;
  for (const auto& x : a)
    out.push_back(x.get<std::size_t>());
  return out;
}

CatalogEntry parse_meta(const fs::path& dir) {
  const fs::path path = dir / "meta.json";
  std::ifstream in(path);
  nlohmann::json m;
  try {
    m = nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  CatalogEntry e;
  e.dir = dir.string();
  try {
    e.id = m.at("id").get<std::string>();
    e.degree = m.at("degree").get<std::size_t>();
    e.order = m.at("order").get<std::uint64_t>();
    e.kind = m.value("kind", std::string());
    e.source = m.value("source", std::string());
    e.stab_order = m.value("stab_order", std::uint64_t{0});
    if (m.contains("subdegrees"))
      e.subdegrees = size_list(m["subdegrees"]);
    e.parent = m.value("parent", std::string());
    if (m.contains("orbit_signature"))
      e.orbit_signature = size_list(m["orbit_signature"]);
    if (m.contains("blocks"))
      for (const auto& name : m["blocks"])
        e.blocks.push_back(name.get<std::string>());
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(path.string() + ": " + ex.what());
  }
  return e;
}

}  // namespace

FixtureCatalog FixtureCatalog::load(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::invalid_argument("fixture catalog: not a directory: " + dir);
  FixtureCatalog cat;
  cat.root_ = dir;
  for (const auto& ent : fs::directory_iterator(dir)) {
    if (!ent.is_directory() || !fs::exists(ent.path() / "meta.json"))
      continue;
    cat.entries_.push_back(parse_meta(ent.path()));
  }
  std::sort(cat.entries_.begin(), cat.entries_.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) {
              return a.id < b.id;
            });
  for (std::size_t i = 1; i < cat.entries_.size(); ++i)
    if (cat.entries_[i].id == cat.entries_[i - 1].id)
      throw ConsistencyError("fixture catalog: duplicate id " +
                             cat.entries_[i].id);
  return cat;
}

const CatalogEntry* FixtureCatalog::find(const std::string& id) const {
  const auto it = std::lower_bound(
      entries_.begin(), entries_.end(), id,
      [](const CatalogEntry& e, const std::string& key) { return e.id < key; });
  return (it != entries_.end() && it->id == id) ? &*it : nullptr;
}

PermGroup FixtureCatalog::load_group(const std::string& id) const {
  const CatalogEntry* e = find(id);
  if (!e)
    throw std::invalid_argument("fixture catalog: unknown id " + id);
  PermGroup g = read_group_file((fs::path(e->dir) / "group.grp").string());
  if (g.degree() != e->degree)
    throw ConsistencyError(id + ": degree " + std::to_string(g.degree()) +
                           " does not match meta.json");
  if (g.order() != e->order)
    throw ConsistencyError(id + ": order " + std::to_string(g.order()) +
                           " does not match meta.json");
  return g;
}

std::vector<PointSet> FixtureCatalog::load_blocks(const std::string& id) const {
  const CatalogEntry* e = find(id);
  if (!e)
    throw std::invalid_argument("fixture catalog: unknown id " + id);
  std::vector<PointSet> out;
  out.reserve(e->blocks.size());
  for (const auto& name : e->blocks) {
    PointSet s = read_set_file((fs::path(e->dir) / name).string());
    if (s.degree() != e->degree)
      throw ConsistencyError(id + "/" + name + ": degree mismatch");
    out.push_back(std::move(s));
  }
  return out;
}

namespace {

PermGroup from_cycles(std::size_t degree,
                      std::initializer_list<const char*> cycles,
                      const char* label, std::uint64_t order) {
  std::vector<Permutation> gens;
  gens.reserve(cycles.size());
  for (const char* text : cycles)
    gens.push_back(parse_permutation(text, degree));
  return PermGroup(std::move(gens), label, order);
}

const FixtureCatalog& need_catalog(const FixtureCatalog* catalog,
                                   const std::string& name) {
  if (!catalog)
    throw std::invalid_argument("builtin_example: " + name +
                                " needs a fixture catalog");
  return *catalog;
}

// Block file of the hs-176 entry by name; the entry ships two of them.
PointSet hs_block(const FixtureCatalog& cat, const std::string& file) {
  const CatalogEntry* e = cat.find("hs-176");
  if (!e)
    throw std::invalid_argument("builtin_example: catalog lacks hs-176");
  const auto blocks = cat.load_blocks("hs-176");
  for (std::size_t i = 0; i < e->blocks.size(); ++i)
    if (e->blocks[i] == file)
      return blocks[i];
  throw ConsistencyError("hs-176 entry lacks " + file);
}

}  // namespace

BuiltinExample builtin_example(const std::string& name,
                               const FixtureCatalog* catalog) {
  if (name == "psl29-10") {
    PermGroup g = from_cycles(
        10, {"(3,9,7,8)(4,10,5,6)", "(1,8,2)(3,4,5)(6,10,7)"}, "psl29-10",
        360);
    return {std::move(g),
            {PointSet(10, {1, 2, 4, 5}), PointSet(10, {1, 2, 3, 7})}};
  }
  if (name == "biplane-16") {
    BiplaneConstruction b = build_affine_biplane();
    return {std::move(b.group), {std::move(b.base_block)}};
  }
  if (name == "imprimitive-25") {
    const FixtureCatalog& cat = need_catalog(catalog, name);
    return {cat.load_group("imprimitive-25"), cat.load_blocks("imprimitive-25")};
  }
  if (name == "hs-176-d1") {
    const FixtureCatalog& cat = need_catalog(catalog, name);
    return {cat.load_group("hs-176"), {hs_block(cat, "block-d1.set")}};
  }
  if (name == "hs-176-d2") {
    const FixtureCatalog& cat = need_catalog(catalog, name);
    return {cat.load_group("hs-176"), {hs_block(cat, "block-d2.set")}};
  }
  if (catalog && catalog->find(name))
    return {catalog->load_group(name), catalog->load_blocks(name)};
  throw std::invalid_argument("builtin_example: unknown name " + name);
}

BiplaneConstruction build_affine_biplane() {
  constexpr unsigned kDim = 4;
  constexpr unsigned kPoints = 16;
  const std::array<unsigned, 6> base = {0, 1, 2, 4, 8, 15};

  auto in_base = [&](unsigned v) {
    return std::find(base.begin(), base.end(), v) != base.end();
  };

  // Images of x -> Lx + t with L given as four row masks.
  auto affine_images = [&](const std::array<unsigned, kDim>& rows, unsigned t) {
    std::vector<Point> img(kPoints);
    for (unsigned v = 0; v < kPoints; ++v) {
      unsigned w = t;
      for (unsigned i = 0; i < kDim; ++i)
        w ^= (std::popcount(rows[i] & v) & 1u) << i;
      img[v] = Point(w + 1);
    }
    return img;
  };

  // Row-lexicographic scan of GL(4,2) for an order-3 affine map that
  // permutes the base block without fixing any of its points.
  std::vector<Point> triple_img;
  for (unsigned r1 = 1; r1 < kPoints && triple_img.empty(); ++r1)
    for (unsigned r2 = 1; r2 < kPoints && triple_img.empty(); ++r2) {
      if (r2 == r1)
        continue;
      for (unsigned r3 = 1; r3 < kPoints && triple_img.empty(); ++r3) {
        if (r3 == r1 || r3 == r2 || r3 == (r1 ^ r2))
          continue;
        const std::array<unsigned, 3> span3 = {r1 ^ r2, r1 ^ r3, r2 ^ r3};
        for (unsigned r4 = 1; r4 < kPoints && triple_img.empty(); ++r4) {
          if (r4 == r1 || r4 == r2 || r4 == r3 ||
              std::find(span3.begin(), span3.end(), r4) != span3.end() ||
              r4 == (r1 ^ r2 ^ r3))
            continue;
          const std::array<unsigned, kDim> rows = {r1, r2, r3, r4};
          for (unsigned t : base) {
            if (t == 0)
              continue;  // a linear map fixes 0, leaving a fixed block point
            std::vector<Point> img = affine_images(rows, t);
            bool good = true;
            for (unsigned b : base) {
              const unsigned w = img[b] - 1;
              if (!in_base(w) || w == b) {
                good = false;
                break;
              }
            }
            if (!good)
              continue;
            for (unsigned v = 0; v < kPoints && good; ++v) {
              const unsigned w = img[img[img[v] - 1] - 1] - 1;
              good = (w == v);
            }
            if (good) {
              triple_img = std::move(img);
              break;
            }
          }
        }
      }
    }
  if (triple_img.empty())
    throw ConsistencyError("biplane: no order-3 affine block stabilizer");

  BiplaneConstruction out{PermGroup::trivial(kPoints),
                          IncidenceStructure{kPoints, {}},
                          PointSet(kPoints),
                          Permutation(std::vector<Point>(triple_img))};

  std::vector<Permutation> gens;
  for (unsigned i = 0; i < kDim; ++i) {
    std::vector<Point> img(kPoints);
    for (unsigned v = 0; v < kPoints; ++v)
      img[v] = Point((v ^ (1u << i)) + 1);
    gens.emplace_back(std::move(img));
  }
  gens.push_back(out.triple);
  out.group = PermGroup(std::move(gens), "biplane-16", 48);

  std::vector<Point> block_pts;
  for (unsigned b : base)
    block_pts.push_back(Point(b + 1));
  out.base_block = PointSet(kPoints, block_pts);

  out.plane.blocks.reserve(kPoints);
  for (unsigned p = 0; p < kPoints; ++p) {
    std::vector<Point> pts;
    pts.reserve(base.size());
    for (unsigned b : base)
      pts.push_back(Point((b ^ p) + 1));
    out.plane.blocks.emplace_back(kPoints, std::move(pts));
  }
  return out;
}

PermGroup wreath_product_action(const PermGroup& k, int m) {
  if (m != 2)
    throw std::invalid_argument("wreath_product_action: only m = 2");
  if (!k.is_transitive())
    throw std::invalid_argument(
        "wreath_product_action: component must be transitive");
  const std::size_t n = k.degree();
  const std::size_t nn = n * n;
  auto pt = [n](std::size_t a, std::size_t b) {
    return Point((a - 1) * n + b);
  };

  std::vector<Permutation> gens;
  gens.reserve(2 * k.generators().size() + 1);
  for (const auto& g : k.generators()) {
    std::vector<Point> first(nn), second(nn);
    for (std::size_t a = 1; a <= n; ++a)
      for (std::size_t b = 1; b <= n; ++b) {
        first[pt(a, b) - 1] = pt(g.image(Point(a)), b);
        second[pt(a, b) - 1] = pt(a, g.image(Point(b)));
      }
    gens.emplace_back(std::move(first));
    gens.emplace_back(std::move(second));
  }
  std::vector<Point> swap_img(nn);
  for (std::size_t a = 1; a <= n; ++a)
    for (std::size_t b = 1; b <= n; ++b)
      swap_img[pt(a, b) - 1] = pt(b, a);
  gens.emplace_back(std::move(swap_img));

  const std::uint64_t order = 2 * k.order() * k.order();
  const std::string label =
      (k.label() ? *k.label() : std::string("component")) + "-wr2";
  return PermGroup(std::move(gens), label, order);
}

std::vector<CatalogCheck> catalog_verify(const FixtureCatalog& catalog) {
  std::vector<CatalogCheck> out;
  std::map<std::string, PermGroup> parents;
  const auto parent_group = [&](const std::string& id) -> const PermGroup& {
    auto it = parents.find(id);
    if (it == parents.end())
      it = parents.emplace(id, catalog.load_group(id)).first;
    return it->second;
  };

  for (const auto& e : catalog.entries()) {
    CatalogCheck check{e.id, false, ""};
    try {
      const PermGroup g = catalog.load_group(e.id);
      if (e.kind == "transitive") {
        if (!g.is_transitive())
          check.detail = "not transitive";
        else if (g.point_stabilizer(1).order() != e.stab_order)
          check.detail = "stabilizer order mismatch";
        else if (!e.subdegrees.empty() && subdegrees(g) != e.subdegrees)
          check.detail = "subdegree mismatch";
      } else if (e.kind == "subgroup") {
        if (!catalog.find(e.parent)) {
          check.detail = "parent entry missing: " + e.parent;
        } else {
          const PermGroup& parent = parent_group(e.parent);
          if (parent.degree() != e.degree) {
            check.detail = "parent degree mismatch";
          } else {
            for (const auto& gen : g.generators())
              if (!parent.contains(gen)) {
                check.detail = "generator outside parent";
                break;
              }
            if (check.detail.empty() &&
                orbit_partition(g).signature != e.orbit_signature)
              check.detail = "orbit signature mismatch";
          }
        }
      } else {
        check.detail = "unknown kind: " + e.kind;
      }
      if (check.detail.empty()) {
        const auto blocks = catalog.load_blocks(e.id);
        if (blocks.size() != e.blocks.size())
          check.detail = "block file count mismatch";
      }
    } catch (const std::exception& ex) {
      check.detail = ex.what();
    }
    if (check.detail.empty()) {
      check.pass = true;
      check.detail = "ok";
    }
    out.push_back(std::move(check));
  }
  return out;
}

std::vector<PermGroup> two_transitive_components(std::size_t degree) {
  switch (degree) {
    case 5:
      return {
          from_cycles(5, {"(1,2,3,4,5)", "(2,3,5,4)"}, "f20", 20),
          from_cycles(5, {"(1,2,3,4,5)", "(3,4,5)"}, "a5", 60),
          from_cycles(5, {"(1,2,3,4,5)", "(1,2)"}, "s5", 120),
      };
    case 7:
      return {
          from_cycles(7, {"(1,2,3,4,5,6,7)", "(2,4,3,7,5,6)"}, "f42", 42),
          from_cycles(7, {"(2,3)(6,7)", "(1,2,4)(3,6,5)"}, "l3-2", 168),
          from_cycles(7, {"(1,2,3,4,5,6,7)", "(5,6,7)"}, "a7", 2520),
          from_cycles(7, {"(1,2,3,4,5,6,7)", "(1,2)"}, "s7", 5040),
      };
    case 9:
      return {
          from_cycles(9, {"(1,2,3)(4,5,6)(7,8,9)", "(2,5,7,8,3,9,4,6)"},
                      "agl1-9", 72),
          from_cycles(9,
                      {"(1,2,3)(4,5,6)(7,8,9)", "(2,4,3,7)(5,6,9,8)",
                       "(2,5,3,9)(4,8,7,6)"},
                      "m9", 72),
          from_cycles(9,
                      {"(1,2,3)(4,5,6)(7,8,9)", "(2,5,7,8,3,9,4,6)",
                       "(4,7)(5,8)(6,9)"},
                      "agammal1-9", 144),
          from_cycles(9,
                      {"(1,2,3)(4,5,6)(7,8,9)", "(4,5,6)(7,9,8)",
                       "(2,5,8)(3,9,6)"},
                      "asl2-3", 216),
          from_cycles(9,
                      {"(1,2,3)(4,5,6)(7,8,9)", "(4,5,6)(7,9,8)",
                       "(2,5,8)(3,9,6)", "(2,3)(5,6)(8,9)"},
                      "agl2-3", 432),
          from_cycles(9,
                      {"(1,2)(3,4)(5,6)(7,8)", "(2,3,5,4,7,8,6)",
                       "(1,9)(3,6)(4,7)(5,8)"},
                      "psl2-8", 504),
          from_cycles(9,
                      {"(1,2)(3,4)(5,6)(7,8)", "(2,3,5,4,7,8,6)",
                       "(1,9)(3,6)(4,7)(5,8)", "(3,5,7)(4,6,8)"},
                      "pgammal2-8", 1512),
          from_cycles(9, {"(1,2,3,4,5,6,7,8,9)", "(7,8,9)"}, "a9", 181440),
          from_cycles(9, {"(1,2,3,4,5,6,7,8,9)", "(1,2)"}, "s9", 362880),
      };
    case 11:
      return {
          from_cycles(11,
                      {"(1,2,3,4,5,6,7,8,9,10,11)",
                       "(2,3,5,9,6,11,10,8,4,7)"},
                      "agl1-11", 110),
          from_cycles(11, {"(4,11)(5,7)(6,9)(8,10)", "(1,2,4)(3,5,9)(6,8,11)"},
                      "psl2-11", 660),
          from_cycles(11,
                      {"(1,2)(3,6,10,8,7,4,9,11)", "(3,10,7,9)(4,11,6,8)",
                       "(1,7)(2,8,11,5,9,4)(3,10,6)", "(2,11,9)(3,6,10)(4,8,5)",
                       "(2,11,10,7)(4,9,6,5)", "(2,8,10)(4,9,7)(5,6,11)",
                       "(4,5,11,7)(6,8,9,10)", "(4,9,11,6)(5,8,7,10)"},
                      "m11", 7920),
          from_cycles(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(9,10,11)"}, "a11",
                      19958400),
          from_cycles(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(1,2)"}, "s11",
                      39916800),
      };
    default:
      throw std::invalid_argument(
          "two_transitive_components: degree must be 5, 7, 9 or 11");
  }
}

}  // namespace hfd
