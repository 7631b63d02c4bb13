#include "hfd/subgroup.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hfd/errors.hpp"
#include "hfd/group_io.hpp"

namespace hfd {

namespace {

using u64 = std::uint64_t;
using Key = std::pair<u64, u64>;

// Sorted element list; the representation behind all set arithmetic here.
using ElemSet = std::vector<Permutation>;

Key set_key(const ElemSet& s) {
  u64 a = 1469598103934665603ull;
  u64 b = 14695981039346656037ull;
  for (const Permutation& p : s)
    for (Point x : p.images()) {
      a = (a ^ x) * 1099511628211ull;
      b = (b ^ x) * 1099511628211ull + 0x9e3779b97f4a7c15ull;
    }
  return {a, b};
}

bool member(const ElemSet& s, const Permutation& x) {
  return std::binary_search(s.begin(), s.end(), x);
}

ElemSet conjugate_set(const ElemSet& s, const Permutation& t) {
  ElemSet out;
  out.reserve(s.size());
  for (const Permutation& x : s)
    out.push_back(conjugate(x, t));
  std::sort(out.begin(), out.end());
  return out;
}

// Every element, by walking the chain's transversals deepest level first.
// The list is only materialized when order * degree stays small.
ElemSet all_elements(const PermGroup& g) {
  const StabChain& c = g.chain();
  ElemSet cur{Permutation(g.degree())};
  for (std::size_t lvl = c.base_length(); lvl-- > 0;) {
    ElemSet next;
    next.reserve(cur.size() * c.orbit_size(lvl));
    for (Point p : c.fundamental_orbit(lvl)) {
      const Permutation u = c.transversal_element(lvl, p);
      for (const Permutation& e : cur)
        next.push_back(compose(e, u));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end());
  return cur;
}

struct Atom {
  Permutation gen;  // canonical generator: minimal among the power-coprime
  u64 order = 0;
};

// Distinct cyclic subgroups of prime-power order dividing m.
std::vector<Atom> prime_power_atoms(const ElemSet& elements, u64 m) {
  std::set<Permutation> seen;
  std::vector<Atom> out;
  const std::size_t n = elements.empty() ? 0 : elements.front().degree();
  const Permutation id(n);
  for (const Permutation& x : elements) {
    if (x == id)
      continue;
    const u64 q = x.order();
    if (m % q)
      continue;
    u64 p = q;
    for (u64 d = 2; d * d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    u64 pp = p;
    while (pp < q)
      pp *= p;
    if (pp != q)
      continue;  // not a prime power
    // canonical generator of <x>
    Permutation best = x;
    Permutation pw = x;
    for (u64 i = 2; i < q; ++i) {
      pw = compose(pw, x);
      if (std::gcd(i, q) == 1 && pw < best)
        best = pw;
    }
    if (seen.insert(best).second)
      out.push_back(Atom{best, q});
  }
  std::sort(out.begin(), out.end(), [](const Atom& a, const Atom& b) {
    return a.order != b.order ? a.order < b.order : a.gen < b.gen;
  });
  return out;
}

// <H, a> by coset growth: reps are closed under right multiplication by
// every join generator, so the final union of cosets is the join. Returns
// an empty set when the result would exceed `bound` elements.
ElemSet bounded_join(const ElemSet& h, const std::vector<Permutation>& h_gens,
                     const Permutation& a, u64 bound) {
  std::vector<Permutation> join_gens = h_gens;
  join_gens.push_back(a);
  ElemSet s = h;
  std::vector<Permutation> reps{Permutation(a.degree())};
  for (std::size_t qi = 0; qi < reps.size(); ++qi) {
    const Permutation r = reps[qi];
    for (const Permutation& g : join_gens) {
      const Permutation t = compose(r, g);
      if (member(s, t))
        continue;
      if (s.size() + h.size() > bound)
        return {};
      ElemSet coset;
      coset.reserve(h.size());
      for (const Permutation& x : h)
        coset.push_back(compose(x, t));
      std::sort(coset.begin(), coset.end());
      const std::size_t mid = s.size();
      s.insert(s.end(), coset.begin(), coset.end());
      std::inplace_merge(s.begin(), s.begin() + std::ptrdiff_t(mid), s.end());
      reps.push_back(t);
    }
  }
  return s;
}

struct Node {
  ElemSet elems;
  std::vector<Permutation> gens;
};

// Registers the full conjugacy orbit of s; false when s was already known.
bool register_class(const ElemSet& s, const std::vector<Permutation>& parent_gens,
                    std::set<Key>& registry, u64 cap) {
  const Key k0 = set_key(s);
  if (registry.count(k0))
    return false;
  std::vector<ElemSet> queue{s};
  registry.insert(k0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const ElemSet cur = queue[qi];
    for (const Permutation& t : parent_gens) {
      ElemSet img = conjugate_set(cur, t);
      const Key k = set_key(img);
      if (registry.insert(k).second)
        queue.push_back(std::move(img));
    }
    if (registry.size() > cap)
      throw std::runtime_error("exhaustive subgroup walk exceeded its registry cap");
  }
  return true;
}

SubgroupClass make_class(PermGroup group, SubgroupSource source) {
  OrbitPartition orbits = orbit_partition(group);
  return SubgroupClass{std::move(group), std::move(orbits), source};
}

bool signature_less(const SubgroupClass& a, const SubgroupClass& b) {
  if (a.signature() != b.signature())
    return a.signature() < b.signature();
  return a.group.generators() < b.group.generators();
}

// Complete enumeration of the order-m subgroups up to conjugacy: breadth
// first over joins with prime-power cyclic atoms, every discovered
// subgroup (of any order dividing m) registered together with its whole
// conjugacy orbit so conjugate branches die on arrival.
std::vector<SubgroupClass> exhaustive_classes(const PermGroup& g, u64 m,
                                              const SearchBudget& budget) {
  const ElemSet elements = all_elements(g);
  const std::vector<Permutation>& pgens = g.generators();
  const std::vector<Atom> atoms = prime_power_atoms(elements, m);

  std::set<Key> registry;
  std::vector<Node> frontier;
  std::vector<SubgroupClass> found;

  const Permutation id(g.degree());
  Node root{{id}, {}};
  register_class(root.elems, pgens, registry, budget.exhaustive_subgroup_cap);
  if (m == 1)
    return {make_class(PermGroup::trivial(g.degree()),
                       SubgroupSource::exhaustive)};
  frontier.push_back(std::move(root));

  for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
    // frontier grows while iterating; index access only
    for (const Atom& atom : atoms) {
      const Node& h = frontier[fi];
      if (member(h.elems, atom.gen))
        continue;
      // |<H,a>| >= |H| |<a>| / |H meet <a>| and is a multiple of
      // lcm(|H|, |<a>|)
      u64 meet = 1;
      Permutation pw = atom.gen;
      for (u64 i = 1; i < atom.order; ++i) {
        if (member(h.elems, pw))
          ++meet;
        pw = compose(pw, atom.gen);
      }
      const u64 lower = h.elems.size() * atom.order / meet;
      if (lower > m || m % std::lcm<u64, u64>(h.elems.size(), atom.order))
        continue;
      ElemSet joined =
          bounded_join(h.elems, h.gens, atom.gen, m);
      if (joined.empty() || m % joined.size())
        continue;
      if (!register_class(joined, pgens, registry,
                          budget.exhaustive_subgroup_cap))
        continue;
      Node next;
      next.gens = h.gens;
      next.gens.push_back(atom.gen);
      next.elems = std::move(joined);
      if (next.elems.size() == m)
        found.push_back(make_class(PermGroup(next.gens, std::nullopt, m),
                                   SubgroupSource::exhaustive));
      else
        frontier.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end(), signature_less);
  return found;
}

// Conjugacy probe: exact positive test (H^t inside K of equal order means
// equality), incomplete search over t.
bool probably_conjugate(const PermGroup& h, const PermGroup& k,
                        RandomElementStream& stream, int probes) {
  const Permutation id(h.degree());
  for (int i = -1; i < probes; ++i) {
    const Permutation t = i < 0 ? id : stream.next();
    bool all = true;
    for (const Permutation& g : h.generators())
      if (!k.contains(conjugate(g, t))) {
        all = false;
        break;
      }
    if (all)
      return true;
  }
  return false;
}

std::vector<SubgroupClass> targeted_classes(const PermGroup& g, u64 m,
                                            const SearchBudget& budget,
                                            std::string& note) {
  const auto started = std::chrono::steady_clock::now();
  auto expired = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         started)
               .count() > budget.targeted_seconds;
  };
  RandomElementStream stream = g.random_stream(budget.seed);
  RandomElementStream probe_stream = g.random_stream(budget.seed ^ 0x5eed);
  std::mt19937_64 rng(budget.seed);

  std::vector<u64> primes;
  u64 rest = m;
  for (u64 p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0)
        rest /= p;
    }
  if (rest > 1)
    primes.push_back(rest);

  std::vector<SubgroupClass> found;
  u64 attempts = 0;
  const ElemSet unit{Permutation(g.degree())};

  auto consider = [&](const std::vector<Permutation>& gens) {
    ElemSet cur = unit;
    std::vector<Permutation> used;
    for (const Permutation& x : gens) {
      cur = bounded_join(cur, used, x, m);
      if (cur.empty())
        return;
      used.push_back(x);
    }
    if (cur.size() != m)
      return;
    PermGroup cand(used, std::nullopt, m);
    for (const SubgroupClass& prior : found) {
      if (prior.signature() != orbit_partition(cand).signature)
        continue;
      if (probably_conjugate(cand, prior.group, probe_stream, 50))
        return;
    }
    found.push_back(make_class(std::move(cand), SubgroupSource::targeted));
  };

  while (attempts < budget.targeted_attempts && !expired()) {
    ++attempts;
    const Permutation x = stream.next();
    const Permutation y = stream.next();
    switch (attempts % 3) {
      case 0:  // random pair closure
        consider({x, y});
        break;
      case 1: {  // prime-power parts of random elements
        const u64 p = primes[rng() % primes.size()];
        auto part = [&](const Permutation& z) {
          u64 o = z.order();
          u64 co = o;
          while (co % p == 0)
            co /= p;
          Permutation r = z;
          for (u64 i = 1; i < co; ++i)
            r = compose(r, z);
          return r;  // z^co, of p-power order
        };
        consider({part(x), part(y)});
        break;
      }
      default: {  // closure of a small commuting family around x
        std::vector<Permutation> comm{x};
        for (int s = 0; s < 24 && comm.size() < 4; ++s) {
          const Permutation z = stream.next();
          if (compose(x, z) == compose(z, x))
            comm.push_back(z);
        }
        consider(comm);
        break;
      }
    }
  }

  std::ostringstream os;
  os << "targeted search: " << attempts << " attempts, " << found.size()
     << " verified subgroup(s); classes may be missing and duplicates are "
        "only pruned by probing";
  note = os.str();
  std::sort(found.begin(), found.end(), signature_less);
  return found;
}

// Element materialization is worth it only while order * degree is small.
bool small_enough_for_exhaustive(const PermGroup& g, const SearchBudget& b) {
  const u64 order = g.order();
  return order <= b.exhaustive_parent_order &&
         order * g.degree() <= 256'000'000ull;
}

}  // namespace

SubgroupClassReport subgroups_of_index(const PermGroup& g, std::uint64_t b,
                                       const SearchBudget& budget) {
  if (b == 0 || g.order() % b)
    throw std::invalid_argument("index must divide the group order");
  const u64 m = g.order() / b;

  SubgroupClassReport report;
  report.index = b;

  if (b == 1) {
    report.exhaustive = true;
    report.classes.push_back(make_class(g, SubgroupSource::exhaustive));
    return report;
  }
  if (m == 1) {
    report.exhaustive = true;
    report.classes.push_back(
        make_class(PermGroup::trivial(g.degree()), SubgroupSource::exhaustive));
    return report;
  }

  if (small_enough_for_exhaustive(g, budget)) {
    report.exhaustive = true;
    report.classes = exhaustive_classes(g, m, budget);
    return report;
  }

  report.exhaustive = false;
  report.classes = targeted_classes(g, m, budget, report.note);
  return report;
}

PermGroup load_subgroup_fixture(const PermGroup& parent,
                                const std::string& path) {
  PermGroup candidate = read_group_file(path);
  if (candidate.degree() != parent.degree())
    throw ConsistencyError("subgroup fixture degree differs from the parent's");
  if (!candidate.declared_order())
    throw ConsistencyError("subgroup fixture must declare its order");
  for (const Permutation& g : candidate.generators())
    if (!parent.contains(g))
      throw ConsistencyError("subgroup fixture generator lies outside the parent");
  candidate.order();  // builds the chain, cross-checks the declared order
  return candidate;
}

SignatureTable signature_table(const PermGroup& g,
                               std::vector<std::uint64_t> b_values,
                               const SignatureTableOptions& options) {
  std::sort(b_values.begin(), b_values.end());
  b_values.erase(std::unique(b_values.begin(), b_values.end()),
                 b_values.end());

  SignatureTable table;
  table.group_label = g.label().value_or("");
  table.group_order = g.order();

  for (u64 b : b_values) {
    SignatureTableRow row;
    row.b = b;
    if (b == 0 || g.order() % b) {
      row.note = "does not divide the group order";
      table.rows.push_back(std::move(row));
      continue;
    }
    const u64 m = g.order() / b;

    const bool searchable =
        b == 1 || m == 1 || small_enough_for_exhaustive(g, options.budget);
    if (options.search && searchable) {
      SubgroupClassReport rep = subgroups_of_index(g, b, options.budget);
      row.exhaustive = rep.exhaustive;
      row.note = rep.note;
      row.classes = std::move(rep.classes);
    } else if (options.search) {
      row.note = "parent beyond the exhaustive budget; supplied subgroups only";
    }

    for (const auto& [sb, sub] : options.supplied) {
      if (sb != b)
        continue;
      if (sub.degree() != g.degree() || sub.order() != m)
        throw std::invalid_argument(
            "supplied subgroup does not have order parent/b");
      for (const Permutation& x : sub.generators())
        if (!g.contains(x))
          throw std::invalid_argument(
              "supplied subgroup has a generator outside the parent");
      // Fold into any class already present, exhaustive or fixture, so a
      // caller supplying two conjugate representatives gets one class.
      bool folded = false;
      RandomElementStream probe = g.random_stream(options.budget.seed + b);
      const std::vector<std::size_t> sig = orbit_partition(sub).signature;
      for (const SubgroupClass& cls : row.classes)
        if (cls.signature() == sig &&
            probably_conjugate(sub, cls.group, probe, 200)) {
          folded = true;
          break;
        }
      if (!folded)
        row.classes.push_back(make_class(sub, SubgroupSource::fixture));
    }

    std::sort(row.classes.begin(), row.classes.end(), signature_less);
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string signature_text(const std::vector<std::size_t>& sig) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sig.size(); ++i)
    os << (i ? ", " : "") << sig[i];
  return os.str();
}

const char* source_name(SubgroupSource s) {
  switch (s) {
    case SubgroupSource::exhaustive:
      return "exhaustive";
    case SubgroupSource::targeted:
      return "targeted";
    default:
      return "fixture";
  }
}

}  // namespace

std::string signature_table_markdown(const SignatureTable& table) {
  std::ostringstream os;
  os << "# Orbit lengths of index-b subgroups";
  if (!table.group_label.empty())
    os << " of " << table.group_label;
  os << "\n\nGroup order " << table.group_order << ".\n\n";
  os << "| b | order | orbit lengths | source | complete |\n";
  os << "|--:|------:|---------------|--------|----------|\n";
  for (const SignatureTableRow& row : table.rows) {
    if (row.classes.empty()) {
      os << "| " << row.b << " | | "
         << (row.note.empty() ? "none found" : row.note) << " | | "
         << (row.exhaustive ? "yes" : "no") << " |\n";
      continue;
    }
    for (const SubgroupClass& cls : row.classes)
      os << "| " << row.b << " | " << cls.group.order() << " | "
         << signature_text(cls.signature()) << " | "
         << source_name(cls.source) << " | "
         << (row.exhaustive ? "yes" : "no") << " |\n";
  }
  return os.str();
}

std::string signature_table_json(const SignatureTable& table) {
  nlohmann::ordered_json root;
  root["group"] = table.group_label;
  root["order"] = table.group_order;
  root["rows"] = nlohmann::ordered_json::array();
  for (const SignatureTableRow& row : table.rows) {
    nlohmann::ordered_json r;
    r["b"] = row.b;
    r["exhaustive"] = row.exhaustive;
    if (!row.note.empty())
      r["note"] = row.note;
    r["classes"] = nlohmann::ordered_json::array();
    for (const SubgroupClass& cls : row.classes) {
      nlohmann::ordered_json c;
      c["order"] = cls.group.order();
      c["signature"] = cls.signature();
      c["source"] = source_name(cls.source);
      r["classes"].push_back(std::move(c));
    }
    root["rows"].push_back(std::move(r));
  }
  return root.dump(2) + "\n";
}

}  // namespace hfd
