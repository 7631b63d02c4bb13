// Subgroups of a given index: exhaustive enumeration up to conjugacy for
// small parents, best-effort targeted search for large ones, and verified
// ingestion of externally derived subgroups.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hfd/action.hpp"
#include "hfd/perm_group.hpp"

namespace hfd {

enum class SubgroupSource { exhaustive, targeted, fixture };

struct SubgroupClass {
  PermGroup group;
  OrbitPartition orbits;  // on the parent's full point set
  SubgroupSource source = SubgroupSource::exhaustive;

  const std::vector<std::size_t>& signature() const {
    return orbits.signature;
  }
};

struct SearchBudget {
  // Parents up to this order get the complete up-to-conjugacy enumeration.
  std::uint64_t exhaustive_parent_order = 1'000'000;
  // Above that, targeted search; element-set bookkeeping (exact duplicate
  // detection) is enabled when the target order stays within this bound.
  std::uint64_t exhaustive_target_order = 4000;
  // Abort the exhaustive walk when this many subgroups have been registered
  // (a safety valve, not a correctness knob; hitting it throws).
  std::uint64_t exhaustive_subgroup_cap = 2'000'000;
  std::uint64_t targeted_attempts = 2000;
  double targeted_seconds = 60.0;
  std::uint64_t seed = 1;
};

struct SubgroupClassReport {
  std::uint64_t index = 0;  // b
  // True when `classes` is complete and pairwise non-conjugate. Targeted
  // runs are never exhaustive; they may miss classes and may list two
  // conjugate representatives, but every entry is a verified subgroup of
  // the exact order.
  bool exhaustive = false;
  std::string note;  // diagnostics for partial runs
  std::vector<SubgroupClass> classes;
};

// All subgroups of index b in g up to conjugacy when order(g) fits the
// exhaustive budget: a breadth-first walk joining prime-power cyclic
// subgroups, with conjugates pruned through an exact registry (every
// discovered subgroup registers its whole conjugacy orbit). Larger parents
// get the targeted strategies (random pair closures, prime-power parts,
// commuting-set closures); index 1 and index order(g) are answered exactly
// at any size. Throws std::invalid_argument unless b divides order(g).
SubgroupClassReport subgroups_of_index(const PermGroup& g, std::uint64_t b,
                                       const SearchBudget& budget = {});

// Reads a group file, requires a declared order line, and verifies every
// generator is a member of parent before building the chain (which itself
// cross-checks the declared order). Throws ConsistencyError on degree
// mismatch, a missing order line, or a generator outside parent.
PermGroup load_subgroup_fixture(const PermGroup& parent,
                                const std::string& path);

struct SignatureTableRow {
  std::uint64_t b = 0;
  bool exhaustive = false;
  std::string note;
  std::vector<SubgroupClass> classes;  // sorted by orbit signature
};

struct SignatureTable {
  std::string group_label;
  std::uint64_t group_order = 0;
  std::vector<SignatureTableRow> rows;  // sorted by b
};

struct SignatureTableOptions {
  SearchBudget budget;
  // Run subgroups_of_index per b. Off gives a fixture-only table.
  bool search = true;
  // Externally supplied subgroups, keyed by their index in the parent.
  // Each must have order parent/b (std::invalid_argument otherwise); when
  // an exhaustive search also ran, supplied conjugates of found classes
  // are folded in rather than duplicated.
  std::vector<std::pair<std::uint64_t, PermGroup>> supplied;
};

// One row per requested b with every class's orbit-length multiset. A b
// that does not divide the group order yields an empty row with a note.
SignatureTable signature_table(const PermGroup& g,
                               std::vector<std::uint64_t> b_values,
                               const SignatureTableOptions& options = {});

std::string signature_table_markdown(const SignatureTable& table);
std::string signature_table_json(const SignatureTable& table);

}  // namespace hfd
