#pragma once

#include <iosfwd>
#include <string>

#include "hfd/perm_group.hpp"
#include "hfd/point_set.hpp"

namespace hfd {

// Group file, plain text UTF-8:
//   degree <n>
//   name <label>          (optional)
//   order <N>             (optional; checked when the chain is built)
//   gen <cycle-notation>  (one per generator)
// Blank lines and lines starting with '#' are ignored.
PermGroup read_group(std::istream& in);
PermGroup read_group_file(const std::string& path);

void write_group(std::ostream& out, const PermGroup& g,
                 bool include_order = false);
void write_group_file(const std::string& path, const PermGroup& g,
                      bool include_order = false);

// Set file:
//   degree <n>
//   set <comma-separated points>
PointSet read_set(std::istream& in);
PointSet read_set_file(const std::string& path);

void write_set(std::ostream& out, const PointSet& s);
void write_set_file(const std::string& path, const PointSet& s);

}  // namespace hfd
