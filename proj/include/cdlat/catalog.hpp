#pragma once

#include <istream>
#include <string>
#include <vector>

#include "cdlat/group.hpp"

namespace cdlat {

// Catalog files are JSON Lines: one object per line with
//   {"name": str, "kind": "perm" | "table" | "presentation",
//    "data": ..., "order": int (optional)}
// where perm data is a list of 0-based permutation image arrays, table data
// is a row-major integer array, and presentation data is DSL text. A
// declared order, if present, must match the constructed group.

std::vector<Group> parse_catalog(std::istream& in, const std::string& origin);
std::vector<Group> load_catalog(const std::string& path);

// A catalog file holding exactly one entry (the format used to pass groups
// between commands).
Group load_group_file(const std::string& path);

// One catalog line in multiplication-table form; round-trips through
// load_catalog bit-exactly.
std::string group_entry_json(const Group& g);
void write_group_file(const Group& g, const std::string& path);

}  // namespace cdlat
