#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "walls/cli/bfile.hpp"

namespace walls::cli {

// A one-dimensional slice of a wall table matched to an OEIS entry.
struct OeisMap {
  std::string name;     // e.g. "b-k0"
  std::string oeis_id;  // e.g. "A000108"
  long offset;          // first OEIS index; index i compares with value(i)
  std::function<Integer(long)> value;
};

const std::vector<OeisMap>& oeis_maps();
// Throws UsageError for unknown names.
const OeisMap& find_map(const std::string& name);

// "A000108" -> "b000108.txt"
std::string bfile_name(const std::string& oeis_id);
std::string bfile_url_path(const std::string& oeis_id);

struct FetchedBFile {
  std::vector<BFileEntry> entries;
  std::string source;  // URL or file path
};

// Tries https://oeis.org unless offline, then the fixture directory.
// Warnings about fallbacks go to warn.
FetchedBFile fetch_bfile(const std::string& oeis_id, bool offline, const std::string& fixture_dir, std::ostream& warn);

// Flag, then WALLS_OEIS_DIR, then the directory configured at build time.
std::string resolve_fixture_dir(const std::string& flag_value);

struct CrosscheckReport {
  bool passed = true;
  long offset = 0;
  long first = 0;
  long last = -1;
  long compared = 0;
  std::string mismatch;
};

// Compares entries with offset <= index <= nmax.
CrosscheckReport crosscheck(const OeisMap& map, const std::vector<BFileEntry>& entries, long nmax);

}  // namespace walls::cli
