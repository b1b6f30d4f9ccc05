#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "walls/exact_arith.hpp"

namespace walls::cli {

struct BFileEntry {
  long index;
  Integer value;

  friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

// Lines "index value"; blank lines and lines starting with '#' are skipped.
// Throws std::runtime_error naming the line on malformed input.
std::vector<BFileEntry> parse_bfile(std::istream& in);
std::vector<BFileEntry> parse_bfile(const std::string& text);

void write_bfile(const std::vector<BFileEntry>& entries, std::ostream& out);

}  // namespace walls::cli
