#include "walls/cli/bfile.hpp"

#include <sstream>
#include <stdexcept>

namespace walls::cli {

std::vector<BFileEntry> parse_bfile(std::istream& in) {
  std::vector<BFileEntry> entries;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long index = 0;
    std::string value;
    std::string extra;
    if (!(fields >> index >> value) || (fields >> extra)) {
      throw std::runtime_error("malformed b-file line " + std::to_string(line_no) + ": '" + line + "'");
    }
    Integer v;
    if (v.set_str(value, 10) != 0) {
      throw std::runtime_error("bad integer on b-file line " + std::to_string(line_no) + ": '" + value + "'");
    }
    entries.push_back({index, v});
  }
  return entries;
}

std::vector<BFileEntry> parse_bfile(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in);
}

void write_bfile(const std::vector<BFileEntry>& entries, std::ostream& out) {
  for (const auto& e : entries) out << e.index << ' ' << e.value.get_str() << '\n';
}

}  // namespace walls::cli
