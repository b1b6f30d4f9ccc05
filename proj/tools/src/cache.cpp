#include "walls/cli/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace walls::cli {

using nlohmann::json;

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t table_hash(const Table& table) {
  std::string canon = table.seq + '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.index.size(); ++i) canon += (i ? "," : "") + std::to_string(row.index[i]);
    canon += ':' + row.value.get_str() + '\n';
  }
  return fnv1a64(canon);
}

std::string hash_hex(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return s;
}

std::string table_to_json(const Table& table, bool with_hash) {
  json cells = json::array();
  for (const auto& row : table.rows) cells.push_back({{"index", row.index}, {"value", row.value.get_str()}});
  json doc = {{"seq", table.seq}, {"columns", table.columns}, {"cells", cells}};
  if (with_hash) doc["fnv1a64"] = hash_hex(table_hash(table));
  return doc.dump(1);
}

std::optional<Table> load_cached_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json doc = json::parse(in);
    Table table;
    table.seq = doc.at("seq").get<std::string>();
    table.columns = doc.at("columns").get<std::vector<std::string>>();
    for (const auto& cell : doc.at("cells")) {
      TableRow row;
      row.index = cell.at("index").get<std::vector<long>>();
      if (row.value.set_str(cell.at("value").get<std::string>(), 10) != 0) return std::nullopt;
      table.rows.push_back(std::move(row));
    }
    if (doc.at("fnv1a64").get<std::string>() != hash_hex(table_hash(table))) return std::nullopt;
    return table;
  } catch (const json::exception&) {
    return std::nullopt;
  }
}

void store_cached_table(const std::filesystem::path& path, const Table& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    out << table_to_json(table, true) << '\n';
    if (!out) throw std::runtime_error("cannot write cache file " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string resolve_cache_dir(const std::string& flag_value) {
  if (const char* env = std::getenv("WALLS_CACHE_DIR"); env && *env) return env;
  return flag_value;
}

}  // namespace walls::cli
