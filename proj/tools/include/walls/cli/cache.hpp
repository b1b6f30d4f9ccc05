#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "walls/cli/table.hpp"

namespace walls::cli {

std::uint64_t fnv1a64(const std::string& bytes);

// Hash over one "i,j,...:value" line per row.
std::uint64_t table_hash(const Table& table);
std::string hash_hex(std::uint64_t h);

// JSON with decimal-string values and the table hash.
std::string table_to_json(const Table& table, bool with_hash);

// Returns nullopt if the file is missing, unreadable, or its stored hash
// does not match the rows it holds.
std::optional<Table> load_cached_table(const std::filesystem::path& path);
void store_cached_table(const std::filesystem::path& path, const Table& table);

// WALLS_CACHE_DIR wins over the flag; empty means no caching.
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace walls::cli
