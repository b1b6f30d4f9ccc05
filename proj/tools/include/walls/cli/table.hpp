#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "walls/cli/config.hpp"
#include "walls/exact_arith.hpp"

namespace walls::cli {

struct TableRow {
  std::vector<long> index;
  Nat value;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct Table {
  std::string seq;
  std::vector<std::string> columns;  // index names, e.g. {"n", "k"}
  std::vector<TableRow> rows;        // lexicographic in index order

  friend bool operator==(const Table&, const Table&) = default;
};

// Sequence selectors: a b b3 omega tc f ftilde u.
bool is_known_sequence(const std::string& seq);
int sequence_arity(const std::string& seq);

// Computes the cells selected by seq, nmax, kmax, m, k and diagonal.
Table build_table(const RunConfig& config);

// Cache file name derived from the selecting parameters.
std::string table_cache_key(const RunConfig& config);

void render_table(const Table& table, Format format, std::ostream& out);

}  // namespace walls::cli
