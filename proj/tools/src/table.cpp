#include "walls/cli/table.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "walls/cli/cache.hpp"
#include "walls/families.hpp"
#include "walls/tree_child.hpp"
#include "walls/wall_tables.hpp"

namespace walls::cli {

namespace {

constexpr long kDefaultNmax = 6;

struct TwoIndex {
  long first_n;
  // Largest k with a nonzero entry in row n.
  std::function<long(long)> kmax_of_row;
  std::function<Nat(long, long)> value;
};

const std::map<std::string, TwoIndex>& two_index_sequences() {
  static const std::map<std::string, TwoIndex> seqs = {
      {"a", {0, [](long n) { return n; }, [](long n, long k) { return a_rec(n, k); }}},
      {"b", {0, [](long n) { return n; }, [](long n, long k) { return b(n, k); }}},
      {"tc", {1, [](long n) { return n - 1; }, [](long n, long k) { return tc(n, k); }}},
      {"f", {0, [](long n) { return n; }, [](long n, long k) { return f_closed(n, k); }}},
      {"ftilde", {0, [](long n) { return n; }, [](long n, long k) { return ftilde(n, k); }}},
      {"u", {0, [](long n) { return n; }, [](long n, long k) { return u_from_b(n, k); }}},
  };
  return seqs;
}

Table build_two_index(const RunConfig& config, const TwoIndex& seq) {
  Table table{config.seq, {"n", "k"}, {}};
  const long nmax = config.nmax.value_or(kDefaultNmax);
  for (long n = seq.first_n; n <= nmax; ++n) {
    const long top = seq.kmax_of_row(n);
    if (config.diagonal) {
      table.rows.push_back({{n, top}, seq.value(n, top)});
      continue;
    }
    if (config.k) {
      if (*config.k <= top) table.rows.push_back({{n, *config.k}, seq.value(n, *config.k)});
      continue;
    }
    const long kmax = std::min(top, config.kmax.value_or(top));
    for (long k = 0; k <= kmax; ++k) table.rows.push_back({{n, k}, seq.value(n, k)});
  }
  return table;
}

Table build_b3(const RunConfig& config) {
  Table table{config.seq, {"n", "m", "k"}, {}};
  const long nmax = config.nmax.value_or(kDefaultNmax);
  for (long n = 0; n <= nmax; ++n) {
    for (long m = 0; m <= n; ++m) {
      if (config.m && m != *config.m) continue;
      const long kmax = std::min(m, config.kmax.value_or(m));
      for (long k = 0; k <= kmax; ++k) {
        if (config.k && k != *config.k) continue;
        table.rows.push_back({{n, m, k}, b3(n, m, k)});
      }
    }
  }
  return table;
}

// omega(n, m, k) for n + m <= nmax, 0 <= k <= m + 1.
Table build_omega(const RunConfig& config) {
  Table table{config.seq, {"n", "m", "k"}, {}};
  const long nmax = config.nmax.value_or(kDefaultNmax);
  for (long n = 0; n <= nmax; ++n) {
    for (long m = 0; n + m <= nmax; ++m) {
      if (config.m && m != *config.m) continue;
      const long kmax = std::min(m + 1, config.kmax.value_or(m + 1));
      for (long k = 0; k <= kmax; ++k) {
        if (config.k && k != *config.k) continue;
        table.rows.push_back({{n, m, k}, omega(n, m, k)});
      }
    }
  }
  return table;
}

}  // namespace

bool is_known_sequence(const std::string& seq) {
  return two_index_sequences().count(seq) > 0 || seq == "b3" || seq == "omega";
}

int sequence_arity(const std::string& seq) {
  if (!is_known_sequence(seq)) throw UsageError("unknown sequence '" + seq + "'");
  return (seq == "b3" || seq == "omega") ? 3 : 2;
}

Table build_table(const RunConfig& config) {
  const int arity = sequence_arity(config.seq);
  if (arity == 3) {
    if (config.diagonal) throw UsageError("--diagonal applies to two-index sequences only");
    return config.seq == "b3" ? build_b3(config) : build_omega(config);
  }
  if (config.diagonal && config.k) throw UsageError("--diagonal and --k are mutually exclusive");
  if (config.m) throw UsageError("--m applies to b3 and omega only");
  return build_two_index(config, two_index_sequences().at(config.seq));
}

std::string table_cache_key(const RunConfig& config) {
  auto part = [](const char* tag, const std::optional<long>& v) {
    return v ? std::string("_") + tag + std::to_string(*v) : std::string();
  };
  std::string key = config.seq + "_n" + std::to_string(config.nmax.value_or(kDefaultNmax));
  key += part("kmax", config.kmax) + part("m", config.m) + part("k", config.k);
  if (config.diagonal) key += "_diag";
  return key + ".json";
}

void render_table(const Table& table, Format format, std::ostream& out) {
  switch (format) {
    case Format::kCsv: {
      for (const auto& c : table.columns) out << c << ',';
      out << "value\n";
      for (const auto& row : table.rows) {
        for (long i : row.index) out << i << ',';
        out << row.value.get_str() << '\n';
      }
      return;
    }
    case Format::kJson:
      out << table_to_json(table, false) << '\n';
      return;
    case Format::kBfile:
      for (const auto& row : table.rows) out << row.index.front() << ' ' << row.value.get_str() << '\n';
      return;
    case Format::kText: {
      // One line per value of the leading indices.
      std::size_t i = 0;
      while (i < table.rows.size()) {
        const auto& head = table.rows[i].index;
        for (std::size_t c = 0; c + 1 < head.size(); ++c) out << (c ? " " : "") << table.columns[c] << '=' << head[c];
        out << ':';
        std::size_t j = i;
        while (j < table.rows.size() && std::equal(head.begin(), head.end() - 1, table.rows[j].index.begin())) {
          out << ' ' << table.rows[j].value.get_str();
          ++j;
        }
        out << '\n';
        i = j;
      }
      return;
    }
  }
}

}  // namespace walls::cli
