#include "walls/cli/oeis.hpp"

#include <httplib.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>

#include "walls/cli/config.hpp"
#include "walls/wall_tables.hpp"

#ifndef WALLS_DEFAULT_OEIS_DIR
#define WALLS_DEFAULT_OEIS_DIR "data/oeis"
#endif

namespace walls::cli {

const std::vector<OeisMap>& oeis_maps() {
  static const std::vector<OeisMap> maps = {
      {"b-k0", "A000108", 0, [](long n) { return b(n, 0); }},
      {"a-diag", "A213863", 1, [](long n) { return a_rec(n, n); }},
      {"a-k1", "A122649", 1, [](long n) { return a_rec(n, 1); }},
      {"b-k1", "A000531", 1, [](long n) { return b(n, 1); }},
  };
  return maps;
}

const OeisMap& find_map(const std::string& name) {
  const auto& maps = oeis_maps();
  const auto it = std::find_if(maps.begin(), maps.end(), [&](const OeisMap& m) { return m.name == name; });
  if (it == maps.end()) {
    std::string known;
    for (const auto& m : maps) known += (known.empty() ? "" : ", ") + m.name;
    throw UsageError("unknown map '" + name + "' (expected one of " + known + ")");
  }
  return *it;
}

std::string bfile_name(const std::string& oeis_id) {
  if (oeis_id.size() < 2 || oeis_id[0] != 'A' ||
      !std::all_of(oeis_id.begin() + 1, oeis_id.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw UsageError("malformed OEIS id '" + oeis_id + "'");
  }
  return "b" + oeis_id.substr(1) + ".txt";
}

std::string bfile_url_path(const std::string& oeis_id) { return "/" + oeis_id + "/" + bfile_name(oeis_id); }

std::string resolve_fixture_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("WALLS_OEIS_DIR"); env && *env) return env;
  return WALLS_DEFAULT_OEIS_DIR;
}

namespace {

std::optional<std::string> download(const std::string& path, std::string& error) {
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
  httplib::SSLClient client("oeis.org", 443);
#else
  httplib::Client client("oeis.org", 80);
#endif
  client.set_connection_timeout(5, 0);
  client.set_read_timeout(10, 0);
  client.set_follow_location(true);
  const auto res = client.Get(path);
  if (!res) {
    error = httplib::to_string(res.error());
    return std::nullopt;
  }
  if (res->status != 200) {
    error = "HTTP status " + std::to_string(res->status);
    return std::nullopt;
  }
  return res->body;
}

}  // namespace

FetchedBFile fetch_bfile(const std::string& oeis_id, bool offline, const std::string& fixture_dir, std::ostream& warn) {
  const std::string name = bfile_name(oeis_id);
  if (!offline) {
    const std::string path = bfile_url_path(oeis_id);
    std::string error;
    if (auto body = download(path, error)) {
      try {
        return {parse_bfile(*body), "https://oeis.org" + path};
      } catch (const std::runtime_error& e) {
        error = e.what();
      }
    }
    warn << "warning: fetching https://oeis.org" << path << " failed (" << error << "); using bundled fixture\n";
  }
  const std::filesystem::path file = std::filesystem::path(fixture_dir) / name;
  std::ifstream in(file);
  if (!in) throw std::runtime_error("no b-file for " + oeis_id + " at " + file.string());
  return {parse_bfile(in), file.string()};
}

CrosscheckReport crosscheck(const OeisMap& map, const std::vector<BFileEntry>& entries, long nmax) {
  CrosscheckReport report;
  report.offset = map.offset;
  for (const auto& e : entries) {
    if (e.index < map.offset || e.index > nmax) continue;
    const Integer ours = map.value(e.index);
    if (report.compared == 0) report.first = e.index;
    report.last = e.index;
    ++report.compared;
    if (ours != e.value) {
      report.passed = false;
      report.mismatch =
          "index " + std::to_string(e.index) + ": ours " + ours.get_str() + ", b-file " + e.value.get_str();
      return report;
    }
  }
  if (report.compared == 0) {
    report.passed = false;
    report.mismatch = "no overlapping indices";
  }
  return report;
}

}  // namespace walls::cli
