#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace walls::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitCapacity = 3,
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson, kBfile };

Format parse_format(const std::string& name);

struct RunConfig {
  std::string command;
  std::string seq = "a";
  std::optional<long> nmax;
  std::optional<long> kmax;
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> m;
  std::optional<long> dk;
  std::optional<long> order;
  std::string method = "kernel";
  Format format = Format::kText;
  bool diagonal = false;
  std::string check = "all";
  std::string cache_dir;
  std::string oeis;
  std::string map;
  bool offline = false;
  std::string fixture_dir;

  // Throws UsageError on negative bounds.
  void validate() const;
};

}  // namespace walls::cli
