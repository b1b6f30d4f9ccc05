#include "walls/cli/config.hpp"

namespace walls::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::kText;
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "bfile") return Format::kBfile;
  throw UsageError("unknown format '" + name + "' (expected text, csv, json or bfile)");
}

void RunConfig::validate() const {
  const std::pair<const char*, const std::optional<long>*> bounds[] = {
      {"--nmax", &nmax}, {"--kmax", &kmax}, {"--n", &n}, {"--k", &k}, {"--m", &m}, {"--dk", &dk}, {"--order", &order},
  };
  for (const auto& [flag, value] : bounds) {
    if (*value && **value < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  }
}

}  // namespace walls::cli
