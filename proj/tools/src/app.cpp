#include "walls/cli/app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "walls/cli/cache.hpp"
#include "walls/cli/checks.hpp"
#include "walls/cli/oeis.hpp"
#include "walls/cli/table.hpp"
#include "walls/families.hpp"
#include "walls/series.hpp"
#include "walls/tree_child.hpp"
#include "walls/wall_tables.hpp"

namespace walls::cli {

namespace {

long require(const std::optional<long>& v, const char* flag, const std::string& command) {
  if (!v) throw UsageError(command + " needs " + flag);
  return *v;
}

Nat sum_family(int n, int k, Poset (*build)(int, const IndexSet&)) {
  Nat total = 0;
  for (const auto& I : index_subsets(1, n, k)) total += count_linear_extensions(build(n, I));
  return total;
}

}  // namespace

int run_table(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  const int arity = sequence_arity(config.seq);
  if (config.format == Format::kBfile && (arity != 2 || (!config.k && !config.diagonal))) {
    throw UsageError("bfile output needs a one-dimensional slice: a two-index sequence with --k or --diagonal");
  }
  const std::string cache_dir = resolve_cache_dir(config.cache_dir);
  Table table;
  if (cache_dir.empty()) {
    table = build_table(config);
  } else {
    const auto path = std::filesystem::path(cache_dir) / table_cache_key(config);
    if (auto cached = load_cached_table(path)) {
      table = std::move(*cached);
    } else {
      if (std::filesystem::exists(path)) err << "warning: ignoring invalid cache file " << path.string() << '\n';
      table = build_table(config);
      store_cached_table(path, table);
    }
  }
  render_table(table, config.format, out);
  return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  config.validate();
  std::vector<const Check*> selected;
  if (config.check == "all") {
    for (const auto& c : check_registry()) selected.push_back(&c);
  } else {
    const Check* c = find_check(config.check);
    if (!c) {
      std::string names;
      for (const auto& known : check_registry()) names += " " + known.name;
      throw UsageError("unknown check '" + config.check + "'; available: all" + names);
    }
    selected.push_back(c);
  }
  bool all_passed = true;
  for (const Check* c : selected) {
    CheckBounds bounds = c->defaults;
    if (config.nmax) bounds.nmax = *config.nmax;
    if (config.kmax) bounds.kmax = *config.kmax;
    if (config.order) bounds.order = *config.order;
    const CheckResult r = c->run(bounds);
    all_passed = all_passed && r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << c->name << " (" << r.cases << " cases)";
    if (!r.passed) out << ": " << r.counterexample;
    out << '\n';
  }
  return all_passed ? kExitOk : kExitFailure;
}

int run_series(const RunConfig& config, std::ostream& out, std::ostream&) {
  config.validate();
  const long k = require(config.dk, "--dk", "series");
  const long order = config.order.value_or(10);
  TSeries s;
  if (config.method == "kernel") {
    s = dk_kernel(k, order);
  } else if (config.method == "closed") {
    if (k == 0) {
      throw DomainError("the closed form for D_k needs k >= 1: at k = 0 its leading coefficient involves 1/(-1)!");
    }
    s = dk_closed(k, order);
  } else if (config.method == "recurrence") {
    s = dk_from_table(k, order);
  } else {
    throw UsageError("unknown method '" + config.method + "' (expected kernel, closed or recurrence)");
  }
  const auto& c = s.coeffs();
  switch (config.format) {
    case Format::kText:
      out << s.to_string() << '\n';
      break;
    case Format::kCsv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < c.size(); ++i) out << i << ',' << c[i].get_str() << '\n';
      break;
    case Format::kBfile:
      for (std::size_t i = 0; i < c.size(); ++i) out << i << ' ' << c[i].get_str() << '\n';
      break;
    case Format::kJson: {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& x : c) coeffs.push_back(x.get_str());
      out << nlohmann::json{{"dk", k}, {"method", config.method}, {"order", order}, {"coefficients", coeffs}}.dump(1)
          << '\n';
      break;
    }
  }
  return kExitOk;
}

int run_oracle(const RunConfig& config, std::ostream& out, std::ostream&) {
  config.validate();
  const long n = require(config.n, "--n", "oracle");
  const long k = require(config.k, "--k", "oracle");
  const int ni = static_cast<int>(n), ki = static_cast<int>(k);
  Nat brute, fast;
  std::string label = config.seq + "(" + std::to_string(n);
  if (config.seq == "a") {
    brute = a_brute(ni, ki);
    fast = a_rec(n, k);
  } else if (config.seq == "b") {
    brute = b_brute(ni, ki);
    fast = b(n, k);
  } else if (config.seq == "b3") {
    const long m = require(config.m, "--m", "oracle --seq b3");
    brute = b3_brute(ni, static_cast<int>(m), ki);
    fast = b3(n, m, k);
    label += "," + std::to_string(m);
  } else if (config.seq == "f") {
    brute = sum_family(ni, ki, build_F);
    fast = f_closed(n, k);
  } else if (config.seq == "ftilde") {
    brute = n >= 1 ? sum_family(ni, ki, build_Ftilde) : Nat(0);
    fast = n >= 1 ? ftilde(n, k) : Nat(0);
  } else if (config.seq == "u") {
    brute = sum_family(ni, ki, build_U);
    fast = u_from_b(n, k);
  } else {
    throw UsageError("oracle supports a, b, b3, f, ftilde and u; got '" + config.seq + "'");
  }
  label += "," + std::to_string(k) + ")";
  const bool agree = brute == fast;
  out << label << " brute=" << brute.get_str() << " fast=" << fast.get_str() << ' ' << (agree ? "agree" : "DISAGREE")
      << '\n';
  return agree ? kExitOk : kExitFailure;
}

int run_crosscheck(const RunConfig& config, std::ostream& out, std::ostream& err) {
  config.validate();
  if (config.map.empty()) throw UsageError("crosscheck needs --map");
  const OeisMap& map = find_map(config.map);
  const std::string id = config.oeis.empty() ? map.oeis_id : config.oeis;
  if (id != map.oeis_id) err << "warning: map " << map.name << " is registered against " << map.oeis_id << '\n';
  const long nmax = config.nmax.value_or(100);
  const FetchedBFile file = fetch_bfile(id, config.offline, resolve_fixture_dir(config.fixture_dir), err);
  const CrosscheckReport r = crosscheck(map, file.entries, nmax);
  out << id << " vs " << map.name << ": offset " << r.offset << ", " << r.compared << " terms";
  if (r.compared > 0) out << " (" << r.first << ".." << r.last << ")";
  out << ", " << (r.passed ? "pass" : "FAIL: " + r.mismatch) << '\n';
  out << "source: " << file.source << '\n';
  return r.passed ? kExitOk : kExitFailure;
}

int run_asym(const RunConfig& config, std::ostream& out, std::ostream&) {
  config.validate();
  const long k = config.k.value_or(0);
  std::vector<long> ns;
  if (config.n) {
    ns.push_back(*config.n);
  } else {
    const long nmax = require(config.nmax, "--n or --nmax", "asym");
    for (long n = 50; n <= nmax; n *= 2) ns.push_back(n);
    if (ns.empty()) ns.push_back(nmax);
  }
  if (config.format == Format::kCsv) out << "n,k,log_exact,log_asym,rel_error\n";
  for (long n : ns) {
    if (n < 1 || k >= n) throw UsageError("asym needs 0 <= k < n");
    const double le = log_abs(tc(n, k));
    const double la = tc_asym_log(n, k);
    const double re = asym_relative_error(n, k);
    std::ostringstream line;
    line << std::setprecision(12);
    if (config.format == Format::kCsv) {
      line << n << ',' << k << ',' << le << ',' << la << ',' << re;
    } else {
      line << "n=" << n << " k=" << k << " log_exact=" << le << " log_asym=" << la << " rel_error=" << re;
    }
    out << line.str() << '\n';
  }
  return kExitOk;
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.command == "table") return run_table(config, out, err);
    if (config.command == "verify") return run_verify(config, out, err);
    if (config.command == "series") return run_series(config, out, err);
    if (config.command == "oracle") return run_oracle(config, out, err);
    if (config.command == "crosscheck") return run_crosscheck(config, out, err);
    if (config.command == "asym") return run_asym(config, out, err);
    throw UsageError("unknown command '" + config.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact enumeration of Young tableaux with walls and tree-child networks"};
  app.name("walls");
  app.require_subcommand(1);

  RunConfig config;
  long nmax = 0, kmax = 0, n = 0, k = 0, m = 0, dk = 0, order = 0;
  std::string format = "text";
  const auto add_bound = [&](const char* flag, long& target, const char* help) {
    return app.add_option(flag, target, help);
  };
  auto* o_nmax = add_bound("--nmax", nmax, "Largest n");
  auto* o_kmax = add_bound("--kmax", kmax, "Largest k");
  auto* o_n = add_bound("--n", n, "Single n");
  auto* o_k = add_bound("--k", k, "Single k (fixed-k slice for table)");
  auto* o_m = add_bound("--m", m, "Single m for three-index sequences");
  auto* o_dk = add_bound("--dk", dk, "Index k of the series D_k");
  auto* o_order = add_bound("--order", order, "Truncation order");
  app.add_option("--seq", config.seq, "Sequence: a b b3 omega tc f ftilde u");
  app.add_option("--method", config.method, "Series method: kernel closed recurrence");
  app.add_option("--format", format, "Output format: text csv json bfile");
  app.add_flag("--diagonal", config.diagonal, "Diagonal slice (k = n, or k = n-1 for tc)");
  app.add_option("--check", config.check, "Verification check name, or all");
  app.add_option("--cache-dir", config.cache_dir, "Table cache directory (WALLS_CACHE_DIR overrides)");
  app.add_option("--oeis", config.oeis, "OEIS id, e.g. A000108");
  app.add_option("--map", config.map, "Slice to compare: b-k0 a-diag a-k1 b-k1");
  app.add_flag("--offline", config.offline, "Skip the network and read bundled b-files");
  app.add_option("--fixture-dir", config.fixture_dir, "Directory of bundled b-files (or WALLS_OEIS_DIR)");

  const char* commands[][2] = {
      {"table", "Print a table of exact values"},
      {"verify", "Run identity checks from the registry"},
      {"series", "Print coefficients of D_k"},
      {"oracle", "Compare a brute-force linear-extension count with the fast path"},
      {"crosscheck", "Compare a table slice with an OEIS b-file"},
      {"asym", "Compare tree-child counts with their asymptotic expansion"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'walls --help' for usage\n";
    return kExitUsage;
  }

  config.command = app.get_subcommands().front()->get_name();
  const std::pair<CLI::Option*, std::pair<std::optional<long>*, long>> bounds[] = {
      {o_nmax, {&config.nmax, nmax}},
      {o_kmax, {&config.kmax, kmax}},
      {o_n, {&config.n, n}},
      {o_k, {&config.k, k}},
      {o_m, {&config.m, m}},
      {o_dk, {&config.dk, dk}},
      {o_order, {&config.order, order}},
  };
  for (const auto& [opt, target] : bounds) {
    if (opt->count() > 0) *target.first = target.second;
  }
  try {
    config.format = parse_format(format);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return execute(config, out, err);
}

}  // namespace walls::cli
