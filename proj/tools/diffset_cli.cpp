// Command-line front end. Talks to the library only through the C API.
//
// Exit codes: 0 found / pass, 1 usage or parse error, 2 negative result
// (no set, NONE classification, reproduction mismatch), 3 budget exhausted.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "diffset/diffset.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNegative = 2;
constexpr int kExitBudget = 3;

struct Failure {
  int code;
};

bool pretty = false;

// Owns a string returned by the C API.
struct ApiString {
  char* p = nullptr;
  ~ApiString() { dset_string_free(p); }
  std::string str() const { return p != nullptr ? std::string(p) : std::string(); }
};

void check(dset_status s) {
  if (s == DSET_OK) return;
  std::cerr << "error: " << dset_last_error() << "\n";
  throw Failure{s == DSET_E_DOMAIN ? kExitNegative : kExitUsage};
}

void print_json(const std::string& text) {
  if (pretty)
    std::cout << Json::parse(text).dump(2) << "\n";
  else
    std::cout << text << "\n";
}

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "error: cannot open " << path << "\n";
      throw Failure{kExitUsage};
    }
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path.string() << "\n";
    throw Failure{kExitUsage};
  }
  out << content;
}

struct SubsetHandle {
  dset_subset* p = nullptr;
  ~SubsetHandle() { dset_subset_free(p); }
};

std::vector<std::uint32_t> parse_numbers(const std::string& text, const char* what) {
  std::vector<std::uint32_t> out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      const unsigned long long x = std::stoull(token, &used);
      if (used != token.size() || x > UINT32_MAX) throw std::invalid_argument(token);
      out.push_back(static_cast<std::uint32_t>(x));
    } catch (const std::exception&) {
      std::cerr << "error: bad number '" << token << "' in " << what << "\n";
      throw Failure{kExitUsage};
    }
    token.clear();
  };
  for (const char c : text) {
    if (c == ',' || c == ' ' || c == 'x' || c == 'X' || c == '\t') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return out;
}

// --group "2,8" or "2x8" or "[2,8]"; --set "1,2,4" (cyclic) or "0:1 1:3" or a JSON array.
std::string record_from_flags(const std::string& group, const std::string& set) {
  Json record;
  if (!group.empty() && group.front() == '[') {
    record["group"] = Json::parse(group);
  } else {
    record["group"] = parse_numbers(group, "--group");
  }
  if (!set.empty() && set.front() == '[') {
    record["set"] = Json::parse(set);
  } else {
    Json elements = Json::array();
    std::vector<std::string> items;
    std::string cur;
    for (const char c : set) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) items.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    if (!cur.empty()) items.push_back(cur);
    for (const auto& it : items) {
      if (it.find(':') != std::string::npos) {
        std::string coords = it;
        for (char& c : coords)
          if (c == ':') c = ',';
        elements.push_back(parse_numbers(coords, "--set"));
      } else {
        elements.push_back(parse_numbers(it, "--set").at(0));
      }
    }
    record["set"] = std::move(elements);
  }
  return record.dump();
}

unsigned default_jobs() {
  if (const char* env = std::getenv("DIFFSET_JOBS")) {
    try {
      const unsigned long n = std::stoul(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int search_exit(dset_search_status s) {
  switch (s) {
    case DSET_SEARCH_EXISTS:
    case DSET_SEARCH_DS_ONLY: return kExitOk;
    case DSET_SEARCH_NONE: return kExitNegative;
    case DSET_SEARCH_TIMEOUT: return kExitBudget;
  }
  return kExitUsage;
}

struct SearchFlags {
  bool all = false;
  bool count = false;
  double timeout = 0.0;
  std::uint64_t node_limit = 0;

  void add(CLI::App* app) {
    auto* a = app->add_flag("--all", all, "Collect every witness");
    auto* c = app->add_flag("--count", count, "Count witnesses");
    a->excludes(c);
    app->add_option("--timeout", timeout, "Wall-clock limit in seconds (0 = none)")->check(CLI::NonNegativeNumber);
    app->add_option("--node-limit", node_limit, "Node limit (0 = none)");
  }

  dset_search_options options(unsigned jobs) const {
    dset_search_options o;
    dset_search_options_init(&o);
    o.mode = all ? DSET_MODE_ALL : count ? DSET_MODE_COUNT : DSET_MODE_EXISTS;
    o.seconds = timeout;
    o.node_limit = node_limit;
    o.jobs = jobs;
    return o;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference sets, almost difference sets and modular Golomb rulers"};
  app.set_version_flag("--version", std::string(dset_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indent JSON output");
  unsigned jobs = default_jobs();
  app.add_option("--jobs", jobs, "Worker threads (default: DIFFSET_JOBS or available parallelism)")
      ->check(CLI::PositiveNumber);

  int exit_code = kExitOk;
  std::function<void()> action;

  // verify
  std::string verify_file, verify_group, verify_set;
  auto* verify = app.add_subcommand("verify", "Classify a set record (JSON from a file or stdin)");
  verify->add_option("file", verify_file, "Record file; '-' or omitted reads stdin");
  verify->add_option("--group", verify_group, "Factor orders, e.g. 2,8");
  verify->add_option("--set", verify_set, "Elements, e.g. 1,2,4 or 0:1,1:3 or a JSON array");
  verify->callback([&] {
    action = [&] {
      const std::string text =
          verify_group.empty() ? read_input(verify_file) : record_from_flags(verify_group, verify_set);
      SubsetHandle s;
      check(dset_subset_from_json(text.c_str(), &s.p));
      dset_kind kind;
      ApiString out;
      check(dset_classify(s.p, &kind, &out.p));
      print_json(out.str());
      exit_code = kind == DSET_KIND_NONE ? kExitNegative : kExitOk;
    };
  });

  // family
  std::string family_name, sporadic_id;
  std::uint64_t family_p = 0;
  bool family_zero = false;
  auto* family = app.add_subcommand("family", "Build a named family member and classify it");
  family->add_option("name", family_name, "paley, quartic_b, quartic_b0, octic_o, octic_o0, singer, sporadic")
      ->required();
  family->add_option("--p,--q", family_p, "Prime p (residue families) or q (singer)");
  family->add_option("--id", sporadic_id, "Sporadic record id (use 'list' to list them)");
  family->add_flag("--with-zero", family_zero, "Adjoin 0");
  family->callback([&] {
    action = [&] {
      SubsetHandle s;
      if (family_name == "sporadic") {
        if (sporadic_id.empty() || sporadic_id == "list") {
          ApiString out;
          check(dset_sporadic_list(&out.p));
          print_json(out.str());
          return;
        }
        check(dset_sporadic(sporadic_id.c_str(), &s.p));
      } else {
        if (family_p == 0) {
          std::cerr << "error: --p is required\n";
          throw Failure{kExitUsage};
        }
        check(dset_family(family_name.c_str(), family_p, family_zero ? 1 : 0, &s.p));
      }
      ApiString rec, cls;
      dset_kind kind;
      check(dset_subset_to_json(s.p, &rec.p));
      check(dset_classify(s.p, &kind, &cls.p));
      Json j = Json::parse(rec.str());
      j["classification"] = Json::parse(cls.str());
      print_json(j.dump());
      exit_code = kind == DSET_KIND_NONE ? kExitNegative : kExitOk;
    };
  });

  // extend
  std::string extend_group, extend_set, extend_file, scan_db;
  auto* extend = app.add_subcommand("extend", "Add/remove-element report for a difference set");
  extend->add_option("--group", extend_group, "Factor orders, e.g. 2,8");
  extend->add_option("--set", extend_set, "Elements");
  extend->add_option("--file", extend_file, "Record file instead of --group/--set");
  auto* scan = extend->add_subcommand("scan", "Scan a database of records");
  scan->add_option("--db", scan_db, "JSON database file")->required();
  extend->callback([&] {
    action = [&] {
      if (*scan) {
        const std::string text = read_input(scan_db);
        ApiString out;
        check(dset_extension_scan(text.c_str(), jobs, &out.p));
        print_json(out.str());
        const Json j = Json::parse(out.str());
        exit_code = j.at("failures").empty() ? kExitOk : kExitNegative;
        return;
      }
      if (extend_group.empty() && extend_file.empty()) {
        std::cerr << "error: give --group and --set, --file, or the scan subcommand\n";
        throw Failure{kExitUsage};
      }
      const std::string text =
          extend_group.empty() ? read_input(extend_file) : record_from_flags(extend_group, extend_set);
      SubsetHandle s;
      check(dset_subset_from_json(text.c_str(), &s.p));
      ApiString out;
      check(dset_extension_report(s.p, &out.p));
      print_json(out.str());
      const Json j = Json::parse(out.str());
      exit_code = j.at("addable").empty() && j.at("removable").empty() ? kExitNegative : kExitOk;
    };
  });

  // mgr
  auto* mgr = app.add_subcommand("mgr", "Modular Golomb rulers");
  mgr->require_subcommand(1);
  std::uint32_t mgr_v = 0, mgr_k = 0;
  bool mgr_no_canonical = false;
  SearchFlags mgr_flags;
  auto* mgr_search = mgr->add_subcommand("search", "Exhaustive (v, k)-MGR search");
  mgr_search->add_option("--v", mgr_v, "Modulus")->required();
  mgr_search->add_option("--k", mgr_k, "Marks")->required();
  mgr_search->add_flag("--no-canonical", mgr_no_canonical, "Disable affine canonicity pruning");
  mgr_flags.add(mgr_search);
  mgr_search->callback([&] {
    action = [&] {
      dset_search_options o = mgr_flags.options(jobs);
      o.canonical = mgr_no_canonical ? 0 : 1;
      dset_search_status status;
      ApiString out;
      check(dset_mgr_search(mgr_v, mgr_k, &o, &status, &out.p));
      print_json(out.str());
      exit_code = search_exit(status);
    };
  });
  std::uint32_t spec_k = 0;
  double spec_timeout = 0.0;
  bool spec_no_canonical = false;
  auto* mgr_spectrum = mgr->add_subcommand("spectrum", "MGR(k): every modulus admitting a (v, k)-MGR");
  mgr_spectrum->add_option("--k", spec_k, "Marks")->required()->check(CLI::Range(1u, 15u));
  mgr_spectrum->add_option("--timeout", spec_timeout, "Per-modulus limit in seconds");
  mgr_spectrum->add_flag("--no-canonical", spec_no_canonical, "Disable affine canonicity pruning");
  mgr_spectrum->callback([&] {
    action = [&] {
      dset_search_options o;
      dset_search_options_init(&o);
      o.seconds = spec_timeout;
      o.jobs = jobs;
      o.canonical = spec_no_canonical ? 0 : 1;
      int complete = 0;
      ApiString out;
      check(dset_mgr_spectrum(spec_k, &o, &complete, &out.p));
      print_json(out.str());
      exit_code = complete ? kExitOk : kExitBudget;
    };
  });
  std::uint32_t rds_k = 0;
  auto* mgr_rds = mgr->add_subcommand("rds", "Find a (k^2-k+2, k)-MGR and read it as a relative difference set");
  mgr_rds->add_option("--k", rds_k, "Marks")->required()->check(CLI::Range(2u, 15u));
  mgr_rds->callback([&] {
    action = [&] {
      const std::uint32_t v = rds_k * rds_k - rds_k + 2;
      dset_search_options o;
      dset_search_options_init(&o);
      o.jobs = jobs;
      dset_search_status status;
      ApiString search;
      check(dset_mgr_search(v, rds_k, &o, &status, &search.p));
      if (status != DSET_SEARCH_EXISTS) {
        print_json(search.str());
        exit_code = search_exit(status);
        return;
      }
      const auto marks = Json::parse(search.str()).at("witness").get<std::vector<std::uint32_t>>();
      ApiString rds, ryser, proj;
      check(dset_mgr_relative_ds(marks.data(), marks.size(), rds_k, &rds.p));
      const std::uint32_t m = v / 2;
      int pass = 0;
      check(dset_ryser_conditions(m, rds_k, 1, &pass, &ryser.p));
      check(dset_ryser_project(marks.data(), marks.size(), m, &proj.p));
      Json j;
      j["mgr"] = Json::parse(search.str());
      j["relative_ds"] = Json::parse(rds.str());
      j["ryser_conditions"] = Json::parse(ryser.str());
      j["projection"] = Json::parse(proj.str());
      print_json(j.dump());
    };
  });

  // ads
  auto* ads = app.add_subcommand("ads", "Almost difference sets in Z_v");
  ads->require_subcommand(1);
  std::uint32_t ads_v = 0, ads_k = 0;
  bool ads_no_prune = false;
  SearchFlags ads_flags;
  auto* ads_search = ads->add_subcommand("search", "Exhaustive search over necklaces");
  ads_search->add_option("--v", ads_v, "Group order")->required();
  ads_search->add_option("--k", ads_k, "Set size")->required();
  ads_search->add_flag("--no-prune", ads_no_prune, "Disable feasibility pruning");
  ads_flags.add(ads_search);
  ads_search->callback([&] {
    action = [&] {
      dset_search_options o = ads_flags.options(jobs);
      o.prune = ads_no_prune ? 0 : 1;
      dset_search_status status;
      ApiString out;
      check(dset_ads_search(ads_v, ads_k, &o, &status, &out.p));
      print_json(out.str());
      exit_code = search_exit(status);
    };
  });
  dset_grid_options grid_opts;
  dset_grid_options_init(&grid_opts);
  std::string grid_out, grid_format = "csv";
  bool grid_both = false;
  double grid_timeout = 0.0;
  auto* ads_grid = ads->add_subcommand("grid", "Existence grid over (v, k)");
  ads_grid->add_option("--vmin", grid_opts.v_min, "Smallest v")->check(CLI::Range(3u, 100000u));
  ads_grid->add_option("--vmax", grid_opts.v_max, "Largest v")->required();
  ads_grid->add_option("--kmin", grid_opts.k_min, "Smallest k");
  ads_grid->add_option("--kmax", grid_opts.k_max, "Largest k (0 = v - 2)");
  ads_grid->add_option("--timeout", grid_timeout, "Per-cell limit in seconds");
  ads_grid->add_flag("--both-halves", grid_both, "Search k > v/2 instead of deriving it from complements");
  ads_grid->add_option("--format", grid_format, "csv, text or json")
      ->check(CLI::IsMember({"csv", "text", "json"}));
  ads_grid->add_option("--out", grid_out, "Output file (default stdout)");
  ads_grid->callback([&] {
    action = [&] {
      grid_opts.search_both_halves = grid_both ? 1 : 0;
      grid_opts.search.seconds = grid_timeout;
      grid_opts.search.jobs = jobs;
      const dset_grid_format f =
          grid_format == "json" ? DSET_GRID_JSON : grid_format == "text" ? DSET_GRID_TEXT : DSET_GRID_CSV;
      std::size_t timeouts = 0;
      ApiString out;
      check(dset_ads_grid(&grid_opts, f, &timeouts, &out.p));
      if (grid_out.empty())
        std::cout << out.str() << (f == DSET_GRID_JSON ? "\n" : "");
      else
        write_file(grid_out, out.str());
      if (timeouts > 0) std::cerr << timeouts << " cell(s) ran out of budget\n";
      exit_code = timeouts > 0 ? kExitBudget : kExitOk;
    };
  });

  // octic
  auto* octic = app.add_subcommand("octic", "Octic cyclotomy");
  octic->require_subcommand(1);
  std::uint64_t table_p = 0, table_g = 0;
  std::uint32_t table_e = 8;
  auto* octic_table = octic->add_subcommand("table", "Cyclotomic numbers of order e");
  octic_table->add_option("--p", table_p, "Prime")->required();
  octic_table->add_option("--e", table_e, "Order (8 adds the closed form and its comparison)");
  octic_table->add_option("--g", table_g, "Primitive root (e != 8; default least)");
  octic_table->callback([&] {
    action = [&] {
      ApiString out;
      if (table_e == 8)
        check(dset_octic_table(table_p, &out.p));
      else
        check(dset_cyclotomic_table(table_p, table_e, table_g, &out.p));
      print_json(out.str());
    };
  });
  dset_octic_options oct_opts;
  dset_octic_options_init(&oct_opts);
  std::uint64_t classify_p = 0;
  auto* octic_classify = octic->add_subcommand("classify", "Types O and O0 and the DS test for one prime");
  octic_classify->add_option("--p", classify_p, "Prime")->required();
  octic_classify->add_option("--direct-limit", oct_opts.direct_limit, "Largest p verified by class counts");
  octic_classify->add_option("--full-limit", oct_opts.full_limit, "Largest p verified by a full difference count");
  octic_classify->callback([&] {
    action = [&] {
      ApiString out;
      check(dset_octic_classify(classify_p, &oct_opts, &out.p));
      print_json(out.str());
      const Json j = Json::parse(out.str());
      const bool any = !j["type_O"]["ads"].is_null() || !j["type_O0"]["ads"].is_null() || j["ds"]["is_ds"].get<bool>();
      exit_code = any ? kExitOk : kExitNegative;
    };
  });
  std::uint64_t scan_max = 0;
  dset_octic_options scan_opts;
  dset_octic_options_init(&scan_opts);
  auto* octic_scan = octic->add_subcommand("scan", "Scan primes p = 1 (mod 8) up to a bound");
  octic_scan->add_option("--max", scan_max, "Largest prime")->required();
  octic_scan->add_option("--direct-limit", scan_opts.direct_limit, "Largest p verified by class counts");
  octic_scan->add_option("--full-limit", scan_opts.full_limit, "Largest p verified by a full difference count");
  octic_scan->callback([&] {
    action = [&] {
      ApiString out;
      check(dset_octic_scan(scan_max, jobs, &scan_opts, &out.p));
      print_json(out.str());
    };
  });
  std::int64_t norms_n = 0;
  std::size_t norms_count = 10;
  std::optional<std::int64_t> norms_a;
  auto* octic_norms = octic->add_subcommand("norms", "Enumerate solutions of b^2 - 2y^2 = N");
  octic_norms->add_option("--N", norms_n, "Norm")->required();
  octic_norms->add_option("--count", norms_count, "Number of solutions");
  octic_norms->add_option("--a", norms_a, "The a of p = a^2 + 2b^2 (default: from the solver family of norm N)");
  octic_norms->callback([&] {
    action = [&] {
      ApiString out;
      check(dset_octic_norms(norms_n, norms_count, norms_a ? &*norms_a : nullptr, &out.p));
      print_json(out.str());
    };
  });
  std::string sys_case, sys_target;
  auto* octic_systems = octic->add_subcommand("systems", "Solve the two-valued linear systems for one case");
  octic_systems->add_option("--case", sys_case, "1Q, 1N, 9Q or 9N")->required();
  octic_systems->add_option("--target", sys_target, "O or O0")->required();
  octic_systems->callback([&] {
    action = [&] {
      ApiString out;
      check(dset_octic_systems(sys_case.c_str(), sys_target.c_str(), &out.p));
      print_json(out.str());
    };
  });

  // reproduce
  std::string repro_target, repro_out = "reproduce_out";
  dset_reproduce_options repro_opts;
  dset_reproduce_options_init(&repro_opts);
  bool repro_no_self_check = false;
  auto* repro = app.add_subcommand("reproduce", "Recompute a published table and compare");
  repro->add_option("target", repro_target, "table2, table1-scan, mgr-spectra, octic-tables, grid or all")
      ->required();
  repro->add_option("--kmax", repro_opts.kmax, "mgr-spectra: largest k")->check(CLI::Range(3u, 15u));
  repro->add_flag("--no-self-check", repro_no_self_check, "mgr-spectra: skip the unpruned repeat");
  repro->add_option("--vmax", repro_opts.vmax, "grid: largest v");
  repro->add_option("--timeout", repro_opts.seconds, "Per-search limit in seconds");
  repro->add_option("--node-limit", repro_opts.node_limit, "Per-search node limit");
  repro->add_option("--out", repro_out, "Artifact directory");
  repro->callback([&] {
    action = [&] {
      repro_opts.self_check = repro_no_self_check ? 0 : 1;
      repro_opts.jobs = jobs;
      std::vector<std::string> targets;
      if (repro_target == "all") {
        ApiString list;
        check(dset_reproduce_targets(&list.p));
        targets = Json::parse(list.str()).get<std::vector<std::string>>();
      } else {
        targets.push_back(repro_target);
      }
      std::filesystem::create_directories(repro_out);
      bool mismatch = false, timeout = false;
      for (const auto& t : targets) {
        dset_reproduce_outcome outcome;
        ApiString out;
        check(dset_reproduce(t.c_str(), &repro_opts, &outcome, &out.p));
        const Json j = Json::parse(out.str());
        std::cout << "== " << t << "\n";
        for (const auto& line : j.at("lines")) std::cout << line.get<std::string>() << "\n";
        for (const auto& a : j.at("artifacts")) {
          const std::filesystem::path path = std::filesystem::path(repro_out) / a.at("name").get<std::string>();
          write_file(path, a.at("content").get<std::string>());
          std::cout << "wrote " << path.string() << "\n";
        }
        std::cout << t << ": " << j.at("outcome").get<std::string>() << "\n";
        mismatch = mismatch || outcome == DSET_REPRODUCE_MISMATCH;
        timeout = timeout || outcome == DSET_REPRODUCE_TIMEOUT;
      }
      exit_code = mismatch ? kExitNegative : timeout ? kExitBudget : kExitOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (action) action();
  } catch (const Failure& f) {
    return f.code;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout.flush();
  return exit_code;
}
