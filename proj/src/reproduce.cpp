#include "diffset/reproduce.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "diffset/adsearch.hpp"
#include "diffset/cyclotomy.hpp"
#include "diffset/diffcore.hpp"
#include "diffset/extend.hpp"
#include "diffset/families.hpp"
#include "diffset/mgr.hpp"
#include "serialize.hpp"

namespace diffset {

std::string to_string(ReproduceOutcome outcome) {
  switch (outcome) {
    case ReproduceOutcome::Pass: return "PASS";
    case ReproduceOutcome::Mismatch: return "MISMATCH";
    case ReproduceOutcome::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::vector<std::string> reproduce_targets() { return {"table2", "table1-scan", "mgr-spectra", "octic-tables", "grid"}; }

namespace {

using io::Json;

struct Checker {
  ReproduceResult& result;

  void check(bool ok, const std::string& what, const std::string& detail = {}) {
    result.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what + (detail.empty() ? "" : ": " + detail));
    if (!ok) result.outcome = ReproduceOutcome::Mismatch;
  }

  void timeout(const std::string& what) {
    result.lines.push_back("TIMEOUT " + what);
    if (result.outcome == ReproduceOutcome::Pass) result.outcome = ReproduceOutcome::Timeout;
  }
};

std::string params_string(std::uint64_t v, std::uint64_t k, std::uint64_t lambda, std::uint64_t t) {
  return "(" + std::to_string(v) + "," + std::to_string(k) + "," + std::to_string(lambda) + "," + std::to_string(t) +
         ")";
}

std::string class_string(const Classification& c) {
  if (c.kind == SetKind::None) return "NONE";
  if (c.kind == SetKind::DifferenceSet)
    return "DS(" + std::to_string(c.v) + "," + std::to_string(c.k) + "," + std::to_string(c.params.lambda) + ")";
  return "ADS" + params_string(c.v, c.k, c.params.lambda, c.params.t);
}

// Sets that earlier nonexistence tables missed: (v, k, lambda, t, elements of Z_v).
struct AdsRow {
  std::uint32_t v, k, lambda, t;
  std::vector<std::uint32_t> set;
};

const std::vector<AdsRow>& missed_ads() {
  static const std::vector<AdsRow> rows = {
      {39, 17, 7, 32, {1, 2, 3, 5, 9, 13, 16, 19, 21, 22, 24, 26, 27, 28, 31, 32, 33}},
      {48, 17, 5, 10, {1, 2, 3, 5, 7, 9, 10, 16, 17, 18, 21, 24, 27, 29, 30, 34, 39}},
      {48, 22, 9, 8, {1, 2, 3, 5, 6, 13, 19, 20, 21, 24, 25, 27, 28, 29, 31, 33, 34, 37, 39, 40, 42, 44}},
      {48, 23, 10, 11, {1, 2, 3, 4, 6, 7, 9, 10, 11, 15, 17, 18, 20, 22, 24, 25, 28, 29, 30, 34, 37, 40, 41}},
      {50, 20, 7, 12, {1, 2, 3, 5, 7, 8, 10, 12, 17, 18, 20, 21, 24, 25, 28, 29, 31, 37, 42, 43}},
  };
  return rows;
}

ReproduceResult run_table2() {
  ReproduceResult r{"table2", ReproduceOutcome::Pass, {}, {}};
  Checker ck{r};
  Json out = Json::array();
  for (const auto& row : missed_ads()) {
    const GroupSpec g = GroupSpec::cyclic(row.v);
    const Classification c = classify(g, row.set);
    const bool ok = c.is_ads() && c.params.lambda == row.lambda && c.params.t == row.t && c.k == row.k;
    ck.check(ok, "classify " + params_string(row.v, row.k, row.lambda, row.t), class_string(c));
    Json e;
    e["set"] = row.set;
    e["classification"] = io::classification_to_json(c);
    out.push_back(std::move(e));
  }
  r.artifacts.push_back({"table2.json", out.dump(2) + "\n"});
  return r;
}

ReproduceResult run_table1_scan(unsigned jobs) {
  ReproduceResult r{"table1-scan", ReproduceOutcome::Pass, {}, {}};
  Checker ck{r};
  std::vector<SetRecord> records;
  std::vector<const SporadicRecord*> sources;
  for (const auto& s : sporadic_records()) {
    if (!s.extension) continue;
    records.push_back({s.group, s.group.to_indices(s.set), s.id});
    sources.push_back(&s);
  }
  const ScanResult scan = scan_database(records, jobs);
  for (const auto& f : scan.failures) ck.check(false, "scan " + f.label, f.message);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SporadicRecord& src = *sources[i];
    const auto it = std::find_if(scan.reports.begin(), scan.reports.end(), [&](const auto& p) { return p.first == i; });
    if (it == scan.reports.end()) {
      ck.check(false, src.id, "no extension reported");
      continue;
    }
    const ExtensionReport& rep = it->second;
    const bool base_ok = rep.base.is_ds() && rep.base.params.lambda == src.params.lambda && rep.base.v == src.params.v &&
                         rep.base.k == src.params.k;
    ck.check(base_ok, src.id + " base", class_string(rep.base));
    const std::uint32_t want = src.group.index_of(*src.extension);
    const auto ext = std::find_if(rep.addable.begin(), rep.addable.end(),
                                  [&](const Extension& e) { return e.element == want; });
    const std::uint64_t v = src.params.v, k = src.params.k, lambda = src.params.lambda;
    const bool ext_ok = ext != rep.addable.end() && ext->result.is_ads() && ext->result.k == k + 1 &&
                        ext->result.params.lambda == lambda && ext->result.params.t == v - 1 - 2 * k;
    ck.check(ext_ok, src.id + " documented element addable",
             ext == rep.addable.end() ? "not found" : class_string(ext->result));
  }
  r.artifacts.push_back({"table1_scan.json", io::scan_result_to_json(scan, records).dump(2) + "\n"});
  return r;
}

// Published spectra below the Golomb bound, for the larger k.
std::vector<std::uint32_t> published_members(std::uint32_t k) {
  std::vector<std::uint32_t> m;
  auto range = [&](std::uint32_t lo, std::uint32_t hi) {
    for (std::uint32_t v = lo; v <= hi; ++v) m.push_back(v);
  };
  const std::uint32_t top = 2 * golomb_length(k);
  switch (k) {
    case 12: m = {133, 156, 158, 159}; range(161, top); break;
    case 13: m = {168, 183}; range(193, top); break;
    case 14: m = {183}; range(225, top); break;
    case 15: m = {255}; range(267, top); break;
    default: break;
  }
  return m;
}

std::string list_string(const std::vector<std::uint32_t>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

ReproduceResult run_mgr_spectra(const ReproduceOptions& o) {
  ReproduceResult r{"mgr-spectra", ReproduceOutcome::Pass, {}, {}};
  Checker ck{r};
  if (o.kmax < 3 || o.kmax > 15) throw std::invalid_argument("mgr-spectra: kmax must be in [3, 15]");
  Json out = Json::array();
  for (std::uint32_t k = 3; k <= o.kmax; ++k) {
    MgrSearchOptions opts;
    opts.budget = o.budget;
    opts.jobs = o.jobs;
    const Spectrum s = spectrum(k, opts);
    Json e = io::spectrum_to_json(s);
    for (const auto v : s.timeouts) ck.timeout("MGR(" + std::to_string(k) + ") at v = " + std::to_string(v));
    for (std::size_t i = 0; i < s.members.size(); ++i)
      ck.check(is_mgr(s.witnesses[i], s.members[i]) && is_canonical_affine(s.witnesses[i], s.members[i]),
               "MGR(" + std::to_string(k) + ") witness at v = " + std::to_string(s.members[i]));
    if (o.self_check && k <= 9) {
      opts.canonical = false;
      const Spectrum plain = spectrum(k, opts);
      for (const auto v : plain.timeouts)
        ck.timeout("MGR(" + std::to_string(k) + ") unpruned at v = " + std::to_string(v));
      if (s.complete() && plain.complete())
        ck.check(plain.members == s.members, "MGR(" + std::to_string(k) + ") pruned vs unpruned",
                 list_string(s.members) + " vs " + list_string(plain.members));
      e["unpruned_members"] = plain.members;
    }
    const auto published = published_members(k);
    if (!published.empty() && s.complete())
      ck.check(s.members == published, "MGR(" + std::to_string(k) + ") published spectrum",
               list_string(s.members) + " vs " + list_string(published));
    r.lines.push_back("INFO MGR(" + std::to_string(k) + ") = " + e["spectrum"].get<std::string>());
    out.push_back(std::move(e));
  }
  r.artifacts.push_back({"mgr_spectra.json", out.dump(2) + "\n"});
  return r;
}

using NormRow = std::tuple<std::int64_t, std::int64_t, std::int64_t>;  // (a, x, norm)

ReproduceResult run_octic_tables() {
  ReproduceResult r{"octic-tables", ReproduceOutcome::Pass, {}, {}};
  Checker ck{r};
  const std::set<NormRow> table_o = {{-7, 21, 196}, {9, -11, 20}, {1, 13, 84}, {1, -19, 180}, {-7, 5, -12}, {9, -27, 324}};
  const std::set<NormRow> table_o0 = {{-15, 45, 900}, {1, 13, 84}, {-7, 37, 660}, {-7, 5, -12}, {-15, 29, 308}, {1, -3, 4}};
  const std::map<std::int64_t, std::string> factors = {
      {196, "2^2*7^2"}, {20, "2^2*5"},  {84, "2^2*3*7"},       {180, "2^2*3^2*5"}, {-12, "-2^2*3"},
      {324, "2^2*3^4"}, {900, "2^2*3^2*5^2"}, {660, "2^2*3*5*11"}, {308, "2^2*7*11"}, {4, "2^2"}};
  Json out;
  for (const auto target : {OcticType::O, OcticType::O0}) {
    const auto rows = solve_octic_systems(OcticCase::P9Quartic, target);
    std::set<NormRow> got;
    std::set<std::int64_t> kept;
    bool norms_ok = true;
    for (const auto& row : rows) {
      got.insert({row.a, row.x, row.norm});
      norms_ok = norms_ok && 2 * row.norm == row.x * row.x - row.a * row.a;
      const auto f = factors.find(row.norm);
      norms_ok = norms_ok && f != factors.end() && f->second == row.factorization;
      if (row.status == "family" && row.prime_capable) kept.insert(row.norm);
    }
    const auto& want = target == OcticType::O ? table_o : table_o0;
    const std::string name = target == OcticType::O ? "type O" : "type O0";
    ck.check(got == want, name + " system rows (p = 9 mod 16, 2 quartic)", std::to_string(got.size()) + " rows");
    ck.check(norms_ok, name + " norms and factorizations");
    const std::set<std::int64_t> want_kept = target == OcticType::O ? std::set<std::int64_t>{196} : std::set<std::int64_t>{4};
    ck.check(kept == want_kept, name + " prime-capable families", "norm " + std::to_string(*want_kept.begin()));
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(io::system_row_to_json(row));
    out[to_string(target) + "_9Q"] = std::move(arr);
  }
  // The remaining cases only give isolated primes.
  const std::array<std::tuple<OcticCase, OcticType, std::set<std::uint64_t>>, 6> isolated = {{
      {OcticCase::P9NonQuartic, OcticType::O, {41}},
      {OcticCase::P9NonQuartic, OcticType::O0, {41}},
      {OcticCase::P1Quartic, OcticType::O, {}},
      {OcticCase::P1Quartic, OcticType::O0, {}},
      {OcticCase::P1NonQuartic, OcticType::O, {17}},
      {OcticCase::P1NonQuartic, OcticType::O0, {}},
  }};
  for (const auto& [c, target, want] : isolated) {
    const auto rows = solve_octic_systems(c, target);
    std::set<std::uint64_t> primes;
    bool families = false;
    for (const auto& row : rows) {
      if (row.status == "prime") primes.insert(*row.p);
      if (row.status == "family" && row.prime_capable) families = true;
    }
    std::string got = "{";
    for (const auto p : primes) got += (got.size() > 1 ? "," : "") + std::to_string(p);
    got += "}";
    ck.check(primes == want && !families, "type " + to_string(target) + " case " + to_string(c) + " primes", got);
    Json arr = Json::array();
    for (const auto& row : rows) arr.push_back(io::system_row_to_json(row));
    out[to_string(target) + "_" + to_string(c)] = std::move(arr);
  }
  r.artifacts.push_back({"octic_tables.json", out.dump(2) + "\n"});
  return r;
}

ReproduceResult run_grid(const ReproduceOptions& o) {
  ReproduceResult r{"grid", ReproduceOutcome::Pass, {}, {}};
  Checker ck{r};
  GridOptions g;
  g.v_max = o.vmax;
  g.search.budget = o.budget;
  g.search.jobs = o.jobs;
  const auto cells = existence_grid(g);
  std::size_t exists = 0, ds = 0, none = 0;
  bool witnesses_ok = true;
  for (const auto& c : cells) {
    if (c.status == SearchStatus::Timeout) ck.timeout("cell (" + std::to_string(c.v) + "," + std::to_string(c.k) + ")");
    if (c.status == SearchStatus::Exists) ++exists;
    if (c.status == SearchStatus::DsOnly) ++ds;
    if (c.status == SearchStatus::None) ++none;
    if (c.witness.empty()) continue;
    const Classification cl = classify(GroupSpec::cyclic(c.v), c.witness);
    const bool ok = c.status == SearchStatus::DsOnly
                        ? cl.is_ds() && cl.params.lambda == c.forced.lambda
                        : cl.is_ads() && cl.params.lambda == c.forced.lambda && cl.params.t == c.forced.t;
    if (!ok) {
      witnesses_ok = false;
      ck.check(false, "witness (" + std::to_string(c.v) + "," + std::to_string(c.k) + ")", class_string(cl));
    }
  }
  ck.check(witnesses_ok, "every witness has the forced parameters");
  r.lines.push_back("INFO " + std::to_string(cells.size()) + " cells: " + std::to_string(exists) + " ADS, " +
                    std::to_string(ds) + " DS, " + std::to_string(none) + " none");
  r.artifacts.push_back({"grid.csv", grid_to_csv(cells)});
  r.artifacts.push_back({"grid.txt", grid_to_text(cells)});
  return r;
}

}  // namespace

ReproduceResult reproduce(const std::string& target, const ReproduceOptions& options) {
  if (target == "table2") return run_table2();
  if (target == "table1-scan") return run_table1_scan(options.jobs);
  if (target == "mgr-spectra") return run_mgr_spectra(options);
  if (target == "octic-tables") return run_octic_tables();
  if (target == "grid") return run_grid(options);
  throw std::invalid_argument("unknown reproduce target '" + target + "'");
}

}  // namespace diffset
