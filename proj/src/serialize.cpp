#include "serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffset::io {

namespace {

std::uint32_t as_u32(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > 0xFFFFFFFFLL) throw std::invalid_argument(std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

std::string big(const BigInt& n) { return n.str(); }

Json optional_params(const std::optional<AdsParams>& p) { return p ? params_to_json(*p) : Json(nullptr); }

}  // namespace

Json group_to_json(const GroupSpec& group) {
  Json j = Json::array();
  for (const auto n : group.orders()) j.push_back(n);
  return j;
}

GroupSpec group_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("group must be a nonempty array of factor orders");
  std::vector<std::uint32_t> orders;
  for (const auto& n : j) orders.push_back(as_u32(n, "factor order"));
  return GroupSpec(std::move(orders));
}

Json element_to_json(const GroupSpec& group, std::uint32_t index) {
  if (group.factor_count() == 1) return Json(index);
  Json j = Json::array();
  for (const auto c : group.element_at(index).coords) j.push_back(c);
  return j;
}

std::uint32_t element_from_json(const GroupSpec& group, const Json& j) {
  if (j.is_number_integer()) {
    if (group.factor_count() != 1) throw std::invalid_argument("plain integer elements need a single-factor group");
    const std::uint32_t x = as_u32(j, "element");
    if (x >= group.order()) throw std::invalid_argument("element " + std::to_string(x) + " is not reduced");
    return x;
  }
  if (!j.is_array()) throw std::invalid_argument("element must be an integer or coordinate array");
  GroupElement e;
  for (const auto& c : j) e.coords.push_back(as_u32(c, "coordinate"));
  return group.index_of(e);
}

Json set_to_json(const GroupSpec& group, std::span<const std::uint32_t> set) {
  Json j = Json::array();
  for (const auto x : set) j.push_back(element_to_json(group, x));
  return j;
}

IndexSet set_from_json(const GroupSpec& group, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("set must be an array");
  IndexSet out;
  for (const auto& e : j) out.push_back(element_from_json(group, e));
  return normalized_set(out, group.order());
}

SetRecord record_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("set"))
    throw std::invalid_argument("record needs \"group\" and \"set\"");
  SetRecord r{group_from_json(j.at("group")), {}, {}};
  r.set = set_from_json(r.group, j.at("set"));
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw std::invalid_argument("label must be a string");
    r.label = j.at("label").get<std::string>();
  }
  return r;
}

Json record_to_json(const SetRecord& record) {
  Json j;
  j["group"] = group_to_json(record.group);
  j["set"] = set_to_json(record.group, record.set);
  if (!record.label.empty()) j["label"] = record.label;
  return j;
}

std::vector<SetRecord> database_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("records")) throw std::invalid_argument("database object needs a \"records\" array");
    arr = &j.at("records");
  }
  if (!arr->is_array()) throw std::invalid_argument("database must be an array of records");
  std::vector<SetRecord> out;
  for (const auto& r : *arr) out.push_back(record_from_json(r));
  return out;
}

Json params_to_json(const AdsParams& p) {
  Json j;
  j["v"] = p.v;
  j["k"] = p.k;
  j["lambda"] = p.lambda;
  j["t"] = p.t;
  j["t_hat"] = p.t_hat();
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  j["v"] = c.v;
  j["k"] = c.k;
  if (c.kind == SetKind::DifferenceSet) {
    j["lambda"] = c.params.lambda;
  } else if (c.kind == SetKind::AlmostDifferenceSet) {
    j["lambda"] = c.params.lambda;
    j["t"] = c.params.t;
    j["t_hat"] = c.params.t_hat();
  }
  return j;
}

Classification classification_from_json(const Json& j) {
  Classification c;
  const std::string kind = j.at("kind").get<std::string>();
  c.v = j.at("v").get<std::uint64_t>();
  c.k = j.at("k").get<std::uint64_t>();
  if (kind == "DS") {
    c.kind = SetKind::DifferenceSet;
    c.params = AdsParams{c.v, c.k, j.at("lambda").get<std::uint64_t>(), c.v - 1};
  } else if (kind == "ADS") {
    c.kind = SetKind::AlmostDifferenceSet;
    c.params = AdsParams{c.v, c.k, j.at("lambda").get<std::uint64_t>(), j.at("t").get<std::uint64_t>()};
  } else if (kind == "NONE") {
    c.kind = SetKind::None;
  } else {
    throw std::invalid_argument("unknown classification kind '" + kind + "'");
  }
  return c;
}

Json extension_report_to_json(const ExtensionReport& r) {
  Json j;
  j["group"] = group_to_json(r.group);
  j["set"] = set_to_json(r.group, r.set);
  j["base"] = classification_to_json(r.base);
  auto list = [&](const std::vector<Extension>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) {
      Json e;
      e["element"] = element_to_json(r.group, x.element);
      e["result"] = classification_to_json(x.result);
      e["degenerate"] = x.degenerate;
      a.push_back(std::move(e));
    }
    return a;
  };
  j["addable"] = list(r.addable);
  j["removable"] = list(r.removable);
  return j;
}

Json scan_result_to_json(const ScanResult& r, std::span<const SetRecord> records) {
  Json j;
  Json reports = Json::array();
  for (const auto& [index, rep] : r.reports) {
    Json e;
    e["index"] = index;
    if (!records[index].label.empty()) e["label"] = records[index].label;
    e["report"] = extension_report_to_json(rep);
    reports.push_back(std::move(e));
  }
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json e;
    e["index"] = f.index;
    if (!f.label.empty()) e["label"] = f.label;
    e["error"] = f.message;
    failures.push_back(std::move(e));
  }
  j["records"] = records.size();
  j["reports"] = std::move(reports);
  j["failures"] = std::move(failures);
  return j;
}

Json complement_to_json(const GroupSpec& group, const ComplementResult& r) {
  Json j;
  j["group"] = group_to_json(group);
  j["set"] = set_to_json(group, r.set);
  j["original"] = classification_to_json(r.original);
  j["complement"] = classification_to_json(r.complement);
  j["predicted"] = params_to_json(r.predicted);
  return j;
}

Json search_report_to_json(const SearchReport& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["witness"] = r.witness.empty() ? Json(nullptr) : Json(r.witness);
  j["count"] = r.count;
  j["nodes"] = r.nodes;
  j["seconds"] = r.seconds;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

SearchReport search_report_from_json(const Json& j) {
  SearchReport r;
  const std::string status = j.at("status").get<std::string>();
  bool known = false;
  for (const auto s : {SearchStatus::Exists, SearchStatus::DsOnly, SearchStatus::None, SearchStatus::Timeout}) {
    if (to_string(s) == status) {
      r.status = s;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown search status '" + status + "'");
  if (!j.at("witness").is_null()) r.witness = j.at("witness").get<std::vector<std::uint32_t>>();
  r.count = j.at("count").get<std::uint64_t>();
  r.nodes = j.at("nodes").get<std::uint64_t>();
  r.seconds = j.at("seconds").get<double>();
  if (j.contains("witnesses")) r.witnesses = j.at("witnesses").get<std::vector<std::vector<std::uint32_t>>>();
  return r;
}

Json spectrum_to_json(const Spectrum& s) {
  Json j;
  j["k"] = s.k;
  j["golomb_length"] = golomb_length(s.k);
  j["bound"] = s.bound;
  j["first_searched"] = s.first_searched;
  j["members"] = s.members;
  Json w = Json::array();
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    Json e;
    e["v"] = s.members[i];
    e["marks"] = s.witnesses[i];
    w.push_back(std::move(e));
  }
  j["witnesses"] = std::move(w);
  j["timeouts"] = s.timeouts;
  j["complete"] = s.complete();
  j["nodes"] = s.nodes;
  std::string text = "{";
  for (std::size_t i = 0; i < s.members.size(); ++i) text += (i ? "," : "") + std::to_string(s.members[i]);
  text += "} U {v >= " + std::to_string(s.bound) + "}";
  j["spectrum"] = text;
  return j;
}

Json relative_ds_to_json(const RelativeDsCheck& r) {
  Json j;
  j["v"] = r.v;
  j["m"] = r.m;
  j["n"] = 2;
  j["k"] = r.set.size();
  j["lambda"] = 1;
  j["set"] = r.set;
  j["forbidden"] = r.forbidden;
  j["verified"] = r.verified;
  return j;
}

Json ryser_to_json(const RyserVerdict& r) {
  Json j;
  j["pass"] = r.pass;
  j["reason"] = r.reason;
  return j;
}

Json grid_cell_to_json(const GridCell& c) {
  Json j;
  j["v"] = c.v;
  j["k"] = c.k;
  j["lambda"] = c.forced.lambda;
  j["t"] = c.forced.t;
  j["t_hat"] = c.forced.t_hat;
  j["status"] = to_string(c.status);
  j["witness"] = c.witness.empty() ? Json(nullptr) : Json(c.witness);
  j["via_complement"] = c.via_complement;
  j["nodes"] = c.nodes;
  return j;
}

Json table_to_json(const CyclotomicTable& t) {
  Json j;
  j["p"] = t.p;
  j["e"] = t.e;
  j["f"] = t.f;
  j["generator"] = t.g;
  j["numbers"] = t.numbers;
  j["total"] = t.total();
  return j;
}

Json quad_reps_to_json(const QuadReps& r) {
  Json j;
  j["x"] = r.x;
  j["y"] = r.y;
  j["a"] = r.a;
  j["b"] = r.b;
  j["sign_convention"] = r.sign_convention;
  if (r.generator != 0) j["generator"] = r.generator;
  Json m = Json::array();
  for (const auto& [sy, sb] : r.matching_signs) m.push_back(Json::array({sy, sb}));
  j["matching_signs"] = std::move(m);
  return j;
}

Json ds_verdict_to_json(std::uint64_t p, const OcticDsVerdict& v) {
  Json j;
  j["p"] = p;
  j["is_ds"] = v.is_ds;
  if (v.is_ds) {
    j["k"] = (p - 1) / 8;
    j["lambda"] = v.lambda;
  }
  j["reason"] = v.reason;
  j["verified_directly"] = v.verified_directly;
  return j;
}

Json octic_classification_to_json(const OcticClassification& c) {
  Json j;
  j["p"] = c.p;
  j["type"] = to_string(c.type);
  j["ads"] = optional_params(c.ads);
  j["condition"] = c.condition;
  j["verified_direct"] = c.verified_direct;
  j["verified_full"] = c.verified_full;
  return j;
}

Json octic_scan_to_json(std::span<const OcticScanEntry> entries, std::uint64_t max_p) {
  Json j;
  j["max_p"] = max_p;
  Json a = Json::array();
  for (const auto& e : entries) {
    Json r;
    r["p"] = e.p;
    r["type_O"] = optional_params(e.type_o);
    r["type_O0"] = optional_params(e.type_o0);
    r["ds_lambda"] = e.ds_lambda ? Json(*e.ds_lambda) : Json(nullptr);
    a.push_back(std::move(r));
  }
  j["entries"] = std::move(a);
  return j;
}

Json system_row_to_json(const OcticSystemRow& r) {
  Json j;
  j["a"] = r.a;
  j["x"] = r.x;
  j["y"] = r.y ? Json(*r.y) : Json(nullptr);
  j["b"] = r.b ? Json(*r.b) : Json(nullptr);
  j["norm"] = r.norm;
  j["factors"] = r.factorization;
  j["letters"] = r.letters;
  j["pattern"] = r.pattern;
  j["representable"] = r.representable;
  j["prime_capable"] = r.prime_capable;
  j["p"] = r.p ? Json(*r.p) : Json(nullptr);
  j["status"] = r.status;
  j["note"] = r.note;
  return j;
}

std::string certainty_name(PrimeCertainty c) {
  switch (c) {
    case PrimeCertainty::Composite: return "composite";
    case PrimeCertainty::Prime: return "prime";
    case PrimeCertainty::ProbablePrime: return "probable_prime";
  }
  return "?";
}

Json norm_solution_to_json(const NormSolution& s) {
  Json j;
  j["b"] = big(s.b);
  j["y"] = big(s.y);
  j["seed"] = s.seed;
  j["index"] = s.index;
  j["p"] = big(s.p);
  j["primality"] = certainty_name(s.certainty);
  return j;
}

}  // namespace diffset::io
