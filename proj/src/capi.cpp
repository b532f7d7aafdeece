#include "diffset/diffset.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "diffset/adsearch.hpp"
#include "diffset/cyclotomy.hpp"
#include "diffset/diffcore.hpp"
#include "diffset/extend.hpp"
#include "diffset/families.hpp"
#include "diffset/mgr.hpp"
#include "diffset/reproduce.hpp"
#include "serialize.hpp"

struct dset_group {
  diffset::GroupSpec spec;
};

struct dset_subset {
  diffset::SetRecord record;
};

namespace {

using namespace diffset;
using io::Json;

thread_local std::string last_error;

dset_status fail(dset_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs `body` and maps exceptions to status codes.
template <class F>
dset_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const Json::parse_error& e) {
    return fail(DSET_E_PARSE, e.what());
  } catch (const Json::exception& e) {
    return fail(DSET_E_INVALID, e.what());
  } catch (const std::domain_error& e) {
    return fail(DSET_E_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DSET_E_INVALID, e.what());
  } catch (const std::out_of_range& e) {
    return fail(DSET_E_INVALID, e.what());
  } catch (const std::bad_alloc&) {
    return fail(DSET_E_ALLOC, "out of memory");
  } catch (const std::exception& e) {
    return fail(DSET_E_INTERNAL, e.what());
  } catch (...) {
    return fail(DSET_E_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  if (out != nullptr) *out = copy_string(j.dump());
}

SearchBudget budget_of(const dset_search_options& o) { return {o.node_limit, o.seconds}; }

SearchMode mode_of(int mode) {
  switch (mode) {
    case DSET_MODE_EXISTS: return SearchMode::Exists;
    case DSET_MODE_COUNT: return SearchMode::Count;
    case DSET_MODE_ALL: return SearchMode::All;
    default: throw std::invalid_argument("unknown search mode " + std::to_string(mode));
  }
}

dset_search_status status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Exists: return DSET_SEARCH_EXISTS;
    case SearchStatus::DsOnly: return DSET_SEARCH_DS_ONLY;
    case SearchStatus::None: return DSET_SEARCH_NONE;
    case SearchStatus::Timeout: return DSET_SEARCH_TIMEOUT;
  }
  return DSET_SEARCH_NONE;
}

dset_search_options options_or_default(const dset_search_options* options) {
  dset_search_options o;
  dset_search_options_init(&o);
  return options != nullptr ? *options : o;
}

OcticOptions octic_options_of(const dset_octic_options* options) {
  OcticOptions o;
  if (options != nullptr) {
    o.direct_limit = options->direct_limit;
    o.full_limit = options->full_limit;
  }
  return o;
}

OcticType parse_target(const std::string& s) {
  if (s == "O" || s == "o") return OcticType::O;
  if (s == "O0" || s == "o0") return OcticType::O0;
  throw std::invalid_argument("unknown target '" + s + "' (expected O or O0)");
}

dset_subset* new_subset(SetRecord record) { return new dset_subset{std::move(record)}; }

}  // namespace

extern "C" {

const char* dset_version(void) { return "1.0.0"; }

const char* dset_last_error(void) { return last_error.c_str(); }

void dset_string_free(char* s) { std::free(s); }

void dset_search_options_init(dset_search_options* options) {
  if (options == nullptr) return;
  *options = dset_search_options{DSET_MODE_EXISTS, 0, 0.0, 1, 1, 1};
}

void dset_grid_options_init(dset_grid_options* options) {
  if (options == nullptr) return;
  const GridOptions g;
  options->v_min = g.v_min;
  options->v_max = g.v_max;
  options->k_min = g.k_min;
  options->k_max = g.k_max;
  options->search_both_halves = g.search_both_halves ? 1 : 0;
  dset_search_options_init(&options->search);
}

void dset_octic_options_init(dset_octic_options* options) {
  if (options == nullptr) return;
  const OcticOptions o;
  options->direct_limit = o.direct_limit;
  options->full_limit = o.full_limit;
}

void dset_reproduce_options_init(dset_reproduce_options* options) {
  if (options == nullptr) return;
  const ReproduceOptions o;
  *options = dset_reproduce_options{o.kmax, o.self_check ? 1 : 0, o.vmax, 0, 0.0, o.jobs};
}

dset_status dset_group_create(const uint32_t* orders, size_t count, dset_group** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(orders, "orders");
    *out = new dset_group{GroupSpec(std::vector<std::uint32_t>(orders, orders + count))};
    return DSET_OK;
  });
}

void dset_group_free(dset_group* group) { delete group; }

uint32_t dset_group_order(const dset_group* group) { return group != nullptr ? group->spec.order() : 0; }

size_t dset_group_factor_count(const dset_group* group) { return group != nullptr ? group->spec.factor_count() : 0; }

dset_status dset_subset_create(const dset_group* group, const uint32_t* indices, size_t count, dset_subset** out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    if (count > 0) require(indices, "indices");
    IndexSet set = normalized_set(std::span<const std::uint32_t>(indices, count), group->spec.order());
    *out = new_subset({group->spec, std::move(set), ""});
    return DSET_OK;
  });
}

dset_status dset_subset_from_coords(const dset_group* group, const uint32_t* coords, size_t count, dset_subset** out) {
  return guarded([&] {
    require(group, "group");
    require(out, "out");
    const std::size_t r = group->spec.factor_count();
    if (count > 0) require(coords, "coords");
    std::vector<GroupElement> elements(count);
    for (std::size_t i = 0; i < count; ++i) elements[i].coords.assign(coords + i * r, coords + (i + 1) * r);
    *out = new_subset({group->spec, group->spec.to_indices(elements), ""});
    return DSET_OK;
  });
}

dset_status dset_subset_from_json(const char* record_json, dset_subset** out) {
  return guarded([&] {
    require(record_json, "record_json");
    require(out, "out");
    *out = new_subset(io::record_from_json(Json::parse(record_json)));
    return DSET_OK;
  });
}

dset_status dset_subset_to_json(const dset_subset* subset, char** json_out) {
  return guarded([&] {
    require(subset, "subset");
    emit(io::record_to_json(subset->record), json_out);
    return DSET_OK;
  });
}

void dset_subset_free(dset_subset* subset) { delete subset; }

size_t dset_subset_size(const dset_subset* subset) { return subset != nullptr ? subset->record.set.size() : 0; }

size_t dset_subset_indices(const dset_subset* subset, uint32_t* buffer, size_t capacity) {
  if (subset == nullptr) return 0;
  const auto& set = subset->record.set;
  for (std::size_t i = 0; i < set.size() && i < capacity && buffer != nullptr; ++i) buffer[i] = set[i];
  return set.size();
}

dset_status dset_classify(const dset_subset* subset, dset_kind* kind_out, char** json_out) {
  return guarded([&] {
    require(subset, "subset");
    const Classification c = classify(subset->record.group, subset->record.set);
    if (kind_out != nullptr)
      *kind_out = c.is_ds() ? DSET_KIND_DS : c.is_ads() ? DSET_KIND_ADS : DSET_KIND_NONE;
    emit(io::classification_to_json(c), json_out);
    return DSET_OK;
  });
}

dset_status dset_sumset(const dset_subset* subset, char** json_out) {
  return guarded([&] {
    require(subset, "subset");
    const GroupSpec& g = subset->record.group;
    const IndexSet s = sumset(g, subset->record.set);
    IndexSet missing = complement_set(g, s);
    Json j;
    j["group"] = io::group_to_json(g);
    j["sumset"] = io::set_to_json(g, s);
    j["missing"] = io::set_to_json(g, missing);
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_complement(const dset_subset* subset, dset_subset** complement_out, char** json_out) {
  return guarded([&] {
    require(subset, "subset");
    const ComplementResult r = complement(subset->record.group, subset->record.set);
    emit(io::complement_to_json(subset->record.group, r), json_out);
    if (complement_out != nullptr) *complement_out = new_subset({subset->record.group, r.set, ""});
    return DSET_OK;
  });
}

dset_status dset_extension_report(const dset_subset* subset, char** json_out) {
  return guarded([&] {
    require(subset, "subset");
    emit(io::extension_report_to_json(extension_report(subset->record.group, subset->record.set)), json_out);
    return DSET_OK;
  });
}

dset_status dset_extension_scan(const char* database_json, unsigned jobs, char** json_out) {
  return guarded([&] {
    require(database_json, "database_json");
    const auto records = io::database_from_json(Json::parse(database_json));
    emit(io::scan_result_to_json(scan_database(records, jobs == 0 ? 1 : jobs), records), json_out);
    return DSET_OK;
  });
}

dset_status dset_family(const char* name, uint64_t param, int with_zero, dset_subset** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto family = parse_family_name(name);
    if (!family) throw std::invalid_argument(std::string("unknown family '") + name + "'");
    FamilyInstance inst = make_family(*family, param, with_zero != 0);
    *out = new_subset({inst.group, std::move(inst.set), inst.description});
    return DSET_OK;
  });
}

dset_status dset_sporadic(const char* id, dset_subset** out) {
  return guarded([&] {
    require(id, "id");
    require(out, "out");
    const SporadicRecord& r = sporadic(id);
    *out = new_subset({r.group, r.group.to_indices(r.set), r.id});
    return DSET_OK;
  });
}

dset_status dset_sporadic_list(char** json_out) {
  return guarded([&] {
    Json a = Json::array();
    for (const auto& r : sporadic_records()) {
      Json e = io::record_to_json({r.group, r.group.to_indices(r.set), r.id});
      e["params"] = io::params_to_json(r.params);
      e["extension"] = r.extension ? io::element_to_json(r.group, r.group.index_of(*r.extension)) : Json(nullptr);
      a.push_back(std::move(e));
    }
    emit(a, json_out);
    return DSET_OK;
  });
}

dset_status dset_mgr_search(uint32_t v, uint32_t k, const dset_search_options* options,
                            dset_search_status* status_out, char** json_out) {
  return guarded([&] {
    const dset_search_options o = options_or_default(options);
    MgrSearchOptions m;
    m.mode = mode_of(o.mode);
    m.budget = budget_of(o);
    m.jobs = o.jobs == 0 ? 1 : o.jobs;
    m.canonical = o.canonical != 0;
    const SearchReport r = search_mgr(v, k, m);
    if (status_out != nullptr) *status_out = status_code(r.status);
    emit(io::search_report_to_json(r), json_out);
    return DSET_OK;
  });
}

dset_status dset_mgr_spectrum(uint32_t k, const dset_search_options* options, int* complete_out, char** json_out) {
  return guarded([&] {
    const dset_search_options o = options_or_default(options);
    MgrSearchOptions m;
    m.budget = budget_of(o);
    m.jobs = o.jobs == 0 ? 1 : o.jobs;
    m.canonical = o.canonical != 0;
    const Spectrum s = spectrum(k, m);
    if (complete_out != nullptr) *complete_out = s.complete() ? 1 : 0;
    emit(io::spectrum_to_json(s), json_out);
    return DSET_OK;
  });
}

dset_status dset_mgr_relative_ds(const uint32_t* marks, size_t count, uint32_t k, char** json_out) {
  return guarded([&] {
    if (count > 0) require(marks, "marks");
    emit(io::relative_ds_to_json(mgr_to_relative_ds(std::span<const std::uint32_t>(marks, count), k)), json_out);
    return DSET_OK;
  });
}

dset_status dset_ryser_conditions(uint64_t m, uint64_t k, uint64_t lambda, int* pass_out, char** json_out) {
  return guarded([&] {
    const RyserVerdict r = ryser_conditions(m, k, lambda);
    if (pass_out != nullptr) *pass_out = r.pass ? 1 : 0;
    emit(io::ryser_to_json(r), json_out);
    return DSET_OK;
  });
}

dset_status dset_ryser_project(const uint32_t* set, size_t count, uint32_t m, char** json_out) {
  return guarded([&] {
    if (count > 0) require(set, "set");
    const auto image = ryser_project(std::span<const std::uint32_t>(set, count), m);
    const Classification c = classify(GroupSpec::cyclic(m), image);
    Json j;
    j["m"] = m;
    j["image"] = image;
    j["classification"] = io::classification_to_json(c);
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_forced_params(uint64_t v, uint64_t k, char** json_out) {
  return guarded([&] {
    const ForcedParams f = forced_params(v, k);
    Json j;
    j["v"] = v;
    j["k"] = k;
    j["lambda"] = f.lambda;
    j["t"] = f.t;
    j["t_hat"] = f.t_hat;
    j["ds_only"] = f.ds_only(v);
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_ads_search(uint32_t v, uint32_t k, const dset_search_options* options,
                            dset_search_status* status_out, char** json_out) {
  return guarded([&] {
    const dset_search_options o = options_or_default(options);
    AdsSearchOptions a;
    a.mode = mode_of(o.mode);
    a.budget = budget_of(o);
    a.prune = o.prune != 0;
    a.jobs = o.jobs == 0 ? 1 : o.jobs;
    const SearchReport r = search_ads(v, k, a);
    if (status_out != nullptr) *status_out = status_code(r.status);
    Json j = io::search_report_to_json(r);
    const ForcedParams f = forced_params(v, k);
    j["v"] = v;
    j["k"] = k;
    j["lambda"] = f.lambda;
    j["t"] = f.t;
    j["t_hat"] = f.t_hat;
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_ads_grid(const dset_grid_options* options, dset_grid_format format, size_t* timeouts_out,
                          char** text_out) {
  return guarded([&] {
    dset_grid_options o;
    dset_grid_options_init(&o);
    if (options != nullptr) o = *options;
    GridOptions g;
    g.v_min = o.v_min;
    g.v_max = o.v_max;
    g.k_min = o.k_min;
    g.k_max = o.k_max;
    g.search_both_halves = o.search_both_halves != 0;
    g.search.budget = budget_of(o.search);
    g.search.prune = o.search.prune != 0;
    g.search.jobs = o.search.jobs == 0 ? 1 : o.search.jobs;
    const auto cells = existence_grid(g);
    if (timeouts_out != nullptr) {
      *timeouts_out = 0;
      for (const auto& c : cells) *timeouts_out += c.status == SearchStatus::Timeout ? 1 : 0;
    }
    std::string text;
    switch (format) {
      case DSET_GRID_JSON: {
        Json a = Json::array();
        for (const auto& c : cells) a.push_back(io::grid_cell_to_json(c));
        text = a.dump();
        break;
      }
      case DSET_GRID_CSV: text = grid_to_csv(cells); break;
      case DSET_GRID_TEXT: text = grid_to_text(cells); break;
      default: throw std::invalid_argument("unknown grid format");
    }
    if (text_out != nullptr) *text_out = copy_string(text);
    return DSET_OK;
  });
}

dset_status dset_cyclotomic_table(uint64_t p, uint32_t e, uint64_t g, char** json_out) {
  return guarded([&] {
    emit(io::table_to_json(cyclotomic_numbers(p, e, g)), json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_table(uint64_t p, char** json_out) {
  return guarded([&] {
    const QuadReps reps = sign_normalization(p);
    const CyclotomicTable enumerated = cyclotomic_numbers(p, 8, reps.generator);
    const CyclotomicTable closed = octic_closed_form(p, reps);
    Json j;
    j["p"] = p;
    j["case"] = to_string(octic_case(p));
    j["representations"] = io::quad_reps_to_json(reps);
    j["enumerated"] = io::table_to_json(enumerated);
    j["closed_form"] = io::table_to_json(closed);
    j["agree"] = enumerated == closed;
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_ds_test(uint64_t p, uint64_t direct_limit, int* is_ds_out, char** json_out) {
  return guarded([&] {
    const OcticDsVerdict v = octic_ds_test(p, direct_limit);
    if (is_ds_out != nullptr) *is_ds_out = v.is_ds ? 1 : 0;
    emit(io::ds_verdict_to_json(p, v), json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_classify(uint64_t p, const dset_octic_options* options, char** json_out) {
  return guarded([&] {
    const OcticOptions o = octic_options_of(options);
    Json j;
    j["p"] = p;
    j["type_O"] = io::octic_classification_to_json(classify_type_O(p, o));
    j["type_O0"] = io::octic_classification_to_json(classify_type_O0(p, o));
    j["ds"] = io::ds_verdict_to_json(p, octic_ds_test(p, o.direct_limit));
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_scan(uint64_t max_p, unsigned jobs, const dset_octic_options* options, char** json_out) {
  return guarded([&] {
    const auto entries = octic_scan(max_p, jobs == 0 ? 1 : jobs, octic_options_of(options));
    emit(io::octic_scan_to_json(entries, max_p), json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_norms(int64_t norm, size_t count, const int64_t* a, char** json_out) {
  return guarded([&] {
    std::int64_t a_value = 0;
    if (a != nullptr) {
      a_value = *a;
    } else {
      bool found = false;
      for (const auto c : {OcticCase::P9Quartic, OcticCase::P9NonQuartic, OcticCase::P1Quartic, OcticCase::P1NonQuartic})
        for (const auto t : {OcticType::O, OcticType::O0})
          for (const auto& row : solve_octic_systems(c, t))
            if (!found && row.status == "family" && row.prime_capable && row.norm == norm) {
              a_value = row.a;
              found = true;
            }
      if (!found) throw std::invalid_argument("no solver family has norm " + std::to_string(norm) + "; pass a");
    }
    const auto seeds = norm_seeds(norm);
    const auto solutions = enumerate_norm_solutions(norm, count, a_value);
    Json j;
    j["norm"] = norm;
    j["a"] = a_value;
    Json s = Json::array();
    for (const auto& [b, y] : seeds) s.push_back(Json::array({b, y}));
    j["seeds"] = std::move(s);
    Json sol = Json::array();
    Json primes = Json::array();
    for (const auto& x : solutions) {
      sol.push_back(io::norm_solution_to_json(x));
      if (x.certainty != PrimeCertainty::Composite) primes.push_back(x.p.str());
    }
    j["solutions"] = std::move(sol);
    j["primes"] = std::move(primes);
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_octic_systems(const char* case_name, const char* target, char** json_out) {
  return guarded([&] {
    require(case_name, "case_name");
    require(target, "target");
    const OcticCase c = parse_octic_case(case_name);
    const OcticType t = parse_target(target);
    Json rows = Json::array();
    for (const auto& row : solve_octic_systems(c, t)) rows.push_back(io::system_row_to_json(row));
    Json j;
    j["case"] = to_string(c);
    j["target"] = to_string(t);
    j["rows"] = std::move(rows);
    emit(j, json_out);
    return DSET_OK;
  });
}

dset_status dset_reproduce_targets(char** json_out) {
  return guarded([&] {
    emit(Json(reproduce_targets()), json_out);
    return DSET_OK;
  });
}

dset_status dset_reproduce(const char* target, const dset_reproduce_options* options,
                           dset_reproduce_outcome* outcome_out, char** json_out) {
  return guarded([&] {
    require(target, "target");
    dset_reproduce_options o;
    dset_reproduce_options_init(&o);
    if (options != nullptr) o = *options;
    ReproduceOptions r;
    r.kmax = o.kmax;
    r.self_check = o.self_check != 0;
    r.vmax = o.vmax;
    r.budget = {o.node_limit, o.seconds};
    r.jobs = o.jobs == 0 ? 1 : o.jobs;
    const ReproduceResult res = reproduce(target, r);
    if (outcome_out != nullptr)
      *outcome_out = res.outcome == ReproduceOutcome::Pass       ? DSET_REPRODUCE_PASS
                     : res.outcome == ReproduceOutcome::Mismatch ? DSET_REPRODUCE_MISMATCH
                                                                 : DSET_REPRODUCE_TIMEOUT;
    Json j;
    j["target"] = res.target;
    j["outcome"] = to_string(res.outcome);
    j["lines"] = res.lines;
    Json a = Json::array();
    for (const auto& art : res.artifacts) a.push_back(Json{{"name", art.name}, {"content", art.content}});
    j["artifacts"] = std::move(a);
    emit(j, json_out);
    return DSET_OK;
  });
}

}  // extern "C"
