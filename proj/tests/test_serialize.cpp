#include <gtest/gtest.h>

#include <stdexcept>

#include "diffset/reproduce.hpp"
#include "serialize.hpp"

using namespace diffset;
using io::Json;

TEST(Serialize, ElementsUseIntegersForCyclicGroups) {
  const GroupSpec z(std::vector<std::uint32_t>{13});
  EXPECT_EQ(io::element_to_json(z, 5), Json(5));
  EXPECT_EQ(io::element_from_json(z, Json(5)), 5u);
  EXPECT_EQ(io::element_from_json(z, Json::array({5})), 5u);
  const GroupSpec g({2, 8});
  EXPECT_EQ(io::element_to_json(g, 12), Json::array({1, 4}));
  EXPECT_EQ(io::element_from_json(g, Json::array({1, 4})), 12u);
  EXPECT_THROW(io::element_from_json(g, Json::array({2, 0})), std::invalid_argument);
  EXPECT_THROW(io::element_from_json(g, Json::array({1})), std::invalid_argument);
  EXPECT_THROW(io::element_from_json(z, Json(13)), std::invalid_argument);
  EXPECT_THROW(io::set_from_json(z, Json::array({1, 1})), std::invalid_argument);
}

TEST(Serialize, RecordRoundTrip) {
  for (const auto& r : sporadic_records()) {
    const SetRecord rec{r.group, r.group.to_indices(r.set), r.id};
    const Json j = io::record_to_json(rec);
    const SetRecord back = io::record_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.group, rec.group);
    EXPECT_EQ(back.set, rec.set);
    EXPECT_EQ(back.label, rec.label);
    EXPECT_EQ(io::record_to_json(back), j);
  }
  EXPECT_THROW(io::record_from_json(Json::parse(R"({"group":[4],"set":[[0,0]]})")), std::invalid_argument);
  EXPECT_THROW(io::record_from_json(Json::parse(R"({"set":[1]})")), std::exception);
  EXPECT_EQ(io::database_from_json(Json::parse(R"({"records":[{"group":[7],"set":[1,2,4]}]})")).size(), 1u);
  EXPECT_EQ(io::database_from_json(Json::parse(R"([{"group":[7],"set":[1,2,4]}])")).size(), 1u);
}

TEST(Serialize, ClassificationRoundTrip) {
  const std::vector<std::pair<GroupSpec, IndexSet>> sets = {
      {GroupSpec::cyclic(23), paley(23)},
      {GroupSpec::cyclic(14), {0, 1, 4, 6}},
      {GroupSpec::cyclic(10), {0, 1, 2, 3}},
  };
  for (const auto& [g, s] : sets) {
    const Classification c = classify(g, s);
    EXPECT_EQ(io::classification_from_json(Json::parse(io::classification_to_json(c).dump())), c);
  }
  const Json ads = io::classification_to_json(classify(GroupSpec::cyclic(14), IndexSet{0, 1, 4, 6}));
  EXPECT_EQ(ads.dump(), R"({"kind":"ADS","v":14,"k":4,"lambda":0,"t":1,"t_hat":1})");
}

TEST(Serialize, SearchReportRoundTrip) {
  SearchReport r;
  r.status = SearchStatus::Exists;
  r.witness = {0, 1, 4, 6};
  r.witnesses = {{0, 1, 4, 6}, {0, 1, 3, 8}};
  r.count = 2;
  r.nodes = 99;
  r.seconds = 0.25;
  const SearchReport back = io::search_report_from_json(Json::parse(io::search_report_to_json(r).dump()));
  EXPECT_EQ(back.status, r.status);
  EXPECT_EQ(back.witness, r.witness);
  EXPECT_EQ(back.witnesses, r.witnesses);
  EXPECT_EQ(back.count, r.count);
  EXPECT_EQ(back.nodes, r.nodes);
  EXPECT_DOUBLE_EQ(back.seconds, r.seconds);
  SearchReport none;
  EXPECT_TRUE(io::search_report_to_json(none)["witness"].is_null());
  EXPECT_EQ(io::search_report_from_json(io::search_report_to_json(none)).status, SearchStatus::None);
}

TEST(Serialize, NormSolutionsUseDecimalStrings) {
  const auto sols = enumerate_norm_solutions(4, 8, 1);
  const Json j = io::norm_solution_to_json(sols[7]);
  EXPECT_EQ(j["p"], "104411704393");
  EXPECT_EQ(j["primality"], "prime");
}

TEST(Reproduce, FastTargetsPass) {
  for (const std::string t : {"table2", "table1-scan", "octic-tables"}) {
    const ReproduceResult r = reproduce(t);
    EXPECT_EQ(r.outcome, ReproduceOutcome::Pass) << t;
    EXPECT_FALSE(r.artifacts.empty());
    for (const auto& line : r.lines) EXPECT_NE(line.rfind("FAIL", 0), 0u) << line;
    for (const auto& a : r.artifacts)
      if (a.name.ends_with(".json")) {
        EXPECT_NO_THROW(Json::parse(a.content)) << a.name;
      }
  }
}

TEST(Reproduce, SmallSpectraAndGrid) {
  ReproduceOptions o;
  o.kmax = 6;
  o.vmax = 12;
  EXPECT_EQ(reproduce("mgr-spectra", o).outcome, ReproduceOutcome::Pass);
  const ReproduceResult g = reproduce("grid", o);
  EXPECT_EQ(g.outcome, ReproduceOutcome::Pass);
  ASSERT_EQ(g.artifacts.size(), 2u);
  EXPECT_EQ(g.artifacts[0].name, "grid.csv");
}

TEST(Reproduce, TinyBudgetGivesTimeout) {
  ReproduceOptions o;
  o.vmax = 24;
  o.budget.node_limit = 1;
  EXPECT_EQ(reproduce("grid", o).outcome, ReproduceOutcome::Timeout);
  EXPECT_THROW(reproduce("table9"), std::invalid_argument);
}
