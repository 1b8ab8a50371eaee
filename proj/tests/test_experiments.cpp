#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "majority/csv.hpp"
#include "majority/experiments.hpp"

using namespace majority;
namespace fs = std::filesystem;

namespace {

const char* kMinimalPlan =
    "schema = 1\n"
    "name = demo\n"
    "n = 10\n"
    "seeds = 1 2\n"
    "strategy = no-learning\n";

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

fs::path fresh_dir(const char* leaf) {
  const fs::path dir = fs::temp_directory_path() / "majority-tests" / leaf;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("minimal plan parses with defaults") {
  const ExperimentPlan plan = parse_plan(kMinimalPlan);
  CHECK(plan.name == "demo");
  CHECK(plan.n_values == std::vector<std::uint32_t>{10});
  CHECK(plan.seeds == std::vector<std::uint64_t>{1, 2});
  CHECK(!plan.horizon.has_value());
  CHECK(plan.record_stride == 1);
  CHECK(plan.out_dir.empty());
  REQUIRE(plan.strategies.size() == 1);
  CHECK(plan.strategies[0].kind == StrategyKind::NoLearning);
}

TEST_CASE("comments and flexible whitespace are accepted") {
  const ExperimentPlan plan = parse_plan(
      "# header comment\n"
      "schema = 1\n"
      "\n"
      "name=demo  # trailing comment\n"
      "n   =   10   20\n"
      "seeds = 5\n"
      "stride = 4\n"
      "strategy = polya m=3 move=free\n");
  CHECK(plan.n_values == std::vector<std::uint32_t>{10, 20});
  CHECK(plan.record_stride == 4);
  REQUIRE(plan.strategies.size() == 1);
  CHECK(plan.strategies[0].kind == StrategyKind::Polya);
  CHECK(plan.strategies[0].m == 3);
  CHECK(plan.strategies[0].polya_move_rule == PolyaMoveRule::Free);
}

TEST_CASE("parse failures carry the source position") {
  SUBCASE("missing required key reports file level") {
    try {
      parse_plan("name = demo\nn = 10\nseeds = 1\nstrategy = no-learning\n");
      FAIL("expected PlanParseError");
    } catch (const PlanParseError& e) {
      CHECK(e.line == 0);
      CHECK(std::string(e.what()).find("schema") != std::string::npos);
    }
  }
  SUBCASE("unknown key points at its line") {
    try {
      parse_plan("schema = 1\nname = demo\nbogus = 3\n");
      FAIL("expected PlanParseError");
    } catch (const PlanParseError& e) {
      CHECK(e.line == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("duplicate seeds point at the offending token") {
    try {
      parse_plan(
          "schema = 1\nname = demo\nn = 10\n"
          "seeds = 1 2 2\nstrategy = no-learning\n");
      FAIL("expected PlanParseError");
    } catch (const PlanParseError& e) {
      CHECK(e.line == 4);
      CHECK(e.column == 13);  // second '2'
      CHECK(std::string(e.what()).find("duplicate seed 2") != std::string::npos);
    }
  }
  SUBCASE("unknown strategy parameter is rejected") {
    CHECK_THROWS_AS(parse_plan("schema = 1\nname = demo\nn = 10\nseeds = 1\n"
                               "strategy = polya q=3\n"),
                    PlanParseError);
  }
  SUBCASE("bad name charset is rejected") {
    CHECK_THROWS_AS(parse_plan("schema = 1\nname = has space\nn = 10\n"
                               "seeds = 1\nstrategy = no-learning\n"),
                    PlanParseError);
  }
  SUBCASE("semantic violations surface as invalid_argument") {
    const char* text =
        "schema = 1\nname = demo\nn = 10\nseeds = 1\nstrategy = polya m=10\n";
    CHECK_THROWS_WITH_AS(parse_plan(text), doctest::Contains("m must be < "),
                         std::invalid_argument);
  }
}

TEST_CASE("serialization is a parse fixed point") {
  ExperimentPlan plan;
  plan.name = "round-trip.v1";
  plan.n_values = {10, 20};
  plan.seeds = {3, 1, 2};
  plan.horizon = 150;
  plan.record_stride = 5;
  plan.out_dir = "runs/rt";
  StrategyConfig sym;
  sym.kind = StrategyKind::ExAnteSymmetric;
  sym.k = 2;
  sym.f1 = 1.0;
  sym.f2 = 0.1;
  plan.strategies.push_back(sym);
  StrategyConfig urn;
  urn.kind = StrategyKind::Polya;
  urn.m = 7;
  urn.polya_move_rule = PolyaMoveRule::Free;
  plan.strategies.push_back(urn);

  const std::string text = serialize_plan(plan);
  const ExperimentPlan reparsed = parse_plan(text);
  CHECK(reparsed == plan);
  CHECK(serialize_plan(reparsed) == text);
}

TEST_CASE("auto horizon grows with n and saturates") {
  CHECK(auto_horizon(10) == 200);
  CHECK(auto_horizon(100) == 2000);
  CHECK(auto_horizon(500) == 10000);
  CHECK(auto_horizon(1000) == 10000);
}

TEST_CASE("grid expansion is strategy-major") {
  ExperimentPlan plan = parse_plan(kMinimalPlan);
  plan.n_values = {10, 20};
  plan.seeds = {1, 2, 3};
  StrategyConfig urn;
  urn.kind = StrategyKind::Polya;
  urn.m = 4;
  plan.strategies.push_back(urn);

  const std::vector<RunSpec> runs = expand_runs(plan);
  REQUIRE(runs.size() == 12);
  for (std::size_t i = 0; i < runs.size(); ++i) CHECK(runs[i].index == i);

  // strategies outermost, then n, then seeds
  CHECK(runs[0].strategy.kind == StrategyKind::NoLearning);
  CHECK(runs[0].n == 10);
  CHECK(runs[0].seed == 1);
  CHECK(runs[2].seed == 3);
  CHECK(runs[3].n == 20);
  CHECK(runs[5].n == 20);
  CHECK(runs[6].strategy.kind == StrategyKind::Polya);
  CHECK(runs[11].n == 20);
  CHECK(runs[11].seed == 3);

  // horizon falls back to the size-scaled default
  CHECK(runs[0].horizon == 200);
  CHECK(runs[3].horizon == 400);
  plan.horizon = 77;
  CHECK(expand_runs(plan)[3].horizon == 77);
}

TEST_CASE("execution writes rows, clusters and a complete manifest") {
  const fs::path base = fresh_dir("exec");
  ExperimentPlan plan = parse_plan(
      "schema = 1\n"
      "name = exectest\n"
      "n = 12\n"
      "seeds = 1 2\n"
      "horizon = 60\n"
      "stride = 20\n"
      "strategy = no-learning\n"
      "strategy = polya m=3\n");

  const ExecutionSummary summary = execute(plan, 1, base);
  CHECK(summary.run_count == 4);
  CHECK(summary.complete);
  CHECK(!summary.skipped);
  CHECK(summary.out_dir == base / "exectest");
  REQUIRE(fs::exists(summary.rows_path));
  REQUIRE(fs::exists(summary.clusters_path));
  REQUIRE(fs::exists(summary.manifest_path));

  const std::string rows_text = slurp(summary.rows_path);
  const std::vector<ResultRow> rows = parse_rows_csv(rows_text);
  REQUIRE(!rows.empty());
  for (const ResultRow& r : rows) {
    CHECK(r.experiment == "exectest");
    CHECK(r.n == 12);
    CHECK(r.slice <= 60);
    // stride 20 keeps multiples plus the final slice, which for a coordinated
    // run is the (possibly off-stride) slice that reached one restaurant
    CHECK((r.slice % 20 == 0 || r.converged));
  }

  // Runs appear in grid order: the strategy of the first rows is the first
  // strategy of the plan.
  CHECK(rows.front().kind == StrategyKind::NoLearning);
  CHECK(rows.back().kind == StrategyKind::Polya);

  const std::string clusters_text = slurp(summary.clusters_path);
  CHECK(clusters_text.rfind("experiment,strategy,n,k,f1,f2,f,m,seed,size\n", 0) == 0);

  // The manifest embeds matching content digests and the completion flag.
  const std::string manifest = slurp(summary.manifest_path);
  CHECK(manifest.find("\"complete\": true") != std::string::npos);
  CHECK(manifest.find("\"run_count\": 4") != std::string::npos);
  CHECK(manifest.find(digest_hex(rows_text)) != std::string::npos);
  CHECK(manifest.find(digest_hex(clusters_text)) != std::string::npos);
  CHECK(manifest.find(digest_hex(serialize_plan(plan))) != std::string::npos);

  SUBCASE("a second identical call is a no-op") {
    const ExecutionSummary again = execute(plan, 1, base);
    CHECK(again.skipped);
    CHECK(again.complete);
    CHECK(slurp(again.rows_path) == rows_text);
  }
  SUBCASE("a changed plan digest forces a rerun") {
    ExperimentPlan wider = plan;
    wider.seeds.push_back(3);
    const ExecutionSummary rerun = execute(wider, 1, base);
    CHECK(!rerun.skipped);
    CHECK(rerun.complete);
    CHECK(parse_rows_csv(slurp(rerun.rows_path)).size() > rows.size());
  }
  SUBCASE("output bytes are independent of the worker count") {
    ExperimentPlan parallel = plan;
    parallel.out_dir = "exectest-par";
    const ExecutionSummary par = execute(parallel, 8, base);
    CHECK(slurp(par.rows_path) == rows_text);
    CHECK(slurp(par.clusters_path) == clusters_text);
  }
}

TEST_CASE("every built-in figure recipe validates and round-trips") {
  const std::vector<std::string> names = figure_names();
  REQUIRE(names.size() == 8);
  for (const std::string& name : names) {
    const ExperimentPlan plan = figure_recipe(name, 10);
    CHECK(plan.name == name);
    CHECK(!plan.strategies.empty());
    CHECK(parse_plan(serialize_plan(plan)) == plan);
  }
  CHECK_THROWS_AS(figure_recipe("fig1"), std::invalid_argument);
  CHECK_THROWS_AS(figure_recipe("fig2", 0), std::invalid_argument);
}

TEST_CASE("headline recipes reproduce the full-size grids at scale 1") {
  SUBCASE("exploration baseline sweeps five sizes with ten seeds") {
    const ExperimentPlan plan = figure_recipe("fig2", 1);
    CHECK(plan.n_values == std::vector<std::uint32_t>{100, 200, 300, 400, 500});
    CHECK(plan.seeds.size() == 10);
    REQUIRE(plan.strategies.size() == 1);
    CHECK(plan.strategies[0].kind == StrategyKind::NoLearning);
  }
  SUBCASE("urn memory sweep covers the percent grid") {
    const ExperimentPlan plan = figure_recipe("fig6", 1);
    CHECK(plan.n_values == std::vector<std::uint32_t>{500});
    CHECK(plan.horizon == 5000);
    CHECK(plan.record_stride == 50);
    REQUIRE(plan.strategies.size() == 100);
    CHECK(plan.strategies.front().m == 0);
    CHECK(plan.strategies.back().m == 495);
    for (std::size_t i = 0; i < plan.strategies.size(); ++i) {
      CHECK(plan.strategies[i].kind == StrategyKind::Polya);
      CHECK(plan.strategies[i].m == 5 * i);
      CHECK(plan.strategies[i].polya_move_rule == PolyaMoveRule::Compare);
    }
  }
  SUBCASE("urn tradeoff sweep uses the fraction grid") {
    const ExperimentPlan plan = figure_recipe("fig9", 1);
    CHECK(plan.horizon == 10000);
    CHECK(plan.record_stride == 10);
    CHECK(plan.seeds == std::vector<std::uint64_t>{1, 2, 3});
    REQUIRE(plan.strategies.size() == 19);
    CHECK(plan.strategies.front().m == 50);
    CHECK(plan.strategies[1].m == 75);
    CHECK(plan.strategies.back().m == 495);
  }
  SUBCASE("group structure snapshot runs four kinds for forty seeds") {
    const ExperimentPlan plan = figure_recipe("fig7", 1);
    CHECK(plan.seeds.size() == 40);
    CHECK(plan.horizon == 50);
    REQUIRE(plan.strategies.size() == 4);
  }
}

}  // TEST_SUITE
