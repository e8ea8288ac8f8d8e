#include <gtest/gtest.h>

#include <json.hpp>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"
#include "nestobetti/io.hpp"
#include "oracles.hpp"

using namespace nestobetti;
using testing_helpers::S;
using testing_helpers::example4;
using testing_helpers::code_of;

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NESTOBETTI_DATA_DIR) + "/" + name; }

}  // namespace

TEST(ParseBuildingSet, Examples) {
  EXPECT_EQ(parse_building_set("ground: 1 2\n1\n2\n1 2\n"), maximal_building_set(S({1, 2})));
  EXPECT_EQ(parse_building_set("1\n2\n3\n4\n1 4\n3 4\n1 3 4\n2 3 4\n1 2 3 4\n"), example4());
  EXPECT_EQ(parse_building_set(read_text_file(data("example_4.bs"))), example4());
  EXPECT_EQ(parse_building_set(read_text_file(data("hoch_2_4.bs"))), hochschild_building_set(2, 4));
}

TEST(ParseBuildingSet, Errors) {
  try {
    parse_building_set("1 2\n2 3\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::MissingSingleton);
    EXPECT_EQ(e.label(), 1);
  }
  EXPECT_NO_THROW(parse_building_set("1 2\n2 3\n1 2 3\n", {.add_singletons = true}));
  try {
    parse_building_set("# c\nground: 1 2 3\n1\n2\n3\n1 2\n2 3\n");
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnionAxiomViolated);
    EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
  }
  try {
    parse_building_set("1\nx 2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_EQ(code_of([] { parse_building_set("ground: 1\nground: 1\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_building_set("65\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { read_text_file("/definitely/not/here"); }), ErrorCode::ParseError);
}

TEST(ParseGraph, Examples) {
  EXPECT_EQ(parse_graph("1 2\n2 3\n3 4\n"), path_graph(4));
  const SimpleGraph g = parse_graph("2 3\n3 1\n1 4\n");
  EXPECT_EQ(g.edges(), (std::vector<std::pair<int, int>>{{1, 3}, {1, 4}, {2, 3}}));
  const SimpleGraph iso = parse_graph("vertices: 1 2 3\n1 2\n");
  EXPECT_EQ(iso.vertices(), S({1, 2, 3}));
  EXPECT_EQ(iso.edge_count(), 1u);
  EXPECT_EQ(code_of([] { parse_graph("1 1\n"); }), ErrorCode::LoopEdge);
  EXPECT_EQ(code_of([] { parse_graph("1 2 3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_graph("vertices: 1 2\n1 3\n"); }), ErrorCode::ParseError);
}

TEST(RoundTrip, EmitThenParse) {
  std::mt19937_64 gen(61);
  for (int trial = 0; trial < 30; ++trial) {
    const BuildingSet b = oracle::random_connected_chordal(7, gen);
    const std::string text = emit_building_set(b);
    EXPECT_EQ(parse_building_set(text), b);
    EXPECT_EQ(emit_building_set(parse_building_set(text)), text);
  }
  for (const auto& b : oracle::all_building_sets(4)) EXPECT_EQ(parse_building_set(emit_building_set(b)), b);
  const SimpleGraph g = parse_graph("vertices: 1 2 3 7\n1 2\n3 2\n");
  EXPECT_EQ(parse_graph(emit_graph(g)), g);
  EXPECT_EQ(emit_building_set(maximal_building_set(S({1, 2}))), "ground: 1 2\n1\n2\n1 2\n");
}

TEST(Cli, BettiPathSix) {
  const CliResult r = run({"betti", "--path", "6"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "k\tbeta\n0\t1\n1\t5\n2\t9\n3\t5\n");
}

TEST(Cli, BettiHochschildBoth) {
  const CliResult r = run({"betti", "--hochschild", "2", "4", "--method", "both"});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "k\talternating\thomology\n0\t1\t1\n1\t4\t4\n2\t5\t5\n3\t2\t2\n");
}

TEST(Cli, BreakdownAndJson) {
  const CliResult r = run({"betti", "--path", "4", "--breakdown"});
  EXPECT_NE(r.out.find("alternating\t{1,2,3,4}\t2\t2\n"), std::string::npos);
  const CliResult j = run({"betti", "--path", "6", "--method", "both", "--format", "json"});
  ASSERT_EQ(j.status, 0);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["betti"], nlohmann::json({1, 5, 9, 5}));
  EXPECT_EQ(doc["betti_homology"], nlohmann::json({1, 5, 9, 5}));
}

TEST(Cli, FileSources) {
  EXPECT_EQ(run({"betti", "--building-set", data("hoch_2_4.bs")}).out, "k\tbeta\n0\t1\n1\t4\n2\t5\n3\t2\n");
  const CliResult el = run({"verify-el", "--building-set", data("hoch_2_4.bs")});
  EXPECT_EQ(el.status, 0);
  EXPECT_NE(el.out.find("top_chain\t{} {5,6} {3,4,5,6} {1,2,3,4,5,6}\n"), std::string::npos);
  EXPECT_EQ(run({"complex-betti", "--path", "4"}).out, "degree\tbeta\n0\t1\n2\t6\n4\t6\n6\t1\n");
}

TEST(Cli, CompareShowsMismatch) {
  const CliResult r = run({"compare", "--graph", data("cycle5_relabeled.graph")});
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("{2,3,4,5}\t2\t3\t2\t0\tMISMATCH\n"), std::string::npos);
  EXPECT_NE(r.out.find("# totals homology\t1 5 10\n"), std::string::npos);
}

TEST(Cli, HochschildTable) {
  const CliResult r = run({"hochschild-table", "--max-m", "2"});
  EXPECT_EQ(r.out, "m\tn\tbetti\n0\t>=2\t1 1\n1\t2\t1 2\n1\t>=3\t1 2 1\n2\t2\t1 4 3\n2\t3\t1 4 5\n2\t>=4\t1 4 5 2\n");
}

TEST(Cli, ErrorsAreJsonOnStderr) {
  const CliResult nc = run({"betti", "--graph", data("path4_2314.graph")});
  EXPECT_NE(nc.status, 0);
  EXPECT_TRUE(nc.out.empty());
  const auto doc = nlohmann::json::parse(nc.err);
  EXPECT_EQ(doc["error"], "NotChordal");
  EXPECT_EQ(doc["exit"], nc.status);
  const CliResult missing = run({"betti", "--building-set", "/no/such/file"});
  EXPECT_EQ(nlohmann::json::parse(missing.err)["error"], "ParseError");
  EXPECT_EQ(run({"betti"}).status, 2);
  EXPECT_EQ(run({"betti", "--path", "4", "--complete", "4"}).status, 2);
  EXPECT_EQ(run({"nonsense"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
}
