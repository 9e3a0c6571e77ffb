#include <doctest.h>
#include <json.hpp>

#include "ltqdiag/diagnosability.hpp"
#include "ltqdiag/diagnosis.hpp"
#include "ltqdiag/errors.hpp"
#include "ltqdiag/fault_model.hpp"
#include "ltqdiag/graph.hpp"
#include "ltqdiag/serial.hpp"
#include "ltqdiag/syndrome.hpp"

using namespace ltqdiag;
using njson = nlohmann::json;

TEST_CASE("labels are fixed-width binary, most significant bit first") {
  CHECK(to_label(0b0101, 4) == "0101");
  CHECK(to_label(0, 3) == "000");
  CHECK(to_label(1, 5) == "00001");
  CHECK(parse_label("0101", 4) == 5);
  CHECK(parse_label("11", 2) == 3);
  CHECK_THROWS_AS(parse_label("010", 4), ArgumentError);
  CHECK_THROWS_AS(parse_label("01a1", 4), ArgumentError);
}

TEST_CASE("edge list text is sorted and exact for LTQ_2") {
  const LtqGraph g = LtqGraph::build(2);
  CHECK(edge_list_text(g) == "00 01\n00 10\n01 11\n10 11\n");
}

TEST_CASE("DOT and JSON graph exports") {
  const LtqGraph g = LtqGraph::build(4);
  const std::string dot = dot_text(g);
  CHECK(dot.find("graph ltq4 {") == 0);
  CHECK(dot.find("\"0000\" -- \"0001\";") != std::string::npos);
  const njson doc = njson::parse(graph_json(g));
  CHECK(doc["n"] == 4);
  CHECK(doc["edges"].size() == 32);  // n * 2^(n-1)
  CHECK(doc["edges"][0][0] == "0000");
}

TEST_CASE("fault-set files round trip") {
  const VertexSet f = VertexSet::of(16, {1, 10, 15});
  const std::string text = fault_lines(f, 4);
  CHECK(text == "0001\n1010\n1111\n");
  CHECK(parse_fault_lines(text, 4) == f);
  CHECK(parse_fault_lines("0001\r\n\n1010\n", 4) == VertexSet::of(16, {1, 10}));
  CHECK(parse_fault_lines("", 4).empty());
  CHECK_THROWS_AS(parse_fault_lines("001\n", 4), ArgumentError);
  CHECK_THROWS_AS(parse_fault_lines("0a01\n", 4), ArgumentError);
}

TEST_CASE("syndrome JSON round trips and validates its domain") {
  const LtqGraph g = LtqGraph::build(3);
  const VertexSet fault = VertexSet::of(8, {0b001});

  SUBCASE("pmc") {
    const PmcSyndrome s = pmc_syndrome(g, fault, FaultyUnitPolicy::random(5));
    const std::string text = syndrome_json(g, s);
    const auto parsed = parse_syndrome_json(text);
    REQUIRE(std::holds_alternative<PmcSyndrome>(parsed));
    CHECK(std::get<PmcSyndrome>(parsed) == s);
    const njson doc = njson::parse(text);
    CHECK(doc["model"] == "pmc");
    CHECK(doc["tests"].size() == 24);  // 2 |E| ordered tests
  }
  SUBCASE("mm*") {
    const MmSyndrome s = mm_syndrome(g, fault, FaultyUnitPolicy::all_one());
    const std::string text = syndrome_json(g, s);
    const auto parsed = parse_syndrome_json(text);
    REQUIRE(std::holds_alternative<MmSyndrome>(parsed));
    CHECK(std::get<MmSyndrome>(parsed) == s);
    const njson doc = njson::parse(text);
    CHECK(doc["tests"].size() == 8 * 3);  // 2^n comparators, C(3,2) pairs each
  }
  SUBCASE("rejects incomplete or duplicated domains") {
    const PmcSyndrome s = pmc_syndrome(g, fault, FaultyUnitPolicy::all_zero());
    njson doc = njson::parse(syndrome_json(g, s));
    njson dropped = doc;
    dropped["tests"].erase(0);
    CHECK_THROWS_AS(parse_syndrome_json(dropped.dump()), ArgumentError);
    njson duplicated = doc;
    duplicated["tests"].push_back(doc["tests"][0]);
    CHECK_THROWS_AS(parse_syndrome_json(duplicated.dump()), ArgumentError);
    njson bad_label = doc;
    bad_label["tests"][0]["u"] = "0000";
    CHECK_THROWS_AS(parse_syndrome_json(bad_label.dump()), ArgumentError);
    CHECK_THROWS_AS(parse_syndrome_json("not json at all"), ArgumentError);
    CHECK_THROWS_AS(parse_syndrome_json("{\"model\":\"pmc\"}"), ArgumentError);
  }
}

TEST_CASE("report serializations match the documented schemas") {
  const LtqGraph g = LtqGraph::build(4);

  SUBCASE("good-neighbor report") {
    const auto bad =
        is_g_good_neighbor_set(g, VertexSet::of(16, {0b0001, 0b0010, 0b0100, 0b1000}), 1);
    const njson doc = njson::parse(gng_report_json(bad, 4));
    CHECK(doc["is_gng"] == false);
    CHECK(doc["violating_vertex"] == "0000");
    CHECK(doc["free_neighbor_count"] == 0);
    const auto good = is_g_good_neighbor_set(g, VertexSet(16), 1);
    const njson ok = njson::parse(gng_report_json(good, 4));
    CHECK(ok["violating_vertex"].is_null());
  }
  SUBCASE("cut report") {
    const KappaResult r = kappa_g(g, 1, 7);
    const njson doc = njson::parse(kappa_result_json(r, 4));
    CHECK(doc["size"] == 6);
    CHECK(doc["cut"].size() == 6);
    CHECK(doc["component_sizes"].size() == 2);
    const KappaResult none = kappa_g(g, 0, 3);
    const njson miss = njson::parse(kappa_result_json(none, 4));
    CHECK(miss["none_found_below_bound"] == true);
    CHECK(miss["bound"] == 3);
  }
  SUBCASE("diagnosability report") {
    const DiagReport r = tg_bruteforce(g, 1, Model::Pmc, 8);
    const njson doc = njson::parse(diag_report_json(r));
    CHECK(doc["n"] == 4);
    CHECK(doc["g"] == 1);
    CHECK(doc["model"] == "pmc");
    CHECK(doc["method"] == "brute_force");
    CHECK(doc["value"] == 7);
    CHECK(doc["exact"] == true);
    CHECK(doc["witness"].size() == 2);
    CHECK(doc["witness"][0].size() == 6);
    CHECK(doc["pairs_checked"].is_number_unsigned());
    CHECK(doc["elapsed_ms"].is_number());
  }
  SUBCASE("diagnosis outcomes") {
    const VertexSet fault = VertexSet::of(16, {0b0001});
    const auto unique =
        diagnose(g, pmc_syndrome(g, fault, FaultyUnitPolicy::all_zero()), 1, 7);
    CHECK(diagnosis_json(unique, 4) == "{\"faulty\":[\"0001\"]}");
    DiagnosisResult none;
    none.kind = DiagnosisResult::Kind::NoCandidate;
    CHECK(diagnosis_json(none, 4) == "{\"no_candidate\":true}");
    DiagnosisResult ambi;
    ambi.kind = DiagnosisResult::Kind::Ambiguous;
    ambi.candidates = {VertexSet::of(16, {1}), VertexSet::of(16, {2})};
    const njson doc = njson::parse(diagnosis_json(ambi, 4));
    CHECK(doc["ambiguity"].size() == 2);
  }
}

TEST_CASE("model names") {
  CHECK(model_name(Model::Pmc) == "pmc");
  CHECK(model_name(Model::MmStar) == "mm*");
  CHECK(parse_model("pmc") == Model::Pmc);
  CHECK(parse_model("mm*") == Model::MmStar);
  CHECK(parse_model("mmstar") == Model::MmStar);
  CHECK_THROWS_AS(parse_model("bgm"), ArgumentError);
}
