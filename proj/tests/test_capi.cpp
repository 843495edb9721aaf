#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "json.hpp"
#include "topocheck.h"

using nlohmann::json;

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  topo_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("create, query and free a space through the C surface") {
  const uint32_t opens[] = {0b00, 0b01, 0b11};
  topo_space* space = nullptr;
  REQUIRE(topo_space_create(2, opens, 3, &space) == TOPO_OK);
  CHECK(topo_space_points(space) == 2);
  CHECK(topo_space_open_count(space) == 3);
  CHECK(topo_space_open_at(space, 1) == 0b01);
  CHECK(topo_closure(space, 0b01) == 0b11);
  CHECK(topo_interior(space, 0b10) == 0b00);
  CHECK(topo_theta_closure(space, 0b01) == 0b11);
  CHECK(topo_theta_closure_alt(space, 0b01) == 0b11);

  int32_t class_id = -1;
  REQUIRE(topo_class_from_name("sc-star-closed", &class_id) == TOPO_OK);
  int32_t member = 0;
  REQUIRE(topo_class_member(space, 0b10, class_id, &member) == TOPO_OK);
  CHECK(member == 1);
  uint32_t hull = 0;
  REQUIRE(topo_class_closure(space, 0b01, class_id, &hull) == TOPO_OK);

  size_t count = 0;
  REQUIRE(topo_class_family(space, class_id, nullptr, 0, &count) == TOPO_OK);
  CHECK(count == 4);
  uint32_t masks_buffer[8];
  REQUIRE(topo_class_family(space, class_id, masks_buffer, 8, &count) == TOPO_OK);
  CHECK(count == 4);
  CHECK(masks_buffer[0] == 0);

  int32_t axiom_id = -1;
  REQUIRE(topo_axiom_from_name("meekly-sc-star-normal", &axiom_id) == TOPO_OK);
  int32_t holds = 0;
  REQUIRE(topo_axiom_holds(space, axiom_id, nullptr, &holds) == TOPO_OK);
  CHECK(holds == 1);

  char* rendered = nullptr;
  REQUIRE(topo_space_render_json(space, &rendered) == TOPO_OK);
  const std::string doc = take(rendered);
  CHECK(doc.find("\"points\"") != std::string::npos);

  topo_space_free(space);
}

TEST_CASE("error codes carry the defect and a message") {
  topo_space* space = nullptr;
  const uint32_t no_full[] = {0b00, 0b01};
  CHECK(topo_space_create(2, no_full, 2, &space) == TOPO_ERR_MISSING_FULL_SET);
  CHECK(std::strlen(topo_last_error()) > 0);

  const uint32_t no_union[] = {0b000, 0b001, 0b010, 0b111};
  CHECK(topo_space_create(3, no_union, 4, &space) == TOPO_ERR_NOT_CLOSED_UNDER_UNION);

  CHECK(topo_space_create(0, nullptr, 0, &space) == TOPO_ERR_RANGE);
  CHECK(topo_space_parse_json("not json", 8, &space) == TOPO_ERR_PARSE);
  const char* dup = R"({"points": ["a","a"], "opens": [[]]})";
  CHECK(topo_space_parse_json(dup, std::strlen(dup), &space) == TOPO_ERR_PARSE);

  int32_t id = 0;
  CHECK(topo_class_from_name("no-such-class", &id) == TOPO_ERR_UNKNOWN_NAME);
  CHECK(topo_axiom_from_name("no-such-axiom", &id) == TOPO_ERR_UNKNOWN_NAME);
}

TEST_CASE("name tables are dense and consistent") {
  CHECK(topo_class_count() == 38);
  CHECK(topo_axiom_count() == 19);
  for (int32_t i = 0; i < topo_class_count(); ++i) {
    const char* name = topo_class_name(i);
    REQUIRE(name != nullptr);
    int32_t id = -1;
    REQUIRE(topo_class_from_name(name, &id) == TOPO_OK);
    CHECK(id == i);
  }
  CHECK(topo_class_name(-1) == nullptr);
  CHECK(topo_axiom_name(99) == nullptr);
}

TEST_CASE("streams yield the labeled count and sharding partitions it") {
  topo_stream* stream = nullptr;
  REQUIRE(topo_stream_create(3, 0, 0, 1, &stream) == TOPO_OK);
  size_t count = 0;
  for (;;) {
    topo_space* space = nullptr;
    const auto status = topo_stream_next(stream, &space);
    if (status == TOPO_END) break;
    REQUIRE(status == TOPO_OK);
    ++count;
    topo_space_free(space);
  }
  topo_stream_free(stream);
  CHECK(count == 29);

  size_t sharded = 0;
  for (uint32_t shard = 0; shard < 2; ++shard) {
    topo_stream* part = nullptr;
    REQUIRE(topo_stream_create(3, 0, shard, 2, &part) == TOPO_OK);
    for (;;) {
      topo_space* space = nullptr;
      if (topo_stream_next(part, &space) != TOPO_OK) break;
      ++sharded;
      topo_space_free(space);
    }
    topo_stream_free(part);
  }
  CHECK(sharded == 29);

  CHECK(topo_stream_create(9, 0, 0, 1, &stream) == TOPO_ERR_RANGE);
}

TEST_CASE("implication jobs round trip through JSON") {
  const char* job = R"({"hypotheses": ["normal"], "conclusion": "normal",
                        "n_min": 1, "n_max": 3})";
  char* rendered = nullptr;
  REQUIRE(topo_check_implication_json(job, &rendered) == TOPO_OK);
  json report = json::parse(take(rendered));
  CHECK(report["outcome"] == "verified-exhaustively");
  CHECK(report["checked_count"] == 34);

  const char* search_job = R"({"hypotheses": ["sc-star-normal"],
                               "conclusion": "meekly-sc-star-normal",
                               "n_min": 1, "n_max": 3, "jobs": 2})";
  REQUIRE(topo_search_counterexample_json(search_job, &rendered) == TOPO_OK);
  report = json::parse(take(rendered));
  CHECK(report["outcome"] == "counterexample");
  CHECK(report["counterexample"]["space"]["points"].size() == 3);

  CHECK(topo_check_implication_json("{}", &rendered) == TOPO_ERR_PARSE);
  CHECK(topo_check_implication_json("garbage", &rendered) == TOPO_ERR_PARSE);
}

TEST_CASE("audits run through the C surface") {
  char* rendered = nullptr;
  REQUIRE(topo_audit_json(nullptr, &rendered) == TOPO_OK);
  json all = json::parse(take(rendered));
  CHECK(all.size() == 4);

  REQUIRE(topo_audit_json(R"(["section-3-1"])", &rendered) == TOPO_OK);
  json one = json::parse(take(rendered));
  CHECK(one.size() == 1);
  CHECK(one[0]["target"] == "section-3-1");
  CHECK(one[0]["cells"].size() == 56);

  CHECK(topo_audit_json(R"(["bogus"])", &rendered) == TOPO_ERR_UNKNOWN_NAME);
}
