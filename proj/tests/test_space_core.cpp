#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "enumerate.hpp"
#include "json_io.hpp"
#include "space.hpp"

using namespace topo;

namespace {

// X = {a,b}, opens {}, {a}, X.
Space sierpinski() { return Space{validate_topology(2, {0b00, 0b01, 0b11})}; }

// X = {k,l,m}, opens {}, {k}, {l}, {k,l}, X.
Space three_point_example() {
  return Space{validate_topology(3, {0b000, 0b001, 0b010, 0b011, 0b111},
                                 {"k", "l", "m"})};
}

Space discrete(std::uint32_t n) {
  std::vector<Mask> opens;
  for (Mask m = 0; m <= full_mask(n); ++m) opens.push_back(m);
  return Space{validate_topology(n, std::move(opens))};
}

}  // namespace

TEST_CASE("validate_topology accepts the known-good families") {
  CHECK(validate_topology(2, {0b00, 0b01, 0b11}).opens() ==
        std::vector<Mask>{0b00, 0b01, 0b11});
  CHECK(validate_topology(3, {0b000, 0b001, 0b010, 0b011, 0b111}).opens().size() == 5);
  // canonicalization sorts and deduplicates
  auto t = validate_topology(2, {0b11, 0b00, 0b01, 0b01});
  CHECK(t.opens() == std::vector<Mask>{0b00, 0b01, 0b11});
}

TEST_CASE("validate_topology rejects defective families with witnesses") {
  CHECK_THROWS_AS(validate_topology(2, {0b00, 0b01, 0b10}), ValidationError);
  try {
    validate_topology(2, {0b00, 0b01, 0b10});
  } catch (const ValidationError& e) {
    CHECK(e.defect() == TopologyDefect::MissingFullSet);
  }
  try {
    validate_topology(3, {0b000, 0b001, 0b010, 0b111});
  } catch (const ValidationError& e) {
    CHECK(e.defect() == TopologyDefect::NotClosedUnderUnion);
    CHECK(e.witness_a() == 0b001);
    CHECK(e.witness_b() == 0b010);
  }
  CHECK_THROWS_AS(validate_topology(2, {0b01, 0b11}), ValidationError);  // missing {}
  CHECK_THROWS_AS(validate_topology(0, {0}), RangeError);
  CHECK_THROWS_AS(validate_topology(17, {0}), RangeError);
}

TEST_CASE("closure and interior on the frozen examples") {
  auto s = sierpinski();
  CHECK(s.closure(0b01) == 0b11);  // cl({a}) = X
  CHECK(s.closure(0b00) == 0b00);
  CHECK(s.interior(0b10) == 0b00);  // int({b}) = {}
  CHECK(s.interior(0b11) == 0b11);

  auto e = three_point_example();
  CHECK(e.closure(0b001) == 0b101);   // cl({k}) = {k,m}
  CHECK(e.interior(0b101) == 0b001);  // int({k,m}) = {k}
}

TEST_CASE("theta closure on the frozen examples") {
  auto s = sierpinski();
  CHECK(s.theta_closure(0b01) == 0b11);
  CHECK(s.theta_closure(0b00) == 0b00);
  auto d = discrete(3);
  for (Mask a = 0; a < d.mask_count(); ++a) CHECK(d.theta_closure(a) == a);
}

TEST_CASE("kernel laws hold exhaustively for n <= 3") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      Space s{t};
      const Mask full = s.full();
      for (Mask a = 0; a < s.mask_count(); ++a) {
        CHECK(subset_of(a, s.closure(a)));
        CHECK(s.closure(s.closure(a)) == s.closure(a));
        CHECK(subset_of(s.interior(a), a));
        CHECK(s.interior(s.interior(a)) == s.interior(a));
        CHECK(s.closure(a) == (full & ~s.interior(full & ~a)));
        CHECK(subset_of(s.closure(a), s.theta_closure(a)));
        // both theta readings agree
        CHECK(s.theta_closure(a) ==
              s.theta_closure(a, ThetaMode::ClosedSetNeighborhoods));
        for (Mask b = 0; b < s.mask_count(); ++b) {
          CHECK(s.closure(a | b) == (s.closure(a) | s.closure(b)));
          CHECK(s.interior(a & b) == (s.interior(a) & s.interior(b)));
        }
      }
      CHECK(s.closure(0) == 0);
      CHECK(s.interior(full) == full);
    }
  }
}

TEST_CASE("closure equals the definitional intersection of closed supersets") {
  for (const Topology& t : enumerate_topologies(3)) {
    Space s{t};
    for (Mask a = 0; a < s.mask_count(); ++a) {
      Mask meet = s.full();
      for (Mask u : t.opens()) {
        const Mask closed = s.full() & ~u;
        if (subset_of(a, closed)) meet &= closed;
      }
      CHECK(s.closure(a) == meet);
      Mask join = 0;
      for (Mask u : t.opens()) {
        if (subset_of(u, a)) join |= u;
      }
      CHECK(s.interior(a) == join);
    }
  }
}

TEST_CASE("space JSON round trip and rejection rules") {
  const std::string text = R"({"points": ["k","l","m"],
                               "opens": [[], ["k"], ["l"], ["k","l"], ["k","l","m"]]})";
  Topology t = parse_space_text(text);
  CHECK(t.points() == 3);
  CHECK(t.opens() == std::vector<Mask>{0b000, 0b001, 0b010, 0b011, 0b111});
  CHECK(t.point_names() == std::vector<std::string>{"k", "l", "m"});

  Topology again = parse_space_text(space_to_json(t).dump());
  CHECK(again == t);
  CHECK(again.point_names() == t.point_names());

  CHECK_THROWS_AS(parse_space_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_space_text(R"({"points": ["a","a"], "opens": [[], ["a","a"]]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_space_text(R"({"points": ["a"], "opens": [[], ["a"], ["b"]]})"), ParseError);
  CHECK_THROWS_AS(parse_space_text(R"({"points": ["a"], "opens": [[], [], ["a"]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_space_text(R"({"points": ["a","b"], "opens": [[], ["a","a"], ["a","b"]]})"),
                  ParseError);
  // axiom failures surface as ValidationError, not ParseError
  CHECK_THROWS_AS(parse_space_text(R"({"points": ["a","b"], "opens": [[], ["a"]]})"),
                  ValidationError);
}

TEST_CASE("validated topologies round trip through re-validation") {
  for (const Topology& t : enumerate_topologies(3)) {
    Topology again = validate_topology(t.points(), t.opens(), t.point_names());
    CHECK(again == t);
  }
}
