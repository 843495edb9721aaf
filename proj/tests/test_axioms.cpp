#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "axioms.hpp"
#include "witness_check.hpp"
#include "enumerate.hpp"
#include "space.hpp"

using namespace topo;

namespace {

Space discrete(std::uint32_t n) {
  std::vector<Mask> opens;
  for (Mask m = 0; m <= full_mask(n); ++m) opens.push_back(m);
  return Space{validate_topology(n, std::move(opens))};
}

Space indiscrete(std::uint32_t n) {
  return Space{validate_topology(n, {0, full_mask(n)})};
}

// X = {k,l,m,n}, opens {}, {l}, {m}, {l,m}, {m,n}, {k,l,m}, {l,m,n}, X.
// Bits: k=1, l=2, m=4, n=8.
Space meekly_negative() {
  return Space{validate_topology(
      4, {0b0000, 0b0010, 0b0100, 0b0110, 0b1100, 0b0111, 0b1110, 0b1111},
      {"k", "l", "m", "n"})};
}

// X = {k,l,m}, opens {}, {k}, {l,m}, X.
Space meekly_positive() {
  return Space{validate_topology(3, {0b000, 0b001, 0b110, 0b111}, {"k", "l", "m"})};
}

}  // namespace

TEST_CASE("axiom names round trip") {
  for (std::size_t i = 0; i < kAxiomCount; ++i) {
    auto axiom = static_cast<Axiom>(i);
    auto back = axiom_from_name(axiom_name(axiom));
    REQUIRE(back.has_value());
    CHECK(*back == axiom);
  }
  CHECK(axiom_from_name("meekly-sc-star-normal") == Axiom::MeeklySCStarNormal);
  CHECK(axiom_from_name("softly-regular") == Axiom::SoftlyRegular);
  CHECK(!axiom_from_name("nonsense"));
}

TEST_CASE("discrete three-point space satisfies the headline axioms") {
  auto d = discrete(3);
  for (Axiom axiom : {Axiom::Normal, Axiom::SCStarNormal, Axiom::MeeklySCStarNormal,
                      Axiom::SoftlyRegular, Axiom::AlmostRegular}) {
    CHECK(satisfies(d, axiom));
  }
}

TEST_CASE("indiscrete two-point space is normal with three obligations") {
  auto verdict = decide_axiom(indiscrete(2), Axiom::Normal, {}, true);
  CHECK(verdict.holds);
  CHECK(verdict.obligations == 3);  // ({},{}) ({},X) (X,{})
}

TEST_CASE("sierpinski space is not T1, witnessed by the open singleton") {
  Space s{validate_topology(2, {0b00, 0b01, 0b11})};
  auto verdict = decide_axiom(s, Axiom::T1);
  CHECK(!verdict.holds);
  REQUIRE(verdict.refutation.has_value());
  CHECK(verdict.refutation->a == 0b01);
}

TEST_CASE("the four-point example fails the meekly axiom but separates by sc-star-opens") {
  auto s = meekly_negative();

  auto verdict = decide_axiom(s, Axiom::MeeklySCStarNormal, {}, true);
  CHECK(!verdict.holds);
  REQUIRE(verdict.refutation.has_value());
  // First failing pair in lexicographic order: ({k}, {n}); every open
  // containing k also meets every open containing n.
  CHECK(verdict.refutation->a == 0b0001);
  CHECK(verdict.refutation->b == 0b1000);

  // The pair ({k,l}, {n}) *is* densely separable (U={l}, V={m,n}), even
  // though both operands are admissible.
  CHECK(s.member(0b0011, SetClass::SCStarClosed));
  CHECK(s.is_closed(0b0011));
  CHECK(s.is_closed(0b1000));
  bool separable = false;
  for (Mask u : s.topology().opens()) {
    for (Mask v : s.topology().opens()) {
      if ((u & v) == 0 && testsupport::dense_in(s, u, 0b0011) && testsupport::dense_in(s, v, 0b1000))
        separable = true;
    }
  }
  CHECK(separable);

  // Every subset is definitionally SC*-closed here, so SC*-open separation
  // is immediate and the space is SC*-normal.
  CHECK(s.family_masks(SetClass::SCStarClosed).size() == 16);
  CHECK(satisfies(s, Axiom::SCStarNormal));

  // The failure persists under every option combination.
  for (auto d : {MeeklyDisjointness::Open, MeeklyDisjointness::ClosureDisjoint}) {
    for (auto o : {MeeklyOperands::BothClosedOneSCStar, MeeklyOperands::RelaxedSCStarSide}) {
      CHECK(!satisfies(s, Axiom::MeeklySCStarNormal, MeeklyOptions{d, o}));
    }
  }
}

TEST_CASE("the partition example satisfies the meekly axiom under both operand modes") {
  auto s = meekly_positive();
  CHECK(s.member(0b001, SetClass::SCStarClosed));  // {k}
  CHECK(!s.is_closed(0b010));                      // {l} is not closed
  CHECK(s.closure(0b010) == 0b110);                // cl({l}) = {l,m}

  auto strict = decide_axiom(s, Axiom::MeeklySCStarNormal, {}, true);
  CHECK(strict.holds);
  MeeklyOptions relaxed;
  relaxed.operands = MeeklyOperands::RelaxedSCStarSide;
  auto verdict = decide_axiom(s, Axiom::MeeklySCStarNormal, relaxed, true);
  CHECK(verdict.holds);
  // The pair ({k}, {l,m}) is witnessed by U={k}, V={l,m}.
  bool found = false;
  for (const auto& w : verdict.witnesses) {
    if (w.a == 0b001 && w.b == 0b110) {
      found = true;
      CHECK(w.u == 0b001);
      CHECK(w.v == 0b110);
    }
  }
  CHECK(found);
}

TEST_CASE("indiscrete three-point space: meekly holds and normal holds vacuously") {
  auto s = indiscrete(3);
  CHECK(satisfies(s, Axiom::MeeklySCStarNormal));
  CHECK(satisfies(s, Axiom::Normal));
  CHECK(satisfies(s, Axiom::SCStarNormal));
  CHECK(satisfies(s, Axiom::SoftlyRegular));
  CHECK(satisfies(s, Axiom::AlmostRegular));
}

TEST_CASE("one-point space satisfies every axiom") {
  Space s{validate_topology(1, {0b0, 0b1})};
  for (std::size_t i = 0; i < kAxiomCount; ++i) {
    CHECK(satisfies(s, static_cast<Axiom>(i)));
  }
}

TEST_CASE("extremal disconnectedness verdict carries the hausdorff note") {
  Space sier{validate_topology(2, {0b00, 0b01, 0b11})};
  auto verdict = decide_axiom(sier, Axiom::ExtremallyDisconnected);
  CHECK(verdict.holds);  // cl({a}) = X is open
  CHECK(verdict.notes.at("hausdorff") == "false");
  auto d = discrete(2);
  auto dv = decide_axiom(d, Axiom::ExtremallyDisconnected);
  CHECK(dv.holds);
  CHECK(dv.notes.at("hausdorff") == "true");
}

TEST_CASE("lindelof is constant true on finite spaces, with a provenance note") {
  auto verdict = decide_axiom(indiscrete(3), Axiom::Lindelof);
  CHECK(verdict.holds);
  CHECK(verdict.notes.count("provenance") == 1);
}

TEST_CASE("finite T1 spaces are exactly the discrete ones (n <= 3)") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      Space s{t};
      const bool discrete_space = t.opens().size() == (1u << n);
      CHECK(satisfies(s, Axiom::T1) == discrete_space);
    }
  }
}

TEST_CASE("witness soundness: every recorded witness re-validates (n <= 3)") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      Space s{t};
      for (std::size_t i = 0; i < kAxiomCount; ++i) {
        const auto axiom = static_cast<Axiom>(i);
        for (auto operands :
             {MeeklyOperands::BothClosedOneSCStar, MeeklyOperands::RelaxedSCStarSide}) {
          MeeklyOptions options;
          options.operands = operands;
          auto verdict = decide_axiom(s, axiom, options, true);
          if (verdict.holds) {
            for (const auto& w : verdict.witnesses)
              CHECK(testsupport::witness_sound(s, axiom, options, w));
          } else {
            REQUIRE(verdict.refutation.has_value());
          }
          if (axiom != Axiom::MeeklySCStarNormal) break;
        }
      }
    }
  }
}

TEST_CASE("closure-disjoint meekly implies open-disjoint meekly (n <= 4)") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      Space s{t};
      for (auto operands :
           {MeeklyOperands::BothClosedOneSCStar, MeeklyOperands::RelaxedSCStarSide}) {
        MeeklyOptions strong{MeeklyDisjointness::ClosureDisjoint, operands};
        MeeklyOptions weak{MeeklyDisjointness::Open, operands};
        if (satisfies(s, Axiom::MeeklySCStarNormal, strong))
          CHECK(satisfies(s, Axiom::MeeklySCStarNormal, weak));
      }
    }
  }
}

TEST_CASE("beta-k and almost-beta verdicts match k-normal and almost-normal on discrete spaces") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    auto d = discrete(n);
    CHECK(satisfies(d, Axiom::BetaKNormal) == satisfies(d, Axiom::KNormal));
    CHECK(satisfies(d, Axiom::AlmostBetaNormal) == satisfies(d, Axiom::AlmostNormal));
  }
}

TEST_CASE("provable monotone implications hold exhaustively (n <= 3)") {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (const Topology& t : enumerate_topologies(n)) {
      Space s{t};
      // every closed set is SC*-closed, so open separation lifts
      if (satisfies(s, Axiom::Normal)) CHECK(satisfies(s, Axiom::SCStarNormal));
      if (satisfies(s, Axiom::T1)) {
        if (satisfies(s, Axiom::MeeklySCStarNormal)) {
          CHECK(satisfies(s, Axiom::SoftlyRegular));
          CHECK(satisfies(s, Axiom::AlmostRegular));
          CHECK(satisfies(s, Axiom::KNormal));
        }
        if (satisfies(s, Axiom::AlmostBetaNormal)) CHECK(satisfies(s, Axiom::AlmostRegular));
        if (satisfies(s, Axiom::SemiNormal) && satisfies(s, Axiom::MeeklySCStarNormal))
          CHECK(satisfies(s, Axiom::Regular));
      }
      if (satisfies(s, Axiom::ExtremallyDisconnected) &&
          satisfies(s, Axiom::MeeklySCStarNormal))
        CHECK(satisfies(s, Axiom::SCStarNormal));
    }
  }
}
