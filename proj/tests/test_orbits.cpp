#include "doctest.h"
#include "helpers.hpp"
#include "salg/orbits.hpp"

using namespace salg;
using salg::test::P;

namespace {

OddAction action(const std::string& doc, const std::string& phi) {
  const SuperAlgebra a = test::algebra(doc);
  return OddAction{a, parse_images(phi, a.ring(), a.ring())};
}

PointIdeal at(long c) { return PointIdeal{{{"x", Scalar(c)}}}; }

const char* const kXY = "superalgebra A even x odd y end";

}  // namespace

TEST_CASE("actions are validated") {
  CHECK(validate_action(action(kXY, "y -> 1")).valid());
  CHECK(validate_action(action(kXY, "x -> y")).valid());
  CHECK_THROWS_AS(validate_action(action(kXY, "x -> x")), ParityError);

  const CheckReport square = validate_action(action("superalgebra A even x odd y end", "x -> y; y -> x"));
  CHECK_FALSE(square.valid());
  CHECK_FALSE(square.checks[1].ok);

  const CheckReport rel = validate_action(action("superalgebra A even x odd y rel x*y end", "y -> 1"));
  CHECK_FALSE(rel.checks[0].ok);
  CHECK(rel.checks[0].witness.find("x*y") != std::string::npos);
}

TEST_CASE("orbit ideals of the three actions on k[x|y]") {
  const SuperAlgebra a = test::algebra(kXY);
  const RingPtr r = a.ring();
  for (long c : {-2L, 0L, 1L, 3L, 7L}) {
    const SuperIdeal point_ideal(a, {P(r, "x") - P(r, std::to_string(c))});
    const SuperIdeal maximal(a, {P(r, "x") - P(r, std::to_string(c)), P(r, "y")});

    const OrbitResult translate = orbit_ideal(action(kXY, "y -> 1"), at(c));
    CHECK(ideal_equal(translate.ideal, point_ideal));
    CHECK(translate.stabilizer == Stabilizer::Trivial);
    CHECK(translate.sdim == SuperDim{0, 1});

    const OrbitResult scaled = orbit_ideal(action(kXY, "y -> x"), at(c));
    CHECK(ideal_equal(scaled.ideal, c == 0 ? maximal : point_ideal));
    CHECK(scaled.stabilizer == (c == 0 ? Stabilizer::Full : Stabilizer::Trivial));
    CHECK(scaled.sdim == (c == 0 ? SuperDim{0, 0} : SuperDim{0, 1}));

    const OrbitResult still = orbit_ideal(action(kXY, "x -> 0"), at(c));
    CHECK(ideal_equal(still.ideal, maximal));
    CHECK(still.stabilizer == Stabilizer::Full);
    CHECK(still.sdim == SuperDim{0, 0});
  }
}

TEST_CASE("stabilizer type matches the orbit computation") {
  const OddAction act = action(kXY, "y -> x");
  CHECK(stabilizer_type(act, at(0)) == Stabilizer::Full);
  CHECK(stabilizer_type(act, at(5)) == Stabilizer::Trivial);
  CHECK_THROWS_AS(stabilizer_type(act, PointIdeal{}), std::invalid_argument);
}

TEST_CASE("orbits in a Grassmann algebra") {
  const char* const doc = "superalgebra L odd y1 y2 end";
  const OddAction act = action(doc, "y1 -> 1; y2 -> 2");
  const OrbitResult o0 = orbit_ideal(act, PointIdeal{});
  const OrbitResult o1 = orbit_ideal(act, PointIdeal{}, 1);
  CHECK(ideal_equal(o0.ideal, o1.ideal));
  CHECK(o0.sdim == SuperDim{0, 1});
  CHECK(o0.pivot == std::optional<std::size_t>{0});
  CHECK(o1.pivot == std::optional<std::size_t>{1});
  CHECK(o0.ideal.contains(P(o0.ideal.generators()[0].ring(), "y2 - 2*y1")));

  const OddAction half = action(doc, "y1 -> 1");
  CHECK_THROWS_AS(orbit_ideal(half, PointIdeal{}, 1), std::invalid_argument);
  CHECK(ideal_equal(orbit_ideal(half, PointIdeal{}).ideal,
                    SuperIdeal(half.algebra, {P(half.algebra.ring(), "y2")})));
}

TEST_CASE("orbit statements hold at every point") {
  const std::vector<std::pair<std::string, std::string>> actions{
      {kXY, "y -> 1"},
      {kXY, "y -> x"},
      {kXY, "x -> 0"},
      {kXY, "x -> y"},
      {"superalgebra B even x odd y1 y2 end", "y1 -> x - 1; y2 -> x^2"},
      {"superalgebra C even x z odd y rel x*z end", "y -> x + z"},
  };
  for (const auto& [doc, phi] : actions) {
    const OddAction act = action(doc, phi);
    REQUIRE(validate_action(act).valid());
    std::vector<PointIdeal> points;
    for (long c : {-1L, 0L, 1L, 2L, 5L}) {
      PointIdeal pt = at(c);
      if (act.algebra.ring()->num_even() == 2) pt.coords["z"] = Scalar(0);
      points.push_back(pt);
    }
    for (const auto& v : verify_orbit_theorems(act, points)) {
      for (const auto& c : v.report.checks) {
        CHECK_MESSAGE(c.ok, doc, " / ", phi, " at ", render_point(v.point), ": ", c.axiom, " ", c.witness);
      }
    }
  }
}

TEST_CASE("translation formula") {
  CHECK(check_translation_formula(action(kXY, "y -> x"), at(2)).ok);
  CHECK(check_translation_formula(action("superalgebra B even x odd y1 y2 end", "y1 -> x; y2 -> 1"), at(3), 5).ok);
  // phi(J) not in J: the formula no longer kills the relation away from x = 0
  const OddAction off = action("superalgebra A even x odd y rel x*y end", "y -> 1");
  CHECK(check_translation_formula(off, at(0)).ok);
  const AxiomCheck bad = check_translation_formula(off, at(1));
  CHECK_FALSE(bad.ok);
  CHECK(bad.witness.find("relation x*y") != std::string::npos);
  CHECK(render_point(at(2)) == "x = 2");
}

TEST_CASE("the orbit ideal does not depend on the pivot") {
  std::mt19937_64 rng(41);
  const std::vector<std::string> docs{"superalgebra L odd y1 y2 y3 end",
                                      "superalgebra B even x odd y1 y2 end"};
  int compared = 0;
  for (const auto& doc : docs) {
    const SuperAlgebra a = test::algebra(doc);
    const RingPtr r = a.ring();
    for (int trial = 0; trial < 15; ++trial) {
      // phi(x) = 0 and phi(y_i) = random constants keep phi^2 = 0
      GeneratorImages phi;
      for (std::size_t i = 0; i < r->num_even(); ++i) phi.push_back(SuperPoly(r));
      for (std::size_t i = 0; i < r->num_odd(); ++i) {
        phi.push_back(SuperPoly::constant(r, Scalar(static_cast<long>(rng() % 5) - 2)));
      }
      const OddAction act{a, phi};
      REQUIRE(validate_action(act).valid());
      PointIdeal pt;
      if (r->num_even() > 0) pt.coords["x"] = Scalar(static_cast<long>(rng() % 5) - 2);
      const OrbitResult base = orbit_ideal(act, pt);
      for (std::size_t j = 0; j < base.lambdas.size(); ++j) {
        if (base.lambdas[j].is_zero()) continue;
        CHECK(ideal_equal(orbit_ideal(act, pt, j).ideal, base.ideal));
        ++compared;
      }
    }
  }
  CHECK(compared > 20);
}
