#include "doctest.h"
#include "helpers.hpp"
#include "salg/oracle.hpp"
#include "salg/sdim.hpp"

#include <algorithm>

using namespace salg;
using salg::test::P;

namespace {

/// Sorted renderings joined by " | ".
std::string strs(const std::vector<SuperPoly>& ps) {
  std::vector<std::string> sorted;
  for (const auto& p : ps) sorted.push_back(p.str());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& s : sorted) out += (out.empty() ? "" : " | ") + s;
  return out;
}

}  // namespace

TEST_CASE("superideal closure") {
  auto r = test::ring({"x"}, {"y1", "y2"});
  CHECK(strs(superideal_closure(std::vector{P(r, "x - y1y2")})) ==
        "x - y1y2 | x*y1 | x*y1y2 | x*y2");
  CHECK(superideal_closure(std::vector<SuperPoly>{}).empty());
  auto l = test::ring({}, {"y1"});
  CHECK(strs(superideal_closure(std::vector{P(l, "y1")})) == "y1");
}

TEST_CASE("module Groebner basis of the closure of x - y1y2") {
  auto r = test::ring({"x"}, {"y1", "y2"});
  const SuperAlgebra a(r, {P(r, "x - y1y2")});
  // As a k[x]-module the closure needs x*y1y2 as well; as a superideal
  // three elements suffice.
  CHECK(strs(a.groebner_basis()) == "x - y1y2 | x*y1 | x*y1y2 | x*y2");
  const SuperAlgebra free = SuperAlgebra::free(r);
  CHECK(strs(SuperIdeal(free, {P(r, "x - y1y2")}).minimal_generators()) == "x - y1y2");
  CHECK(ideal_equal(SuperIdeal(free, {P(r, "x - y1y2"), P(r, "x*y1"), P(r, "x*y2")}),
                    SuperIdeal(free, {P(r, "x - y1y2")})));

  auto e = test::ring({"x"}, {});
  CHECK(strs(SuperAlgebra(e, {P(e, "x^2")}).groebner_basis()) == "x^2");
  auto l = test::ring({}, {"y1", "y2"});
  const SuperAlgebra lambda(l, {P(l, "y1"), P(l, "y2")});
  CHECK(strs(lambda.groebner_basis()) == "y1 | y1y2 | y2");
  CHECK(strs(SuperIdeal(SuperAlgebra::free(l), {P(l, "y1"), P(l, "y2")}).minimal_generators()) == "y1 | y2");
}

TEST_CASE("normal forms") {
  auto r = test::ring({"x"}, {"y1", "y2"});
  const SuperAlgebra free = SuperAlgebra::free(r);
  const SuperIdeal i(free, {P(r, "x - y1y2")});
  CHECK(i.normal_form(P(r, "x - y1y2")).is_zero());
  CHECK(i.normal_form(P(r, "x^2")).is_zero());
  CHECK(SuperIdeal(free, {P(r, "x")}).normal_form(P(r, "y1")) == P(r, "y1"));
}

TEST_CASE("annihilators") {
  auto l = test::ring({}, {"y1", "y2"});
  const SuperAlgebra lambda2 = SuperAlgebra::free(l);
  const Annihilator ann = annihilator(P(l, "y1y2"), lambda2);
  CHECK(ideal_equal(ann.ideal, SuperIdeal(lambda2, {P(l, "y1"), P(l, "y2")})));

  const SuperAlgebra xy = test::algebra("superalgebra A even x odd y rel x*y end");
  const SuperPoly y = xy.var("y");
  CHECK(ideal_equal(annihilator(y, xy).ideal, SuperIdeal(xy, {xy.var("x"), y})));

  const Annihilator one = annihilator(xy.constant(1), xy);
  CHECK(one.ideal.groebner_basis().empty());
  CHECK_FALSE(one.of_zero);

  const Annihilator zero = annihilator(SuperPoly(xy.ring()), xy);
  CHECK(zero.of_zero);
  CHECK(zero.ideal.is_unit());
}

TEST_CASE("ideal equality") {
  auto e = test::ring({"x"}, {});
  const SuperAlgebra kx = SuperAlgebra::free(e);
  CHECK_FALSE(ideal_equal(SuperIdeal(kx, {P(e, "x")}), SuperIdeal(kx, {P(e, "x^2")})));
  CHECK(ideal_equal(SuperIdeal(kx, {}), SuperIdeal(kx, {})));
}

TEST_CASE("localization at an even element") {
  const SuperAlgebra xy = test::algebra("superalgebra A even x odd y rel x*y end");
  const Localization lx = localize_at_even(xy, xy.var("x"));
  CHECK_FALSE(lx.zero_ring);
  CHECK(lx.algebra.is_zero(lx.algebra.var("y")));
  CHECK(ksdim(lx.algebra).dim == SuperDim{1, 0});

  const Localization l1 = localize_at_even(xy, xy.constant(1));
  CHECK_FALSE(l1.zero_ring);
  CHECK(ksdim(l1.algebra).dim == ksdim(xy).dim);

  const SuperAlgebra kx = test::algebra("superalgebra A even x rel x*(x-1) end");
  const Localization lk = localize_at_even(kx, kx.var("x"));
  CHECK(krull_dim(lk.algebra) == 0);
  CHECK(lk.algebra.is_zero(lk.algebra.var("x") - lk.algebra.constant(1)));

  const Localization l0 = localize_at_even(xy, SuperPoly(xy.ring()));
  CHECK(l0.zero_ring);
  CHECK_THROWS_AS(localize_at_even(xy, xy.var("y")), ParityError);
}

TEST_CASE("localizing at 1 and setting t = 1 reproduces the basis") {
  const SuperAlgebra a = test::algebra("superalgebra A even x z odd y1 y2 rel x*y1 - z*y2; x^2 - y1y2 end");
  const Localization l = localize_at_even(a, a.constant(1));
  GeneratorImages back = identity_images(a.ring());
  back.insert(back.begin() + static_cast<std::ptrdiff_t>(a.ring()->num_even()), a.constant(1));
  for (const auto& g : l.algebra.groebner_basis()) {
    SuperPoly h = a.normal_form(substitute(g, back, a.ring()));
    CHECK(h.is_zero());
  }
  // and every relation of A survives in the localization
  for (const auto& rel : a.relations()) CHECK(l.algebra.is_zero(extend_to(rel, l.algebra.ring())));
}

TEST_CASE("monomorphism necessary condition") {
  const SuperAlgebra kx = test::algebra("superalgebra A even x end");
  const SuperAlgebra kxy = test::algebra("superalgebra B even x odd y end");
  const SuperAlgebra xy = test::algebra("superalgebra C even x odd y rel x*y end");
  SuperMorphism incl{kx, kxy, {kxy.var("x")}};
  check_morphism(incl);
  CHECK_FALSE(check_mono_necessary(incl));
  SuperMorphism id{kxy, kxy, identity_images(kxy.ring())};
  CHECK(check_mono_necessary(id));
  SuperMorphism quot{kxy, xy, identity_images(xy.ring())};
  check_morphism(quot);
  CHECK(check_mono_necessary(quot));
  SuperMorphism bad{xy, kxy, identity_images(kxy.ring())};
  CHECK_THROWS_WITH_AS(check_morphism(bad), doctest::Contains("x*y"), std::invalid_argument);
}

TEST_CASE("membership agrees with the truncated linear-algebra oracle") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 1 + rng() % 2;
    const std::size_t n = 1 + rng() % (4 - m);
    std::vector<std::string> even, odd;
    for (std::size_t i = 0; i < m; ++i) even.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < n; ++i) odd.push_back("y" + std::to_string(i + 1));
    auto r = test::ring(even, odd);
    std::vector<SuperPoly> gens;
    for (int k = 0; k < 2; ++k) {
      SuperPoly g = test::random_poly(r, rng, 3, 3);
      if (!g.is_zero()) gens.push_back(g);
    }
    const SuperAlgebra a(r, gens);
    const TruncatedIdealOracle oracle(r, a.relations(), 7);
    for (int k = 0; k < 20; ++k) {
      SuperPoly f = test::random_poly(r, rng, 3, 3);
      if (k % 2 == 0 && !gens.empty()) {
        f = test::random_poly(r, rng, 2, 2) * gens[rng() % gens.size()];
      }
      if (f.total_degree() > 4) continue;
      REQUIRE_MESSAGE(a.is_zero(f) == oracle.contains(f), f.str(), " modulo ", gens.size(), " generators");
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("normal form is idempotent and linear") {
  std::mt19937_64 rng(7);
  auto r = test::ring({"x1", "x2"}, {"y1", "y2"});
  const SuperAlgebra a(r, {P(r, "x1*y1 - x2*y2"), P(r, "x1^2 - y1y2"), P(r, "x2^3")});
  for (int k = 0; k < 100; ++k) {
    const SuperPoly f = test::random_poly(r, rng, 4, 5);
    const SuperPoly g = test::random_poly(r, rng, 4, 5);
    const SuperPoly nf = a.normal_form(f);
    REQUIRE(a.normal_form(nf) == nf);
    REQUIRE(a.normal_form(f + Scalar(3) * g) == nf + Scalar(3) * a.normal_form(g));
  }
}

TEST_CASE("closure stability of reduced bases") {
  std::mt19937_64 rng(8);
  auto r = test::ring({"x1", "x2"}, {"y1", "y2", "y3"});
  for (int trial = 0; trial < 10; ++trial) {
    const SuperAlgebra a(r, {test::random_poly(r, rng, 3, 3), test::random_poly(r, rng, 3, 3)});
    for (const auto& g : a.groebner_basis()) {
      for (std::size_t i = 0; i < 3; ++i) REQUIRE(a.is_zero(SuperPoly::odd_var(r, i) * g));
    }
  }
}

TEST_CASE("annihilators agree with the truncated oracle") {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"superalgebra A even x odd y rel x*y end", "y"},
      {"superalgebra A odd y1 y2 end", "y1y2"},
      {"superalgebra A even x odd y1 y2 rel x*y1y2 end", "y1"},
      {"superalgebra A even x odd y1 y2 rel x*y1y2 end", "y1y2"},
      {"superalgebra A even x odd y1 y2 rel x^2 - y1y2 end", "x"},
      {"superalgebra A even x z odd y rel x*z*y; x^2*y end", "y"},
  };
  for (const auto& [doc, elem] : cases) {
    const SuperAlgebra a = test::algebra(doc);
    const SuperPoly p = P(a.ring(), elem);
    const Annihilator ann = annihilator(p, a);
    for (const auto& g : ann.ideal.groebner_basis()) REQUIRE(a.is_zero(g * p));
    for (const auto& k : truncated_annihilator(a, p, 6, 8)) {
      REQUIRE_MESSAGE(ann.ideal.contains(k), doc, ": oracle annihilator ", k.str(), " missing");
    }
  }
}
