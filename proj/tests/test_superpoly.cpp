#include "doctest.h"
#include "helpers.hpp"

using namespace salg;
using salg::test::P;

TEST_CASE("odd generators anticommute") {
  auto r = test::ring({"x"}, {"y1", "y2"});
  CHECK((P(r, "y1") * P(r, "y2")).str() == "y1y2");
  CHECK((P(r, "y2") * P(r, "y1")).str() == "-y1y2");
  CHECK((P(r, "x + y1") * P(r, "x - y1")).str() == "x^2");
  CHECK((P(r, "y1") * P(r, "y1")).is_zero());
}

TEST_CASE("rendering") {
  auto r = test::ring({"x1", "x2"}, {"y1", "y2", "y3"});
  const SuperPoly f = P(r, "3*x1^2*y3*y1") - P(r, "1/2*y2");
  CHECK(f.str() == "-3*x1^2*y1y3 - 1/2*y2");
  CHECK(P(r, "0").str() == "0");
  CHECK(P(r, "-1").str() == "-1");
  CHECK(parse_poly(f.str(), r) == f);
}

TEST_CASE("evaluation at rational points") {
  auto r = test::ring({"x"}, {"y1", "y2"});
  const std::map<std::string, Scalar> at3{{"x", Scalar(3)}};
  CHECK(evaluate_at_point(P(r, "x^2 + y1y2"), at3) == Scalar(9));
  CHECK(evaluate_at_point(P(r, "y1"), at3).is_zero());
  CHECK(evaluate_at_point(P(r, "(x-2)*(x+1)"), {{"x", Scalar(2)}}).is_zero());
  CHECK_THROWS_WITH_AS(evaluate_at_point(P(r, "x"), {}), doctest::Contains("x"), std::invalid_argument);
}

TEST_CASE("odd derivations") {
  auto r = test::ring({"x"}, {"y"});
  const GeneratorImages to_one{P(r, "0"), P(r, "1")};
  const GeneratorImages to_x{P(r, "0"), P(r, "x")};
  CHECK(apply_derivation(P(r, "x*y"), to_one, Parity::Odd) == P(r, "x"));
  CHECK(apply_derivation(P(r, "x*y"), to_x, Parity::Odd) == P(r, "x^2"));
  CHECK(apply_derivation(P(r, "1"), to_x, Parity::Odd).is_zero());
  CHECK_THROWS_AS(check_derivation_parity(*r, GeneratorImages{P(r, "x"), P(r, "0")}, Parity::Odd),
                  ParityError);
}

TEST_CASE("derivation signs on odd products") {
  auto r = test::ring({}, {"y1", "y2"});
  // phi(y1) = 1: phi(y1 y2) = y2, phi(y2 y1) = -y2
  const GeneratorImages phi{P(r, "1"), P(r, "0")};
  CHECK(apply_derivation(P(r, "y1*y2"), phi, Parity::Odd) == P(r, "y2"));
  // phi(y2) = 1: phi(y1 y2) = -y1
  const GeneratorImages psi{P(r, "0"), P(r, "1")};
  CHECK(apply_derivation(P(r, "y1*y2"), psi, Parity::Odd) == P(r, "-y1"));
}

TEST_CASE("mixing rings is a structural error") {
  auto a = test::ring({"x"}, {});
  auto b = test::ring({"z"}, {});
  CHECK_THROWS_AS(P(a, "x") + P(b, "z"), StructuralError);
}

TEST_CASE("fields") {
  CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
  const Field f7 = Field::prime(7);
  CHECK((Scalar(3, f7) * Scalar(5, f7)) == Scalar(1, f7));
  CHECK(Scalar(3, f7).inverse() == Scalar(5, f7));
  CHECK(Scalar::parse("1/2", f7) == Scalar(4, f7));
  CHECK(Scalar::parse("-3/6").str() == "-1/2");
  CHECK_THROWS_AS(Scalar(1) + Scalar(1, f7), StructuralError);
}

TEST_CASE("ring arithmetic laws on random triples") {
  std::mt19937_64 rng(11);
  int cases = 0;
  for (std::size_t m = 0; m <= 4; ++m) {
    for (std::size_t n = 0; m + n <= 4; ++n) {
      std::vector<std::string> even, odd;
      for (std::size_t i = 0; i < m; ++i) even.push_back("x" + std::to_string(i + 1));
      for (std::size_t i = 0; i < n; ++i) odd.push_back("y" + std::to_string(i + 1));
      auto r = test::ring(even, odd);
      for (int k = 0; k < 1000; ++k, ++cases) {
        const SuperPoly f = test::random_poly(r, rng, 3, 4);
        const SuperPoly g = test::random_poly(r, rng, 3, 4);
        const SuperPoly h = test::random_poly(r, rng, 3, 4);
        REQUIRE((f * g) * h == f * (g * h));
        REQUIRE(f * (g + h) == f * g + f * h);
        REQUIRE((f + g) * h == f * h + g * h);
      }
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("supercommutativity and parity of products") {
  std::mt19937_64 rng(12);
  auto r = test::ring({"x1", "x2"}, {"y1", "y2", "y3"});
  for (int k = 0; k < 500; ++k) {
    const Parity pf = static_cast<Parity>(rng() % 2);
    const Parity pg = static_cast<Parity>(rng() % 2);
    const SuperPoly f = test::random_homogeneous(r, rng, 4, 4, pf);
    const SuperPoly g = test::random_homogeneous(r, rng, 4, 4, pg);
    const SuperPoly fg = f * g;
    const SuperPoly gf = g * f;
    if (pf == Parity::Odd && pg == Parity::Odd) {
      REQUIRE(fg == -gf);
      REQUIRE((fg * fg).is_zero());
      REQUIRE((f * f).is_zero());
    } else {
      REQUIRE(fg == gf);
    }
    REQUIRE(fg.has_parity(pf + pg));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const SuperPoly y = SuperPoly::odd_var(r, i);
    CHECK((y * y).is_zero());
  }
}

TEST_CASE("square of an odd derivation is the even derivation of phi^2") {
  std::mt19937_64 rng(13);
  auto r = test::ring({"x1", "x2"}, {"y1", "y2"});
  for (int trial = 0; trial < 50; ++trial) {
    GeneratorImages phi;
    for (std::size_t i = 0; i < 2; ++i) phi.push_back(test::random_homogeneous(r, rng, 3, 3, Parity::Odd));
    for (std::size_t i = 0; i < 2; ++i) phi.push_back(test::random_homogeneous(r, rng, 3, 3, Parity::Even));
    GeneratorImages phi2;
    for (const auto& g : identity_images(r)) {
      phi2.push_back(apply_derivation(apply_derivation(g, phi, Parity::Odd), phi, Parity::Odd));
    }
    for (int k = 0; k < 10; ++k) {
      const SuperPoly f = test::random_poly(r, rng, 4, 4);
      const SuperPoly twice = apply_derivation(apply_derivation(f, phi, Parity::Odd), phi, Parity::Odd);
      REQUIRE(twice == apply_derivation(f, phi2, Parity::Even));
    }
  }
}

TEST_CASE("odd derivation obeys the signed Leibniz rule") {
  std::mt19937_64 rng(14);
  auto r = test::ring({"x"}, {"y1", "y2", "y3"});
  GeneratorImages phi{test::random_homogeneous(r, rng, 3, 3, Parity::Odd)};
  for (std::size_t i = 0; i < 3; ++i) phi.push_back(test::random_homogeneous(r, rng, 3, 3, Parity::Even));
  for (int k = 0; k < 200; ++k) {
    const Parity pu = static_cast<Parity>(rng() % 2);
    const SuperPoly u = test::random_homogeneous(r, rng, 3, 3, pu);
    const SuperPoly v = test::random_poly(r, rng, 3, 3);
    const SuperPoly lhs = apply_derivation(u * v, phi, Parity::Odd);
    SuperPoly rhs = apply_derivation(u, phi, Parity::Odd) * v;
    const SuperPoly tail = u * apply_derivation(v, phi, Parity::Odd);
    rhs = pu == Parity::Odd ? rhs - tail : rhs + tail;
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("substitution is multiplicative") {
  std::mt19937_64 rng(15);
  auto src = test::ring({"x"}, {"y1", "y2"});
  auto dst = test::ring({"u", "v"}, {"s", "t", "w"});
  GeneratorImages images{test::random_homogeneous(dst, rng, 3, 2, Parity::Even),
                         test::random_homogeneous(dst, rng, 3, 3, Parity::Odd),
                         test::random_homogeneous(dst, rng, 3, 3, Parity::Odd)};
  for (int k = 0; k < 100; ++k) {
    const SuperPoly f = test::random_poly(src, rng, 3, 3);
    const SuperPoly g = test::random_poly(src, rng, 3, 3);
    REQUIRE(substitute(f * g, images, dst) == substitute(f, images, dst) * substitute(g, images, dst));
  }
}

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(5);
  auto r = test::ring({"x"}, {"y"}, f);
  CHECK((P(r, "3*x") + P(r, "2*x")).is_zero());
  CHECK(P(r, "x*1/2").str() == "3*x");
}

TEST_CASE("rendering parses back to the same polynomial") {
  std::mt19937_64 rng(16);
  auto r = test::ring({"x1", "x2"}, {"y1", "y2", "y3"});
  auto p = test::ring({"x"}, {"y1", "y2"}, Field::prime(11));
  for (int k = 0; k < 300; ++k) {
    SuperPoly f = test::random_poly(r, rng, 5, 5);
    f = Scalar::parse("-7/3") * f + test::random_poly(r, rng, 2, 2);
    REQUIRE(parse_poly(f.str(), r) == f);
    const SuperPoly g = test::random_poly(p, rng, 4, 4);
    REQUIRE(parse_poly(g.str(), p) == g);
  }
}
