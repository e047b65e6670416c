#pragma once

// Actions of the odd additive group G_a^- on affine superschemes. An action
// is an odd superderivation phi with phi^2 = 0; the coaction is
// f -> 1 (x) f + z (x) phi(f).

#include <optional>
#include <string>
#include <vector>

#include "salg/report.hpp"
#include "salg/sdim.hpp"
#include "salg/superalgebra.hpp"

namespace salg {

struct OddAction {
  SuperAlgebra algebra;
  /// Images of all generators, even ones first.
  GeneratorImages phi;

  /// phi(f) reduced in the algebra.
  SuperPoly apply(const SuperPoly& f) const;
};

/// Throws ParityError unless phi is odd; reports phi(J) in J and phi^2 = 0.
CheckReport validate_action(const OddAction& act);

enum class Stabilizer { Full, Trivial };

std::string to_string(Stabilizer s);

struct OrbitResult {
  SuperIdeal ideal;
  SuperAlgebra quotient;
  Stabilizer stabilizer;
  SuperDim sdim;
  /// Odd module generators w_i with lambda_i = phi(w_i) at the point.
  std::vector<SuperPoly> odd_generators;
  std::vector<Scalar> lambdas;
  std::optional<std::size_t> pivot;
};

/// I = m + phi^{-1}(m) at a rational point. `pivot` overrides the default
/// (smallest j with lambda_j != 0) and must be admissible.
OrbitResult orbit_ideal(const OddAction& act, const PointIdeal& pt,
                        std::optional<std::size_t> pivot = std::nullopt);

Stabilizer stabilizer_type(const OddAction& act, const PointIdeal& pt);

/// Per point: phi-stability of I, even part of I equal to m, m A_1 inside I,
/// the stabilizer dichotomy and sdim(orbit) = sdim(G) - sdim(G_x).
struct OrbitVerification {
  PointIdeal point;
  OrbitResult orbit;
  CheckReport report;
};

std::vector<OrbitVerification> verify_orbit_theorems(const OddAction& act,
                                                     const std::vector<PointIdeal>& points);

/// Over Lambda(s) with g(z) = s: f -> x(f) + s x(phi(f)), extended
/// multiplicatively from the generators, agrees with the formula itself on
/// all monomials up to `degree` and kills the relations.
AxiomCheck check_translation_formula(const OddAction& act, const PointIdeal& pt,
                                     unsigned degree = 4);

/// "x = 2" style rendering of a point.
std::string render_point(const PointIdeal& pt);

}  // namespace salg
