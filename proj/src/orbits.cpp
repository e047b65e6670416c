#include "salg/orbits.hpp"

#include <stdexcept>

#include "salg/oracle.hpp"

namespace salg {

SuperPoly OddAction::apply(const SuperPoly& f) const {
  return algebra.normal_form(apply_derivation(f, phi, Parity::Odd));
}

CheckReport validate_action(const OddAction& act) {
  const RingPtr& ring = act.algebra.ring();
  check_derivation_parity(*ring, act.phi, Parity::Odd);
  CheckReport report;

  AxiomCheck defined{"phi(J) lies in J", true, ""};
  for (const auto& r : act.algebra.relations()) {
    const SuperPoly v = act.apply(r);
    if (!v.is_zero()) {
      defined.ok = false;
      defined.witness = "phi(" + r.str() + ") = " + v.str() + " is not in J";
      break;
    }
  }
  report.checks.push_back(defined);

  AxiomCheck square{"phi^2 = 0", true, ""};
  const GeneratorImages gens = identity_images(ring);
  for (const auto& g : gens) {
    const SuperPoly v = act.apply(act.apply(g));
    if (!v.is_zero()) {
      square.ok = false;
      square.witness = "phi(phi(" + g.str() + ")) = " + v.str();
      break;
    }
  }
  report.checks.push_back(square);
  return report;
}

std::string to_string(Stabilizer s) { return s == Stabilizer::Full ? "full" : "trivial"; }

std::string render_point(const PointIdeal& pt) {
  std::string out;
  for (const auto& [name, value] : pt.coords) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value.str();
  }
  return out;
}

namespace {

std::vector<SuperPoly> m_generators(const SuperAlgebra& a, const PointIdeal& pt) {
  auto gens = point_even_generators(a, pt);
  for (auto& g : even_odd_monomials(a)) gens.push_back(std::move(g));
  return gens;
}

}  // namespace

OrbitResult orbit_ideal(const OddAction& act, const PointIdeal& pt, std::optional<std::size_t> pivot) {
  const SuperAlgebra& a = act.algebra;
  check_point(a, pt);

  std::vector<SuperPoly> ws = odd_module_generators(a);
  std::vector<Scalar> lambdas;
  for (const auto& w : ws) lambdas.push_back(evaluate_at_point(act.apply(w), pt.coords));

  std::vector<SuperPoly> gens = m_generators(a, pt);
  std::optional<std::size_t> j;
  for (std::size_t i = 0; i < lambdas.size() && !j; ++i) {
    if (!lambdas[i].is_zero()) j = i;
  }
  if (pivot) {
    if (*pivot >= lambdas.size() || lambdas[*pivot].is_zero()) {
      throw std::invalid_argument("pivot " + std::to_string(*pivot) + " is not admissible");
    }
    j = pivot;
  }

  Stabilizer stab = Stabilizer::Full;
  if (!j) {
    for (const auto& w : ws) gens.push_back(w);
  } else {
    stab = Stabilizer::Trivial;
    const Scalar inv = lambdas[*j].inverse();
    for (std::size_t i = 0; i < ws.size(); ++i) {
      if (i != *j) gens.push_back(ws[i] - (lambdas[i] * inv) * ws[*j]);
    }
    const auto ms = m_generators(a, pt);
    for (const auto& g : ms) gens.push_back(a.normal_form(g * ws[*j]));
  }

  SuperIdeal ideal(a, gens);
  for (const auto& g : ideal.generators()) {
    const SuperPoly image = act.apply(g);
    if (!ideal.contains(image)) {
      throw std::logic_error("orbit ideal is not phi-stable: phi(" + g.str() + ") = " + image.str());
    }
  }
  SuperAlgebra quotient = ideal.quotient();
  const SuperDim dim = ksdim(quotient).dim;
  return OrbitResult{std::move(ideal), std::move(quotient), stab, dim, std::move(ws), std::move(lambdas),
                     stab == Stabilizer::Trivial ? j : std::nullopt};
}

Stabilizer stabilizer_type(const OddAction& act, const PointIdeal& pt) {
  check_point(act.algebra, pt);
  for (const auto& w : odd_module_generators(act.algebra)) {
    if (!evaluate_at_point(act.apply(w), pt.coords).is_zero()) return Stabilizer::Trivial;
  }
  return Stabilizer::Full;
}

std::vector<OrbitVerification> verify_orbit_theorems(const OddAction& act,
                                                     const std::vector<PointIdeal>& points) {
  const SuperAlgebra& a = act.algebra;
  std::vector<OrbitVerification> out;
  for (const auto& pt : points) {
    OrbitResult orbit = orbit_ideal(act, pt);
    CheckReport report;

    AxiomCheck stable{"phi(I) lies in I", true, ""};
    for (const auto& g : orbit.ideal.groebner_basis()) {
      const SuperPoly image = orbit.ideal.normal_form(act.apply(g));
      if (!image.is_zero()) {
        stable.ok = false;
        stable.witness = "phi(" + g.str() + ") leaves " + image.str();
        break;
      }
    }
    report.checks.push_back(stable);

    const auto ms = m_generators(a, pt);
    const SuperIdeal m_ideal(a, ms);
    AxiomCheck even{"even part of I equals m", true, ""};
    for (const auto& g : ms) {
      if (!orbit.ideal.contains(g)) {
        even.ok = false;
        even.witness = g.str() + " is in m but not in I";
      }
    }
    for (const auto& g : orbit.ideal.parity_generators(Parity::Even)) {
      if (!m_ideal.contains(g)) {
        even.ok = false;
        even.witness = g.str() + " is in I but not in m";
      }
    }
    report.checks.push_back(even);

    AxiomCheck odd{"m A_1 lies in I", true, ""};
    for (const auto& g : ms) {
      for (const auto& w : orbit.odd_generators) {
        if (!orbit.ideal.contains(g * w)) {
          odd.ok = false;
          odd.witness = "(" + g.str() + ")*" + w.str() + " is not in I";
        }
      }
    }
    report.checks.push_back(odd);

    const bool full = orbit.stabilizer == Stabilizer::Full;
    AxiomCheck dichotomy{"stabilizer full iff orbit is a point", true, ""};
    if (full != (orbit.sdim == SuperDim{0, 0}) || (!full && orbit.sdim != SuperDim{0, 1})) {
      dichotomy.ok = false;
      dichotomy.witness = "stabilizer " + to_string(orbit.stabilizer) + " with orbit sdim " + orbit.sdim.str();
    }
    report.checks.push_back(dichotomy);

    const SuperDim group{0, 1};
    const SuperDim stab = full ? SuperDim{0, 1} : SuperDim{0, 0};
    const SuperDim expected{group.even - stab.even, group.odd - stab.odd};
    AxiomCheck formula{"sdim(Gx) = sdim(G) - sdim(G_x)", orbit.sdim == expected, ""};
    if (!formula.ok) {
      formula.witness = orbit.sdim.str() + " != " + group.str() + " - " + stab.str();
    }
    report.checks.push_back(formula);

    report.checks.push_back(check_translation_formula(act, pt));
    out.push_back(OrbitVerification{pt, std::move(orbit), std::move(report)});
  }
  return out;
}

AxiomCheck check_translation_formula(const OddAction& act, const PointIdeal& pt, unsigned degree) {
  AxiomCheck c{"(gx)(f) = x(f) + g(z) x(phi(f))", true, ""};
  const SuperAlgebra& a = act.algebra;
  check_point(a, pt);
  const RingPtr& ring = a.ring();
  const Field field = ring->field();
  const RingPtr test = SuperRing::make({}, {"s"}, field);
  const SuperPoly s = SuperPoly::odd_var(test, 0);

  auto formula = [&](const SuperPoly& f) {
    const Scalar fx = evaluate_at_point(f, pt.coords);
    const Scalar dfx = evaluate_at_point(apply_derivation(f, act.phi, Parity::Odd), pt.coords);
    return SuperPoly::constant(test, fx) + dfx * s;
  };

  GeneratorImages images;
  for (const auto& g : identity_images(ring)) images.push_back(formula(g));

  std::vector<SuperPoly> probes;
  for (const auto& m : monomials_up_to(*ring, degree)) {
    probes.push_back(SuperPoly::monomial(ring, m, Scalar(1, field)));
  }
  for (const auto& f : probes) {
    const SuperPoly lhs = substitute(f, images, test);
    const SuperPoly rhs = formula(f);
    if (!(lhs == rhs)) {
      c.ok = false;
      c.witness = "f = " + f.str() + ": multiplicative extension gives " + lhs.str() +
                  ", formula gives " + rhs.str();
      return c;
    }
  }
  for (const auto& r : a.relations()) {
    const SuperPoly v = substitute(r, images, test);
    if (!v.is_zero()) {
      c.ok = false;
      c.witness = "relation " + r.str() + " maps to " + v.str();
      return c;
    }
  }
  return c;
}

}  // namespace salg
