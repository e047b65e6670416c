#include "salg/sdim.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <stdexcept>

namespace salg {

std::string SuperDim::str() const {
  const std::string e = even == kEmptyDim ? "-inf" : std::to_string(even);
  return e + "|" + std::to_string(odd);
}

SuperAlgebra bar(const SuperAlgebra& a) {
  const RingPtr ring = SuperRing::make(a.ring()->even_names(), {}, a.ring()->field());
  std::vector<SuperPoly> rels;
  for (const auto& r : a.relations()) {
    std::vector<SuperPoly::Term> terms;
    for (const auto& [m, c] : r.terms()) {
      if (m.odd == 0) terms.emplace_back(m, c);
    }
    SuperPoly f(ring, std::move(terms));
    if (!f.is_zero()) rels.push_back(std::move(f));
  }
  return SuperAlgebra(ring, std::move(rels));
}

int krull_dim(const SuperAlgebra& commutative) {
  if (commutative.ring()->num_odd() != 0) {
    throw StructuralError("krull_dim expects a purely even presentation");
  }
  if (commutative.is_zero_ring()) return kEmptyDim;
  const std::size_t m = commutative.ring()->num_even();
  std::vector<std::uint64_t> supports;
  for (const ModuleTerm* lead : commutative.gb().leads()) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (lead->exp[i] > 0) s |= std::uint64_t{1} << i;
    }
    supports.push_back(s);
  }
  if (m > 24) throw std::length_error("too many even variables for the independent-set search");
  int best = 0;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << m); ++u) {
    const int size = std::popcount(u);
    if (size <= best) continue;
    const bool independent = std::none_of(supports.begin(), supports.end(),
                                          [u](std::uint64_t s) { return (s & ~u) == 0; });
    if (independent) best = size;
  }
  return best;
}

int krull_dim_even(const SuperAlgebra& a) { return krull_dim(bar(a)); }

namespace {

void require_odd(const std::vector<SuperPoly>& ys) {
  for (const auto& y : ys) {
    if (!y.has_parity(Parity::Odd)) throw ParityError("expected an odd element, got " + y.str());
  }
}

SuperPoly product(const SuperAlgebra& a, const std::vector<SuperPoly>& ys) {
  SuperPoly p = a.constant(1);
  for (const auto& y : ys) p = a.normal_form(p * y);
  return p;
}

/// Image of Ann_{A_0}(p) in bar(A): odd-free parts of the even annihilators.
SuperAlgebra bar_modulo(const SuperAlgebra& a, const SuperIdeal& ann) {
  const SuperAlgebra base = bar(a);
  std::vector<SuperPoly> extra;
  for (const auto& g : ann.parity_generators(Parity::Even)) {
    std::vector<SuperPoly::Term> terms;
    for (const auto& [m, c] : g.terms()) {
      if (m.odd == 0) terms.emplace_back(m, c);
    }
    SuperPoly f(base.ring(), std::move(terms));
    if (!f.is_zero()) extra.push_back(std::move(f));
  }
  return base.quotient(extra);
}

}  // namespace

OddParamCheck is_odd_parameter_system(const SuperAlgebra& a, const std::vector<SuperPoly>& ys) {
  require_odd(ys);
  OddParamCheck out;
  out.certificate.elements = ys;
  const SuperPoly p = product(a, ys);
  if (p.is_zero()) {
    out.certificate.even_dim_witness = kEmptyDim;
    return out;
  }
  Annihilator ann = annihilator(p, a);
  const int full = krull_dim_even(a);
  const int reduced = krull_dim(bar_modulo(a, ann.ideal));
  out.certificate.annihilator = std::move(ann.ideal);
  out.certificate.even_dim_witness = reduced;
  out.is_system = reduced == full;
  return out;
}

KsdimResult ksdim(const SuperAlgebra& a, const KsdimOptions& options) {
  KsdimResult result;
  const int even = krull_dim_even(a);
  result.dim.even = even;
  result.certificate.even_dim_witness = even;
  if (even == kEmptyDim) return result;

  // candidate pool, deduplicated by normal form, in a fixed order
  std::vector<SuperPoly> pool;
  auto offer = [&](const SuperPoly& c) {
    SuperPoly nf = a.normal_form(c);
    if (nf.is_zero()) return;
    if (!nf.has_parity(Parity::Odd)) throw ParityError("candidate is not odd: " + c.str());
    for (const auto& q : pool) {
      if (q == nf) return;
    }
    pool.push_back(std::move(nf));
  };
  const auto module_gens = odd_module_generators(a);
  for (const auto& g : module_gens) offer(g);
  for (const auto& g : options.extra_candidates) offer(g);
  std::mt19937_64 rng(options.seed);
  for (unsigned r = 0; r < options.random_candidates && !module_gens.empty(); ++r) {
    SuperPoly combo(a.ring());
    for (const auto& g : module_gens) {
      const long c = static_cast<long>(rng() % 7) - 3;
      combo += Scalar(c, a.ring()->field()) * g;
    }
    offer(combo);
  }

  const std::size_t cap = a.ring()->num_odd();
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    for (std::size_t i = start; i < pool.size() && best.size() < cap; ++i) {
      current.push_back(i);
      std::vector<SuperPoly> elems;
      for (auto k : current) elems.push_back(pool[k]);
      OddParamCheck check = is_odd_parameter_system(a, elems);
      if (check.is_system) {
        if (current.size() > best.size()) {
          best = current;
          result.certificate = std::move(check.certificate);
        }
        extend(i + 1);
      }
      current.pop_back();
    }
  };
  extend(0);
  result.dim.odd = static_cast<int>(best.size());
  return result;
}

bool is_odd_regular_sequence(const SuperAlgebra& a, const std::vector<SuperPoly>& ys) {
  require_odd(ys);
  const SuperPoly p = product(a, ys);
  const Annihilator ann = annihilator(p, a);
  return ideal_equal(ann.ideal, SuperIdeal(a, ys));
}

std::vector<SuperPoly> phi_basis_at_point(const SuperAlgebra& a, const PointIdeal& pt) {
  check_point(a, pt);
  auto gens = point_even_generators(a, pt);
  for (auto& g : even_odd_monomials(a)) gens.push_back(std::move(g));
  const SuperIdeal m_a(a, std::move(gens));

  const std::size_t m = a.ring()->num_even();
  const auto leads = m_a.gb().leads();
  std::vector<SuperPoly> basis;
  for (const auto& y : odd_module_generators(a)) {
    const std::uint64_t s = y.leading().first.odd;
    // each x_i e_S reduces because the point is rational; only e_S can survive
    for (std::size_t i = 0; i < m; ++i) {
      bool pure_power = false;
      for (const ModuleTerm* lead : leads) {
        if (lead->comp != s) continue;
        bool only_i = true;
        for (std::size_t k = 0; k < m; ++k) {
          if (k != i && lead->exp[k] != 0) only_i = false;
        }
        if (only_i) pure_power = true;
      }
      if (!pure_power) throw std::logic_error("A / mA is not finite-dimensional");
    }
    const bool standard = std::none_of(
        leads.begin(), leads.end(), [s](const ModuleTerm* lead) {
          return lead->comp == s &&
                 std::all_of(lead->exp.begin(), lead->exp.end(), [](auto e) { return e == 0; });
        });
    if (standard) basis.push_back(y);
  }
  return basis;
}

int phi_dim_at_point(const SuperAlgebra& a, const PointIdeal& pt) {
  return static_cast<int>(phi_basis_at_point(a, pt).size());
}

bool check_oddly_regular_at_point(const SuperAlgebra& a, const PointIdeal& pt) {
  return is_odd_regular_sequence(a, phi_basis_at_point(a, pt));
}

SuperAlgebra gr_presentation(const SuperAlgebra& a) {
  const ModuleOrder order(ModuleOrder::Kind::LowestOddWeight);
  std::vector<ModuleVector> gens;
  for (const auto& g : superideal_closure(a.relations())) gens.push_back(to_module(g, order));
  const ModuleGB gb = ModuleGB::compute(std::move(gens), order, a.ring()->field());
  std::vector<SuperPoly> forms;
  for (const auto& v : gb.basis()) {
    const int w = std::popcount(v[0].comp);
    ModuleVector lowest;
    for (const auto& t : v) {
      if (std::popcount(t.comp) == w) lowest.push_back(t);
    }
    forms.push_back(from_module(lowest, a.ring()));
  }
  // the initial forms of a module basis are highly redundant as superideal generators
  return SuperAlgebra(a.ring(), SuperIdeal(SuperAlgebra::free(a.ring()), std::move(forms)).minimal_generators());
}

bool is_odd_weight_homogeneous(const SuperAlgebra& a) {
  for (const auto& r : a.relations()) {
    const unsigned w = r.leading().first.odd_degree();
    for (const auto& [m, c] : r.terms()) {
      if (m.odd_degree() != w) return false;
    }
  }
  return true;
}

std::size_t filtration_slice_dim(const SuperAlgebra& a, unsigned weight,
                                 unsigned max_even_degree) {
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->num_odd();
  const std::size_t m = ring->num_even();
  std::vector<SuperPoly> gens = a.relations();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<unsigned>(std::popcount(s)) > weight) {
      gens.push_back(SuperPoly::monomial(
          ring, SuperMonomial{std::vector<std::uint32_t>(m, 0), s}, Scalar(1, ring->field())));
    }
  }
  const SuperAlgebra truncated(ring, gens);
  const auto leads = truncated.gb().leads();

  std::size_t count = 0;
  std::vector<std::uint32_t> exp(m, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t var, unsigned budget) {
    if (var == m) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        ModuleTerm t{s, exp, Scalar(1, ring->field())};
        const bool standard = std::none_of(leads.begin(), leads.end(),
                                           [&](const ModuleTerm* l) { return divides(*l, t); });
        if (standard) ++count;
      }
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      exp[var] = e;
      walk(var + 1, budget - e);
    }
    exp[var] = 0;
  };
  walk(0, max_even_degree);
  return count;
}

CoverReport verify_cover(const SuperAlgebra& a, const std::vector<SuperPoly>& cover,
                         const KsdimOptions& options) {
  if (cover.empty() || !SuperIdeal(a, cover).is_unit()) {
    throw std::invalid_argument("cover elements do not generate the unit ideal of A_0");
  }
  CoverReport report;
  report.global = ksdim(a, options).dim;
  int top = kEmptyDim;
  for (const auto& c : cover) {
    const Localization loc = localize_at_even(a, c);
    SuperDim d{kEmptyDim, 0};
    if (!loc.zero_ring) d = ksdim(loc.algebra, options).dim;
    report.local.push_back(d);
    top = std::max(top, d.even);
  }
  report.combined = SuperDim{top, 0};
  for (const auto& d : report.local) {
    if (d.even == top) report.combined.odd = std::max(report.combined.odd, d.odd);
  }
  report.agrees = report.combined == report.global;
  return report;
}

}  // namespace salg
