#include "salg/oracle.hpp"

#include <bit>
#include <functional>

namespace salg {

std::vector<SuperMonomial> monomials_up_to(const SuperRing& ring, unsigned degree) {
  const std::size_t m = ring.num_even();
  const std::size_t n = ring.num_odd();
  std::vector<SuperMonomial> out;
  std::vector<std::uint32_t> exp(m, 0);
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t var, unsigned budget) {
    if (var == m) {
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        if (static_cast<unsigned>(std::popcount(s)) <= budget) out.push_back({exp, s});
      }
      return;
    }
    for (unsigned e = 0; e <= budget; ++e) {
      exp[var] = e;
      walk(var + 1, budget - e);
    }
    exp[var] = 0;
  };
  walk(0, degree);
  return out;
}

TruncatedIdealOracle::TruncatedIdealOracle(const RingPtr& ring,
                                           std::span<const SuperPoly> generators,
                                           unsigned max_degree)
    : ring_(ring), max_degree_(max_degree) {
  for (const auto& g : homogeneous_components(generators)) {
    const unsigned dg = g.total_degree();
    if (dg > max_degree) continue;
    for (const auto& m : monomials_up_to(*ring, max_degree - dg)) {
      insert(SuperPoly::monomial(ring, m, Scalar(1, ring->field())) * g);
    }
  }
}

SuperPoly TruncatedIdealOracle::reduce(const SuperPoly& f) const {
  SuperPoly rem(ring_);
  SuperPoly work = f;
  while (!work.is_zero()) {
    const auto& [m, c] = work.leading();
    auto it = rows_.find(m);
    if (it == rows_.end()) {
      rem += SuperPoly::monomial(ring_, m, c);
      work -= SuperPoly::monomial(ring_, m, c);
    } else {
      work -= c * it->second;
    }
  }
  return rem;
}

void TruncatedIdealOracle::insert(SuperPoly f) {
  f = reduce(f);
  if (f.is_zero()) return;
  const Scalar inv = f.leading().second.inverse();
  f = inv * f;
  const SuperMonomial pivot = f.leading().first;
  rows_.emplace(pivot, std::move(f));
}

std::vector<SuperPoly> truncated_annihilator(const SuperAlgebra& a, const SuperPoly& p,
                                             unsigned degree, unsigned ideal_degree) {
  const RingPtr& ring = a.ring();
  const TruncatedIdealOracle ideal(ring, a.relations(), ideal_degree);

  // echelon rows (image, combination) keyed by the image's leading monomial
  std::map<SuperMonomial, std::pair<SuperPoly, SuperPoly>, MonomialGreater> rows;
  std::vector<SuperPoly> kernel;
  for (const auto& m : monomials_up_to(*ring, degree)) {
    SuperPoly comb = SuperPoly::monomial(ring, m, Scalar(1, ring->field()));
    SuperPoly image = ideal.reduce(comb * p);
    while (!image.is_zero()) {
      auto it = rows.find(image.leading().first);
      if (it == rows.end()) break;
      const Scalar c = image.leading().second;
      image -= c * it->second.first;
      comb -= c * it->second.second;
    }
    if (image.is_zero()) {
      kernel.push_back(std::move(comb));
    } else {
      const Scalar inv = image.leading().second.inverse();
      const SuperMonomial pivot = image.leading().first;
      rows.emplace(pivot, std::make_pair(inv * image, inv * comb));
    }
  }
  return kernel;
}

}  // namespace salg
