#pragma once

#include <random>
#include <string_view>

#include "salg/dsl.hpp"

namespace salg::test {

inline RingPtr ring(std::vector<std::string> even, std::vector<std::string> odd, Field f = {}) {
  return SuperRing::make(std::move(even), std::move(odd), f);
}

inline SuperPoly P(const RingPtr& r, std::string_view text) { return parse_poly(text, r); }

inline SuperAlgebra algebra(std::string_view doc, Field f = {}) { return parse_algebra(doc, f).algebra(); }

inline SuperMonomial random_monomial(const RingPtr& r, std::mt19937_64& rng, unsigned degree) {
  SuperMonomial m{std::vector<std::uint32_t>(r->num_even(), 0), 0};
  if (r->num_even() + r->num_odd() == 0) return m;
  const unsigned target = static_cast<unsigned>(rng() % (degree + 1));
  for (unsigned k = 0; k < target; ++k) {
    const std::size_t v = rng() % (r->num_even() + r->num_odd());
    if (v < r->num_even()) {
      ++m.exp[v];
    } else {
      m.odd |= std::uint64_t{1} << (v - r->num_even());
    }
  }
  return m;
}

/// Up to `terms` random terms with coefficients in [-3, 3] and degree <= `degree`.
inline SuperPoly random_poly(const RingPtr& r, std::mt19937_64& rng, unsigned terms, unsigned degree) {
  SuperPoly f(r);
  for (unsigned k = 0; k < terms; ++k) {
    const long c = static_cast<long>(rng() % 7) - 3;
    f += SuperPoly::monomial(r, random_monomial(r, rng, degree), Scalar(c, r->field()));
  }
  return f;
}

inline SuperPoly random_homogeneous(const RingPtr& r, std::mt19937_64& rng, unsigned terms,
                                    unsigned degree, Parity p) {
  return random_poly(r, rng, terms, degree).part(p);
}

}  // namespace salg::test
