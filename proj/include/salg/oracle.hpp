#pragma once

// Degree-truncated dense linear algebra over the ambient ring. Shares no
// code with the Gröbner kernel beyond polynomial arithmetic; used as an
// independent check of membership and annihilator computations.

#include <map>
#include <span>
#include <vector>

#include "salg/superalgebra.hpp"

namespace salg {

/// All monomials of total degree (even degree + odd degree) at most `degree`.
std::vector<SuperMonomial> monomials_up_to(const SuperRing& ring, unsigned degree);

/// The k-span of { x^a y_T g : g a generator, deg(x^a y_T) + deg(g) <= max_degree }.
class TruncatedIdealOracle {
 public:
  TruncatedIdealOracle(const RingPtr& ring, std::span<const SuperPoly> generators,
                       unsigned max_degree);

  /// Canonical remainder: no term is a pivot of the echelon basis.
  SuperPoly reduce(const SuperPoly& f) const;
  bool contains(const SuperPoly& f) const { return reduce(f).is_zero(); }
  std::size_t rank() const { return rows_.size(); }
  unsigned max_degree() const { return max_degree_; }

 private:
  void insert(SuperPoly f);

  RingPtr ring_;
  unsigned max_degree_;
  std::map<SuperMonomial, SuperPoly, MonomialGreater> rows_;
};

/// Basis of { f : deg f <= degree, f p in the truncated span of J }.
std::vector<SuperPoly> truncated_annihilator(const SuperAlgebra& a, const SuperPoly& p,
                                             unsigned degree, unsigned ideal_degree);

}  // namespace salg
