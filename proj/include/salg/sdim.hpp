#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "salg/superalgebra.hpp"

namespace salg {

/// Krull dimension of the zero ring.
inline constexpr int kEmptyDim = std::numeric_limits<int>::min();

/// Ksdim_0 | Ksdim_1, ordered lexicographically.
struct SuperDim {
  int even = 0;
  int odd = 0;

  friend auto operator<=>(const SuperDim&, const SuperDim&) = default;
  std::string str() const;
};

/// A/I_A: odd generators dropped, relations restricted to their odd-free part.
SuperAlgebra bar(const SuperAlgebra& a);

/// Krull dimension of a purely even presentation, as the largest set of
/// variables independent modulo the leading-term ideal.
int krull_dim(const SuperAlgebra& commutative);

/// Kdim(A_0), computed as Kdim of bar(A) since A_0 A_1^2 is nil.
int krull_dim_even(const SuperAlgebra& a);

struct OddParamCertificate {
  std::vector<SuperPoly> elements;
  /// Ann_A(y_1...y_k); absent for the empty system.
  std::optional<SuperIdeal> annihilator;
  /// Kdim(A_0 / Ann_{A_0}(y_1...y_k)).
  int even_dim_witness = 0;
};

struct OddParamCheck {
  bool is_system = false;
  OddParamCertificate certificate;
};

/// Throws ParityError unless each element is odd.
OddParamCheck is_odd_parameter_system(const SuperAlgebra& a, const std::vector<SuperPoly>& ys);

struct KsdimOptions {
  std::vector<SuperPoly> extra_candidates;
  unsigned random_candidates = 2;
  std::uint64_t seed = 1;
};

struct KsdimResult {
  SuperDim dim;
  OddParamCertificate certificate;
};

/// Even part exact; odd part is the longest system found over a finite
/// candidate set, capped by the number of odd generators.
KsdimResult ksdim(const SuperAlgebra& a, const KsdimOptions& options = {});

/// Ann_A(y_1...y_k) == A y_1 + ... + A y_k.
bool is_odd_regular_sequence(const SuperAlgebra& a, const std::vector<SuperPoly>& ys);

/// dim_k A_1 / m A_1 at a rational point, m the maximal ideal of A_0.
int phi_dim_at_point(const SuperAlgebra& a, const PointIdeal& pt);

/// Odd monomials whose classes form a basis of A_1 / m A_1.
std::vector<SuperPoly> phi_basis_at_point(const SuperAlgebra& a, const PointIdeal& pt);

/// Sufficient test: a lift of a basis of Phi_A is an odd regular sequence.
bool check_oddly_regular_at_point(const SuperAlgebra& a, const PointIdeal& pt);

/// Same generators; relations are the lowest odd-weight forms of a Gröbner
/// basis for an order refining the odd-weight filtration.
SuperAlgebra gr_presentation(const SuperAlgebra& a);

/// True when every relation has all terms of one odd degree.
bool is_odd_weight_homogeneous(const SuperAlgebra& a);

/// Number of standard monomials of A / I_A^{weight+1} with even degree at
/// most max_even_degree.
std::size_t filtration_slice_dim(const SuperAlgebra& a, unsigned weight,
                                 unsigned max_even_degree);

inline SuperDim sdim_affine(const SuperAlgebra& a, const KsdimOptions& options = {}) {
  return ksdim(a, options).dim;
}

struct CoverReport {
  std::vector<SuperDim> local;        // per cover element; zero rings get kEmptyDim
  SuperDim combined;                  // lexicographic max with the odd part over J
  SuperDim global;
  bool agrees = false;
};

/// Requires sum A_0 a_i = A_0 (throws std::invalid_argument otherwise).
CoverReport verify_cover(const SuperAlgebra& a, const std::vector<SuperPoly>& cover,
                         const KsdimOptions& options = {});

}  // namespace salg
