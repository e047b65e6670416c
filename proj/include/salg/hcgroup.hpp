#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "salg/superalgebra.hpp"
#include "salg/report.hpp"
#include "salg/sdim.hpp"

namespace salg {

using ScalarMatrix = std::vector<std::vector<Scalar>>;
using PolyMatrix = std::vector<std::vector<SuperPoly>>;

ScalarMatrix scalar_identity(std::size_t n, Field f);
ScalarMatrix scalar_zero(std::size_t rows, std::size_t cols, Field f);
ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
bool is_zero(const ScalarMatrix& m);
std::optional<ScalarMatrix> inverse(const ScalarMatrix& m);

PolyMatrix poly_identity(const RingPtr& ring, std::size_t n);
PolyMatrix lift(const ScalarMatrix& m, const RingPtr& ring);
/// Product with every entry reduced in `a`.
PolyMatrix multiply(const PolyMatrix& x, const PolyMatrix& y, const SuperAlgebra& a);
PolyMatrix reduce(const PolyMatrix& m, const SuperAlgebra& a);
SuperPoly determinant(const PolyMatrix& m, const SuperAlgebra& a);
std::string render(const PolyMatrix& m);
std::string render(const ScalarMatrix& m);

/// Closed subgroup of GL_N cut out by equations in k[g11..gNN, d], where d
/// stands for det^{-1}.
class EvenGroupSpec {
 public:
  /// Equations must live in coordinate_ring_for(size, field).
  EvenGroupSpec(std::size_t size, std::vector<SuperPoly> equations,
                std::vector<ScalarMatrix> samples = {}, Field field = {});

  static RingPtr coordinate_ring_for(std::size_t size, Field field);

  std::size_t size() const { return size_; }
  /// k[g11, g12, ..., gNN, d] (row-major, then d).
  const RingPtr& coordinate_ring() const { return ring_; }
  const std::vector<SuperPoly>& equations() const { return equations_; }
  /// Equations together with d * det - 1.
  const SuperAlgebra& coordinate_algebra() const { return algebra_; }
  /// Rational points used to build random elements.
  const std::vector<ScalarMatrix>& samples() const { return samples_; }

  /// Images of the coordinate generators for the point (g, g^{-1}).
  GeneratorImages point_images(const PolyMatrix& g, const PolyMatrix& g_inv,
                               const SuperAlgebra& coeffs) const;
  /// First equation not vanishing at (g, g^{-1}) modulo the coefficient
  /// relations, or nullopt.
  std::optional<std::string> violated_equation(const PolyMatrix& g, const PolyMatrix& g_inv,
                                               const SuperAlgebra& coeffs) const;

 private:
  std::size_t size_;
  RingPtr ring_;
  std::vector<SuperPoly> equations_;
  SuperAlgebra algebra_;
  std::vector<ScalarMatrix> samples_;
};

/// Tangent space at the identity: matrices x with df(I)(x) = 0 for every
/// defining equation (d contributes -tr x).
std::vector<ScalarMatrix> lie_algebra_of(const EvenGroupSpec& g);

bool in_lie_algebra(const EvenGroupSpec& g, const ScalarMatrix& x);

struct HCPair {
  std::string name;
  EvenGroupSpec group;
  std::size_t dim = 0;
  /// t x t matrix of polynomials in the coordinate ring: g . v_i = sum_k rho[k][i] v_k.
  PolyMatrix rho;
  /// bracket[i][j] = [v_i, v_j] in Lie(G).
  std::vector<std::vector<ScalarMatrix>> bracket;

  /// Linearization of rho at the identity, applied to x.
  ScalarMatrix drho(const ScalarMatrix& x) const;
};

CheckReport validate_hc_pair(const HCPair& p);

bool is_graded_pair(const HCPair& p);
HCPair gr_pair(const HCPair& p);
/// (Kdim of the coordinate ring of G | dim V).
SuperDim sdim_of_pair(const HCPair& p);

/// Built-ins: "unipotent", "gl1", "osp12", "gl2".
HCPair builtin_pair(const std::string& name, Field field = {});
std::vector<std::string> builtin_pair_names();

/// g e(a_1, v_1) ... e(a_t, v_t), with g given together with its inverse.
struct HCElement {
  PolyMatrix g;
  PolyMatrix g_inv;
  std::vector<SuperPoly> odd;
};

/// Order in which redexes are rewritten.
enum class RewriteStrategy { Leftmost, Rightmost };

struct RewriteStats {
  std::size_t steps = 0;
  /// f-factors emitted by the commutation and merge rules.
  std::size_t corrections = 0;
};

/// The group of A-points of the group superscheme of a Harish-Chandra pair.
class HCGroup {
 public:
  HCGroup(HCPair pair, SuperAlgebra coeffs, bool check_membership = true);

  const HCPair& pair() const { return pair_; }
  const SuperAlgebra& coefficients() const { return coeffs_; }

  /// Word letters: an element of G(A_0) (with inverse) or e(a, v_index).
  struct GroupLetter {
    PolyMatrix m;
    PolyMatrix m_inv;
  };
  struct OddLetter {
    SuperPoly a;
    std::size_t index;
  };
  using Letter = std::variant<GroupLetter, OddLetter>;

  HCElement identity() const;
  /// Computes g^{-1} when g is a rational invertible matrix plus a nilpotent part.
  HCElement make(const PolyMatrix& g, const std::vector<SuperPoly>& odd) const;
  HCElement make(const PolyMatrix& g, const PolyMatrix& g_inv,
                 const std::vector<SuperPoly>& odd) const;

  /// f(b, x) = I + b x for b even with b^2 = 0.
  PolyMatrix f_of(const SuperPoly& b, const ScalarMatrix& x) const;

  HCElement normalize(std::vector<Letter> word, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                      RewriteStats* stats = nullptr) const;
  std::vector<Letter> word(const HCElement& e) const;

  HCElement mul(const HCElement& x, const HCElement& y,
                RewriteStrategy strategy = RewriteStrategy::Leftmost,
                RewriteStats* stats = nullptr) const;
  HCElement inv(const HCElement& x, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                RewriteStats* stats = nullptr) const;
  bool equal(const HCElement& x, const HCElement& y) const;

  std::string render(const HCElement& e) const;

  /// Sample-point products times f-factors, with sparse odd coefficients of
  /// degree 1 and 3.
  HCElement random_element(std::mt19937_64& rng) const;

 private:
  PolyMatrix rho_at(const PolyMatrix& m, const PolyMatrix& m_inv) const;
  PolyMatrix invert(const PolyMatrix& g) const;
  void check_in_group(const PolyMatrix& g, const PolyMatrix& g_inv) const;

  HCPair pair_;
  SuperAlgebra coeffs_;
  bool check_membership_;
  bool rho_uses_d_ = false;
  std::vector<ScalarMatrix> lie_;
};

}  // namespace salg
