#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "salg/scalar.hpp"

namespace salg {

/// Raised when an element or map has the wrong Z/2 degree.
class ParityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) & 1);
}

/// Which list a generator belongs to and its position in it.
struct Generator {
  Parity parity;
  std::size_t index;
};

/// Ordered even and odd generator names plus the coefficient field.
/// Odd generators are limited to 63 so odd monomials fit a bitmask.
class SuperRing {
 public:
  static std::shared_ptr<const SuperRing> make(std::vector<std::string> even,
                                               std::vector<std::string> odd, Field field = {});

  std::size_t num_even() const { return even_.size(); }
  std::size_t num_odd() const { return odd_.size(); }
  const std::vector<std::string>& even_names() const { return even_; }
  const std::vector<std::string>& odd_names() const { return odd_; }
  const std::string& name(Generator g) const {
    return g.parity == Parity::Even ? even_[g.index] : odd_[g.index];
  }
  Field field() const { return field_; }

  std::optional<Generator> find(std::string_view name) const;

  /// Same generators with one more even variable appended.
  std::shared_ptr<const SuperRing> with_even(const std::string& name) const;
  /// Copy over another field.
  std::shared_ptr<const SuperRing> over(Field f) const;

  friend bool operator==(const SuperRing& a, const SuperRing& b) {
    return a.even_ == b.even_ && a.odd_ == b.odd_ && a.field_ == b.field_;
  }

 private:
  SuperRing() = default;
  std::vector<std::string> even_, odd_;
  Field field_;
};

using RingPtr = std::shared_ptr<const SuperRing>;

/// x^exp * y_S with S given as a bitmask (bit i is the (i+1)-th odd generator).
struct SuperMonomial {
  std::vector<std::uint32_t> exp;
  std::uint64_t odd = 0;

  unsigned even_degree() const;
  unsigned odd_degree() const;
  unsigned total_degree() const { return even_degree() + odd_degree(); }
  Parity parity() const { return static_cast<Parity>(odd_degree() & 1); }
  bool is_one() const;

  friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

/// Sign of y_S * y_T rewritten as y_{S u T}; 0 when S and T overlap.
int odd_product_sign(std::uint64_t s, std::uint64_t t);

/// Degree-reverse-lexicographic on even exponents, then |S|, then indices
/// (lower index is larger). Greater means "leads".
std::strong_ordering drevlex(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::strong_ordering odd_order(std::uint64_t a, std::uint64_t b);
std::strong_ordering monomial_order(const SuperMonomial& a, const SuperMonomial& b);

struct MonomialGreater {
  bool operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    return monomial_order(a, b) == std::strong_ordering::greater;
  }
};

/// Element of k[x_1..x_m | y_1..y_n]. Terms are kept strictly descending in
/// the global monomial order with nonzero coefficients.
class SuperPoly {
 public:
  using Term = std::pair<SuperMonomial, Scalar>;

  explicit SuperPoly(RingPtr ring);
  SuperPoly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static SuperPoly constant(RingPtr ring, const Scalar& c);
  static SuperPoly constant(RingPtr ring, long c);
  static SuperPoly even_var(RingPtr ring, std::size_t i);
  static SuperPoly odd_var(RingPtr ring, std::size_t i);
  static SuperPoly var(RingPtr ring, Generator g);
  static SuperPoly monomial(RingPtr ring, SuperMonomial m, const Scalar& c);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Scalar constant_term() const;
  const Term& leading() const { return terms_.front(); }

  /// Parity if homogeneous; the zero polynomial is homogeneous of both parities.
  std::optional<Parity> parity() const;
  bool has_parity(Parity p) const;
  SuperPoly part(Parity p) const;

  unsigned total_degree() const;

  SuperPoly operator-() const;
  SuperPoly& operator+=(const SuperPoly& o);
  SuperPoly& operator-=(const SuperPoly& o);
  friend SuperPoly operator+(SuperPoly a, const SuperPoly& b) { return a += b; }
  friend SuperPoly operator-(SuperPoly a, const SuperPoly& b) { return a -= b; }
  friend SuperPoly operator*(const SuperPoly& a, const SuperPoly& b);
  friend SuperPoly operator*(const Scalar& c, const SuperPoly& f);
  SuperPoly pow(unsigned e) const;

  friend bool operator==(const SuperPoly& a, const SuperPoly& b);

  std::string str() const;

 private:
  void check_ring(const SuperPoly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const SuperPoly& f) { return os << f.str(); }

/// Canonical text for one monomial, e.g. `x1^2*y1y3`; "1" for the unit.
std::string render_monomial(const SuperRing& ring, const SuperMonomial& m);

/// Value at a rational point: even generators substituted, odd ones sent to 0.
Scalar evaluate_at_point(const SuperPoly& f, const std::map<std::string, Scalar>& point);

/// Images of all generators, even ones first, in ring order.
using GeneratorImages = std::vector<SuperPoly>;

/// Extends a generator map to a superderivation of the given parity via
/// phi(uv) = phi(u)v + (-1)^{parity |u|} u phi(v).
SuperPoly apply_derivation(const SuperPoly& f, const GeneratorImages& images, Parity parity);

/// Throws ParityError unless every image has parity |g| + parity.
void check_derivation_parity(const SuperRing& ring, const GeneratorImages& images, Parity parity);

/// Algebra map sending each generator of f's ring to the given image.
/// Images of odd generators should be odd and of even generators even.
SuperPoly substitute(const SuperPoly& f, const GeneratorImages& images, const RingPtr& target);

/// Every generator mapped to itself, for building morphisms by editing.
GeneratorImages identity_images(const RingPtr& ring);

}  // namespace salg
