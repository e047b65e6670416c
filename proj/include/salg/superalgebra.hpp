#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "salg/module_gb.hpp"
#include "salg/superpoly.hpp"

namespace salg {

/// Coordinates of a free-module element: comp = odd subset, coefficient unchanged.
ModuleVector to_module(const SuperPoly& f, const ModuleOrder& order, std::uint64_t block = 0);
/// Inverse of to_module; terms with the block bit set are dropped.
SuperPoly from_module(const ModuleVector& v, const RingPtr& ring);

/// gens together with every y_T * g for nonempty odd monomials y_T. The
/// k[x]-span of the result is the superideal generated by gens.
std::vector<SuperPoly> superideal_closure(std::span<const SuperPoly> gens);

/// Splits each element into its even and odd components, dropping zeros.
std::vector<SuperPoly> homogeneous_components(std::span<const SuperPoly> gens);

/// Finitely presented supercommutative algebra k[x|y]/J with its reduced
/// module Gröbner basis. Cheap to copy; immutable.
class SuperAlgebra {
 public:
  SuperAlgebra(RingPtr ring, std::vector<SuperPoly> relations,
               ModuleOrder order = ModuleOrder{});

  /// Free algebra k[x|y].
  static SuperAlgebra free(RingPtr ring) { return SuperAlgebra(std::move(ring), {}); }

  const RingPtr& ring() const { return d_->ring; }
  /// Parity-homogeneous relations as given (after splitting).
  const std::vector<SuperPoly>& relations() const { return d_->relations; }
  const ModuleGB& gb() const { return d_->gb; }
  /// The reduced basis as polynomials, leading term first.
  std::vector<SuperPoly> groebner_basis() const;

  SuperPoly normal_form(const SuperPoly& f) const;
  bool is_zero(const SuperPoly& f) const { return normal_form(f).is_zero(); }
  bool is_zero_ring() const;

  /// Quotient by additional elements.
  SuperAlgebra quotient(std::span<const SuperPoly> extra) const;

  SuperPoly var(std::string_view name) const;
  SuperPoly constant(long c) const { return SuperPoly::constant(ring(), c); }

 private:
  struct Data {
    RingPtr ring;
    std::vector<SuperPoly> relations;
    ModuleGB gb;
  };
  std::shared_ptr<const Data> d_;
};

/// Superideal of an algebra A = F/J, stored through the k[x]-submodule of F
/// spanned by the closure of J and its generators.
class SuperIdeal {
 public:
  SuperIdeal(SuperAlgebra ambient, std::vector<SuperPoly> generators);

  const SuperAlgebra& ambient() const { return ambient_; }
  const std::vector<SuperPoly>& generators() const { return generators_; }
  const ModuleGB& gb() const { return gb_; }

  SuperPoly normal_form(const SuperPoly& f) const;
  bool contains(const SuperPoly& f) const { return normal_form(f).is_zero(); }
  bool is_unit() const;

  /// Basis elements that are not already zero in the ambient algebra.
  std::vector<SuperPoly> groebner_basis() const;
  /// A short generating set: basis elements not in the superideal of the
  /// others (greedy, deterministic).
  std::vector<SuperPoly> minimal_generators() const;

  /// Elements of this ideal with even (resp. odd) odd-degree.
  std::vector<SuperPoly> parity_generators(Parity p) const;

  SuperAlgebra quotient() const;

 private:
  SuperAlgebra ambient_;
  std::vector<SuperPoly> generators_;
  ModuleGB gb_;
};

/// Superideals with the same ambient algebra, compared by mutual containment.
bool ideal_equal(const SuperIdeal& a, const SuperIdeal& b);

/// Rational point of SSpec(A): values for the even generators.
struct PointIdeal {
  std::map<std::string, Scalar> coords;
};

/// Throws std::invalid_argument naming a relation that does not vanish at pt.
void check_point(const SuperAlgebra& a, const PointIdeal& pt);

/// (x_1 - c_1, ..., x_m - c_m) in A; contains no odd elements.
std::vector<SuperPoly> point_even_generators(const SuperAlgebra& a, const PointIdeal& pt);

/// The maximal superideal m + A_1 of a rational point.
SuperIdeal maximal_superideal(const SuperAlgebra& a, const PointIdeal& pt);

/// Odd monomials y_S with |S| odd that are nonzero in A: they generate A_1
/// as an A_0-module.
std::vector<SuperPoly> odd_module_generators(const SuperAlgebra& a);
/// Even monomials y_S with |S| even and positive.
std::vector<SuperPoly> even_odd_monomials(const SuperAlgebra& a);

struct Annihilator {
  SuperIdeal ideal;
  /// Set when p = 0 in A, in which case the ideal is the unit ideal.
  bool of_zero = false;
};

/// Ann_A(p) = {f : f p = 0 in A}, via an elimination-order syzygy computation.
Annihilator annihilator(const SuperPoly& p, const SuperAlgebra& a);

struct Localization {
  SuperAlgebra algebra;
  /// Name of the new even variable inverting the element.
  std::string inverse_name;
  bool zero_ring = false;
};

/// A_a presented by one extra even variable t and the relation t*a - 1.
Localization localize_at_even(const SuperAlgebra& a, const SuperPoly& element);

/// Re-expresses f in a ring with the same generators plus extra even ones
/// appended.
SuperPoly extend_to(const SuperPoly& f, const RingPtr& larger);

/// Superalgebra morphism given by images of the source generators.
struct SuperMorphism {
  SuperAlgebra source;
  SuperAlgebra target;
  GeneratorImages images;

  SuperPoly apply(const SuperPoly& f) const;
};

/// Checks parities of images and that every source relation maps into the
/// target ideal; throws std::invalid_argument naming the violated relation.
void check_morphism(const SuperMorphism& phi);

/// Whether B_1 = B_0 phi(A_1). False certifies that SSpec(B) -> SSpec(A) is
/// not a monomorphism.
bool check_mono_necessary(const SuperMorphism& phi);

}  // namespace salg
