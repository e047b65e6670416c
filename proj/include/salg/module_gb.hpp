#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "salg/scalar.hpp"

namespace salg {

/// c * x^exp * e_comp in a free module over k[x_1..x_m].
struct ModuleTerm {
  std::uint64_t comp = 0;
  std::vector<std::uint32_t> exp;
  Scalar coeff;
};

/// Terms strictly descending in some ModuleOrder, no zero coefficients.
using ModuleVector = std::vector<ModuleTerm>;

/// Monomial orders on the free module. Components are odd-subset bitmasks;
/// bit 63 marks the second block in elimination mode.
class ModuleOrder {
 public:
  enum class Kind {
    /// drevlex on exponents, then the odd-subset order on components.
    TermOverPosition,
    /// fewer odd factors first, then as TermOverPosition; refines the odd weight
    /// filtration with lowest weight leading.
    LowestOddWeight,
    /// block bit first (set leads), then as TermOverPosition.
    BlockElimination,
  };

  static constexpr std::uint64_t kBlockBit = std::uint64_t{1} << 63;

  ModuleOrder() = default;
  explicit ModuleOrder(Kind k) : kind_(k) {}

  Kind kind() const { return kind_; }

  std::strong_ordering compare(std::uint64_t ca, std::span<const std::uint32_t> ea,
                               std::uint64_t cb, std::span<const std::uint32_t> eb) const;
  std::strong_ordering compare(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.comp, a.exp, b.comp, b.exp);
  }

  /// Sorts and combines like terms.
  void normalize(ModuleVector& v) const;

 private:
  Kind kind_ = Kind::TermOverPosition;
};

/// Reduced Gröbner basis of a k[x]-submodule of a free module.
class ModuleGB {
 public:
  ModuleGB() = default;

  /// Buchberger completion followed by minimalization and interreduction.
  /// Inputs need not be normalized.
  static ModuleGB compute(std::vector<ModuleVector> gens, ModuleOrder order, Field field);

  const std::vector<ModuleVector>& basis() const { return basis_; }
  const ModuleOrder& order() const { return order_; }
  Field field() const { return field_; }
  bool empty() const { return basis_.empty(); }

  /// Fully reduced remainder; zero iff v lies in the module.
  ModuleVector reduce(ModuleVector v) const;
  bool contains(const ModuleVector& v) const { return reduce(v).empty(); }

  /// Leading terms of the basis, in basis order.
  std::vector<const ModuleTerm*> leads() const;

 private:
  std::vector<ModuleVector> basis_;
  ModuleOrder order_;
  Field field_;
};

bool divides(const ModuleTerm& lead, const ModuleTerm& t);

}  // namespace salg
