#pragma once

#include <cstdint>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace salg {

/// Thrown when values from incompatible rings or fields are combined.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficient field: the rationals (characteristic 0) or F_p for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }

  friend bool operator==(const Field&, const Field&) = default;

  std::string name() const;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Exact field element. Rational scalars use GMP; prime-field scalars keep a
/// residue in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v, Field f = {});  // NOLINT(google-explicit-constructor)
  Scalar(const mpq_class& q, Field f = {});

  /// Parses `n` or `n/d` (optional leading sign).
  static Scalar parse(std::string_view text, Field f = {});

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool is_negative() const;  // always false over F_p

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Total order used only for deterministic output, not field order.
  friend std::strong_ordering compare(const Scalar& a, const Scalar& b);

  /// `p/q` rendering; prime-field values render as their residue.
  std::string str() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  void check_same_field(const Scalar& o) const;

  mpq_class q_;
  std::uint64_t r_ = 0;
  Field field_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.str();
}

}  // namespace salg
