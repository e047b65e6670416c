#include "salg/scalar.hpp"

#include <cctype>

namespace salg {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  // Fermat: a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!is_prime(p)) {
    throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const {
  return p_ == 0 ? "Q" : "F_" + std::to_string(p_);
}

Scalar::Scalar(long v, Field f) : field_(f) {
  if (f.is_rational()) {
    q_ = v;
  } else {
    r_ = reduce_mod(mpz_class(v), f.characteristic());
  }
}

Scalar::Scalar(const mpq_class& q, Field f) : field_(f) {
  if (f.is_rational()) {
    q_ = q;
    q_.canonicalize();
  } else {
    const std::uint32_t p = f.characteristic();
    std::uint64_t den = reduce_mod(q.get_den(), p);
    if (den == 0) throw std::domain_error("denominator divisible by the characteristic");
    r_ = reduce_mod(q.get_num(), p) * inverse_mod(den, p) % p;
  }
}

Scalar Scalar::parse(std::string_view text, Field f) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+')) {
      throw std::invalid_argument("malformed scalar literal '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("malformed scalar literal '" + s + "'");
  }
  q.canonicalize();
  return Scalar(q, f);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

bool Scalar::is_negative() const { return field_.is_rational() && q_ < 0; }

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) {
    throw StructuralError("scalars from different fields: " + field_.name() + " vs " +
                          o.field_.name());
  }
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = -q_;
  } else if (r_ != 0) {
    r.r_ = field_.characteristic() - r_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ = (r_ + o.r_) % field_.characteristic();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = r_ * o.r_ % field_.characteristic();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  Scalar r = *this;
  if (field_.is_rational()) {
    r.q_ = 1 / q_;
  } else {
    r.r_ = inverse_mod(r_, field_.characteristic());
  }
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::strong_ordering compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (a.field_.is_rational()) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  return a.r_ <=> b.r_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

}  // namespace salg
