#include "salg/superpoly.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace salg {

RingPtr SuperRing::make(std::vector<std::string> even, std::vector<std::string> odd,
                        Field field) {
  if (odd.size() > 63) throw std::invalid_argument("at most 63 odd generators are supported");
  std::set<std::string> seen;
  for (const auto* list : {&even, &odd}) {
    for (const auto& n : *list) {
      if (n.empty()) throw std::invalid_argument("empty generator name");
      if (!seen.insert(n).second) throw std::invalid_argument("duplicate generator name '" + n + "'");
    }
  }
  auto r = std::shared_ptr<SuperRing>(new SuperRing());
  r->even_ = std::move(even);
  r->odd_ = std::move(odd);
  r->field_ = field;
  return r;
}

std::optional<Generator> SuperRing::find(std::string_view name) const {
  for (std::size_t i = 0; i < even_.size(); ++i) {
    if (even_[i] == name) return Generator{Parity::Even, i};
  }
  for (std::size_t i = 0; i < odd_.size(); ++i) {
    if (odd_[i] == name) return Generator{Parity::Odd, i};
  }
  return std::nullopt;
}

RingPtr SuperRing::with_even(const std::string& name) const {
  auto even = even_;
  even.push_back(name);
  return make(std::move(even), odd_, field_);
}

RingPtr SuperRing::over(Field f) const { return make(even_, odd_, f); }

unsigned SuperMonomial::even_degree() const {
  unsigned d = 0;
  for (auto e : exp) d += e;
  return d;
}

unsigned SuperMonomial::odd_degree() const { return static_cast<unsigned>(std::popcount(odd)); }

bool SuperMonomial::is_one() const {
  return odd == 0 && std::all_of(exp.begin(), exp.end(), [](auto e) { return e == 0; });
}

int odd_product_sign(std::uint64_t s, std::uint64_t t) {
  if (s & t) return 0;
  // each bit of t is moved left past the bits of s with a larger index
  unsigned inversions = 0;
  for (std::uint64_t rest = t; rest; rest &= rest - 1) {
    const int i = std::countr_zero(rest);
    const std::uint64_t above = i == 63 ? 0 : (s >> (i + 1));
    inversions += static_cast<unsigned>(std::popcount(above));
  }
  return (inversions & 1) ? -1 : 1;
}

std::strong_ordering drevlex(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering odd_order(std::uint64_t a, std::uint64_t b) {
  if (a == b) return std::strong_ordering::equal;
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa <=> pb;
  const std::uint64_t low = (a ^ b) & (~(a ^ b) + 1);
  return (a & low) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering monomial_order(const SuperMonomial& a, const SuperMonomial& b) {
  if (auto c = drevlex(a.exp, b.exp); c != 0) return c;
  return odd_order(a.odd, b.odd);
}

namespace {

SuperMonomial one_monomial(const SuperRing& r) {
  return SuperMonomial{std::vector<std::uint32_t>(r.num_even(), 0), 0};
}

}  // namespace

SuperPoly::SuperPoly(RingPtr ring) : ring_(std::move(ring)) {}

SuperPoly::SuperPoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  std::map<SuperMonomial, Scalar, MonomialGreater> acc;
  for (auto& [m, c] : terms) {
    if (m.exp.size() != ring_->num_even() ||
        (ring_->num_odd() < 64 && (m.odd >> ring_->num_odd()) != 0)) {
      throw StructuralError("monomial does not belong to the ring");
    }
    auto [it, inserted] = acc.try_emplace(m, c);
    if (!inserted) it->second += c;
  }
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms_.emplace_back(m, c);
  }
}

SuperPoly SuperPoly::constant(RingPtr ring, const Scalar& c) {
  SuperPoly f(ring);
  if (!c.is_zero()) f.terms_.emplace_back(one_monomial(*ring), c);
  return f;
}

SuperPoly SuperPoly::constant(RingPtr ring, long c) {
  const Field fld = ring->field();
  return constant(std::move(ring), Scalar(c, fld));
}

SuperPoly SuperPoly::even_var(RingPtr ring, std::size_t i) {
  auto m = one_monomial(*ring);
  m.exp.at(i) = 1;
  const Field fld = ring->field();
  return monomial(std::move(ring), std::move(m), Scalar(1, fld));
}

SuperPoly SuperPoly::odd_var(RingPtr ring, std::size_t i) {
  if (i >= ring->num_odd()) throw std::out_of_range("odd generator index");
  auto m = one_monomial(*ring);
  m.odd = std::uint64_t{1} << i;
  const Field fld = ring->field();
  return monomial(std::move(ring), std::move(m), Scalar(1, fld));
}

SuperPoly SuperPoly::var(RingPtr ring, Generator g) {
  return g.parity == Parity::Even ? even_var(std::move(ring), g.index)
                                  : odd_var(std::move(ring), g.index);
}

SuperPoly SuperPoly::monomial(RingPtr ring, SuperMonomial m, const Scalar& c) {
  SuperPoly f(std::move(ring));
  if (!c.is_zero()) f.terms_.emplace_back(std::move(m), c);
  return f;
}

bool SuperPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Scalar SuperPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_one()) return terms_.back().second;
  return Scalar(0, ring_->field());
}

std::optional<Parity> SuperPoly::parity() const {
  if (terms_.empty()) return Parity::Even;
  const Parity p = terms_[0].first.parity();
  for (const auto& [m, c] : terms_) {
    if (m.parity() != p) return std::nullopt;
  }
  return p;
}

bool SuperPoly::has_parity(Parity p) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [p](const Term& t) { return t.first.parity() == p; });
}

SuperPoly SuperPoly::part(Parity p) const {
  SuperPoly r(ring_);
  for (const auto& t : terms_) {
    if (t.first.parity() == p) r.terms_.push_back(t);
  }
  return r;
}

unsigned SuperPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void SuperPoly::check_ring(const SuperPoly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) {
    throw StructuralError("polynomials over different generator sets");
  }
}

SuperPoly SuperPoly::operator-() const {
  SuperPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
  check_ring(o);
  if (this == &o) return *this = Scalar(2, ring_->field()) * o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end()) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end()) {
      out.push_back(*b++);
    } else {
      auto c = monomial_order(a->first, b->first);
      if (c > 0) {
        out.push_back(std::move(*a++));
      } else if (c < 0) {
        out.push_back(*b++);
      } else {
        Scalar s = a->second + b->second;
        if (!s.is_zero()) out.emplace_back(std::move(a->first), std::move(s));
        ++a;
        ++b;
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) { return *this += -o; }

SuperPoly operator*(const SuperPoly& a, const SuperPoly& b) {
  a.check_ring(b);
  std::map<SuperMonomial, Scalar, MonomialGreater> acc;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      const int sign = odd_product_sign(ma.odd, mb.odd);
      if (sign == 0) continue;
      SuperMonomial m{ma.exp, ma.odd | mb.odd};
      for (std::size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
      Scalar c = ca * cb;
      if (sign < 0) c = -c;
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
  }
  SuperPoly r(a.ring_);
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.terms_.emplace_back(m, c);
  }
  return r;
}

SuperPoly operator*(const Scalar& c, const SuperPoly& f) {
  SuperPoly r(f.ring_);
  if (c.is_zero()) return r;
  r.terms_ = f.terms_;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

SuperPoly SuperPoly::pow(unsigned e) const {
  SuperPoly r = constant(ring_, 1);
  SuperPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool operator==(const SuperPoly& a, const SuperPoly& b) {
  a.check_ring(b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].first == b.terms_[i].first) || !(a.terms_[i].second == b.terms_[i].second)) {
      return false;
    }
  }
  return true;
}

std::string render_monomial(const SuperRing& ring, const SuperMonomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.exp.size(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.even_names()[i];
    if (m.exp[i] > 1) out += '^' + std::to_string(m.exp[i]);
  }
  if (m.odd) {
    if (!out.empty()) out += '*';
    for (std::size_t i = 0; i < ring.num_odd(); ++i) {
      if (m.odd >> i & 1) out += ring.odd_names()[i];
    }
  }
  return out.empty() ? "1" : out;
}

std::string SuperPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Scalar mag = c;
    if (c.is_negative()) {
      os << (first ? "-" : " - ");
      mag = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (m.is_one()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << render_monomial(*ring_, m);
    } else {
      os << mag.str() << '*' << render_monomial(*ring_, m);
    }
  }
  return os.str();
}

Scalar evaluate_at_point(const SuperPoly& f, const std::map<std::string, Scalar>& point) {
  const auto& ring = *f.ring();
  std::vector<Scalar> values;
  std::string missing;
  for (const auto& name : ring.even_names()) {
    auto it = point.find(name);
    if (it == point.end()) {
      missing += (missing.empty() ? "" : ", ") + name;
      values.emplace_back(0, ring.field());
    } else {
      values.push_back(it->second);
    }
  }
  if (!missing.empty()) throw std::invalid_argument("point leaves unassigned: " + missing);
  Scalar total(0, ring.field());
  for (const auto& [m, c] : f.terms()) {
    if (m.odd) continue;
    Scalar t = c;
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      for (std::uint32_t k = 0; k < m.exp[i]; ++k) t *= values[i];
    }
    total += t;
  }
  return total;
}

void check_derivation_parity(const SuperRing& ring, const GeneratorImages& images,
                             Parity parity) {
  if (images.size() != ring.num_even() + ring.num_odd()) {
    throw StructuralError("derivation must give an image for every generator");
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    const Generator g = i < ring.num_even() ? Generator{Parity::Even, i}
                                            : Generator{Parity::Odd, i - ring.num_even()};
    const Parity want = g.parity + parity;
    if (!images[i].has_parity(want)) {
      throw ParityError("image of " + ring.name(g) + " must be " +
                        (want == Parity::Even ? "even" : "odd") + ", got " + images[i].str());
    }
  }
}

SuperPoly apply_derivation(const SuperPoly& f, const GeneratorImages& images, Parity parity) {
  const RingPtr& ring = f.ring();
  check_derivation_parity(*ring, images, parity);
  const std::size_t m = ring->num_even();
  const Field fld = ring->field();
  SuperPoly result(ring);
  for (const auto& [mono, c] : f.terms()) {
    // x-part first: every even factor precedes the odd ones, so no sign
    for (std::size_t i = 0; i < m; ++i) {
      if (mono.exp[i] == 0) continue;
      SuperMonomial rest = mono;
      rest.exp[i] -= 1;
      rest.odd = 0;
      SuperMonomial odd_part{std::vector<std::uint32_t>(m, 0), mono.odd};
      const Scalar k = c * Scalar(static_cast<long>(mono.exp[i]), fld);
      result += SuperPoly::monomial(ring, rest, k) * images[i] *
                SuperPoly::monomial(ring, odd_part, Scalar(1, fld));
    }
    // odd factors in ascending order
    std::uint64_t before = 0;
    unsigned position = 0;
    for (std::size_t j = 0; j < ring->num_odd(); ++j) {
      if (!(mono.odd >> j & 1)) continue;
      const std::uint64_t bit = std::uint64_t{1} << j;
      const std::uint64_t after = mono.odd & ~(before | bit);
      Scalar k = c;
      if (parity == Parity::Odd && (position & 1)) k = -k;
      SuperMonomial left{mono.exp, before};
      SuperMonomial right{std::vector<std::uint32_t>(m, 0), after};
      result += SuperPoly::monomial(ring, left, k) * images[m + j] *
                SuperPoly::monomial(ring, right, Scalar(1, fld));
      before |= bit;
      ++position;
    }
  }
  return result;
}

SuperPoly substitute(const SuperPoly& f, const GeneratorImages& images, const RingPtr& target) {
  const auto& src = *f.ring();
  if (images.size() != src.num_even() + src.num_odd()) {
    throw StructuralError("morphism must give an image for every generator");
  }
  for (const auto& img : images) {
    if (!(*img.ring() == *target)) throw StructuralError("image lives in a different ring");
  }
  std::vector<std::vector<SuperPoly>> powers(src.num_even());
  SuperPoly result(target);
  for (const auto& [mono, c] : f.terms()) {
    SuperPoly t = SuperPoly::constant(target, c);
    for (std::size_t i = 0; i < mono.exp.size() && !t.is_zero(); ++i) {
      if (mono.exp[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(SuperPoly::constant(target, 1));
      while (pw.size() <= mono.exp[i]) pw.push_back(pw.back() * images[i]);
      t = t * pw[mono.exp[i]];
    }
    for (std::size_t j = 0; j < src.num_odd() && !t.is_zero(); ++j) {
      if (mono.odd >> j & 1) t = t * images[src.num_even() + j];
    }
    result += t;
  }
  return result;
}

GeneratorImages identity_images(const RingPtr& ring) {
  GeneratorImages out;
  for (std::size_t i = 0; i < ring->num_even(); ++i) out.push_back(SuperPoly::even_var(ring, i));
  for (std::size_t j = 0; j < ring->num_odd(); ++j) out.push_back(SuperPoly::odd_var(ring, j));
  return out;
}

}  // namespace salg
