#include "salg/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace salg {

ModuleVector to_module(const SuperPoly& f, const ModuleOrder& order, std::uint64_t block) {
  ModuleVector v;
  v.reserve(f.terms().size());
  for (const auto& [m, c] : f.terms()) v.push_back(ModuleTerm{m.odd | block, m.exp, c});
  if (order.kind() != ModuleOrder::Kind::TermOverPosition) order.normalize(v);
  return v;
}

SuperPoly from_module(const ModuleVector& v, const RingPtr& ring) {
  std::vector<SuperPoly::Term> terms;
  for (const auto& t : v) {
    if (t.comp & ModuleOrder::kBlockBit) continue;
    terms.emplace_back(SuperMonomial{t.exp, t.comp}, t.coeff);
  }
  return SuperPoly(ring, std::move(terms));
}

namespace {

std::vector<std::uint64_t> odd_subsets(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) out.push_back(s);
  // by size, then y1 before y2
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return odd_order(a, b) > 0;
  });
  return out;
}

SuperPoly odd_monomial(const RingPtr& ring, std::uint64_t s) {
  return SuperPoly::monomial(
      ring, SuperMonomial{std::vector<std::uint32_t>(ring->num_even(), 0), s},
      Scalar(1, ring->field()));
}

std::vector<ModuleVector> module_vectors(std::span<const SuperPoly> polys,
                                         const ModuleOrder& order) {
  std::vector<ModuleVector> out;
  for (const auto& p : polys) out.push_back(to_module(p, order));
  return out;
}

}  // namespace

std::vector<SuperPoly> homogeneous_components(std::span<const SuperPoly> gens) {
  std::vector<SuperPoly> out;
  for (const auto& g : gens) {
    for (Parity p : {Parity::Even, Parity::Odd}) {
      SuperPoly part = g.part(p);
      if (!part.is_zero()) out.push_back(std::move(part));
    }
  }
  return out;
}

std::vector<SuperPoly> superideal_closure(std::span<const SuperPoly> gens) {
  std::vector<SuperPoly> out;
  if (gens.empty()) return out;
  const RingPtr& ring = gens.front().ring();
  const auto subsets = odd_subsets(ring->num_odd());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    out.push_back(g);
    for (std::uint64_t s : subsets) {
      if (s == 0) continue;
      SuperPoly h = odd_monomial(ring, s) * g;
      if (!h.is_zero()) out.push_back(std::move(h));
    }
  }
  return out;
}

SuperAlgebra::SuperAlgebra(RingPtr ring, std::vector<SuperPoly> relations, ModuleOrder order) {
  auto d = std::make_shared<Data>();
  d->ring = std::move(ring);
  for (const auto& r : relations) {
    if (!(*r.ring() == *d->ring)) throw StructuralError("relation over a different ring");
  }
  d->relations = homogeneous_components(relations);
  d->gb = ModuleGB::compute(module_vectors(superideal_closure(d->relations), order), order,
                            d->ring->field());
  d_ = std::move(d);
}

std::vector<SuperPoly> SuperAlgebra::groebner_basis() const {
  std::vector<SuperPoly> out;
  for (const auto& v : gb().basis()) out.push_back(from_module(v, ring()));
  return out;
}

SuperPoly SuperAlgebra::normal_form(const SuperPoly& f) const {
  if (!(*f.ring() == *ring())) throw StructuralError("element of a different ring");
  if (gb().empty()) return f;
  return from_module(gb().reduce(to_module(f, gb().order())), ring());
}

bool SuperAlgebra::is_zero_ring() const { return is_zero(constant(1)); }

SuperAlgebra SuperAlgebra::quotient(std::span<const SuperPoly> extra) const {
  auto rels = relations();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return SuperAlgebra(ring(), std::move(rels), gb().order());
}

SuperPoly SuperAlgebra::var(std::string_view name) const {
  auto g = ring()->find(name);
  if (!g) throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
  return SuperPoly::var(ring(), *g);
}

SuperIdeal::SuperIdeal(SuperAlgebra ambient, std::vector<SuperPoly> generators)
    : ambient_(std::move(ambient)) {
  for (const auto& g : generators) {
    if (!(*g.ring() == *ambient_.ring())) throw StructuralError("generator of a different ring");
  }
  generators_ = homogeneous_components(generators);
  const ModuleOrder order = ambient_.gb().order();
  std::vector<ModuleVector> vecs = ambient_.gb().basis();
  for (auto& v : module_vectors(superideal_closure(generators_), order)) vecs.push_back(std::move(v));
  gb_ = ModuleGB::compute(std::move(vecs), order, ambient_.ring()->field());
}

SuperPoly SuperIdeal::normal_form(const SuperPoly& f) const {
  if (gb_.empty()) return f;
  return from_module(gb_.reduce(to_module(f, gb_.order())), ambient_.ring());
}

bool SuperIdeal::is_unit() const { return contains(ambient_.constant(1)); }

std::vector<SuperPoly> SuperIdeal::groebner_basis() const {
  std::vector<SuperPoly> out;
  for (const auto& v : gb_.basis()) {
    SuperPoly f = from_module(v, ambient_.ring());
    if (!ambient_.is_zero(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<SuperPoly> SuperIdeal::minimal_generators() const {
  std::vector<SuperPoly> gens = groebner_basis();
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<SuperPoly> others;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k != i) others.push_back(gens[k]);
    }
    if (SuperIdeal(ambient_, others).contains(gens[i])) gens = std::move(others);
  }
  return gens;
}

std::vector<SuperPoly> SuperIdeal::parity_generators(Parity p) const {
  std::vector<SuperPoly> out;
  for (const auto& v : gb_.basis()) {
    SuperPoly f = from_module(v, ambient_.ring()).part(p);
    if (!f.is_zero()) out.push_back(std::move(f));
  }
  return out;
}

SuperAlgebra SuperIdeal::quotient() const { return ambient_.quotient(generators_); }

bool ideal_equal(const SuperIdeal& a, const SuperIdeal& b) {
  if (!(*a.ambient().ring() == *b.ambient().ring())) {
    throw StructuralError("ideals of different algebras");
  }
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  for (const auto& g : b.generators()) {
    if (!a.contains(g)) return false;
  }
  // the ambient relations belong to both by construction, but the ambients
  // themselves may differ
  for (const auto& r : a.ambient().relations()) {
    if (!b.contains(r)) return false;
  }
  for (const auto& r : b.ambient().relations()) {
    if (!a.contains(r)) return false;
  }
  return true;
}

void check_point(const SuperAlgebra& a, const PointIdeal& pt) {
  for (const auto& [name, value] : pt.coords) {
    auto g = a.ring()->find(name);
    if (!g || g->parity != Parity::Even) {
      throw std::invalid_argument("point assigns '" + name + "', which is not an even generator");
    }
    if (!(value.field() == a.ring()->field())) {
      throw StructuralError("point coordinates over a different field");
    }
  }
  for (const auto& r : a.relations()) {
    if (!evaluate_at_point(r, pt.coords).is_zero()) {
      throw std::invalid_argument("point is not on the scheme: relation " + r.str() +
                                  " does not vanish");
    }
  }
}

std::vector<SuperPoly> point_even_generators(const SuperAlgebra& a, const PointIdeal& pt) {
  std::vector<SuperPoly> out;
  const RingPtr& ring = a.ring();
  for (std::size_t i = 0; i < ring->num_even(); ++i) {
    auto it = pt.coords.find(ring->even_names()[i]);
    if (it == pt.coords.end()) {
      throw std::invalid_argument("point leaves unassigned: " + ring->even_names()[i]);
    }
    out.push_back(SuperPoly::even_var(ring, i) - SuperPoly::constant(ring, it->second));
  }
  return out;
}

SuperIdeal maximal_superideal(const SuperAlgebra& a, const PointIdeal& pt) {
  auto gens = point_even_generators(a, pt);
  for (std::size_t j = 0; j < a.ring()->num_odd(); ++j) {
    gens.push_back(SuperPoly::odd_var(a.ring(), j));
  }
  return SuperIdeal(a, std::move(gens));
}

std::vector<SuperPoly> odd_module_generators(const SuperAlgebra& a) {
  std::vector<SuperPoly> out;
  for (std::uint64_t s : odd_subsets(a.ring()->num_odd())) {
    if (std::popcount(s) % 2 == 0) continue;
    SuperPoly m = odd_monomial(a.ring(), s);
    if (!a.is_zero(m)) out.push_back(std::move(m));
  }
  return out;
}

std::vector<SuperPoly> even_odd_monomials(const SuperAlgebra& a) {
  std::vector<SuperPoly> out;
  for (std::uint64_t s : odd_subsets(a.ring()->num_odd())) {
    if (s == 0 || std::popcount(s) % 2 != 0) continue;
    SuperPoly m = odd_monomial(a.ring(), s);
    if (!a.is_zero(m)) out.push_back(std::move(m));
  }
  return out;
}

Annihilator annihilator(const SuperPoly& p, const SuperAlgebra& a) {
  if (!p.parity()) throw ParityError("annihilator needs a parity-homogeneous element");
  if (a.is_zero(p)) {
    return Annihilator{SuperIdeal(a, {a.constant(1)}), true};
  }
  const RingPtr& ring = a.ring();
  const ModuleOrder order(ModuleOrder::Kind::BlockElimination);
  constexpr std::uint64_t block = ModuleOrder::kBlockBit;

  std::vector<ModuleVector> gens;
  for (const auto& g : a.groebner_basis()) gens.push_back(to_module(g, order, block));
  for (std::uint64_t s : odd_subsets(ring->num_odd())) {
    ModuleVector v = to_module(odd_monomial(ring, s) * p, order, block);
    v.push_back(ModuleTerm{s, std::vector<std::uint32_t>(ring->num_even(), 0),
                           Scalar(1, ring->field())});
    order.normalize(v);
    gens.push_back(std::move(v));
  }
  const ModuleGB syz = ModuleGB::compute(std::move(gens), order, ring->field());

  std::vector<SuperPoly> kernel;
  for (const auto& v : syz.basis()) {
    if (v[0].comp & block) continue;
    kernel.push_back(from_module(v, ring));
  }
  return Annihilator{SuperIdeal(a, std::move(kernel)), false};
}

SuperPoly extend_to(const SuperPoly& f, const RingPtr& larger) {
  const auto& src = *f.ring();
  if (larger->num_even() < src.num_even() || larger->odd_names() != src.odd_names()) {
    throw StructuralError("target ring does not extend the source ring");
  }
  std::vector<SuperPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    SuperMonomial e = m;
    e.exp.resize(larger->num_even(), 0);
    terms.emplace_back(std::move(e), c);
  }
  return SuperPoly(larger, std::move(terms));
}

Localization localize_at_even(const SuperAlgebra& a, const SuperPoly& element) {
  if (!element.has_parity(Parity::Even)) throw ParityError("can only invert even elements");
  std::string name = "t";
  for (int k = 1; a.ring()->find(name); ++k) name = "t" + std::to_string(k);
  const RingPtr larger = a.ring()->with_even(name);
  std::vector<SuperPoly> rels;
  for (const auto& r : a.relations()) rels.push_back(extend_to(r, larger));
  const SuperPoly t = SuperPoly::even_var(larger, larger->num_even() - 1);
  rels.push_back(t * extend_to(element, larger) - SuperPoly::constant(larger, 1));
  SuperAlgebra loc(larger, std::move(rels), a.gb().order());
  const bool zero = loc.is_zero_ring();
  return Localization{std::move(loc), name, zero};
}

SuperPoly SuperMorphism::apply(const SuperPoly& f) const {
  return target.normal_form(substitute(f, images, target.ring()));
}

void check_morphism(const SuperMorphism& phi) {
  const auto& src = *phi.source.ring();
  if (phi.images.size() != src.num_even() + src.num_odd()) {
    throw std::invalid_argument("morphism must give an image for every source generator");
  }
  for (std::size_t i = 0; i < phi.images.size(); ++i) {
    const Generator g = i < src.num_even() ? Generator{Parity::Even, i}
                                           : Generator{Parity::Odd, i - src.num_even()};
    if (!(*phi.images[i].ring() == *phi.target.ring())) {
      throw StructuralError("image of " + src.name(g) + " is not in the target ring");
    }
    if (!phi.images[i].has_parity(g.parity)) {
      throw ParityError("image of " + src.name(g) + " has the wrong parity: " +
                        phi.images[i].str());
    }
  }
  for (const auto& r : phi.source.relations()) {
    if (!phi.apply(r).is_zero()) {
      throw std::invalid_argument("morphism is not well defined: relation " + r.str() +
                                  " maps to " + phi.apply(r).str());
    }
  }
}

bool check_mono_necessary(const SuperMorphism& phi) {
  check_morphism(phi);
  const auto& src = *phi.source.ring();
  std::vector<SuperPoly> odd_images(phi.images.begin() + static_cast<long>(src.num_even()),
                                    phi.images.end());
  const SuperIdeal image_ideal(phi.target, std::move(odd_images));
  for (std::size_t j = 0; j < phi.target.ring()->num_odd(); ++j) {
    if (!image_ideal.contains(SuperPoly::odd_var(phi.target.ring(), j))) return false;
  }
  return true;
}

}  // namespace salg
