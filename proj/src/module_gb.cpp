#include "salg/module_gb.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

#include "salg/superpoly.hpp"

namespace salg {

std::strong_ordering ModuleOrder::compare(std::uint64_t ca, std::span<const std::uint32_t> ea,
                                          std::uint64_t cb,
                                          std::span<const std::uint32_t> eb) const {
  switch (kind_) {
    case Kind::TermOverPosition:
      break;
    case Kind::LowestOddWeight: {
      const int wa = std::popcount(ca), wb = std::popcount(cb);
      if (wa != wb) return wb <=> wa;
      break;
    }
    case Kind::BlockElimination: {
      const bool ba = ca & kBlockBit, bb = cb & kBlockBit;
      if (ba != bb) return ba <=> bb;
      ca &= ~kBlockBit;
      cb &= ~kBlockBit;
      break;
    }
  }
  if (auto c = drevlex(ea, eb); c != 0) return c;
  return odd_order(ca, cb);
}

void ModuleOrder::normalize(ModuleVector& v) const {
  std::sort(v.begin(), v.end(),
            [this](const ModuleTerm& a, const ModuleTerm& b) { return compare(a, b) > 0; });
  ModuleVector out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && compare(out.back(), t) == 0) {
      out.back().coeff += t.coeff;
      if (out.back().coeff.is_zero()) out.pop_back();
    } else if (!t.coeff.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

bool divides(const ModuleTerm& lead, const ModuleTerm& t) {
  if (lead.comp != t.comp) return false;
  for (std::size_t i = 0; i < lead.exp.size(); ++i) {
    if (lead.exp[i] > t.exp[i]) return false;
  }
  return true;
}

namespace {

/// v[from..] - c * x^shift * g[1..], where c * x^shift * g[0] cancels v[from].
ModuleVector subtract_multiple(const ModuleVector& v, std::size_t from, const ModuleVector& g,
                               const Scalar& c, std::span<const std::uint32_t> shift,
                               const ModuleOrder& order) {
  ModuleVector out;
  out.reserve(v.size() - from + g.size());
  std::size_t a = from + 1, b = 1;
  auto shifted = [&](std::size_t k) {
    ModuleTerm t{g[k].comp, g[k].exp, -(c * g[k].coeff)};
    for (std::size_t i = 0; i < shift.size(); ++i) t.exp[i] += shift[i];
    return t;
  };
  while (a < v.size() || b < g.size()) {
    if (b == g.size()) {
      out.push_back(v[a++]);
      continue;
    }
    ModuleTerm t = shifted(b);
    if (a == v.size()) {
      out.push_back(std::move(t));
      ++b;
      continue;
    }
    auto cmp = order.compare(v[a], t);
    if (cmp > 0) {
      out.push_back(v[a++]);
    } else if (cmp < 0) {
      out.push_back(std::move(t));
      ++b;
    } else {
      t.coeff += v[a].coeff;
      if (!t.coeff.is_zero()) out.push_back(std::move(t));
      ++a;
      ++b;
    }
  }
  return out;
}

std::vector<std::uint32_t> exp_quotient(const std::vector<std::uint32_t>& num,
                                        const std::vector<std::uint32_t>& den) {
  std::vector<std::uint32_t> q(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) q[i] = num[i] - den[i];
  return q;
}

void make_monic(ModuleVector& v) {
  if (v.empty() || v[0].coeff.is_one()) return;
  const Scalar inv = v[0].coeff.inverse();
  for (auto& t : v) t.coeff *= inv;
}

/// Reduces v against `basis` (only entries flagged active). Top-only when
/// `full` is false.
ModuleVector reduce_by(ModuleVector v, const std::vector<ModuleVector>& basis,
                       const std::vector<bool>& active, const ModuleOrder& order, bool full,
                       std::size_t skip = static_cast<std::size_t>(-1)) {
  ModuleVector rem;
  while (!v.empty()) {
    const ModuleTerm& lead = v[0];
    const ModuleVector* hit = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || !active[k]) continue;
      if (divides(basis[k][0], lead)) {
        hit = &basis[k];
        break;
      }
    }
    if (hit) {
      const Scalar c = lead.coeff / (*hit)[0].coeff;
      const auto shift = exp_quotient(lead.exp, (*hit)[0].exp);
      v = subtract_multiple(v, 0, *hit, c, shift, order);
    } else if (full) {
      rem.push_back(std::move(v[0]));
      v.erase(v.begin());
    } else {
      return v;
    }
  }
  return rem;
}

unsigned exp_degree(const std::vector<std::uint32_t>& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

std::vector<std::uint32_t> exp_lcm(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> l(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) l[i] = std::max(a[i], b[i]);
  return l;
}

bool exp_divides(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

}  // namespace

ModuleGB ModuleGB::compute(std::vector<ModuleVector> gens, ModuleOrder order, Field field) {
  ModuleGB gb;
  gb.order_ = order;
  gb.field_ = field;

  std::vector<ModuleVector> basis;
  std::vector<bool> active;
  // pending pairs keyed by (lcm degree, i, j) for a deterministic normal strategy
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pairs;

  auto pending = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    const auto l = exp_lcm(basis[i][0].exp, basis[j][0].exp);
    return pairs.count({exp_degree(l), i, j}) > 0;
  };

  auto add = [&](ModuleVector v) {
    make_monic(v);
    const std::size_t n = basis.size();
    basis.push_back(std::move(v));
    active.push_back(true);
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || basis[i][0].comp != basis[n][0].comp) continue;
      const auto l = exp_lcm(basis[i][0].exp, basis[n][0].exp);
      pairs.insert({exp_degree(l), i, n});
    }
  };

  for (auto& g : gens) {
    order.normalize(g);
    g = reduce_by(std::move(g), basis, active, order, false);
    if (!g.empty()) add(std::move(g));
  }

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (!active[i] || !active[j]) continue;
    const auto l = exp_lcm(basis[i][0].exp, basis[j][0].exp);
    // chain criterion
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == i || k == j || !active[k] || basis[k][0].comp != basis[i][0].comp) continue;
      if (exp_divides(basis[k][0].exp, l) && !pending(i, k) && !pending(j, k)) skip = true;
    }
    if (skip) continue;

    const auto si = exp_quotient(l, basis[i][0].exp);
    const auto sj = exp_quotient(l, basis[j][0].exp);
    ModuleVector s;
    for (const auto& t : basis[i]) {
      ModuleTerm u = t;
      for (std::size_t k = 0; k < u.exp.size(); ++k) u.exp[k] += si[k];
      s.push_back(std::move(u));
    }
    for (const auto& t : basis[j]) {
      ModuleTerm u = t;
      u.coeff = -u.coeff;
      for (std::size_t k = 0; k < u.exp.size(); ++k) u.exp[k] += sj[k];
      s.push_back(std::move(u));
    }
    order.normalize(s);
    s = reduce_by(std::move(s), basis, active, order, false);
    if (!s.empty()) add(std::move(s));
  }

  // minimalize
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == i || !active[k]) continue;
      if (divides(basis[k][0], basis[i][0])) {
        active[i] = false;
        break;
      }
    }
  }
  // interreduce tails
  std::vector<ModuleVector> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    ModuleVector head{basis[i][0]};
    ModuleVector tail(basis[i].begin() + 1, basis[i].end());
    tail = reduce_by(std::move(tail), basis, active, order, true, i);
    head.insert(head.end(), std::make_move_iterator(tail.begin()),
                std::make_move_iterator(tail.end()));
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const ModuleVector& a, const ModuleVector& b) {
    return order.compare(a[0], b[0]) > 0;
  });
  gb.basis_ = std::move(reduced);
  return gb;
}

ModuleVector ModuleGB::reduce(ModuleVector v) const {
  order_.normalize(v);
  std::vector<bool> active(basis_.size(), true);
  return reduce_by(std::move(v), basis_, active, order_, true);
}

std::vector<const ModuleTerm*> ModuleGB::leads() const {
  std::vector<const ModuleTerm*> out;
  for (const auto& g : basis_) out.push_back(&g[0]);
  return out;
}

}  // namespace salg
