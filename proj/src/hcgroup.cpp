#include "salg/hcgroup.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace salg {

namespace {

constexpr std::size_t kMaxRewriteSteps = 1'000'000;

std::string coord_name(std::size_t a, std::size_t b) {
  return "g" + std::to_string(a + 1) + std::to_string(b + 1);
}

SuperPoly partial_even(const SuperPoly& f, std::size_t i) {
  std::vector<SuperPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    if (m.exp[i] == 0) continue;
    SuperMonomial d = m;
    d.exp[i] -= 1;
    terms.emplace_back(std::move(d), Scalar(static_cast<long>(m.exp[i]), c.field()) * c);
  }
  return SuperPoly(f.ring(), std::move(terms));
}

std::map<std::string, Scalar> matrix_point(const ScalarMatrix& m, const Scalar& det_inv) {
  std::map<std::string, Scalar> pt;
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) pt.emplace(coord_name(a, b), m[a][b]);
  }
  pt.emplace("d", det_inv);
  return pt;
}

Scalar scalar_det(const ScalarMatrix& m, Field f) {
  // Gaussian elimination
  ScalarMatrix a = m;
  const std::size_t n = a.size();
  Scalar det(1, f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return Scalar(0, f);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Scalar inv = a[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      const Scalar factor = a[r][c] * inv;
      if (factor.is_zero()) continue;
      for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  return det;
}

/// Jacobian row at the identity, indexed by a*N + b; d contributes -tr.
std::vector<Scalar> tangent_row(const SuperPoly& f, std::size_t n) {
  const Field field = f.ring()->field();
  const auto pt = matrix_point(scalar_identity(n, field), Scalar(1, field));
  std::vector<Scalar> row(n * n, Scalar(0, field));
  const Scalar dd = evaluate_at_point(partial_even(f, n * n), pt);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      row[a * n + b] = evaluate_at_point(partial_even(f, a * n + b), pt);
      if (a == b) row[a * n + b] -= dd;
    }
  }
  return row;
}

Scalar dot(const std::vector<Scalar>& row, const ScalarMatrix& x, Field f) {
  const std::size_t n = x.size();
  Scalar s(0, f);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) s += row[a * n + b] * x[a][b];
  }
  return s;
}

std::vector<std::vector<Scalar>> kernel_basis(std::vector<std::vector<Scalar>> rows,
                                              std::size_t cols, Field f) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Scalar factor = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<Scalar> v(cols, Scalar(0, f));
    v[c] = Scalar(1, f);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -rows[k][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

PolyMatrix minor_of(const PolyMatrix& m, std::size_t row, std::size_t col) {
  PolyMatrix out;
  for (std::size_t a = 0; a < m.size(); ++a) {
    if (a == row) continue;
    std::vector<SuperPoly> r;
    for (std::size_t b = 0; b < m.size(); ++b) {
      if (b != col) r.push_back(m[a][b]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix adjugate(const PolyMatrix& m, const SuperAlgebra& a) {
  const std::size_t n = m.size();
  const RingPtr& ring = a.ring();
  if (n == 1) return {{SuperPoly::constant(ring, 1)}};
  PolyMatrix adj(n, std::vector<SuperPoly>(n, SuperPoly(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      SuperPoly c = determinant(minor_of(m, i, j), a);
      adj[j][i] = (i + j) % 2 == 0 ? c : -c;
    }
  }
  return adj;
}

bool is_identity(const PolyMatrix& m) {
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      const SuperPoly& e = m[a][b];
      if (a == b ? !(e.is_constant() && e.constant_term().is_one()) : !e.is_zero()) return false;
    }
  }
  return true;
}

PolyMatrix scale(const SuperPoly& b, const ScalarMatrix& x, const RingPtr& ring) {
  PolyMatrix out(x.size(), std::vector<SuperPoly>(x.size(), SuperPoly(ring)));
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t c = 0; c < x.size(); ++c) {
      if (!x[a][c].is_zero()) out[a][c] = x[a][c] * b;
    }
  }
  return out;
}

PolyMatrix add(PolyMatrix x, const PolyMatrix& y) {
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = 0; b < x[a].size(); ++b) x[a][b] += y[a][b];
  }
  return x;
}

SuperAlgebra build_coordinate_algebra(const RingPtr& ring, std::size_t n,
                                      const std::vector<SuperPoly>& equations) {
  PolyMatrix g(n, std::vector<SuperPoly>(n, SuperPoly(ring)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a][b] = SuperPoly::even_var(ring, a * n + b);
  }
  std::vector<SuperPoly> rels = equations;
  rels.push_back(SuperPoly::even_var(ring, n * n) * determinant(g, SuperAlgebra::free(ring)) -
                 SuperPoly::constant(ring, 1));
  return SuperAlgebra(ring, std::move(rels));
}

}  // namespace

ScalarMatrix scalar_identity(std::size_t n, Field f) {
  ScalarMatrix m = scalar_zero(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1, f);
  return m;
}

ScalarMatrix scalar_zero(std::size_t rows, std::size_t cols, Field f) {
  return ScalarMatrix(rows, std::vector<Scalar>(cols, Scalar(0, f)));
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  const Field f = a.empty() ? Field{} : a[0][0].field();
  ScalarMatrix out = scalar_zero(a.size(), b.empty() ? 0 : b[0].size(), f);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

bool is_zero(const ScalarMatrix& m) {
  return std::all_of(m.begin(), m.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); });
  });
}

std::optional<ScalarMatrix> inverse(const ScalarMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return ScalarMatrix{};
  const Field f = m[0][0].field();
  ScalarMatrix a = m;
  ScalarMatrix inv = scalar_identity(n, f);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    const Scalar s = a[c][c].inverse();
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= s;
      inv[c][k] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= factor * a[c][k];
        inv[r][k] -= factor * inv[c][k];
      }
    }
  }
  return inv;
}

PolyMatrix poly_identity(const RingPtr& ring, std::size_t n) {
  PolyMatrix m(n, std::vector<SuperPoly>(n, SuperPoly(ring)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = SuperPoly::constant(ring, 1);
  return m;
}

PolyMatrix lift(const ScalarMatrix& m, const RingPtr& ring) {
  PolyMatrix out;
  for (const auto& row : m) {
    std::vector<SuperPoly> r;
    for (const auto& s : row) r.push_back(SuperPoly::constant(ring, s));
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix multiply(const PolyMatrix& x, const PolyMatrix& y, const SuperAlgebra& a) {
  const RingPtr& ring = a.ring();
  const std::size_t cols = y.empty() ? 0 : y[0].size();
  PolyMatrix out(x.size(), std::vector<SuperPoly>(cols, SuperPoly(ring)));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      SuperPoly s(ring);
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (x[i][k].is_zero() || y[k][j].is_zero()) continue;
        s += x[i][k] * y[k][j];
      }
      out[i][j] = a.normal_form(s);
    }
  }
  return out;
}

PolyMatrix reduce(const PolyMatrix& m, const SuperAlgebra& a) {
  PolyMatrix out = m;
  for (auto& row : out) {
    for (auto& e : row) e = a.normal_form(e);
  }
  return out;
}

SuperPoly determinant(const PolyMatrix& m, const SuperAlgebra& a) {
  const std::size_t n = m.size();
  if (n == 0) return a.constant(1);
  if (n == 1) return a.normal_form(m[0][0]);
  SuperPoly det(a.ring());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    SuperPoly term = m[0][j] * determinant(minor_of(m, 0, j), a);
    if (j % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return a.normal_form(det);
}

std::string render(const PolyMatrix& m) {
  std::string out = "[";
  for (std::size_t a = 0; a < m.size(); ++a) {
    out += a ? ", [" : "[";
    for (std::size_t b = 0; b < m[a].size(); ++b) {
      if (b) out += ", ";
      out += m[a][b].str();
    }
    out += "]";
  }
  return out + "]";
}

std::string render(const ScalarMatrix& m) {
  std::string out = "[";
  for (std::size_t a = 0; a < m.size(); ++a) {
    out += a ? ", [" : "[";
    for (std::size_t b = 0; b < m[a].size(); ++b) {
      if (b) out += ", ";
      out += m[a][b].str();
    }
    out += "]";
  }
  return out + "]";
}

RingPtr EvenGroupSpec::coordinate_ring_for(std::size_t size, Field field) {
  if (size == 0 || size > 9) throw std::invalid_argument("matrix size must be between 1 and 9");
  std::vector<std::string> names;
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) names.push_back(coord_name(a, b));
  }
  names.push_back("d");
  return SuperRing::make(std::move(names), {}, field);
}

EvenGroupSpec::EvenGroupSpec(std::size_t size, std::vector<SuperPoly> equations,
                             std::vector<ScalarMatrix> samples, Field field)
    : size_(size),
      ring_(coordinate_ring_for(size, field)),
      equations_(std::move(equations)),
      algebra_(build_coordinate_algebra(ring_, size, equations_)),
      samples_(std::move(samples)) {
  for (const auto& e : equations_) {
    if (!(*e.ring() == *ring_)) {
      throw StructuralError("group equations must use the generators g11..gNN, d");
    }
  }
  for (const auto& s : samples_) {
    if (s.size() != size || std::any_of(s.begin(), s.end(),
                                        [&](const auto& r) { return r.size() != size; })) {
      throw std::invalid_argument("sample point has the wrong shape");
    }
  }
}

GeneratorImages EvenGroupSpec::point_images(const PolyMatrix& g, const PolyMatrix& g_inv,
                                            const SuperAlgebra& coeffs) const {
  GeneratorImages images;
  for (const auto& row : g) {
    for (const auto& e : row) images.push_back(e);
  }
  images.push_back(determinant(g_inv, coeffs));
  return images;
}

std::optional<std::string> EvenGroupSpec::violated_equation(const PolyMatrix& g,
                                                            const PolyMatrix& g_inv,
                                                            const SuperAlgebra& coeffs) const {
  const auto images = point_images(g, g_inv, coeffs);
  for (const auto& eq : equations_) {
    const SuperPoly v = coeffs.normal_form(substitute(eq, images, coeffs.ring()));
    if (!v.is_zero()) return eq.str() + " evaluates to " + v.str();
  }
  return std::nullopt;
}

std::vector<ScalarMatrix> lie_algebra_of(const EvenGroupSpec& g) {
  const std::size_t n = g.size();
  const Field f = g.coordinate_ring()->field();
  std::vector<std::vector<Scalar>> rows;
  for (const auto& eq : g.equations()) rows.push_back(tangent_row(eq, n));
  std::vector<ScalarMatrix> basis;
  for (const auto& v : kernel_basis(std::move(rows), n * n, f)) {
    ScalarMatrix x = scalar_zero(n, n, f);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) x[a][b] = v[a * n + b];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool in_lie_algebra(const EvenGroupSpec& g, const ScalarMatrix& x) {
  const Field f = g.coordinate_ring()->field();
  return std::all_of(g.equations().begin(), g.equations().end(), [&](const SuperPoly& eq) {
    return dot(tangent_row(eq, g.size()), x, f).is_zero();
  });
}

ScalarMatrix HCPair::drho(const ScalarMatrix& x) const {
  const Field f = group.coordinate_ring()->field();
  ScalarMatrix out = scalar_zero(dim, dim, f);
  for (std::size_t p = 0; p < dim; ++p) {
    for (std::size_t q = 0; q < dim; ++q) out[p][q] = dot(tangent_row(rho[p][q], group.size()), x, f);
  }
  return out;
}

namespace {

void check_shapes(const HCPair& p) {
  const std::size_t n = p.group.size();
  const std::size_t t = p.dim;
  auto bad = [&](const std::string& what) {
    throw std::invalid_argument("pair " + p.name + ": " + what);
  };
  if (p.rho.size() != t) bad("rho must be a " + std::to_string(t) + "x" + std::to_string(t) + " matrix");
  for (const auto& row : p.rho) {
    if (row.size() != t) bad("rho must be square");
    for (const auto& e : row) {
      if (!(*e.ring() == *p.group.coordinate_ring())) bad("rho entries must use g11..gNN, d");
    }
  }
  if (p.bracket.size() != t) bad("bracket must have one row per basis vector");
  for (const auto& row : p.bracket) {
    if (row.size() != t) bad("bracket must be t x t");
    for (const auto& m : row) {
      if (m.size() != n || std::any_of(m.begin(), m.end(), [&](const auto& r) { return r.size() != n; })) {
        bad("bracket values must be " + std::to_string(n) + "x" + std::to_string(n) + " matrices");
      }
    }
  }
}

ScalarMatrix rho_at_scalar(const HCPair& p, const ScalarMatrix& g, const Field f) {
  const Scalar det = scalar_det(g, f);
  const auto pt = matrix_point(g, det.inverse());
  ScalarMatrix out = scalar_zero(p.dim, p.dim, f);
  for (std::size_t a = 0; a < p.dim; ++a) {
    for (std::size_t b = 0; b < p.dim; ++b) out[a][b] = evaluate_at_point(p.rho[a][b], pt);
  }
  return out;
}

AxiomCheck check_samples(const HCPair& p) {
  AxiomCheck c{"group closure on sample points", true, ""};
  const Field f = p.group.coordinate_ring()->field();
  std::vector<ScalarMatrix> points{scalar_identity(p.group.size(), f)};
  const auto& samples = p.group.samples();
  for (const auto& s : samples) {
    points.push_back(s);
    const auto inv = inverse(s);
    if (!inv) {
      c.ok = false;
      c.witness = "sample " + render(s) + " is singular";
      return c;
    }
    points.push_back(*inv);
    for (const auto& s2 : samples) points.push_back(s * s2);
  }
  for (const auto& pt : points) {
    const Scalar det = scalar_det(pt, f);
    const auto values = matrix_point(pt, det.inverse());
    for (const auto& eq : p.group.equations()) {
      const Scalar v = evaluate_at_point(eq, values);
      if (!v.is_zero()) {
        c.ok = false;
        c.witness = eq.str() + " = " + v.str() + " at " + render(pt);
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_rho_homomorphism(const HCPair& p) {
  AxiomCheck c{"rho is a representation on sample points", true, ""};
  const Field f = p.group.coordinate_ring()->field();
  const std::size_t n = p.group.size();
  if (rho_at_scalar(p, scalar_identity(n, f), f) != scalar_identity(p.dim, f)) {
    c.ok = false;
    c.witness = "rho(I) = " + render(rho_at_scalar(p, scalar_identity(n, f), f));
    return c;
  }
  for (const auto& s : p.group.samples()) {
    if (scalar_det(s, f).is_zero()) continue;
    for (const auto& s2 : p.group.samples()) {
      if (scalar_det(s2, f).is_zero()) continue;
      const ScalarMatrix lhs = rho_at_scalar(p, s * s2, f);
      const ScalarMatrix rhs = rho_at_scalar(p, s, f) * rho_at_scalar(p, s2, f);
      if (lhs != rhs) {
        c.ok = false;
        c.witness = "rho(gh) = " + render(lhs) + " but rho(g)rho(h) = " + render(rhs) +
                    " for g = " + render(s) + ", h = " + render(s2);
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_symmetric(const HCPair& p) {
  AxiomCheck c{"bracket symmetric", true, ""};
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = i + 1; j < p.dim; ++j) {
      if (p.bracket[i][j] != p.bracket[j][i]) {
        c.ok = false;
        c.witness = "[v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) + "] = " +
                    render(p.bracket[i][j]) + " but [v" + std::to_string(j + 1) + ", v" +
                    std::to_string(i + 1) + "] = " + render(p.bracket[j][i]);
        return c;
      }
    }
  }
  return c;
}

AxiomCheck check_in_lie(const HCPair& p) {
  AxiomCheck c{"bracket takes values in Lie(G)", true, ""};
  const Field f = p.group.coordinate_ring()->field();
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = i; j < p.dim; ++j) {
      for (const auto& eq : p.group.equations()) {
        const Scalar v = dot(tangent_row(eq, p.group.size()), p.bracket[i][j], f);
        if (!v.is_zero()) {
          c.ok = false;
          c.witness = "linearization of " + eq.str() + " at [v" + std::to_string(i + 1) + ", v" +
                      std::to_string(j + 1) + "] is " + v.str();
          return c;
        }
      }
    }
  }
  return c;
}

AxiomCheck check_equivariance(const HCPair& p) {
  AxiomCheck c{"bracket is G-equivariant", true, ""};
  const SuperAlgebra& r = p.group.coordinate_algebra();
  const RingPtr& ring = r.ring();
  const std::size_t n = p.group.size();
  PolyMatrix g(n, std::vector<SuperPoly>(n, SuperPoly(ring)));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g[a][b] = SuperPoly::even_var(ring, a * n + b);
  }
  const SuperPoly d = SuperPoly::even_var(ring, n * n);
  PolyMatrix g_inv = adjugate(g, r);
  for (auto& row : g_inv) {
    for (auto& e : row) e = r.normal_form(d * e);
  }
  const PolyMatrix rho = reduce(p.rho, r);
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = i; j < p.dim; ++j) {
      PolyMatrix lhs(n, std::vector<SuperPoly>(n, SuperPoly(ring)));
      for (std::size_t k = 0; k < p.dim; ++k) {
        for (std::size_t l = 0; l < p.dim; ++l) {
          if (is_zero(p.bracket[k][l])) continue;
          const SuperPoly coef = r.normal_form(rho[k][i] * rho[l][j]);
          if (coef.is_zero()) continue;
          lhs = add(std::move(lhs), scale(coef, p.bracket[k][l], ring));
        }
      }
      const PolyMatrix rhs = multiply(multiply(g, lift(p.bracket[i][j], ring), r), g_inv, r);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          const SuperPoly diff = r.normal_form(lhs[a][b] - rhs[a][b]);
          if (!diff.is_zero()) {
            c.ok = false;
            c.witness = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                        ") of [g.v" + std::to_string(i + 1) + ", g.v" + std::to_string(j + 1) +
                        "] - Ad(g)[v" + std::to_string(i + 1) + ", v" + std::to_string(j + 1) +
                        "] is " + diff.str();
            return c;
          }
        }
      }
    }
  }
  return c;
}

AxiomCheck check_linearization(const HCPair& p) {
  AxiomCheck c{"drho is the linearization of rho", true, ""};
  const Field f = p.group.coordinate_ring()->field();
  const std::size_t n = p.group.size();
  const RingPtr dual_ring = SuperRing::make({"eps"}, {}, f);
  const SuperPoly eps = SuperPoly::even_var(dual_ring, 0);
  const SuperAlgebra dual(dual_ring, {eps * eps});
  for (const auto& x : lie_algebra_of(p.group)) {
    GeneratorImages images;
    Scalar trace(0, f);
    for (std::size_t a = 0; a < n; ++a) {
      trace += x[a][a];
      for (std::size_t b = 0; b < n; ++b) {
        images.push_back(SuperPoly::constant(dual_ring, Scalar(a == b ? 1 : 0, f)) + x[a][b] * eps);
      }
    }
    images.push_back(SuperPoly::constant(dual_ring, 1) - trace * eps);
    const ScalarMatrix expected = p.drho(x);
    for (std::size_t a = 0; a < p.dim; ++a) {
      for (std::size_t b = 0; b < p.dim; ++b) {
        const SuperPoly v = dual.normal_form(substitute(p.rho[a][b], images, dual_ring));
        Scalar first(0, f);
        for (const auto& [m, s] : v.terms()) {
          if (m.exp[0] == 1) first = s;
        }
        if (first != expected[a][b]) {
          c.ok = false;
          c.witness = "rho(I + eps*x) has eps-coefficient " + first.str() + " at (" +
                      std::to_string(a + 1) + "," + std::to_string(b + 1) + ") but drho(x) has " +
                      expected[a][b].str() + ", x = " + render(x);
          return c;
        }
      }
    }
  }
  return c;
}

AxiomCheck check_cubic(const HCPair& p) {
  AxiomCheck c{"[v,v].v = 0", true, ""};
  if (p.dim == 0) return c;
  const Field f = p.group.coordinate_ring()->field();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p.dim; ++i) names.push_back("c" + std::to_string(i + 1));
  const RingPtr ring = SuperRing::make(names, {}, f);
  std::vector<std::vector<ScalarMatrix>> d(p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) d[i].push_back(p.drho(p.bracket[i][j]));
  }
  for (std::size_t k = 0; k < p.dim; ++k) {
    SuperPoly sum(ring);
    for (std::size_t i = 0; i < p.dim; ++i) {
      for (std::size_t j = 0; j < p.dim; ++j) {
        for (std::size_t l = 0; l < p.dim; ++l) {
          if (d[i][j][k][l].is_zero()) continue;
          sum += d[i][j][k][l] * (SuperPoly::even_var(ring, i) * SuperPoly::even_var(ring, j) *
                                  SuperPoly::even_var(ring, l));
        }
      }
    }
    if (!sum.is_zero()) {
      c.ok = false;
      c.witness = "component " + std::to_string(k + 1) + " of [v,v].v for v = sum c_i v_i is " +
                  sum.str();
      return c;
    }
  }
  return c;
}

}  // namespace

CheckReport validate_hc_pair(const HCPair& p) {
  check_shapes(p);
  CheckReport report;
  {
    const Field f = p.group.coordinate_ring()->field();
    AxiomCheck c{"identity lies in G", true, ""};
    const auto pt = matrix_point(scalar_identity(p.group.size(), f), Scalar(1, f));
    for (const auto& eq : p.group.equations()) {
      if (!evaluate_at_point(eq, pt).is_zero()) {
        c.ok = false;
        c.witness = eq.str() + " does not vanish at I";
        break;
      }
    }
    report.checks.push_back(c);
  }
  report.checks.push_back(check_samples(p));
  report.checks.push_back(check_rho_homomorphism(p));
  report.checks.push_back(check_symmetric(p));
  report.checks.push_back(check_in_lie(p));
  report.checks.push_back(check_equivariance(p));
  report.checks.push_back(check_linearization(p));
  report.checks.push_back(check_cubic(p));
  return report;
}

bool is_graded_pair(const HCPair& p) {
  for (const auto& row : p.bracket) {
    for (const auto& m : row) {
      if (!is_zero(m)) return false;
    }
  }
  return true;
}

HCPair gr_pair(const HCPair& p) {
  if (is_graded_pair(p)) return p;
  HCPair out = p;
  out.name = "gr_" + p.name;
  const Field f = p.group.coordinate_ring()->field();
  for (auto& row : out.bracket) {
    for (auto& m : row) m = scalar_zero(p.group.size(), p.group.size(), f);
  }
  return out;
}

SuperDim sdim_of_pair(const HCPair& p) {
  return SuperDim{krull_dim(p.group.coordinate_algebra()), static_cast<int>(p.dim)};
}

std::vector<std::string> builtin_pair_names() { return {"unipotent", "gl1", "osp12", "gl2"}; }

HCPair builtin_pair(const std::string& name, Field field) {
  auto s = [&](long v) { return Scalar(v, field); };
  auto mat = [&](std::initializer_list<std::initializer_list<long>> rows) {
    ScalarMatrix m;
    for (const auto& r : rows) {
      std::vector<Scalar> row;
      for (long v : r) row.push_back(s(v));
      m.push_back(std::move(row));
    }
    return m;
  };
  if (name == "unipotent") {
    const RingPtr r = EvenGroupSpec::coordinate_ring_for(2, field);
    auto g = [&](std::size_t a, std::size_t b) { return SuperPoly::even_var(r, a * 2 + b); };
    const SuperPoly one = SuperPoly::constant(r, 1);
    EvenGroupSpec group(2, {g(1, 0), g(0, 0) - one, g(1, 1) - one},
                        {mat({{1, 1}, {0, 1}}), mat({{1, -2}, {0, 1}}), mat({{1, 3}, {0, 1}})},
                        field);
    return HCPair{name, std::move(group), 1, {{one}}, {{mat({{0, 2}, {0, 0}})}}};
  }
  if (name == "gl1") {
    const RingPtr r = EvenGroupSpec::coordinate_ring_for(1, field);
    EvenGroupSpec group(1, {}, {mat({{2}}), mat({{-3}}), mat({{5}})}, field);
    return HCPair{name, std::move(group), 1, {{SuperPoly::even_var(r, 0)}}, {{mat({{0}})}}};
  }
  if (name == "osp12" || name == "gl2") {
    const RingPtr r = EvenGroupSpec::coordinate_ring_for(2, field);
    auto g = [&](std::size_t a, std::size_t b) { return SuperPoly::even_var(r, a * 2 + b); };
    PolyMatrix rho{{g(0, 0), g(0, 1)}, {g(1, 0), g(1, 1)}};
    if (name == "osp12") {
      EvenGroupSpec group(2, {g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) - SuperPoly::constant(r, 1)},
                          {mat({{1, 1}, {0, 1}}), mat({{1, 0}, {2, 1}}), mat({{2, 1}, {1, 1}})},
                          field);
      const ScalarMatrix mixed = mat({{-1, 0}, {0, 1}});
      return HCPair{name, std::move(group), 2, std::move(rho),
                    {{mat({{0, 2}, {0, 0}}), mixed}, {mixed, mat({{0, 0}, {-2, 0}})}}};
    }
    EvenGroupSpec group(2, {}, {mat({{1, 2}, {3, 4}}), mat({{0, 1}, {1, 0}}), mat({{2, 1}, {1, 1}})},
                        field);
    const ScalarMatrix zero = mat({{0, 0}, {0, 0}});
    return HCPair{name, std::move(group), 2, std::move(rho), {{zero, zero}, {zero, zero}}};
  }
  throw std::invalid_argument("unknown built-in pair '" + name + "'");
}

HCGroup::HCGroup(HCPair pair, SuperAlgebra coeffs, bool check_membership)
    : pair_(std::move(pair)), coeffs_(std::move(coeffs)), check_membership_(check_membership) {
  check_shapes(pair_);
  if (!(pair_.group.coordinate_ring()->field() == coeffs_.ring()->field())) {
    throw StructuralError("pair and coefficient algebra are over different fields");
  }
  const std::size_t d_index = pair_.group.size() * pair_.group.size();
  for (const auto& row : pair_.rho) {
    for (const auto& e : row) {
      for (const auto& [m, c] : e.terms()) {
        if (m.exp[d_index] > 0) rho_uses_d_ = true;
      }
    }
  }
  lie_ = lie_algebra_of(pair_.group);
}

PolyMatrix HCGroup::rho_at(const PolyMatrix& m, const PolyMatrix& m_inv) const {
  GeneratorImages images;
  for (const auto& row : m) {
    for (const auto& e : row) images.push_back(e);
  }
  images.push_back(rho_uses_d_ ? determinant(m_inv, coeffs_) : SuperPoly(coeffs_.ring()));
  PolyMatrix out;
  for (const auto& row : pair_.rho) {
    std::vector<SuperPoly> r;
    for (const auto& e : row) r.push_back(coeffs_.normal_form(substitute(e, images, coeffs_.ring())));
    out.push_back(std::move(r));
  }
  return out;
}

PolyMatrix HCGroup::invert(const PolyMatrix& g) const {
  const RingPtr& ring = coeffs_.ring();
  const std::size_t n = g.size();
  const Field f = ring->field();
  ScalarMatrix g0 = scalar_zero(n, n, f);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g0[a][b] = g[a][b].constant_term();
  }
  const auto g0_inv = inverse(g0);
  if (!g0_inv) throw std::invalid_argument("matrix " + salg::render(g) + " is not invertible over the coefficients");
  // g = g0 (I - X) with X nilpotent when the non-constant part is
  PolyMatrix x = multiply(lift(*g0_inv, ring), g, coeffs_);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      x[a][b] = -x[a][b];
      if (a == b) x[a][b] += SuperPoly::constant(ring, 1);
    }
  }
  PolyMatrix sum = poly_identity(ring, n);
  PolyMatrix power = sum;
  for (int k = 0;; ++k) {
    power = multiply(power, x, coeffs_);
    bool zero = true;
    for (const auto& row : power) {
      for (const auto& e : row) zero = zero && e.is_zero();
    }
    if (zero) break;
    if (k > 64) {
      throw std::invalid_argument("cannot invert " + salg::render(g) +
                            ": non-constant part is not nilpotent; give the inverse explicitly");
    }
    sum = add(std::move(sum), power);
  }
  return multiply(sum, lift(*g0_inv, ring), coeffs_);
}

void HCGroup::check_in_group(const PolyMatrix& g, const PolyMatrix& g_inv) const {
  if (!check_membership_) return;
  if (auto bad = pair_.group.violated_equation(g, g_inv, coeffs_)) {
    throw std::invalid_argument("matrix " + salg::render(g) + " is not in G: " + *bad);
  }
}

HCElement HCGroup::identity() const {
  const RingPtr& ring = coeffs_.ring();
  const PolyMatrix id = poly_identity(ring, pair_.group.size());
  return HCElement{id, id, std::vector<SuperPoly>(pair_.dim, SuperPoly(ring))};
}

HCElement HCGroup::make(const PolyMatrix& g, const std::vector<SuperPoly>& odd) const {
  const std::size_t n = pair_.group.size();
  if (g.size() != n || std::any_of(g.begin(), g.end(), [&](const auto& r) { return r.size() != n; })) {
    throw std::invalid_argument("group part must be a " + std::to_string(n) + "x" +
                                std::to_string(n) + " matrix");
  }
  const PolyMatrix r = reduce(g, coeffs_);
  for (const auto& row : r) {
    for (const auto& e : row) {
      if (!e.has_parity(Parity::Even)) throw ParityError("group entry " + e.str() + " is not even");
    }
  }
  return make(r, invert(r), odd);
}

HCElement HCGroup::make(const PolyMatrix& g, const PolyMatrix& g_inv,
                        const std::vector<SuperPoly>& odd) const {
  const std::size_t n = pair_.group.size();
  if (odd.size() != pair_.dim) {
    throw std::invalid_argument("expected " + std::to_string(pair_.dim) + " odd coefficients");
  }
  HCElement e{reduce(g, coeffs_), reduce(g_inv, coeffs_), {}};
  for (const auto& a : odd) {
    SuperPoly r = coeffs_.normal_form(a);
    if (!r.has_parity(Parity::Odd)) throw ParityError("coefficient " + a.str() + " is not odd");
    e.odd.push_back(std::move(r));
  }
  if (!is_identity(multiply(e.g, e.g_inv, coeffs_)) || e.g_inv.size() != n) {
    throw std::invalid_argument("given inverse does not invert " + salg::render(g));
  }
  check_in_group(e.g, e.g_inv);
  return e;
}

PolyMatrix HCGroup::f_of(const SuperPoly& b, const ScalarMatrix& x) const {
  const SuperPoly nb = coeffs_.normal_form(b);
  if (!nb.has_parity(Parity::Even)) throw ParityError("f(b, x) needs b even, got " + b.str());
  if (!coeffs_.normal_form(nb * nb).is_zero()) {
    throw std::invalid_argument("f(b, x) needs b^2 = 0, got b = " + nb.str());
  }
  const RingPtr& ring = coeffs_.ring();
  const std::size_t n = pair_.group.size();
  const PolyMatrix bx = reduce(scale(nb, x, ring), coeffs_);
  PolyMatrix f = add(poly_identity(ring, n), bx);
  PolyMatrix f_inv = add(poly_identity(ring, n), scale(-nb, x, ring));
  check_in_group(f, reduce(f_inv, coeffs_));
  return f;
}

std::vector<HCGroup::Letter> HCGroup::word(const HCElement& e) const {
  std::vector<Letter> w;
  w.emplace_back(GroupLetter{e.g, e.g_inv});
  for (std::size_t i = 0; i < e.odd.size(); ++i) {
    if (!e.odd[i].is_zero()) w.emplace_back(OddLetter{e.odd[i], i});
  }
  return w;
}

HCElement HCGroup::normalize(std::vector<Letter> word, RewriteStrategy strategy,
                             RewriteStats* stats) const {
  const RingPtr& ring = coeffs_.ring();
  const std::size_t n = pair_.group.size();
  const Field field = ring->field();
  for (auto& l : word) {
    if (auto* o = std::get_if<OddLetter>(&l)) {
      if (o->index >= pair_.dim) throw std::invalid_argument("basis index out of range");
      o->a = coeffs_.normal_form(o->a);
      if (!o->a.has_parity(Parity::Odd)) throw ParityError("coefficient " + o->a.str() + " is not odd");
    }
  }

  PolyMatrix h = poly_identity(ring, n);
  PolyMatrix h_inv = h;
  RewriteStats local;

  auto is_redex = [&](std::size_t k) {
    if (const auto* g = std::get_if<GroupLetter>(&word[k])) {
      return k == 0 || is_identity(g->m) ||
             (k + 1 < word.size() && std::holds_alternative<GroupLetter>(word[k + 1]));
    }
    const auto& o = std::get<OddLetter>(word[k]);
    if (o.a.is_zero()) return true;
    if (k + 1 == word.size()) return false;
    if (std::holds_alternative<GroupLetter>(word[k + 1])) return true;
    return o.index >= std::get<OddLetter>(word[k + 1]).index;
  };

  // f(c, x) as a letter, or nothing when it is the identity
  auto correction = [&](const SuperPoly& c, const ScalarMatrix& x) -> std::optional<Letter> {
    if (c.is_zero() || is_zero(x)) return std::nullopt;
    PolyMatrix f = f_of(c, x);
    if (is_identity(f)) return std::nullopt;
    ++local.corrections;
    return GroupLetter{std::move(f), reduce(add(poly_identity(ring, n), scale(-c, x, ring)), coeffs_)};
  };

  auto rewrite = [&](std::size_t k) {
    if (auto* g = std::get_if<GroupLetter>(&word[k])) {
      if (is_identity(g->m)) {
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(k));
      } else if (k == 0) {
        h = multiply(h, g->m, coeffs_);
        h_inv = multiply(g->m_inv, h_inv, coeffs_);
        word.erase(word.begin());
      } else {
        auto& next = std::get<GroupLetter>(word[k + 1]);
        GroupLetter merged{multiply(g->m, next.m, coeffs_), multiply(next.m_inv, g->m_inv, coeffs_)};
        word[k] = std::move(merged);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(k + 1));
      }
      return;
    }
    const OddLetter o = std::get<OddLetter>(word[k]);
    if (o.a.is_zero()) {
      word.erase(word.begin() + static_cast<std::ptrdiff_t>(k));
      return;
    }
    std::vector<Letter> replacement;
    if (const auto* g = std::get_if<GroupLetter>(&word[k + 1])) {
      // e(a, v_i) M = M e(a, M^{-1} v_i), then split along the basis
      const PolyMatrix r = rho_at(g->m_inv, g->m);
      replacement.emplace_back(*g);
      for (std::size_t j = 0; j < pair_.dim; ++j) {
        SuperPoly c = coeffs_.normal_form(r[j][o.index] * o.a);
        if (!c.is_zero()) replacement.emplace_back(OddLetter{std::move(c), j});
      }
    } else {
      const OddLetter p = std::get<OddLetter>(word[k + 1]);
      const SuperPoly c = coeffs_.normal_form(-(o.a * p.a));
      if (o.index > p.index) {
        if (auto f = correction(c, pair_.bracket[o.index][p.index])) replacement.push_back(std::move(*f));
        replacement.emplace_back(p);
        replacement.emplace_back(o);
      } else {
        ScalarMatrix half = pair_.bracket[o.index][o.index];
        const Scalar inv2 = Scalar(2, field).inverse();
        for (auto& row : half) {
          for (auto& v : row) v *= inv2;
        }
        if (auto f = correction(c, half)) replacement.push_back(std::move(*f));
        SuperPoly sum = coeffs_.normal_form(o.a + p.a);
        if (!sum.is_zero()) replacement.emplace_back(OddLetter{std::move(sum), o.index});
      }
    }
    word.erase(word.begin() + static_cast<std::ptrdiff_t>(k),
               word.begin() + static_cast<std::ptrdiff_t>(k + 2));
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(k), replacement.begin(), replacement.end());
  };

  for (;;) {
    std::optional<std::size_t> redex;
    if (strategy == RewriteStrategy::Leftmost) {
      for (std::size_t k = 0; k < word.size() && !redex; ++k) {
        if (is_redex(k)) redex = k;
      }
    } else {
      for (std::size_t k = word.size(); k-- > 0 && !redex;) {
        if (is_redex(k)) redex = k;
      }
    }
    if (!redex) break;
    rewrite(*redex);
    if (++local.steps > kMaxRewriteSteps) throw std::logic_error("rewriting did not terminate");
  }

  HCElement out{std::move(h), std::move(h_inv), std::vector<SuperPoly>(pair_.dim, SuperPoly(ring))};
  for (const auto& l : word) {
    const auto& o = std::get<OddLetter>(l);
    out.odd[o.index] = o.a;
  }
  check_in_group(out.g, out.g_inv);
  if (stats) {
    stats->steps += local.steps;
    stats->corrections += local.corrections;
  }
  return out;
}

HCElement HCGroup::mul(const HCElement& x, const HCElement& y, RewriteStrategy strategy,
                       RewriteStats* stats) const {
  std::vector<Letter> w = word(x);
  for (auto& l : word(y)) w.push_back(std::move(l));
  return normalize(std::move(w), strategy, stats);
}

HCElement HCGroup::inv(const HCElement& x, RewriteStrategy strategy, RewriteStats* stats) const {
  std::vector<Letter> w;
  for (std::size_t i = x.odd.size(); i-- > 0;) {
    if (!x.odd[i].is_zero()) w.emplace_back(OddLetter{-x.odd[i], i});
  }
  w.emplace_back(GroupLetter{x.g_inv, x.g});
  return normalize(std::move(w), strategy, stats);
}

bool HCGroup::equal(const HCElement& x, const HCElement& y) const {
  if (x.odd.size() != y.odd.size()) return false;
  for (std::size_t i = 0; i < x.odd.size(); ++i) {
    if (!coeffs_.is_zero(x.odd[i] - y.odd[i])) return false;
  }
  for (std::size_t a = 0; a < x.g.size(); ++a) {
    for (std::size_t b = 0; b < x.g.size(); ++b) {
      if (!coeffs_.is_zero(x.g[a][b] - y.g[a][b])) return false;
    }
  }
  return true;
}

std::string HCGroup::render(const HCElement& e) const {
  std::string out = "g=" + salg::render(e.g) + "; e=[";
  for (std::size_t i = 0; i < e.odd.size(); ++i) {
    if (i) out += ", ";
    out += e.odd[i].str();
  }
  return out + "]";
}

HCElement HCGroup::random_element(std::mt19937_64& rng) const {
  const RingPtr& ring = coeffs_.ring();
  const Field f = ring->field();
  const std::size_t n = pair_.group.size();
  const std::size_t odd_gens = ring->num_odd();
  const auto& samples = pair_.group.samples();

  ScalarMatrix base = scalar_identity(n, f);
  for (std::size_t k = rng() % 3; k > 0 && !samples.empty(); --k) base = base * samples[rng() % samples.size()];
  PolyMatrix g = lift(base, ring);
  if (odd_gens >= 2 && !lie_.empty()) {
    for (int r = 0; r < 2; ++r) {
      const std::size_t i = rng() % odd_gens;
      std::size_t j = rng() % (odd_gens - 1);
      if (j >= i) ++j;
      const long c = static_cast<long>(rng() % 5) - 2;
      const SuperPoly b = Scalar(c, f) * (SuperPoly::odd_var(ring, i) * SuperPoly::odd_var(ring, j));
      g = multiply(g, f_of(b, lie_[rng() % lie_.size()]), coeffs_);
    }
  }

  std::vector<SuperPoly> odd;
  for (std::size_t i = 0; i < pair_.dim; ++i) {
    SuperPoly a(ring);
    for (int term = 0; term < 2 && odd_gens > 0; ++term) {
      std::uint64_t mask = std::uint64_t{1} << (rng() % odd_gens);
      if (odd_gens >= 3 && rng() % 2 == 0) {
        while (std::popcount(mask) < 3) mask |= std::uint64_t{1} << (rng() % odd_gens);
      }
      const long c = static_cast<long>(rng() % 7) - 3;
      a += SuperPoly::monomial(ring, SuperMonomial{std::vector<std::uint32_t>(ring->num_even(), 0), mask},
                               Scalar(c, f));
    }
    odd.push_back(std::move(a));
  }
  return make(g, odd);
}

}  // namespace salg
