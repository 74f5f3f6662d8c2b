#include "tworoots/roots.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tworoots/linalg.hpp"

namespace tworoots {

Root simple_root(std::size_t n, Vertex i) {
  if (i >= n) throw std::out_of_range("simple root index out of range");
  Root r(n, 0);
  r[i] = 1;
  return r;
}

Int height(const Root& r) {
  Int h = 0;
  for (Int x : r) h = checked::add(h, x);
  return h;
}

bool is_positive(const Root& r) {
  bool nonzero = false;
  for (Int x : r) {
    if (x < 0) return false;
    nonzero |= x != 0;
  }
  return nonzero;
}

bool is_negative(const Root& r) { return is_positive(negate(r)); }

Root negate(const Root& r) {
  Root out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out[k] = checked::sub(0, r[k]);
  return out;
}

Root positive_form(const Root& r) {
  if (is_positive(r)) return r;
  if (is_negative(r)) return negate(r);
  throw std::invalid_argument("vector with mixed signs is not a root");
}

Int bform(const IntMatrix& cartan, const Root& u, const Root& v) {
  if (u.size() != cartan.rows() || v.size() != cartan.rows()) throw std::invalid_argument("bform: dimension mismatch");
  return dot(u, cartan * std::span<const Int>(v));
}

Int norm(const IntMatrix& cartan, const Root& r) { return bform(cartan, r, r); }

Root reflect(const IntMatrix& cartan, const Root& alpha, const Root& v) {
  if (norm(cartan, alpha) != 2) throw std::invalid_argument("reflect: not a real root (norm != 2)");
  const Int c = bform(cartan, alpha, v);
  Root out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = checked::sub(v[k], checked::mul(c, alpha[k]));
  return out;
}

Root reflect_simple(const IntMatrix& cartan, Vertex i, const Root& v) {
  Root out = v;
  out[i] = checked::sub(v[i], dot(cartan.row(i), v));
  return out;
}

std::vector<Root> positive_roots(const Diagram& d, std::optional<Int> height_bound) {
  if (!height_bound && d.classify() != TypeClass::Finite)
    throw std::invalid_argument("positive_roots: a height bound is required for non-finite types");
  if (height_bound && *height_bound < 1) throw std::invalid_argument("positive_roots: height bound must be >= 1");
  const IntMatrix a = d.cartan();
  std::set<Root> seen;
  std::vector<Root> frontier;
  for (Vertex i = 0; i < d.n(); ++i) {
    frontier.push_back(simple_root(d.n(), i));
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier)
      for (Vertex i = 0; i < d.n(); ++i) {
        Root s = reflect_simple(a, i, r);
        if (!is_positive(s)) continue;
        if (height_bound && height(s) > *height_bound) continue;
        if (seen.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  std::vector<Root> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(), [](const Root& x, const Root& y) { return height(x) < height(y); });
  return out;
}

Root eta(const Diagram& d, Vertex i, Vertex k) {
  if (i >= d.n() || k >= d.n() || i == k) throw std::invalid_argument("eta: invalid vertices");
  const auto p = d.path_between(i, k);
  if (p.size() != 3) throw std::invalid_argument("eta: vertices are not the ends of a 3-vertex path");
  Root r(d.n(), 0);
  for (Vertex v : p) r[v] = 1;
  return r;
}

Root theta(const Diagram& d, Vertex i) {
  const auto br = d.branch();
  if (!br) throw std::invalid_argument("theta needs a Y diagram");
  if (i == *br) throw std::invalid_argument("theta is undefined at the branch vertex");
  const auto p = d.path_between(i, *br);
  Root r(d.n(), 0);
  for (Vertex v : p) r[v] = 2;
  r[i] = 1;
  for (Vertex w : d.neighbors(*br))
    if (r[w] == 0) r[w] = 1;
  const IntMatrix a = d.cartan();
  if (norm(a, r) != 2 || bform(a, r, simple_root(d.n(), i)) != 0)
    throw std::logic_error("theta: coefficient pattern failed its norm check");
  return r;
}

std::vector<ElementaryRoot> elementary_roots(const Diagram& d, Vertex i) {
  if (i >= d.n()) throw std::out_of_range("elementary_roots: vertex out of range");
  const std::size_t n = d.n();
  std::vector<ElementaryRoot> out;

  for (Vertex j = 0; j < n; ++j) {
    if (j == i || d.adjacent(i, j)) continue;
    ElementaryRoot e{simple_root(n, j), 1, {}};
    for (Vertex v = 0; v < n; ++v)
      if (v != j && !d.adjacent(v, j)) e.L.push_back(v);
    out.push_back(std::move(e));
  }

  const auto& nb = d.neighbors(i);
  for (std::size_t x = 0; x < nb.size(); ++x)
    for (std::size_t y = x + 1; y < nb.size(); ++y) out.push_back({eta(d, nb[x], nb[y]), 2, {i}});

  if (const auto br = d.branch(); br && i != *br) {
    if (d.adjacent(i, *br)) {
      out.push_back({theta(d, i), 3, d.neighbors(*br)});
    } else {
      out.push_back({theta(d, i), 3, {i}});
    }
  }

  const IntMatrix a = d.cartan();
  for (const auto& e : out)
    if (bform(a, e.root, simple_root(n, i)) != 0) throw std::logic_error("elementary root not orthogonal to its vertex");
  return out;
}

Root delta(const Diagram& d) {
  if (d.classify() != TypeClass::Affine) throw std::invalid_argument("delta is defined for affine types only");
  const auto ns = linalg::nullspace(QMatrix(d.cartan()));
  if (ns.size() != 1) throw std::logic_error("affine Cartan matrix with nullity != 1");
  Root r = linalg::primitive_integer(ns.front());
  if (!is_positive(r)) r = negate(r);
  if (!is_positive(r)) throw std::logic_error("null vector of an affine Cartan matrix is not sign-definite");
  return r;
}

std::string to_string(const EpsilonForm& e) {
  std::string s = "e" + std::to_string(e.i) + (e.plus ? "+" : "-") + "e" + std::to_string(e.j);
  return e.negated ? "-(" + s + ")" : s;
}

bool has_epsilon_model(const Diagram& d) { return !d.is_y() || (d.a() == 1 && d.b() == 1); }

namespace {

// Column k holds the epsilon coordinates of the simple root at internal vertex k.
IntMatrix epsilon_matrix(const Diagram& d) {
  if (!has_epsilon_model(d)) throw std::invalid_argument("epsilon coordinates exist for types A and D only");
  const std::size_t n = d.n();
  if (!d.is_y()) {
    IntMatrix e(n + 1, n);
    for (std::size_t k = 0; k < n; ++k) {
      e(k, k) = 1;
      e(k + 1, k) = -1;
    }
    return e;
  }
  const auto labels = classical_labels(d, 'd');
  IntMatrix e(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = std::stoul(labels[k]);  // 1-based label
    if (p < n) {
      e(p - 1, k) = 1;
      e(p, k) = -1;
    } else {
      e(n - 2, k) = 1;
      e(n - 1, k) = 1;
    }
  }
  return e;
}

}  // namespace

EpsilonForm epsilon_coords(const Diagram& d, const Root& r) {
  const IntMatrix e = epsilon_matrix(d);
  const IntVector v = e * std::span<const Int>(r);
  std::vector<std::size_t> nz;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) nz.push_back(k);
  if (nz.size() != 2 || std::abs(v[nz[0]]) != 1 || std::abs(v[nz[1]]) != 1)
    throw std::invalid_argument("vector is not a root of the form +-e_i +- e_j");
  EpsilonForm out;
  out.i = nz[0] + 1;
  out.j = nz[1] + 1;
  out.negated = v[nz[0]] < 0;
  out.plus = v[nz[0]] == v[nz[1]];
  return out;
}

Root root_from_epsilon(const Diagram& d, const EpsilonForm& f) {
  const IntMatrix e = epsilon_matrix(d);
  if (f.i < 1 || f.j <= f.i || f.j > e.rows()) throw std::invalid_argument("epsilon indices out of range");
  QVector target(e.rows());
  const long s = f.negated ? -1 : 1;
  target[f.i - 1] = s;
  target[f.j - 1] = f.plus ? s : -s;
  const auto x = linalg::solve(QMatrix(e), target);
  if (!x) throw std::invalid_argument("epsilon vector is not in the root lattice");
  Root r(d.n());
  for (std::size_t k = 0; k < r.size(); ++k) {
    if ((*x)[k].get_den() != 1) throw std::invalid_argument("epsilon vector is not in the root lattice");
    r[k] = (*x)[k].get_num().get_si();
  }
  return r;
}

}  // namespace tworoots
