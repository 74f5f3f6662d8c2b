#include "tworoots/forms.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "tworoots/kernels.hpp"

namespace tworoots {

namespace {

QMatrix cartan_q(const IntMatrix& cartan) { return QMatrix(cartan); }

Rational trace_product(const QMatrix& x, const QMatrix& y) {
  Rational acc = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) acc += x(i, j) * y(j, i);
  return acc;
}

}  // namespace

Rational btilde(const IntMatrix& cartan, const QMatrix& s, const QMatrix& t) {
  const QMatrix a = cartan_q(cartan);
  return trace_product(a * s, a * t);
}

Rational bprime(const IntMatrix& cartan, const QMatrix& s, const QMatrix& t) { return btilde(cartan, s, t) / 2; }

Rational bprime(const IntMatrix& cartan, const IntMatrix& s, const IntMatrix& t) {
  const IntMatrix as = cartan * s, at = cartan * t;
  __int128 acc = 0;
  for (std::size_t i = 0; i < as.rows(); ++i)
    for (std::size_t j = 0; j < as.cols(); ++j) acc += static_cast<__int128>(as(i, j)) * at(j, i);
  Rational out(checked::narrow(acc), 2);
  out.canonicalize();
  return out;
}

IntMatrix c_pair_apply(const IntMatrix& cartan, const Root& alpha, const Root& beta, const IntMatrix& v) {
  if (norm(cartan, alpha) != 2 || norm(cartan, beta) != 2) throw std::invalid_argument("c_pair_apply: roots must be real");
  if (bform(cartan, alpha, beta) != 0) throw std::invalid_argument("c_pair_apply: roots must be orthogonal");
  const IntMatrix x = reflect_tworoot(cartan, beta, v) - v;
  return reflect_tworoot(cartan, alpha, x) - x;
}

IntMatrix gram(const IntMatrix& cartan, const std::vector<IntMatrix>& elems, std::optional<Int> p) {
  IntMatrix g = kernels::gram_parallel(cartan, elems);
  return p ? reduce_mod(g, *p) : g;
}

std::vector<QVector> radical(const IntMatrix& gram_matrix) { return linalg::nullspace(QMatrix(gram_matrix)); }

std::vector<IntVector> radical_mod_p(const IntMatrix& gram_matrix, Int p) {
  return linalg::nullspace_mod_p(gram_matrix, p);
}

std::vector<IntMatrix> basis_matrices(const CanonicalBasis& basis, const std::vector<std::size_t>& indices) {
  std::vector<IntMatrix> out;
  for (std::size_t k : indices) out.push_back(basis[k].s);
  return out;
}

AffineRadical affine_radical_witness(const CanonicalBasis& basis) {
  const Diagram& d = basis.diagram();
  if (d.classify() != TypeClass::Affine) throw std::invalid_argument("affine_radical_witness: affine types only");
  AffineRadical r;
  r.delta = delta(d);
  const std::size_t n = d.n(), nb = basis.size();
  for (Vertex i = 0; i < n; ++i) r.witnesses.push_back(vee(r.delta, simple_root(n, i)));
  r.witnesses.push_back(vee(r.delta, r.delta));

  std::vector<std::size_t> all(nb);
  for (std::size_t k = 0; k < nb; ++k) all[k] = k;
  const IntMatrix g = gram(basis.cartan(), basis_matrices(basis, all));
  r.radical_dim = radical(g).size();

  // Coordinates of the witnesses as columns.
  IntMatrix coords(nb, r.witnesses.size());
  for (std::size_t w = 0; w < r.witnesses.size(); ++w) {
    const IntVector c = basis.expand(r.witnesses[w]);
    for (std::size_t k = 0; k < nb; ++k) coords(k, w) = c[k];
  }
  const IntMatrix pairing = g * coords;
  r.witnesses_in_radical = pairing.is_zero();

  IntMatrix first(nb, n);
  for (std::size_t k = 0; k < nb; ++k)
    for (std::size_t w = 0; w < n; ++w) first(k, w) = coords(k, w);
  r.witness_rank = linalg::rank(first);
  r.delta_delta_in_span = linalg::rank(coords) == r.witness_rank;
  return r;
}

QMatrix virasoro(const Diagram& d) {
  const auto inv = linalg::inverse(QMatrix(d.cartan()));
  if (!inv) throw std::invalid_argument("virasoro: Cartan matrix is singular");
  return *inv;
}

Decomposition decompose_s2v(const CanonicalBasis& basis) {
  const Diagram& d = basis.diagram();
  const TypeClass tc = d.classify();
  if (tc == TypeClass::Affine) throw std::invalid_argument("decompose_s2v: affine type, use affine_radical_witness");
  Decomposition out;
  const std::size_t n = d.n();
  out.dim_s2v = n * (n + 1) / 2;
  const QMatrix omega = virasoro(d);
  out.omega_dim = sgn(m_functional(basis.cartan(), omega)) != 0 ? 1 : 0;

  auto add_summand = [&](std::size_t id, const std::vector<std::size_t>& idx) {
    IntMatrix coords(basis.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c) coords(idx[c], c) = 1;
    out.orbit_ids.push_back(id);
    out.dims.push_back(linalg::rank(coords));
    out.radical_dims.push_back(radical(gram(basis.cartan(), basis_matrices(basis, idx))).size());
  };
  if (tc == TypeClass::Finite) {
    for (const auto& o : enumerate_orbits(basis)) add_summand(o.id, o.basis_members);
  } else {
    std::vector<std::size_t> all(basis.size());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
    add_summand(0, all);
  }
  return out;
}

std::uint64_t action_kernel_order(const CanonicalBasis& basis, const OrbitTable& orbit, std::uint64_t group_order,
                                  std::uint64_t cap) {
  const auto& idx = orbit.basis_members;
  std::vector<bool> inside(basis.size(), false);
  for (std::size_t k : idx) inside[k] = true;
  std::vector<IntMatrix> gens;
  for (const IntMatrix& g : generator_matrices(basis)) {
    IntMatrix block(idx.size(), idx.size());
    for (std::size_t c = 0; c < idx.size(); ++c)
      for (std::size_t r = 0; r < basis.size(); ++r) {
        const Int x = g(r, idx[c]);
        if (x == 0) continue;
        if (!inside[r]) throw std::logic_error("action_kernel_order: orbit span is not invariant");
        std::size_t rr = 0;
        while (idx[rr] != r) ++rr;
        block(rr, c) = x;
      }
    gens.push_back(std::move(block));
  }
  const std::uint64_t image = kernels::closure_size_parallel(gens, cap);
  if (group_order % image != 0) throw std::logic_error("action_kernel_order: image order does not divide |W|");
  return group_order / image;
}

Norm2Witness norm2_witness(int a, int b, int c, std::optional<Vertex> alpha) {
  const bool supported = (a == 2 && b == 2 && c == 3) || (a == 1 && b == 3 && c == 4) || (a == 1 && b == 2 && c == 6);
  if (!supported) throw std::invalid_argument("norm2_witness: supported triples are (2,2,3), (1,3,4), (1,2,6)");
  const Diagram d = Diagram::y(a, b, c);
  const std::size_t n = d.n();
  Norm2Witness w;
  w.extra = n - 1;
  w.alpha = alpha.value_or(static_cast<Vertex>(a));
  if (w.alpha >= n || w.alpha == w.extra || d.degree(w.alpha) != 1)
    throw std::invalid_argument("norm2_witness: alpha must be a leaf other than the added vertex");
  w.beta = d.neighbors(w.alpha).front();

  std::vector<Vertex> sub;
  for (Vertex v = 0; v + 1 < n; ++v) sub.push_back(v);
  const Restriction res = parabolic_restrict(d, sub);
  const Root dsub = delta(res.diagram);
  Root del(n, 0);
  for (Vertex k = 0; k < dsub.size(); ++k) del[res.new_to_old[k]] = dsub[k];

  Root ab = simple_root(n, w.alpha);
  ab[w.beta] = 1;
  w.x = vee(ab, simple_root(n, w.extra)) + vee(simple_root(n, w.alpha), del);
  const IntMatrix cartan = d.cartan();
  w.norm = bprime(cartan, w.x, w.x);
  const CanonicalBasis basis = CanonicalBasis::build(d);
  w.coords = basis.expand(w.x);
  w.sign = coherence_sign(w.coords);
  return w;
}

std::vector<IntVector> search_norm(const CanonicalBasis& basis, Int target, Int max_sum) {
  const std::size_t nb = basis.size();
  std::vector<std::size_t> all(nb);
  for (std::size_t k = 0; k < nb; ++k) all[k] = k;
  const IntMatrix g = gram(basis.cartan(), basis_matrices(basis, all));
  std::vector<IntVector> hits;
  IntVector x(nb, 0);
  // Depth-first over compositions with coordinate sum <= max_sum.
  std::function<void(std::size_t, Int)> rec = [&](std::size_t pos, Int left) {
    if (pos == nb) {
      if (std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; })) return;
      const IntVector gx = g * std::span<const Int>(x);
      if (dot(x, gx) == target) hits.push_back(x);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      x[pos] = v;
      rec(pos + 1, left - v);
    }
    x[pos] = 0;
  };
  rec(0, max_sum);
  return hits;
}

}  // namespace tworoots
