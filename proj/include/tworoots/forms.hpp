#pragma once

// Invariant bilinear forms on S^2(V), radicals, the Virasoro element and the
// decomposition of S^2(V) into orbit summands.

#include <cstdint>
#include <optional>
#include <vector>

#include "tworoots/orbits.hpp"

namespace tworoots {

// B'(S, T) = tr(A S A T) / 2 and B~(S, T) = tr(A S A T).
Rational bprime(const IntMatrix& cartan, const QMatrix& s, const QMatrix& t);
Rational bprime(const IntMatrix& cartan, const IntMatrix& s, const IntMatrix& t);
Rational btilde(const IntMatrix& cartan, const QMatrix& s, const QMatrix& t);

// (s_alpha - 1)(s_beta - 1) applied to v, by conjugation.
IntMatrix c_pair_apply(const IntMatrix& cartan, const Root& alpha, const Root& beta, const IntMatrix& v);

// Gram matrix of B' on lattice elements, reduced into [0, p) when p is given.
IntMatrix gram(const IntMatrix& cartan, const std::vector<IntMatrix>& elems, std::optional<Int> p = std::nullopt);
std::vector<QVector> radical(const IntMatrix& gram_matrix);
std::vector<IntVector> radical_mod_p(const IntMatrix& gram_matrix, Int p);

std::vector<IntMatrix> basis_matrices(const CanonicalBasis& basis, const std::vector<std::size_t>& indices);

struct AffineRadical {
  Root delta;
  std::vector<IntMatrix> witnesses;  // delta v alpha_i for each i, then delta v delta
  std::size_t radical_dim = 0;       // nullity of the Gram matrix of B on M
  std::size_t witness_rank = 0;      // rank of delta v alpha_i in canonical coordinates
  bool witnesses_in_radical = false;
  bool delta_delta_in_span = false;
};
AffineRadical affine_radical_witness(const CanonicalBasis& basis);

// Matrix form of sum_i alpha_i^* (x) alpha_i, i.e. the inverse Cartan matrix.
QMatrix virasoro(const Diagram& d);

struct Decomposition {
  std::size_t dim_s2v = 0;
  std::size_t omega_dim = 0;
  std::vector<std::size_t> orbit_ids;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> radical_dims;
};
// Finite types: one summand per orbit. Indefinite types: the whole basis as
// a single summand. Affine types are rejected (see affine_radical_witness).
Decomposition decompose_s2v(const CanonicalBasis& basis);

// |W| divided by the order of the image of W acting on the span of B in the orbit.
std::uint64_t action_kernel_order(const CanonicalBasis& basis, const OrbitTable& orbit, std::uint64_t group_order,
                                  std::uint64_t cap = 1'000'000);

struct Norm2Witness {
  IntMatrix x;
  Rational norm;   // B'(x, x)
  IntVector coords;
  Sign sign = Sign::Zero;
  Vertex alpha = 0, beta = 0, extra = 0;
};
// Y(2,2,3), Y(1,3,4), Y(1,2,6): x = ((alpha + beta) v alpha_-1) + (alpha v delta) where
// alpha_-1 is the leaf of the third arm and delta the null root of the rest.
// `alpha` defaults to the leaf of the first arm.
Norm2Witness norm2_witness(int a, int b, int c, std::optional<Vertex> alpha = std::nullopt);

// Lattice vectors with nonnegative coordinates summing to at most `max_sum`
// and B'(x, x) == target. Exploratory only.
std::vector<IntVector> search_norm(const CanonicalBasis& basis, Int target, Int max_sum);

}  // namespace tworoots
