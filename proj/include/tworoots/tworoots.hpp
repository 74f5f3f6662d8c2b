#pragma once

// Elements of S^2(V) as symmetric matrices, the canonical basis of the
// 2-root module and expansion in it.
//
// An element is a symmetric matrix S with S_ij the coefficient of
// alpha_i (x) alpha_j; a v b is stored as a b^T + b a^T.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tworoots/diagram.hpp"
#include "tworoots/linalg.hpp"
#include "tworoots/roots.hpp"

namespace tworoots {

using Word = std::vector<Vertex>;  // s_{w[0]} s_{w[1]} ...; the last letter acts first

IntMatrix vee(const Root& a, const Root& b);
QMatrix to_rational(const IntMatrix& s);

// trace(A S); equals 2 B(a, b) on a v b.
Int m_functional(const IntMatrix& cartan, const IntMatrix& s);
Rational m_functional(const IntMatrix& cartan, const QMatrix& s);

// Off-diagonal S_ij (i < j) followed by the halved diagonal, in row-major pair order.
QVector standard_coords(const QMatrix& s);

bool is_nonnegative(const IntMatrix& s);
// s or -s, whichever is entrywise nonnegative; mixed matrices are returned unchanged.
IntMatrix positive_normal(const IntMatrix& s);

// Conjugation S -> R S R^T by the reflection in gamma.
IntMatrix reflect_tworoot(const IntMatrix& cartan, const Root& gamma, const IntMatrix& s);
IntMatrix reflect_tworoot_simple(const IntMatrix& cartan, Vertex i, const IntMatrix& s);
QMatrix reflect_tworoot_simple(const IntMatrix& cartan, Vertex i, const QMatrix& s);
IntMatrix apply_word(const IntMatrix& cartan, const Word& w, const IntMatrix& s);
Root apply_word(const IntMatrix& cartan, const Word& w, const Root& r);

// Root order used for canonical pairs: height first, then reverse lexicographic
// so that alpha_0 precedes alpha_1 among equal heights.
bool root_less(const Root& x, const Root& y);

// Recovers (a, b) with s = a b^T + b a^T, a primitive. Both are returned
// positive when s is nonnegative, in root_less order.
std::pair<Root, Root> components(const IntMatrix& s);

enum class Sign { Zero, Positive, Negative, Mixed };
std::string to_string(Sign s);
Sign coherence_sign(const IntVector& v);
Sign coherence_sign(const QVector& v);

struct BasisElement {
  Vertex i = 0;             // vertex of the simple component
  ElementaryRoot beta;      // elementary with respect to i
  IntMatrix s;              // alpha_i v beta
};

class CanonicalBasis {
 public:
  static CanonicalBasis build(const Diagram& d);

  const Diagram& diagram() const { return d_; }
  const IntMatrix& cartan() const { return cartan_; }
  std::size_t size() const { return elems_.size(); }
  const BasisElement& operator[](std::size_t k) const { return elems_[k]; }
  const std::vector<BasisElement>& elements() const { return elems_; }

  std::optional<std::size_t> index_of(const IntMatrix& s) const;

  // Integral coordinates; throws std::domain_error when s is outside the
  // span or the coordinates are not integers.
  IntVector expand(const IntMatrix& s) const;
  QVector expand_q(const QMatrix& s) const;
  IntMatrix combine(const IntVector& coords) const;

  // Denominator of the stored inverse of the basis matrix (1 when unimodular).
  Int solver_denominator() const { return den_; }

  // Indices of the elements alpha_i v beta with beta elementary for i.
  std::vector<std::size_t> star_set(Vertex i) const;

  // Label such as "a3 v theta1"; `names` renames vertices.
  std::string label(std::size_t k, const std::vector<std::string>& names = {}) const;

 private:
  Diagram d_ = Diagram::path(1);
  IntMatrix cartan_;
  std::vector<BasisElement> elems_;
  std::map<std::vector<Int>, std::size_t> index_;
  bool spans_m_ = true;
  std::vector<std::pair<Vertex, Vertex>> pivot_rows_;
  QMatrix qinv_;
  IntMatrix inv_;  // qinv_ * den_
  Int den_ = 1;
};

Int ht2(const CanonicalBasis& basis, const IntMatrix& s);
bool leq2(const CanonicalBasis& basis, const IntMatrix& t1, const IntMatrix& t2);

struct SimpleAction {
  enum class Kind { Fix, Negate, Add } kind = Kind::Fix;
  std::size_t added = 0;  // index of b' when kind == Add
};
std::string to_string(SimpleAction::Kind k);

SimpleAction simple_action_on_basis(const CanonicalBasis& basis, Vertex gamma, std::size_t b);

// Column j is the expansion of w(b_j).
IntMatrix word_matrix(const CanonicalBasis& basis, const Word& w);
std::vector<IntMatrix> generator_matrices(const CanonicalBasis& basis);

// v -> s_i s_j (v) on the star set of i; returns (source, image) index pairs.
std::vector<std::pair<std::size_t, std::size_t>> star_bijection(const CanonicalBasis& basis, Vertex i, Vertex j);

Word parse_word(const std::string& text, std::size_t n);

}  // namespace tworoots
