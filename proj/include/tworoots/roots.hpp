#pragma once

// Real roots as integer coefficient vectors over the simple roots.

#include <optional>
#include <string>
#include <vector>

#include "tworoots/diagram.hpp"
#include "tworoots/integer.hpp"

namespace tworoots {

using Root = IntVector;

Root simple_root(std::size_t n, Vertex i);
Int height(const Root& r);
bool is_positive(const Root& r);  // nonzero, all coefficients >= 0
bool is_negative(const Root& r);
Root negate(const Root& r);
// r or -r, whichever is positive; throws on mixed signs.
Root positive_form(const Root& r);

Int bform(const IntMatrix& cartan, const Root& u, const Root& v);
Int norm(const IntMatrix& cartan, const Root& r);

// v - B(alpha, v) alpha. alpha must have norm 2.
Root reflect(const IntMatrix& cartan, const Root& alpha, const Root& v);
Root reflect_simple(const IntMatrix& cartan, Vertex i, const Root& v);

// Sorted by height, then lexicographically. A bound is required unless finite.
std::vector<Root> positive_roots(const Diagram& d, std::optional<Int> height_bound = std::nullopt);

struct ElementaryRoot {
  Root root;
  int kind = 1;             // 1 simple, 2 sum along a 3-path, 3 D-type highest root
  std::vector<Vertex> L;    // vertices the root is elementary for
};

// Roots elementary with respect to i. For Y diagrams there are n-1 of them.
// For paths only kinds 1 and 2 occur.
std::vector<ElementaryRoot> elementary_roots(const Diagram& d, Vertex i);

// Highest root of the smallest D-type parabolic containing i and the branch.
Root theta(const Diagram& d, Vertex i);
// alpha_i + alpha_j + alpha_k for a path i - j - k.
Root eta(const Diagram& d, Vertex i, Vertex k);
// Primitive positive null vector of an affine Cartan matrix.
Root delta(const Diagram& d);

// Roots of type A (paths) and D (Y(1,1,c)) written as +-e_i +- e_j.
struct EpsilonForm {
  bool plus = false;     // e_i + e_j rather than e_i - e_j
  std::size_t i = 0;     // 1-based, i < j
  std::size_t j = 0;
  bool negated = false;  // the whole expression carries a minus sign

  friend bool operator==(const EpsilonForm&, const EpsilonForm&) = default;
};

std::string to_string(const EpsilonForm& e);
bool has_epsilon_model(const Diagram& d);
EpsilonForm epsilon_coords(const Diagram& d, const Root& r);
Root root_from_epsilon(const Diagram& d, const EpsilonForm& e);

}  // namespace tworoots
