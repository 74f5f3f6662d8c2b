#pragma once

// W-orbits of positive 2-roots, the height orders on them, and highest 2-roots.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tworoots/tworoots.hpp"

namespace tworoots {

// Unordered pair of orthogonal positive roots, stored in root_less order.
struct RootPair {
  Root first;
  Root second;

  static RootPair make(const Root& a, const Root& b);
  IntMatrix tworoot() const { return vee(first, second); }

  friend auto operator<=>(const RootPair&, const RootPair&) = default;
  friend bool operator==(const RootPair&, const RootPair&) = default;
};

// Applies w to both roots and folds each back to its positive representative.
RootPair pair_action(const IntMatrix& cartan, const Word& w, const RootPair& rho);

struct OrbitTable {
  std::size_t id = 0;
  std::vector<RootPair> members;            // sorted by the row-major key of the 2-root
  std::vector<std::size_t> basis_members;   // indices into the canonical basis
  RootPair highest;
  Int height = 0;

  bool contains(const IntMatrix& s) const;
  std::size_t size() const { return members.size(); }
};

// Finite types only. Orbits are numbered by their smallest basis index.
std::vector<OrbitTable> enumerate_orbits(const CanonicalBasis& basis);
std::optional<std::size_t> orbit_containing(const std::vector<OrbitTable>& orbits, const IntMatrix& s);

// Orbit members with ht2 <= bound. Finite types filter the full orbit.
// Otherwise (where every type has a single orbit) this is the closure of
// the seed and the basis under simple reflections inside the height bound.
std::vector<RootPair> orbit_of(const CanonicalBasis& basis, const RootPair& seed, Int height_bound);
// Closure of `seeds` under simple reflections, never leaving ht2 <= bound.
std::vector<RootPair> bounded_closure(const CanonicalBasis& basis, const std::vector<RootPair>& seeds, Int height_bound);

bool cgw_less(const RootPair& r1, const RootPair& r2);
// Generators s_i with r < s_i(r) (up) or s_i(r) < r (down) in the height order.
std::vector<std::pair<Vertex, RootPair>> monoidal_covers(const IntMatrix& cartan, const RootPair& rho);
std::vector<std::pair<Vertex, RootPair>> monoidal_down_covers(const IntMatrix& cartan, const RootPair& rho);

// Repeatedly applies a simple reflection that strictly raises the element in
// the <=_2 order. With an rng the generators are tried in a shuffled order.
RootPair climb(const CanonicalBasis& basis, const RootPair& start, std::mt19937_64* rng = nullptr);
RootPair highest_tworoot(const CanonicalBasis& basis, const OrbitTable& orbit);

// Equal heights and the sign conditions on B(alpha_i, .) that force maximality.
bool satisfies_highest_criterion(const IntMatrix& cartan, const RootPair& rho);

// Closed forms of the highest 2-roots for types A, D and E.
std::vector<RootPair> explicit_highest_all(const Diagram& d);
RootPair explicit_highest(const CanonicalBasis& basis, const std::vector<OrbitTable>& orbits, std::size_t orbit_id);
Int highest_height(const CanonicalBasis& basis, const OrbitTable& orbit);

// Highest root from the classical coefficient lists.
Root classical_highest_root(const Diagram& d);

}  // namespace tworoots
