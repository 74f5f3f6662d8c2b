#pragma once

// Arc diagrams for 2-roots of types A and D and their canonical expansions.

#include <string>
#include <vector>

#include "tworoots/tworoots.hpp"

namespace tworoots {

struct Arc {
  std::size_t i = 0, j = 0;  // 1-based points, i < j
  bool decorated = false;    // e_i + e_j

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

struct ArcDiagram {
  std::size_t points = 0;
  std::vector<Arc> arcs;  // sorted

  friend bool operator==(const ArcDiagram&, const ArcDiagram&) = default;
};

ArcDiagram arc_diagram(const Diagram& d, const IntMatrix& tworoot);

struct SkeinTerm {
  Int coefficient = 0;
  std::size_t basis_index = 0;
  ArcDiagram diagram;
};

struct Skein {
  ArcDiagram lhs;
  std::vector<EpsilonForm> components;
  std::vector<SkeinTerm> terms;
};

Skein skein_expand(const CanonicalBasis& basis, const IntMatrix& tworoot);

// One row of point labels, then one row per arc: '+' at the ends, '-' between
// them, or '*' for a decorated arc.
std::string render_arcs(const ArcDiagram& a);
std::string render_skein(const CanonicalBasis& basis, const Skein& s, const std::vector<std::string>& names = {});

}  // namespace tworoots
