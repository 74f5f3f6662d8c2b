#pragma once

// Simply laced Dynkin diagrams of Y and path shape.
//
// Vertex numbering for Y(a,b,c): the branch is 0, arm a occupies 1..a,
// arm b occupies a+1..a+b, arm c occupies a+b+1..n-1, each arm ordered
// outward from the branch. Path(n) is numbered 0..n-1 along the path.

#include <optional>
#include <string>
#include <vector>

#include "tworoots/integer.hpp"

namespace tworoots {

using Vertex = std::size_t;

enum class DiagramKind { Y, Path };
enum class TypeClass { Finite, Affine, Indefinite };

std::string to_string(TypeClass t);

class Diagram {
 public:
  static Diagram y(int a, int b, int c);
  static Diagram path(int n);

  DiagramKind kind() const { return kind_; }
  bool is_y() const { return kind_ == DiagramKind::Y; }
  std::size_t n() const { return adj_.size(); }
  int a() const { return arms_[0]; }
  int b() const { return arms_[1]; }
  int c() const { return arms_[2]; }
  std::optional<Vertex> branch() const;

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const;
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  // Vertices of the unique path from u to v, both ends included.
  std::vector<Vertex> path_between(Vertex u, Vertex v) const;
  std::size_t distance(Vertex u, Vertex v) const { return path_between(u, v).size() - 1; }

  IntMatrix cartan() const;
  TypeClass classify() const;
  // "A4", "D5", "E8", "affine E6", or "Y(a,b,c)".
  std::string type_name() const;

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.kind_ == y.kind_ && x.arms_ == y.arms_ && x.adj_.size() == y.adj_.size();
  }

 private:
  Diagram() = default;
  void add_edge(Vertex u, Vertex v);

  DiagramKind kind_ = DiagramKind::Path;
  std::vector<int> arms_{0, 0, 0};
  std::vector<std::vector<Vertex>> adj_;
};

// Hexagon h0..h5 with paths of lengths p, q, r attached at h0, h2, h4.
// A length of 0 leaves the graph alone; -1 deletes the attachment vertex.
struct HGraph {
  int p = 0, q = 0, r = 0;
  std::vector<std::vector<Vertex>> adj;

  std::size_t vertex_count() const { return adj.size(); }
  std::size_t edge_count() const;
};

HGraph h_graph(int p, int q, int r);
// The graph describing root stabilizers in Y(a,b,c).
HGraph h_graph_for(const Diagram& d);
std::size_t component_count(const HGraph& h);

struct Restriction {
  Diagram diagram;
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
};

// Induced subdiagram on `subset`, renumbered with the usual convention.
// Arms of a Y are taken in order of their branch-adjacent vertex; a path
// starts at the end with the smaller original index.
Restriction parabolic_restrict(const Diagram& d, const std::vector<Vertex>& subset);

// Labels used in the classical numberings. 'd' needs Y(1,1,c) or a path,
// 'e' needs Y(1,2,c) with c >= 2. Path labels are 1..n in either scheme.
std::vector<std::string> classical_labels(const Diagram& d, char scheme);
Vertex from_classical_label(const Diagram& d, char scheme, const std::string& label);

}  // namespace tworoots
