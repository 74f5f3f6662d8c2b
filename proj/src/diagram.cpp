#include "tworoots/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "tworoots/linalg.hpp"

namespace tworoots {

std::string to_string(TypeClass t) {
  switch (t) {
    case TypeClass::Finite: return "finite";
    case TypeClass::Affine: return "affine";
    case TypeClass::Indefinite: return "indefinite";
  }
  return "?";
}

void Diagram::add_edge(Vertex u, Vertex v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

Diagram Diagram::y(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw std::invalid_argument("Y diagram needs arm lengths a, b, c >= 1");
  Diagram d;
  d.kind_ = DiagramKind::Y;
  d.arms_ = {a, b, c};
  d.adj_.resize(static_cast<std::size_t>(a + b + c + 1));
  Vertex next = 1;
  for (int len : d.arms_) {
    Vertex prev = 0;
    for (int k = 0; k < len; ++k, ++next) {
      d.add_edge(prev, next);
      prev = next;
    }
  }
  for (auto& nb : d.adj_) std::sort(nb.begin(), nb.end());
  return d;
}

Diagram Diagram::path(int n) {
  if (n < 1) throw std::invalid_argument("path diagram needs n >= 1");
  Diagram d;
  d.kind_ = DiagramKind::Path;
  d.arms_ = {n, 0, 0};
  d.adj_.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v + 1 < d.adj_.size(); ++v) d.add_edge(v, v + 1);
  return d;
}

std::optional<Vertex> Diagram::branch() const {
  if (kind_ == DiagramKind::Y) return Vertex{0};
  return std::nullopt;
}

bool Diagram::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

std::vector<Vertex> Diagram::path_between(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) throw std::out_of_range("vertex out of range");
  std::vector<std::optional<Vertex>> parent(n());
  std::queue<Vertex> q;
  parent[u] = u;
  q.push(u);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : adj_[x])
      if (!parent[y]) {
        parent[y] = x;
        q.push(y);
      }
  }
  std::vector<Vertex> out{v};
  while (out.back() != u) out.push_back(*parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

IntMatrix Diagram::cartan() const {
  IntMatrix m(n(), n());
  for (Vertex i = 0; i < n(); ++i) {
    m(i, i) = 2;
    for (Vertex j : adj_[i]) m(i, j) = -1;
  }
  return m;
}

namespace {

IntMatrix principal(const IntMatrix& m, const std::vector<Vertex>& idx) {
  IntMatrix s(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) s(r, c) = m(idx[r], idx[c]);
  return s;
}

bool positive_definite(const IntMatrix& m) {
  std::vector<Vertex> idx;
  for (Vertex k = 0; k < m.rows(); ++k) {
    idx.push_back(k);
    if (linalg::determinant(principal(m, idx)) <= 0) return false;
  }
  return true;
}

}  // namespace

TypeClass Diagram::classify() const {
  const IntMatrix a = cartan();
  if (positive_definite(a)) return TypeClass::Finite;
  if (linalg::determinant(a) != 0) return TypeClass::Indefinite;
  for (Vertex drop = 0; drop < n(); ++drop) {
    std::vector<Vertex> idx;
    for (Vertex k = 0; k < n(); ++k)
      if (k != drop) idx.push_back(k);
    if (!positive_definite(principal(a, idx))) return TypeClass::Indefinite;
  }
  return TypeClass::Affine;
}

std::string Diagram::type_name() const {
  const std::string rank = std::to_string(n());
  if (kind_ == DiagramKind::Path) return "A" + rank;
  std::vector<int> s = arms_;
  std::sort(s.begin(), s.end());
  if (s[0] == 1 && s[1] == 1) return "D" + rank;
  if (s[0] == 1 && s[1] == 2 && s[2] <= 4) return "E" + rank;
  if (s == std::vector<int>{2, 2, 2}) return "affine E6";
  if (s == std::vector<int>{1, 3, 3}) return "affine E7";
  if (s == std::vector<int>{1, 2, 5}) return "affine E8";
  return "Y(" + std::to_string(arms_[0]) + "," + std::to_string(arms_[1]) + "," + std::to_string(arms_[2]) + ")";
}

std::size_t HGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& nb : adj) deg += nb.size();
  return deg / 2;
}

HGraph h_graph(int p, int q, int r) {
  if (p < -1 || q < -1 || r < -1) throw std::invalid_argument("H-graph parameters must be >= -1");
  // Build on a scratch vertex set, then compact away deleted vertices.
  std::vector<std::vector<Vertex>> adj(6);
  auto edge = [&](Vertex u, Vertex v) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  };
  for (Vertex h = 0; h < 6; ++h) edge(h, (h + 1) % 6);
  std::vector<bool> deleted(6, false);
  const int lens[3] = {p, q, r};
  for (int k = 0; k < 3; ++k) {
    const Vertex at = static_cast<Vertex>(2 * k);
    if (lens[k] == -1) {
      deleted[at] = true;
      continue;
    }
    Vertex prev = at;
    for (int s = 0; s < lens[k]; ++s) {
      adj.emplace_back();
      deleted.push_back(false);
      edge(prev, adj.size() - 1);
      prev = adj.size() - 1;
    }
  }
  std::vector<std::optional<Vertex>> remap(adj.size());
  Vertex next = 0;
  for (Vertex v = 0; v < adj.size(); ++v)
    if (!deleted[v]) remap[v] = next++;
  HGraph h{p, q, r, std::vector<std::vector<Vertex>>(next)};
  for (Vertex v = 0; v < adj.size(); ++v) {
    if (!remap[v]) continue;
    for (Vertex w : adj[v])
      if (remap[w]) h.adj[*remap[v]].push_back(*remap[w]);
    std::sort(h.adj[*remap[v]].begin(), h.adj[*remap[v]].end());
  }
  return h;
}

HGraph h_graph_for(const Diagram& d) {
  if (!d.is_y()) throw std::invalid_argument("H-graph is defined for Y diagrams");
  return h_graph(d.a() - 2, d.b() - 2, d.c() - 2);
}

std::size_t component_count(const HGraph& h) {
  std::vector<bool> seen(h.vertex_count(), false);
  std::size_t count = 0;
  for (Vertex s = 0; s < h.vertex_count(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : h.adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

Restriction parabolic_restrict(const Diagram& d, const std::vector<Vertex>& subset) {
  std::vector<Vertex> sub = subset;
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.empty()) throw std::invalid_argument("restriction to an empty vertex set");
  for (Vertex v : sub)
    if (v >= d.n()) throw std::out_of_range("restriction vertex out of range");

  std::vector<bool> in(d.n(), false);
  for (Vertex v : sub) in[v] = true;
  auto inner = [&](Vertex v) {
    std::vector<Vertex> nb;
    for (Vertex w : d.neighbors(v))
      if (in[w]) nb.push_back(w);
    return nb;
  };

  // connectivity
  std::vector<bool> seen(d.n(), false);
  std::vector<Vertex> stack{sub.front()};
  seen[sub.front()] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : inner(v))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  if (reached != sub.size()) throw std::invalid_argument("restriction induces a disconnected subgraph");

  // Walk outward from `from` through `start`, collecting the arm.
  auto walk = [&](Vertex from, Vertex start) {
    std::vector<Vertex> arm{start};
    Vertex prev = from, cur = start;
    for (;;) {
      std::optional<Vertex> nxt;
      for (Vertex w : inner(cur))
        if (w != prev) nxt = w;
      if (!nxt) break;
      prev = cur;
      cur = *nxt;
      arm.push_back(cur);
    }
    return arm;
  };

  std::optional<Vertex> branch;
  for (Vertex v : sub) {
    const auto deg = inner(v).size();
    if (deg > 3) throw std::invalid_argument("restriction is not of path or Y shape");
    if (deg == 3) {
      if (branch) throw std::invalid_argument("restriction is not of path or Y shape");
      branch = v;
    }
  }

  Restriction res{Diagram::path(1), std::vector<std::optional<Vertex>>(d.n()), {}};
  if (branch) {
    std::vector<Vertex> starts = inner(*branch);
    std::sort(starts.begin(), starts.end());
    std::vector<std::vector<Vertex>> arms;
    for (Vertex s : starts) arms.push_back(walk(*branch, s));
    res.diagram = Diagram::y(static_cast<int>(arms[0].size()), static_cast<int>(arms[1].size()),
                             static_cast<int>(arms[2].size()));
    res.new_to_old.push_back(*branch);
    for (const auto& arm : arms) res.new_to_old.insert(res.new_to_old.end(), arm.begin(), arm.end());
  } else {
    std::vector<Vertex> ends;
    for (Vertex v : sub)
      if (inner(v).size() <= 1) ends.push_back(v);
    const Vertex start = ends.front();
    res.diagram = Diagram::path(static_cast<int>(sub.size()));
    res.new_to_old.push_back(start);
    if (sub.size() > 1) {
      auto rest = walk(start, inner(start).front());
      res.new_to_old.insert(res.new_to_old.end(), rest.begin(), rest.end());
    }
  }
  for (Vertex k = 0; k < res.new_to_old.size(); ++k) res.old_to_new[res.new_to_old[k]] = k;
  return res;
}

std::vector<std::string> classical_labels(const Diagram& d, char scheme) {
  const std::size_t n = d.n();
  std::vector<std::string> out(n);
  if (!d.is_y()) {
    for (Vertex v = 0; v < n; ++v) out[v] = std::to_string(v + 1);
    return out;
  }
  if (scheme == 'd') {
    if (d.a() != 1 || d.b() != 1) throw std::invalid_argument("D numbering needs a Y(1,1,c) diagram");
    out[0] = std::to_string(n - 2);
    out[1] = std::to_string(n - 1);
    out[2] = std::to_string(n);
    for (Vertex k = 3; k < n; ++k) out[k] = std::to_string(n - k);
    return out;
  }
  if (scheme == 'e') {
    if (d.a() != 1 || d.b() != 2 || d.c() < 2) throw std::invalid_argument("E numbering needs a Y(1,2,c) diagram, c >= 2");
    out[0] = "3";
    out[1] = "x";
    out[2] = "2";
    out[3] = "1";
    for (Vertex k = 4; k < n; ++k) out[k] = std::to_string(k);
    return out;
  }
  throw std::invalid_argument("unknown numbering scheme (use d or e)");
}

Vertex from_classical_label(const Diagram& d, char scheme, const std::string& label) {
  const auto labels = classical_labels(d, scheme);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("no vertex labelled " + label);
  return static_cast<Vertex>(it - labels.begin());
}

}  // namespace tworoots
