#include "tworoots/orbits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace tworoots {

RootPair RootPair::make(const Root& a, const Root& b) {
  Root x = positive_form(a), y = positive_form(b);
  if (root_less(y, x)) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

RootPair pair_action(const IntMatrix& cartan, const Word& w, const RootPair& rho) {
  return RootPair::make(apply_word(cartan, w, rho.first), apply_word(cartan, w, rho.second));
}

bool OrbitTable::contains(const IntMatrix& s) const {
  try {
    const auto [a, b] = components(positive_normal(s));
    return std::binary_search(members.begin(), members.end(), RootPair::make(a, b),
                              [](const RootPair& x, const RootPair& y) { return x.tworoot().data() < y.tworoot().data(); });
  } catch (const std::invalid_argument&) {
    return false;
  }
}

namespace {

std::vector<Int> key_of(const RootPair& p) { return p.tworoot().data(); }

void sort_by_key(std::vector<RootPair>& v) {
  std::vector<std::pair<std::vector<Int>, RootPair>> tagged;
  tagged.reserve(v.size());
  for (auto& p : v) tagged.emplace_back(key_of(p), std::move(p));
  std::sort(tagged.begin(), tagged.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  v.clear();
  for (auto& t : tagged) v.push_back(std::move(t.second));
}

RootPair pair_of_basis(const CanonicalBasis& basis, std::size_t k) {
  return RootPair::make(simple_root(basis.diagram().n(), basis[k].i), basis[k].beta.root);
}

}  // namespace

std::vector<OrbitTable> enumerate_orbits(const CanonicalBasis& basis) {
  const Diagram& d = basis.diagram();
  if (d.classify() != TypeClass::Finite) throw std::invalid_argument("enumerate_orbits: finite types only (use orbit_of)");
  const IntMatrix& a = basis.cartan();
  std::map<RootPair, std::size_t> owner;
  std::vector<OrbitTable> out;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const RootPair seed = pair_of_basis(basis, k);
    if (owner.count(seed)) continue;
    OrbitTable t;
    t.id = out.size();
    std::vector<RootPair> frontier{seed};
    owner[seed] = t.id;
    while (!frontier.empty()) {
      std::vector<RootPair> next;
      for (const auto& p : frontier) {
        t.members.push_back(p);
        for (Vertex i = 0; i < d.n(); ++i) {
          RootPair q = pair_action(a, {i}, p);
          if (owner.emplace(q, t.id).second) next.push_back(std::move(q));
        }
      }
      frontier = std::move(next);
    }
    sort_by_key(t.members);
    out.push_back(std::move(t));
  }
  for (std::size_t k = 0; k < basis.size(); ++k) out[owner.at(pair_of_basis(basis, k))].basis_members.push_back(k);
  for (auto& t : out) {
    t.highest = highest_tworoot(basis, t);
    t.height = ht2(basis, t.highest.tworoot());
  }
  return out;
}

std::optional<std::size_t> orbit_containing(const std::vector<OrbitTable>& orbits, const IntMatrix& s) {
  for (const auto& t : orbits)
    if (t.contains(s)) return t.id;
  return std::nullopt;
}

std::vector<RootPair> bounded_closure(const CanonicalBasis& basis, const std::vector<RootPair>& seeds, Int height_bound) {
  const IntMatrix& a = basis.cartan();
  std::set<RootPair> seen;
  std::vector<RootPair> frontier;
  for (const auto& s : seeds)
    if (ht2(basis, s.tworoot()) <= height_bound && seen.insert(s).second) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<RootPair> next;
    for (const auto& p : frontier)
      for (Vertex i = 0; i < basis.diagram().n(); ++i) {
        RootPair q = pair_action(a, {i}, p);
        if (seen.count(q) || ht2(basis, q.tworoot()) > height_bound) continue;
        seen.insert(q);
        next.push_back(std::move(q));
      }
    frontier = std::move(next);
  }
  std::vector<RootPair> out(seen.begin(), seen.end());
  sort_by_key(out);
  return out;
}

std::vector<RootPair> orbit_of(const CanonicalBasis& basis, const RootPair& seed, Int height_bound) {
  const Diagram& d = basis.diagram();
  if (d.classify() == TypeClass::Finite) {
    const auto orbits = enumerate_orbits(basis);
    const auto id = orbit_containing(orbits, seed.tworoot());
    if (!id) throw std::invalid_argument("orbit_of: seed is not a positive 2-root");
    std::vector<RootPair> out;
    for (const auto& p : orbits[*id].members)
      if (ht2(basis, p.tworoot()) <= height_bound) out.push_back(p);
    return out;
  }
  if (!d.is_y() || component_count(h_graph_for(d)) != 1)
    throw std::logic_error("orbit_of: expected a single orbit outside finite type");
  std::vector<RootPair> seeds{seed};
  for (std::size_t k = 0; k < basis.size(); ++k) seeds.push_back(pair_of_basis(basis, k));
  return bounded_closure(basis, seeds, height_bound);
}

bool cgw_less(const RootPair& r1, const RootPair& r2) {
  auto min_height_outside = [](const RootPair& x, const RootPair& y) -> std::optional<Int> {
    std::optional<Int> best;
    for (const Root* r : {&x.first, &x.second}) {
      if (*r == y.first || *r == y.second) continue;
      const Int h = height(*r);
      if (!best || h < *best) best = h;
    }
    return best;
  };
  const auto h1 = min_height_outside(r1, r2);
  const auto h2 = min_height_outside(r2, r1);
  return h1 && h2 && *h1 < *h2;
}

std::vector<std::pair<Vertex, RootPair>> monoidal_covers(const IntMatrix& cartan, const RootPair& rho) {
  std::vector<std::pair<Vertex, RootPair>> out;
  for (Vertex i = 0; i < cartan.rows(); ++i) {
    RootPair q = pair_action(cartan, {i}, rho);
    if (q != rho && cgw_less(rho, q)) out.emplace_back(i, std::move(q));
  }
  return out;
}

std::vector<std::pair<Vertex, RootPair>> monoidal_down_covers(const IntMatrix& cartan, const RootPair& rho) {
  std::vector<std::pair<Vertex, RootPair>> out;
  for (Vertex i = 0; i < cartan.rows(); ++i) {
    RootPair q = pair_action(cartan, {i}, rho);
    if (q != rho && cgw_less(q, rho)) out.emplace_back(i, std::move(q));
  }
  return out;
}

RootPair climb(const CanonicalBasis& basis, const RootPair& start, std::mt19937_64* rng) {
  const IntMatrix& a = basis.cartan();
  std::vector<Vertex> order(basis.diagram().n());
  std::iota(order.begin(), order.end(), 0);
  RootPair cur = start;
  for (;;) {
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    bool moved = false;
    const IntMatrix t = cur.tworoot();
    for (Vertex i : order) {
      RootPair q = pair_action(a, {i}, cur);
      if (q == cur) continue;
      const IntVector diff = basis.expand(q.tworoot() - t);
      if (coherence_sign(diff) == Sign::Positive) {
        cur = std::move(q);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

RootPair highest_tworoot(const CanonicalBasis& basis, const OrbitTable& orbit) {
  if (basis.diagram().classify() != TypeClass::Finite) throw std::invalid_argument("highest_tworoot: finite types only");
  if (orbit.members.empty()) throw std::invalid_argument("highest_tworoot: empty orbit");
  return climb(basis, orbit.members.front());
}

bool satisfies_highest_criterion(const IntMatrix& cartan, const RootPair& rho) {
  if (height(rho.first) != height(rho.second)) return false;
  for (Vertex i = 0; i < cartan.rows(); ++i) {
    const Root ai = simple_root(cartan.rows(), i);
    const Int x = bform(cartan, ai, rho.first), y = bform(cartan, ai, rho.second);
    if (x == -1 && y != 1) return false;
    if (y == -1 && x != 1) return false;
  }
  return true;
}

namespace {

// Sum of simple roots along the path between two labelled vertices.
Root alpha_path(const Diagram& d, char scheme, const std::string& b, const std::string& c) {
  Root r(d.n(), 0);
  for (Vertex v : d.path_between(from_classical_label(d, scheme, b), from_classical_label(d, scheme, c))) r[v] = 1;
  return r;
}

Root minus(const Root& x, const Root& y) {
  Root r(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) r[k] = x[k] - y[k];
  return r;
}

bool is_d_type(const Diagram& d) { return d.is_y() && d.a() == 1 && d.b() == 1; }
bool is_e_type(const Diagram& d) { return d.is_y() && d.a() == 1 && d.b() == 2 && d.c() >= 2 && d.c() <= 4; }

}  // namespace

Root classical_highest_root(const Diagram& d) {
  const std::size_t n = d.n();
  if (!d.is_y()) return Root(n, 1);
  Root r(n, 0);
  auto set = [&](char scheme, const std::string& label, Int v) { r[from_classical_label(d, scheme, label)] = v; };
  if (is_d_type(d)) {
    set('d', "1", 1);
    for (std::size_t k = 2; k + 1 < n; ++k) set('d', std::to_string(k), 2);
    set('d', std::to_string(n - 1), 1);
    set('d', std::to_string(n), 1);
    return r;
  }
  if (is_e_type(d)) {
    static const std::map<std::size_t, std::vector<std::pair<std::string, Int>>> table{
        {6, {{"1", 1}, {"2", 2}, {"3", 3}, {"4", 2}, {"5", 1}, {"x", 2}}},
        {7, {{"1", 2}, {"2", 3}, {"3", 4}, {"4", 3}, {"5", 2}, {"6", 1}, {"x", 2}}},
        {8, {{"1", 2}, {"2", 4}, {"3", 6}, {"4", 5}, {"5", 4}, {"6", 3}, {"7", 2}, {"x", 3}}},
    };
    for (const auto& [label, v] : table.at(n)) set('e', label, v);
    return r;
  }
  throw std::invalid_argument("no classical highest root for " + d.type_name());
}

std::vector<RootPair> explicit_highest_all(const Diagram& d) {
  const std::size_t n = d.n();
  const std::string N = std::to_string(n);
  if (!d.is_y()) {
    if (n < 3) throw std::invalid_argument("type A_n with n < 3 has no orthogonal pairs");
    return {RootPair::make(alpha_path(d, 'd', "1", std::to_string(n - 1)), alpha_path(d, 'd', "2", N))};
  }
  const Root th = classical_highest_root(d);
  if (is_d_type(d)) {
    auto tm = [&](const char* b, const char* c) { return minus(th, alpha_path(d, 'd', b, c)); };
    if (n == 4)
      return {RootPair::make(tm("2", "4"), tm("2", "3")), RootPair::make(tm("2", "4"), tm("1", "2")),
              RootPair::make(tm("2", "3"), tm("1", "2"))};
    return {RootPair::make(alpha_path(d, 'd', "1", std::to_string(n - 1)), alpha_path(d, 'd', "1", N)),
            RootPair::make(tm("1", "2"), tm("2", "3"))};
  }
  if (is_e_type(d)) {
    auto tm = [&](const char* b, const char* c) { return minus(th, alpha_path(d, 'e', b, c)); };
    if (n == 6) return {RootPair::make(tm("2", "x"), tm("4", "x"))};
    if (n == 7) return {RootPair::make(tm("x", "1"), tm("4", "1"))};
    return {RootPair::make(tm("2", "7"), tm("x", "7"))};
  }
  throw std::invalid_argument("no closed form for the highest 2-root of " + d.type_name());
}

RootPair explicit_highest(const CanonicalBasis& basis, const std::vector<OrbitTable>& orbits, std::size_t orbit_id) {
  if (orbit_id >= orbits.size()) throw std::invalid_argument("explicit_highest: unknown orbit id");
  for (const auto& p : explicit_highest_all(basis.diagram()))
    if (orbits[orbit_id].contains(p.tworoot())) return p;
  throw std::logic_error("explicit_highest: no closed form lies in the orbit");
}

Int highest_height(const CanonicalBasis& basis, const OrbitTable& orbit) {
  return ht2(basis, highest_tworoot(basis, orbit).tworoot());
}

}  // namespace tworoots
