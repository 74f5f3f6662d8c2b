#include "verify_suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tworoots/forms.hpp"
#include "tworoots/kernels.hpp"
#include "tworoots/orbits.hpp"
#include "tworoots/skein.hpp"

namespace tworoots::cli {

namespace {

using Outcome = std::pair<bool, std::string>;

Diagram type_a(int n) { return Diagram::path(n); }
Diagram type_d(int n) { return Diagram::y(1, 1, n - 3); }
Diagram type_e(int n) { return Diagram::y(1, 2, n - 4); }

CheckResult timed(const std::string& id, const std::string& name, const std::function<Outcome()>& fn) {
  CheckResult r;
  r.id = id;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    std::tie(r.pass, r.detail) = fn();
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Vertex lbl(const Diagram& d, char scheme, const std::string& s) { return from_classical_label(d, scheme, s); }

Root sroot(const Diagram& d, Vertex v) { return simple_root(d.n(), v); }

std::size_t binom2(std::size_t m) { return m * (m - 1) / 2; }

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream o;
  for (std::size_t k = 0; k < v.size(); ++k) o << (k ? "," : "") << v[k];
  return o.str();
}

// ---- AC1 / AC9 ----

Outcome basis_sizes() {
  std::size_t checked = 0;
  for (int a = 1; a <= 4; ++a)
    for (int b = a; b <= 4; ++b)
      for (int c = b; c <= 4; ++c) {
        const auto basis = CanonicalBasis::build(Diagram::y(a, b, c));
        const std::size_t n = a + b + c + 1;
        if (basis.size() != binom2(n + 1) - 1)
          return {false, "Y(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ") has " +
                             std::to_string(basis.size())};
        for (const auto& e : basis.elements())
          if (m_functional(basis.cartan(), e.s) != 0) return {false, "element outside M"};
        ++checked;
      }
  return {true, std::to_string(checked) + " types"};
}

Outcome d4_explicit() {
  const Diagram d = type_d(4);
  const auto basis = CanonicalBasis::build(d);
  auto v = [&](const char* s) { return lbl(d, 'd', s); };
  auto a = [&](const char* s) { return sroot(d, v(s)); };
  auto th = [&](const char* s) { return theta(d, v(s)); };
  auto et = [&](const char* s, const char* t) { return eta(d, v(s), v(t)); };
  const std::vector<IntMatrix> expected{vee(a("1"), th("1")),       vee(a("3"), th("3")),       vee(a("4"), th("4")),
                                        vee(a("2"), et("1", "3")), vee(a("2"), et("1", "4")), vee(a("2"), et("3", "4")),
                                        vee(a("1"), a("3")),       vee(a("1"), a("4")),       vee(a("3"), a("4"))};
  std::set<std::vector<Int>> want, got;
  for (const auto& s : expected) want.insert(s.data());
  for (const auto& e : basis.elements()) got.insert(e.s.data());
  return {want == got && want.size() == 9, std::to_string(got.size()) + " elements"};
}

std::multiset<std::vector<Arc>> arc_sets(const Skein& s) {
  std::multiset<std::vector<Arc>> out;
  for (const auto& t : s.terms) out.insert(t.diagram.arcs);
  return out;
}

Outcome skein_a3() {
  const Diagram d = type_a(3);
  const auto basis = CanonicalBasis::build(d);
  const IntMatrix lhs = vee(root_from_epsilon(d, {false, 1, 3}), root_from_epsilon(d, {false, 2, 4}));
  IntVector want(basis.size(), 0);
  want[basis.index_of(vee(sroot(d, 0), sroot(d, 2))).value()] = 1;
  want[basis.index_of(vee(sroot(d, 1), eta(d, 0, 2))).value()] = 1;
  const auto sk = skein_expand(basis, lhs);
  const std::multiset<std::vector<Arc>> arcs{{{1, 2, false}, {3, 4, false}}, {{1, 4, false}, {2, 3, false}}};
  const bool ok = basis.expand(lhs) == want && arc_sets(sk) == arcs &&
                  sk.lhs.arcs == std::vector<Arc>{{1, 3, false}, {2, 4, false}};
  return {ok, std::to_string(sk.terms.size()) + " terms"};
}

Outcome skein_d4() {
  const Diagram d = type_d(4);
  const auto basis = CanonicalBasis::build(d);
  auto v = [&](const char* s) { return lbl(d, 'd', s); };
  const IntMatrix lhs = vee(root_from_epsilon(d, {true, 1, 4}), root_from_epsilon(d, {true, 2, 3}));
  IntVector want(basis.size(), 0);
  want[basis.index_of(vee(sroot(d, v("1")), sroot(d, v("3")))).value()] = 1;
  want[basis.index_of(vee(sroot(d, v("2")), eta(d, v("1"), v("3")))).value()] = 1;
  want[basis.index_of(vee(sroot(d, v("4")), theta(d, v("4")))).value()] = 1;
  const auto sk = skein_expand(basis, lhs);
  const std::multiset<std::vector<Arc>> arcs{
      {{1, 2, false}, {3, 4, false}}, {{1, 4, false}, {2, 3, false}}, {{1, 2, true}, {3, 4, true}}};
  return {basis.expand(lhs) == want && arc_sets(sk) == arcs, std::to_string(sk.terms.size()) + " terms"};
}

// ---- AC2 / AC5 ----

std::size_t orthogonal_pairs(const Diagram& d) {
  const auto roots = positive_roots(d);
  const IntMatrix a = d.cartan();
  std::size_t c = 0;
  for (std::size_t x = 0; x < roots.size(); ++x)
    for (std::size_t y = x + 1; y < roots.size(); ++y)
      if (bform(a, roots[x], roots[y]) == 0) ++c;
  return c;
}

Outcome orbit_counts() {
  std::ostringstream out;
  bool ok = true;
  auto check = [&](const Diagram& d, std::size_t expect) {
    const auto basis = CanonicalBasis::build(d);
    const auto orbits = enumerate_orbits(basis);
    std::size_t total = 0;
    for (const auto& o : orbits) total += o.size();
    const std::size_t brute = orthogonal_pairs(d);
    if (orbits.size() != expect || total != brute) ok = false;
    out << d.type_name() << ":" << orbits.size() << "/" << total << " ";
  };
  check(type_d(4), 3);
  for (int n = 5; n <= 8; ++n) check(type_d(n), 2);
  for (int n = 4; n <= 8; ++n) check(type_a(n), 1);
  for (int n = 6; n <= 8; ++n) check(type_e(n), 1);
  return {ok, out.str()};
}

Outcome d_small_orbit() {
  bool ok = true;
  std::ostringstream out;
  for (int n = 5; n <= 8; ++n) {
    const Diagram d = type_d(n);
    const auto basis = CanonicalBasis::build(d);
    const auto orbits = enumerate_orbits(basis);
    std::vector<RootPair> want;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(n); ++i)
      for (std::size_t j = i + 1; j <= static_cast<std::size_t>(n); ++j)
        want.push_back(RootPair::make(root_from_epsilon(d, {false, i, j}), root_from_epsilon(d, {true, i, j})));
    std::sort(want.begin(), want.end());
    bool found = false;
    for (const auto& o : orbits) {
      auto m = o.members;
      std::sort(m.begin(), m.end());
      if (m == want && o.basis_members.size() == static_cast<std::size_t>(n - 1)) found = true;
    }
    ok = ok && found && want.size() == binom2(n);
    out << "D" << n << (found ? " ok " : " missing ");
  }
  return {ok, out.str()};
}

Outcome cover_refinement() {
  std::size_t covers = 0;
  for (const Diagram& d : {type_d(4), type_d(5), type_d(6), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    for (const auto& o : enumerate_orbits(basis))
      for (const auto& rho : o.members)
        for (const auto& [i, up] : monoidal_covers(basis.cartan(), rho)) {
          ++covers;
          if (up == rho || !leq2(basis, rho.tworoot(), up.tworoot()))
            return {false, d.type_name() + " cover via s" + std::to_string(i) + " is not <=2"};
        }
  }
  return {true, std::to_string(covers) + " covers"};
}

Outcome d5_strictness() {
  const Diagram d = type_d(5);
  const auto basis = CanonicalBasis::build(d);
  auto v = [&](const char* s) { return lbl(d, 'd', s); };
  const RootPair rho = RootPair::make(sroot(d, v("3")), theta(d, v("1")));
  const IntMatrix t = rho.tworoot();
  IntVector want(basis.size(), 0);
  want[basis.index_of(vee(sroot(d, v("3")), sroot(d, v("1")))).value()] = 1;
  want[basis.index_of(vee(sroot(d, v("3")), eta(d, v("2"), v("4")))).value()] = 1;
  want[basis.index_of(vee(sroot(d, v("3")), eta(d, v("2"), v("5")))).value()] = 1;
  const bool expansion = basis.expand(t) == want;
  const bool minimal = monoidal_down_covers(basis.cartan(), rho).empty();
  const bool decomposable = !basis.index_of(t).has_value();
  return {expansion && minimal && decomposable && ht2(basis, t) == 3,
          std::string("expansion ") + (expansion ? "ok" : "wrong") + ", m-minimal " + (minimal ? "yes" : "no")};
}

// ---- AC3 ----

Outcome exhaustive_coherence() {
  std::size_t checked = 0;
  for (const Diagram& d : {type_d(4), type_d(5), type_d(6), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    for (const auto& o : enumerate_orbits(basis))
      for (const auto& rho : o.members) {
        const IntVector c = basis.expand(rho.tworoot());
        if (coherence_sign(c) != Sign::Positive) return {false, d.type_name() + " has a non-positive expansion"};
        ++checked;
      }
  }
  return {true, std::to_string(checked) + " positive 2-roots"};
}

Outcome random_coherence(const VerifyOptions& opt) {
  std::ostringstream out;
  bool ok = true;
  for (const Diagram& d : {type_e(8), Diagram::y(2, 2, 2), Diagram::y(3, 3, 3), Diagram::y(1, 2, 6)}) {
    const auto basis = CanonicalBasis::build(d);
    const auto r = kernels::coherence_sweep_parallel(basis, opt.words, 30, opt.seed);
    ok = ok && r.violations == 0 && r.words == opt.words;
    out << d.type_name() << ":" << r.violations << "/" << r.columns << " ";
  }
  return {ok, out.str()};
}

// ---- AC4 ----

Int expected_height(const Diagram& d, const OrbitTable& o) {
  const Int n = static_cast<Int>(d.n());
  if (!d.is_y()) return (n - 2) * (n - 2) + 1;
  if (d.a() == 1 && d.b() == 1) {
    if (o.basis_members.size() == static_cast<std::size_t>(n - 1) && o.size() == binom2(n)) return n - 1;
    return 4 * (n - 4) * (n - 3) + 3;
  }
  if (n == 6) return 28;
  if (n == 7) return 85;
  return 295;
}

Outcome highest_closed_forms(const VerifyOptions& opt) {
  std::vector<Diagram> types;
  for (int n = 4; n <= 6; ++n) types.push_back(type_a(n));
  for (int n = 4; n <= 7; ++n) types.push_back(type_d(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_e(n));
  std::mt19937_64 rng(opt.seed);
  std::ostringstream out;
  for (const auto& d : types) {
    const auto basis = CanonicalBasis::build(d);
    const auto orbits = enumerate_orbits(basis);
    const auto closed = explicit_highest_all(d);
    std::set<RootPair> closed_set(closed.begin(), closed.end());
    std::set<RootPair> climbed;
    for (const auto& o : orbits) {
      const RootPair h = highest_tworoot(basis, o);
      climbed.insert(h);
      if (!satisfies_highest_criterion(basis.cartan(), h)) return {false, d.type_name() + ": criterion fails"};
      if (ht2(basis, h.tworoot()) != expected_height(d, o) || o.height != expected_height(d, o))
        return {false, d.type_name() + ": height " + std::to_string(ht2(basis, h.tworoot()))};
      for (int k = 0; k < 5; ++k) {
        const std::size_t pick = o.basis_members[rng() % o.basis_members.size()];
        const auto [x, y] = components(basis[pick].s);
        if (climb(basis, RootPair::make(x, y), &rng) != h) return {false, d.type_name() + ": climbs disagree"};
      }
      if (explicit_highest(basis, orbits, o.id) != h) return {false, d.type_name() + ": closed form differs"};
    }
    if (climbed != closed_set) return {false, d.type_name() + ": closed forms differ"};
    out << d.type_name() << " ";
  }
  return {true, out.str()};
}

Outcome domination() {
  std::size_t checked = 0;
  std::vector<Diagram> types;
  for (int n = 4; n <= 6; ++n) types.push_back(type_a(n));
  for (int n = 4; n <= 7; ++n) types.push_back(type_d(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_e(n));
  for (const auto& d : types) {
    const auto basis = CanonicalBasis::build(d);
    for (const auto& o : enumerate_orbits(basis)) {
      const IntMatrix h = o.highest.tworoot();
      for (const auto& rho : o.members) {
        if (!leq2(basis, rho.tworoot(), h)) return {false, d.type_name() + ": member not dominated"};
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " members"};
}

Outcome e8_unit_coefficient() {
  const Diagram d = type_e(8);
  const auto basis = CanonicalBasis::build(d);
  const auto orbits = enumerate_orbits(basis);
  const IntVector c = basis.expand(orbits.at(0).highest.tworoot());
  std::vector<std::size_t> ones;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] == 1) ones.push_back(k);
  const Vertex v7 = lbl(d, 'e', "7");
  const auto target = basis.index_of(vee(sroot(d, v7), theta(d, v7)));
  const bool ok = ones.size() == 1 && target && ones[0] == *target;
  return {ok, "coefficient-1 positions: " + join(ones)};
}

// ---- AC6 / AC10 ----

Outcome bprime_values() {
  for (const Diagram& d : {type_a(4), type_d(4), type_d(5), type_e(6), type_e(8), Diagram::y(2, 2, 2)}) {
    const auto basis = CanonicalBasis::build(d);
    for (const auto& e : basis.elements())
      if (bprime(basis.cartan(), e.s, e.s) != 4) return {false, d.type_name() + ": diagonal value is not 4"};
  }
  const Diagram a4 = type_a(4);
  const Rational cross = bprime(a4.cartan(), vee(sroot(a4, 0), sroot(a4, 2)), vee(sroot(a4, 1), sroot(a4, 3)));
  return {cross == 1, "A4 cross value " + cross.get_str()};
}

Outcome gram_parity() {
  const auto b3 = CanonicalBasis::build(type_a(3));
  const auto b4 = CanonicalBasis::build(type_a(4));
  auto all = [](const CanonicalBasis& b) {
    std::vector<std::size_t> idx(b.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    return basis_matrices(b, idx);
  };
  const bool a3 = gram(b3.cartan(), all(b3), 2).is_zero();
  const bool a4 = !gram(b4.cartan(), all(b4), 2).is_zero();
  return {a3 && a4, std::string("A3 ") + (a3 ? "even" : "odd") + ", A4 " + (a4 ? "odd" : "even")};
}

Outcome orbit_radicals() {
  std::vector<Diagram> types;
  for (int n = 3; n <= 8; ++n) types.push_back(type_a(n));
  for (int n = 4; n <= 8; ++n) types.push_back(type_d(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_e(n));
  for (const auto& d : types) {
    const auto dec = decompose_s2v(CanonicalBasis::build(d));
    for (std::size_t r : dec.radical_dims)
      if (r != 0) return {false, d.type_name() + ": radical " + std::to_string(r)};
  }
  return {true, std::to_string(types.size()) + " types"};
}

Outcome affine_radical() {
  const auto w = affine_radical_witness(CanonicalBasis::build(Diagram::y(2, 2, 2)));
  const bool ok = w.radical_dim == 7 && w.witness_rank == 7 && w.witnesses_in_radical && w.delta_delta_in_span;
  return {ok, "radical " + std::to_string(w.radical_dim) + ", witness rank " + std::to_string(w.witness_rank)};
}

Outcome virasoro_checks() {
  std::vector<Diagram> types{type_a(4), type_a(6)};
  for (int n = 4; n <= 8; ++n) types.push_back(type_d(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_e(n));
  types.push_back(Diagram::y(1, 2, 6));
  for (const auto& d : types) {
    const IntMatrix a = d.cartan();
    const QMatrix w = virasoro(d);
    if (btilde(a, w, w) != static_cast<long>(d.n())) return {false, d.type_name() + ": B~(w,w) != n"};
    for (Vertex i = 0; i < d.n(); ++i)
      if (!(reflect_tworoot_simple(a, i, w) == w)) return {false, d.type_name() + ": not fixed"};
    if (m_functional(a, w) == 0) return {false, d.type_name() + ": omega lies in M"};
  }
  return {true, std::to_string(types.size()) + " types"};
}

Outcome dimension_bookkeeping() {
  const std::vector<std::pair<Diagram, std::vector<std::size_t>>> cases{
      {type_d(4), {3, 3, 3}}, {type_d(5), {4, 10}}, {type_e(6), {20}}};
  std::ostringstream out;
  bool ok = true;
  for (const auto& [d, dims] : cases) {
    const auto dec = decompose_s2v(CanonicalBasis::build(d));
    std::size_t sum = dec.omega_dim;
    for (std::size_t x : dec.dims) sum += x;
    auto got = dec.dims, want = dims;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ok = ok && got == want && dec.omega_dim == 1 && sum == binom2(d.n() + 1) && dec.dim_s2v == sum;
    out << d.type_name() << ": 1+" << join(dec.dims) << "=" << sum << " ";
  }
  return {ok, out.str()};
}

Outcome norm2_witnesses() {
  std::ostringstream out;
  bool ok = true;
  for (const auto& [a, b, c] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {1, 3, 4}, {1, 2, 6}}) {
    const auto w = norm2_witness(a, b, c);
    const bool good = w.norm == 2 && (w.sign == Sign::Positive || w.sign == Sign::Negative);
    ok = ok && good;
    out << "Y(" << a << "," << b << "," << c << "):" << w.norm.get_str() << "/" << to_string(w.sign) << " ";
  }
  return {ok, out.str()};
}

// ---- AC7 ----

Outcome kernel_orders(const VerifyOptions& opt) {
  struct Case {
    Diagram d;
    std::map<std::size_t, std::uint64_t> by_size;  // orbit size -> kernel order
  };
  const std::vector<Case> cases{{type_d(4), {{6, 8}}},
                                {type_d(5), {{10, 16}, {60, 1}}},
                                {type_d(6), {{180, 2}, {15, 32}}},
                                {type_e(6), {{270, 1}}}};
  std::ostringstream out;
  bool ok = true;
  std::size_t run = 0;
  for (const auto& c : cases) {
    const std::uint64_t order = weyl_group_order(c.d);
    if (order > opt.max_order) {
      out << c.d.type_name() << " skipped ";
      continue;
    }
    const auto basis = CanonicalBasis::build(c.d);
    for (const auto& o : enumerate_orbits(basis)) {
      const auto want = c.by_size.find(o.size());
      if (want == c.by_size.end()) continue;
      const std::uint64_t k = action_kernel_order(basis, o, order);
      ok = ok && k == want->second;
      out << c.d.type_name() << "[" << o.size() << "]:" << k << " ";
      ++run;
    }
  }
  return {ok && run > 0, out.str()};
}

// ---- AC8 ----

Outcome lemma_operator_identity() {
  std::size_t checked = 0;
  for (const Diagram& d : {type_d(5), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    const IntMatrix a = basis.cartan();
    for (const auto& o : enumerate_orbits(basis))
      for (const auto& rho : o.members) {
        const IntMatrix t = rho.tworoot();
        for (const auto& e : basis.elements()) {
          const Rational f = bprime(a, t, e.s);
          if (f.get_den() != 1) return {false, "non-integral B'"};
          if (c_pair_apply(a, rho.first, rho.second, e.s) != static_cast<Int>(f.get_num().get_si()) * t)
            return {false, d.type_name() + ": operator identity fails"};
          ++checked;
        }
      }
  }
  return {true, std::to_string(checked) + " cases"};
}

Root reflection_vector(const IntMatrix& a, const Root& alpha, const Root& beta, const Root& gamma, Int& x, Int& y) {
  x = bform(a, alpha, gamma);
  y = bform(a, beta, gamma);
  Root v(alpha.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x * y * gamma[k] - x * beta[k] - y * alpha[k];
  return v;
}

Outcome reflection_formula() {
  std::size_t checked = 0;
  for (const Diagram& d : {type_d(5), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    const IntMatrix a = basis.cartan();
    const auto roots = positive_roots(d);
    for (const auto& o : enumerate_orbits(basis))
      for (const auto& rho : o.members)
        for (const auto& g : roots) {
          Int x, y;
          const Root v = reflection_vector(a, rho.first, rho.second, g, x, y);
          if (reflect_tworoot(a, g, rho.tworoot()) != rho.tworoot() + vee(g, v))
            return {false, d.type_name() + ": formula differs from conjugation"};
          ++checked;
        }
  }
  return {true, std::to_string(checked) + " cases"};
}

Outcome real_root_dichotomy() {
  std::size_t checked = 0;
  for (const Diagram& d : {type_d(5), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    const IntMatrix a = basis.cartan();
    for (const auto& o : enumerate_orbits(basis))
      for (const auto& rho : o.members)
        for (Vertex i = 0; i < d.n(); ++i) {
          Int x, y;
          const Root v = reflection_vector(a, rho.first, rho.second, sroot(d, i), x, y);
          const bool real = norm(a, v) == 2;
          const bool unit = x == 1 || x == -1 || y == 1 || y == -1;
          if (real != unit) return {false, d.type_name() + ": dichotomy fails"};
          ++checked;
        }
  }
  return {true, std::to_string(checked) + " cases"};
}

Outcome basis_trichotomy() {
  std::size_t checked = 0;
  std::vector<Diagram> types;
  for (int n = 4; n <= 8; ++n) types.push_back(type_d(n));
  for (int n = 6; n <= 8; ++n) types.push_back(type_e(n));
  for (const auto& d : types) {
    const auto basis = CanonicalBasis::build(d);
    const IntMatrix a = basis.cartan();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto& e = basis[k];
      for (Vertex g = 0; g < d.n(); ++g) {
        const Root gamma = sroot(d, g);
        if (g == e.i || e.beta.root == gamma) continue;
        const Int x = bform(a, sroot(d, e.i), gamma), y = bform(a, e.beta.root, gamma);
        const bool cases = (x == 0 && y == 0) || x == -1 || (x == 0 && y == -1);
        if (!cases || y < -1 || y > 1) return {false, d.type_name() + ": " + basis.label(k)};
        simple_action_on_basis(basis, g, k);
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " cases"};
}

Outcome star_round_trips() {
  std::size_t checked = 0;
  for (const Diagram& d : {type_d(5), type_e(6)}) {
    const auto basis = CanonicalBasis::build(d);
    for (Vertex i = 0; i < d.n(); ++i)
      for (Vertex j : d.neighbors(i)) {
        const auto fwd = star_bijection(basis, i, j);
        const auto back = star_bijection(basis, j, i);
        std::map<std::size_t, std::size_t> f(fwd.begin(), fwd.end()), g(back.begin(), back.end());
        const auto ri = basis.star_set(i), rj = basis.star_set(j);
        if (ri.size() != d.n() - 1 || rj.size() != d.n() - 1 || f.size() != ri.size())
          return {false, d.type_name() + ": star set sizes"};
        std::set<std::size_t> image;
        for (std::size_t s : ri) {
          const auto it = f.find(s);
          if (it == f.end() || g.at(it->second) != s) return {false, d.type_name() + ": round trip fails"};
          image.insert(it->second);
        }
        if (image != std::set<std::size_t>(rj.begin(), rj.end())) return {false, d.type_name() + ": not onto"};
        ++checked;
      }
  }
  return {true, std::to_string(checked) + " ordered pairs"};
}

}  // namespace

std::uint64_t weyl_group_order(const Diagram& d) {
  auto fact = [](std::uint64_t m) {
    std::uint64_t f = 1;
    for (std::uint64_t k = 2; k <= m; ++k) f *= k;
    return f;
  };
  const std::uint64_t n = d.n();
  if (!d.is_y()) return fact(n + 1);
  if (d.a() == 1 && d.b() == 1) return (std::uint64_t{1} << (n - 1)) * fact(n);
  if (d.a() == 1 && d.b() == 2) {
    if (n == 6) return 51840;
    if (n == 7) return 2903040;
    if (n == 8) return 696729600;
  }
  return 0;
}

std::vector<std::string> suite_names() { return {"basis", "orbits", "coherence", "highest", "forms", "kernels", "all"}; }

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  const bool all = suite == "all";
  if (all || suite == "basis") {
    out.push_back(timed("AC1", "basis sizes for arms up to 4", basis_sizes));
    out.push_back(timed("AC1", "D4 basis equals the explicit list", d4_explicit));
    out.push_back(timed("AC9", "A3 skein expansion", skein_a3));
    out.push_back(timed("AC9", "D4 skein expansion", skein_d4));
  }
  if (all || suite == "orbits") {
    out.push_back(timed("AC2", "orbit counts and orthogonal pairs", orbit_counts));
    out.push_back(timed("AC2", "D small orbit", d_small_orbit));
    out.push_back(timed("AC5", "monoidal covers refine <=2", cover_refinement));
    out.push_back(timed("AC5", "D5 strictness witness", d5_strictness));
  }
  if (all || suite == "coherence") {
    out.push_back(timed("AC3", "exhaustive expansions", exhaustive_coherence));
    out.push_back(timed("AC3", "random word matrices", [&] { return random_coherence(opt); }));
    out.push_back(timed("AC8", "operator identity", lemma_operator_identity));
    out.push_back(timed("AC8", "reflection formula", reflection_formula));
    out.push_back(timed("AC8", "real root dichotomy", real_root_dichotomy));
    out.push_back(timed("AC8", "basis trichotomy", basis_trichotomy));
    out.push_back(timed("AC8", "star bijection round trips", star_round_trips));
  }
  if (all || suite == "highest") {
    out.push_back(timed("AC4", "climbs match closed forms", [&] { return highest_closed_forms(opt); }));
    out.push_back(timed("AC4", "orbit-wide domination", domination));
    out.push_back(timed("AC4", "E8 unique coefficient 1", e8_unit_coefficient));
  }
  if (all || suite == "forms") {
    out.push_back(timed("AC6", "B' values", bprime_values));
    out.push_back(timed("AC6", "Gram parity", gram_parity));
    out.push_back(timed("AC6", "orbit radicals vanish", orbit_radicals));
    out.push_back(timed("AC6", "affine radical", affine_radical));
    out.push_back(timed("AC6", "Virasoro element", virasoro_checks));
    out.push_back(timed("AC6", "dimension bookkeeping", dimension_bookkeeping));
    out.push_back(timed("AC10", "norm 2 witnesses", norm2_witnesses));
  }
  if (all || suite == "kernels") out.push_back(timed("AC7", "kernel orders", [&] { return kernel_orders(opt); }));
  if (out.empty()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace tworoots::cli
