#include "tworoots/kernels.hpp"

#include <omp.h>

#include <exception>
#include <random>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

namespace tworoots::kernels {

namespace {

// Exceptions must not escape an OpenMP region; keep the first and rethrow after.
class ErrorSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
#pragma omp critical(tworoots_error_slot)
      if (!err_) err_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (err_) std::rethrow_exception(err_);
  }

 private:
  std::exception_ptr err_;
};

std::vector<IntMatrix> times_cartan(const IntMatrix& cartan, const std::vector<IntMatrix>& elems) {
  std::vector<IntMatrix> p;
  p.reserve(elems.size());
  for (const auto& s : elems) p.push_back(cartan * s);
  return p;
}

Int half_trace_product(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.rows();
  __int128 acc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) acc += static_cast<__int128>(x(i, j)) * y(j, i);
  if (acc % 2 != 0) throw std::domain_error("gram: odd trace, element outside the 2-root lattice");
  return checked::narrow(acc / 2);
}

}  // namespace

IntMatrix gram_serial(const IntMatrix& cartan, const std::vector<IntMatrix>& elems) {
  const auto p = times_cartan(cartan, elems);
  const std::size_t m = elems.size();
  IntMatrix g(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) g(r, c) = g(c, r) = half_trace_product(p[r], p[c]);
  return g;
}

IntMatrix gram_parallel(const IntMatrix& cartan, const std::vector<IntMatrix>& elems) {
  const auto p = times_cartan(cartan, elems);
  const long m = static_cast<long>(elems.size());
  IntMatrix g(elems.size(), elems.size());
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 4)
  for (long r = 0; r < m; ++r)
    err.run([&] {
      for (long c = r; c < m; ++c) g(r, c) = g(c, r) = half_trace_product(p[r], p[c]);
    });
  err.rethrow();
  return g;
}

Word random_word(std::size_t n, std::size_t max_len, std::uint64_t seed, std::uint64_t k) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::size_t> len(0, max_len), letter(0, n - 1);
  Word w(len(rng));
  for (auto& x : w) x = letter(rng);
  return w;
}

namespace {

SweepResult sweep_one(const CanonicalBasis& basis, const Word& w) {
  SweepResult r;
  r.words = 1;
  const std::size_t n = basis.diagram().n();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ++r.columns;
    const auto& e = basis[j];
    const Root a = apply_word(basis.cartan(), w, simple_root(n, e.i));
    const Root b = apply_word(basis.cartan(), w, e.beta.root);
    try {
      if (coherence_sign(basis.expand(vee(a, b))) == Sign::Mixed) ++r.violations;
    } catch (const std::domain_error&) {
      ++r.violations;
    }
  }
  return r;
}

}  // namespace

SweepResult coherence_sweep_serial(const CanonicalBasis& basis, std::uint64_t words, std::size_t max_len,
                                   std::uint64_t seed) {
  SweepResult total;
  for (std::uint64_t k = 0; k < words; ++k) {
    const auto r = sweep_one(basis, random_word(basis.diagram().n(), max_len, seed, k));
    total.words += r.words;
    total.columns += r.columns;
    total.violations += r.violations;
  }
  return total;
}

SweepResult coherence_sweep_parallel(const CanonicalBasis& basis, std::uint64_t words, std::size_t max_len,
                                     std::uint64_t seed) {
  std::uint64_t w_total = 0, c_total = 0, v_total = 0;
  const long count = static_cast<long>(words);
  ErrorSlot err;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : w_total, c_total, v_total)
  for (long k = 0; k < count; ++k)
    err.run([&] {
      const auto r = sweep_one(basis, random_word(basis.diagram().n(), max_len, seed, static_cast<std::uint64_t>(k)));
      w_total += r.words;
      c_total += r.columns;
      v_total += r.violations;
    });
  err.rethrow();
  return {w_total, c_total, v_total};
}

namespace {

using Entry = std::int16_t;
using Key = std::vector<Entry>;  // row-major k x k

struct KeyHash {
  std::size_t operator()(const Key& k) const noexcept {
    return std::hash<std::string_view>{}(
        std::string_view(reinterpret_cast<const char*>(k.data()), k.size() * sizeof(Entry)));
  }
};
using KeySet = std::unordered_set<Key, KeyHash>;

struct SparseGen {
  // per column j: (row r, coefficient)
  std::vector<std::vector<std::pair<std::size_t, Int>>> cols;
};

std::vector<SparseGen> sparsify(const std::vector<IntMatrix>& gens) {
  std::vector<SparseGen> out;
  for (const auto& g : gens) {
    if (!g.square() || g.rows() != gens.front().rows()) throw std::invalid_argument("closure: generators of mixed size");
    SparseGen s;
    s.cols.resize(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j)
      for (std::size_t r = 0; r < g.rows(); ++r)
        if (g(r, j) != 0) s.cols[j].emplace_back(r, g(r, j));
    out.push_back(std::move(s));
  }
  return out;
}

Key identity_key(std::size_t k) {
  Key key(k * k, 0);
  for (std::size_t i = 0; i < k; ++i) key[i * k + i] = 1;
  return key;
}

// Right multiplication m * g.
Key times(const Key& m, const SparseGen& g, std::size_t k) {
  Key out(m.size());
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) {
      Int acc = 0;
      for (const auto& [r, c] : g.cols[j]) acc += static_cast<Int>(m[i * k + r]) * c;
      if (acc > INT16_MAX || acc < INT16_MIN) throw std::overflow_error("closure: matrix entry exceeds 16 bits");
      out[i * k + j] = static_cast<Entry>(acc);
    }
  return out;
}

}  // namespace

std::uint64_t closure_size_serial(const std::vector<IntMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) return 1;
  const std::size_t k = gens.front().rows();
  const auto sg = sparsify(gens);
  KeySet seen{identity_key(k)};
  std::vector<Key> frontier{identity_key(k)};
  while (!frontier.empty()) {
    std::vector<Key> next;
    for (const auto& m : frontier)
      for (const auto& g : sg) {
        Key p = times(m, g, k);
        if (seen.insert(p).second) {
          if (seen.size() > cap) throw std::length_error("closure exceeds the configured state cap");
          next.push_back(std::move(p));
        }
      }
    frontier = std::move(next);
  }
  return seen.size();
}

std::uint64_t closure_size_parallel(const std::vector<IntMatrix>& gens, std::uint64_t cap) {
  if (gens.empty()) return 1;
  const std::size_t k = gens.front().rows();
  const auto sg = sparsify(gens);
  KeySet seen{identity_key(k)};
  std::vector<Key> frontier{identity_key(k)};
  while (!frontier.empty()) {
    const std::size_t ng = sg.size();
    std::vector<Key> products(frontier.size() * ng);
    const long total = static_cast<long>(products.size());
    ErrorSlot err;
#pragma omp parallel for schedule(static)
    for (long x = 0; x < total; ++x)
      err.run([&] {
        products[x] = times(frontier[static_cast<std::size_t>(x) / ng], sg[static_cast<std::size_t>(x) % ng], k);
      });
    err.rethrow();
    // Merge in index order so the frontier sequence matches the serial run.
    std::vector<Key> next;
    for (auto& p : products)
      if (seen.insert(p).second) {
        if (seen.size() > cap) throw std::length_error("closure exceeds the configured state cap");
        next.push_back(std::move(p));
      }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace tworoots::kernels
