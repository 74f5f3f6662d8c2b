#include <doctest.h>

#include "bridge.hpp"
#include "tworoots/forms.hpp"

using namespace tworoots;

TEST_SUITE("forms") {
  TEST_CASE("B' against the trace oracle") {
    const auto d = Diagram::y(1, 2, 2);
    const auto basis = CanonicalBasis::build(d);
    const auto a = oracle::y_cartan(1, 2, 2);
    for (std::size_t x = 0; x < basis.size(); x += 3)
      for (std::size_t y = 0; y < basis.size(); ++y) {
        const auto q = oracle::bprime(a, bridge::mat(basis[x].s), bridge::mat(basis[y].s));
        std::ostringstream s;
        s << q;
        CHECK(bprime(basis.cartan(), basis[x].s, basis[y].s) == Rational(s.str()));
        CHECK(btilde(basis.cartan(), to_rational(basis[x].s), to_rational(basis[y].s)) ==
              2 * bprime(basis.cartan(), basis[x].s, basis[y].s));
      }
  }

  TEST_CASE("B' is invariant") {
    const auto basis = CanonicalBasis::build(Diagram::y(2, 2, 3));
    const auto c = basis.cartan();
    for (Vertex g = 0; g < basis.diagram().n(); ++g)
      for (std::size_t x = 0; x < basis.size(); x += 4)
        for (std::size_t y = 0; y < basis.size(); y += 3)
          CHECK(bprime(c, reflect_tworoot_simple(c, g, basis[x].s), reflect_tworoot_simple(c, g, basis[y].s)) ==
                bprime(c, basis[x].s, basis[y].s));
  }

  TEST_CASE("gram and radicals") {
    const auto basis = CanonicalBasis::build(Diagram::y(1, 1, 1));
    std::vector<std::size_t> all(basis.size());
    std::iota(all.begin(), all.end(), 0);
    const auto g = gram(basis.cartan(), basis_matrices(basis, all));
    CHECK(g.is_symmetric());
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(g(k, k) == 4);
    CHECK(radical(g).empty());
    const auto g2 = gram(basis.cartan(), basis_matrices(basis, all), 2);
    CHECK(radical_mod_p(g2, 2).size() == basis.size() - linalg::rank_mod_p(g2, 2));
  }

  TEST_CASE("affine radical") {
    const auto w = affine_radical_witness(CanonicalBasis::build(Diagram::y(1, 3, 3)));
    CHECK(w.radical_dim == 8);
    CHECK(w.witness_rank == 8);
    CHECK(w.witnesses_in_radical);
    CHECK(w.delta_delta_in_span);
    CHECK_THROWS(affine_radical_witness(CanonicalBasis::build(Diagram::y(1, 2, 4))));
  }

  TEST_CASE("decomposition") {
    const auto d = decompose_s2v(CanonicalBasis::build(Diagram::y(1, 2, 6)));
    CHECK(d.dims == std::vector<std::size_t>{54});
    CHECK(d.dim_s2v == 55);
    CHECK_THROWS(decompose_s2v(CanonicalBasis::build(Diagram::y(2, 2, 2))));
  }

  TEST_CASE("norm 2 witness") {
    for (auto [a, b, c] : std::vector<std::tuple<int, int, int>>{{2, 2, 3}, {1, 3, 4}, {1, 2, 6}}) {
      const auto basis = CanonicalBasis::build(Diagram::y(a, b, c));
      const auto leaf_b = static_cast<Vertex>(a + b);
      for (auto alpha : {std::optional<Vertex>{}, std::optional<Vertex>{leaf_b}}) {
        const auto w = norm2_witness(a, b, c, alpha);
        CHECK(w.norm == 2);
        CHECK(w.sign == Sign::Positive);
        CHECK(basis.combine(w.coords) == w.x);
      }
    }
  }

  TEST_CASE("bounded norm search") {
    const auto basis = CanonicalBasis::build(Diagram::y(1, 1, 1));
    const auto found = search_norm(basis, 4, 1);
    CHECK(found.size() == basis.size());
  }
}
