#include <doctest.h>

#include <random>

#include "cmlab/error.hpp"
#include "cmlab/galois.hpp"
#include "oracles.hpp"

using namespace cmlab;

namespace {

std::set<oracle::SP> as_set(const GaloisGroup& G) {
  std::set<oracle::SP> s;
  for (const auto& x : G.elements()) s.insert(oracle::from_lib(x));
  return s;
}

SignedPerm cycle3() { return SignedPerm::permutation({2, 3, 1}); }

}  // namespace

TEST_SUITE("galois") {
  TEST_CASE("full hyperoctahedral orders") {
    std::size_t expect = 1;
    for (int g = 1; g <= 5; ++g) {
      expect *= 2 * g;
      GaloisGroup W = GaloisGroup::full_hyperoctahedral(g);
      CHECK(W.order() == expect);
      CHECK(W.is_weyl());
      CHECK(W.element(W.rho_index()) == SignedPerm::rho(g));
    }
  }

  TEST_CASE("closure matches the brute-force oracle") {
    // e_1 and a 3-cycle: the oracle decides the order
    auto gens = std::vector<SignedPerm>{SignedPerm::flip(3, 1), cycle3()};
    GaloisGroup G = GaloisGroup::from_generators(3, gens);
    std::vector<oracle::SP> og;
    for (const auto& s : gens) og.push_back(oracle::from_lib(s));
    auto ref = oracle::closure(og, 3);
    CHECK(G.order() == ref.size());
    CHECK(G.order() == 24);
    CHECK(as_set(G) == ref);
    CHECK_FALSE(G.is_weyl());

    gens.push_back(SignedPerm::permutation({2, 1, 3}));
    GaloisGroup W = GaloisGroup::from_generators(3, gens);
    CHECK(W.order() == 48);
    CHECK(W.is_weyl());
  }

  TEST_CASE("randomized closure for g <= 12") {
    std::mt19937 rng(5);
    for (int g = 2; g <= 12; ++g) {
      // a random signed g-cycle keeps the image transitive
      std::vector<int> order(g);
      for (int j = 0; j < g; ++j) order[j] = j + 1;
      std::shuffle(order.begin(), order.end(), rng);
      oracle::SP s(g);
      for (int j = 0; j < g; ++j) s[order[j] - 1] = order[(j + 1) % g] * (rng() % 2 ? 1 : -1);
      std::vector<SignedPerm> gens = {oracle::to_lib(s), SignedPerm::rho(g)};
      GaloisGroup G = GaloisGroup::from_generators(g, gens);
      auto ref = oracle::closure({s, oracle::from_lib(SignedPerm::rho(g))}, g);
      CHECK(as_set(G) == ref);
      for (std::size_t i = 0; i < G.order(); ++i) {
        CHECK(G.index_of(G.element(i)) == i);
        CHECK(G.index_of(inverse(G.element(i))).has_value());
        CHECK(G.index_of(compose(G.element(i), G.element((i * 7) % G.order()))).has_value());
      }
    }
  }

  TEST_CASE("cyclic translation groups") {
    std::vector<int> phi = {0, 2, 3, 6, 10, 13, 14, 16, 17};
    GaloisGroup G = GaloisGroup::from_cyclic_translation(18, phi);
    CHECK(G.order() == 18);
    CHECK(G.is_cyclic());
    CHECK(G.rho_index() == 9);
    CHECK(G.embed(9) == SignedPerm::rho(9));
    CHECK(G.label(5) == "[5]");
    for (int s = 0; s < 18; ++s)
      for (int t = 0; t < 18; ++t) CHECK(compose(G.embed(s), G.embed(t)) == G.embed(s + t));
    CHECK_THROWS_AS(GaloisGroup::from_cyclic_translation(18, {0, 9, 1, 2, 3, 4, 5, 6, 7}), DomainError);
    CHECK_THROWS_AS(GaloisGroup::from_cyclic_translation(17, phi), DomainError);
  }

  TEST_CASE("rejections") {
    // even number of sign changes never reaches rho for g = 3
    auto bad = std::vector<SignedPerm>{cycle3(), SignedPerm(Subset::of(3, {1, 2}), {1, 2, 3})};
    try {
      GaloisGroup::from_generators(3, bad);
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()) == "conjugation not in group");
    }
    CHECK_THROWS_WITH_AS(GaloisGroup::from_generators(2, {SignedPerm::rho(2)}),
                         "image of G in S_g is not transitive", DomainError);
    CHECK_THROWS_AS(GaloisGroup::from_generators(6, GaloisGroup::full_hyperoctahedral(6).generators(), 1000),
                    BudgetError);
    CHECK_THROWS_AS(GaloisGroup::from_generators(3, {SignedPerm::rho(4)}), DimensionError);
  }
}
