#include <doctest.h>

#include <random>

#include "cmlab/error.hpp"
#include "cmlab/hyperoct.hpp"
#include "oracles.hpp"

using namespace cmlab;

TEST_SUITE("hyperoct") {
  TEST_CASE("subset rendering and complement") {
    CHECK(Subset::of(6, {2, 5, 6}).to_string() == "{2,5,6}");
    CHECK(Subset(4, 0).to_string() == "{}");
    CHECK(Subset::of(4, {1, 3}).complement() == Subset::of(4, {2, 4}));
    CHECK(Subset::full(5).size() == 5);
    CHECK_THROWS_AS(Subset::of(3, {4}), DimensionError);
    CHECK_THROWS_AS(Subset(3, 0b1000), DimensionError);
  }

  TEST_CASE("signed permutation validation") {
    CHECK_THROWS_AS(SignedPerm(Subset(3, 0), {1, 1, 2}), DomainError);
    CHECK_THROWS_AS(SignedPerm(Subset(3, 0), {1, 2}), DimensionError);
    CHECK_THROWS_AS(SignedPerm(Subset(3, 0), {0, 1, 2}), DomainError);
  }

  TEST_CASE("compose and inverse agree with signed-image arithmetic") {
    std::mt19937 rng(7);
    for (int g = 1; g <= 12; ++g)
      for (int trial = 0; trial < 40; ++trial) {
        auto a = oracle::random_signed_perm(g, rng), b = oracle::random_signed_perm(g, rng);
        SignedPerm A = oracle::to_lib(a), B = oracle::to_lib(b);
        CHECK(oracle::from_lib(A) == a);
        CHECK(oracle::from_lib(compose(A, B)) == oracle::mul(a, b));
        CHECK(compose(A, inverse(A)) == SignedPerm::identity(g));
        CHECK(compose(inverse(A), A) == SignedPerm::identity(g));
      }
  }

  TEST_CASE("group axioms exhaustively for g <= 3") {
    for (int g = 1; g <= 3; ++g) {
      std::vector<oracle::SP> gens = {oracle::from_lib(SignedPerm::flip(g, 1))};
      if (g >= 2) {
        oracle::SP swap = oracle::ident(g);
        std::swap(swap[0], swap[1]);
        oracle::SP cyc(g);
        for (int j = 0; j < g; ++j) cyc[j] = (j + 1) % g + 1;
        gens.push_back(swap);
        gens.push_back(cyc);
      }
      auto all = oracle::closure(gens, g);
      std::size_t expect = std::size_t{1} << g;
      for (int k = 2; k <= g; ++k) expect *= k;
      REQUIRE(all.size() == expect);
      std::vector<SignedPerm> els;
      for (const auto& s : all) els.push_back(oracle::to_lib(s));
      SignedPerm e = SignedPerm::identity(g);
      for (const auto& a : els) {
        CHECK(compose(a, e) == a);
        CHECK(compose(e, a) == a);
        for (const auto& b : els)
          for (const auto& c : els) CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
      }
    }
  }

  TEST_CASE("left action axioms and rho complementation") {
    std::mt19937 rng(11);
    for (int g = 1; g <= 12; ++g)
      for (int trial = 0; trial < 30; ++trial) {
        auto a = oracle::random_signed_perm(g, rng), b = oracle::random_signed_perm(g, rng);
        SignedPerm A = oracle::to_lib(a), B = oracle::to_lib(b);
        Subset I(g, static_cast<Mask>(rng()) & full_mask(g));
        CHECK(act_subset(compose(A, B), I) == act_subset(A, act_subset(B, I)));
        CHECK(act_subset(SignedPerm::identity(g), I) == I);
        CHECK(act_subset(SignedPerm::rho(g), I) == I.complement());
        CHECK(act_subset(A, I.complement()) == act_subset(A, I).complement());
        CHECK(act_subset(A, I) == oracle::subset(oracle::act(a, oracle::bools(I))));
        for (int k = 1; k <= g; ++k) {
          EmbeddingLabel x{k, I.contains(k)};
          EmbeddingLabel y = act_embedding(A, x);
          CHECK(y.index == A.image(k));
          CHECK(act_embedding(A, x.conjugate()) == y.conjugate());
        }
      }
  }

  TEST_CASE("rho is central") {
    std::mt19937 rng(3);
    for (int g = 1; g <= 8; ++g) {
      auto A = oracle::to_lib(oracle::random_signed_perm(g, rng));
      CHECK(compose(A, SignedPerm::rho(g)) == compose(SignedPerm::rho(g), A));
    }
  }
}
