#include <doctest.h>

#include <random>

#include "cmlab/error.hpp"
#include "cmlab/intlattice.hpp"
#include "oracles.hpp"

using namespace cmlab;

namespace {

IntMatrix random_matrix(std::size_t r, std::size_t c, int lo, int hi, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

// Product of random elementary row operations.
IntMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> k(-3, 3);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = pick(rng), b = pick(rng);
    if (a == b) continue;
    int f = k(rng);
    for (std::size_t c = 0; c < n; ++c) u(a, c) += f * u(b, c);
  }
  return u;
}

std::vector<std::vector<mpq_class>> to_q(const IntMatrix& m) {
  std::vector<std::vector<mpq_class>> q(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = mpq_class(m(i, j));
  return q;
}

void check_hnf_shape(const IntMatrix& h) {
  std::size_t last = 0;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::size_t c = 0;
    while (c < h.cols() && h(r, c) == 0) ++c;
    REQUIRE(c < h.cols());
    if (r > 0) CHECK(c > last);
    last = c;
    CHECK(h(r, c) > 0);
    for (std::size_t above = 0; above < r; ++above) {
      CHECK(h(above, c) >= 0);
      CHECK(h(above, c) < h(r, c));
    }
  }
}

}  // namespace

TEST_SUITE("intlattice") {
  TEST_CASE("HNF shape, idempotence and unimodular invariance") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
      std::size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      IntMatrix m = random_matrix(r, c, -9, 9, rng);
      IntMatrix h = hnf(m);
      check_hnf_shape(h);
      CHECK(hnf(h) == h);
      CHECK(h.rows() == oracle::rational_rank(to_q(m)));
      CHECK(hnf(random_unimodular(r, rng) * m) == h);
    }
  }

  TEST_CASE("kernel basis") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t r = 1 + rng() % 5, c = 1 + rng() % 7;
      IntMatrix m = random_matrix(r, c, -4, 4, rng);
      IntLattice K = kernel_basis(m);
      CHECK(K.rank() == c - oracle::rational_rank(to_q(m)));
      for (const auto& v : K.basis().row_list()) CHECK(is_zero(m * v));
      CHECK(saturate(K) == K);
    }
  }

  TEST_CASE("membership against the rational oracle") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
      IntMatrix m = random_matrix(3, 4, -6, 6, rng);
      IntLattice L = IntLattice::span(m);
      auto rows = L.basis().row_list();
      IntVector v = random_matrix(1, 4, -8, 8, rng).row(0);
      if (trial % 2) {
        // force membership half the time
        v.assign(4, 0);
        for (std::size_t i = 0; i < m.rows(); ++i)
          for (std::size_t j = 0; j < 4; ++j) v[j] += (int(i) - 1) * m(i, j);
      }
      bool ref = oracle::in_integer_span(rows, v);
      auto coeffs = member(v, L);
      CHECK(coeffs.has_value() == ref);
      CHECK(is_zero(residue(v, L)) == ref);
      if (coeffs) {
        IntVector back(4);
        for (std::size_t i = 0; i < rows.size(); ++i)
          for (std::size_t j = 0; j < 4; ++j) back[j] += (*coeffs)[i] * rows[i][j];
        CHECK(back == v);
      }
    }
  }

  TEST_CASE("saturation and sums") {
    IntLattice L = IntLattice::span(IntMatrix::from_rows({{2, 0, 0}, {0, 3, 3}}));
    IntLattice S = saturate(L);
    CHECK(lattice_equal(S, IntLattice::span(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 1}}))));
    IntLattice sum = lattice_sum(L, IntLattice::span(IntMatrix::from_rows({{1, 0, 0}})));
    CHECK(lattice_equal(sum, IntLattice::span(IntMatrix::from_rows({{1, 0, 0}, {0, 3, 3}}))));
    CHECK_THROWS_AS(lattice_equal(L, IntLattice(2)), DimensionError);
  }

  TEST_CASE("elementary divisors") {
    CHECK(elementary_divisors(IntMatrix::from_rows({{2, 4}, {6, 8}})) == std::vector<BigInt>{2, 4});
    CHECK(elementary_divisors(IntMatrix::from_rows({{2, 0}, {0, 3}})) == std::vector<BigInt>{1, 6});
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m = random_matrix(3, 3, -5, 5, rng);
      auto d = elementary_divisors(m);
      for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] % d[i - 1] == 0);
      CHECK(d.size() == oracle::rational_rank(to_q(m)));
    }
  }

  TEST_CASE("big entries") {
    BigInt big("123456789012345678901234567890");
    IntMatrix m(2, 2);
    m(0, 0) = big;
    m(0, 1) = big + 1;
    m(1, 0) = big * 2;
    m(1, 1) = big * 2 + 3;
    IntMatrix h = hnf(m);
    check_hnf_shape(h);
    // det = big, so the lattice has index big in Z^2
    CHECK(h(0, 0) * h(1, 1) == big);
  }

  TEST_CASE("combination solver names generators") {
    std::vector<IntVector> gens = {{2, 0, 0}, {0, 1, 1}, {2, 1, 1}, {0, 0, 5}};
    CombinationSolver s(gens, 3);
    IntVector target = {4, 3, 8};
    auto sol = s.solve(target);
    REQUIRE(sol);
    IntVector back(3);
    for (const auto& [k, c] : *sol)
      for (std::size_t j = 0; j < 3; ++j) back[j] += c * gens[k][j];
    CHECK(back == target);
    CHECK_FALSE(s.solve({1, 0, 0}).has_value());
  }
}
