#pragma once

// Brute-force reference implementations.  They share no code with the
// library beyond the value types, and favour obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "cmlab/hyperoct.hpp"

namespace oracle {

// Signed permutation as signed images: s[j-1] = +-beta(j), negative when
// phi_j lands on a conjugate.
using SP = std::vector<int>;

inline SP from_lib(const cmlab::SignedPerm& t) {
  SP s(t.g());
  for (int j = 1; j <= t.g(); ++j) {
    int b = t.image(j);
    s[j - 1] = t.flips().contains(b) ? -b : b;
  }
  return s;
}

inline cmlab::SignedPerm to_lib(const SP& s) {
  int g = static_cast<int>(s.size());
  std::vector<int> perm(g);
  std::vector<int> flips;
  for (int j = 0; j < g; ++j) {
    perm[j] = std::abs(s[j]);
    if (s[j] < 0) flips.push_back(std::abs(s[j]));
  }
  return {cmlab::Subset::from_elements(g, flips), perm};
}

// (a b)(j) = a(b(j)) with signs multiplying
inline SP mul(const SP& a, const SP& b) {
  SP c(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    int x = b[j];
    int y = a[std::abs(x) - 1];
    c[j] = x < 0 ? -y : y;
  }
  return c;
}

inline SP ident(int g) {
  SP s(g);
  for (int j = 0; j < g; ++j) s[j] = j + 1;
  return s;
}

// Closure by repeated pairwise products until nothing new appears.
inline std::set<SP> closure(const std::vector<SP>& gens, int g) {
  std::set<SP> G = {ident(g)};
  for (const auto& s : gens) G.insert(s);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<SP> cur(G.begin(), G.end());
    for (const auto& a : cur)
      for (const auto& b : cur)
        if (G.insert(mul(a, b)).second) grew = true;
  }
  return G;
}

// theta.I: the CM type with phibar_k for k in I, pushed through theta.
inline std::vector<bool> act(const SP& s, const std::vector<bool>& I) {
  std::vector<bool> J(I.size(), false);
  for (std::size_t k = 0; k < I.size(); ++k) {
    int x = s[k];
    J[std::abs(x) - 1] = I[k] != (x < 0);
  }
  return J;
}

inline std::vector<bool> bools(const cmlab::Subset& I) {
  std::vector<bool> v(I.g);
  for (int j = 1; j <= I.g; ++j) v[j - 1] = I.contains(j);
  return v;
}

inline cmlab::Subset subset(const std::vector<bool>& v) {
  std::vector<int> e;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) e.push_back(static_cast<int>(j) + 1);
  return cmlab::Subset::from_elements(static_cast<int>(v.size()), e);
}

// All k-subsets of {0..N-1} satisfying pred, in lexicographic order.
template <class Pred>
std::vector<std::vector<int>> combinations(int N, int k, Pred pred) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  if (k > N) return out;
  while (true) {
    if (pred(c)) out.push_back(c);
    int i = k - 1;
    while (i >= 0 && c[i] == N - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

// Rank over Q by fraction-exact Gaussian elimination.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t rank = 0;
  if (m.empty()) return 0;
  std::size_t cols = m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[rank][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Is v an integer combination of the linearly independent rows?  Solves over
// Q, then checks integrality.
inline bool in_integer_span(const std::vector<std::vector<mpz_class>>& rows, const std::vector<mpz_class>& v) {
  std::size_t k = rows.size(), n = v.size();
  // augmented system rows^T x = v, n equations in k unknowns
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = rows[j][i];
    a[i][k] = v[i];
  }
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
    pivcol.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (a[i][k] != 0) return false;
  for (std::size_t i = 0; i < r; ++i) {
    mpq_class x = a[i][k] / a[i][pivcol[i]];
    if (x.get_den() != 1) return false;
  }
  return true;
}

inline SP random_signed_perm(int g, std::mt19937& rng) {
  SP s = ident(g);
  std::shuffle(s.begin(), s.end(), rng);
  std::bernoulli_distribution coin(0.5);
  for (auto& x : s)
    if (coin(rng)) x = -x;
  return s;
}

}  // namespace oracle
