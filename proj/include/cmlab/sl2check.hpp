#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "cmlab/hyperoct.hpp"

namespace cmlab {

using Rational = mpq_class;

inline constexpr int kMaxSl2G = 6;

// Square matrix on the 2^g-dimensional symplectic space whose basis is all
// subsets of {1..g} in SubsetOrder.  Position k pairs with 2^g-1-k: the
// first half are the x_I (1 not in I), x_I pairs with the vector at I^c.
class RatMatrix {
 public:
  RatMatrix() = default;
  explicit RatMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t n() const { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  RatMatrix transpose() const;
  bool is_zero() const;
  bool is_diagonal() const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const Rational& s, const RatMatrix& a);

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b);

RatMatrix symplectic_form(int g);
bool in_symplectic_algebra(const RatMatrix& m, int g);
// Conjugation by J: x_I -> (partner of x_I), partner -> -x_I.
RatMatrix conj(const RatMatrix& m, int g);
// diag(h) with h at I and -h at I^c, h indexed by the holomorphic ranks.
RatMatrix torus_element(int g, const std::vector<Rational>& h);

// E_{I,J} for I, J both inside {2..g} (raising) or both containing 1
// (lowering, the conjugate of E_{I^c,J^c}).  `scale` exists for the negative
// control only.
RatMatrix root_vector(const Subset& I, const Subset& J, const Rational& scale = 1);

RatMatrix build_v(const Subset& U, const Rational& scale = 1);
RatMatrix build_vbar(const Subset& U, const Rational& scale = 1);

struct Sl2Report {
  bool bracket_vv_zero = false;
  bool bracket_vvbar_diagonal = false;
  bool triple_identities = false;  // [v,[v,vb]] = 2v and [vb,[vb,v]] = 2vb
  bool conjugation = false;        // conj(v) = vb
  std::string failure;

  bool ok() const { return bracket_vv_zero && bracket_vvbar_diagonal && triple_identities && conjugation; }
};

Sl2Report check_sl2(const Subset& U, const Rational& scale = 1);

}  // namespace cmlab
