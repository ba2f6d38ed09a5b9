#include "cmlab/sl2check.hpp"

#include "cmlab/cmtypes.hpp"
#include "cmlab/error.hpp"

namespace cmlab {

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(n_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

bool RatMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix o = a;
  for (std::size_t i = 0; i < o.a_.size(); ++i) o.a_[i] += b.a_[i];
  return o;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix o = a;
  for (std::size_t i = 0; i < o.a_.size(); ++i) o.a_[i] -= b.a_[i];
  return o;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.n_ != b.n_) throw DimensionError("matrix size mismatch");
  RatMatrix o(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j)
        if (b(k, j) != 0) o(i, j) += x * b(k, j);
    }
  return o;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
  RatMatrix o = a;
  for (auto& x : o.a_) x *= s;
  return o;
}

RatMatrix bracket(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

namespace {

std::size_t dim_of(int g) {
  if (g < 1 || g > kMaxSl2G) throw DimensionError("sl2 checks need 1 <= g <= 6");
  return std::size_t{1} << g;
}

// J with J x_k = b_{partner}, J b_{partner} = -x_k
RatMatrix jay(int g) {
  std::size_t n = dim_of(g);
  RatMatrix J(n);
  for (std::size_t k = 0; k < n; ++k) J(n - 1 - k, k) = k < n / 2 ? 1 : -1;
  return J;
}

}  // namespace

RatMatrix symplectic_form(int g) {
  std::size_t n = dim_of(g);
  RatMatrix om(n);
  for (std::size_t k = 0; k < n; ++k) om(k, n - 1 - k) = k < n / 2 ? 1 : -1;
  return om;
}

bool in_symplectic_algebra(const RatMatrix& m, int g) {
  RatMatrix om = symplectic_form(g);
  return (m.transpose() * om + om * m).is_zero();
}

RatMatrix conj(const RatMatrix& m, int g) {
  RatMatrix J = jay(g);
  return Rational(-1) * (J * m * J);  // J^{-1} = -J
}

RatMatrix torus_element(int g, const std::vector<Rational>& h) {
  std::size_t n = dim_of(g);
  if (h.size() != n / 2) throw DimensionError("torus element needs 2^(g-1) weights");
  RatMatrix t(n);
  for (std::size_t k = 0; k < n / 2; ++k) {
    t(k, k) = h[k];
    t(n - 1 - k, n - 1 - k) = -h[k];
  }
  return t;
}

RatMatrix root_vector(const Subset& I, const Subset& J, const Rational& scale) {
  if (I.g != J.g) throw DimensionError("root_vector: mismatched g");
  int g = I.g;
  std::size_t n = dim_of(g);
  if (I.contains(1) && J.contains(1)) return conj(root_vector(I.complement(), J.complement(), scale), g);
  if (I.contains(1) || J.contains(1))
    throw DomainError("root_vector: I and J must both avoid 1 or both contain 1");
  RatMatrix E(n);
  std::size_t xi = subset_rank(I), xj = subset_rank(J);
  // y-slot of I is the position of I^c
  if (I == J) {
    E(xi, subset_rank(I.complement())) = scale;
  } else {
    E(xi, subset_rank(J.complement())) = scale;
    E(xj, subset_rank(I.complement())) = scale;
  }
  return E;
}

namespace {

Mask rest_mask(int g) { return full_mask(g) & ~Mask{1}; }

void check_U(const Subset& U) {
  if (U.g < 2) throw DimensionError("v_U needs g >= 2");
  if (U.contains(1)) throw DomainError("U must be a subset of {2..g}");
}

}  // namespace

RatMatrix build_v(const Subset& U, const Rational& scale) {
  check_U(U);
  int g = U.g;
  Rational eps = U.bits == rest_mask(g) ? Rational(1, 2) : Rational(1);
  RatMatrix v(dim_of(g));
  for (Mask s = U.bits;; s = (s - 1) & U.bits) {
    Subset I(g, s), rest(g, rest_mask(g) & ~s);
    v = v + root_vector(I, rest, scale);
    if (s == 0) break;
  }
  return eps * v;
}

RatMatrix build_vbar(const Subset& U, const Rational& scale) {
  check_U(U);
  int g = U.g;
  Rational eps = U.bits == rest_mask(g) ? Rational(1, 2) : Rational(1);
  RatMatrix v(dim_of(g));
  // I' ranges over supersets of U^c, paired with {1} u I'^c
  Mask Uc = U.complement().bits, free = U.bits;
  for (Mask s = free;; s = (s - 1) & free) {
    Subset Ip(g, Uc | s);
    Subset partner(g, Mask{1} | Ip.complement().bits);
    v = v + root_vector(Ip, partner, scale);
    if (s == 0) break;
  }
  return eps * v;
}

Sl2Report check_sl2(const Subset& U, const Rational& scale) {
  int g = U.g;
  RatMatrix v = build_v(U, scale), vb = build_vbar(U, scale);
  Sl2Report rep;
  rep.bracket_vv_zero = bracket(v, v).is_zero();
  RatMatrix h = bracket(v, vb);
  rep.bracket_vvbar_diagonal = h.is_diagonal();
  bool e_ok = bracket(v, h) == Rational(2) * v;
  bool f_ok = bracket(vb, bracket(vb, v)) == Rational(2) * vb;
  rep.triple_identities = e_ok && f_ok;
  rep.conjugation = conj(v, g) == vb;
  if (!rep.bracket_vv_zero)
    rep.failure = "[v,v] != 0";
  else if (!rep.bracket_vvbar_diagonal)
    rep.failure = "[v,vbar] not diagonal";
  else if (!e_ok)
    rep.failure = "[v,[v,vbar]] != 2v";
  else if (!f_ok)
    rep.failure = "[vbar,[vbar,v]] != 2vbar";
  else if (!rep.conjugation)
    rep.failure = "conj(v) != vbar";
  return rep;
}

}  // namespace cmlab
