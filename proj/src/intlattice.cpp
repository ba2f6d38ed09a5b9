#include "cmlab/intlattice.hpp"

#include <algorithm>
#include <map>

#include "cmlab/error.hpp"

namespace cmlab {

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

IntVector operator*(const IntMatrix& m, const IntVector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  IntVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (v[j] != 0) out[i] += m(i, j) * v[j];
  return out;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
}

std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
  return s + ")";
}

namespace {

using Combo = std::map<std::size_t, BigInt>;

void axpy(IntVector& y, const BigInt& a, const IntVector& x, std::size_t from) {
  for (std::size_t i = from; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}

void axpy(Combo& y, const BigInt& a, const Combo& x) {
  for (const auto& [k, v] : x) {
    BigInt& slot = y[k];
    slot += a * v;
    if (slot == 0) y.erase(k);
  }
}

struct Row {
  IntVector v;
  Combo combo;
};

// Incremental echelon form by unimodular row operations.  Each pivot row keeps
// (optionally) the combination of inputs that produced it; rows that reduce to
// zero are collected, and their combinations span the left kernel.
class Echelon {
 public:
  Echelon(std::size_t dim, bool track, bool keep_zero) : dim_(dim), track_(track), keep_zero_(keep_zero) {}

  void insert(IntVector v, std::size_t input_index) {
    if (v.size() != dim_) throw DimensionError("vector length does not match lattice dimension");
    Row r{std::move(v), {}};
    if (track_) r.combo[input_index] = 1;
    std::size_t c = 0;
    while (true) {
      while (c < dim_ && r.v[c] == 0) ++c;
      if (c == dim_) {
        if (keep_zero_) zeros_.push_back(std::move(r));
        return;
      }
      auto it = pivots_.find(c);
      if (it == pivots_.end()) {
        if (r.v[c] < 0) negate(r);
        pivots_.emplace(c, std::move(r));
        return;
      }
      Row& p = it->second;
      const BigInt a = p.v[c];
      const BigInt b = r.v[c];
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        BigInt q = -(b / a);
        axpy(r.v, q, p.v, c);
        if (track_) axpy(r.combo, q, p.combo);
        continue;
      }
      BigInt d, x, y;
      mpz_gcdext(d.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      BigInt ad = a / d, bd = b / d;
      Row np{IntVector(dim_), {}};
      Row nr{IntVector(dim_), {}};
      for (std::size_t i = c; i < dim_; ++i) {
        np.v[i] = x * p.v[i] + y * r.v[i];
        nr.v[i] = ad * r.v[i] - bd * p.v[i];
      }
      if (track_) {
        axpy(np.combo, x, p.combo);
        axpy(np.combo, y, r.combo);
        axpy(nr.combo, ad, r.combo);
        axpy(nr.combo, -bd, p.combo);
      }
      p = std::move(np);
      r = std::move(nr);
    }
  }

  // Reduce entries above pivots into [0, pivot).
  void finalize() {
    for (auto it = pivots_.begin(); it != pivots_.end(); ++it) {
      std::size_t c = it->first;
      const Row& piv = it->second;
      for (auto jt = pivots_.begin(); jt != it; ++jt) {
        Row& r = jt->second;
        if (r.v[c] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r.v[c].get_mpz_t(), piv.v[c].get_mpz_t());
        if (q == 0) continue;
        axpy(r.v, -q, piv.v, c);
        if (track_) axpy(r.combo, -q, piv.combo);
      }
    }
  }

  IntMatrix basis() const {
    IntMatrix m(pivots_.size(), dim_);
    std::size_t r = 0;
    for (const auto& [c, row] : pivots_) {
      for (std::size_t j = 0; j < dim_; ++j) m(r, j) = row.v[j];
      ++r;
    }
    return m;
  }

  const std::map<std::size_t, Row>& pivots() const { return pivots_; }
  const std::vector<Row>& zeros() const { return zeros_; }

 private:
  void negate(Row& r) {
    for (auto& x : r.v) x = -x;
    for (auto& [k, v] : r.combo) v = -v;
  }

  std::size_t dim_;
  bool track_, keep_zero_;
  std::map<std::size_t, Row> pivots_;
  std::vector<Row> zeros_;
};

std::size_t pivot_col(const IntMatrix& b, std::size_t r) {
  for (std::size_t c = 0; c < b.cols(); ++c)
    if (b(r, c) != 0) return c;
  return b.cols();
}

// fdiv reduction against an HNF basis; returns quotients and leaves the residue in v.
IntVector reduce(IntVector& v, const IntMatrix& basis) {
  IntVector coeff(basis.rows());
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = pivot_col(basis, r);
    if (v[c] == 0) continue;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v[c].get_mpz_t(), basis(r, c).get_mpz_t());
    if (q == 0) continue;
    coeff[r] = q;
    for (std::size_t j = c; j < v.size(); ++j)
      if (basis(r, j) != 0) v[j] -= q * basis(r, j);
  }
  return coeff;
}

}  // namespace

IntMatrix hnf(const IntMatrix& m) {
  Echelon e(m.cols(), false, false);
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r), r);
  e.finalize();
  return e.basis();
}

std::size_t rank(const IntMatrix& m) { return hnf(m).rows(); }

IntLattice IntLattice::span(const IntMatrix& generators) {
  IntLattice L(generators.cols());
  L.basis_ = hnf(generators);
  return L;
}

IntLattice IntLattice::span(const std::vector<IntVector>& generators, std::size_t dim) {
  return span(IntMatrix::from_rows(generators, dim));
}

IntLattice kernel_basis(const IntMatrix& m) {
  // Columns of m are the inputs; combinations that vanish are the kernel.
  Echelon e(m.rows(), true, true);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    IntVector col(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
    e.insert(std::move(col), c);
  }
  std::vector<IntVector> gens;
  for (const auto& z : e.zeros()) {
    IntVector v(m.cols());
    for (const auto& [k, x] : z.combo) v[k] = x;
    gens.push_back(std::move(v));
  }
  return IntLattice::span(gens, m.cols());
}

IntLattice saturate(const IntLattice& L) {
  if (L.rank() == 0) return L;
  IntLattice orth = kernel_basis(L.basis());
  return kernel_basis(orth.basis());
}

std::vector<BigInt> elementary_divisors(const IntMatrix& m0) {
  IntMatrix a = m0;
  const std::size_t R = a.rows(), C = a.cols();
  std::vector<BigInt> out;
  std::size_t t = 0;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t c = 0; c < C; ++c) std::swap(a(i, c), a(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t r = 0; r < R; ++r) std::swap(a(r, i), a(r, j));
  };
  while (t < std::min(R, C)) {
    // smallest nonzero entry of the trailing block goes to (t,t)
    std::size_t bi = R, bj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (a(i, j) != 0 && (bi == R || abs(a(i, j)) < abs(a(bi, bj)))) {
          bi = i;
          bj = j;
        }
    if (bi == R) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i) {
      if (a(i, t) == 0) continue;
      BigInt q = a(i, t) / a(t, t);
      for (std::size_t c = t; c < C; ++c) a(i, c) -= q * a(t, c);
      if (a(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      if (a(t, j) == 0) continue;
      BigInt q = a(t, j) / a(t, t);
      for (std::size_t r = t; r < R; ++r) a(r, j) -= q * a(r, t);
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility of the rest of the block
    bool divides = true;
    for (std::size_t i = t + 1; i < R && divides; ++i)
      for (std::size_t j = t + 1; j < C; ++j)
        if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
          for (std::size_t c = t; c < C; ++c) a(t, c) += a(i, c);
          divides = false;
          break;
        }
    if (!divides) continue;
    out.push_back(abs(a(t, t)));
    ++t;
  }
  return out;
}

std::optional<IntVector> member(const IntVector& v, const IntLattice& L) {
  if (v.size() != L.dim()) throw DimensionError("member: dimension mismatch");
  IntVector rest = v;
  IntVector coeff = reduce(rest, L.basis());
  if (!is_zero(rest)) return std::nullopt;
  return coeff;
}

IntVector residue(const IntVector& v, const IntLattice& L) {
  if (v.size() != L.dim()) throw DimensionError("residue: dimension mismatch");
  IntVector rest = v;
  reduce(rest, L.basis());
  return rest;
}

bool lattice_equal(const IntLattice& a, const IntLattice& b) {
  if (a.dim() != b.dim()) throw DimensionError("lattice_equal: ambient dimensions differ");
  return a.basis() == b.basis();
}

IntLattice lattice_sum(const IntLattice& a, const IntLattice& b) {
  if (a.dim() != b.dim()) throw DimensionError("lattice_sum: ambient dimensions differ");
  auto rows = a.basis().row_list();
  for (auto& r : b.basis().row_list()) rows.push_back(std::move(r));
  return IntLattice::span(rows, a.dim());
}

struct CombinationSolver::Impl {
  Echelon echelon;
  IntLattice lattice;
  std::vector<const Row*> rows;  // aligned with lattice.basis() rows

  Impl(const std::vector<IntVector>& gens, std::size_t dim) : echelon(dim, true, false), lattice(dim) {
    for (std::size_t i = 0; i < gens.size(); ++i) echelon.insert(gens[i], i);
    echelon.finalize();
    lattice = IntLattice::span(echelon.basis());
    for (const auto& [c, r] : echelon.pivots()) rows.push_back(&r);
  }
};

CombinationSolver::CombinationSolver(const std::vector<IntVector>& generators, std::size_t dim)
    : impl_(std::make_unique<Impl>(generators, dim)) {}
CombinationSolver::~CombinationSolver() = default;
CombinationSolver::CombinationSolver(CombinationSolver&&) noexcept = default;
CombinationSolver& CombinationSolver::operator=(CombinationSolver&&) noexcept = default;

const IntLattice& CombinationSolver::lattice() const { return impl_->lattice; }

std::optional<std::vector<std::pair<std::size_t, BigInt>>> CombinationSolver::solve(const IntVector& target) const {
  auto coeff = member(target, impl_->lattice);
  if (!coeff) return std::nullopt;
  std::map<std::size_t, BigInt> total;
  for (std::size_t r = 0; r < coeff->size(); ++r)
    if ((*coeff)[r] != 0) axpy(total, (*coeff)[r], impl_->rows[r]->combo);
  return std::vector<std::pair<std::size_t, BigInt>>(total.begin(), total.end());
}

}  // namespace cmlab
