#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cmlab {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  IntVector row(std::size_t r) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> data_;
};

IntVector operator*(const IntMatrix& m, const IntVector& v);
bool is_zero(const IntVector& v);
std::string to_string(const IntVector& v);

// Row-style Hermite normal form: positive pivots, entries above each pivot
// reduced into [0, pivot), zero rows dropped.
IntMatrix hnf(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

class IntLattice {
 public:
  explicit IntLattice(std::size_t dim) : basis_(0, dim) {}
  // Lattice spanned by the rows of `generators`.
  static IntLattice span(const IntMatrix& generators);
  static IntLattice span(const std::vector<IntVector>& generators, std::size_t dim);

  std::size_t dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }

  friend bool operator==(const IntLattice&, const IntLattice&) = default;

 private:
  IntMatrix basis_;
};

// {v : m v = 0}
IntLattice kernel_basis(const IntMatrix& m);
IntLattice saturate(const IntLattice& L);
std::vector<BigInt> elementary_divisors(const IntMatrix& m);

// Coefficients c with c . basis = v, or nothing when v is not in L.
std::optional<IntVector> member(const IntVector& v, const IntLattice& L);
// What is left of v after reduction against the HNF basis; zero iff member.
IntVector residue(const IntVector& v, const IntLattice& L);
bool lattice_equal(const IntLattice& a, const IntLattice& b);
// a + b
IntLattice lattice_sum(const IntLattice& a, const IntLattice& b);

// Integer combinations of a fixed generator list, for certificates that name
// the generators rather than HNF rows.  Coefficients come back sparse.
class CombinationSolver {
 public:
  CombinationSolver(const std::vector<IntVector>& generators, std::size_t dim);
  ~CombinationSolver();
  CombinationSolver(CombinationSolver&&) noexcept;
  CombinationSolver& operator=(CombinationSolver&&) noexcept;

  std::optional<std::vector<std::pair<std::size_t, BigInt>>> solve(const IntVector& target) const;
  const IntLattice& lattice() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cmlab
