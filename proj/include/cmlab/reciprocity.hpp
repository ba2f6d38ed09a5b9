#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cmlab/cmtypes.hpp"
#include "cmlab/intlattice.hpp"

namespace cmlab {

inline constexpr std::size_t kDefaultBudget = 10'000'000;

enum class Side {
  simple,     // theta_1..theta_g of one CM pair
  anti_weyl,  // Theta_I for all I in P({1..g}), coordinates in SubsetOrder, plus tau = 2 pi i
};

// Exponent vector m_1 / m_2 of a monomial identity m_1 ~ m_2.
struct MonomialRelation {
  Side side = Side::simple;
  int g = 0;
  IntVector exponents;
  BigInt tau;                        // anti-Weyl side only
  std::vector<std::string> symbols;  // simple side: label names, e.g. "[0]"

  static MonomialRelation simple(const CMPairSpec& spec, IntVector exps);
  static MonomialRelation anti_weyl(int g, IntVector exps, BigInt tau = 0);

  bool is_trivial() const { return is_zero(exponents) && tau == 0; }
  // Theta_I coefficient on the anti-Weyl side.
  BigInt& at(const Subset& I);
  const BigInt& at(const Subset& I) const;

  friend bool operator==(const MonomialRelation&, const MonomialRelation&) = default;
};

// Positive exponents left, negative right, "~" for the period congruence.
std::string render(const MonomialRelation& r);
// Full vector over Z^{P({1..g})} + Z tau.
IntVector flatten(const MonomialRelation& r);

// Row for sigma: +1 at j when phi_j in sigma.Phi_E, -1 when its conjugate is.
IntMatrix pairing_matrix(const CMPairSpec& spec);
IntLattice kernel_N(const CMPairSpec& spec);
int mt_dimension(const CMPairSpec& spec);

// 2g x 2^g: column I is sum_{j not in I} phi_j + sum_{j in I} phibar_j.
IntMatrix rec_star_antiweyl(int g);
IntLattice quad_lattice(int g, std::size_t budget = kDefaultBudget);
// span{eps_empty, eps_{1}, ..., eps_{g}}
IntLattice lattice_M(int g);

// One relation per HNF basis row.  The simple side takes symbol names from the CM pair.
std::vector<MonomialRelation> relations_from_kernel(const IntLattice& L, const CMPairSpec& spec);
std::vector<MonomialRelation> relations_from_kernel(const IntLattice& L, int g);

// eps_I + (r-1) eps_empty - sum_k eps_{i_k}
MonomialRelation theta_generator_reduction(const Subset& I);

struct EquivCertificate {
  IntVector difference;  // eps_I - eps_I'
  IntVector m_coeffs;    // over eps_empty, eps_{1}, ..., eps_{g}
  IntVector n_coeffs;    // over the HNF basis of quad_lattice(g)
};
EquivCertificate equiv_class_check(const Subset& I, const Subset& Iprime);

// Unit vector of I in Z^{P({1..g})}.
IntVector unit_vector(const Subset& I);

}  // namespace cmlab
