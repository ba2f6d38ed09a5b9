#pragma once

#include <string>
#include <vector>

#include "cmlab/cmtypes.hpp"
#include "cmlab/hodge.hpp"
#include "cmlab/json_io.hpp"

// The CM field Q(zeta_19): G = Z/18 acting on Hom(E,C) = Z/18 by translation,
// conjugation [9].
namespace cmlab::mu19 {

inline constexpr int kModulus = 18;
inline constexpr int kG = 9;

// Phi = {[0],[2],[3],[6],[10],[13],[14],[16],[17]}
const std::vector<int>& phi();
// The CM pair (E, Phi); symbols are the residues of Phi.
const CMPairSpec& spec();
// Reflex type Phi_E = {[a] : [0] in [a].Phi}, i.e. -Phi, in increasing order.
const std::vector<int>& reflex();
// (E, Phi_E); phi_j is the j-th residue of Phi_E.
const CMPairSpec& reflex_spec();

// I([a]) = [a].Phi_E as a subset of {1..9}.
Subset I_of(int a);
Subset L();       // {5,6}
Subset Lprime();  // {4,6,7}

// {[a] : [0] not in [a].Psi} for the CM type Psi encoded by `base`.
std::vector<int> compagnon_type(const Subset& base);

// Kernel vector over Phi -> anti-Weyl relation on Theta_{I([a])}.
MonomialRelation lift(const IntVector& alpha);

// alpha for "[0]-[2]-[3]+[6]-[14]+[17]" and "[0]-[3]+[6]-[10]+[13]-[16]"
std::vector<IntVector> cubic_generators();

// Reduction of cubic k, steered through Theta_L (k = 0) or Theta_L' (k = 1).
Certificate factorization(std::size_t k);

std::string report_text();
json report_json();

}  // namespace cmlab::mu19
