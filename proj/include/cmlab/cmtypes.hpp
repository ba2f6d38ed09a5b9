#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cmlab/galois.hpp"
#include "cmlab/hyperoct.hpp"

namespace cmlab {

// SubsetOrder: subsets without 1 first, by binary value over positions 2..g;
// a subset containing 1 sits at 2^g - 1 - rank(complement).
std::uint32_t subset_rank(const Subset& I);
Subset subset_at_rank(int g, std::uint32_t rank);
bool subset_less(const Subset& a, const Subset& b);
void sort_subsets(std::vector<Subset>& v);

// A CM field E with a distinguished CM type phi_1..phi_g and its Galois data.
class CMPairSpec {
 public:
  // Names default to the residues for cyclic groups ("[a]") and to "phi<j>"
  // otherwise.
  explicit CMPairSpec(GaloisGroup group, std::vector<std::string> phi_names = {});

  const GaloisGroup& group() const { return group_; }
  int g() const { return group_.g(); }
  const std::string& name(const EmbeddingLabel& x) const;
  const std::vector<std::string>& phi_names() const { return phi_; }

 private:
  GaloisGroup group_;
  std::vector<std::string> phi_;
  std::vector<std::string> conj_;
};

struct Compagnon {
  std::vector<Subset> orbit;    // SubsetOrder
  std::vector<Subset> cm_type;  // members of the orbit not containing 1
  std::size_t degree = 0;

  const Subset& key() const { return orbit.front(); }
};

std::vector<std::vector<Subset>> orbit_decomposition(const GaloisGroup& G);
std::vector<Subset> orbit_of(const GaloisGroup& G, const Subset& I);

Compagnon reflex_type(const CMPairSpec& spec);
std::vector<Compagnon> compagnons(const CMPairSpec& spec);

// I <-> {phi_j : j not in I} u {phibar_j : j in I}, ordered by j.
std::vector<EmbeddingLabel> decode_cm_type(const Subset& I);
Subset encode_cm_type(int g, const std::vector<EmbeddingLabel>& labels);

// Indices of the group elements t with 1 not in t.base: the CM type of the
// compagnon through `base`, identified with G/Stab(base) via t -> t.base.
std::vector<std::size_t> compagnon_type_elements(const GaloisGroup& G, const Subset& base);

// The compagnon as a CM pair in its own right: labels are the members of its
// cm_type, conjugation is complementation, and G acts through its image.
CMPairSpec compagnon_spec(const CMPairSpec& spec, const Compagnon& c);

}  // namespace cmlab
