#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cmlab/hyperoct.hpp"

namespace cmlab {

inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

// Galois group of the Galois closure, embedded in (Z/2)^g x| S_g.
// Immutable after construction.
class GaloisGroup {
 public:
  static GaloisGroup from_generators(int g, std::vector<SignedPerm> gens,
                                     std::size_t max_order = kMaxGroupOrder);

  // Cyclic group Z/M acting on Hom(E,C) = Z/M by translation; conjugation is
  // translation by M/2.  phi lists the residues phi_1..phi_g in order.
  static GaloisGroup from_cyclic_translation(int M, const std::vector<int>& phi);

  static GaloisGroup full_hyperoctahedral(int g);

  int g() const { return g_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<SignedPerm>& elements() const { return elements_; }
  const SignedPerm& element(std::size_t i) const { return elements_[i]; }
  const std::vector<SignedPerm>& generators() const { return generators_; }
  std::size_t rho_index() const { return rho_index_; }
  std::optional<std::size_t> index_of(const SignedPerm& s) const;

  // "[t]" for cyclic groups, "#i" otherwise.
  std::string label(std::size_t i) const;
  bool is_cyclic() const { return modulus_ > 0; }
  int modulus() const { return modulus_; }
  const std::vector<int>& cyclic_phi() const { return cyclic_phi_; }
  // Embedding of the translation [t]; cyclic groups only.
  const SignedPerm& embed(int t) const;

  bool is_weyl() const;

 private:
  GaloisGroup() = default;
  void build_index();
  void validate();

  int g_ = 0;
  std::vector<SignedPerm> elements_;
  std::vector<SignedPerm> generators_;
  std::unordered_map<SignedPerm, std::size_t, SignedPermHash> index_;
  std::size_t rho_index_ = 0;
  int modulus_ = 0;
  std::vector<int> cyclic_phi_;
};

// Translation by t on the embedding labels of a cyclic CM field.
SignedPerm cyclic_translation(int M, const std::vector<int>& phi, int t);

}  // namespace cmlab
