#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cmlab {

using Mask = std::uint32_t;

inline constexpr int kMaxGroupG = 24;
inline constexpr int kMaxSubsetG = 16;

// Subset of {1..g}; element j lives in bit j-1.
struct Subset {
  int g = 0;
  Mask bits = 0;

  Subset() = default;
  Subset(int g_, Mask bits_);
  static Subset of(int g, std::initializer_list<int> elems);
  static Subset from_elements(int g, const std::vector<int>& elems);
  static Subset full(int g);

  bool contains(int j) const { return (bits >> (j - 1)) & 1u; }
  int size() const;
  Subset complement() const;
  std::vector<int> elements() const;
  std::string to_string() const;  // "{2,5,6}", "{}" for the empty set

  friend bool operator==(const Subset&, const Subset&) = default;
};

Subset symmetric_difference(const Subset& a, const Subset& b);
Mask full_mask(int g);

// phi_j (bar = false) or its conjugate (bar = true), j is 1-based.
struct EmbeddingLabel {
  int index = 1;
  bool bar = false;

  EmbeddingLabel conjugate() const { return {index, !bar}; }
  friend bool operator==(const EmbeddingLabel&, const EmbeddingLabel&) = default;
};

// (eps_I, beta) in (Z/2)^g x| S_g.  perm[j-1] = beta(j), 1-based images.
class SignedPerm {
 public:
  SignedPerm() = default;
  SignedPerm(Subset flips, std::vector<int> perm);

  static SignedPerm identity(int g);
  static SignedPerm rho(int g);
  static SignedPerm flip(int g, int j);  // e_j
  static SignedPerm permutation(std::vector<int> perm);

  int g() const { return g_; }
  Subset flips() const { return {g_, flips_}; }
  int image(int j) const { return perm_[j - 1] + 1; }
  std::vector<int> perm() const;

  // beta(I): image of the index set under the permutation part.
  Mask map_mask(Mask m) const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;
  friend bool operator<(const SignedPerm& a, const SignedPerm& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  int g_ = 0;
  Mask flips_ = 0;
  std::array<std::uint8_t, kMaxGroupG> perm_{};  // 0-based images
};

struct SignedPermHash {
  std::size_t operator()(const SignedPerm& s) const { return s.hash(); }
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& a);

// Left action theta.I = I_theta xor beta_theta(I).
Subset act_subset(const SignedPerm& t, const Subset& I);
EmbeddingLabel act_embedding(const SignedPerm& t, const EmbeddingLabel& x);

}  // namespace cmlab
