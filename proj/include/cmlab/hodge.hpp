#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cmlab/cmtypes.hpp"
#include "cmlab/intlattice.hpp"
#include "cmlab/reciprocity.hpp"

namespace cmlab {

// A label (rank in the owning LabelAction) in copy `copy` of S^{n}.
struct Slot {
  std::uint32_t label = 0;
  int copy = 1;
  friend auto operator<=>(const Slot&, const Slot&) = default;
};

// Ordered set of 2p slots; ordered by label rank, then copy.
struct CycleIndex {
  std::vector<Slot> slots;
  std::size_t p() const { return slots.size() / 2; }
  friend auto operator<=>(const CycleIndex&, const CycleIndex&) = default;
};

// The 2h embedding labels of a CM pair together with the Galois action on
// them.  Ranks [0, h) are holomorphic, [h, 2h) antiholomorphic.
//  - simple: phi_1..phi_g then phibar_1..phibar_g
//  - anti-Weyl: all subsets of {1..g} in SubsetOrder
class LabelAction {
 public:
  static LabelAction simple(const CMPairSpec& spec);
  static LabelAction anti_weyl(const GaloisGroup& G);

  bool is_anti_weyl() const { return anti_weyl_; }
  int g() const { return g_; }
  std::uint32_t size() const { return 2 * half_; }
  std::uint32_t half() const { return half_; }
  bool holomorphic(std::uint32_t rank) const { return rank < half_; }
  // Distinct permutations of ranks induced by G.
  const std::vector<std::vector<std::uint32_t>>& images() const { return images_; }
  std::string name(std::uint32_t rank) const;

 private:
  bool anti_weyl_ = false;
  int g_ = 0;
  std::uint32_t half_ = 0;
  std::vector<std::vector<std::uint32_t>> images_;
  std::vector<std::string> names_;
};

struct EnumOptions {
  std::size_t budget = kDefaultBudget;
  unsigned jobs = 1;
};

bool satisfies_pohlmann(const LabelAction& A, const CycleIndex& c);
CycleIndex act_on_cycle(const LabelAction& A, std::size_t image, const CycleIndex& c);
std::string render(const CycleIndex& c, const LabelAction& A);

// All 2p-slot sets P of S^{n} with |sigma P n Phi| = |sigma P n Phibar| for all sigma.
std::vector<CycleIndex> pohlmann_basis(const LabelAction& A, int p, int n, EnumOptions opt = {});

// 2p distinct (subset, copy) slots covering every j in {1..g} exactly p times.
std::vector<CycleIndex> bp_multisets(int g, int p, int n, std::size_t budget = kDefaultBudget);

struct Quad {
  Subset I, J, K, L;
  friend bool operator==(const Quad&, const Quad&) = default;
};

// I u J = K u L and I n J = K n L
bool union_meet_balanced(const Quad& q);
// (I, J, K^c, L^c)
std::array<Subset, 4> wedge_slots(const Quad& q);
int slots_containing_one(const std::array<Subset, 4>& slots);

struct Quadruple {
  Quad q;
  std::array<int, 4> copies{1, 1, 1, 1};
};

// Quadruples with I,J,K,L in {2..g}, I u J = K u L, I n J = K n L, I <= J and K^c <= L^c
// (ties broken by copy) and pairwise distinct slots.
std::vector<Quadruple> b2_quadruples(int g, int n, std::size_t budget = kDefaultBudget);
CycleIndex quadruple_cycle(const Quadruple& q);

// P_alpha: copy l holds phi_j for a_j >= l and phibar_j for a_j <= -l.
CycleIndex kernel_to_cycle(const CMPairSpec& spec, const IntVector& alpha, int n);
// Inverse direction on the simple side: a_j = #phi_j - #phibar_j.
IntVector kernel_vector_of_cycle(const LabelAction& A, const CycleIndex& c);

// Anti-Weyl cycle -> prod_{hol} Theta_I ~ prod_{anti} Theta_{I^c}.
MonomialRelation relation_of_cycle(const LabelAction& A, const CycleIndex& c);

// Degree-1 generator Theta_I Theta_{I^c} ~ 2 pi i, or a quadratic
// Theta_I Theta_J ~ Theta_K Theta_L.
struct Generator {
  enum class Kind { degree1, quadratic };
  Kind kind = Kind::quadratic;
  Quad q;  // degree1 uses q.I only

  static Generator degree1(const Subset& I);
  static Generator quadratic(const Quad& q);
  IntVector vector() const;  // over Z^{P({1..g})} + Z tau
  std::string to_string() const;
};

struct Certificate {
  MonomialRelation target;
  std::vector<std::pair<Generator, BigInt>> parts;

  bool verify() const;
};

// Expresses anti-Weyl relations through degree <= 2 generators.  First looks
// for a certificate with at most two quadratics built from the target's own
// symbols, then falls back to membership over a spanning generator family.
// Quadratics whose fourth symbol is in `prefer` are tried first.
class LowDegreeReducer {
 public:
  explicit LowDegreeReducer(int g);
  ~LowDegreeReducer();
  Certificate reduce(const MonomialRelation& r, const std::vector<Subset>& prefer = {});

 private:
  int g_;
  std::vector<Generator> family_;
  std::unique_ptr<CombinationSolver> solver_;
};

Certificate reduce_to_low_degree(const MonomialRelation& r, int g, const std::vector<Subset>& prefer = {});

struct SupportReport {
  std::vector<std::array<Mask, 4>> support1, support2;
  bool equivalent = false;
};
SupportReport support_and_equivalence(const Quad& q1, const Quad& q2, const GaloisGroup& G);

// (r, s) of the normal form eps_empty ^ eps_{2..r} ^ eps_{{2..s}^c} ^ eps_{{s+1..r}^c}.
std::pair<int, int> canonical_form_weyl(const Quad& q, int g);
// Same, for a balanced slot tuple in any order.  Coordinates split into three
// classes by which slot shares their value with slot 0; with class sizes
// a >= b >= c, r = b + c + 1 and s = c + 1.
std::pair<int, int> canonical_form_slots(const std::array<Subset, 4>& slots);

}  // namespace cmlab
