#include "cmlab/galois.hpp"

#include <algorithm>
#include <deque>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

void check_g(int g) {
  if (g < 1 || g > kMaxGroupG)
    throw DimensionError("g = " + std::to_string(g) + " outside 1.." + std::to_string(kMaxGroupG));
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

GaloisGroup GaloisGroup::from_generators(int g, std::vector<SignedPerm> gens, std::size_t max_order) {
  check_g(g);
  for (const auto& s : gens)
    if (s.g() != g) throw DimensionError("generator has wrong g");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  GaloisGroup G;
  G.g_ = g;
  G.generators_ = gens;
  G.elements_.push_back(SignedPerm::identity(g));
  G.index_.emplace(G.elements_.front(), 0);
  // BFS on right multiplication by generators
  for (std::size_t head = 0; head < G.elements_.size(); ++head) {
    for (const auto& s : gens) {
      SignedPerm x = compose(G.elements_[head], s);
      if (G.index_.count(x)) continue;
      if (G.elements_.size() >= max_order)
        throw BudgetError("group closure exceeds " + std::to_string(max_order) + " elements");
      G.index_.emplace(x, G.elements_.size());
      G.elements_.push_back(x);
    }
  }
  G.validate();
  return G;
}

SignedPerm cyclic_translation(int M, const std::vector<int>& phi, int t) {
  int g = M / 2;
  std::vector<int> pos(M, -1);  // residue -> index j (0-based) of the pair it belongs to
  std::vector<bool> hol(M, false);
  for (int j = 0; j < g; ++j) {
    int a = mod(phi[j], M);
    pos[a] = j;
    hol[a] = true;
    pos[mod(a + g, M)] = j;
  }
  std::vector<int> perm(g);
  Mask flips = 0;
  for (int j = 0; j < g; ++j) {
    int b = mod(phi[j] + t, M);
    int k = pos[b];
    perm[j] = k + 1;
    if (!hol[b]) flips |= Mask{1} << k;
  }
  return {Subset(g, flips), perm};
}

GaloisGroup GaloisGroup::from_cyclic_translation(int M, const std::vector<int>& phi) {
  if (M < 2 || M % 2) throw DomainError("cyclic modulus must be even and positive");
  int g = M / 2;
  check_g(g);
  if (static_cast<int>(phi.size()) != g)
    throw DomainError("phi must have M/2 = " + std::to_string(g) + " residues, got " +
                      std::to_string(phi.size()));
  std::vector<bool> used(g, false);
  for (int a : phi) {
    int r = mod(a, g);
    if (used[r]) throw DomainError("phi is not a transversal of the conjugate pairs {a, a+M/2}");
    used[r] = true;
  }

  GaloisGroup G;
  G.g_ = g;
  G.modulus_ = M;
  for (int a : phi) G.cyclic_phi_.push_back(mod(a, M));
  for (int t = 0; t < M; ++t) G.elements_.push_back(cyclic_translation(M, G.cyclic_phi_, t));
  G.generators_ = {G.elements_[1 % M]};
  for (std::size_t i = 0; i < G.elements_.size(); ++i) G.index_.emplace(G.elements_[i], i);
  if (G.index_.size() != G.elements_.size()) throw DomainError("translation action is not faithful");
  G.validate();
  return G;
}

GaloisGroup GaloisGroup::full_hyperoctahedral(int g) {
  check_g(g);
  std::vector<SignedPerm> gens = {SignedPerm::flip(g, 1)};
  if (g >= 2) {
    std::vector<int> swap(g), cycle(g);
    for (int j = 0; j < g; ++j) {
      swap[j] = j + 1;
      cycle[j] = (j + 1) % g + 1;
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(SignedPerm::permutation(swap));
    gens.push_back(SignedPerm::permutation(cycle));
  }
  return from_generators(g, gens);
}

void GaloisGroup::validate() {
  auto it = index_.find(SignedPerm::rho(g_));
  if (it == index_.end()) throw DomainError("conjugation not in group");
  rho_index_ = it->second;

  // orbit of 1 under the image in S_g
  Mask reached = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& s : generators_) {
      Mask next = reached | s.map_mask(reached);
      if (next != reached) {
        reached = next;
        grew = true;
      }
    }
  }
  if (reached != full_mask(g_)) throw DomainError("image of G in S_g is not transitive");
}

std::optional<std::size_t> GaloisGroup::index_of(const SignedPerm& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string GaloisGroup::label(std::size_t i) const {
  if (is_cyclic()) return "[" + std::to_string(i) + "]";
  return "#" + std::to_string(i);
}

const SignedPerm& GaloisGroup::embed(int t) const {
  if (!is_cyclic()) throw DomainError("embed([t]) needs a cyclic group");
  return elements_[mod(t, modulus_)];
}

bool GaloisGroup::is_weyl() const {
  std::size_t full = std::size_t{1} << g_;
  for (int k = 2; k <= g_; ++k) {
    full *= k;
    if (full > elements_.size()) return false;
  }
  return full == elements_.size();
}

}  // namespace cmlab
