#include "cmlab/hyperoct.hpp"

#include <bit>
#include <sstream>

#include "cmlab/error.hpp"

namespace cmlab {

Mask full_mask(int g) { return g >= 32 ? ~Mask{0} : ((Mask{1} << g) - 1); }

Subset::Subset(int g_, Mask bits_) : g(g_), bits(bits_) {
  if (g < 0 || g > kMaxGroupG) throw DimensionError("subset ground size out of range");
  if (bits & ~full_mask(g)) throw DimensionError("subset has elements outside {1..g}");
}

Subset Subset::of(int g, std::initializer_list<int> elems) {
  return from_elements(g, std::vector<int>(elems));
}

Subset Subset::from_elements(int g, const std::vector<int>& elems) {
  Mask m = 0;
  for (int j : elems) {
    if (j < 1 || j > g) throw DimensionError("subset element " + std::to_string(j) + " outside {1..g}");
    m |= Mask{1} << (j - 1);
  }
  return {g, m};
}

Subset Subset::full(int g) { return {g, full_mask(g)}; }

int Subset::size() const { return std::popcount(bits); }

Subset Subset::complement() const { return {g, ~bits & full_mask(g)}; }

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  for (int j = 1; j <= g; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string Subset::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int j : elements()) {
    if (!first) s += ',';
    s += std::to_string(j);
    first = false;
  }
  return s + "}";
}

Subset symmetric_difference(const Subset& a, const Subset& b) {
  if (a.g != b.g) throw DimensionError("subset size mismatch");
  return {a.g, a.bits ^ b.bits};
}

SignedPerm::SignedPerm(Subset flips, std::vector<int> perm) : g_(flips.g), flips_(flips.bits) {
  if (static_cast<int>(perm.size()) != g_) throw DimensionError("perm length does not match g");
  Mask seen = 0;
  for (int j = 0; j < g_; ++j) {
    int v = perm[j];
    if (v < 1 || v > g_) throw DomainError("perm image out of range");
    if (seen & (Mask{1} << (v - 1))) throw DomainError("perm is not a bijection");
    seen |= Mask{1} << (v - 1);
    perm_[j] = static_cast<std::uint8_t>(v - 1);
  }
}

SignedPerm SignedPerm::identity(int g) {
  std::vector<int> p(g);
  for (int j = 0; j < g; ++j) p[j] = j + 1;
  return {Subset(g, 0), p};
}

SignedPerm SignedPerm::rho(int g) {
  SignedPerm r = identity(g);
  r.flips_ = full_mask(g);
  return r;
}

SignedPerm SignedPerm::flip(int g, int j) {
  SignedPerm r = identity(g);
  r.flips_ = Subset::of(g, {j}).bits;
  return r;
}

SignedPerm SignedPerm::permutation(std::vector<int> perm) {
  int g = static_cast<int>(perm.size());
  return {Subset(g, 0), std::move(perm)};
}

std::vector<int> SignedPerm::perm() const {
  std::vector<int> p(g_);
  for (int j = 0; j < g_; ++j) p[j] = perm_[j] + 1;
  return p;
}

Mask SignedPerm::map_mask(Mask m) const {
  Mask out = 0;
  while (m) {
    int j = std::countr_zero(m);
    m &= m - 1;
    out |= Mask{1} << perm_[j];
  }
  return out;
}

bool operator<(const SignedPerm& a, const SignedPerm& b) {
  if (a.g_ != b.g_) return a.g_ < b.g_;
  if (a.flips_ != b.flips_) return a.flips_ < b.flips_;
  return a.perm_ < b.perm_;
}

std::size_t SignedPerm::hash() const {
  // FNV-1a over the significant bytes
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(flips_));
  for (int j = 0; j < g_; ++j) mix(perm_[j]);
  return h;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  os << "(" << flips().to_string() << ", [";
  for (int j = 0; j < g_; ++j) os << (j ? " " : "") << perm_[j] + 1;
  os << "])";
  return os.str();
}

// (eps_a, alpha)(eps_b, beta) = (eps_a + alpha(eps_b), alpha beta)
SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.g() != b.g()) throw DimensionError("compose: mismatched g");
  int g = a.g();
  std::vector<int> p(g);
  for (int j = 1; j <= g; ++j) p[j - 1] = a.image(b.image(j));
  Subset f(g, a.flips().bits ^ a.map_mask(b.flips().bits));
  return {f, p};
}

SignedPerm inverse(const SignedPerm& a) {
  int g = a.g();
  std::vector<int> p(g);
  for (int j = 1; j <= g; ++j) p[a.image(j) - 1] = j;
  SignedPerm binv = SignedPerm::permutation(p);
  return {Subset(g, binv.map_mask(a.flips().bits)), p};
}

Subset act_subset(const SignedPerm& t, const Subset& I) {
  if (t.g() != I.g) throw DimensionError("act_subset: mismatched g");
  return {I.g, t.flips().bits ^ t.map_mask(I.bits)};
}

EmbeddingLabel act_embedding(const SignedPerm& t, const EmbeddingLabel& x) {
  if (x.index < 1 || x.index > t.g()) throw DimensionError("act_embedding: label index out of range");
  int k = t.image(x.index);
  bool flipped = t.flips().contains(k);
  return {k, x.bar != flipped};
}

}  // namespace cmlab
