#include "cmlab/cmtypes.hpp"

#include <algorithm>

#include "cmlab/error.hpp"

namespace cmlab {

std::uint32_t subset_rank(const Subset& I) {
  std::uint32_t r = I.bits >> 1;
  if (I.contains(1)) r += std::uint32_t{1} << (I.g - 1);
  return r;
}

Subset subset_at_rank(int g, std::uint32_t rank) {
  std::uint32_t half = std::uint32_t{1} << (g - 1);
  if (rank >= 2 * half) throw DimensionError("subset rank out of range");
  Mask bits = (rank % half) << 1;
  if (rank >= half) bits |= 1;
  return {g, bits};
}

bool subset_less(const Subset& a, const Subset& b) { return subset_rank(a) < subset_rank(b); }

void sort_subsets(std::vector<Subset>& v) { std::sort(v.begin(), v.end(), subset_less); }

CMPairSpec::CMPairSpec(GaloisGroup group, std::vector<std::string> phi_names) : group_(std::move(group)) {
  int g = group_.g();
  if (!phi_names.empty() && static_cast<int>(phi_names.size()) != g)
    throw DomainError("phi_labels must list exactly g names");
  for (int j = 1; j <= g; ++j) {
    if (!phi_names.empty()) {
      phi_.push_back(phi_names[j - 1]);
      conj_.push_back("bar(" + phi_names[j - 1] + ")");
    } else if (group_.is_cyclic()) {
      int a = group_.cyclic_phi()[j - 1];
      phi_.push_back("[" + std::to_string(a) + "]");
      conj_.push_back("[" + std::to_string((a + g) % group_.modulus()) + "]");
    } else {
      phi_.push_back("phi" + std::to_string(j));
      conj_.push_back("bar(phi" + std::to_string(j) + ")");
    }
  }
}

const std::string& CMPairSpec::name(const EmbeddingLabel& x) const {
  return x.bar ? conj_.at(x.index - 1) : phi_.at(x.index - 1);
}

std::vector<Subset> orbit_of(const GaloisGroup& G, const Subset& I) {
  // closure under the generators suffices for a finite group
  std::vector<Subset> orbit = {I};
  std::vector<bool> seen(std::size_t{1} << I.g, false);
  seen[I.bits] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& s : G.generators()) {
      Subset J = act_subset(s, orbit[head]);
      if (!seen[J.bits]) {
        seen[J.bits] = true;
        orbit.push_back(J);
      }
    }
  }
  sort_subsets(orbit);
  return orbit;
}

std::vector<std::vector<Subset>> orbit_decomposition(const GaloisGroup& G) {
  int g = G.g();
  if (g > kMaxSubsetG) throw DimensionError("subset enumeration needs g <= 16");
  std::uint32_t total = std::uint32_t{1} << g;
  std::vector<bool> done(total, false);
  std::vector<std::vector<Subset>> out;
  // visiting by rank makes each orbit's minimum its discovery point
  for (std::uint32_t r = 0; r < total; ++r) {
    Subset I = subset_at_rank(g, r);
    if (done[I.bits]) continue;
    auto orbit = orbit_of(G, I);
    for (const auto& J : orbit) done[J.bits] = true;
    out.push_back(std::move(orbit));
  }
  // rank 0 is the empty set, so the orbit of the empty set is already first
  return out;
}

namespace {

Compagnon make_compagnon(std::vector<Subset> orbit) {
  Compagnon c;
  c.degree = orbit.size();
  for (const auto& I : orbit)
    if (!I.contains(1)) c.cm_type.push_back(I);
  c.orbit = std::move(orbit);
  return c;
}

}  // namespace

Compagnon reflex_type(const CMPairSpec& spec) {
  return make_compagnon(orbit_of(spec.group(), Subset(spec.g(), 0)));
}

std::vector<Compagnon> compagnons(const CMPairSpec& spec) {
  std::vector<Compagnon> out;
  for (auto& orbit : orbit_decomposition(spec.group())) out.push_back(make_compagnon(std::move(orbit)));
  return out;
}

std::vector<EmbeddingLabel> decode_cm_type(const Subset& I) {
  std::vector<EmbeddingLabel> out;
  for (int j = 1; j <= I.g; ++j) out.push_back({j, I.contains(j)});
  return out;
}

Subset encode_cm_type(int g, const std::vector<EmbeddingLabel>& labels) {
  Mask seen = 0, bars = 0;
  for (const auto& x : labels) {
    if (x.index < 1 || x.index > g) throw DomainError("embedding label index out of range");
    Mask b = Mask{1} << (x.index - 1);
    if (seen & b) throw DomainError("not a CM type: both members of a conjugate pair present");
    seen |= b;
    if (x.bar) bars |= b;
  }
  if (seen != full_mask(g)) throw DomainError("not a CM type: some conjugate pair is missing");
  return {g, bars};
}

std::vector<std::size_t> compagnon_type_elements(const GaloisGroup& G, const Subset& base) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (!act_subset(G.element(i), base).contains(1)) out.push_back(i);
  return out;
}

CMPairSpec compagnon_spec(const CMPairSpec& spec, const Compagnon& c) {
  int h = static_cast<int>(c.cm_type.size());
  if (h > kMaxGroupG) throw DimensionError("compagnon too large for group arithmetic");
  std::vector<int> where(std::size_t{1} << spec.g(), -1);
  for (int j = 0; j < h; ++j) {
    where[c.cm_type[j].bits] = j;
    where[c.cm_type[j].complement().bits] = j;
  }
  std::vector<SignedPerm> gens;
  for (const auto& s : spec.group().generators()) {
    std::vector<int> perm(h);
    Mask flips = 0;
    for (int j = 0; j < h; ++j) {
      Subset img = act_subset(s, c.cm_type[j]);
      int k = where[img.bits];
      if (k < 0) throw DomainError("compagnon orbit is not G-stable");
      perm[j] = k + 1;
      if (img.contains(1)) flips |= Mask{1} << k;
    }
    gens.emplace_back(Subset(h, flips), perm);
  }
  std::vector<std::string> names;
  for (const auto& I : c.cm_type) names.push_back(I.to_string());
  return CMPairSpec(GaloisGroup::from_generators(h, gens), names);
}

}  // namespace cmlab
