#include "cmlab/mu19.hpp"

#include <algorithm>
#include <sstream>

#include "cmlab/error.hpp"
#include "cmlab/reciprocity.hpp"

namespace cmlab::mu19 {

namespace {

int mod(int a) { return ((a % kModulus) + kModulus) % kModulus; }

std::string residue_set(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::string("[") + std::to_string(v[i]) + "]";
  return s + "}";
}

std::string render_part(const Generator& gen, const BigInt& c) {
  std::string sign = c > 0 ? "+" : "-";
  BigInt a = abs(c);
  return sign + a.get_str() + " x (" + gen.to_string() + ")";
}

}  // namespace

const std::vector<int>& phi() {
  static const std::vector<int> v = {0, 2, 3, 6, 10, 13, 14, 16, 17};
  return v;
}

const CMPairSpec& spec() {
  static const CMPairSpec s(GaloisGroup::from_cyclic_translation(kModulus, phi()));
  return s;
}

const std::vector<int>& reflex() {
  static const std::vector<int> v = [] {
    std::vector<int> out;
    for (int a = 0; a < kModulus; ++a)
      for (int b : phi())
        if (mod(a + b) == 0) out.push_back(a);
    return out;
  }();
  return v;
}

const CMPairSpec& reflex_spec() {
  static const CMPairSpec s(GaloisGroup::from_cyclic_translation(kModulus, reflex()));
  return s;
}

Subset I_of(int a) { return act_subset(reflex_spec().group().embed(a), Subset(kG, 0)); }
Subset L() { return Subset::of(kG, {5, 6}); }
Subset Lprime() { return Subset::of(kG, {4, 6, 7}); }

std::vector<int> compagnon_type(const Subset& base) {
  if (base.g != kG) throw DimensionError("base must be a subset of {1..9}");
  // [0] = phi_1 leaves [a].Psi exactly when 1 lands in [a].base
  std::vector<int> out;
  for (int a = 0; a < kModulus; ++a)
    if (act_subset(reflex_spec().group().embed(a), base).contains(1)) out.push_back(a);
  return out;
}

MonomialRelation lift(const IntVector& alpha) {
  if (alpha.size() != phi().size()) throw DimensionError("kernel vector must have 9 entries");
  MonomialRelation r = MonomialRelation::anti_weyl(kG, IntVector(std::size_t{1} << kG));
  for (std::size_t j = 0; j < alpha.size(); ++j) r.at(I_of(phi()[j])) += alpha[j];
  return r;
}

std::vector<IntVector> cubic_generators() {
  auto vec = [](std::initializer_list<std::pair<int, int>> terms) {
    IntVector v(phi().size());
    for (auto [res, c] : terms) {
      auto it = std::find(phi().begin(), phi().end(), res);
      v[it - phi().begin()] = c;
    }
    return v;
  };
  return {vec({{0, 1}, {2, -1}, {3, -1}, {6, 1}, {14, -1}, {17, 1}}),
          vec({{0, 1}, {3, -1}, {6, 1}, {10, -1}, {13, 1}, {16, -1}})};
}

Certificate factorization(std::size_t k) {
  if (k > 1) throw DomainError("there are two cubic generators");
  return reduce_to_low_degree(lift(cubic_generators()[k]), kG, {k == 0 ? L() : Lprime()});
}

namespace {

struct Report {
  IntLattice kernel{kG};
  int mt_dim = 0;
  std::vector<Subset> orbit_table;
  std::vector<int> recovered;
  std::vector<Compagnon> comps;
  std::vector<std::pair<MonomialRelation, Certificate>> factorizations;
};

Report build() {
  Report rep;
  rep.kernel = kernel_N(spec());
  rep.mt_dim = mt_dimension(spec());
  for (int a = 0; a < kModulus; ++a) {
    rep.orbit_table.push_back(I_of(a));
    if (!rep.orbit_table.back().contains(1)) rep.recovered.push_back(a);
  }
  rep.comps = compagnons(reflex_spec());
  for (std::size_t k = 0; k < 2; ++k)
    rep.factorizations.emplace_back(MonomialRelation::simple(spec(), cubic_generators()[k]), factorization(k));
  return rep;
}

}  // namespace

std::string report_text() {
  Report rep = build();
  std::ostringstream os;
  os << "E = Q(zeta_19), G = Z/18, conjugation [9]\n";
  os << "Phi   = " << residue_set(phi()) << "\n";
  os << "Phi_E = " << residue_set(reflex()) << "\n\n";

  os << "kernel N: rank " << rep.kernel.rank() << ", Mumford-Tate dimension " << rep.mt_dim << "\n";
  for (const auto& rel : relations_from_kernel(rep.kernel, spec()))
    os << "  " << to_string(rel.exponents) << "  " << render(rel) << "\n";
  os << "cubic generators:\n";
  for (const auto& alpha : cubic_generators()) {
    bool in = member(alpha, rep.kernel).has_value();
    os << "  " << render(MonomialRelation::simple(spec(), alpha)) << (in ? "  [in N]" : "  [NOT in N]") << "\n";
  }
  os << "\n";

  os << "orbit of {} (I([a]) = [a].Phi_E):\n";
  for (int a = 0; a < kModulus; ++a) os << "  I([" << a << "]) = " << rep.orbit_table[a].to_string() << "\n";
  os << "{[a] : 1 not in I([a])} = " << residue_set(rep.recovered) << "\n\n";

  os << "compagnons: " << rep.comps.size() << "\n";
  for (std::size_t i = 0; i < rep.comps.size(); ++i) {
    const auto& c = rep.comps[i];
    os << "  #" << i << " key " << c.key().to_string() << " degree " << c.degree << " type "
       << residue_set(compagnon_type(c.key())) << "\n";
  }
  for (const auto& [name, S] : {std::pair{"L ", L()}, {"L'", Lprime()}}) {
    bool in_reflex_orbit = std::find(rep.orbit_table.begin(), rep.orbit_table.end(), S) != rep.orbit_table.end();
    os << name << " = " << S.to_string() << (in_reflex_orbit ? " (in G.{})" : " (not in G.{})")
       << ", Phi = " << residue_set(compagnon_type(S)) << "\n";
  }
  os << "\n";

  os << "factorization through degree <= 2 relations:\n";
  for (const auto& [simple, cert] : rep.factorizations) {
    os << "  " << render(simple) << "\n";
    os << "    = " << render(cert.target) << "\n";
    for (const auto& [gen, c] : cert.parts) os << "    " << render_part(gen, c) << "\n";
    os << "    verified: " << (cert.verify() ? "yes" : "no") << "\n";
  }
  return os.str();
}

json report_json() {
  Report rep = build();
  json out;
  out["modulus"] = kModulus;
  out["phi"] = phi();
  out["phi_E"] = reflex();
  json rels = json::array();
  for (const auto& rel : relations_from_kernel(rep.kernel, spec())) rels.push_back(to_json(rel));
  out["kernel"] = {{"basis", to_json(rep.kernel.basis())}, {"relations", rels}, {"mt_dimension", rep.mt_dim}};
  json table = json::object();
  for (int a = 0; a < kModulus; ++a) table["[" + std::to_string(a) + "]"] = to_json(rep.orbit_table[a]);
  out["orbit"] = table;
  out["recovered_phi"] = rep.recovered;
  json comps = json::array();
  for (const auto& c : rep.comps)
    comps.push_back({{"key", to_json(c.key())}, {"degree", c.degree}, {"type", compagnon_type(c.key())}});
  out["compagnons"] = comps;
  out["phi_L"] = compagnon_type(L());
  out["phi_Lprime"] = compagnon_type(Lprime());
  json certs = json::array();
  for (const auto& [simple, cert] : rep.factorizations)
    certs.push_back({{"relation", to_json(simple)}, {"certificate", to_json(cert)}, {"verified", cert.verify()}});
  out["certificates"] = certs;
  return out;
}

}  // namespace cmlab::mu19
