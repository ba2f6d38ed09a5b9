#include "cmlab/reciprocity.hpp"

#include <algorithm>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

std::size_t subset_count(int g) {
  if (g < 1 || g > kMaxSubsetG) throw DimensionError("subset enumeration needs 1 <= g <= 16");
  return std::size_t{1} << g;
}

std::string power(const std::string& sym, const BigInt& e) {
  return e == 1 ? sym : sym + "^" + e.get_str();
}

}  // namespace

MonomialRelation MonomialRelation::simple(const CMPairSpec& spec, IntVector exps) {
  if (static_cast<int>(exps.size()) != spec.g()) throw DimensionError("relation length must be g");
  MonomialRelation r;
  r.side = Side::simple;
  r.g = spec.g();
  r.exponents = std::move(exps);
  r.symbols = spec.phi_names();
  return r;
}

MonomialRelation MonomialRelation::anti_weyl(int g, IntVector exps, BigInt tau) {
  if (exps.size() != subset_count(g)) throw DimensionError("relation length must be 2^g");
  MonomialRelation r;
  r.side = Side::anti_weyl;
  r.g = g;
  r.exponents = std::move(exps);
  r.tau = std::move(tau);
  return r;
}

BigInt& MonomialRelation::at(const Subset& I) { return exponents.at(subset_rank(I)); }
const BigInt& MonomialRelation::at(const Subset& I) const { return exponents.at(subset_rank(I)); }

std::string render(const MonomialRelation& r) {
  std::vector<std::string> lhs, rhs;
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    const BigInt& e = r.exponents[i];
    if (e == 0) continue;
    std::string sym = r.side == Side::simple
                          ? "Theta_" + r.symbols.at(i)
                          : "Theta_" + subset_at_rank(r.g, static_cast<std::uint32_t>(i)).to_string();
    if (e > 0)
      lhs.push_back(power(sym, e));
    else
      rhs.push_back(power(sym, -e));
  }
  if (r.tau > 0) lhs.push_back(power("(2pi i)", r.tau));
  if (r.tau < 0) rhs.push_back(power("(2pi i)", -r.tau));
  auto join = [](const std::vector<std::string>& v) {
    if (v.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
    return s;
  };
  return join(lhs) + " ~ " + join(rhs);
}

IntVector flatten(const MonomialRelation& r) {
  if (r.side != Side::anti_weyl) throw DomainError("flatten applies to anti-Weyl relations");
  IntVector v = r.exponents;
  v.push_back(r.tau);
  return v;
}

IntVector unit_vector(const Subset& I) {
  IntVector v(subset_count(I.g));
  v[subset_rank(I)] = 1;
  return v;
}

IntMatrix pairing_matrix(const CMPairSpec& spec) {
  const auto& G = spec.group();
  int g = spec.g();
  IntMatrix m(G.order(), g);
  for (std::size_t s = 0; s < G.order(); ++s)
    for (int k = 1; k <= g; ++k) {
      EmbeddingLabel y = act_embedding(G.element(s), {k, false});
      m(s, y.index - 1) = y.bar ? -1 : 1;
    }
  return m;
}

IntLattice kernel_N(const CMPairSpec& spec) { return kernel_basis(pairing_matrix(spec)); }

int mt_dimension(const CMPairSpec& spec) {
  return spec.g() + 1 - static_cast<int>(kernel_N(spec).rank());
}

IntMatrix rec_star_antiweyl(int g) {
  if (g < 2 || g > kMaxSubsetG) throw DimensionError("rec_star_antiweyl needs 2 <= g <= 16");
  std::size_t n = subset_count(g);
  IntMatrix m(2 * g, n);
  for (std::uint32_t r = 0; r < n; ++r) {
    Subset I = subset_at_rank(g, r);
    for (int j = 1; j <= g; ++j) m(I.contains(j) ? g + j - 1 : j - 1, r) = 1;
  }
  return m;
}

IntLattice quad_lattice(int g, std::size_t budget) {
  std::size_t n = subset_count(g);
  std::vector<IntVector> gens;
  std::size_t examined = 0;
  for (std::uint32_t ri = 0; ri < n; ++ri) {
    Subset I = subset_at_rank(g, ri);
    for (std::uint32_t rj = ri; rj < n; ++rj) {
      Subset J = subset_at_rank(g, rj);
      Mask meet = I.bits & J.bits, diff = I.bits ^ J.bits;
      // K = meet + s for s a submask of diff; L is then forced
      for (Mask s = diff;; s = (s - 1) & diff) {
        Subset K(g, meet | s), L(g, meet | (diff & ~s));
        std::uint32_t rk = subset_rank(K), rl = subset_rank(L);
        if (rk <= rl && std::pair(ri, rj) < std::pair(rk, rl)) {
          if (++examined > budget) throw BudgetError("quad_lattice enumeration over budget");
          IntVector v(n);
          v[ri] += 1;
          v[rj] += 1;
          v[rk] -= 1;
          v[rl] -= 1;
          if (!is_zero(v)) gens.push_back(std::move(v));
        }
        if (s == 0) break;
      }
    }
  }
  return IntLattice::span(gens, n);
}

IntLattice lattice_M(int g) {
  std::vector<IntVector> gens = {unit_vector(Subset(g, 0))};
  for (int j = 1; j <= g; ++j) gens.push_back(unit_vector(Subset::of(g, {j})));
  return IntLattice::span(gens, subset_count(g));
}

std::vector<MonomialRelation> relations_from_kernel(const IntLattice& L, const CMPairSpec& spec) {
  if (static_cast<int>(L.dim()) != spec.g()) throw DimensionError("kernel dimension must be g");
  std::vector<MonomialRelation> out;
  for (auto& row : L.basis().row_list()) out.push_back(MonomialRelation::simple(spec, std::move(row)));
  return out;
}

std::vector<MonomialRelation> relations_from_kernel(const IntLattice& L, int g) {
  if (L.dim() != subset_count(g)) throw DimensionError("kernel dimension must be 2^g");
  std::vector<MonomialRelation> out;
  for (auto& row : L.basis().row_list()) out.push_back(MonomialRelation::anti_weyl(g, std::move(row)));
  return out;
}

MonomialRelation theta_generator_reduction(const Subset& I) {
  int r = I.size();
  if (r < 2) throw DomainError("theta_generator_reduction needs |I| >= 2");
  IntVector v = unit_vector(I);
  v[subset_rank(Subset(I.g, 0))] += r - 1;
  for (int i : I.elements()) v[subset_rank(Subset::of(I.g, {i}))] -= 1;
  return MonomialRelation::anti_weyl(I.g, std::move(v));
}

EquivCertificate equiv_class_check(const Subset& I, const Subset& Iprime) {
  if (I.g != Iprime.g) throw DimensionError("equiv_class_check: mismatched g");
  if (I.size() != Iprime.size()) throw DomainError("equiv_class_check needs |I| = |I'|");
  int g = I.g;
  IntLattice Q = quad_lattice(g);
  std::vector<IntVector> gens = {unit_vector(Subset(g, 0))};
  for (int j = 1; j <= g; ++j) gens.push_back(unit_vector(Subset::of(g, {j})));
  std::size_t nm = gens.size();
  for (auto& r : Q.basis().row_list()) gens.push_back(std::move(r));

  EquivCertificate cert;
  cert.difference = unit_vector(I);
  cert.difference[subset_rank(Iprime)] -= 1;
  cert.m_coeffs.assign(nm, 0);
  cert.n_coeffs.assign(gens.size() - nm, 0);
  CombinationSolver solver(gens, subset_count(g));
  auto sol = solver.solve(cert.difference);
  if (!sol) throw TheoremViolation("eps_I - eps_I' not in M + N'");
  for (const auto& [k, c] : *sol) (k < nm ? cert.m_coeffs[k] : cert.n_coeffs[k - nm]) = c;
  return cert;
}

}  // namespace cmlab
