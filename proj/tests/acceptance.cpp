// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>

#include "cmlab/error.hpp"
#include "cmlab/hodge.hpp"
#include "cmlab/mu19.hpp"
#include "cmlab/reciprocity.hpp"
#include "cmlab/sl2check.hpp"
#include "oracles.hpp"

using namespace cmlab;

namespace {

// Records the first failed condition of a criterion.
struct Ctx {
  std::string failure;
  void expect(bool ok, const std::string& what) {
    if (!ok && failure.empty()) failure = what;
  }
};

using SlotSet = std::vector<std::pair<std::uint32_t, int>>;

std::set<SlotSet> as_set(const std::vector<CycleIndex>& v) {
  std::set<SlotSet> s;
  for (const auto& c : v) {
    SlotSet t;
    for (const auto& x : c.slots) t.emplace_back(x.label, x.copy);
    std::sort(t.begin(), t.end());
    s.insert(t);
  }
  return s;
}

Subset S9(std::initializer_list<int> xs) { return Subset::of(9, xs); }

void kernel_mu19(Ctx& c) {
  IntVector a = {1, -1, -1, 1, 0, 0, -1, 0, 1};  // [0]-[2]-[3]+[6]-[14]+[17]
  IntVector b = {1, 0, -1, 1, -1, 1, 0, -1, 0};  // [0]-[3]+[6]-[10]+[13]-[16]
  IntLattice N = kernel_N(mu19::spec());
  c.expect(hnf(N.basis()) == hnf(IntMatrix::from_rows({a, b}, 9)), "kernel lattice differs");
  c.expect(render(MonomialRelation::simple(mu19::spec(), a)) ==
               "Theta_[0] Theta_[6] Theta_[17] ~ Theta_[2] Theta_[3] Theta_[14]",
           "first cubic render");
  c.expect(render(MonomialRelation::simple(mu19::spec(), b)) ==
               "Theta_[0] Theta_[6] Theta_[13] ~ Theta_[3] Theta_[10] Theta_[16]",
           "second cubic render");
}

void orbit_table(Ctx& c) {
  const std::vector<Subset> table = {
      S9({}),           S9({1, 4, 6, 7, 8}),       S9({2, 5, 6, 7, 8, 9}),           S9({3, 7, 9}),
      S9({1, 8}),       S9({1, 2, 4, 6, 7, 8, 9}), S9({2, 3, 5, 7, 8, 9}),           S9({1, 3, 9}),
      S9({1, 2, 4, 8}), S9({1, 2, 3, 4, 5, 6, 7, 8, 9}), S9({2, 3, 5, 9}),        S9({1, 3, 4}),
      S9({1, 2, 4, 5, 6, 8}), S9({2, 3, 4, 5, 6, 7, 9}), S9({3, 5}),              S9({1, 4, 6}),
      S9({2, 4, 5, 6, 7, 8}), S9({3, 5, 6, 7, 9})};
  for (int a = 0; a < 18; ++a) c.expect(mu19::I_of(a) == table[a], "I([" + std::to_string(a) + "])");
}

void compagnons_mu19(Ctx& c) {
  c.expect(mu19::compagnon_type(mu19::L()) == std::vector<int>{5, 7, 8, 9, 10, 11, 12, 13, 15}, "Phi_L");
  c.expect(mu19::compagnon_type(mu19::Lprime()) == std::vector<int>{4, 6, 7, 8, 9, 10, 11, 12, 14}, "Phi_L'");
  std::vector<int> rec;
  for (int a = 0; a < 18; ++a)
    if (!mu19::I_of(a).contains(1)) rec.push_back(a);
  c.expect(rec == std::vector<int>{0, 2, 3, 6, 10, 13, 14, 16, 17}, "reflex recovery");
}

void factorization_mu19(Ctx& c) {
  for (std::size_t k = 0; k < 2; ++k) {
    Certificate cert = reduce_to_low_degree(mu19::lift(mu19::cubic_generators()[k]), 9);
    c.expect(cert.verify(), "certificate " + std::to_string(k));
  }
  for (std::size_t k = 0; k < 2; ++k) c.expect(mu19::factorization(k).verify(), "steered certificate");
  Subset L = S9({5, 6});
  c.expect(union_meet_balanced({mu19::I_of(0), mu19::I_of(17), mu19::I_of(3), L}), "(I0, I17, I3, L)");
  c.expect(union_meet_balanced({mu19::I_of(2), mu19::I_of(14), mu19::I_of(6), L}), "(I2, I14, I6, L)");
}

void quad_lattice_kernel(Ctx& c) {
  for (int g = 3; g <= 4; ++g) {
    IntLattice K = kernel_basis(rec_star_antiweyl(g));
    c.expect(lattice_equal(quad_lattice(g), K), "g=" + std::to_string(g) + " lattices differ");
    c.expect(K.rank() == (std::size_t{1} << g) - (g + 1), "g=" + std::to_string(g) + " rank");
  }
}

void enumerations_agree(Ctx& c) {
  for (int g = 2; g <= 3; ++g)
    for (int n = 1; n <= 2; ++n)
      for (int p = 1; p <= 2; ++p) {
        std::string tag = "g=" + std::to_string(g) + " n=" + std::to_string(n) + " p=" + std::to_string(p);
        auto poh = as_set(pohlmann_basis(LabelAction::anti_weyl(GaloisGroup::full_hyperoctahedral(g)), p, n));
        c.expect(!poh.empty(), tag + " empty");
        c.expect(poh == as_set(bp_multisets(g, p, n)), tag + " bp");
        if (p == 2) {
          std::vector<CycleIndex> v;
          for (const auto& q : b2_quadruples(g, n)) v.push_back(quadruple_cycle(q));
          c.expect(poh == as_set(v), tag + " b2");
        }
      }
}

void weyl4_reduction(Ctx& c) {
  int g = 4;
  LabelAction A = LabelAction::anti_weyl(GaloisGroup::full_hyperoctahedral(g));
  LowDegreeReducer reducer(g);
  auto basis = pohlmann_basis(A, 3, 1);
  c.expect(!basis.empty(), "no (3,3) cycles");
  std::size_t failures = 0;
  for (const auto& cyc : basis) {
    try {
      if (!reducer.reduce(relation_of_cycle(A, cyc)).verify()) ++failures;
    } catch (const TheoremViolation&) {
      ++failures;
    }
  }
  c.expect(failures == 0, std::to_string(failures) + " of " + std::to_string(basis.size()) + " failed");
}

void dichotomy(Ctx& c) {
  for (int g = 3; g <= 4; ++g) {
    GaloisGroup W = GaloisGroup::full_hyperoctahedral(g);
    Mask half = full_mask(g) & ~Mask{1};
    for (Mask i = 0; i <= half; i += 2)
      for (Mask j = 0; j <= half; j += 2)
        for (Mask k = 0; k <= half; k += 2)
          for (Mask l = 0; l <= half; l += 2) {
            Quad q{Subset(g, i), Subset(g, j), Subset(g, k), Subset(g, l)};
            auto w = wedge_slots(q);
            int lo = 4, hi = 0;
            for (const auto& t : W.elements()) {
              std::array<Subset, 4> img;
              for (int x = 0; x < 4; ++x) img[x] = act_subset(t, w[x]);
              int n = slots_containing_one(img);
              lo = std::min(lo, n);
              hi = std::max(hi, n);
            }
            if (union_meet_balanced(q))
              c.expect(lo == 2 && hi == 2, "balanced quadruple leaves 2 slots");
            else
              c.expect(hi >= 3, "unbalanced quadruple never reaches 3 slots");
          }
  }
}

void sl2_triples(Ctx& c) {
  for (int g = 3; g <= 4; ++g)
    for (std::uint32_t r = 0; r < (std::uint32_t{1} << (g - 1)); ++r) {
      Subset U = subset_at_rank(g, r);
      Sl2Report rep = check_sl2(U);
      c.expect(rep.ok(), "U=" + U.to_string() + ": " + rep.failure);
    }
  c.expect(!check_sl2(Subset::of(3, {2}), 2).ok(), "negative control passed");
}

void property_suites(Ctx& c) {
  std::mt19937 rng(7);
  // group axioms, exhaustive for g <= 3
  for (int g = 1; g <= 3; ++g) {
    GaloisGroup W = GaloisGroup::full_hyperoctahedral(g);
    const auto& els = W.elements();
    std::size_t order = std::size_t{1} << g;
    for (int k = 2; k <= g; ++k) order *= k;
    c.expect(els.size() == order, "order of W_g");
    SignedPerm e = SignedPerm::identity(g);
    for (const auto& a : els) {
      c.expect(compose(a, e) == a && compose(e, a) == a, "identity");
      c.expect(compose(a, inverse(a)) == e, "inverse");
      for (const auto& b : els) {
        c.expect(oracle::from_lib(compose(a, b)) == oracle::mul(oracle::from_lib(a), oracle::from_lib(b)),
                 "composition vs oracle");
        for (const auto& x : els) c.expect(compose(compose(a, b), x) == compose(a, compose(b, x)), "associativity");
      }
    }
  }
  // randomized for g <= 12, plus action axioms and rho
  for (int trial = 0; trial < 400; ++trial) {
    int g = 1 + static_cast<int>(rng() % 12);
    SignedPerm a = oracle::to_lib(oracle::random_signed_perm(g, rng));
    SignedPerm b = oracle::to_lib(oracle::random_signed_perm(g, rng));
    SignedPerm x = oracle::to_lib(oracle::random_signed_perm(g, rng));
    c.expect(compose(compose(a, b), x) == compose(a, compose(b, x)), "random associativity");
    c.expect(compose(inverse(a), a) == SignedPerm::identity(g), "random inverse");
    Subset I(g, static_cast<Mask>(rng()) & full_mask(g));
    c.expect(act_subset(compose(a, b), I) == act_subset(a, act_subset(b, I)), "action composes");
    c.expect(act_subset(SignedPerm::identity(g), I) == I, "identity acts trivially");
    c.expect(act_subset(SignedPerm::rho(g), I) == I.complement(), "rho complements");
    c.expect(act_subset(a, I.complement()) == act_subset(a, I).complement(), "action commutes with rho");
  }
  // HNF idempotence and unimodular invariance
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 5, cols = 1 + rng() % 6;
    IntMatrix m(r, cols);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<int>(rng() % 19) - 9;
    IntMatrix h = hnf(m);
    c.expect(hnf(h) == h, "HNF idempotence");
    IntMatrix u = IntMatrix::identity(r);
    for (int s = 0; s < 10; ++s) {
      std::size_t p = rng() % r, q = rng() % r;
      if (p == q) continue;
      int f = static_cast<int>(rng() % 7) - 3;
      for (std::size_t k = 0; k < r; ++k) u(p, k) += f * u(q, k);
    }
    c.expect(hnf(u * m) == h, "HNF unimodular invariance");
  }
  // certificates re-verify, and fail once tampered
  LowDegreeReducer reducer(4);
  auto rows = quad_lattice(4).basis().row_list();
  for (int trial = 0; trial < 20; ++trial) {
    IntVector v(16);
    for (const auto& row : rows) {
      int k = static_cast<int>(rng() % 5) - 2;
      for (std::size_t i = 0; i < 16; ++i) v[i] += k * row[i];
    }
    Certificate cert = reducer.reduce(MonomialRelation::anti_weyl(4, v));
    Certificate copy = cert;
    c.expect(copy.verify(), "certificate re-verification");
    if (!copy.parts.empty()) {
      copy.parts[0].second += 1;
      c.expect(!copy.verify(), "tampered certificate verified");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Ctx&)>>> criteria = {
      {"mu19 kernel lattice and cubic relations", kernel_mu19},
      {"mu19 orbit table", orbit_table},
      {"mu19 compagnon CM types and reflex recovery", compagnons_mu19},
      {"mu19 factorization certificates", factorization_mu19},
      {"quadratic lattice equals ker rec* (g = 3, 4)", quad_lattice_kernel},
      {"Pohlmann, bp and b2 enumerations agree", enumerations_agree},
      {"g = 4 (3,3) relations reduce to degree <= 2", weyl4_reduction},
      {"balance dichotomy (g = 3, 4)", dichotomy},
      {"sl2 triples and negative control", sl2_triples},
      {"property suites", property_suites},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Ctx c;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      if (c.failure.empty()) c.failure = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = c.failure.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first;
    if (!ok) std::cout << "  [" << c.failure << "]";
    std::cout << "  (" << secs << " s)\n";
  }
  return failed ? 1 : 0;
}
