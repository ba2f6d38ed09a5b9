#include "cmlab/hodge.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "cmlab/error.hpp"

namespace cmlab {

// ---------------------------------------------------------------- labels

LabelAction LabelAction::simple(const CMPairSpec& spec) {
  LabelAction A;
  A.g_ = spec.g();
  A.half_ = static_cast<std::uint32_t>(spec.g());
  auto label_of = [&](std::uint32_t r) {
    return r < A.half_ ? EmbeddingLabel{static_cast<int>(r) + 1, false}
                       : EmbeddingLabel{static_cast<int>(r - A.half_) + 1, true};
  };
  for (std::uint32_t r = 0; r < A.size(); ++r) A.names_.push_back(spec.name(label_of(r)));
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& s : spec.group().elements()) {
    std::vector<std::uint32_t> img(A.size());
    for (std::uint32_t r = 0; r < A.size(); ++r) {
      EmbeddingLabel y = act_embedding(s, label_of(r));
      img[r] = (y.bar ? A.half_ : 0) + static_cast<std::uint32_t>(y.index - 1);
    }
    if (seen.insert(img).second) A.images_.push_back(std::move(img));
  }
  return A;
}

LabelAction LabelAction::anti_weyl(const GaloisGroup& G) {
  if (G.g() > kMaxSubsetG) throw DimensionError("subset enumeration needs g <= 16");
  LabelAction A;
  A.anti_weyl_ = true;
  A.g_ = G.g();
  A.half_ = std::uint32_t{1} << (G.g() - 1);
  for (std::uint32_t r = 0; r < A.size(); ++r) A.names_.push_back(subset_at_rank(A.g_, r).to_string());
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& s : G.elements()) {
    std::vector<std::uint32_t> img(A.size());
    for (std::uint32_t r = 0; r < A.size(); ++r) img[r] = subset_rank(act_subset(s, subset_at_rank(A.g_, r)));
    if (seen.insert(img).second) A.images_.push_back(std::move(img));
  }
  return A;
}

std::string LabelAction::name(std::uint32_t rank) const { return names_.at(rank); }

bool satisfies_pohlmann(const LabelAction& A, const CycleIndex& c) {
  for (const auto& img : A.images()) {
    std::size_t hol = 0;
    for (const auto& s : c.slots) hol += A.holomorphic(img[s.label]);
    if (2 * hol != c.slots.size()) return false;
  }
  return true;
}

CycleIndex act_on_cycle(const LabelAction& A, std::size_t image, const CycleIndex& c) {
  CycleIndex out;
  for (const auto& s : c.slots) out.slots.push_back({A.images().at(image)[s.label], s.copy});
  std::sort(out.slots.begin(), out.slots.end());
  return out;
}

std::string render(const CycleIndex& c, const LabelAction& A) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.slots.size(); ++i)
    s += (i ? ", " : "") + A.name(c.slots[i].label) + "@" + std::to_string(c.slots[i].copy);
  return s + ")";
}

// ---------------------------------------------------------------- enumeration

namespace {

void check_budget(std::size_t N, int k, std::size_t budget) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), N, static_cast<unsigned long>(k));
  if (c > BigInt(std::to_string(budget)))
    throw BudgetError("enumeration of C(" + std::to_string(N) + "," + std::to_string(k) + ") = " + c.get_str() +
                      " candidates exceeds budget " + std::to_string(budget));
}

Slot slot_of(std::uint32_t f, int n) { return {f / static_cast<std::uint32_t>(n), static_cast<int>(f % n) + 1}; }

// Depth-first search over increasing flattened slots with per-pattern
// holomorphic counters.
class PohlmannSearch {
 public:
  PohlmannSearch(const LabelAction& A, int p, int n) : p_(p), n_(n), N_(A.size() * n), hol_in_(A.size()) {
    std::set<std::vector<bool>> patterns;
    for (const auto& img : A.images()) {
      std::vector<bool> pat(A.size());
      for (std::uint32_t x = 0; x < A.size(); ++x) pat[x] = A.holomorphic(img[x]);
      patterns.insert(pat);
    }
    std::size_t m = 0;
    for (const auto& pat : patterns) {
      for (std::uint32_t x = 0; x < A.size(); ++x)
        if (pat[x]) hol_in_[x].push_back(m);
      ++m;
    }
    npat_ = m;
  }

  // All solutions whose first slot is f0.
  std::vector<CycleIndex> run_from(std::uint32_t f0) const {
    std::vector<CycleIndex> out;
    std::vector<int> cnt(npat_, 0);
    std::vector<std::uint32_t> chosen;
    if (push(f0, cnt, chosen)) dfs(f0 + 1, cnt, chosen, out);
    return out;
  }

 private:
  bool push(std::uint32_t f, std::vector<int>& cnt, std::vector<std::uint32_t>& chosen) const {
    chosen.push_back(f);
    for (std::size_t m : hol_in_[f / n_]) ++cnt[m];
    int k = static_cast<int>(chosen.size());
    for (int c : cnt)
      if (c > p_ || k - c > p_) return false;
    return true;
  }
  void pop(std::vector<int>& cnt, std::vector<std::uint32_t>& chosen) const {
    for (std::size_t m : hol_in_[chosen.back() / n_]) --cnt[m];
    chosen.pop_back();
  }
  void dfs(std::uint32_t start, std::vector<int>& cnt, std::vector<std::uint32_t>& chosen,
           std::vector<CycleIndex>& out) const {
    if (static_cast<int>(chosen.size()) == 2 * p_) {
      CycleIndex c;
      for (auto f : chosen) c.slots.push_back(slot_of(f, n_));
      out.push_back(std::move(c));
      return;
    }
    std::uint32_t need = 2 * p_ - static_cast<std::uint32_t>(chosen.size());
    for (std::uint32_t f = start; f + need <= N_; ++f) {
      if (push(f, cnt, chosen)) dfs(f + 1, cnt, chosen, out);
      pop(cnt, chosen);
    }
  }

  int p_, n_;
  std::uint32_t N_;
  std::vector<std::vector<std::size_t>> hol_in_;
  std::size_t npat_ = 0;
};

}  // namespace

std::vector<CycleIndex> pohlmann_basis(const LabelAction& A, int p, int n, EnumOptions opt) {
  if (p < 0 || n < 1) throw DomainError("pohlmann_basis needs p >= 0 and n >= 1");
  if (p == 0) return {CycleIndex{}};
  std::size_t N = static_cast<std::size_t>(A.size()) * n;
  check_budget(N, 2 * p, opt.budget);
  PohlmannSearch search(A, p, n);
  std::uint32_t firsts = static_cast<std::uint32_t>(N) >= static_cast<std::uint32_t>(2 * p)
                             ? static_cast<std::uint32_t>(N - 2 * p + 1)
                             : 0;
  std::vector<std::vector<CycleIndex>> parts(firsts);
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, firsts));
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t f; (f = next++) < firsts;) parts[f] = search.run_from(f);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::vector<CycleIndex> out;
  for (auto& part : parts)
    for (auto& c : part) out.push_back(std::move(c));
  return out;
}

std::vector<CycleIndex> bp_multisets(int g, int p, int n, std::size_t budget) {
  if (g < 1 || g > kMaxSubsetG) throw DimensionError("bp_multisets needs 1 <= g <= 16");
  if (p < 0 || n < 1) throw DomainError("bp_multisets needs p >= 0 and n >= 1");
  const std::uint32_t N = (std::uint32_t{1} << g) * static_cast<std::uint32_t>(n);
  std::vector<Mask> mask(N);
  for (std::uint32_t f = 0; f < N; ++f) mask[f] = subset_at_rank(g, f / n).bits;

  std::vector<CycleIndex> out;
  std::vector<int> cov(g, 0);
  std::vector<std::uint32_t> chosen;
  std::size_t nodes = 0;
  auto dfs = [&](auto&& self, std::uint32_t start) -> void {
    if (++nodes > budget) throw BudgetError("bp_multisets search exceeds budget");
    int left = 2 * p - static_cast<int>(chosen.size());
    for (int j = 0; j < g; ++j)
      if (cov[j] > p || p - cov[j] > left) return;
    if (left == 0) {
      CycleIndex c;
      for (auto f : chosen) c.slots.push_back(slot_of(f, n));
      out.push_back(std::move(c));
      return;
    }
    for (std::uint32_t f = start; f + left <= N; ++f) {
      chosen.push_back(f);
      for (int j = 0; j < g; ++j) cov[j] += (mask[f] >> j) & 1;
      self(self, f + 1);
      for (int j = 0; j < g; ++j) cov[j] -= (mask[f] >> j) & 1;
      chosen.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

// ---------------------------------------------------------------- quadruples

bool union_meet_balanced(const Quad& q) {
  return (q.I.bits | q.J.bits) == (q.K.bits | q.L.bits) && (q.I.bits & q.J.bits) == (q.K.bits & q.L.bits);
}

std::array<Subset, 4> wedge_slots(const Quad& q) { return {q.I, q.J, q.K.complement(), q.L.complement()}; }

int slots_containing_one(const std::array<Subset, 4>& slots) {
  int c = 0;
  for (const auto& s : slots) c += s.contains(1);
  return c;
}

std::vector<Quadruple> b2_quadruples(int g, int n, std::size_t budget) {
  if (g < 1 || g > kMaxSubsetG) throw DimensionError("b2_quadruples needs 1 <= g <= 16");
  if (n < 1) throw DomainError("b2_quadruples needs n >= 1");
  const std::uint32_t half = std::uint32_t{1} << (g - 1);
  std::vector<Quadruple> out;
  std::size_t examined = 0;
  for (std::uint32_t ri = 0; ri < half; ++ri) {
    Subset I = subset_at_rank(g, ri);
    for (std::uint32_t rj = ri; rj < half; ++rj) {
      Subset J = subset_at_rank(g, rj);
      Mask meet = I.bits & J.bits, diff = I.bits ^ J.bits;
      for (Mask s = diff;; s = (s - 1) & diff) {
        Quad q{I, J, Subset(g, meet | s), Subset(g, meet | (diff & ~s))};
        std::uint32_t rkc = subset_rank(q.K.complement()), rlc = subset_rank(q.L.complement());
        if (rkc <= rlc) {
          for (int l1 = 1; l1 <= n; ++l1)
            for (int l2 = 1; l2 <= n; ++l2) {
              if (std::pair(ri, l1) >= std::pair(rj, l2)) continue;
              for (int l3 = 1; l3 <= n; ++l3)
                for (int l4 = 1; l4 <= n; ++l4) {
                  if (std::pair(rkc, l3) >= std::pair(rlc, l4)) continue;
                  if (++examined > budget) throw BudgetError("b2_quadruples exceeds budget");
                  out.push_back({q, {l1, l2, l3, l4}});
                }
            }
        }
        if (s == 0) break;
      }
    }
  }
  return out;
}

CycleIndex quadruple_cycle(const Quadruple& q) {
  auto w = wedge_slots(q.q);
  CycleIndex c;
  for (int i = 0; i < 4; ++i) c.slots.push_back({subset_rank(w[i]), q.copies[i]});
  std::sort(c.slots.begin(), c.slots.end());
  return c;
}

// ---------------------------------------------------------------- cycles and relations

CycleIndex kernel_to_cycle(const CMPairSpec& spec, const IntVector& alpha, int n) {
  int g = spec.g();
  if (static_cast<int>(alpha.size()) != g) throw DimensionError("kernel vector must have g entries");
  if (!member(alpha, kernel_N(spec))) throw DomainError("vector is not in the kernel N");
  BigInt na = 0;
  for (const auto& a : alpha) na = std::max<BigInt>(na, abs(a));
  if (na > n) throw DomainError("n = " + std::to_string(n) + " is below n(alpha) = " + na.get_str());
  CycleIndex c;
  for (int l = 1; l <= n; ++l)
    for (int j = 0; j < g; ++j) {
      if (alpha[j] >= l) c.slots.push_back({static_cast<std::uint32_t>(j), l});
      if (alpha[j] <= -l) c.slots.push_back({static_cast<std::uint32_t>(g + j), l});
    }
  std::sort(c.slots.begin(), c.slots.end());
  return c;
}

IntVector kernel_vector_of_cycle(const LabelAction& A, const CycleIndex& c) {
  if (A.is_anti_weyl()) throw DomainError("kernel_vector_of_cycle applies to simple CM pairs");
  IntVector a(A.half());
  for (const auto& s : c.slots) {
    if (A.holomorphic(s.label))
      a[s.label] += 1;
    else
      a[s.label - A.half()] -= 1;
  }
  return a;
}

MonomialRelation relation_of_cycle(const LabelAction& A, const CycleIndex& c) {
  if (!A.is_anti_weyl()) throw DomainError("relation_of_cycle applies to anti-Weyl cycles");
  int g = A.g();
  IntVector v(A.size());
  std::size_t hol = 0;
  for (const auto& s : c.slots) {
    if (A.holomorphic(s.label)) {
      ++hol;
      v[s.label] += 1;
    } else {
      v[subset_rank(subset_at_rank(g, s.label).complement())] -= 1;
    }
  }
  if (2 * hol != c.slots.size()) throw DomainError("unbalanced cycle: half the slots must contain 1");
  return MonomialRelation::anti_weyl(g, std::move(v));
}

// ---------------------------------------------------------------- certificates

Generator Generator::degree1(const Subset& I) { return {Kind::degree1, {I, I, I, I}}; }
Generator Generator::quadratic(const Quad& q) { return {Kind::quadratic, q}; }

IntVector Generator::vector() const {
  int g = q.I.g;
  IntVector v((std::size_t{1} << g) + 1);
  if (kind == Kind::degree1) {
    v[subset_rank(q.I)] += 1;
    v[subset_rank(q.I.complement())] += 1;
    v.back() = -1;
  } else {
    v[subset_rank(q.I)] += 1;
    v[subset_rank(q.J)] += 1;
    v[subset_rank(q.K)] -= 1;
    v[subset_rank(q.L)] -= 1;
  }
  return v;
}

std::string Generator::to_string() const {
  if (kind == Kind::degree1)
    return "Theta_" + q.I.to_string() + " Theta_" + q.I.complement().to_string() + " ~ (2pi i)";
  return "Theta_" + q.I.to_string() + " Theta_" + q.J.to_string() + " ~ Theta_" + q.K.to_string() + " Theta_" +
         q.L.to_string();
}

bool Certificate::verify() const {
  IntVector sum = flatten(target);
  for (auto& x : sum) x = -x;
  for (const auto& [gen, c] : parts) {
    IntVector v = gen.vector();
    if (v.size() != sum.size()) return false;
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += c * v[i];
  }
  return is_zero(sum);
}

LowDegreeReducer::LowDegreeReducer(int g) : g_(g) {
  if (g < 1 || g > kMaxSubsetG) throw DimensionError("reduction needs 1 <= g <= 16");
  const std::uint32_t half = std::uint32_t{1} << (g - 1);
  for (std::uint32_t r = 0; r < half; ++r) family_.push_back(Generator::degree1(subset_at_rank(g, r)));
  // (I, {}, I - {i}, {i}) with i = max I: together with eps_{} and the
  // singletons these are unitriangular, so they span the quadratic lattice.
  for (std::uint32_t r = 0; r < half; ++r) {
    Subset I = subset_at_rank(g, r);
    if (I.size() < 2) continue;
    int i = I.elements().back();
    Subset single = Subset::of(g, {i});
    family_.push_back(Generator::quadratic({I, Subset(g, 0), Subset(g, I.bits & ~single.bits), single}));
  }
}

LowDegreeReducer::~LowDegreeReducer() = default;

namespace {

using Sparse = std::map<std::uint32_t, long>;

Sparse sparse_of(const Quad& q) {
  Sparse s;
  for (const auto& [X, e] : {std::pair{q.I, 1}, {q.J, 1}, {q.K, -1}, {q.L, -1}}) {
    long& v = s[subset_rank(X)];
    v += e;
    if (v == 0) s.erase(subset_rank(X));
  }
  return s;
}

Sparse combine(const Sparse& a, long ca, const Sparse& b, long cb) {
  Sparse out;
  for (const auto& [k, v] : a) out[k] += ca * v;
  for (const auto& [k, v] : b) out[k] += cb * v;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

Certificate LowDegreeReducer::reduce(const MonomialRelation& r, const std::vector<Subset>& prefer) {
  if (r.side != Side::anti_weyl || r.g != g_) throw DimensionError("reducer expects an anti-Weyl relation of the same g");
  Certificate cert{r, {}};
  if (r.is_trivial()) return cert;

  // Local search: quadratics (A,B | C,D) with A,B,C among the target's own
  // holomorphic symbols and D forced by the union/intersection condition.
  std::vector<Subset> support;
  Sparse target;
  bool local_ok = r.tau == 0;
  for (std::size_t i = 0; i < r.exponents.size() && local_ok; ++i) {
    if (r.exponents[i] == 0) continue;
    Subset X = subset_at_rank(g_, static_cast<std::uint32_t>(i));
    if (X.contains(1) || !r.exponents[i].fits_slong_p()) local_ok = false;
    support.push_back(X);
    target[static_cast<std::uint32_t>(i)] = r.exponents[i].get_si();
  }
  if (local_ok && support.size() <= 12) {
    std::vector<Quad> local;
    std::set<std::array<std::uint32_t, 4>> seen;
    for (std::size_t a = 0; a < support.size(); ++a)
      for (std::size_t b = a; b < support.size(); ++b)
        for (const auto& C : support) {
          const Subset &A = support[a], &B = support[b];
          Mask meet = A.bits & B.bits, join = A.bits | B.bits;
          if ((C.bits & meet) != meet || (C.bits & ~join)) continue;
          Subset D(g_, A.bits ^ B.bits ^ C.bits);
          std::uint32_t rc = subset_rank(C), rd = subset_rank(D);
          std::array<std::uint32_t, 4> key{subset_rank(A), subset_rank(B), std::min(rc, rd), std::max(rc, rd)};
          if (!seen.insert(key).second) continue;
          Quad q{A, B, C, D};
          if (!sparse_of(q).empty()) local.push_back(q);
        }
    std::stable_partition(local.begin(), local.end(), [&](const Quad& q) {
      return std::find(prefer.begin(), prefer.end(), q.L) != prefer.end();
    });
    for (const auto& q : local)
      for (long s : {1L, -1L})
        if (combine(sparse_of(q), s, {}, 0) == target) {
          cert.parts.push_back({Generator::quadratic(q), BigInt(s)});
          if (!cert.verify()) throw TheoremViolation("local certificate failed re-verification");
          return cert;
        }
    for (std::size_t i = 0; i < local.size(); ++i)
      for (std::size_t j = i + 1; j < local.size(); ++j)
        for (long s1 : {1L, -1L})
          for (long s2 : {1L, -1L})
            if (combine(sparse_of(local[i]), s1, sparse_of(local[j]), s2) == target) {
              cert.parts.push_back({Generator::quadratic(local[i]), BigInt(s1)});
              cert.parts.push_back({Generator::quadratic(local[j]), BigInt(s2)});
              if (!cert.verify()) throw TheoremViolation("local certificate failed re-verification");
              return cert;
            }
  }

  if (!solver_) {
    std::vector<IntVector> gens;
    for (const auto& gen : family_) gens.push_back(gen.vector());
    solver_ = std::make_unique<CombinationSolver>(gens, (std::size_t{1} << g_) + 1);
  }
  auto sol = solver_->solve(flatten(r));
  if (!sol) throw TheoremViolation("relation " + render(r) + " is not generated by degree <= 2 relations");
  for (const auto& [k, c] : *sol) cert.parts.push_back({family_[k], c});
  if (!cert.verify()) throw TheoremViolation("certificate failed re-verification");
  return cert;
}

Certificate reduce_to_low_degree(const MonomialRelation& r, int g, const std::vector<Subset>& prefer) {
  return LowDegreeReducer(g).reduce(r, prefer);
}

// ---------------------------------------------------------------- support and normal form

SupportReport support_and_equivalence(const Quad& q1, const Quad& q2, const GaloisGroup& G) {
  for (const Quad* q : {&q1, &q2}) {
    if (q->I.g != G.g() || q->J.g != G.g() || q->K.g != G.g() || q->L.g != G.g())
      throw DimensionError("quadruple does not match the group's g");
    if (!union_meet_balanced(*q)) throw DomainError("quadruple violates I u J = K u L, I n J = K n L");
  }
  auto support = [&G](const Quad& q) {
    auto w = wedge_slots(q);
    std::set<std::array<Mask, 4>> s;
    for (const auto& t : G.elements()) {
      std::array<Mask, 4> img;
      for (int i = 0; i < 4; ++i) img[i] = act_subset(t, w[i]).bits;
      // a wedge is an unordered set of slots
      std::sort(img.begin(), img.end());
      s.insert(img);
    }
    return std::vector<std::array<Mask, 4>>(s.begin(), s.end());
  };
  SupportReport rep;
  rep.support1 = support(q1);
  rep.support2 = support(q2);
  rep.equivalent = rep.support1 == rep.support2;
  return rep;
}

std::pair<int, int> canonical_form_slots(const std::array<Subset, 4>& slots) {
  int g = slots[0].g;
  for (const auto& s : slots)
    if (s.g != g) throw DimensionError("slots do not share g");
  // Each coordinate has its two 1s in one of three row pairings; the counts
  // per pairing, sorted, are the W_g-invariant of the tuple.
  std::array<int, 3> count{};
  for (int j = 1; j <= g; ++j) {
    int ones = 0;
    for (const auto& s : slots) ones += s.contains(j);
    if (ones != 2) throw DomainError("unbalanced quadruple: every coordinate must lie in exactly two slots");
    int partner = 1;
    while (slots[partner].contains(j) != slots[0].contains(j)) ++partner;
    ++count[partner - 1];
  }
  std::sort(count.begin(), count.end(), std::greater<>());
  return {count[1] + count[2] + 1, count[2] + 1};
}

std::pair<int, int> canonical_form_weyl(const Quad& q, int g) {
  if (q.I.g != g || q.J.g != g || q.K.g != g || q.L.g != g) throw DimensionError("quadruple does not match g");
  if (!union_meet_balanced(q)) throw DomainError("quadruple violates I u J = K u L, I n J = K n L");
  return canonical_form_slots(wedge_slots(q));
}

}  // namespace cmlab
