#include "cmlab/json_io.hpp"

#include <map>
#include <set>

#include "cmlab/error.hpp"

namespace cmlab {

namespace {

void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what) {
  if (!j.is_object()) throw DomainError(std::string(what) + " must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!ok.count(it.key())) throw DomainError(std::string("unknown field '") + it.key() + "' in " + what);
}

const json& field(const json& j, const char* key, const char* what) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "' in " + what);
  return j.at(key);
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

}  // namespace

json bigint_to_json(const BigInt& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    BigInt x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw DomainError("bad integer string");
    return x;
  }
  throw DomainError("expected an integer");
}

Subset parse_subset(int g, const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(' '));
  t.erase(t.find_last_not_of(' ') + 1);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw DomainError("subset must look like {2,5}: " + text);
  std::vector<int> elems;
  std::string cur;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    char c = t[i];
    if (c == ',') {
      if (cur.empty()) throw DomainError("bad subset: " + text);
      elems.push_back(std::stoi(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else if (c != ' ') {
      throw DomainError("bad subset: " + text);
    }
  }
  if (!cur.empty()) elems.push_back(std::stoi(cur));
  return Subset::from_elements(g, elems);
}

json to_json(const Subset& s) { return json(s.elements()); }

Subset subset_from_json(int g, const json& j) { return Subset::from_elements(g, int_list(j, "subset")); }

json to_json(const SignedPerm& s) {
  return json{{"flips", s.flips().elements()}, {"perm", s.perm()}};
}

SignedPerm signed_perm_from_json(const json& j) {
  only_keys(j, {"flips", "perm"}, "signed permutation");
  std::vector<int> perm = int_list(field(j, "perm", "signed permutation"), "perm");
  int g = static_cast<int>(perm.size());
  if (g < 1 || g > kMaxGroupG) throw DimensionError("signed permutation size out of range");
  std::vector<int> flips = j.contains("flips") ? int_list(j.at("flips"), "flips") : std::vector<int>{};
  return {Subset::from_elements(g, flips), perm};
}

json to_json(const GaloisGroup& G) {
  if (G.is_cyclic()) return json{{"cyclic", {{"M", G.modulus()}, {"phi", G.cyclic_phi()}}}};
  json gens = json::array();
  for (const auto& s : G.generators()) gens.push_back(to_json(s));
  return json{{"g", G.g()}, {"generators", gens}};
}

GaloisGroup group_from_json(const json& j) {
  only_keys(j, {"g", "generators", "cyclic"}, "group");
  if (j.contains("cyclic")) {
    const json& c = j.at("cyclic");
    only_keys(c, {"M", "phi"}, "cyclic group");
    return GaloisGroup::from_cyclic_translation(as_int(field(c, "M", "cyclic group"), "M"),
                                                int_list(field(c, "phi", "cyclic group"), "phi"));
  }
  int g = as_int(field(j, "g", "group"), "g");
  std::vector<SignedPerm> gens;
  const json& arr = j.contains("generators") ? j.at("generators") : json::array();
  if (!arr.is_array()) throw DomainError("generators must be an array");
  for (const auto& x : arr) {
    gens.push_back(signed_perm_from_json(x));
    if (gens.back().g() != g) throw DimensionError("generator size does not match g");
  }
  return GaloisGroup::from_generators(g, gens);
}

json to_json(const CMPairSpec& spec) {
  return json{{"group", to_json(spec.group())}, {"phi_labels", spec.phi_names()}};
}

CMPairSpec spec_from_json(const json& j) {
  only_keys(j, {"group", "phi_labels"}, "CM pair spec");
  GaloisGroup G = group_from_json(field(j, "group", "CM pair spec"));
  std::vector<std::string> names;
  if (j.contains("phi_labels")) {
    const json& a = j.at("phi_labels");
    if (!a.is_array()) throw DomainError("phi_labels must be an array");
    for (const auto& x : a) names.push_back(x.is_string() ? x.get<std::string>() : x.dump());
  }
  return CMPairSpec(std::move(G), std::move(names));
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(bigint_to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("matrix must be an array of rows");
  std::vector<IntVector> rows;
  std::size_t cols = 0;
  for (const auto& r : j) {
    if (!r.is_array()) throw DomainError("matrix row must be an array");
    IntVector v;
    for (const auto& x : r) v.push_back(bigint_from_json(x));
    if (!rows.empty() && v.size() != cols) throw DimensionError("ragged matrix rows");
    cols = v.size();
    rows.push_back(std::move(v));
  }
  return IntMatrix::from_rows(rows, cols);
}

namespace {

constexpr const char* kTau = "2pi i";

std::string symbol_of(const MonomialRelation& r, std::size_t i) {
  return r.side == Side::simple ? r.symbols.at(i) : subset_at_rank(r.g, static_cast<std::uint32_t>(i)).to_string();
}

}  // namespace

json to_json(const MonomialRelation& r) {
  json lhs = json::object(), rhs = json::object();
  for (std::size_t i = 0; i < r.exponents.size(); ++i) {
    const BigInt& e = r.exponents[i];
    if (e > 0) lhs[symbol_of(r, i)] = bigint_to_json(e);
    if (e < 0) rhs[symbol_of(r, i)] = bigint_to_json(-e);
  }
  if (r.tau > 0) lhs[kTau] = bigint_to_json(r.tau);
  if (r.tau < 0) rhs[kTau] = bigint_to_json(-r.tau);
  json out{{"side", r.side == Side::simple ? "simple" : "anti_weyl"}, {"g", r.g}};
  if (r.side == Side::simple) out["symbols"] = r.symbols;
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  out["text"] = render(r);
  return out;
}

MonomialRelation relation_from_json(const json& j) {
  only_keys(j, {"side", "g", "symbols", "lhs", "rhs", "text"}, "relation");
  std::string side = field(j, "side", "relation").get<std::string>();
  int g = as_int(field(j, "g", "relation"), "g");
  MonomialRelation r;
  std::map<std::string, std::size_t> index;
  if (side == "simple") {
    r.side = Side::simple;
    r.g = g;
    for (const auto& s : field(j, "symbols", "relation")) r.symbols.push_back(s.get<std::string>());
    if (static_cast<int>(r.symbols.size()) != g) throw DimensionError("relation symbols must number g");
    for (std::size_t i = 0; i < r.symbols.size(); ++i) index[r.symbols[i]] = i;
    r.exponents.assign(g, 0);
  } else if (side == "anti_weyl") {
    r = MonomialRelation::anti_weyl(g, IntVector(std::size_t{1} << g));
  } else {
    throw DomainError("relation side must be simple or anti_weyl");
  }
  for (const auto& [key, sign] : {std::pair{"lhs", 1}, {"rhs", -1}}) {
    if (!j.contains(key)) continue;
    for (auto it = j.at(key).begin(); it != j.at(key).end(); ++it) {
      BigInt e = bigint_from_json(it.value()) * sign;
      if (r.side == Side::anti_weyl && it.key() == kTau) {
        r.tau += e;
      } else if (r.side == Side::anti_weyl) {
        r.at(parse_subset(g, it.key())) += e;
      } else {
        auto f = index.find(it.key());
        if (f == index.end()) throw DomainError("unknown relation symbol " + it.key());
        r.exponents[f->second] += e;
      }
    }
  }
  return r;
}

json to_json(const CycleIndex& c, const LabelAction& A) {
  json out = json::array();
  for (const auto& s : c.slots) out.push_back(json{{"label", A.name(s.label)}, {"copy", s.copy}});
  return out;
}

CycleIndex cycle_from_json(const json& j, const LabelAction& A) {
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t r = 0; r < A.size(); ++r) index[A.name(r)] = r;
  CycleIndex c;
  for (const auto& s : j) {
    only_keys(s, {"label", "copy"}, "slot");
    auto f = index.find(field(s, "label", "slot").get<std::string>());
    if (f == index.end()) throw DomainError("unknown slot label");
    c.slots.push_back({f->second, as_int(field(s, "copy", "slot"), "copy")});
  }
  return c;
}

json to_json(const Generator& gen) {
  if (gen.kind == Generator::Kind::degree1)
    return json{{"kind", "degree1"}, {"g", gen.q.I.g}, {"I", to_json(gen.q.I)}, {"text", gen.to_string()}};
  return json{{"kind", "quadratic"},        {"g", gen.q.I.g},        {"I", to_json(gen.q.I)},
              {"J", to_json(gen.q.J)},      {"K", to_json(gen.q.K)}, {"L", to_json(gen.q.L)},
              {"text", gen.to_string()}};
}

Generator generator_from_json(const json& j) {
  only_keys(j, {"kind", "g", "I", "J", "K", "L", "text"}, "generator");
  int g = as_int(field(j, "g", "generator"), "g");
  std::string kind = field(j, "kind", "generator").get<std::string>();
  Subset I = subset_from_json(g, field(j, "I", "generator"));
  if (kind == "degree1") return Generator::degree1(I);
  if (kind != "quadratic") throw DomainError("generator kind must be degree1 or quadratic");
  return Generator::quadratic({I, subset_from_json(g, field(j, "J", "generator")),
                               subset_from_json(g, field(j, "K", "generator")),
                               subset_from_json(g, field(j, "L", "generator"))});
}

json to_json(const Certificate& c) {
  json parts = json::array();
  for (const auto& [gen, coeff] : c.parts) parts.push_back(json{{"gen", to_json(gen)}, {"coeff", bigint_to_json(coeff)}});
  return json{{"target", to_json(c.target)}, {"parts", parts}};
}

Certificate certificate_from_json(const json& j) {
  only_keys(j, {"target", "parts"}, "certificate");
  Certificate c{relation_from_json(field(j, "target", "certificate")), {}};
  for (const auto& p : field(j, "parts", "certificate")) {
    only_keys(p, {"gen", "coeff"}, "certificate part");
    c.parts.push_back({generator_from_json(field(p, "gen", "part")), bigint_from_json(field(p, "coeff", "part"))});
  }
  return c;
}

}  // namespace cmlab
