#include "cmlab/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <sstream>

#include "cmlab/error.hpp"
#include "cmlab/hodge.hpp"
#include "cmlab/json_io.hpp"
#include "cmlab/mu19.hpp"
#include "cmlab/sl2check.hpp"

namespace cmlab::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "table";
  int p = -1;
  int n = 1;
  int g = 0;
  bool weyl_full = false;
  bool anti_weyl = false;
  bool simple = false;
  std::size_t budget = kDefaultBudget;
  unsigned jobs = 1;
  std::string q1, q2;
};

bool as_json(const Options& o) { return o.format == "json"; }

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("invalid JSON in " + path + ": " + e.what());
  }
}

CMPairSpec load_spec(const Options& o) {
  if (o.weyl_full) {
    if (o.g < 1) throw UsageError("--weyl-full needs --g N");
    return CMPairSpec(GaloisGroup::full_hyperoctahedral(o.g));
  }
  if (o.input.empty()) throw UsageError("need --input FILE or --g N --weyl-full");
  json j = load_json(o.input);
  if (j.is_object() && j.contains("group")) return spec_from_json(j);
  return CMPairSpec(group_from_json(j));
}

std::string join_subsets(const std::vector<Subset>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i].to_string();
  return s;
}

json subsets_json(const std::vector<Subset>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(to_json(s));
  return a;
}

std::vector<std::string> element_labels(const GaloisGroup& G, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(G.label(i));
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string render_certificate(const Certificate& c) {
  std::ostringstream os;
  os << "target: " << render(c.target) << "\n";
  for (const auto& [gen, k] : c.parts) os << "  " << (k > 0 ? "+" : "") << k.get_str() << " x (" << gen.to_string() << ")\n";
  os << "verified: " << (c.verify() ? "yes" : "no") << "\n";
  return os.str();
}

// ------------------------------------------------------------------ commands

void cmd_orbits(const Options& o, std::ostream& out) {
  CMPairSpec spec = load_spec(o);
  auto orbits = orbit_decomposition(spec.group());
  if (as_json(o)) {
    json a = json::array();
    for (const auto& orb : orbits) a.push_back(subsets_json(orb));
    emit(out, {{"g", spec.g()}, {"group_order", spec.group().order()}, {"orbits", a}});
    return;
  }
  out << "g = " << spec.g() << ", |G| = " << spec.group().order() << ", " << orbits.size() << " orbits\n";
  for (std::size_t i = 0; i < orbits.size(); ++i)
    out << "#" << i << " size " << orbits[i].size() << ": " << join_subsets(orbits[i]) << "\n";
}

void cmd_reflex(const Options& o, std::ostream& out) {
  CMPairSpec spec = load_spec(o);
  const auto& G = spec.group();
  Compagnon c = reflex_type(spec);
  auto recovered = element_labels(G, compagnon_type_elements(G, Subset(spec.g(), 0)));
  if (as_json(o)) {
    emit(out, {{"degree", c.degree},
               {"orbit", subsets_json(c.orbit)},
               {"cm_type", subsets_json(c.cm_type)},
               {"elements_fixing_phi1", recovered}});
    return;
  }
  out << "orbit of {}: degree " << c.degree << "\n";
  out << "  " << join_subsets(c.orbit) << "\n";
  out << "CM type (members without 1): " << join_subsets(c.cm_type) << "\n";
  out << "elements t with 1 not in t.{}: " << join(recovered, " ") << "\n";
}

void cmd_compagnons(const Options& o, std::ostream& out) {
  CMPairSpec spec = load_spec(o);
  auto comps = compagnons(spec);
  if (as_json(o)) {
    json a = json::array();
    for (const auto& c : comps)
      a.push_back({{"key", to_json(c.key())}, {"degree", c.degree}, {"cm_type", subsets_json(c.cm_type)}});
    emit(out, {{"compagnons", a}});
    return;
  }
  out << comps.size() << " compagnons\n";
  for (std::size_t i = 0; i < comps.size(); ++i)
    out << "#" << i << " key " << comps[i].key().to_string() << " degree " << comps[i].degree << ": "
        << join_subsets(comps[i].cm_type) << "\n";
}

bool want_anti_weyl(const Options& o) {
  if (o.simple && o.anti_weyl) throw UsageError("--simple and --anti-weyl are exclusive");
  if (o.anti_weyl) return true;
  if (o.simple) return false;
  return o.weyl_full;
}

void cmd_kernel(const Options& o, std::ostream& out) {
  CMPairSpec spec = load_spec(o);
  bool anti = want_anti_weyl(o);
  IntLattice K = anti ? kernel_basis(rec_star_antiweyl(spec.g())) : kernel_N(spec);
  if (as_json(o)) {
    json j{{"side", anti ? "anti_weyl" : "simple"}, {"rank", K.rank()}, {"basis", to_json(K.basis())}};
    if (!anti) j["mt_dimension"] = mt_dimension(spec);
    emit(out, j);
    return;
  }
  out << (anti ? "kernel of rec* (anti-Weyl)" : "kernel N") << ": rank " << K.rank();
  if (!anti) out << ", Mumford-Tate dimension " << mt_dimension(spec);
  out << "\n";
  for (const auto& row : K.basis().row_list()) out << "  " << to_string(row) << "\n";
}

void cmd_relations(const Options& o, std::ostream& out) {
  CMPairSpec spec = load_spec(o);
  bool anti = want_anti_weyl(o);
  std::vector<MonomialRelation> rels;
  std::vector<Certificate> certs;
  IntLattice K(0);
  if (anti) {
    K = quad_lattice(spec.g(), o.budget);
    rels = relations_from_kernel(K, spec.g());
    LowDegreeReducer reducer(spec.g());
    for (const auto& r : rels) certs.push_back(reducer.reduce(r));
  } else {
    K = kernel_N(spec);
    rels = relations_from_kernel(K, spec);
  }
  if (as_json(o)) {
    json rj = json::array(), cj = json::array();
    for (const auto& r : rels) rj.push_back(to_json(r));
    for (const auto& c : certs) cj.push_back(to_json(c));
    emit(out, {{"basis", to_json(K.basis())}, {"relations", rj}, {"certificates", cj}});
    return;
  }
  out << rels.size() << " relations\n";
  for (const auto& r : rels) out << "  " << render(r) << "\n";
}

void cmd_hodge_basis(const Options& o, std::ostream& out) {
  if (o.p < 0) throw UsageError("hodge-basis needs --p");
  CMPairSpec spec = load_spec(o);
  bool anti = want_anti_weyl(o);
  LabelAction A = anti ? LabelAction::anti_weyl(spec.group()) : LabelAction::simple(spec);
  auto basis = pohlmann_basis(A, o.p, o.n, {o.budget, o.jobs});
  if (as_json(o)) {
    json bj = json::array(), rj = json::array();
    for (const auto& c : basis) {
      bj.push_back(to_json(c, A));
      if (anti) rj.push_back(to_json(relation_of_cycle(A, c)));
    }
    json j{{"side", anti ? "anti_weyl" : "simple"}, {"p", o.p}, {"n", o.n}, {"count", basis.size()}, {"basis", bj}};
    if (anti) j["relations"] = rj;
    emit(out, j);
    return;
  }
  out << basis.size() << " basis elements (p = " << o.p << ", n = " << o.n << ", "
      << (anti ? "anti-Weyl" : "simple") << ")\n";
  for (const auto& c : basis) out << render(c, A) << "\n";
}

void cmd_reduce(const Options& o, std::ostream& out) {
  if (!o.input.empty() && !o.weyl_full) {
    MonomialRelation r = relation_from_json(load_json(o.input));
    if (r.side != Side::anti_weyl) throw DomainError("reduce expects an anti-Weyl relation");
    Certificate c = reduce_to_low_degree(r, r.g);
    if (as_json(o))
      emit(out, {{"certificate", to_json(c)}, {"verified", c.verify()}});
    else
      out << render_certificate(c);
    return;
  }
  if (o.p < 1) throw UsageError("reduce needs --input RELATION or --g N --weyl-full --p P");
  CMPairSpec spec = load_spec(o);
  LabelAction A = LabelAction::anti_weyl(spec.group());
  auto basis = pohlmann_basis(A, o.p, o.n, {o.budget, o.jobs});
  LowDegreeReducer reducer(spec.g());
  json cj = json::array();
  std::ostringstream lines;
  std::size_t trivial = 0, reduced = 0;
  for (const auto& c : basis) {
    MonomialRelation r = relation_of_cycle(A, c);
    if (r.is_trivial()) {
      ++trivial;
      continue;
    }
    Certificate cert = reducer.reduce(r);  // throws TheoremViolation on failure
    ++reduced;
    if (as_json(o))
      cj.push_back(to_json(cert));
    else
      lines << render(r) << "  [" << cert.parts.size() << " parts, verified]\n";
  }
  if (as_json(o)) {
    emit(out, {{"cycles", basis.size()}, {"trivial", trivial}, {"reduced", reduced}, {"failures", 0},
               {"certificates", cj}});
    return;
  }
  out << basis.size() << " cycles, " << trivial << " trivial, " << reduced << " reduced, 0 failures\n";
  out << lines.str();
}

Quad parse_quad(int g, const std::string& text) {
  std::vector<Subset> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) parts.push_back(parse_subset(g, item));
  if (parts.size() != 4) throw UsageError("quadruple must be I;J;K;L, e.g. {};{2,3};{2};{3}");
  return {parts[0], parts[1], parts[2], parts[3]};
}

std::string wedge_string(const std::array<Mask, 4>& w, int g) {
  std::vector<Subset> s;
  for (Mask m : w) s.emplace_back(g, m);
  return "(" + join_subsets(s) + ")";
}

void cmd_support(const Options& o, std::ostream& out) {
  if (o.q1.empty()) throw UsageError("support needs --q1 I;J;K;L");
  CMPairSpec spec = load_spec(o);
  int g = spec.g();
  Quad q1 = parse_quad(g, o.q1);
  Quad q2 = o.q2.empty() ? q1 : parse_quad(g, o.q2);
  SupportReport rep = support_and_equivalence(q1, q2, spec.group());
  auto f1 = canonical_form_weyl(q1, g), f2 = canonical_form_weyl(q2, g);
  auto wedges = [g](const std::vector<std::array<Mask, 4>>& v) {
    json a = json::array();
    for (const auto& w : v) {
      json t = json::array();
      for (Mask m : w) t.push_back(to_json(Subset(g, m)));
      a.push_back(t);
    }
    return a;
  };
  if (as_json(o)) {
    emit(out, {{"support1", wedges(rep.support1)},
               {"support2", wedges(rep.support2)},
               {"equivalent", rep.equivalent},
               {"canonical1", {f1.first, f1.second}},
               {"canonical2", {f2.first, f2.second}}});
    return;
  }
  out << "q1 support: " << rep.support1.size() << " wedges, canonical (r,s) = (" << f1.first << "," << f1.second
      << ")\n";
  for (const auto& w : rep.support1) out << "  " << wedge_string(w, g) << "\n";
  if (!o.q2.empty()) {
    out << "q2 support: " << rep.support2.size() << " wedges, canonical (r,s) = (" << f2.first << ","
        << f2.second << ")\n";
    for (const auto& w : rep.support2) out << "  " << wedge_string(w, g) << "\n";
    out << "equivalent: " << (rep.equivalent ? "yes" : "no") << "\n";
  }
}

int cmd_sl2(const Options& o, std::ostream& out) {
  if (o.g < 2) throw UsageError("sl2-check needs --g N with N >= 2");
  if (o.g > kMaxSl2G) throw DimensionError("sl2-check supports g <= " + std::to_string(kMaxSl2G));
  std::uint32_t half = std::uint32_t{1} << (o.g - 1);
  bool all = true;
  json rows = json::array();
  if (!as_json(o)) out << "U            [v,v]=0  diag  triple  conj  result\n";
  for (std::uint32_t r = 0; r < half; ++r) {
    Subset U = subset_at_rank(o.g, r);
    Sl2Report rep = check_sl2(U);
    all = all && rep.ok();
    if (as_json(o)) {
      rows.push_back({{"U", to_json(U)},
                      {"bracket_vv_zero", rep.bracket_vv_zero},
                      {"bracket_vvbar_diagonal", rep.bracket_vvbar_diagonal},
                      {"triple_identities", rep.triple_identities},
                      {"conjugation", rep.conjugation},
                      {"failure", rep.failure}});
      continue;
    }
    auto yn = [](bool b) { return b ? "yes" : "no "; };
    std::string name = U.to_string();
    name.resize(std::max<std::size_t>(name.size(), 12), ' ');
    out << name << " " << yn(rep.bracket_vv_zero) << "      " << yn(rep.bracket_vvbar_diagonal) << "   "
        << yn(rep.triple_identities) << "     " << yn(rep.conjugation) << "   "
        << (rep.ok() ? "PASS" : "FAIL " + rep.failure) << "\n";
  }
  if (as_json(o)) emit(out, {{"g", o.g}, {"all_pass", all}, {"checks", rows}});
  return all ? 0 : 1;
}

void cmd_mu19(const Options& o, std::ostream& out) {
  if (as_json(o))
    emit(out, mu19::report_json());
  else
    out << mu19::report_text();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cmlab: CM periods, compagnons and Hodge relations", "cmlab"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
  };
  auto add_group = [&](CLI::App* c) {
    c->add_option("--input", o.input, "CM pair or group JSON");
    c->add_option("--g", o.g, "g, with --weyl-full");
    c->add_flag("--weyl-full", o.weyl_full, "full hyperoctahedral group of rank g");
  };
  auto add_side = [&](CLI::App* c) {
    c->add_flag("--anti-weyl", o.anti_weyl, "work on the anti-Weyl side");
    c->add_flag("--simple", o.simple, "work on the simple side");
  };
  auto add_enum = [&](CLI::App* c) {
    c->add_option("--p", o.p, "half the number of slots");
    c->add_option("--n", o.n, "number of copies")->check(CLI::PositiveNumber);
    c->add_option("--budget", o.budget, "enumeration budget");
    c->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* orbits = app.add_subcommand("orbits", "G-orbits on P({1..g})");
  auto* reflex = app.add_subcommand("reflex", "orbit of the empty set and the reflex CM type");
  auto* comps = app.add_subcommand("compagnons", "one compagnon per orbit");
  auto* kernel = app.add_subcommand("kernel", "kernel lattice N (or ker rec* with --anti-weyl)");
  auto* rels = app.add_subcommand("relations", "monomial period relations from the kernel");
  auto* hodge = app.add_subcommand("hodge-basis", "Pohlmann basis of Hodge classes");
  auto* reduce = app.add_subcommand("reduce", "certificates through degree <= 2 relations");
  auto* support = app.add_subcommand("support", "Galois support of quadratic relations");
  auto* sl2 = app.add_subcommand("sl2-check", "sl2-triple identities for v_U");
  auto* mu = app.add_subcommand("example-mu19", "the Q(zeta_19) example end to end");

  for (auto* c : {orbits, reflex, comps}) {
    add_group(c);
    add_format(c);
  }
  for (auto* c : {kernel, rels}) {
    add_group(c);
    add_side(c);
    add_format(c);
    c->add_option("--budget", o.budget, "enumeration budget");
  }
  add_group(hodge);
  add_side(hodge);
  add_enum(hodge);
  add_format(hodge);
  add_group(reduce);
  add_enum(reduce);
  add_format(reduce);
  add_group(support);
  add_format(support);
  support->add_option("--q1", o.q1, "quadruple I;J;K;L");
  support->add_option("--q2", o.q2, "second quadruple");
  sl2->add_option("--g", o.g, "g");
  add_format(sl2);
  add_format(mu);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (orbits->parsed()) cmd_orbits(o, out);
    if (reflex->parsed()) cmd_reflex(o, out);
    if (comps->parsed()) cmd_compagnons(o, out);
    if (kernel->parsed()) cmd_kernel(o, out);
    if (rels->parsed()) cmd_relations(o, out);
    if (hodge->parsed()) cmd_hodge_basis(o, out);
    if (reduce->parsed()) cmd_reduce(o, out);
    if (support->parsed()) cmd_support(o, out);
    if (sl2->parsed()) return cmd_sl2(o, out);
    if (mu->parsed()) cmd_mu19(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cmlab::cli
