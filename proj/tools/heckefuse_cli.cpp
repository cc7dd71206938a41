#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckefuse/actions.hpp"
#include "heckefuse/catalog.hpp"
#include "heckefuse/checks.hpp"
#include "heckefuse/elementary.hpp"
#include "heckefuse/errors.hpp"
#include "heckefuse/expr.hpp"
#include "heckefuse/ext_hecke.hpp"
#include "heckefuse/hecke.hpp"
#include "heckefuse/table.hpp"

using namespace heckefuse;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string pair = "S3_in_S4";
  std::string omega;
  std::string expr;
  std::string x, y;
  std::string out;
  std::string format = "text";
  std::string catalog;
  std::string kind = "ext";
  std::uint64_t seed = 0;
  std::size_t max_group_order = kDefaultOrderCap;
  std::size_t trials = 100;
  bool all = false;
};

std::vector<CatalogEntry> load_catalog(const Options& o) {
  if (o.catalog.empty()) return bundled_catalog();
  std::ifstream in(o.catalog);
  if (!in) throw DomainError("cannot read catalog file '" + o.catalog + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

CatalogEntry entry_for(const Options& o) {
  CatalogEntry e = find_entry(load_catalog(o), o.pair);
  if (!o.omega.empty()) {
    CocycleSpec spec = parse_cocycle_spec(o.omega);
    if (spec.kind == CocycleSpec::Kind::Table) throw DomainError("table cocycles must come from a catalog file");
    e.omega = spec;
  }
  return e;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + o.out + "'");
  f << text;
}

std::string invariants_text(const std::vector<std::uint64_t>& inv) {
  std::string out;
  for (auto k : inv) {
    if (k == 1) continue;
    if (!out.empty()) out += " x ";
    out += "Z/" + std::to_string(k);
  }
  return out.empty() ? "1" : out;
}

std::string element_expr(const Options& o) {
  if (!o.expr.empty()) return o.expr;
  if (o.x.empty() || o.y.empty()) throw DomainError("give --expr or both --x and --y");
  return "(" + o.x + ")*(" + o.y + ")";
}

// ---------------------------------------------------------------------------

int cmd_list(const Options& o) {
  const auto catalog = load_catalog(o);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& e : catalog)
      arr.push_back({{"name", e.name},
                     {"backend", e.backend},
                     {"degree", e.degree},
                     {"G", e.g_generators},
                     {"Gamma", e.gamma_generators},
                     {"cocycle", e.omega ? e.omega->describe() : "trivial"},
                     {"note", e.note}});
    emit(o, arr.dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (const auto& e : catalog) {
    os << e.name << "  [" << e.backend;
    if (e.backend == "finite") os << ", degree " << e.degree;
    if (e.omega) os << ", omega " << e.omega->describe();
    os << "]\n    " << e.note << "\n";
  }
  emit(o, os.str());
  return 0;
}

int cmd_cosets(const Options& o) {
  const FinitePair fp = load_finite_pair(entry_for(o), o.max_group_order);
  const DoubleCosetSystem& sys = *fp.system;
  const FiniteGroup& G = *fp.group;
  if (o.format == "json") {
    json arr = json::array();
    for (std::size_t l = 0; l < sys.size(); ++l) {
      json reps = json::array();
      for (Elem r : sys[l].right_coset_reps) reps.push_back(G.element(r).to_cycles());
      arr.push_back({{"label", sys.name(l)},
                     {"representative", G.element(sys[l].representative).to_cycles()},
                     {"size", sys[l].members.size()},
                     {"right_cosets", sys[l].right_coset_reps.size()},
                     {"left_cosets", sys[l].left_count},
                     {"gamma_g_order", sys[l].gamma_g->order()},
                     {"right_coset_reps", reps}});
    }
    emit(o, json({{"pair", fp.entry.name}, {"G_order", G.order()}, {"Gamma_order", fp.gamma->order()},
                  {"double_cosets", arr}})
                    .dump(2) +
                "\n");
    return 0;
  }
  std::ostringstream os;
  os << fp.entry.name << ": |G| = " << G.order() << ", |Gamma| = " << fp.gamma->order() << ", " << sys.size()
     << " double cosets\n";
  for (std::size_t l = 0; l < sys.size(); ++l)
    os << "  " << sys.name(l) << "  rep " << G.element(sys[l].representative).to_cycles() << "  size "
       << sys[l].members.size() << "  right " << sys[l].right_coset_reps.size() << "  left " << sys[l].left_count
       << "  |Gamma_g| " << sys[l].gamma_g->order() << "\n";
  emit(o, os.str());
  return 0;
}

template <class Backend>
int hecke_mul_with(const Options& o, const Backend& backend) {
  const HeckeOps<Backend> ops{backend};
  const auto value = parse_expression(element_expr(o), ops);
  if (o.format == "json") {
    json terms = json::array();
    for (const auto& [l, c] : value.terms) terms.push_back({{"label", backend.format_label(l)}, {"coeff", c.str()}});
    emit(o, json({{"backend", Backend::name()}, {"element", terms}}).dump(2) + "\n");
  } else {
    emit(o, format(backend, value) + "\n");
  }
  return 0;
}

int cmd_hecke_mul(const Options& o) {
  const CatalogEntry e = entry_for(o);
  if (e.backend == "gl2") return hecke_mul_with(o, GL2Hecke{});
  if (e.backend == "bc") return hecke_mul_with(o, BCHecke{});
  const FinitePair fp = load_finite_pair(e, o.max_group_order);
  return hecke_mul_with(o, FiniteHecke(fp.system));
}

json element_json(const ExtHeckeElement& x, const std::function<std::string(BasisKey)>& name) {
  json terms = json::array();
  for (const auto& [k, m] : x.terms) terms.push_back({{"z", name(k)}, {"mult", m}});
  return terms;
}

std::string element_text(const ExtHeckeElement& x, const std::function<std::string(BasisKey)>& name) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [k, m] : x.terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + "*";
    out += name(k);
  }
  return out;
}

int cmd_ext_basis(const Options& o) {
  const FinitePair fp = load_finite_pair(entry_for(o), o.max_group_order);
  const ExtHeckePair pair(fp.system, o.seed);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& k : pair.basis()) {
      const auto [l, r] = pair.dims(ExtHeckeElement::basis(k));
      arr.push_back({{"name", pair.format_key(k)},
                     {"label", fp.system->name(k.label)},
                     {"irrep", k.irrep},
                     {"dim", pair.irreps_at(k.label)[k.irrep].cls.dim},
                     {"dims", {{"left", to_string(l)}, {"right", to_string(r)}}}});
    }
    emit(o, json({{"pair", fp.entry.name}, {"basis", arr}}).dump(2) + "\n");
    return 0;
  }
  std::ostringstream os;
  for (const auto& k : pair.basis()) {
    const auto [l, r] = pair.dims(ExtHeckeElement::basis(k));
    os << pair.format_key(k) << "  on Gamma_g of order " << fp.system->operator[](k.label).gamma_g->order()
       << "  dim " << pair.irreps_at(k.label)[k.irrep].cls.dim << "  dims " << to_string(l) << "/" << to_string(r)
       << "\n";
  }
  emit(o, os.str());
  return 0;
}

int cmd_ext_mul(const Options& o) {
  const FinitePair fp = load_finite_pair(entry_for(o), o.max_group_order);
  const ExtHeckePair pair(fp.system, o.seed);
  const FusionOps<ExtHeckePair> ops{pair};
  const auto value = parse_expression(element_expr(o), ops);
  auto name = [&](BasisKey k) { return pair.format_key(k); };
  if (o.format == "json")
    emit(o, json({{"pair", fp.entry.name}, {"element", element_json(value, name)}}).dump(2) + "\n");
  else
    emit(o, element_text(value, name) + "\n");
  return 0;
}

int cmd_elem_mul(const Options& o) {
  const CatalogEntry e = entry_for(o);
  const FinitePair fp = load_finite_pair(e, o.max_group_order);
  const ElementaryCalculus calc(fp.system, fp.omega, o.seed);
  const FusionOps<ElementaryCalculus> ops{calc};
  const auto value = parse_expression(element_expr(o), ops);
  auto name = [&](BasisKey k) { return calc.format_key(k); };
  const std::string cocycle = e.omega ? e.omega->describe() : "trivial";
  if (o.format == "json")
    emit(o, json({{"pair", fp.entry.name}, {"cocycle", cocycle}, {"element", element_json(value, name)}}).dump(2) +
                "\n");
  else
    emit(o, element_text(value, name) + "\n");
  return 0;
}

int cmd_out_desc(const Options& o) {
  const FinitePair fp = load_finite_pair(entry_for(o), o.max_group_order);
  std::vector<Perm> gens, elems;
  for (Elem g : fp.gamma->generators()) gens.push_back(fp.group->element(g));
  for (Elem g : fp.gamma->elements()) elems.push_back(fp.group->element(g));
  std::sort(elems.begin(), elems.end());
  const GroupPtr gamma = FiniteGroup::from_closed_set(fp.group->degree(), gens, elems);
  const OutDescription d = out_description(*gamma);
  // quotient element 0 is the identity coset
  const bool all_invert = d.acts_by_inversion.size() > 1 &&
                          std::all_of(d.acts_by_inversion.begin() + 1, d.acts_by_inversion.end(), [](bool b) { return b; });
  const std::string quotient = d.quotient_abelian ? invariants_text(d.quotient_invariants)
                                                  : "nonabelian of order " + std::to_string(d.quotient_reps.size());
  if (o.format == "json") {
    json action = json::array();
    for (const auto& row : d.action) action.push_back(row);
    emit(o, json({{"pair", fp.entry.name},
                  {"gamma_order", gamma->order()},
                  {"normalizer_order", d.normalizer->order()},
                  {"char", invariants_text(d.char_invariants)},
                  {"char_order", d.characters.size()},
                  {"quotient", quotient},
                  {"quotient_order", d.quotient_reps.size()},
                  {"acts_by_inversion", all_invert},
                  {"action", action},
                  {"measure_factor", d.symbolic_factor}})
                    .dump(2) +
                "\n");
    return 0;
  }
  std::ostringstream os;
  os << "Gamma of order " << gamma->order() << " on " << gamma->degree() << " points, normalizer in Sym of order "
     << d.normalizer->order() << "\n";
  os << "Char(Gamma) = " << invariants_text(d.char_invariants) << "\n";
  os << "N(Gamma)/Gamma = " << quotient;
  if (all_invert) os << ", acting on Char(Gamma) by inversion";
  os << "\n";
  os << "Out = (Char(Gamma) x| N(Gamma)/Gamma) x " << d.symbolic_factor << " (measure factor symbolic)\n";
  emit(o, os.str());
  return 0;
}

int cmd_table(const Options& o) {
  const CatalogEntry e = entry_for(o);
  const FinitePair fp = load_finite_pair(e, o.max_group_order);
  FusionTable t;
  if (o.kind == "ext") {
    const ExtHeckePair pair(fp.system, o.seed);
    t = ext_table(pair, e.name, o.seed);
  } else if (o.kind == "elementary") {
    const ElementaryCalculus calc(fp.system, fp.omega, o.seed);
    t = elementary_table(calc, e.name, e.omega ? e.omega->describe() : "trivial", o.seed);
  } else {
    throw DomainError("--kind must be ext or elementary");
  }
  emit(o, o.format == "json" ? to_json(t) : to_text(t));
  return 0;
}

int cmd_check(const Options& o) {
  std::vector<CatalogEntry> entries;
  if (o.all) {
    entries = load_catalog(o);
  } else {
    entries.push_back(entry_for(o));
  }
  CheckOptions opt;
  opt.seed = o.seed;
  opt.random_trials = o.trials;
  opt.max_group_order = o.max_group_order;
  bool ok = true;
  json report = json::array();
  std::ostringstream os;
  for (const auto& e : entries) {
    const auto results = run_checks(e, opt);
    ok = ok && all_passed(results);
    for (const auto& r : results) {
      const char* status = r.skipped ? "SKIP" : (r.ok ? "PASS" : "FAIL");
      os << status << "  " << e.name << "  " << r.module << ": " << r.name;
      if (!r.ok || r.skipped) os << "  -- " << r.detail;
      os << "\n";
      report.push_back({{"pair", e.name},
                        {"module", r.module},
                        {"check", r.name},
                        {"status", status},
                        {"detail", r.detail}});
    }
  }
  if (o.format == "json")
    emit(o, report.dump(2) + "\n");
  else
    emit(o, os.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke pairs, extended Hecke fusion algebras and elementary bimodules over finite groups"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool pair = true) {
    if (pair) sub->add_option("--pair", o.pair, "catalog pair name")->capture_default_str();
    sub->add_option("--catalog", o.catalog, "catalog file replacing the bundled pairs");
    sub->add_option("--seed", o.seed, "seed for randomized choices")->capture_default_str();
    sub->add_option("--max-group-order", o.max_group_order, "cap on |G| during closure")->capture_default_str();
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    sub->add_option("--out", o.out, "write output to a file");
  };

  auto* list = app.add_subcommand("list", "list catalog pairs");
  common(list, false);
  auto* cosets = app.add_subcommand("cosets", "double cosets of a finite pair");
  common(cosets);
  cosets->add_option("--omega", o.omega, "cocycle override");
  auto* hecke_mul = app.add_subcommand("hecke-mul", "evaluate a Hecke algebra expression");
  common(hecke_mul);
  hecke_mul->add_option("--expr", o.expr, "expression, e.g. \"T[K]*T[K]\"");
  hecke_mul->add_option("--x", o.x);
  hecke_mul->add_option("--y", o.y);
  auto* ext_basis = app.add_subcommand("ext-basis", "irreducible basis of the extended Hecke fusion algebra");
  common(ext_basis);
  auto* ext_mul = app.add_subcommand("ext-mul", "evaluate an extended Hecke expression, e.g. \"[K:0]*[K:0]\"");
  common(ext_mul);
  ext_mul->add_option("--expr", o.expr);
  ext_mul->add_option("--x", o.x);
  ext_mul->add_option("--y", o.y);
  auto* elem_mul = app.add_subcommand("elem-mul", "fuse elementary bimodules, e.g. --x \"H((0 3),0)\"");
  common(elem_mul);
  elem_mul->add_option("--omega", o.omega, "cocycle: trivial | heisenberg N k");
  elem_mul->add_option("--expr", o.expr);
  elem_mul->add_option("--x", o.x);
  elem_mul->add_option("--y", o.y);
  auto* out_desc = app.add_subcommand("out-desc", "group part of the outer automorphism description of Gamma");
  common(out_desc);
  auto* table = app.add_subcommand("table", "full fusion table");
  common(table);
  table->add_option("--omega", o.omega, "cocycle for --kind elementary");
  table->add_option("--kind", o.kind, "ext | elementary")->capture_default_str();
  auto* check = app.add_subcommand("check", "run the invariant suite");
  common(check);
  check->add_option("--omega", o.omega, "cocycle override");
  check->add_option("--trials", o.trials, "randomized representative trials")->capture_default_str();
  check->add_flag("--all", o.all, "every catalog pair");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list(o);
    if (cosets->parsed()) return cmd_cosets(o);
    if (hecke_mul->parsed()) return cmd_hecke_mul(o);
    if (ext_basis->parsed()) return cmd_ext_basis(o);
    if (ext_mul->parsed()) return cmd_ext_mul(o);
    if (elem_mul->parsed()) return cmd_elem_mul(o);
    if (out_desc->parsed()) return cmd_out_desc(o);
    if (table->parsed()) return cmd_table(o);
    if (check->parsed()) return cmd_check(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
