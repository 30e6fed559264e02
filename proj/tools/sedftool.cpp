// sedftool: command-line front end for building field/cyclotomy tables,
// constructing catalog families, verifying family files, scanning parameter
// conditions, and running the exhaustive search.
//
// Exit codes: 0 success (published-figure mismatches are warnings and stay 0),
// 1 verification failure, 2 usage/bad input, 3 internal error.
// SEDF_ORDER_CAP overrides the default group-order cap.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sedf/json_io.hpp"

using namespace sedf;

namespace {

uint64_t g_order_cap = kDefaultOrderCap;
bool g_pretty = false;

int64_t now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(steady_clock::now().time_since_epoch()).count();
}

// --- pretty rendering: same content as the JSON report, line-oriented -------

bool all_scalar(const njson& a) {
  for (const auto& v : a)
    if (v.is_structured()) return false;
  return true;
}

void pretty_print(std::ostream& os, const njson& j, int indent) {
  const std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && all_scalar(v))) {
        os << pad << k << ":\n";
        pretty_print(os, v, indent + 2);
      } else {
        os << pad << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& v : j) {
      if (v.is_structured() && !(v.is_array() && all_scalar(v))) {
        os << pad << "- [" << i << "]\n";
        pretty_print(os, v, indent + 2);
      } else {
        os << pad << "- " << v.dump() << "\n";
      }
      ++i;
    }
  } else {
    os << pad << j.dump() << "\n";
  }
}

void emit(const njson& j) {
  if (g_pretty)
    pretty_print(std::cout, j, 0);
  else
    std::cout << j.dump(2) << "\n";
}

// --- shared flag plumbing ----------------------------------------------------

struct GroupFlags {
  uint64_t q = 0;       // prime power (field)
  uint64_t n = 0;       // cyclic order
  uint32_t p = 0, m = 0;
  std::vector<uint32_t> modulus;
  int64_t theta = -1;
  std::string group_json;

  void attach(CLI::App* sub, bool with_cyclic, bool with_field_shape = true) {
    sub->add_option("--q", q, "field order (prime power)");
    if (with_cyclic) sub->add_option("--n", n, "cyclic group order");
    if (with_field_shape) {
      sub->add_option("--p", p, "field characteristic");
      sub->add_option("--m", m, "field extension degree");
      sub->add_option("--modulus", modulus, "modulus coefficients, low degree first")
          ->delimiter(',');
      sub->add_option("--theta", theta, "primitive element encoding");
    }
    sub->add_option("--group", group_json, "group descriptor as a JSON string");
  }

  GroupPtr build() const {
    if (!group_json.empty()) return group_from_json(njson::parse(group_json), g_order_cap);
    if (n) return build_group(GroupSpec::cyclic_group(n), nullptr, std::nullopt, g_order_cap);
    GroupSpec spec = GroupSpec::field(p, m);
    if (q) {
      if (q > g_order_cap) throw Error(Errc::OrderTooLarge, "requested order exceeds cap");
      auto pp = as_prime_power(q);
      if (!pp) throw Error(Errc::NotAField, std::to_string(q) + " is not a prime power");
      spec = GroupSpec::field(pp->first, pp->second);
    } else if (!p || !m) {
      throw Error(Errc::BadInput, "need --q, --n, --p/--m, or --group");
    }
    spec.modulus = modulus;
    std::optional<elem_t> th;
    if (theta >= 0) th = elem_t(theta);
    return build_group(spec, nullptr, th, g_order_cap);
  }
};

njson cex_json(const Counterexample& c) {
  njson j;
  j["set_index"] = c.set_index;
  j["element"] = c.element;
  j["got"] = c.got;
  j["want"] = c.want;
  return j;
}

// --- verify fragments --------------------------------------------------------

njson sedf_result(const Family& fam) {
  njson r;
  SedfCheck c = verify_sedf(fam);
  r["verdict"] = c.params ? "pass" : "fail";
  if (c.params) {
    r["computed"] = {{"n", c.params->n}, {"m", c.params->m}, {"k", c.params->k},
                     {"lambda", c.params->lambda}};
  } else {
    r["reason"] = c.reason;
    if (c.cex) r["counterexample"] = cex_json(*c.cex);
  }
  return r;
}

njson gsedf_result(const Family& fam) {
  njson r;
  GsedfCheck c = verify_gsedf(fam);
  r["verdict"] = c.params ? "pass" : "fail";
  if (c.params) {
    r["computed"] = {{"n", c.params->n}, {"m", c.params->m}, {"k", c.params->k},
                     {"lambda", c.params->lambda}};
  } else {
    r["reason"] = c.reason;
    if (c.cex) r["counterexample"] = cex_json(*c.cex);
  }
  return r;
}

njson bgsedf_result(const Family& fam, const std::vector<uint64_t>& bounds) {
  njson r;
  BgsedfCheck c = verify_bgsedf(fam, bounds);
  r["verdict"] = c.pass ? "pass" : "fail";
  r["bounds"] = bounds;
  r["achieved"] = c.achieved;
  r["zero_ok"] = c.zero_ok;
  njson ks = njson::array();
  for (const auto& ls : fam.sets) ks.push_back(ls.set.size());
  r["computed"] = {{"n", fam.group->n}, {"m", fam.sets.size()}, {"k", ks}};
  if (!c.pass) {
    r["reason"] = c.reason;
    if (c.cex) r["counterexample"] = cex_json(*c.cex);
  }
  return r;
}

njson per_set_result(const Family& fam, bool pds) {
  njson r;
  bool all = !fam.sets.empty();
  njson sets = njson::array();
  for (const auto& ls : fam.sets) {
    njson s;
    s["label"] = ls.label;
    try {
      if (pds) {
        auto params = verify_pds(ls.set);
        s["verdict"] = params ? "pass" : "fail";
        if (params)
          s["computed"] = {{"n", params->n}, {"k", params->k}, {"lambda", params->lambda},
                           {"mu", params->mu}, {"type", pds_type_name(classify_pds_type(*params))}};
        else
          all = false;
      } else {
        auto params = verify_ds(ls.set);
        s["verdict"] = params ? "pass" : "fail";
        if (params)
          s["computed"] = {{"n", params->n}, {"k", params->k}, {"lambda", params->lambda}};
        else
          all = false;
      }
    } catch (const Error& e) {
      s["verdict"] = "fail";
      s["reason"] = e.what();
      all = false;
    }
    sets.push_back(std::move(s));
  }
  r["verdict"] = all ? "pass" : "fail";
  r["sets"] = std::move(sets);
  return r;
}

int run_verify(const std::string& kind, const std::string& file,
               const std::vector<uint64_t>& bounds) {
  const int64_t t0 = now_ms();
  Family fam = family_from_json(load_json_file(file), g_order_cap);
  njson rep;
  rep["format"] = 1;
  rep["command"] = "verify";
  rep["kind"] = kind;
  rep["family"] = family_to_json(fam);

  auto one = [&](const std::string& k) -> njson {
    try {
      if (k == "sedf") return sedf_result(fam);
      if (k == "gsedf") return gsedf_result(fam);
      if (k == "bgsedf") {
        if (bounds.empty())
          throw Error(Errc::BadInput, "bgsedf verification needs --bounds l1,l2,...");
        return bgsedf_result(fam, bounds);
      }
      if (k == "ds") return per_set_result(fam, false);
      if (k == "pds") return per_set_result(fam, true);
      throw Error(Errc::BadInput, "unknown verify kind: " + k);
    } catch (const Error& e) {
      if (e.code() == Errc::BadInput) throw;  // usage, not a verdict
      njson r;
      r["verdict"] = "fail";
      r["reason"] = e.what();
      return r;
    }
  };

  bool pass = false;
  if (kind == "auto") {
    njson results;
    std::vector<std::string> kinds = {"ds", "pds", "sedf", "gsedf"};
    if (!bounds.empty()) kinds.push_back("bgsedf");
    for (const auto& k : kinds) {
      njson r = one(k);
      if (r["verdict"] == "pass") pass = true;
      results[k] = std::move(r);
    }
    rep["results"] = std::move(results);
  } else {
    njson r = one(kind);
    pass = r["verdict"] == "pass";
    for (auto& [k, v] : r.items()) rep[k] = std::move(v);
  }
  rep["verdict"] = pass ? "pass" : "fail";
  rep["timing_ms"] = now_ms() - t0;
  emit(rep);
  return pass ? 0 : 1;
}

// --- construct ----------------------------------------------------------------

ResidueVariant parse_variant(const std::string& s) {
  if (s == "residue") return ResidueVariant::residue;
  if (s == "residue_plus_zero") return ResidueVariant::residue_plus_zero;
  throw Error(Errc::BadInput, "variant must be residue or residue_plus_zero");
}

std::vector<elem_t> to_elems(const std::vector<uint64_t>& v) {
  std::vector<elem_t> out;
  out.reserve(v.size());
  for (uint64_t x : v) out.push_back(elem_t(x));
  return out;
}

struct ConstructArgs {
  std::string recipe;
  uint64_t q = 0;
  int which = 0;
  std::string variant = "residue";
  uint32_t class_index = 0;
  uint32_t i = 0, j = 1;
  std::vector<uint64_t> si, sj;
  bool with_zero = false;
  bool random_subsets = false;
  uint64_t seed = 12345;
  std::string family_file, set_label;
  uint32_t e = 0;
  std::string out_file;
  uint32_t out_index = 0;
  bool do_verify = false;
  bool list = false;
};

void require_q(const ConstructArgs& a) {
  if (!a.q) throw Error(Errc::BadInput, "recipe " + a.recipe + " needs --q");
}

GroupPtr make_field(uint64_t q) {
  if (q > g_order_cap) throw Error(Errc::OrderTooLarge, "requested order exceeds cap");
  auto pp = as_prime_power(q);
  if (!pp) throw Error(Errc::NotAField, std::to_string(q) + " is not a prime power");
  return build_group(GroupSpec::field(pp->first, pp->second), nullptr, std::nullopt, g_order_cap);
}

// Seeded coin-flip subset of a class, kept nonempty; the hook behind --random.
std::vector<elem_t> random_subset(const std::vector<elem_t>& pool, std::mt19937_64& rng) {
  std::vector<elem_t> out;
  for (elem_t x : pool)
    if (rng() & 1) out.push_back(x);
  if (out.empty()) out.push_back(pool[rng() % pool.size()]);
  return out;
}

std::vector<Construction> build_recipe(ConstructArgs& a) {
  if (a.recipe == "paley_sedf") {
    require_q(a);
    return paley_sedf(a.q, g_order_cap);
  }
  if (a.recipe == "quadratic_gsedf") {
    require_q(a);
    return quadratic_gsedf(a.q, a.which, g_order_cap);
  }
  if (a.recipe == "quartic_sedf") {
    require_q(a);
    return quartic_sedf(a.q, a.which, g_order_cap);
  }
  if (a.recipe == "quartic_ds_gsedf") {
    require_q(a);
    return quartic_ds_gsedf(a.q, parse_variant(a.variant), a.class_index, g_order_cap);
  }
  if (a.recipe == "sextic_sedf") {
    require_q(a);
    return sextic_sedf(a.q, a.which, g_order_cap);
  }
  if (a.recipe == "octic_constructions") {
    require_q(a);
    return octic_constructions(a.q, parse_variant(a.variant), a.class_index, g_order_cap);
  }
  if (a.recipe == "order11_sedf_243") return order11_sedf_243();
  if (a.recipe == "semiprimitive_bgsedf") {
    require_q(a);
    std::vector<elem_t> si = to_elems(a.si), sj = to_elems(a.sj);
    if (a.random_subsets && si.empty() && sj.empty()) {
      auto g = make_field(a.q);
      uint64_t root = exact_sqrt(g->n).value_or(0);
      if (!root) throw Error(Errc::ConditionNotMet, "group order is not a square");
      auto sys = build_cyclotomy(g, uint32_t(root + 1));
      std::mt19937_64 rng(a.seed);
      si = random_subset(sys.classes[a.i].elements(), rng);
      sj = random_subset(sys.classes[a.j].elements(), rng);
    }
    return {semiprimitive_bgsedf(a.q, a.i, a.j, si, sj, a.with_zero, g_order_cap)};
  }
  if (a.recipe == "singleton_gsedf_extension") {
    if (a.family_file.empty())
      throw Error(Errc::BadInput, "singleton_gsedf_extension needs --family FILE");
    Family base = family_from_json(load_json_file(a.family_file), g_order_cap);
    return {singleton_gsedf_extension(base)};
  }
  if (a.recipe == "pds_pair_gsedf") {
    if (!a.family_file.empty()) {
      Family base = family_from_json(load_json_file(a.family_file), g_order_cap);
      size_t idx = 0;
      if (!a.set_label.empty()) {
        while (idx < base.sets.size() && base.sets[idx].label != a.set_label) ++idx;
        if (idx == base.sets.size())
          throw Error(Errc::BadInput, "no set labeled \"" + a.set_label + "\" in family");
      } else if (base.sets.size() != 1) {
        throw Error(Errc::BadInput, "family has several sets; pick one with --set LABEL");
      }
      return {pds_pair_gsedf(base.group, base.sets[idx].set)};
    }
    require_q(a);
    if (!a.e) throw Error(Errc::BadInput, "pds_pair_gsedf needs --family or --q with --e");
    auto g = make_field(a.q);
    auto sys = build_cyclotomy(g, a.e);
    if (a.class_index >= sys.classes.size())
      throw Error(Errc::BadInput, "--class out of range");
    return {pds_pair_gsedf(g, sys.classes[a.class_index])};
  }
  throw Error(Errc::BadInput, "unknown recipe: " + a.recipe + " (see `construct list`)");
}

int run_construct(ConstructArgs& a) {
  const int64_t t0 = now_ms();
  njson rep;
  rep["format"] = 1;
  rep["command"] = "construct";

  if (a.list || a.recipe == "list" || a.recipe.empty()) {
    if (!a.list && a.recipe.empty())
      throw Error(Errc::BadInput, "construct needs a recipe name or `list`");
    njson cat = njson::array();
    for (const auto& info : construction_catalog())
      cat.push_back({{"name", info.name}, {"summary", info.summary}});
    rep["catalog"] = std::move(cat);
    emit(rep);
    return 0;
  }

  rep["recipe"] = a.recipe;
  std::vector<Construction> built = build_recipe(a);

  bool all_ok = true;
  uint32_t printed_mismatches = 0;
  njson arr = njson::array();
  for (const auto& c : built) {
    njson cj = construction_to_json(c);
    if (a.do_verify) {
      ConstructionReport r = verify_construction(c);
      all_ok = all_ok && r.ok();
      printed_mismatches += r.printed_mismatches;
      cj["report"] = construction_report_to_json(r);
    }
    arr.push_back(std::move(cj));
  }
  rep["constructions"] = std::move(arr);
  if (a.do_verify) {
    rep["verdict"] = all_ok ? "pass" : "fail";
    rep["printed_mismatches"] = printed_mismatches;
    if (printed_mismatches)
      rep["warning"] = "published figures disagree with computed values; see mismatches";
  }

  if (!a.out_file.empty()) {
    if (a.out_index >= built.size()) throw Error(Errc::BadInput, "--index out of range");
    std::ofstream out(a.out_file);
    if (!out) throw Error(Errc::BadInput, "cannot write file: " + a.out_file);
    out << family_to_json(built[a.out_index].family).dump(2) << "\n";
    rep["out"] = a.out_file;
  }

  rep["timing_ms"] = now_ms() - t0;
  emit(rep);
  return (a.do_verify && !all_ok) ? 1 : 0;
}

// --- field / cyclo / scan / search ---------------------------------------------

int run_field(const GroupFlags& gf, bool tables, int64_t order_of) {
  GroupPtr g = gf.build();
  njson rep;
  rep["format"] = 1;
  rep["command"] = "field";
  rep["group"] = group_to_json(*g);
  rep["n"] = g->n;
  if (g->kind == GroupKind::prime_power_field) {
    rep["p"] = g->p;
    rep["m"] = g->m;
    rep["theta"] = g->theta;
    rep["modulus"] = g->spec.modulus;
  }
  if (tables && g->kind == GroupKind::prime_power_field) {
    rep["tables"] = {{"antilog", g->antilog}, {"log", g->logtab}};
  }
  if (order_of >= 0) {
    if (g->kind != GroupKind::prime_power_field)
      throw Error(Errc::BadInput, "--order needs a field group");
    rep["element"] = order_of;
    rep["element_order"] = g->elem_order(elem_t(order_of));
  }
  emit(rep);
  return 0;
}

int run_cyclo(const GroupFlags& gf, uint32_t e, bool numbers, bool csv, bool audit,
              bool semiprimitive_check) {
  GroupPtr g = gf.build();
  if (!e) throw Error(Errc::BadInput, "cyclo needs --e");
  CyclotomicSystem sys = build_cyclotomy(g, e);
  CycNumberTable table;
  if (numbers || csv || audit || semiprimitive_check) table = brute_force_numbers(sys);

  if (csv) {  // bare e x e table, row i as line i, column j
    for (uint32_t i = 0; i < e; ++i) {
      for (uint32_t j = 0; j < e; ++j) std::cout << (j ? "," : "") << table.at(i, j);
      std::cout << "\n";
    }
    return 0;
  }

  njson rep;
  rep["format"] = 1;
  rep["command"] = "cyclo";
  rep["group"] = group_to_json(*g);
  rep["q"] = sys.q();
  rep["e"] = sys.e;
  rep["f"] = sys.f;
  njson classes = njson::array();
  for (uint32_t i = 0; i < e; ++i)
    classes.push_back({{"index", i}, {"elements", sys.classes[i].elements()}});
  rep["classes"] = std::move(classes);

  if (numbers) {
    njson rows = njson::array();
    for (uint32_t i = 0; i < e; ++i) {
      njson row = njson::array();
      for (uint32_t j = 0; j < e; ++j) row.push_back(table.at(i, j));
      rows.push_back(std::move(row));
    }
    rep["numbers"] = std::move(rows);
  }

  bool pass = true;
  if (audit) {
    IdentityAuditReport rr = audit_identities(sys);
    njson items = njson::array();
    for (const auto& it : rr.items) {
      njson ij;
      ij["name"] = it.name;
      ij["pass"] = it.pass;
      if (!it.counterexample.empty()) ij["counterexample"] = it.counterexample;
      items.push_back(std::move(ij));
    }
    rep["audit"] = {{"pass", rr.all_pass()}, {"identities", std::move(items)}};
    pass = pass && rr.all_pass();
  }
  if (semiprimitive_check) {
    CycNumberTable closed = semiprimitive_numbers(g->p, g->m, e);
    bool same = closed.numbers == table.numbers;
    rep["semiprimitive"] = {{"matches_brute_force", same}};
    pass = pass && same;
  }
  if (audit || semiprimitive_check) rep["verdict"] = pass ? "pass" : "fail";
  emit(rep);
  return pass ? 0 : 1;
}

int run_scan(const std::string& kind_name, uint64_t q_max) {
  auto kind = scan_kind_from_name(kind_name);
  if (!kind) {
    std::string names;
    for (const auto& s : scan_kind_names()) names += (names.empty() ? "" : ", ") + s;
    throw Error(Errc::BadInput, "unknown scan kind (one of: " + names + ")");
  }
  auto hits = scan_diophantine(*kind, q_max);
  njson rep;
  rep["format"] = 1;
  rep["command"] = "scan";
  rep["kind"] = kind_name;
  rep["max"] = q_max;
  rep["count"] = hits.size();
  njson arr = njson::array();
  for (const auto& h : hits) {
    njson hj;
    hj["q"] = h.q;
    hj["p"] = h.p;
    hj["m"] = h.m;
    hj["witness"] = njson::object();
    for (const auto& [k, v] : h.witness) hj["witness"][k] = v;
    arr.push_back(std::move(hj));
  }
  rep["hits"] = std::move(arr);
  emit(rep);
  return 0;
}

int run_search(const GroupFlags& gf, uint32_t m, uint32_t k, uint64_t budget, uint32_t workers) {
  SearchConfig cfg;
  cfg.group = gf.build();
  cfg.m = m;
  cfg.k = k;
  cfg.node_budget = budget;
  cfg.workers = workers;
  SearchOutcome out = exhaustive_sedf(cfg);

  // Families as JSON lines, then one summary record.
  for (const auto& fam : out.families) {
    njson line;
    line["family"] = family_to_json(fam);
    if (g_pretty) {
      pretty_print(std::cout, line, 0);
      std::cout << "\n";
    } else {
      std::cout << line.dump() << "\n";
    }
  }
  njson summary;
  summary["summary"] = {{"format", 1},
                        {"count", out.families.size()},
                        {"exhaustive", out.exhaustive},
                        {"nodes", out.nodes}};
  if (out.lambda) summary["summary"]["lambda"] = *out.lambda;
  if (g_pretty)
    pretty_print(std::cout, summary, 0);
  else
    std::cout << summary.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("SEDF_ORDER_CAP")) {
    char* end = nullptr;
    uint64_t v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v >= 2) g_order_cap = v;
  }

  CLI::App app{"construct and verify strong external difference families"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", g_pretty, "human-readable text output (same verdicts as JSON)");

  GroupFlags field_gf;
  bool field_tables = false;
  int64_t field_order_of = -1;
  auto* sub_field = app.add_subcommand("field", "build a group and dump its tables");
  field_gf.attach(sub_field, true);
  sub_field->add_flag("--tables", field_tables, "include antilog/log tables");
  sub_field->add_option("--order", field_order_of, "report the multiplicative order of an element");

  GroupFlags cyclo_gf;
  uint32_t cyclo_e = 0;
  bool cyclo_numbers = false, cyclo_csv = false, cyclo_audit = false, cyclo_semi = false;
  auto* sub_cyclo = app.add_subcommand("cyclo", "cyclotomic classes and number tables");
  cyclo_gf.attach(sub_cyclo, false);
  sub_cyclo->add_option("--e", cyclo_e, "number of classes (divides q-1)");
  sub_cyclo->add_flag("--numbers", cyclo_numbers, "include the e x e number table");
  sub_cyclo->add_flag("--csv", cyclo_csv, "print the number table as bare CSV (row i, column j)");
  sub_cyclo->add_flag("--audit", cyclo_audit, "audit the classical identities");
  sub_cyclo->add_flag("--semiprimitive", cyclo_semi,
                      "compare the semiprimitive closed form against brute force");

  std::string verify_kind, verify_file;
  std::vector<uint64_t> verify_bounds;
  auto* sub_verify = app.add_subcommand("verify", "verify a family file");
  sub_verify->add_option("kind", verify_kind, "ds|pds|sedf|gsedf|bgsedf|auto")->required();
  sub_verify->add_option("file", verify_file, "family or report JSON file")->required();
  sub_verify->add_option("--bounds", verify_bounds, "per-set bounds for bgsedf")->delimiter(',');

  ConstructArgs ca;
  auto* sub_construct = app.add_subcommand("construct", "build a catalog family");
  sub_construct->add_option("recipe", ca.recipe, "recipe name, or `list`");
  sub_construct->add_flag("--list", ca.list, "print the catalog");
  sub_construct->add_option("--q", ca.q, "field order");
  sub_construct->add_option("--which", ca.which, "class pairing selector");
  sub_construct->add_option("--variant", ca.variant, "residue | residue_plus_zero");
  sub_construct->add_option("--class", ca.class_index, "cyclotomic class index");
  sub_construct->add_option("--i", ca.i, "first class index");
  sub_construct->add_option("--j", ca.j, "second class index");
  sub_construct->add_option("--si", ca.si, "subset of class i (encodings)")->delimiter(',');
  sub_construct->add_option("--sj", ca.sj, "subset of class j (encodings)")->delimiter(',');
  sub_construct->add_flag("--with-zero", ca.with_zero, "adjoin 0 to the first set");
  sub_construct->add_flag("--random", ca.random_subsets, "pick seeded random class subsets");
  sub_construct->add_option("--seed", ca.seed, "seed for --random (default 12345)");
  sub_construct->add_option("--family", ca.family_file, "input family file");
  sub_construct->add_option("--set", ca.set_label, "label of the input set to use");
  sub_construct->add_option("--e", ca.e, "number of classes for --q input");
  sub_construct->add_option("--out", ca.out_file, "write the built family to a file");
  sub_construct->add_option("--index", ca.out_index, "which construction --out refers to");
  sub_construct->add_flag("--verify", ca.do_verify, "re-verify every claim");

  std::string scan_kind;
  uint64_t scan_max = 0;
  auto* sub_scan = app.add_subcommand("scan", "scan parameter conditions up to a bound");
  sub_scan->add_option("--kind", scan_kind, "condition name")->required();
  sub_scan->add_option("--max", scan_max, "largest q to test")->required();

  GroupFlags search_gf;
  uint32_t search_m = 2, search_k = 1, search_workers = 1;
  uint64_t search_budget = UINT64_MAX;
  auto* sub_search = app.add_subcommand("search", "exhaustive family search");
  search_gf.attach(sub_search, true, false);
  sub_search->add_option("--m", search_m, "number of sets")->required();
  sub_search->add_option("--k", search_k, "common set size")->required();
  sub_search->add_option("--budget", search_budget, "node budget");
  sub_search->add_option("--workers", search_workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sub_field->parsed()) return run_field(field_gf, field_tables, field_order_of);
    if (sub_cyclo->parsed())
      return run_cyclo(cyclo_gf, cyclo_e, cyclo_numbers, cyclo_csv, cyclo_audit, cyclo_semi);
    if (sub_verify->parsed()) return run_verify(verify_kind, verify_file, verify_bounds);
    if (sub_construct->parsed()) return run_construct(ca);
    if (sub_scan->parsed()) return run_scan(scan_kind, scan_max);
    if (sub_search->parsed())
      return run_search(search_gf, search_m, search_k, search_budget, search_workers);
    std::cerr << "error: no subcommand\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const njson::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
