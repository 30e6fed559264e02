// JSON codecs. Malformed or out-of-range input is reported as Errc::BadInput
// so the CLI can map it onto the usage exit code.
#include "sedf/json_io.hpp"

#include <fstream>

namespace sedf {

namespace {

uint64_t require_u64(const njson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw Error(Errc::BadInput, std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<uint64_t>();
}

}  // namespace

njson group_to_json(const GroupTable& g) {
  njson j;
  if (g.kind == GroupKind::cyclic) {
    j["kind"] = "cyclic";
    j["n"] = g.n;
  } else {
    j["kind"] = "field";
    j["p"] = g.p;
    j["m"] = g.m;
    j["modulus"] = g.spec.modulus;  // coefficients low degree first, monic
    j["theta"] = g.theta;
  }
  return j;
}

GroupPtr group_from_json(const njson& j, uint64_t order_cap) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw Error(Errc::BadInput, "group descriptor needs a string \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cyclic") {
    return build_group(GroupSpec::cyclic_group(require_u64(j, "n")), nullptr, std::nullopt,
                       order_cap);
  }
  if (kind == "field") {
    GroupSpec spec = GroupSpec::field(uint32_t(require_u64(j, "p")), uint32_t(require_u64(j, "m")));
    std::optional<elem_t> theta;
    if (j.contains("modulus")) {
      if (!j["modulus"].is_array())
        throw Error(Errc::BadInput, "\"modulus\" must be an array of coefficients");
      spec.modulus = j["modulus"].get<std::vector<uint32_t>>();
    }
    if (j.contains("theta")) theta = elem_t(require_u64(j, "theta"));
    return build_group(spec, nullptr, theta, order_cap);
  }
  throw Error(Errc::BadInput, "unknown group kind \"" + kind + "\"");
}

njson family_to_json(const Family& f) {
  njson j;
  j["format"] = 1;
  j["group"] = group_to_json(*f.group);
  j["sets"] = njson::array();
  for (const auto& ls : f.sets) {
    njson s;
    s["label"] = ls.label;
    s["elements"] = ls.set.elements();
    j["sets"].push_back(std::move(s));
  }
  return j;
}

Family family_from_json(const njson& j, uint64_t order_cap) {
  if (!j.is_object()) throw Error(Errc::BadInput, "family must be a JSON object");
  if (j.contains("family")) return family_from_json(j["family"], order_cap);
  if (j.contains("format") && (!j["format"].is_number() || j["format"].get<int>() != 1))
    throw Error(Errc::BadInput, "unsupported family format version");
  if (!j.contains("group")) throw Error(Errc::BadInput, "family needs a \"group\"");
  if (!j.contains("sets") || !j["sets"].is_array())
    throw Error(Errc::BadInput, "family needs a \"sets\" array");

  Family f;
  f.group = group_from_json(j["group"], order_cap);
  size_t idx = 0;
  for (const auto& s : j["sets"]) {
    ++idx;
    if (!s.is_object() || !s.contains("elements") || !s["elements"].is_array())
      throw Error(Errc::BadInput, "each set needs an \"elements\" array");
    std::string label = s.contains("label") && s["label"].is_string()
                            ? s["label"].get<std::string>()
                            : "A" + std::to_string(idx);
    LabeledSet ls{std::move(label), ElementSet(*f.group)};
    for (const auto& e : s["elements"]) {
      if (!e.is_number_unsigned() || e.get<uint64_t>() >= f.group->n)
        throw Error(Errc::BadInput, "set \"" + ls.label + "\" has an element outside the group");
      ls.set.insert(elem_t(e.get<uint64_t>()));
    }
    f.sets.push_back(std::move(ls));
  }
  return f;
}

njson claim_to_json(const Claim& c) {
  njson j;
  j["target"] = c.target;
  j["kind"] = design_kind_name(c.kind);
  j["values"] = njson::object();
  for (const auto& [k, v] : c.values) j["values"][k] = v.str();
  if (!c.printed.empty()) {
    j["printed"] = njson::object();
    for (const auto& [k, v] : c.printed) j["printed"][k] = v.str();
  }
  return j;
}

njson construction_to_json(const Construction& c) {
  njson j;
  j["name"] = c.name;
  j["family"] = family_to_json(c.family);
  j["claims"] = njson::array();
  for (const auto& cl : c.claims) j["claims"].push_back(claim_to_json(cl));
  return j;
}

njson construction_report_to_json(const ConstructionReport& r) {
  njson j;
  j["name"] = r.name;
  j["ok"] = r.ok();
  j["designs_ok"] = r.designs_ok;
  j["derived_ok"] = r.derived_ok;
  j["printed_mismatches"] = r.printed_mismatches;
  j["outcomes"] = njson::array();
  for (const auto& o : r.outcomes) {
    njson oj;
    oj["target"] = o.target;
    oj["kind"] = design_kind_name(o.kind);
    oj["verified"] = o.verified;
    if (!o.reason.empty()) oj["reason"] = o.reason;
    oj["computed"] = njson::object();
    for (const auto& [k, v] : o.computed) oj["computed"][k] = v;
    if (!o.mismatches.empty()) {
      oj["mismatches"] = njson::array();
      for (const auto& mm : o.mismatches) {
        njson mj;
        mj["target"] = mm.target;
        mj["key"] = mm.key;
        mj["claimed"] = mm.claimed.str();
        mj["computed"] = mm.computed;
        mj["printed_source"] = mm.printed_source;
        oj["mismatches"].push_back(std::move(mj));
      }
    }
    j["outcomes"].push_back(std::move(oj));
  }
  return j;
}

njson load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::BadInput, "cannot open file: " + path);
  njson j;
  try {
    in >> j;
  } catch (const njson::exception& e) {
    throw Error(Errc::BadInput, "invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace sedf
