#include <tamagawa/io.hpp>

#include <fstream>
#include <sstream>

namespace tamagawa {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConstructionError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConstructionError(std::string("field \"") + key + "\" has the wrong type", {{"detail", e.what()}});
  }
}

std::vector<int> element_list(const Json& j, int order, const std::string& what) {
  if (!j.is_array()) throw ConstructionError(what + " must be a list of element indices");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ConstructionError(what + " must be a list of element indices");
    const auto v = x.get<std::int64_t>();
    if (v < 0 || v >= order)
      throw ConstructionError(what + " contains an element index out of range",
                              {{"index", std::to_string(v)}, {"order", std::to_string(order)}});
    out.push_back(int(v));
  }
  return out;
}

Subgroup closure(const FiniteGroup& g, const Json& j, const std::string& what) {
  return subgroup_generated(g, element_list(j, g.order(), what));
}

Json integer(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  throw RangeError("integer does not fit in 64 bits", {{"value", x.get_str()}});
}

}  // namespace

FiniteGroup parse_group(const Json& j) {
  if (!j.is_object()) throw ConstructionError("group must be an object");
  if (j.contains("table")) {
    auto t = field<std::vector<std::vector<int>>>(j, "table");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
    return FiniteGroup::from_table(t, labels);
  }
  const auto family = field<std::string>(j, "family");
  if (family == "cyclic") return cyclic_group(field<int>(j, "n"));
  if (family == "dihedral") return dihedral_group(field<int>(j, "n"));
  if (family == "quaternion") return quaternion_group();
  if (family == "units_mod") return units_mod(field<int>(j, "n"));
  if (family == "product") {
    std::vector<FiniteGroup> fs;
    if (!j.contains("factors") || !j["factors"].is_array()) throw ConstructionError("product needs a \"factors\" list");
    for (const auto& f : j["factors"]) fs.push_back(parse_group(f));
    return direct_product(fs);
  }
  if (family == "permutation")
    return permutation_group(field<std::vector<std::vector<int>>>(j, "generators"), field<int>(j, "degree"));
  throw ConstructionError("unknown group family", {{"family", family}});
}

Json group_to_json(const FiniteGroup& g) {
  Json j;
  j["table"] = g.table();
  std::vector<std::string> labels;
  for (int x = 0; x < g.order(); ++x) labels.push_back(g.label(x));
  j["labels"] = labels;
  return j;
}

NormTorusDatum parse_datum(const Json& j) {
  if (!j.is_object()) throw ConstructionError("datum must be a JSON object");
  if (!j.contains("group")) throw ConstructionError("missing field \"group\"");
  NormTorusDatum d;
  d.group = parse_group(j["group"]);
  if (!j.contains("pairs") || !j["pairs"].is_array()) throw ConstructionError("datum needs a \"pairs\" list");
  for (const auto& p : j["pairs"]) {
    if (!p.is_object() || !p.contains("H") || !p.contains("Ntilde"))
      throw ConstructionError("each pair needs \"H\" and \"Ntilde\"");
    d.pairs.push_back({closure(d.group, p["H"], "H"), closure(d.group, p["Ntilde"], "Ntilde")});
  }
  if (j.contains("iota") && !j["iota"].is_null()) {
    const auto iota = element_list(Json::array({j["iota"]}), d.group.order(), "iota");
    d.iota = iota.front();
  }
  if (j.contains("decomposition_groups")) {
    if (!j["decomposition_groups"].is_array()) throw ConstructionError("decomposition_groups must be a list");
    for (const auto& s : j["decomposition_groups"]) d.decomposition_groups.push_back(closure(d.group, s, "decomposition group"));
  }
  if (j.contains("include_all_cyclic")) d.include_all_cyclic = field<bool>(j, "include_all_cyclic");
  if (j.contains("declared_complete")) d.declared_complete = field<bool>(j, "declared_complete");
  d.validate();
  return d;
}

Json datum_to_json(const NormTorusDatum& d) {
  Json j;
  j["group"] = group_to_json(d.group);
  j["pairs"] = Json::array();
  for (const auto& p : d.pairs) {
    Json pj;
    pj["H"] = to_json(p.h);
    pj["Ntilde"] = to_json(p.ntilde);
    j["pairs"].push_back(pj);
  }
  if (d.iota) j["iota"] = *d.iota;
  j["decomposition_groups"] = Json::array();
  for (const auto& s : d.decomposition_groups) j["decomposition_groups"].push_back(to_json(s));
  j["include_all_cyclic"] = d.include_all_cyclic;
  j["declared_complete"] = d.declared_complete;
  return j;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConstructionError("cannot open file", {{"path", path}});
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConstructionError("malformed JSON", {{"path", path}, {"detail", e.what()}});
  }
}

NormTorusDatum load_datum(const std::string& path) { return parse_datum(load_json(path)); }

bool same_datum(const NormTorusDatum& a, const NormTorusDatum& b) {
  if (a.group.table() != b.group.table() || a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].h != b.pairs[i].h || a.pairs[i].ntilde != b.pairs[i].ntilde) return false;
  return a.iota == b.iota && a.decomposition_groups == b.decomposition_groups &&
         a.include_all_cyclic == b.include_all_cyclic && a.declared_complete == b.declared_complete;
}

Json to_json(const Rational& r) {
  Json j;
  j["num"] = integer(r.get_num());
  j["den"] = integer(r.get_den());
  return j;
}

Json to_json(const FinAb& a) {
  Json j;
  j["invariants"] = a.invariant_factors();
  j["order"] = integer(a.order());
  return j;
}

Json to_json(const Subgroup& s) { return Json(s.elements()); }

Json to_json(const TamagawaReport& r) {
  Json j;
  j["h1_lambda1"] = to_json(r.h1_lambda1);
  j["h1_lambda"] = to_json(r.h1_lambda);
  j["h2z_prime"] = to_json(r.h2z_prime);
  j["sha2_lambda"] = to_json(r.sha2_lambda);
  j["tau"] = to_json(r.tau);
  j["n_k"] = r.n_k ? integer(*r.n_k) : Json(nullptr);
  j["exact"] = r.exact;
  j["decomposition_groups"] = Json::array();
  for (const auto& s : r.decomposition_groups) j["decomposition_groups"].push_back(to_json(s));
  return j;
}

Json to_json(const OracleReport& r) {
  Json j;
  j["h1_lambda"] = to_json(r.h1_lambda);
  j["h1_lambda1"] = to_json(r.h1_lambda1);
  j["h2_lambda"] = to_json(r.h2_lambda);
  j["h2_lambda1"] = to_json(r.h2_lambda1);
  j["sha2_lambda"] = to_json(r.sha2_lambda);
  j["sha2_lambda1"] = to_json(r.sha2_lambda1);
  j["h0_lambda1_rank"] = r.h0_lambda1_rank;
  j["tau"] = to_json(r.tau);
  j["tau_norm_one"] = to_json(r.tau_norm_one);
  return j;
}

Json to_json(const std::vector<StructureCheck>& checks) {
  Json a = Json::array();
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["applicable"] = c.applicable;
    j["holds"] = c.holds;
    j["detail"] = c.detail;
    a.push_back(j);
  }
  return a;
}

Json to_json(const ProductReport& r) {
  Json j;
  j["factor_tau"] = Json::array();
  for (const auto& t : r.factor_tau) j["factor_tau"].push_back(to_json(t));
  j["formula_tau"] = r.hypotheses_hold() ? to_json(r.formula_tau) : Json(nullptr);
  j["hypotheses_hold"] = r.hypotheses_hold();
  j["hypothesis_failures"] = r.hypothesis_failures;
  j["inclusion_holds"] = r.inclusion_holds;
  j["equality_holds"] = r.equality_holds;
  j["group_order"] = r.product.group.order();
  j["engine"] = to_json(r.engine);
  return j;
}

Json to_json(const Classification& c) {
  Json j;
  j["rule"] = c.rule;
  j["tau"] = c.tau ? to_json(*c.tau) : Json(nullptr);
  j["candidates"] = Json::array();
  for (const auto& t : c.candidates) j["candidates"].push_back(to_json(t));
  j["engine_tau"] = c.engine_tau ? to_json(*c.engine_tau) : Json(nullptr);
  return j;
}

Json to_json(const DensityBound& b) {
  Json j;
  j["s_size"] = b.s_size;
  j["group_order"] = b.group_order;
  j["conclusion"] = to_string(b.conclusion);
  return j;
}

Json to_json(const QuadraticSubfieldCount& q) {
  Json j;
  j["count"] = q.count;
  j["conclusion"] = to_string(q.conclusion);
  return j;
}

Json to_json(const DihedralReport& r) {
  Json j;
  j["n"] = r.n;
  j["density"] = to_json(r.density);
  j["structural_tau"] = r.structural_tau == 0 ? Json(nullptr) : to_json(r.structural_tau);
  j["engine_tau"] = to_json(r.engine_tau);
  return j;
}

Json to_json(const LandauSearchResult& r) {
  Json j;
  j["pair_count"] = r.pair_count;
  j["distinct_p_count"] = r.distinct_p_count;
  j["a_max"] = r.a_max;
  j["b_max"] = r.b_max;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const Error& e) {
  Json ctx = Json::object();
  for (const auto& [k, v] : e.context()) ctx[k] = v;
  Json inner;
  inner["code"] = e.code();
  inner["message"] = e.what();
  inner["context"] = ctx;
  Json j;
  j["error"] = inner;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tamagawa
