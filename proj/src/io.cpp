#include "gradsk/io.hpp"

#include <set>

namespace gradsk {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& why) {
  fail(Errc::SchemaError, path + ": " + why);
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      schema_fail(path + "." + it.key(), "unknown field");
}

const json& need(const json& obj, const std::string& path,
                 const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "." + key, "missing field");
  return *it;
}

Vec json_to_vec(const json& j, const std::string& path) {
  if (!j.is_array()) schema_fail(path, "expected an array of integers");
  Vec v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(json_to_int(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

IntMatrix json_to_matrix(const json& j, const std::string& path,
                         std::size_t cols_hint) {
  if (!j.is_array()) schema_fail(path, "expected an array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(json_to_vec(j[i], path + "[" + std::to_string(i) + "]"));
  std::size_t cols = rows.empty() ? cols_hint : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != cols) schema_fail(path, "ragged matrix");
  return IntMatrix::from_rows(rows, cols);
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

json matrix_to_json(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vec_to_json(m.row(i)));
  return a;
}

FGAbGroup json_to_group(const json& j, const std::string& path) {
  check_keys(j, path, {"invariants", "generators", "relations"});
  if (j.contains("invariants")) {
    if (j.contains("generators") || j.contains("relations"))
      schema_fail(path, "give either invariants or a presentation, not both");
    return FGAbGroup::from_invariants(
        json_to_vec(need(j, path, "invariants"), path + ".invariants"));
  }
  Int ngens = json_to_int(need(j, path, "generators"), path + ".generators");
  if (ngens < 0) schema_fail(path + ".generators", "must be nonnegative");
  auto n = static_cast<std::size_t>(ngens);
  IntMatrix rel(0, n);
  if (j.contains("relations"))
    rel = json_to_matrix(j["relations"], path + ".relations", n);
  if (rel.cols() != n) schema_fail(path + ".relations", "wrong width");
  return FGAbGroup(n, rel);
}

GroupHom json_to_hom(const json& j, const std::string& path,
                     const FGAbGroup& src, const FGAbGroup& tgt) {
  IntMatrix m = json_to_matrix(j, path, tgt.ngens());
  if (m.rows() != src.ngens() || m.cols() != tgt.ngens())
    schema_fail(path, "hom matrix has the wrong shape");
  try {
    return make_hom(src, tgt, m);
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

Subgroup json_to_subgroup(const json& j, const std::string& path,
                          const FGAbGroup& g) {
  if (!j.is_array()) schema_fail(path, "expected an array of generators");
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < j.size(); ++i) {
    Vec v = json_to_vec(j[i], path + "[" + std::to_string(i) + "]");
    if (v.size() != g.ngens()) schema_fail(path, "generator length mismatch");
    gens.push_back(v);
  }
  return subgroup_generated(g, gens);
}

AbstractResidueDatum json_to_abstract(const json& j, const std::string& path) {
  check_keys(j, path,
             {"U", "UT", "galois", "tau_bar", "tau_nontrivial_on_T0",
              "E0_is_field", "norm", "nrd", "R0_part", "sigma_subgroups",
              "T0_part", "sigma_tau", "sigma_sigma_tau", "torsion",
              "mu_embedding"});
  AbstractResidueDatum d;
  d.U = json_to_group(need(j, path, "U"), path + ".U");
  d.UT = json_to_group(need(j, path, "UT"), path + ".UT");
  d.tau_bar = json_to_hom(need(j, path, "tau_bar"), path + ".tau_bar", d.U, d.U);
  if (j.contains("galois")) {
    const json& gal = j["galois"];
    if (!gal.is_array()) schema_fail(path + ".galois", "expected an array");
    for (std::size_t i = 0; i < gal.size(); ++i) {
      std::string gp = path + ".galois[" + std::to_string(i) + "]";
      check_keys(gal[i], gp, {"matrix", "order"});
      d.galois_gens.push_back(
          json_to_hom(need(gal[i], gp, "matrix"), gp + ".matrix", d.U, d.U));
      d.galois_orders.push_back(
          json_to_int(need(gal[i], gp, "order"), gp + ".order"));
    }
  }
  if (j.contains("tau_nontrivial_on_T0")) {
    if (!j["tau_nontrivial_on_T0"].is_boolean())
      schema_fail(path + ".tau_nontrivial_on_T0", "expected a boolean");
    d.tau_nontrivial_on_T0 = j["tau_nontrivial_on_T0"].get<bool>();
  }
  if (j.contains("E0_is_field")) {
    if (!j["E0_is_field"].is_boolean())
      schema_fail(path + ".E0_is_field", "expected a boolean");
    d.E0_is_field = j["E0_is_field"].get<bool>();
  }
  if (j.contains("norm"))
    d.norm_E0_T0 = json_to_hom(j["norm"], path + ".norm", d.U, d.UT);
  if (j.contains("nrd")) d.nrd = json_to_hom(j["nrd"], path + ".nrd", d.U, d.U);
  if (j.contains("R0_part"))
    d.R0_part = json_to_subgroup(j["R0_part"], path + ".R0_part", d.UT);
  if (j.contains("sigma_subgroups")) {
    const json& ss = j["sigma_subgroups"];
    if (!ss.is_array()) schema_fail(path + ".sigma_subgroups", "expected array");
    FGAbGroup h = d.h_group();
    for (std::size_t i = 0; i < ss.size(); ++i) {
      std::string sp = path + ".sigma_subgroups[" + std::to_string(i) + "]";
      check_keys(ss[i], sp, {"h", "gens"});
      Vec hv = json_to_vec(need(ss[i], sp, "h"), sp + ".h");
      if (hv.size() != h.ngens()) schema_fail(sp + ".h", "wrong length");
      d.sigma_subgroups.emplace(
          h.reduce(hv),
          json_to_subgroup(need(ss[i], sp, "gens"), sp + ".gens", d.U));
    }
  }
  if (j.contains("T0_part"))
    d.T0_part_in_U = json_to_subgroup(j["T0_part"], path + ".T0_part", d.U);
  if (j.contains("sigma_tau"))
    d.sigma_tau_in_U = json_to_subgroup(j["sigma_tau"], path + ".sigma_tau", d.U);
  if (j.contains("sigma_sigma_tau"))
    d.sigma_sigma_tau_in_U =
        json_to_subgroup(j["sigma_sigma_tau"], path + ".sigma_sigma_tau", d.U);
  if (j.contains("torsion")) {
    const json& t = j["torsion"];
    check_keys(t, path + ".torsion", {"m", "u"});
    d.torsion = TorsionModel{
        json_to_int(need(t, path + ".torsion", "m"), path + ".torsion.m"),
        json_to_int(need(t, path + ".torsion", "u"), path + ".torsion.u")};
  }
  if (j.contains("mu_embedding"))
    d.mu_embedding = json_to_vec(j["mu_embedding"], path + ".mu_embedding");
  try {
    validate_abstract_datum(d);
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
  return d;
}

}  // namespace

Int json_to_int(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) schema_fail(path, "not a decimal integer");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') schema_fail(path, "not a decimal integer");
    return Int(s);
  }
  schema_fail(path, "expected an integer (number or decimal string)");
}

json int_to_json(const Int& x) {
  static const Int lo{std::numeric_limits<long long>::min()};
  static const Int hi{std::numeric_limits<long long>::max()};
  if (x >= lo && x <= hi) return json(static_cast<long long>(x));
  return json(x.str());
}

InputDocument parse_input(const json& doc) {
  check_keys(doc, "$",
             {"center", "generators", "commutation", "residue", "involution",
              "residue_model", "extension", "valued"});
  InputDocument out;

  if (doc.contains("valued")) {
    if (doc.contains("center") || doc.contains("generators"))
      schema_fail("$.valued", "a valued job cannot also carry a presentation");
    const json& v = doc["valued"];
    check_keys(v, "$.valued", {"char", "r", "mu", "theta", "roots"});
    ValuedSymbolInput in;
    in.residue.m = json_to_int(need(v, "$.valued", "mu"), "$.valued.mu");
    in.residue.u = json_to_int(need(v, "$.valued", "theta"), "$.valued.theta");
    in.residue.field_action_nontrivial = true;
    if (v.contains("char"))
      in.residue_char = json_to_int(v["char"], "$.valued.char");
    Vec rs = json_to_vec(need(v, "$.valued", "r"), "$.valued.r");
    for (const auto& r : rs) {
      if (r < 2) schema_fail("$.valued.r", "each r_i must be at least 2");
      in.symbol_exponents.push_back(r);
    }
    if (v.contains("roots")) {
      in.root_choices = json_to_vec(v["roots"], "$.valued.roots");
      if (in.root_choices.size() != in.symbol_exponents.size())
        schema_fail("$.valued.roots", "need one root per symbol exponent");
    } else {
      for (const auto& r : in.symbol_exponents) {
        if (in.residue.m % r != 0)
          schema_fail("$.valued.r", "r_i must divide mu");
        in.root_choices.push_back(in.residue.m / r);
      }
    }
    out.valued = std::move(in);
    return out;
  }

  const json& c = need(doc, "$", "center");
  check_keys(c, "$.center", {"rank", "basis"});
  Int rank = json_to_int(need(c, "$.center", "rank"), "$.center.rank");
  if (rank < 0) schema_fail("$.center.rank", "must be nonnegative");
  auto r = static_cast<std::size_t>(rank);
  IntMatrix basis =
      json_to_matrix(need(c, "$.center", "basis"), "$.center.basis", r);
  if (basis.cols() != r && basis.rows() > 0)
    schema_fail("$.center.basis", "wrong width");

  AlgebraPresentation p;
  p.center = GradeLattice(r, basis);

  if (doc.contains("generators")) {
    const json& gens = doc["generators"];
    if (!gens.is_array()) schema_fail("$.generators", "expected an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      std::string gp = "$.generators[" + std::to_string(i) + "]";
      check_keys(gens[i], gp, {"degree", "power"});
      GeneratorSpec g;
      g.degree = json_to_vec(need(gens[i], gp, "degree"), gp + ".degree");
      if (g.degree.size() != r) schema_fail(gp + ".degree", "wrong rank");
      g.power = json_to_int(need(gens[i], gp, "power"), gp + ".power");
      p.generators.push_back(std::move(g));
    }
  }
  p.commutation = IntMatrix(p.ngens(), p.ngens());
  if (doc.contains("commutation")) {
    p.commutation =
        json_to_matrix(doc["commutation"], "$.commutation", p.ngens());
    if (p.commutation.rows() != p.ngens() || p.commutation.cols() != p.ngens())
      schema_fail("$.commutation", "must be square of the generator count");
  }

  const json& res = need(doc, "$", "residue");
  if (!res.is_object() || !res.contains("type") || !res["type"].is_string())
    schema_fail("$.residue.type", "expected a string field");
  std::string rtype = res["type"].get<std::string>();
  if (rtype == "roots_of_unity") {
    check_keys(res, "$.residue", {"type", "m", "u", "field_action_nontrivial"});
    RootsOfUnityDatum d;
    d.m = json_to_int(need(res, "$.residue", "m"), "$.residue.m");
    d.u = json_to_int(need(res, "$.residue", "u"), "$.residue.u");
    if (res.contains("field_action_nontrivial")) {
      if (!res["field_action_nontrivial"].is_boolean())
        schema_fail("$.residue.field_action_nontrivial", "expected a boolean");
      d.field_action_nontrivial = res["field_action_nontrivial"].get<bool>();
    }
    p.residue = d;
  } else if (rtype == "finite_field") {
    check_keys(res, "$.residue", {"type", "q0"});
    p.residue = FiniteFieldDatum{
        json_to_int(need(res, "$.residue", "q0"), "$.residue.q0")};
  } else if (rtype == "abstract") {
    check_keys(res, "$.residue", {"type"});
    p.residue =
        json_to_abstract(need(doc, "$", "residue_model"), "$.residue_model");
  } else {
    schema_fail("$.residue.type",
                "must be roots_of_unity, finite_field, or abstract");
  }
  if (doc.contains("residue_model") && rtype != "abstract")
    schema_fail("$.residue_model", "only abstract residues take a model");

  if (doc.contains("extension")) {
    const json& e = doc["extension"];
    check_keys(e, "$.extension", {"ind_E0", "z_degree", "theta_images"});
    ExtensionData x;
    x.ind_E0 =
        json_to_int(need(e, "$.extension", "ind_E0"), "$.extension.ind_E0");
    x.z_degree =
        json_to_int(need(e, "$.extension", "z_degree"), "$.extension.z_degree");
    if (e.contains("theta_images")) {
      const json& t = e["theta_images"];
      if (!t.is_array()) schema_fail("$.extension.theta_images", "array");
      for (std::size_t i = 0; i < t.size(); ++i)
        x.theta_images.push_back(json_to_vec(
            t[i], "$.extension.theta_images[" + std::to_string(i) + "]"));
    }
    p.extension = std::move(x);
  }

  if (doc.contains("involution")) {
    const json& iv = doc["involution"];
    check_keys(iv, "$.involution", {"kind", "fixed_lattice", "signs"});
    InvolutionDescriptor tau;
    if (!need(iv, "$.involution", "kind").is_string())
      schema_fail("$.involution.kind", "expected a string");
    std::string kind = iv["kind"].get<std::string>();
    if (kind == "unitary") {
      tau.kind = InvolutionKind::Unitary;
      if (const auto* rd = std::get_if<RootsOfUnityDatum>(&p.residue)) {
        // a unitary job over mu_m must say how tau acts: nontrivial
        // multiplier, declared field action, or a proper fixed lattice
        if (mod_norm(rd->u, rd->m) == mod_norm(Int(1), rd->m) &&
            !rd->field_action_nontrivial && !iv.contains("fixed_lattice"))
          schema_fail("$.residue.u",
                      "unitary involution needs a nontrivial tau action "
                      "(set u, field_action_nontrivial, or fixed_lattice)");
      }
    } else if (kind == "first_kind") {
      tau.kind = InvolutionKind::FirstKind;
    } else {
      schema_fail("$.involution.kind", "must be unitary or first_kind");
    }
    if (iv.contains("fixed_lattice")) {
      IntMatrix fl =
          json_to_matrix(iv["fixed_lattice"], "$.involution.fixed_lattice", r);
      tau.gamma_R = GradeLattice(r, fl);
    } else {
      tau.gamma_R = p.center;
    }
    if (iv.contains("signs")) {
      tau.generator_signs = json_to_vec(iv["signs"], "$.involution.signs");
      if (tau.generator_signs.size() != p.ngens())
        schema_fail("$.involution.signs", "one sign per generator");
    } else {
      tau.generator_signs = Vec(p.ngens(), Int(0));
    }
    out.involution = std::move(tau);
  }
  out.presentation = std::move(p);
  return out;
}

InputDocument parse_input_text(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) fail(Errc::SchemaError, "input is not valid JSON");
  return parse_input(doc);
}

std::string render_group(const FGAbGroup& g) {
  const Vec& inv = g.invariant_factors();
  if (inv.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    if (i) s += " + ";
    s += inv[i] == 0 ? "Z" : "Z/" + inv[i].str();
  }
  return s;
}

json group_to_json(const FGAbGroup& g) {
  json j;
  j["invariant_factors"] = vec_to_json(g.invariant_factors());
  j["pretty"] = render_group(g);
  return j;
}

json sk_result_to_json(const SKResult& r) {
  json j;
  j["group"] = group_to_json(r.group);
  j["theorem"] = theorem_tag_name(r.tag);
  if (!r.via.empty()) j["via"] = r.via;
  json d;
  d["n"] = int_to_json(r.digest.n);
  d["e"] = int_to_json(r.digest.e);
  d["partial"] = int_to_json(r.digest.partial);
  d["case"] = case_tag_name(r.digest.case_tag);
  if (r.digest.tr_case)
    d["tr_case"] = *r.digest.tr_case == TRCase::TRUnramified
                       ? "TRUnramified"
                       : "TRTotallyRamified";
  if (r.digest.sk_order) d["sk_order"] = int_to_json(*r.digest.sk_order);
  if (!r.digest.notes.empty()) d["notes"] = r.digest.notes;
  j["digest"] = d;
  return j;
}

json classify_to_json(const ClassifyReport& c) {
  json j;
  j["case"] = case_tag_name(c.tag);
  j["n"] = int_to_json(c.n);
  j["e"] = int_to_json(c.e);
  j["index"] = int_to_json(c.index);
  j["partial"] = int_to_json(c.partial);
  j["e0_over_t0"] = int_to_json(c.e0_t0);
  j["inertially_split"] = c.inertially_split;
  return j;
}

json certificate_to_json(const BridgeCertificate& c) {
  json j;
  j["tameness"] = tameness_name(c.tameness);
  j["defectless"] = c.defectless;
  j["full_tameness_decidable"] = c.full_tameness_decidable;
  if (!c.full_tameness_decidable)
    j["note"] = "full tameness is undecidable from this datum";
  j["applied"] = c.applied;
  return j;
}

json bridge_to_json(const BridgeResult& b) {
  json j;
  j["certificate"] = certificate_to_json(b.certificate);
  json p;
  p["rank"] = int_to_json(Int(b.presentation.ambient_rank()));
  p["center_basis"] = matrix_to_json(b.presentation.center.basis());
  json gens = json::array();
  for (const auto& g : b.presentation.generators) {
    json gj;
    gj["degree"] = vec_to_json(g.degree);
    gj["power"] = int_to_json(g.power);
    gens.push_back(gj);
  }
  p["generators"] = gens;
  p["commutation"] = matrix_to_json(b.presentation.commutation);
  j["presentation"] = p;
  j["gamma_quotient"] = group_to_json(gamma_quotient(b.presentation));
  return j;
}

std::string render_report(const json& report) {
  // nlohmann objects keep keys sorted; a fixed indent gives a canonical form
  return report.dump(2) + "\n";
}

ValuedSymbolInput toex_input(const std::vector<Int>& rs, const Int& m,
                             const Int& u, const Int& residue_char) {
  ValuedSymbolInput in;
  in.residue = RootsOfUnityDatum{m, u, true};
  in.residue_char = residue_char;
  in.symbol_exponents = rs;
  for (const auto& r : rs) {
    require(r >= 1 && m % r == 0, Errc::BadRootOrder,
            "r must divide the order of the root datum");
    in.root_choices.push_back(m / r);
  }
  return in;
}

}  // namespace gradsk
