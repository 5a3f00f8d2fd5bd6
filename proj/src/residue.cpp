#include "gradsk/residue.hpp"

namespace gradsk {

const Subgroup& AbstractResidueDatum::sigma_for(const Vec& h) const {
  auto it = sigma_subgroups.find(h_group().reduce(h));
  require(it != sigma_subgroups.end(), Errc::MissingSubgroupData,
          "no Sigma subgroup supplied for this Galois element");
  return it->second;
}

std::optional<TorsionModel> torsion_model(const ResidueDatum& res) {
  if (const auto* r = std::get_if<RootsOfUnityDatum>(&res)) {
    require(r->m >= 1, Errc::SchemaError, "m must be positive");
    require(mod_norm(r->u * r->u, r->m) == mod_norm(Int(1), r->m),
            Errc::SchemaError, "u^2 != 1 (mod m)");
    return TorsionModel{r->m, mod_norm(r->u, r->m)};
  }
  if (const auto* f = std::get_if<FiniteFieldDatum>(&res)) {
    require(f->q0 >= 2, Errc::SchemaError, "q0 must be at least 2");
    Int m = f->q0 * f->q0 - 1;
    return TorsionModel{m, mod_norm(f->q0, m)};
  }
  const auto& a = std::get<AbstractResidueDatum>(res);
  if (a.torsion) {
    require(mod_norm(a.torsion->u * a.torsion->u, a.torsion->m) ==
                mod_norm(Int(1), a.torsion->m),
            Errc::SchemaError, "torsion multiplier u^2 != 1 (mod m)");
    return a.torsion;
  }
  return std::nullopt;
}

Int t0_over_r0_degree(const ResidueDatum& res) {
  if (const auto* r = std::get_if<RootsOfUnityDatum>(&res)) {
    if (mod_norm(r->u, r->m) != mod_norm(Int(1), r->m)) return 2;
    return r->field_action_nontrivial ? 2 : 1;
  }
  if (std::holds_alternative<FiniteFieldDatum>(res)) return 2;
  const auto& a = std::get<AbstractResidueDatum>(res);
  return a.tau_nontrivial_on_T0 ? 2 : 1;
}

void validate_abstract_datum(const AbstractResidueDatum& d) {
  require(d.galois_gens.size() == d.galois_orders.size(), Errc::SchemaError,
          "galois generator/order count mismatch");
  GroupHom tau2 = hom_compose(d.tau_bar, d.tau_bar);
  require(hom_equal(tau2, identity_hom(d.U)), Errc::SchemaError,
          "tau_bar is not an involution on the model");
  for (std::size_t i = 0; i < d.galois_gens.size(); ++i) {
    require(d.galois_orders[i] >= 1, Errc::SchemaError, "galois order");
    // generator has the declared order
    GroupHom p = identity_hom(d.U);
    for (Int k = 0; k < d.galois_orders[i]; ++k)
      p = hom_compose(p, d.galois_gens[i]);
    require(hom_equal(p, identity_hom(d.U)), Errc::SchemaError,
            "galois generator order mismatch");
    for (std::size_t j = i + 1; j < d.galois_gens.size(); ++j) {
      require(hom_equal(hom_compose(d.galois_gens[i], d.galois_gens[j]),
                        hom_compose(d.galois_gens[j], d.galois_gens[i])),
              Errc::SchemaError, "galois generators do not commute");
    }
    if (d.norm_E0_T0) {
      require(hom_equal(hom_compose(d.galois_gens[i], *d.norm_E0_T0),
                        *d.norm_E0_T0),
              Errc::SchemaError, "norm is not Galois invariant");
    }
  }
}

MuGroup mu_n_of(const ResidueDatum& res, const Int& n) {
  require(n >= 1, Errc::SchemaError, "n must be positive");
  auto tm = torsion_model(res);
  require(tm.has_value(), Errc::ResidueTorsionUnknown,
          "abstract residue datum carries no torsion description");
  Int g = gcd_int(n, tm->m);
  return MuGroup{g, mod_norm(tm->u, g > 0 ? g : Int(1))};
}

}  // namespace gradsk
