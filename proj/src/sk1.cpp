#include "gradsk/sk1.hpp"

#include <algorithm>
#include <set>

namespace gradsk {

const char* theorem_tag_name(TheoremTag t) {
  switch (t) {
    case TheoremTag::PropTotal: return "PropTotal";
    case TheoremTag::PropCompletely: return "PropCompletely";
    case TheoremTag::CorUnramified: return "CorUnramified";
    case TheoremTag::CorSeses: return "CorSeses";
    case TheoremTag::PropCyclic: return "PropCyclic";
    case TheoremTag::ThMsem: return "ThMsem";
    case TheoremTag::ThSktotal: return "ThSktotal";
    case TheoremTag::NonUnitaryTotallyRamified:
      return "NonUnitaryTotallyRamified";
  }
  return "?";
}

namespace {

// every answer is n-torsion; enforced on each output
SKResult finalize(SKResult r) {
  Int ex = r.group.exponent();
  require(ex != 0 && r.digest.n % ex == 0, Errc::InternalInvariant,
          "result exponent does not divide ind(E)");
  return r;
}

const AbstractResidueDatum& abstract_datum(const AlgebraPresentation& p) {
  const auto* d = std::get_if<AbstractResidueDatum>(&p.residue);
  require(d != nullptr, Errc::MissingSubgroupData,
          "this case formula needs an abstract residue datum");
  return *d;
}

Subgroup mu_subgroup(const FGAbGroup& zm, const Int& m, const Int& k) {
  // mu_k inside Z/m, k | m
  return subgroup_generated(zm, {{m / k}});
}

GroupHom nrd_or_identity(const AbstractResidueDatum& d) {
  if (d.nrd) return *d.nrd;
  return identity_hom(d.U);
}

// product of the Sigma subgroups over H, via the epsilon-tuple shortcut or
// the full enumeration
Subgroup sigma_product(const AbstractResidueDatum& d, const SKOptions& opts) {
  FGAbGroup h = d.h_group();
  auto w = [&](const Vec& x) { return d.sigma_for(x); };
  if (opts.use_lembe) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < h.ngens(); ++i) gens.push_back(h.gen(i));
    return lembe_product(d.U, h, w, gens, opts.check_lembe);
  }
  return lembe_full_product(d.U, h, w);
}

// scalar exponent y with tau(zeta^y x^v) = zeta^y x^v, for central x^v
Int symmetric_scalar(const AlgebraPresentation& p,
                     const InvolutionDescriptor& tau, const Vec& exps,
                     const TorsionModel& tm) {
  Monomial img = tau_apply(p, tau, Monomial{0, exps});
  Int rhs = mod_norm(-img.scalar, tm.m);
  Int g = gcd_int(mod_norm(tm.u - 1, tm.m), tm.m);
  if (g == 0) g = tm.m;
  require(rhs % g == 0, Errc::NoSymmetricElement,
          "no scalar correction makes the central part symmetric");
  if (rhs == 0 || tm.m == 1) return 0;
  Int ap = mod_norm(tm.u - 1, tm.m) / g, mp = tm.m / g, bp = rhs / g;
  Int inv = 0;
  for (Int cand = 0; cand < mp; ++cand)
    if (mod_norm(ap * cand, mp) == mod_norm(Int(1), mp)) {
      inv = cand;
      break;
    }
  return mod_norm(inv * bp, tm.m);
}

}  // namespace

SKResult sk1_totally_ramified(const AlgebraPresentation& p) {
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::TotallyRamified, Errc::CaseMismatch,
          "algebra is not totally ramified over its center");
  auto tm = torsion_model(p.residue);
  require(tm.has_value(), Errc::ResidueTorsionUnknown,
          "totally ramified formula needs the residue torsion");
  symplectic_pairing(p);  // validates that mu_e really sits in T0
  Int g = gcd_int(c.n, tm->m);
  require(g % c.e == 0, Errc::InternalInvariant, "mu_e escapes mu_n(T0)");
  FGAbGroup zm = FGAbGroup::cyclic(tm->m);
  SKResult r;
  r.group = subquotient(mu_subgroup(zm, tm->m, g), mu_subgroup(zm, tm->m, c.e));
  r.tag = TheoremTag::NonUnitaryTotallyRamified;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  return finalize(std::move(r));
}

SKResult sk1u_totally_ramified(const AlgebraPresentation& p,
                               const InvolutionDescriptor& tau) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "this formula needs T unramified over R");
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::TotallyRamified, Errc::CaseMismatch,
          "algebra is not totally ramified over its center");
  auto tm = torsion_model(p.residue);
  require(tm.has_value(), Errc::ResidueTorsionUnknown,
          "totally ramified formula needs the residue torsion");
  symplectic_pairing(p);
  // tau must invert mu_e (validate_involution already forces it on the
  // commutation values; this guards direct data)
  require(mod_norm((tm->u + 1) * (tm->m / c.e), tm->m) == 0,
          Errc::MuEViolation, "tau does not invert mu_e");

  Int g = gcd_int(c.n, tm->m);
  FGAbGroup zm = FGAbGroup::cyclic(tm->m);
  Subgroup mu_n_t0 = mu_subgroup(zm, tm->m, g);
  Subgroup inverted = hom_kernel(scalar_hom(zm, tm->u + 1));
  Subgroup numerator = sub_intersect(mu_n_t0, inverted);
  Subgroup mu_e = mu_subgroup(zm, tm->m, c.e);
  require(sub_leq(mu_e, numerator), Errc::MuEViolation,
          "mu_e is not inside the tau-inverted subgroup");

  SKResult r;
  r.group = subquotient(numerator, mu_e);
  r.tag = TheoremTag::ThSktotal;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  // injection into the nonunitary group: order divides; equality for odd e
  Int sk_order = g / c.e;
  r.digest.sk_order = sk_order;
  require(sk_order % r.group.order() == 0, Errc::InternalInvariant,
          "unitary order does not divide the nonunitary order");
  if (c.e % 2 == 1)
    require(r.group.order() == sk_order, Errc::InternalInvariant,
            "odd exponent must give equal orders");
  return finalize(std::move(r));
}

SKResult sk1u_T_totally_ramified(const AlgebraPresentation& p,
                                 const InvolutionDescriptor& tau) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRTotallyRamified, Errc::CaseMismatch,
          "this formula needs T totally ramified over R");
  ClassifyReport c = classify(p);
  require(c.index > 1 || c.e0_t0 > 1, Errc::EEqualsT,
          "E = T has no unitary content here");
  SKResult r;
  r.group = FGAbGroup::trivial();
  r.tag = c.tag == CaseTag::TotallyRamified ? TheoremTag::PropTotal
                                            : TheoremTag::PropCompletely;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  return finalize(std::move(r));
}

SKResult sk1u_unramified(const AlgebraPresentation& p,
                         const InvolutionDescriptor& tau) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "unramified reduction needs T unramified over R");
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::Unramified, Errc::CaseMismatch,
          "algebra is ramified over its center");
  SKResult r;
  r.tag = TheoremTag::CorUnramified;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  if (!std::holds_alternative<AbstractResidueDatum>(p.residue)) {
    // E = T0-like commutative residue: everything is symmetric times R0
    r.group = FGAbGroup::trivial();
    r.digest.notes.push_back("commutative residue; group is trivial");
    return finalize(std::move(r));
  }
  const auto& d = abstract_datum(p);
  validate_abstract_datum(d);
  require(d.norm_E0_T0.has_value() && d.R0_part.has_value(),
          Errc::MissingSubgroupData, "need the reduced norm and R0 data");
  Subgroup numerator = preimage(*d.norm_E0_T0, *d.R0_part);
  Subgroup denominator = d.sigma_for(d.h_group().zero());
  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "Sigma is not contained in the norm preimage");
  r.group = subquotient(numerator, denominator);
  return finalize(std::move(r));
}

SKResult sk1u_semiramified(const AlgebraPresentation& p,
                           const InvolutionDescriptor& tau,
                           const SKOptions& opts) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "semiramified formula needs T unramified over R");
  ClassifyReport c = classify(p);
  require(c.tag == CaseTag::Semiramified, Errc::CaseMismatch,
          "algebra is not semiramified");
  const auto& d = abstract_datum(p);
  validate_abstract_datum(d);
  require(d.norm_E0_T0.has_value() && d.R0_part.has_value(),
          Errc::MissingSubgroupData, "need the norm and R0 data");
  Subgroup numerator = preimage(*d.norm_E0_T0, *d.R0_part);
  Subgroup denominator = sigma_product(d, opts);
  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "fixed-point product escapes the norm preimage");
  SKResult r;
  r.group = subquotient(numerator, denominator);
  r.tag = TheoremTag::CorSeses;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  return finalize(std::move(r));
}

SKResult sk1u_cyclic(const AlgebraPresentation& p,
                     const InvolutionDescriptor& tau) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "cyclic formula needs T unramified over R");
  ClassifyReport c = classify(p);
  FGAbGroup q = gamma_quotient(p);
  require(q.invariant_factors().size() <= 1, Errc::NotCyclicRamification,
          "Gamma_E/Gamma_T is not cyclic");
  const auto& d = abstract_datum(p);
  validate_abstract_datum(d);
  SKResult r;
  r.tag = TheoremTag::PropCyclic;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  if (d.E0_is_field) {
    r.group = FGAbGroup::trivial();
    r.digest.notes.push_back("E0 is a field; group is trivial");
    return finalize(std::move(r));
  }
  require(d.norm_E0_T0.has_value() && d.R0_part.has_value() &&
              d.sigma_tau_in_U.has_value() &&
              d.sigma_sigma_tau_in_U.has_value(),
          Errc::MissingSubgroupData,
          "need the composite norm, R0, and the two Sigma subgroups");
  GroupHom comp = hom_compose(nrd_or_identity(d), *d.norm_E0_T0);
  Subgroup numerator = preimage(comp, *d.R0_part);
  Subgroup denominator = sub_join(*d.sigma_tau_in_U, *d.sigma_sigma_tau_in_U);
  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "Sigma product escapes the composite norm preimage");
  r.group = subquotient(numerator, denominator);
  return finalize(std::move(r));
}

SKResult sk1u_msem(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau,
                   const std::map<Vec, Monomial>& transversal,
                   const SKOptions& opts) {
  InvolutionReport irep = validate_involution(p, tau);
  require(irep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "the degree-0 formula needs T unramified over R");
  ClassifyReport c = classify(p);
  const auto& d = abstract_datum(p);
  validate_abstract_datum(d);
  require(d.norm_E0_T0.has_value() && d.R0_part.has_value(),
          Errc::MissingSubgroupData, "need the norm and R0 data");
  auto tm = std::optional<TorsionModel>(
      torsion_model(p.residue).value_or(TorsionModel{1, 1}));

  // numerator: preimage of R0 under the partial-twisted composite norm
  GroupHom comp = hom_compose(
      scalar_hom(d.U, c.partial),
      hom_compose(nrd_or_identity(d), *d.norm_E0_T0));
  Subgroup numerator = preimage(comp, *d.R0_part);

  Subgroup pprod = sigma_product(d, opts);

  // X: scalar cocycle values of the symmetric transversal, embedded in U
  FGAbGroup a = gamma_quotient(p);
  std::vector<Vec> xgens;
  auto mu_elem = [&](const Int& exp) {
    require(d.mu_embedding.has_value(), Errc::MissingSubgroupData,
            "need the mu embedding to place transversal values in the model");
    return d.U.scale(exp, d.U.reduce(*d.mu_embedding));
  };
  auto x_values = [&](const std::map<Vec, Monomial>& trans) {
    std::set<Int> exps;
    for (const auto& [ra, ma] : trans)
      for (const auto& [rb, mb] : trans) {
        Vec rc = a.add(ra, rb);
        auto it = trans.find(rc);
        require(it != trans.end(), Errc::MissingSubgroupData,
                "transversal does not cover the sum of two representatives");
        Monomial m =
            mono_mul(p, mono_mul(p, ma, mb), mono_inv(p, it->second));
        require(mono_is_central(p, m), Errc::InternalInvariant,
                "transversal cocycle left the center");
        Int y = symmetric_scalar(p, tau, m.exps, *tm);
        Int value = mod_norm(m.scalar - y, tm->m);
        if (value != 0) exps.insert(value);
      }
    std::vector<Vec> vals;
    for (const auto& v : exps) vals.push_back(mu_elem(v));
    return vals;
  };
  std::vector<Vec> xv;
  if (!transversal.empty() && !a.is_trivial()) xv = x_values(transversal);
  // tau-fixed scalars must already be symmetric-generated in the model
  if (d.mu_embedding) {
    Int gfix = gcd_int(mod_norm(tm->u - 1, tm->m), tm->m);
    if (gfix == 0) gfix = tm->m;
    Vec fixed_gen = mu_elem(tm->m / gfix);
    require(sub_contains(pprod, fixed_gen), Errc::ModelViolation,
            "tau-fixed scalars are not inside the Sigma product");
  }
  Subgroup xsub = subgroup_generated(d.U, xv);
  Subgroup denominator = sub_join(pprod, xsub);

  if (opts.representative_doubling && !transversal.empty()) {
    // doubling the representative set must not grow X modulo P*X
    std::vector<Vec> reps2;
    for (const auto& [ra, ma] : transversal)
      for (const auto& [rb, mb] : transversal)
        reps2.push_back(a.add(ra, rb));
    auto trans2 = symmetric_transversal(p, tau, reps2);
    for (const auto& [ra, ma] : transversal) trans2.emplace(ra, ma);
    for (const auto& v : x_values(trans2))
      require(sub_contains(denominator, v), Errc::InternalInvariant,
              "doubling the representative set changed X");
  }

  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "P*X escapes the numerator");
  SKResult r;
  r.group = subquotient(numerator, denominator);
  r.tag = TheoremTag::ThMsem;
  r.digest.n = c.n;
  r.digest.e = c.e;
  r.digest.partial = c.partial;
  r.digest.case_tag = c.tag;
  r.digest.tr_case = irep.tr_case;
  return finalize(std::move(r));
}

SKResult sk1u_auto(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau, const SKOptions& opts) {
  InvolutionReport irep = validate_involution(p, tau);
  if (irep.tr_case == TRCase::TRTotallyRamified)
    return sk1u_T_totally_ramified(p, tau);
  ClassifyReport c = classify(p);
  if (c.tag == CaseTag::TotallyRamified && c.index > 1)
    return sk1u_totally_ramified(p, tau);
  if (c.tag == CaseTag::Unramified) return sk1u_unramified(p, tau);
  if (c.tag == CaseTag::Semiramified &&
      std::holds_alternative<AbstractResidueDatum>(p.residue))
    return sk1u_semiramified(p, tau, opts);
  FGAbGroup q = gamma_quotient(p);
  if (q.invariant_factors().size() <= 1 &&
      std::holds_alternative<AbstractResidueDatum>(p.residue))
    return sk1u_cyclic(p, tau);
  // fall back to the general degree-0 formula over a full transversal
  abstract_datum(p);
  auto reps = gamma_quotient(p).enumerate();
  auto trans = symmetric_transversal(p, tau, reps);
  return sk1u_msem(p, tau, trans, opts);
}

ConormGroups conorm_groups(const AbstractResidueDatum& d,
                           const GroupHom& sigma) {
  validate_abstract_datum(d);
  require(d.T0_part_in_U.has_value() && d.sigma_tau_in_U.has_value(),
          Errc::MissingSubgroupData,
          "need the T0 part and Sigma_tau to build the conorm groups");
  GroupHom nrd = nrd_or_identity(d);
  GroupHom sigma_minus_1 = hom_sub(sigma, identity_hom(d.U));
  GroupHom sigma_tau = hom_compose(d.tau_bar, sigma);
  GroupHom one_minus_st = hom_sub(identity_hom(d.U), sigma_tau);

  Subgroup nrd_image = hom_image(nrd);
  Subgroup n_grp = preimage(sigma_minus_1, nrd_image);
  Subgroup w_grp = sub_join(*d.T0_part_in_U, nrd_image);
  require(sub_leq(w_grp, n_grp), Errc::ModelViolation,
          "W escapes N; the model is not Galois-consistent");

  // Nrd(Sigma_tau), then its (1 - sigma tau) twist for the unitary side
  std::vector<Vec> nrd_sigma_gens;
  for (const auto& g : d.sigma_tau_in_U->gens)
    nrd_sigma_gens.push_back(hom_apply(nrd, g));
  Subgroup w_tau =
      sub_join(*d.T0_part_in_U, subgroup_generated(d.U, nrd_sigma_gens));
  Subgroup twisted_nrd_image = hom_image(hom_compose(nrd, one_minus_st));
  Subgroup n_tau = preimage(sigma_minus_1, twisted_nrd_image);
  require(sub_leq(w_tau, n_tau), Errc::ModelViolation,
          "W_tau escapes N_tau; the model is not Galois-consistent");

  return ConormGroups{subquotient(n_grp, w_grp), subquotient(n_tau, w_tau)};
}

SKResult sk1_cyclic_model(const AbstractResidueDatum& d,
                          const GroupHom& sigma) {
  validate_abstract_datum(d);
  require(d.norm_E0_T0.has_value(), Errc::MissingSubgroupData,
          "need the composite norm");
  GroupHom comp = hom_compose(nrd_or_identity(d), *d.norm_E0_T0);
  Subgroup numerator = hom_kernel(comp);
  Subgroup denominator = hom_image(hom_sub(sigma, identity_hom(d.U)));
  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "(sigma - 1) image escapes the norm kernel");
  SKResult r;
  r.group = subquotient(numerator, denominator);
  r.tag = TheoremTag::PropCyclic;
  r.digest.notes.push_back("nonunitary form; commutators collapse in the abelian model");
  // n is not derivable from the datum alone; record the exponent itself
  r.digest.n = r.group.exponent() == 0 ? Int(0) : r.group.exponent();
  require(r.digest.n != 0, Errc::InternalInvariant, "infinite model result");
  return r;
}

CyclicSequenceReport cyclic_exact_sequence_check(const AbstractResidueDatum& d,
                                                 const GroupHom& sigma) {
  validate_abstract_datum(d);
  require(d.norm_E0_T0.has_value() && d.R0_part.has_value() &&
              d.sigma_tau_in_U.has_value() &&
              d.sigma_sigma_tau_in_U.has_value() &&
              d.T0_part_in_U.has_value(),
          Errc::MissingSubgroupData, "cyclic sequence check needs full data");
  CyclicSequenceReport rep;
  GroupHom nrd = nrd_or_identity(d);
  GroupHom comp = hom_compose(nrd, *d.norm_E0_T0);
  GroupHom sigma_tau = hom_compose(d.tau_bar, sigma);
  GroupHom one_minus_st = hom_sub(identity_hom(d.U), sigma_tau);
  GroupHom sigma_minus_1 = hom_sub(sigma, identity_hom(d.U));

  Subgroup numerator = preimage(comp, *d.R0_part);
  Subgroup denominator = sub_join(*d.sigma_tau_in_U, *d.sigma_sigma_tau_in_U);
  require(sub_leq(denominator, numerator), Errc::ModelViolation,
          "Sigma product escapes the numerator");
  FGAbGroup sk = subquotient(numerator, denominator);
  rep.sk_order = sk.order();

  ConormGroups cg = conorm_groups(d, sigma);
  rep.pu_order = cg.pu_tau.order();

  // image of the degree-0 unitary group: kernel of (1 - sigma tau) o Nrd
  Subgroup k = hom_kernel(hom_compose(nrd, one_minus_st));
  require(sub_leq(k, numerator), Errc::ModelViolation,
          "Sigma'_{sigma tau} escapes the numerator");
  Subgroup image_sub = sub_join(k, denominator);
  rep.image_order = subquotient(image_sub, denominator).order();

  // the connecting map: a |-> alpha with alpha^(sigma - 1) = Nrd(a)^(1 - st)
  Subgroup w_tau_model = [&] {
    std::vector<Vec> gens;
    for (const auto& g : d.sigma_tau_in_U->gens)
      gens.push_back(hom_apply(nrd, g));
    return sub_join(*d.T0_part_in_U, subgroup_generated(d.U, gens));
  }();
  auto connect = [&](const Vec& aelt) -> std::optional<Vec> {
    Vec w = hom_apply(one_minus_st, hom_apply(nrd, aelt));
    IntMatrix sys = stack_rows(sigma_minus_1.matrix, d.U.relations());
    auto sol = solve_left(sys, w);
    if (!sol) return std::nullopt;
    return Vec(sol->begin(), sol->begin() + d.U.ngens());
  };
  rep.image_in_kernel = true;
  for (const auto& g : k.gens) {
    auto alpha = connect(g);
    if (!alpha || !sub_contains(w_tau_model, *alpha)) {
      rep.image_in_kernel = false;
      break;
    }
  }
  // surjectivity: every alpha in N_tau is hit
  Subgroup twisted = hom_image(hom_compose(nrd, one_minus_st));
  Subgroup n_tau = preimage(sigma_minus_1, twisted);
  rep.f_surjective = true;
  for (const auto& alpha : n_tau.gens) {
    // need a with Nrd(a)^(1-st) = alpha^(sigma-1)
    Vec target = hom_apply(sigma_minus_1, alpha);
    IntMatrix sys =
        stack_rows(mat_mul(nrd.matrix, one_minus_st.matrix), d.U.relations());
    auto sol = solve_left(sys, target);
    if (!sol) {
      rep.f_surjective = false;
      break;
    }
  }
  rep.order_law = rep.sk_order == rep.image_order * rep.pu_order;

  // each column composite acts as squaring
  auto squares_into = [&](const Subgroup& num, const Subgroup& den,
                          const GroupHom& mapv) {
    for (const auto& g : num.gens) {
      Vec diff = d.U.sub(hom_apply(mapv, g), d.U.scale(2, g));
      if (!sub_contains(den, diff)) return false;
    }
    return true;
  };
  rep.squaring_left = squares_into(k, *d.sigma_sigma_tau_in_U, one_minus_st);
  rep.squaring_middle = squares_into(numerator, denominator, one_minus_st);
  // right column: alpha -> alpha^(1+tau) on N_tau modulo W_tau
  GroupHom one_plus_tau = hom_add(identity_hom(d.U), d.tau_bar);
  rep.squaring_right = squares_into(n_tau, w_tau_model, one_plus_tau);
  return rep;
}

}  // namespace gradsk
