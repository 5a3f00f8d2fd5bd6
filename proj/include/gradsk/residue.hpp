#pragma once

#include <map>
#include <optional>
#include <variant>

#include "gradsk/fgab.hpp"

namespace gradsk {

// mu_m inside the degree-0 part of the center, with the involution acting
// as zeta -> zeta^u. All scalar arithmetic in presentations runs through
// exponents mod m; no complex numbers anywhere.
struct TorsionModel {
  Int m = 1;  // T0 contains exactly mu_m
  Int u = 1;  // u^2 = 1 (mod m)
};

// T0 contains exactly mu_m and tau restricts to zeta -> zeta^u. When u = 1
// the involution can still be nontrivial on T0 itself (just not on the
// roots); field_action_nontrivial records that.
struct RootsOfUnityDatum {
  Int m = 1;
  Int u = 1;
  bool field_action_nontrivial = false;
};

// T0 = GF(q0^2), R0 = GF(q0), tau = Frobenius x -> x^q0.
struct FiniteFieldDatum {
  Int q0 = 2;
};

// Finitely generated abelian stand-in for E0* (and T0*) with the Galois
// action, the norm, and the distinguished subgroups each case formula
// consumes. Formulas are exact for the supplied model; results carry its
// digest and make no claim about the true residue ring.
struct AbstractResidueDatum {
  FGAbGroup U;   // E0* model
  FGAbGroup UT;  // T0* model
  std::vector<GroupHom> galois_gens;  // generators of H = Gal(Z(E0)/T0) on U
  Vec galois_orders;                  // H = prod Z/galois_orders[i]
  GroupHom tau_bar;                   // involution on U
  bool tau_nontrivial_on_T0 = true;   // [T0:R0] = 2 when true
  bool E0_is_field = false;

  std::optional<GroupHom> norm_E0_T0;  // U -> UT
  std::optional<Subgroup> R0_part;     // inside UT
  // h |-> Sigma_{h tau}(E0) as a subgroup of U; keys are reduced elements of
  // the H group below
  std::map<Vec, Subgroup> sigma_subgroups;

  // optional pieces for the cyclic-ramification formulas
  std::optional<GroupHom> nrd;         // Nrd_{E0}: U -> U (identity if E0 commutative)
  std::optional<Subgroup> T0_part_in_U;
  std::optional<Subgroup> sigma_tau_in_U;        // Sigma_tau(E0)
  std::optional<Subgroup> sigma_sigma_tau_in_U;  // Sigma_{sigma tau}(E0)

  std::optional<TorsionModel> torsion;  // mu_m in T0, if described
  std::optional<Vec> mu_embedding;      // image of zeta in U coordinates

  FGAbGroup h_group() const { return FGAbGroup::from_invariants(galois_orders); }
  const Subgroup& sigma_for(const Vec& h) const;
};

using ResidueDatum =
    std::variant<RootsOfUnityDatum, FiniteFieldDatum, AbstractResidueDatum>;

// scalar torsion model of the datum (m and the tau multiplier); nullopt for
// abstract data without a torsion description
std::optional<TorsionModel> torsion_model(const ResidueDatum& res);

// [T0 : R0], i.e. 2 when tau acts nontrivially on T0 and 1 otherwise
Int t0_over_r0_degree(const ResidueDatum& res);

// checks the structural invariants of an abstract datum (tau^2 = id,
// commuting Galois generators of the declared orders, norm * galois = norm)
void validate_abstract_datum(const AbstractResidueDatum& d);

// mu_n(T0) as a cyclic group with the involution acting by a multiplier
struct MuGroup {
  Int order;
  Int tau_multiplier;  // action is k -> u*k on Z/order
  FGAbGroup group() const { return FGAbGroup::cyclic(order); }
};

MuGroup mu_n_of(const ResidueDatum& res, const Int& n);

}  // namespace gradsk
