#pragma once

#include <map>

#include "gradsk/grading.hpp"
#include "gradsk/residue.hpp"

namespace gradsk {

struct AlgebraPresentation;
struct Monomial;

enum class InvolutionKind { FirstKind, Unitary };

enum class TRCase { TRUnramified, TRTotallyRamified };

// Diagonalized graded involution: tau(x_i) = eps_i x_i with eps_i a root of
// unity (an exponent mod the residue torsion m), tau acts on the residue
// datum through its declared multiplier, and fixes exactly the sublattice
// Gamma_R of the center lattice.
struct InvolutionDescriptor {
  InvolutionKind kind = InvolutionKind::Unitary;
  GradeLattice gamma_R;
  Vec generator_signs;  // exponents mod m, one per presentation generator
};

struct InvolutionReport {
  TRCase tr_case;
  Int t0_r0_degree;   // [T0 : R0]
  Int gamma_index;    // |Gamma_T : Gamma_R|
  bool involution_ok = false;
  bool commutation_ok = false;
  bool kind_ok = false;
};

// Abelian H together with the conjugation action of the outside coset;
// the group it describes is H extended by an involution acting this way.
struct GaloisDatum {
  FGAbGroup h;
  GroupHom tau_action;  // H -> H
};

InvolutionReport validate_involution(const AlgebraPresentation& p,
                                     const InvolutionDescriptor& tau);

TRCase detect_TR_case(const AlgebraPresentation& p,
                      const InvolutionDescriptor& tau);

// descriptor of tau composed with conjugation by the monomial t;
// requires tau(t)/t central
InvolutionDescriptor twist(const AlgebraPresentation& p,
                           const InvolutionDescriptor& tau, const Monomial& t);

// tau applied to a monomial (exact scalar bookkeeping)
Monomial tau_apply(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau, const Monomial& mono);

// for each exponent-vector representative, a tau-fixed monomial of that
// degree; requires the TRUnramified case. Corrections are scalar
// root-of-unity factors; characteristic-2 residue data have odd torsion,
// so no sign corrections arise there.
std::map<Vec, Monomial> symmetric_transversal(
    const AlgebraPresentation& p, const InvolutionDescriptor& tau,
    const std::vector<Vec>& coset_reps);

// the outside coset consists of involutions exactly when the action is
// inversion on H
bool gendihedral_check(const GaloisDatum& g);

}  // namespace gradsk
