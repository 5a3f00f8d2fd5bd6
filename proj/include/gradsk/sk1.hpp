#pragma once

#include "gradsk/algebra.hpp"

namespace gradsk {

enum class TheoremTag {
  PropTotal,
  PropCompletely,
  CorUnramified,
  CorSeses,
  PropCyclic,
  ThMsem,
  ThSktotal,
  NonUnitaryTotallyRamified,
};

const char* theorem_tag_name(TheoremTag t);

struct SKDigest {
  Int n = 1;
  Int e = 1;
  Int partial = 1;
  CaseTag case_tag = CaseTag::Unramified;
  std::optional<TRCase> tr_case;
  // order of the nonunitary group, recorded on totally ramified instances
  // for the injection check
  std::optional<Int> sk_order;
  std::vector<std::string> notes;
};

struct SKResult {
  FGAbGroup group;
  TheoremTag tag;
  SKDigest digest;
  std::vector<std::string> via;  // certificate chain of applied rewrites
};

struct SKOptions {
  bool use_lembe = true;       // collapse the product over H to epsilon-tuples
  bool check_lembe = false;    // verify the product hypothesis first
  bool representative_doubling = false;  // recheck X on a doubled rep set
};

// nonunitary group of a totally ramified algebra: mu_n(T0)/mu_e
SKResult sk1_totally_ramified(const AlgebraPresentation& p);

// unitary group of a totally ramified algebra with T/R unramified:
// {w in mu_n(T0) : tau(w) = w^-1} / mu_e
SKResult sk1u_totally_ramified(const AlgebraPresentation& p,
                               const InvolutionDescriptor& tau);

// T totally ramified over R forces the trivial group
SKResult sk1u_T_totally_ramified(const AlgebraPresentation& p,
                                 const InvolutionDescriptor& tau);

// unramified algebras reduce to the degree-0 data
SKResult sk1u_unramified(const AlgebraPresentation& p,
                         const InvolutionDescriptor& tau);

// semiramified: {a : N(a) in R0} / prod of the fixed-point subgroups
SKResult sk1u_semiramified(const AlgebraPresentation& p,
                           const InvolutionDescriptor& tau,
                           const SKOptions& opts = {});

// cyclic grade quotient: {a : N(Nrd(a)) in R0} / (Sigma_tau Sigma_sigma_tau)
SKResult sk1u_cyclic(const AlgebraPresentation& p,
                     const InvolutionDescriptor& tau);

// the general degree-0 formula: numerator by the partial-twisted norm,
// denominator P * X from a symmetric transversal
SKResult sk1u_msem(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau,
                   const std::map<Vec, Monomial>& transversal,
                   const SKOptions& opts = {});

// dispatcher used by the CLI: picks the most specific applicable formula
SKResult sk1u_auto(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau, const SKOptions& opts = {});

// projective conorm groups of the cyclic case
struct ConormGroups {
  FGAbGroup p;       // N / W
  FGAbGroup pu_tau;  // N_tau / W_tau
};

ConormGroups conorm_groups(const AbstractResidueDatum& d, const GroupHom& sigma);

struct CyclicSequenceReport {
  bool image_in_kernel = false;
  bool f_surjective = false;
  bool order_law = false;       // |SK| = |image| * |PU_tau|
  bool squaring_left = false;   // column composites act as squaring
  bool squaring_middle = false;
  bool squaring_right = false;
  Int sk_order = 0;
  Int image_order = 0;
  Int pu_order = 0;
  bool ok() const {
    return image_in_kernel && f_surjective && order_law && squaring_left &&
           squaring_middle && squaring_right;
  }
};

CyclicSequenceReport cyclic_exact_sequence_check(const AbstractResidueDatum& d,
                                                 const GroupHom& sigma);

// nonunitary cyclic formula on the abelian model (commutators collapse)
SKResult sk1_cyclic_model(const AbstractResidueDatum& d, const GroupHom& sigma);

}  // namespace gradsk
