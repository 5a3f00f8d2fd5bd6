#include "gradsk/involution.hpp"

#include "gradsk/algebra.hpp"

namespace gradsk {

namespace {

// data without a torsion description carry no scalar content at all;
// m = 1 makes every scalar trivial
TorsionModel require_torsion(const AlgebraPresentation& p) {
  return torsion_model(p.residue).value_or(TorsionModel{1, 1});
}

}  // namespace

Monomial tau_apply(const AlgebraPresentation& p,
                   const InvolutionDescriptor& tau, const Monomial& mono) {
  TorsionModel tm = require_torsion(p);
  require(tau.generator_signs.size() == p.ngens(), Errc::InvalidDescriptor,
          "one sign per generator required");
  // tau(zeta^s x^A) = zeta^{u s} (prod eps_i^{A_i}) x_k^{A_k} ... x_1^{A_1}
  Int scalar = tm.u * mono.scalar;
  for (std::size_t i = 0; i < p.ngens(); ++i)
    scalar += tau.generator_signs[i] * mono.exps[i];
  Monomial out = mono_scalar(p, scalar);
  for (std::size_t i = p.ngens(); i-- > 0;) {
    if (mono.exps[i] == 0) continue;
    Monomial gi = mono_one(p);
    gi.exps[i] = mono.exps[i];
    out = mono_mul(p, out, gi);
  }
  return out;
}

InvolutionReport validate_involution(const AlgebraPresentation& p,
                                     const InvolutionDescriptor& tau) {
  validate_presentation(p);
  TorsionModel tm = require_torsion(p);
  InvolutionReport rep{};
  require(tau.generator_signs.size() == p.ngens(), Errc::InvalidDescriptor,
          "one sign per generator required");
  require(tau.gamma_R.ambient_rank() == p.ambient_rank(), Errc::RankMismatch,
          "fixed lattice lives in the wrong ambient");
  require(p.center.contains_lattice(tau.gamma_R), Errc::InvalidDescriptor,
          "fixed lattice is not contained in the center lattice");

  rep.gamma_index = lattice_index(p.center, tau.gamma_R);
  require(rep.gamma_index == 1 || rep.gamma_index == 2, Errc::InvalidDescriptor,
          "|Gamma_T : Gamma_R| must be 1 or 2");
  rep.t0_r0_degree = t0_over_r0_degree(p.residue);

  // tau^2 = id on generators: eps_i * tau(eps_i) = 1
  for (const auto& e : tau.generator_signs)
    require(mod_norm(e * (1 + tm.u), tm.m) == 0, Errc::NotAnInvolution,
            "tau squared is not the identity on a generator");
  rep.involution_ok = true;

  // anti-automorphism vs the commutation relations: tau(beta) = beta^{-1}
  for (std::size_t i = 0; i < p.ngens(); ++i)
    for (std::size_t j = 0; j < p.ngens(); ++j)
      require(mod_norm((1 + tm.u) * p.commutation(i, j), tm.m) == 0,
              Errc::CommutationIncompatible,
              "tau does not invert a commutation scalar");
  rep.commutation_ok = true;

  Int center_degree = rep.t0_r0_degree * rep.gamma_index;
  if (tau.kind == InvolutionKind::Unitary) {
    require(center_degree == 2, Errc::KindMismatch,
            "unitary involution needs [T : R] = 2");
    rep.tr_case = rep.gamma_index == 1 ? TRCase::TRUnramified
                                       : TRCase::TRTotallyRamified;
  } else {
    require(center_degree == 1, Errc::KindMismatch,
            "first-kind involution must fix the center");
    rep.tr_case = TRCase::TRUnramified;
  }

  if (rep.gamma_index == 2) {
    // T0 = R0: the residue action is trivial and signs are +-1
    require(rep.t0_r0_degree == 1, Errc::KindMismatch,
            "residue action and lattice action both nontrivial");
    for (std::size_t i = 0; i < p.ngens(); ++i) {
      const Int& e = tau.generator_signs[i];
      require(mod_norm(2 * e, tm.m) == 0, Errc::NotAnInvolution,
              "generator sign must be +-1 when T0 = R0");
      // sign of tau on the central power matches Gamma_R membership
      const auto& g = p.generators[i];
      bool fixed = mod_norm(g.power * e, tm.m) == 0;
      bool in_r = tau.gamma_R.contains(vec_scale(g.power, g.degree));
      require(fixed == in_r, Errc::NotAnInvolution,
              "central power symmetry disagrees with the fixed lattice");
    }
  }
  rep.kind_ok = true;
  return rep;
}

TRCase detect_TR_case(const AlgebraPresentation& p,
                      const InvolutionDescriptor& tau) {
  require(tau.kind == InvolutionKind::Unitary, Errc::KindMismatch,
          "case split only applies to unitary involutions");
  return validate_involution(p, tau).tr_case;
}

InvolutionDescriptor twist(const AlgebraPresentation& p,
                           const InvolutionDescriptor& tau, const Monomial& t) {
  TorsionModel tm = require_torsion(p);
  Monomial ratio = mono_mul(p, tau_apply(p, tau, t), mono_inv(p, t));
  require(mono_is_central(p, ratio), Errc::NotCentralRatio,
          "tau(t)/t is not central");
  InvolutionDescriptor out = tau;  // same restriction to the center
  for (std::size_t j = 0; j < p.ngens(); ++j) {
    // t x_j t^{-1} = zeta^{c_j} x_j ; new eps_j = eps_j * tau(zeta^{c_j})
    Monomial conj =
        mono_mul(p, t, mono_mul(p, mono_gen(p, j), mono_inv(p, t)));
    require(conj.exps == mono_gen(p, j).exps, Errc::NotCentralRatio,
            "conjugation does not preserve the generator line");
    out.generator_signs[j] =
        mod_norm(tau.generator_signs[j] + tm.u * conj.scalar, tm.m);
  }
  validate_involution(p, out);
  return out;
}

std::map<Vec, Monomial> symmetric_transversal(
    const AlgebraPresentation& p, const InvolutionDescriptor& tau,
    const std::vector<Vec>& coset_reps) {
  TorsionModel tm = require_torsion(p);
  InvolutionReport rep = validate_involution(p, tau);
  require(rep.tr_case == TRCase::TRUnramified, Errc::CaseMismatch,
          "symmetric transversal needs T unramified over R");
  std::map<Vec, Monomial> out;
  for (const auto& a : coset_reps) {
    require(a.size() == p.ngens(), Errc::DimensionMismatch,
            "representative must be a generator exponent vector");
    Monomial base{0, a};
    Monomial image = tau_apply(p, tau, base);
    require(image.exps == a, Errc::InternalInvariant, "tau broke the degree");
    // want zeta^y x^a with u y + s = y (mod m)
    Int s = image.scalar;
    Int g = gcd_int(tm.u - 1, tm.m);
    Int rhs = mod_norm(-s, tm.m);
    require(g == 0 ? rhs == 0 : rhs % gcd_int(g, tm.m) == 0,
            Errc::NoSymmetricElement,
            "no torsion scalar makes this monomial symmetric");
    // solve y (u-1) = -s (mod m)
    Int y = 0;
    if (tm.m > 1 && rhs != 0) {
      Int gg = gcd_int(mod_norm(tm.u - 1, tm.m), tm.m);
      // u-1 = gg * a', m = gg * m', solve a' y = rhs/gg (mod m')
      Int ap = mod_norm(tm.u - 1, tm.m) / gg, mp = tm.m / gg, bp = rhs / gg;
      // a' invertible mod m'
      Int inv = 0;
      for (Int cand = 0; cand < mp; ++cand)
        if (mod_norm(ap * cand, mp) == mod_norm(Int(1), mp)) {
          inv = cand;
          break;
        }
      y = mod_norm(inv * bp, mp);
    }
    Monomial fixed{mod_norm(y, tm.m), a};
    Monomial check = tau_apply(p, tau, fixed);
    require(check.scalar == fixed.scalar && check.exps == fixed.exps,
            Errc::NoSymmetricElement, "symmetric correction failed");
    out.emplace(a, fixed);
  }
  return out;
}

bool gendihedral_check(const GaloisDatum& g) {
  // outside elements square to (h + action(h)); all trivial iff inversion
  for (std::size_t i = 0; i < g.h.ngens(); ++i) {
    Vec img = hom_apply(g.tau_action, g.h.gen(i));
    if (!g.h.is_zero(g.h.add(img, g.h.gen(i)))) return false;
  }
  return true;
}

}  // namespace gradsk
