#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradsk/algebra.hpp"
#include "gradsk/valued.hpp"

using namespace gradsk;

namespace {

BridgeResult toex(const std::vector<Int>& rs, const Int& m, const Int& u) {
  ValuedSymbolInput in;
  in.residue = RootsOfUnityDatum{m, u, true};
  in.symbol_exponents = rs;
  for (const auto& r : rs) in.root_choices.push_back(m / r);
  return associated_graded(in);
}

// brute-force tau^2 on all generator words of length <= 2
bool tau_square_is_identity(const AlgebraPresentation& p,
                            const InvolutionDescriptor& tau) {
  std::vector<Monomial> words{mono_one(p)};
  for (std::size_t i = 0; i < p.ngens(); ++i) {
    words.push_back(mono_gen(p, i));
    for (std::size_t j = 0; j < p.ngens(); ++j)
      words.push_back(mono_mul(p, mono_gen(p, i), mono_gen(p, j)));
  }
  for (const auto& w : words) {
    Monomial im = tau_apply(p, tau, tau_apply(p, tau, w));
    if (im.scalar != w.scalar || im.exps != w.exps) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("validate_involution on the symbol examples") {
  // all signs +1, theta of order two: valid unitary, T/R unramified
  BridgeResult b = toex({4, 4}, 16, 7);
  InvolutionReport rep = validate_involution(b.presentation, b.tau);
  CHECK(rep.involution_ok);
  CHECK(rep.commutation_ok);
  CHECK(rep.kind_ok);
  CHECK(rep.tr_case == TRCase::TRUnramified);
  CHECK(rep.t0_r0_degree == 2);
  CHECK(tau_square_is_identity(b.presentation, b.tau));

  // identity center action with a unitary tag is rejected
  AlgebraPresentation p = b.presentation;
  p.residue = RootsOfUnityDatum{16, 1, false};
  CHECK_THROWS_AS(validate_involution(p, b.tau), Error);

  // (m = 16, u = 7) with a commutation scalar of order 4: 7*4 = -4 (mod 16)
  CHECK(mod_norm(Int(7 * 4 + 4), 16) == 0);
  // so a beta of exponent 4 is inverted by tau; order-8 scalar would not be
  AlgebraPresentation q = b.presentation;
  q.commutation(0, 1) = 2;
  q.commutation(1, 0) = 14;
  CHECK_THROWS_AS(validate_involution(q, b.tau), Error);
}

TEST_CASE("involution brute-force equivalence on random sign choices") {
  std::mt19937_64 rng(21);
  BridgeResult b = toex({2, 4}, 8, 3);
  const Int m = 8;
  for (int t = 0; t < 60; ++t) {
    InvolutionDescriptor tau = b.tau;
    for (auto& s : tau.generator_signs) s = Int(static_cast<long>(rng() % 8));
    bool validated = true;
    try {
      validate_involution(b.presentation, tau);
    } catch (const Error&) {
      validated = false;
    }
    // acceptance must coincide with tau^2 = id on short words; the
    // commutation compatibility is part of being an anti-automorphism and
    // is always satisfied here since u = 3 inverts mu_4
    bool brute = tau_square_is_identity(b.presentation, tau);
    CHECK(validated == brute);
    (void)m;
  }
}

TEST_CASE("detect_TR_case") {
  BridgeResult b = toex({2}, 4, 3);
  CHECK(detect_TR_case(b.presentation, b.tau) == TRCase::TRUnramified);

  // index-2 fixed lattice with trivial residue action: T/R totally ramified
  AlgebraPresentation p;
  p.center = GradeLattice::full(1);
  p.generators = {};
  p.commutation = IntMatrix(0, 0);
  p.residue = RootsOfUnityDatum{2, 1, false};
  InvolutionDescriptor tau;
  tau.kind = InvolutionKind::Unitary;
  tau.gamma_R = GradeLattice::scaled({2});
  tau.generator_signs = {};
  CHECK(detect_TR_case(p, tau) == TRCase::TRTotallyRamified);

  // index 4 is rejected
  InvolutionDescriptor bad = tau;
  bad.gamma_R = GradeLattice::scaled({4});
  CHECK_THROWS_AS(detect_TR_case(p, bad), Error);
}

TEST_CASE("twist by a monomial") {
  BridgeResult b = toex({4, 4}, 16, 7);
  const AlgebraPresentation& p = b.presentation;

  // t = 1: unchanged
  InvolutionDescriptor same = twist(p, b.tau, mono_one(p));
  CHECK(same.generator_signs == b.tau.generator_signs);

  // t = x_0 (tau-fixed generator): signs pick up tau(beta) along row 0
  InvolutionDescriptor tw = twist(p, b.tau, mono_gen(p, 0));
  CHECK(tw.gamma_R == b.tau.gamma_R);  // restriction to the center unchanged
  for (std::size_t j = 0; j < p.ngens(); ++j) {
    // x_0 x_j x_0^{-1} = beta_{0j} x_j, twisted sign = tau(beta_{0j})
    Int expect = mod_norm(Int(7) * p.commutation(0, j), 16);
    CHECK(tw.generator_signs[j] == expect);
  }
  // twisting preserves the case split
  CHECK(detect_TR_case(p, tw) == detect_TR_case(p, b.tau));

  // a monomial whose tau-ratio is noncentral is rejected
  Monomial t = mono_mul(p, mono_gen(p, 0), mono_gen(p, 1));
  Monomial ratio = mono_mul(p, tau_apply(p, b.tau, t), mono_inv(p, t));
  if (!mono_is_central(p, ratio)) {
    CHECK_THROWS_AS(twist(p, b.tau, t), Error);
  } else {
    // with all signs +1 the product of a hyperbolic pair is often fine;
    // force a noncentral ratio instead via a single skew generator
    InvolutionDescriptor skew = b.tau;
    skew.generator_signs[0] = 8;  // -1
    validate_involution(p, skew);
    Monomial bad = mono_gen(p, 1);
    Monomial r2 = mono_mul(p, tau_apply(p, skew, bad), mono_inv(p, bad));
    if (!mono_is_central(p, r2)) CHECK_THROWS_AS(twist(p, skew, bad), Error);
  }
}

TEST_CASE("symmetric transversal") {
  BridgeResult b = toex({4, 4}, 16, 7);
  const AlgebraPresentation& p = b.presentation;

  // tau-fixed generators map to themselves
  auto tr = symmetric_transversal(p, b.tau, {mono_gen(p, 0).exps});
  CHECK(tr.at(mono_gen(p, 0).exps).scalar == 0);

  // full coset transversal: every output is tau-fixed
  auto reps = gamma_quotient(p).enumerate();
  auto full = symmetric_transversal(p, b.tau, reps);
  CHECK(full.size() == reps.size());
  for (const auto& [rep, mono] : full) {
    Monomial img = tau_apply(p, b.tau, mono);
    CHECK(img.scalar == mono.scalar);
    CHECK(img.exps == mono.exps);
  }

  // skew monomial correction: m = 4, u = 3 sends zeta -> zeta^-1; a word
  // with tau(w) = -w needs the scalar fix zeta with tau(zeta) = -zeta
  BridgeResult q = toex({2}, 4, 3);
  InvolutionDescriptor skew = q.tau;
  skew.generator_signs = {2, 0};  // tau(i) = -i
  validate_involution(q.presentation, skew);
  auto fixed =
      symmetric_transversal(q.presentation, skew, {mono_gen(q.presentation, 0).exps});
  const Monomial& mi = fixed.at(mono_gen(q.presentation, 0).exps);
  Monomial img = tau_apply(q.presentation, skew, mi);
  CHECK(img.scalar == mi.scalar);
  CHECK(mi.scalar != 0);
}

TEST_CASE("generalized dihedral detection") {
  auto datum = [](const Vec& orders, bool inversion) {
    FGAbGroup h = FGAbGroup::from_invariants(orders);
    GroupHom act = scalar_hom(h, inversion ? Int(-1) : Int(1));
    return GaloisDatum{h, act};
  };
  // elementary abelian 2-groups: both actions coincide and qualify
  CHECK(gendihedral_check(datum({2, 2}, true)));
  CHECK(gendihedral_check(datum({2, 2}, false)));
  // Z/4 with inversion: dihedral of order 8
  CHECK(gendihedral_check(datum({4}, true)));
  // Z/4 with identity: outside elements of order 4 exist
  CHECK(!gendihedral_check(datum({4}, false)));
}

TEST_CASE("generalized dihedral brute force on small orders") {
  // compare against order enumeration in the explicit semidirect product
  auto brute = [](const FGAbGroup& h, const GroupHom& act) {
    for (const auto& x : h.enumerate()) {
      // (x, tau)^2 = (x + act(x), id)
      if (!h.is_zero(h.add(x, hom_apply(act, x)))) return false;
    }
    return true;
  };
  std::vector<Vec> shapes{{2}, {4}, {8}, {16}, {2, 2}, {2, 4}, {4, 4},
                          {2, 8}, {2, 2, 2}, {3}, {9}, {3, 3}, {6}, {12},
                          {2, 6}, {5}, {25}, {7}, {2, 16}, {2, 2, 4}};
  for (const auto& s : shapes) {
    FGAbGroup h = FGAbGroup::from_invariants(s);
    if (!h.finite() || h.order() > 64) continue;
    for (bool inv : {false, true}) {
      GroupHom act = scalar_hom(h, inv ? Int(-1) : Int(1));
      CHECK(gendihedral_check(GaloisDatum{h, act}) == brute(h, act));
    }
  }
}
