#include "gradsk/valued.hpp"

namespace gradsk {

const char* tameness_name(Tameness t) {
  switch (t) {
    case Tameness::StronglyTame: return "StronglyTame";
    case Tameness::Tame: return "Tame";
    case Tameness::NotTame: return "NotTame";
  }
  return "?";
}

Int valued_n(const ValuedSymbolInput& in) {
  Int n = 1;
  for (const auto& r : in.symbol_exponents) n *= r;
  return n;
}

Int valued_e(const ValuedSymbolInput& in) {
  Int e = 1;
  for (const auto& r : in.symbol_exponents) e = lcm_int(e, r);
  return e;
}

namespace {

void validate_input(const ValuedSymbolInput& in) {
  require(!in.symbol_exponents.empty(), Errc::SchemaError,
          "at least one symbol factor required");
  require(in.symbol_exponents.size() == in.root_choices.size(),
          Errc::SchemaError, "one root of unity per symbol factor");
  require(in.residue.m >= 1, Errc::SchemaError, "m must be positive");
  require(mod_norm(in.residue.u * in.residue.u, in.residue.m) ==
              mod_norm(Int(1), in.residue.m),
          Errc::SchemaError, "u^2 != 1 (mod m)");
  if (in.residue_char != 0) {
    require(in.residue_char >= 2, Errc::SchemaError,
            "residue characteristic must be 0 or a prime");
    for (Int d = 2; d * d <= in.residue_char; ++d)
      require(in.residue_char % d != 0, Errc::SchemaError,
              "residue characteristic must be 0 or a prime");
  }
  for (std::size_t i = 0; i < in.symbol_exponents.size(); ++i) {
    const Int& r = in.symbol_exponents[i];
    require(r >= 2, Errc::BadRootOrder, "each symbol exponent must be >= 2");
    require(in.residue.m % r == 0, Errc::BadRootOrder,
            "the residue has no roots of unity of this order");
    Int w = mod_norm(in.root_choices[i], in.residue.m);
    require(w != 0 || in.residue.m == 1, Errc::BadRootOrder,
            "root choice is trivial");
    Int order = in.residue.m / gcd_int(w, in.residue.m);
    require(order == r, Errc::BadRootOrder,
            "root choice does not have exact order r");
  }
}

}  // namespace

BridgeCertificate tameness_check(const ValuedSymbolInput& in) {
  validate_input(in);
  BridgeCertificate cert;
  Int n = valued_n(in);
  if (in.residue_char == 0 || n % in.residue_char != 0) {
    cert.tameness = Tameness::StronglyTame;
    cert.full_tameness_decidable = true;
  } else {
    // strong tameness fails; full tameness needs residue separability data
    // this input does not carry
    cert.tameness = Tameness::NotTame;
    cert.full_tameness_decidable = false;
  }
  // defect bookkeeping: [D:K] = n^2 matches [D0:K0] |Gamma_D : Gamma_K|
  Int index = 1;
  for (const auto& r : in.symbol_exponents) index *= r * r;
  cert.defectless = n * n == index;
  return cert;
}

BridgeResult associated_graded(const ValuedSymbolInput& in) {
  validate_input(in);
  Int n = valued_n(in);
  require(in.residue_char == 0 || n % in.residue_char != 0,
          Errc::NotStronglyTame,
          "residue characteristic divides the index");

  std::size_t mfac = in.symbol_exponents.size();
  std::size_t rank = 2 * mfac;
  // center lattice r_i Z x r_i Z per factor keeps all degrees integral
  Vec diag(rank);
  for (std::size_t i = 0; i < mfac; ++i)
    diag[2 * i] = diag[2 * i + 1] = in.symbol_exponents[i];

  AlgebraPresentation p;
  p.center = GradeLattice::scaled(diag);
  p.commutation = IntMatrix(rank, rank);
  for (std::size_t i = 0; i < mfac; ++i) {
    Degree di(rank), dj(rank);
    di[2 * i] = 1;
    dj[2 * i + 1] = 1;
    p.generators.push_back(GeneratorSpec{di, in.symbol_exponents[i]});
    p.generators.push_back(GeneratorSpec{dj, in.symbol_exponents[i]});
    Int w = mod_norm(in.root_choices[i], in.residue.m);
    p.commutation(2 * i, 2 * i + 1) = w;
    p.commutation(2 * i + 1, 2 * i) = mod_norm(-w, in.residue.m);
  }
  RootsOfUnityDatum res = in.residue;
  res.field_action_nontrivial = true;  // theta has order 2 on the field
  p.residue = res;

  InvolutionDescriptor tau;
  tau.kind = InvolutionKind::Unitary;
  tau.gamma_R = p.center;  // theta fixes the indeterminates
  tau.generator_signs = Vec(rank, Int(0));

  validate_presentation(p);
  validate_involution(p, tau);
  symplectic_pairing(p);  // nondegenerate for exact-order root choices

  BridgeResult out{std::move(p), std::move(tau), tameness_check(in)};
  out.certificate.applied.push_back("InvolThm2");
  return out;
}

SKResult sk1u_valued(const ValuedSymbolInput& in) {
  BridgeResult b = associated_graded(in);
  SKResult r = sk1u_totally_ramified(b.presentation, b.tau);
  r.via.insert(r.via.begin(), b.certificate.applied.begin(),
               b.certificate.applied.end());
  return r;
}

SKResult sk1_valued(const ValuedSymbolInput& in) {
  BridgeResult b = associated_graded(in);
  SKResult r = sk1_totally_ramified(b.presentation);
  r.via.insert(r.via.begin(), b.certificate.applied.begin(),
               b.certificate.applied.end());
  return r;
}

}  // namespace gradsk
