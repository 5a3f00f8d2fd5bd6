#pragma once

#include "gradsk/sk1.hpp"

namespace gradsk {

// Symbol algebra over an iterated Laurent series field, described by its
// residue roots of unity, the residue characteristic, and the symbol data.
struct ValuedSymbolInput {
  RootsOfUnityDatum residue;   // mu_m in the coefficient field with theta
  Int residue_char = 0;        // 0 or a prime
  std::vector<Int> symbol_exponents;  // r_i >= 2
  Vec root_choices;                   // exponents of order exactly r_i
};

enum class Tameness { StronglyTame, Tame, NotTame };

const char* tameness_name(Tameness t);

struct BridgeCertificate {
  Tameness tameness = Tameness::StronglyTame;
  bool defectless = true;
  bool full_tameness_decidable = true;  // false: undecidable from this datum
  std::vector<std::string> applied;     // rewrite chain
};

struct BridgeResult {
  AlgebraPresentation presentation;
  InvolutionDescriptor tau;
  BridgeCertificate certificate;
};

// graded presentation of the symbol algebra, with the induced involution
BridgeResult associated_graded(const ValuedSymbolInput& in);

BridgeCertificate tameness_check(const ValuedSymbolInput& in);

// unitary group through the bridge and the totally ramified formula
SKResult sk1u_valued(const ValuedSymbolInput& in);
// nonunitary companion
SKResult sk1_valued(const ValuedSymbolInput& in);

Int valued_n(const ValuedSymbolInput& in);  // prod r_i
Int valued_e(const ValuedSymbolInput& in);  // lcm r_i

}  // namespace gradsk
