#pragma once

#include <optional>
#include <string>

#include "gradsk/involution.hpp"

namespace gradsk {

// Symbol-style generator: x^power is central of degree power * degree.
struct GeneratorSpec {
  Degree degree;
  Int power = 1;
};

// Galois description of E0 over T0 when E0 is larger than T0:
// ind(E0), [Z(E0):T0], and the image of each generator's degree under the
// canonical map to Gal(Z(E0)/T0) (exponent vectors over the abstract
// datum's Galois generators).
struct ExtensionData {
  Int ind_E0 = 1;
  Int z_degree = 1;
  std::vector<Vec> theta_images;
};

// Graded division algebra presented by its center lattice, symbol
// generators with central powers, a commutation matrix of root-of-unity
// exponents, and a residue datum.
struct AlgebraPresentation {
  GradeLattice center;  // Gamma_T
  std::vector<GeneratorSpec> generators;
  IntMatrix commutation;  // k x k exponents mod the residue torsion m
  ResidueDatum residue;
  std::optional<ExtensionData> extension;

  std::size_t ngens() const { return generators.size(); }
  std::size_t ambient_rank() const { return center.ambient_rank(); }
};

// scalar * generator-power word, kept in the canonical order
// x_1^{e_1} ... x_k^{e_k}; the scalar is an exponent of zeta_m
struct Monomial {
  Int scalar = 0;
  Vec exps;
};

Monomial mono_one(const AlgebraPresentation& p);
Monomial mono_gen(const AlgebraPresentation& p, std::size_t i);
Monomial mono_scalar(const AlgebraPresentation& p, const Int& zeta_exp);
Monomial mono_mul(const AlgebraPresentation& p, const Monomial& a,
                  const Monomial& b);
Monomial mono_inv(const AlgebraPresentation& p, const Monomial& a);
Degree mono_degree(const AlgebraPresentation& p, const Monomial& a);
// commutes with every generator and lies in the center lattice
bool mono_is_central(const AlgebraPresentation& p, const Monomial& a);

enum class CaseTag {
  Unramified,
  TotallyRamified,
  Semiramified,
  InertiallySplit,
  General,
};

const char* case_tag_name(CaseTag t);

struct ClassifyReport {
  CaseTag tag;
  Int n;        // ind(E)
  Int e;        // exponent of Gamma_E / Gamma_T
  Int index;    // |Gamma_E : Gamma_T|
  Int partial;  // ind(E) / (ind(E0) [Z(E0):T0])
  Int e0_t0;    // [E0 : T0]
  bool inertially_split;
};

struct ValidationReport {
  Int torsion_m = 1;
  Int index = 0;
  bool ok = false;
};

// Gamma_E = Gamma_T + <generator degrees>
GradeLattice gamma_E(const AlgebraPresentation& p);
// Gamma_E / Gamma_T presented on the generator degrees
FGAbGroup gamma_quotient(const AlgebraPresentation& p);

ValidationReport validate_presentation(const AlgebraPresentation& p);
ClassifyReport classify(const AlgebraPresentation& p);

// Alternating pairing on Gamma_E/Gamma_T induced by the commutation matrix,
// with values recorded as exponents of a primitive e-th root of unity.
struct SymplecticPairing {
  FGAbGroup group;     // Gamma_E/Gamma_T on the generator degrees
  Int e;               // exponent of the group
  Int m;               // scalar torsion order
  IntMatrix values;    // k x k, exponents mod e on the generators
  Int eval(const Vec& x, const Vec& y) const;  // mod e
};

SymplecticPairing symplectic_pairing(const AlgebraPresentation& p);

struct HyperbolicPair {
  Vec x, y;   // elements of the pairing group
  Int order;  // common order; the pairing value on (x, y) is primitive
};

std::vector<HyperbolicPair> symplectic_basis(const SymplecticPairing& sp);

// One quaternion factor of a totally ramified exponent-2 algebra over R.
struct ArmatureFactor {
  AlgebraPresentation q;  // two-generator quaternion presentation over R
  Vec i_exps, j_exps;     // exponent vectors of the lifted generators in E
};

std::vector<ArmatureFactor> armature_decomposition(
    const AlgebraPresentation& p, const InvolutionDescriptor& tau);

}  // namespace gradsk
