#include "gradsk/error.hpp"

namespace gradsk {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InfiniteGroup: return "InfiniteGroup";
    case Errc::ElementNotInGroup: return "ElementNotInGroup";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::SolveFailed: return "SolveFailed";
    case Errc::NotASublattice: return "NotASublattice";
    case Errc::InfiniteIndex: return "InfiniteIndex";
    case Errc::RankMismatch: return "RankMismatch";
    case Errc::InconsistentCommutation: return "InconsistentCommutation";
    case Errc::NonCentralPower: return "NonCentralPower";
    case Errc::InfiniteRamification: return "InfiniteRamification";
    case Errc::InsufficientResidueData: return "InsufficientResidueData";
    case Errc::ResidueTorsionUnknown: return "ResidueTorsionUnknown";
    case Errc::NotTotallyRamified: return "NotTotallyRamified";
    case Errc::DegeneratePairing: return "DegeneratePairing";
    case Errc::CaseMismatch: return "CaseMismatch";
    case Errc::NotAnInvolution: return "NotAnInvolution";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::CommutationIncompatible: return "CommutationIncompatible";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::NotCentralRatio: return "NotCentralRatio";
    case Errc::NoSymmetricElement: return "NoSymmetricElement";
    case Errc::EEqualsT: return "EEqualsT";
    case Errc::MuEViolation: return "MuEViolation";
    case Errc::NotCyclicRamification: return "NotCyclicRamification";
    case Errc::MissingSubgroupData: return "MissingSubgroupData";
    case Errc::ModelViolation: return "ModelViolation";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::NotStronglyTame: return "NotStronglyTame";
    case Errc::BadRootOrder: return "BadRootOrder";
    case Errc::SchemaError: return "SchemaError";
  }
  return "UnknownError";
}

}  // namespace gradsk
