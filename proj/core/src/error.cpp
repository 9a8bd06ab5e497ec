#include "modrep/error.hpp"

namespace modrep {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::NonPrimeP: return "NonPrimeP";
    case Errc::ReducibleModulus: return "ReducibleModulus";
    case Errc::OrderTooLarge: return "OrderTooLarge";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::NotSquare: return "NotSquare";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::BadIndex: return "BadIndex";
    case Errc::MixedParents: return "MixedParents";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotNormal: return "NotNormal";
    case Errc::GroupTooLarge: return "GroupTooLarge";
    case Errc::InvalidGroupMap: return "InvalidGroupMap";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::InvalidModule: return "InvalidModule";
    case Errc::IsoUndecided: return "IsoUndecided";
    case Errc::NotIndecomposable: return "NotIndecomposable";
    case Errc::TooLarge: return "TooLarge";
    case Errc::NotHEquivariant: return "NotHEquivariant";
    case Errc::CriteriaDisagree: return "CriteriaDisagree";
    case Errc::IndexDivisibleByP: return "IndexDivisibleByP";
    case Errc::NoSourceFound: return "NoSourceFound";
    case Errc::LevelMismatch: return "LevelMismatch";
    case Errc::MonotonicityViolated: return "MonotonicityViolated";
    case Errc::IncompatibleSubgroupTower: return "IncompatibleSubgroupTower";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::NotIndecomposableAtLevel: return "NotIndecomposableAtLevel";
    case Errc::InternalAssertion: return "InternalAssertion";
  }
  return "Unknown";
}

}  // namespace modrep
